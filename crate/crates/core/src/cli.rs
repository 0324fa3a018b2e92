//! Batch command-line front end.
//!
//! Every subcommand writes a single JSON document (or a CSV table) to the
//! output stream. Exit codes: 0 success, 1 verification failure, 2 usage or
//! input error.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::chromatic::{chromatic_symfunc, chromatic_symfunc_q, chromatic_symfunc_q_uio, fundamental_coefficients, trace_of_graph, traces_from_x};
use crate::error::Error;
use crate::graph::Graph;
use crate::group_algebra::{kl_basis_element_q1, GroupAlgebraElement};
use crate::partition::{partitions_of, Partition};
use crate::perm::Permutation;
use crate::poset::Poset;
use crate::report::Expectation;
use crate::scalar::Scalar;
use crate::symfunc::{Basis, SymFunc};
use crate::tableaux::{tableaux, Predicate};
use crate::tnn::{immanant, parse_csv, pi_tableaux, EnumerationLimits, Matrix, PiPredicate, PlanarNetwork};
use crate::trace::{evaluate, trace_basis, Trace, TraceBasis};
use crate::verify::{run_suite, Suite, SuiteOptions};

/// Largest poset or graph accepted without `--force`.
pub const MAX_GRAPH_ORDER: usize = 8;
/// Largest matrix order for the `n!`-term immanant sum without `--force`.
pub const MAX_IMMANANT_ORDER: usize = 5;

#[derive(Parser, Debug)]
#[command(name = "chromsym", version, about = "Exact chromatic symmetric functions, traces and immanants")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
}

#[derive(Args, Debug, Clone)]
pub struct Input {
    /// Input file, or `-` for standard input.
    pub input: Option<PathBuf>,
    /// Inline input text, used instead of a file.
    #[arg(long, value_name = "TEXT", conflicts_with = "input")]
    pub inline: Option<String>,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Lift the size guards.
    #[arg(long)]
    pub force: bool,
}

/// A trace basis, optionally restricted to one partition: `phi`, `phi:3,2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceSpec {
    pub basis: TraceBasis,
    pub lambda: Option<Partition>,
}

impl FromStr for TraceSpec {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        let (b, l) = match s.split_once([':', '^']) {
            Some((b, l)) => (b, Some(l.parse()?)),
            None => (s, None),
        };
        Ok(TraceSpec { basis: b.parse()?, lambda: l })
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Chromatic symmetric function of a poset's incomparability graph or of a graph.
    Expand {
        #[command(flatten)]
        input: Input,
        /// Use the q-analogue (canonically labeled unit interval orders, or graphs with symmetric X_{G,q}).
        #[arg(long)]
        q: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Immanants of a matrix or of the path matrix of a planar network.
    Immanant {
        #[command(flatten)]
        input: Input,
        /// Trace, e.g. `phi:3,2`; a bare basis gives every partition.
        #[arg(long, value_parser = parse_trace_spec)]
        trace: TraceSpec,
        /// Treat the input as a planar network and add the skeleton decomposition.
        #[arg(long)]
        network: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Evaluate a trace at a graph, a poset, a group algebra element or C'_w(1).
    TraceEval {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_parser = parse_trace_spec)]
        trace: TraceSpec,
        /// Evaluate at the Kazhdan-Lusztig element C'_w(1) of a smooth permutation.
        #[arg(long, value_name = "W", conflicts_with_all = ["input", "inline"])]
        kl: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Count P-tableaux of a poset, or pi-tableaux of a planar network.
    TableauxCount {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        shape: String,
        #[arg(long, default_value = "any")]
        predicate: String,
        /// Also list the tableaux.
        #[arg(long)]
        list: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Run a verification suite.
    Verify {
        #[arg(value_parser = parse_suite)]
        suite: Suite,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Include the order-5 staircase divergence in the Stembridge suite.
        #[arg(long)]
        paper_counterexample: bool,
        /// Only list failing checks.
        #[arg(long)]
        failures_only: bool,
        #[command(flatten)]
        common: Common,
    },
}

fn parse_trace_spec(s: &str) -> Result<TraceSpec, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Failure modes of a command, mapped onto exit codes.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Library(#[from] Error),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    fn as_json(&self) -> Value {
        match self {
            CliError::Library(Error::NotSymmetric { first, first_value, second, second_value }) => json!({
                "error": "not-symmetric",
                "message": self.to_string(),
                "witness": {
                    "first": { "composition": first, "coefficient": first_value },
                    "second": { "composition": second, "coefficient": second_value },
                },
            }),
            CliError::Library(_) => json!({ "error": "invalid-input", "message": self.to_string() }),
            CliError::Usage(_) => json!({ "error": "usage", "message": self.to_string() }),
            CliError::Io(_) => json!({ "error": "io", "message": self.to_string() }),
        }
    }
}

/// A command result: a JSON document plus its tabular rendering.
pub struct Output {
    pub json: Value,
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
    pub success: bool,
}

impl Output {
    fn write(&self, format: Format, out: &mut dyn Write) -> Result<(), CliError> {
        match format {
            Format::Json => {
                serde_json::to_writer_pretty(&mut *out, &self.json).map_err(|e| CliError::Usage(e.to_string()))?;
                writeln!(out)?;
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(out);
                w.write_record(&self.header).map_err(csv_error)?;
                for r in &self.rows {
                    w.write_record(r).map_err(csv_error)?;
                }
                w.flush()?;
            }
        }
        Ok(())
    }
}

fn csv_error(e: csv::Error) -> CliError {
    CliError::Usage(e.to_string())
}

/// Parse `args` (including the program name), run, and return the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if code == 0 { write!(out, "{e}") } else { write!(err, "{e}") };
            return code;
        }
    };
    let format = match &cli.command {
        Command::Expand { common, .. }
        | Command::Immanant { common, .. }
        | Command::TraceEval { common, .. }
        | Command::TableauxCount { common, .. }
        | Command::Verify { common, .. } => common.format,
    };
    match execute(&cli.command).and_then(|o| o.write(format, out).map(|_| o.success)) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if format == Format::Json {
                let _ = serde_json::to_writer_pretty(&mut *out, &e.as_json());
                let _ = writeln!(out);
            }
            2
        }
    }
}

pub fn execute(cmd: &Command) -> Result<Output, CliError> {
    match cmd {
        Command::Expand { input, q, common } => expand(&read_input(input)?, *q, common.force),
        Command::Immanant { input, trace, network, common } => immanant_cmd(&read_input(input)?, trace, *network, common.force),
        Command::TraceEval { input, trace, kl, common } => {
            let target = match kl {
                Some(w) => {
                    let w: Permutation = w.parse()?;
                    Parsed::Element(kl_basis_element_q1(&w)?)
                }
                None => parse_any(&read_input(input)?)?,
            };
            trace_eval(target, trace, common.force)
        }
        Command::TableauxCount { input, shape, predicate, list, common } => {
            tableaux_count(&read_input(input)?, &shape.parse()?, predicate, *list, common.force)
        }
        Command::Verify { suite, n, trials, seed, paper_counterexample, failures_only, common } => {
            let opts = SuiteOptions {
                n: *n,
                trials: *trials,
                seed: *seed,
                paper_counterexample: *paper_counterexample,
                force: common.force,
                limits: EnumerationLimits::default(),
            };
            verify(*suite, &opts, *failures_only)
        }
    }
}

fn read_input(input: &Input) -> Result<String, CliError> {
    if let Some(text) = &input.inline {
        return Ok(text.clone());
    }
    match &input.input {
        None => Err(CliError::Usage("no input given (pass a file, `-`, or --inline)".into())),
        Some(p) if p.as_os_str() == "-" => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s)?;
            Ok(s)
        }
        Some(p) => std::fs::read_to_string(p).map_err(|e| CliError::Usage(format!("cannot read {}: {e}", p.display()))),
    }
}

/// Recognised input documents.
#[derive(Debug)]
pub enum Parsed {
    Poset(Poset),
    Graph(Graph),
    Network(PlanarNetwork),
    Matrix(Matrix),
    Element(GroupAlgebraElement),
}

impl Parsed {
    fn kind(&self) -> &'static str {
        match self {
            Parsed::Poset(_) => "poset",
            Parsed::Graph(_) => "graph",
            Parsed::Network(_) => "network",
            Parsed::Matrix(_) => "matrix",
            Parsed::Element(_) => "group-algebra-element",
        }
    }
}

/// Classify a JSON document by its keys; non-JSON text is read as a CSV matrix.
pub fn parse_any(text: &str) -> Result<Parsed, CliError> {
    let value: Value = match serde_json::from_str(text) {
        Ok(v) => v,
        Err(json_err) => {
            let trimmed = text.trim_start();
            if trimmed.starts_with('{') || trimmed.starts_with('[') {
                return Err(Error::Parse(format!("invalid JSON: {json_err}")).into());
            }
            return Ok(Parsed::Matrix(parse_csv(text)?));
        }
    };
    let from = |v: Value| -> Result<Parsed, CliError> {
        let obj = match &v {
            Value::Array(_) => return Ok(Parsed::Matrix(de(v)?)),
            Value::Object(o) => o,
            _ => return Err(Error::Parse("expected a JSON object or array".into()).into()),
        };
        if obj.contains_key("sources") {
            Ok(Parsed::Network(de(v)?))
        } else if obj.contains_key("relations") {
            Ok(Parsed::Poset(de(v)?))
        } else if obj.contains_key("terms") {
            Ok(Parsed::Element(de(v)?))
        } else if obj.contains_key("edges") {
            Ok(Parsed::Graph(de(v)?))
        } else if let Some(m) = obj.get("matrix") {
            Ok(Parsed::Matrix(de(m.clone())?))
        } else {
            Err(Error::Parse("unrecognised input: expected a poset, graph, network, matrix or group algebra element".into()).into())
        }
    };
    from(value)
}

fn de<T: serde::de::DeserializeOwned>(v: Value) -> Result<T, CliError> {
    serde_json::from_value(v).map_err(|e| Error::Parse(e.to_string()).into())
}

fn guard(n: usize, max: usize, what: &str, force: bool) -> Result<(), CliError> {
    if n > max && !force {
        return Err(CliError::Usage(format!("{what} of order {n} exceeds the default limit {max}; pass --force to proceed")));
    }
    Ok(())
}

fn trace_table(n: usize, values: &[Scalar]) -> Vec<Value> {
    partitions_of(n).iter().zip(values).map(|(l, v)| json!({ "lambda": l.to_string(), "value": v })).collect()
}

fn symfunc_table(f: &SymFunc) -> Vec<Value> {
    f.terms().map(|(l, c)| json!({ "lambda": l.to_string(), "coefficient": c })).collect()
}

fn expand(text: &str, q: bool, force: bool) -> Result<Output, CliError> {
    let parsed = parse_any(text)?;
    let (g, poset) = match parsed {
        Parsed::Poset(p) => (p.incomparability_graph(), Some(p)),
        Parsed::Graph(g) => (g, None),
        other => return Err(CliError::Usage(format!("expand needs a poset or graph, got a {}", other.kind()))),
    };
    let n = g.n();
    guard(n, MAX_GRAPH_ORDER, if poset.is_some() { "poset" } else { "graph" }, force)?;
    let x = match (q, &poset) {
        (false, _) => chromatic_symfunc(&g),
        (true, Some(p)) => chromatic_symfunc_q_uio(p)?,
        (true, None) => chromatic_symfunc_q(&g)?,
    };
    let mut rows = Vec::new();
    let mut bases = serde_json::Map::new();
    for b in Basis::ALL {
        let f = x.convert(b);
        for (l, c) in f.terms() {
            rows.push(vec![b.letter().to_string(), l.to_string(), c.to_string()]);
        }
        bases.insert(b.letter().to_string(), Value::Array(symfunc_table(&f)));
    }
    let mut traces = serde_json::Map::new();
    for t in TraceBasis::ALL {
        let vals = traces_from_x(&x, t);
        for (l, v) in partitions_of(n).iter().zip(&vals) {
            rows.push(vec![t.name().to_string(), l.to_string(), v.to_string()]);
        }
        traces.insert(t.name().to_string(), Value::Array(trace_table(n, &vals)));
    }
    let mut doc = json!({
        "input": if poset.is_some() { "poset" } else { "graph" },
        "n": n,
        "q": q,
        "graph": &g,
        "symmetric_function": bases,
        "traces": traces,
    });
    if let (Some(p), false) = (&poset, q) {
        let fc = fundamental_coefficients(p);
        let xi: Vec<Value> = fc
            .from_omega_x
            .iter()
            .map(|(s, v)| {
                rows.push(vec!["xi".into(), s.to_string(), v.to_string()]);
                json!({ "descent_set": s.to_string(), "value": v })
            })
            .collect();
        doc["fundamental"] = Value::Array(xi);
    }
    Ok(Output { json: doc, header: vec!["table", "key", "value"], rows, success: true })
}

fn trace_values(spec: &TraceSpec, n: usize) -> Result<Vec<(Partition, Trace)>, CliError> {
    let lambdas = match &spec.lambda {
        Some(l) => {
            if l.size() != n {
                return Err(Error::SizeMismatch { expected: n, found: l.size() }.into());
            }
            vec![l.clone()]
        }
        None => partitions_of(n),
    };
    lambdas.into_iter().map(|l| Ok((l.clone(), trace_basis(n, spec.basis, &l)?))).collect()
}

fn immanant_cmd(text: &str, spec: &TraceSpec, network: bool, force: bool) -> Result<Output, CliError> {
    let parsed = parse_any(text)?;
    let (a, net) = match parsed {
        Parsed::Matrix(m) if !network => (m, None),
        Parsed::Network(d) => (d.path_matrix(), Some(d)),
        Parsed::Matrix(_) => return Err(CliError::Usage("--network needs a planar network input".into())),
        other => return Err(CliError::Usage(format!("immanant needs a matrix or network, got a {}", other.kind()))),
    };
    let n = a.n();
    guard(n, MAX_IMMANANT_ORDER, "matrix", force)?;
    let traces = trace_values(spec, n)?;
    let mut rows = Vec::new();
    let mut values = Vec::new();
    for (l, t) in &traces {
        let v = immanant(t, &a)?;
        rows.push(vec!["immanant".into(), format!("{}:{l}", spec.basis), v.to_string()]);
        values.push(json!({ "lambda": l.to_string(), "value": v }));
    }
    let mut doc = json!({
        "n": n,
        "basis": spec.basis.name(),
        "matrix": a.rows(),
        "immanants": values,
    });
    if let Some(l) = &spec.lambda {
        doc["trace"] = json!(format!("{}:{l}", spec.basis));
        doc["value"] = doc["immanants"][0]["value"].clone();
    }
    if let (Some(d), true) = (net, network) {
        let mut table = Vec::new();
        for (k, s) in d.skeletons(&EnumerationLimits::default())?.iter().enumerate() {
            let z = s.z();
            let evals: Vec<Value> = traces
                .iter()
                .map(|(l, t)| {
                    let v = evaluate(t, &z)?;
                    rows.push(vec![format!("skeleton {}", k + 1), format!("{}:{l}", spec.basis), v.to_string()]);
                    Ok(json!({ "lambda": l.to_string(), "value": v }))
                })
                .collect::<Result<_, Error>>()?;
            table.push(json!({
                "edges": s.edges.iter().map(|e| e + 1).collect::<Vec<_>>(),
                "weight": s.weight,
                "families": s.families.len(),
                "z": z,
                "theta_z": evals,
            }));
        }
        doc["skeletons"] = Value::Array(table);
    }
    Ok(Output { json: doc, header: vec!["item", "trace", "value"], rows, success: true })
}

type Evaluator = Box<dyn Fn(&Trace) -> Result<Scalar, Error>>;

fn trace_eval(target: Parsed, spec: &TraceSpec, force: bool) -> Result<Output, CliError> {
    let kind = target.kind();
    let (n, values): (usize, Evaluator) = match target {
        Parsed::Poset(p) => {
            guard(p.n(), MAX_GRAPH_ORDER, "poset", force)?;
            let g = p.incomparability_graph();
            (p.n(), Box::new(move |t| trace_of_graph(t, &g)))
        }
        Parsed::Graph(g) => {
            guard(g.n(), MAX_GRAPH_ORDER, "graph", force)?;
            (g.n(), Box::new(move |t| trace_of_graph(t, &g)))
        }
        Parsed::Element(e) => (e.n(), Box::new(move |t| evaluate(t, &e))),
        other => return Err(CliError::Usage(format!("trace-eval needs a poset, graph or group algebra element, got a {}", other.kind()))),
    };
    let mut rows = Vec::new();
    let mut table = Vec::new();
    for (l, t) in trace_values(spec, n)? {
        let v = values(&t)?;
        rows.push(vec![format!("{}:{l}", spec.basis), v.to_string()]);
        table.push(json!({ "lambda": l.to_string(), "value": v }));
    }
    let mut doc = json!({ "input": kind, "n": n, "basis": spec.basis.name(), "values": table });
    if let Some(l) = &spec.lambda {
        doc["trace"] = json!(format!("{}:{l}", spec.basis));
        doc["value"] = doc["values"][0]["value"].clone();
    }
    Ok(Output { json: doc, header: vec!["trace", "value"], rows, success: true })
}

fn tableaux_count(text: &str, shape: &Partition, predicate: &str, list: bool, force: bool) -> Result<Output, CliError> {
    let (count, listed, pred_name) = match parse_any(text)? {
        Parsed::Poset(p) => {
            guard(p.n(), MAX_GRAPH_ORDER, "poset", force)?;
            if shape.size() != p.n() {
                return Err(Error::SizeMismatch { expected: p.n(), found: shape.size() }.into());
            }
            let pred: Predicate = predicate.parse()?;
            let ts = tableaux(&p, shape, pred);
            (ts.len(), ts.iter().map(|t| t.to_string()).collect::<Vec<_>>(), pred.name())
        }
        Parsed::Network(d) => {
            guard(d.n(), MAX_IMMANANT_ORDER, "network", force)?;
            if shape.size() != d.n() {
                return Err(Error::SizeMismatch { expected: d.n(), found: shape.size() }.into());
            }
            let pred: PiPredicate = predicate.parse()?;
            let mut listed = Vec::new();
            for f in d.families(None, &EnumerationLimits::default())? {
                for t in pi_tableaux(&f, shape, pred)? {
                    listed.push(t.to_string());
                }
            }
            (listed.len(), listed, pred.name())
        }
        other => return Err(CliError::Usage(format!("tableaux-count needs a poset or network, got a {}", other.kind()))),
    };
    let mut doc = json!({ "shape": shape.to_string(), "predicate": pred_name, "count": count });
    let mut rows = vec![vec!["count".into(), count.to_string()]];
    if list {
        rows.extend(listed.iter().map(|t| vec!["tableau".into(), t.clone()]));
        doc["tableaux"] = json!(listed);
    }
    Ok(Output { json: doc, header: vec!["item", "value"], rows, success: true })
}

fn verify(suite: Suite, opts: &SuiteOptions, failures_only: bool) -> Result<Output, CliError> {
    let report = run_suite(suite, opts)?;
    let pass = report.holds();
    let failures: Vec<_> = report.failures().cloned().collect();
    let shown: Vec<_> = if failures_only { failures.clone() } else { report.checks.clone() };
    let rows = shown
        .iter()
        .map(|c| {
            vec![
                c.label.clone(),
                c.lhs.to_string(),
                c.rhs.to_string(),
                serde_json::to_value(c.expectation).ok().and_then(|v| v.as_str().map(String::from)).unwrap_or_default(),
                c.pass.to_string(),
            ]
        })
        .collect();
    let divergences: Vec<_> = report.checks.iter().filter(|c| c.expectation == Expectation::Divergent).cloned().collect();
    let doc = json!({
        "suite": suite.name(),
        "n": opts.n.unwrap_or(suite.bounds().0),
        "seed": opts.seed,
        "trials": if suite.is_randomized() { Some(opts.trials) } else { None },
        "pass": pass,
        "total": report.len(),
        "failed": failures.len(),
        "failures": failures,
        "expected_divergences": divergences,
        "checks": shown,
    });
    Ok(Output { json: doc, header: vec!["label", "lhs", "rhs", "expectation", "pass"], rows, success: pass })
}
