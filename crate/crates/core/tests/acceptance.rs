//! Acceptance criteria, one line per criterion.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::Instant;

use chromsym::chromatic::graph_traces;
use chromsym::cli;
use chromsym::poset::{all_posets, Poset};
use chromsym::symfunc::{monomial_oracle, ribbon_expansion};
use chromsym::tableaux::{count_tableaux, Predicate};
use chromsym::tnn::{immanant, pi_tableau_count, EnumerationLimits, Matrix, PiPredicate, PlanarNetwork};
use chromsym::trace::{trace_basis, TraceBasis};
use chromsym::verify::{kl_character_nonnegativity, run_suite, Suite, SuiteOptions};
use chromsym::{Basis, Partition, Scalar, SymFunc};

type Outcome = Result<String, String>;
type Criterion = (&'static str, Box<dyn Fn() -> Outcome>);

fn part(s: &str) -> Partition {
    s.parse().expect("partition")
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn phi_list() -> Vec<(Partition, i64)> {
    [("5", 5), ("4,1", 3), ("3,2", 7), ("2,2,1", 1), ("3,1,1", 0), ("2,1,1,1", 0), ("1,1,1,1,1", 0)]
        .into_iter()
        .map(|(l, v)| (part(l), v))
        .collect()
}

fn suites(list: &[Suite], n: usize, trials: usize) -> Outcome {
    let mut total = 0;
    for &s in list {
        let opts = SuiteOptions { n: Some(n), trials, seed: 2024, ..SuiteOptions::default() };
        let r = run_suite(s, &opts).map_err(|e| format!("{s}: {e}"))?;
        if let Some(c) = r.failures().next() {
            return Err(format!("{s}: {} failures, first: {c}", r.failures().count()));
        }
        total += r.len();
    }
    Ok(format!("{total} checks"))
}

fn golden_poset() -> Outcome {
    let p = Poset::path_inc(5);
    let json = serde_json::to_string(&p).map_err(|e| e.to_string())?;
    let mut out = Vec::new();
    let code = cli::run(["chromsym", "expand", "--inline", &json], &mut out, &mut Vec::new());
    ensure(code == 0, || format!("expand exited with {code}"))?;
    let doc: serde_json::Value = serde_json::from_slice(&out).map_err(|e| e.to_string())?;
    let table: BTreeMap<String, String> = doc["traces"]["phi"]
        .as_array()
        .ok_or("missing phi table")?
        .iter()
        .map(|r| (r["lambda"].as_str().unwrap_or("").to_owned(), r["value"].as_str().unwrap_or("").to_owned()))
        .collect();
    for (l, v) in phi_list() {
        let got = table.get(&l.to_string()).cloned().unwrap_or_default();
        ensure(got == v.to_string(), || format!("phi^{l} = {got}, expected {v}"))?;
    }
    let shape = part("3,2");
    let cyc = count_tableaux(&p, &shape, Predicate::StandardAndCyclic);
    let rec = count_tableaux(&p, &shape, Predicate::StandardAndRecordFree);
    ensure(cyc == 4 && rec == 5, || format!("tableaux counts {cyc} and {rec}, expected 4 and 5"))?;
    Ok("phi = 5,3,7,1,0,0,0; tableaux 4 and 5".into())
}

fn golden_network() -> Outcome {
    let d = PlanarNetwork::staircase_example();
    let a = d.path_matrix();
    let want = Matrix::from_i64(&[
        vec![1, 1, 0, 0, 0],
        vec![1, 1, 1, 0, 0],
        vec![1, 1, 1, 1, 0],
        vec![1, 1, 1, 1, 1],
        vec![1, 1, 1, 1, 1],
    ])
    .map_err(|e| e.to_string())?;
    ensure(a == want, || format!("path matrix {a:?}"))?;
    for (l, v) in phi_list() {
        let t = trace_basis(5, TraceBasis::Phi, &l).map_err(|e| e.to_string())?;
        let got = immanant(&t, &a).map_err(|e| e.to_string())?;
        ensure(got == Scalar::from_int(v), || format!("Imm phi^{l} = {got}, expected {v}"))?;
    }
    let count = pi_tableau_count(&d, &part("3,2"), PiPredicate::ColumnStrictCylindrical, &EnumerationLimits::default())
        .map_err(|e| e.to_string())?;
    ensure(count == Scalar::from_int(4), || format!("column-strict cylindrical count {count}, expected 4"))?;
    Ok("path matrix and immanants match; 4 tableaux against immanant 7".into())
}

fn s3111() -> Outcome {
    let mu = part("3,1,1,1");
    let want: BTreeMap<Partition, i64> = [("4,1,1", 1), ("4,2", -1), ("5,1", -1), ("6", 1)].into_iter().map(|(l, c)| (part(l), c)).collect();
    let ribbons = ribbon_expansion(&mu).map_err(|e| e.to_string())?;
    ensure(ribbons == want, || format!("ribbon route gave {ribbons:?}"))?;
    let transition: BTreeMap<Partition, i64> = SymFunc::basis_element(Basis::S, &mu)
        .convert(Basis::E)
        .terms()
        .map(|(l, c)| (l.clone(), c.to_string().parse::<i64>().unwrap_or(i64::MIN)))
        .collect();
    ensure(transition == want, || format!("transition route gave {transition:?}"))?;
    let lhs = monomial_oracle(Basis::S, &mu, 6).map_err(|e| e.to_string())?;
    let mut rhs: BTreeMap<Vec<usize>, Scalar> = BTreeMap::new();
    for (l, c) in &want {
        for (e, v) in monomial_oracle(Basis::E, l, 6).map_err(|e| e.to_string())? {
            *rhs.entry(e).or_default() += &(&v * &Scalar::from_int(*c));
        }
    }
    rhs.retain(|_, v| !v.is_zero());
    ensure(lhs == rhs, || "polynomials in six variables differ".into())?;
    Ok("e_411 - e_42 - e_51 + e_6 by ribbons, transition matrices and six-variable polynomials".into())
}

fn nonnegativity() -> Outcome {
    let mut checked = 0;
    for n in 1..=5 {
        for p in all_posets(n).map_err(|e| e.to_string())? {
            let g = p.incomparability_graph();
            let claw_free = p.is_ab_free(3, 1);
            let bases: &[TraceBasis] = if claw_free { &[TraceBasis::Psi, TraceBasis::Chi] } else { &[TraceBasis::Psi] };
            for &b in bases {
                for v in graph_traces(&g, b) {
                    ensure(v.is_nonnegative() == Some(true), || format!("{b} value {v} is negative on {p:?}"))?;
                    checked += 1;
                }
            }
        }
    }
    let kl: usize = (1..=4)
        .map(|n| {
            let r = kl_character_nonnegativity(n).map_err(|e| e.to_string())?;
            ensure(r.holds(), || format!("KL character check failed at n = {n}"))?;
            Ok(r.len())
        })
        .sum::<Result<usize, String>>()?;
    Ok(format!("{checked} poset values, {kl} Kazhdan-Lusztig values"))
}

fn main() -> ExitCode {
    let criteria: Vec<Criterion> = vec![
        ("poset golden values", Box::new(golden_poset)),
        ("network golden values", Box::new(golden_network)),
        ("s_3111 in the elementary basis", Box::new(s3111)),
        (
            "exhaustive poset suites, n <= 5",
            Box::new(|| {
                suites(
                    &[Suite::EtaInterpretations, Suite::PsiInterpretations, Suite::HookGasharov, Suite::Equidistribution, Suite::TraceIdentities],
                    5,
                    0,
                )
            }),
        ),
        ("unit interval order suites, n <= 6", Box::new(|| suites(&[Suite::UioBijection, Suite::BruhatExcedance, Suite::QSums], 6, 0))),
        (
            "randomized immanant suites, 100 trials, n <= 4",
            Box::new(|| {
                suites(
                    &[
                        Suite::Lindstrom,
                        Suite::Lmw,
                        Suite::Muir,
                        Suite::Skeletons,
                        Suite::HookImmanant,
                        Suite::Permanent,
                        Suite::PowerImmanant,
                        Suite::StembridgeRect,
                    ],
                    4,
                    100,
                )
            }),
        ),
        (
            "algebraic infrastructure",
            Box::new(|| {
                let a = suites(&[Suite::Frobenius, Suite::Kostka], 6, 0)?;
                let b = suites(&[Suite::Yexpand], 5, 0)?;
                Ok(format!("{a} at n <= 6, {b} at n <= 5"))
            }),
        ),
        ("nonnegativity spot checks", Box::new(nonnegativity)),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {} {name}: {detail} ({secs:.1}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {} {name}: {why} ({secs:.1}s)", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
