//! P-tableaux: fillings of French Young diagrams by the elements of a poset,
//! their row and column conditions, statistics and enumerators.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{ordered_set_partitions, Digraph};
use crate::partition::{DescentSet, Partition};
use crate::perm::{all_permutations, Permutation};
use crate::poset::Poset;

/// A filling of a Young diagram; `rows[0]` is the bottom (longest) row.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "TableauRepr", into = "TableauRepr")]
pub struct PTableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct TableauRepr {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

impl TryFrom<TableauRepr> for PTableau {
    type Error = Error;
    fn try_from(r: TableauRepr) -> Result<Self> {
        let t = PTableau::new(r.rows)?;
        if t.shape != r.shape {
            return Err(Error::InvalidArgument(format!("rows have shape {} but shape {} was declared", t.shape, r.shape)));
        }
        Ok(t)
    }
}

impl From<PTableau> for TableauRepr {
    fn from(t: PTableau) -> Self {
        TableauRepr { shape: t.shape, rows: t.rows }
    }
}

impl PTableau {
    /// Rows must have weakly decreasing lengths and contain `1..=n` exactly once.
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())
            .map_err(|_| Error::InvalidArgument("row lengths must be positive and weakly decreasing".into()))?;
        let n = shape.size();
        let mut seen = vec![false; n + 1];
        for &v in rows.iter().flatten() {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidArgument(format!("entries must be 1..={n} each exactly once")));
            }
            seen[v] = true;
        }
        Ok(PTableau { shape, rows })
    }

    /// Single-row tableau.
    pub fn permutation(w: &Permutation) -> Self {
        PTableau { shape: Partition::row(w.n()), rows: if w.n() == 0 { vec![] } else { vec![w.word().to_vec()] } }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn n(&self) -> usize {
        self.shape.size()
    }

    /// `U_{i,j}`, 1-based.
    pub fn entry(&self, i: usize, j: usize) -> usize {
        self.rows[i - 1][j - 1]
    }

    /// Rows concatenated bottom to top.
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().flatten().copied().collect()
    }

    fn check(&self, p: &Poset) {
        assert_eq!(p.n(), self.n(), "tableau and poset sizes differ");
    }

    /// `#{(i,j) : U_{i,j} >_P U_{i,j+1}}`.
    pub fn descents(&self, p: &Poset) -> usize {
        self.check(p);
        self.rows.iter().map(|r| r.windows(2).filter(|w| p.gt(w[0], w[1])).count()).sum()
    }

    /// `#{(i,j) : U_{i,j} >_P Ū_{i,j}}` where `Ū_{i,j}` is the `j`-th smallest label in row `i`.
    pub fn excedances(&self, p: &Poset) -> usize {
        self.check(p);
        self.rows
            .iter()
            .map(|r| {
                let mut sorted = r.clone();
                sorted.sort_unstable();
                r.iter().zip(&sorted).filter(|(&u, &s)| p.gt(u, s)).count()
            })
            .sum()
    }

    /// Cells `(i,j)` whose entry is `>_P` every earlier entry of its row; `j = 1` included.
    pub fn records(&self, p: &Poset) -> usize {
        self.check(p);
        self.rows.iter().map(|r| (0..r.len()).filter(|&j| r[..j].iter().all(|&a| p.lt(a, r[j]))).count()).sum()
    }

    pub fn nontrivial_records(&self, p: &Poset) -> usize {
        self.records(p) - self.rows.len()
    }

    /// Pairs `i < j`, incomparable in `P`, with `j` left of `i` in the reading word.
    pub fn pinv(&self, p: &Poset) -> usize {
        self.check(p);
        let w = self.reading_word();
        let mut count = 0;
        for a in 0..w.len() {
            for b in a + 1..w.len() {
                if w[a] > w[b] && p.incomparable(w[a], w[b]) {
                    count += 1;
                }
            }
        }
        count
    }

    /// Pairs `i < j` with `j` left of `i` in the reading word.
    pub fn inv(&self) -> usize {
        let w = self.reading_word();
        let mut count = 0;
        for a in 0..w.len() {
            for b in a + 1..w.len() {
                if w[a] > w[b] {
                    count += 1;
                }
            }
        }
        count
    }

    pub fn statistics(&self, p: &Poset) -> Statistics {
        Statistics {
            descents: self.descents(p),
            excedances: self.excedances(p),
            records: self.records(p),
            nontrivial_records: self.nontrivial_records(p),
            pinv: self.pinv(p),
            inv: self.inv(),
        }
    }

    /// `U_{i,j} <_P U_{i+1,j}` everywhere.
    pub fn is_column_strict(&self, p: &Poset) -> bool {
        self.rows.windows(2).all(|w| w[1].iter().zip(&w[0]).all(|(&up, &down)| p.lt(down, up)))
    }

    pub fn is_row_semistrict(&self, p: &Poset) -> bool {
        self.descents(p) == 0
    }

    pub fn is_cyclically_row_semistrict(&self, p: &Poset) -> bool {
        self.is_row_semistrict(p) && self.rows.iter().all(|r| !p.gt(r[r.len() - 1], r[0]))
    }

    pub fn is_excedance_free(&self, p: &Poset) -> bool {
        self.excedances(p) == 0
    }

    pub fn is_record_free(&self, p: &Poset) -> bool {
        self.nontrivial_records(p) == 0
    }

    pub fn satisfies(&self, p: &Poset, pred: Predicate) -> bool {
        let c = pred.conditions();
        (!c.column_strict || self.is_column_strict(p))
            && (!c.row_semistrict || self.is_row_semistrict(p))
            && (!c.cyclic || self.is_cyclically_row_semistrict(p))
            && (!c.excedance_free || self.is_excedance_free(p))
            && (!c.record_free || self.is_record_free(p))
    }
}

impl fmt::Display for PTableau {
    /// Rows top to bottom, separated by `|`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .rev()
            .map(|r| r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "[{}]", rows.join("|"))
    }
}

impl FromStr for PTableau {
    type Err = Error;
    /// Inverse of `Display`: `[4,5|1,3,2]`, top row first.
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('[').trim_end_matches(']');
        let mut rows = Vec::new();
        for part in body.split('|').rev() {
            let row: std::result::Result<Vec<usize>, _> = part.split(',').map(|x| x.trim().parse::<usize>()).collect();
            rows.push(row.map_err(|e| Error::Parse(format!("tableau {s:?}: {e}")))?);
        }
        PTableau::new(rows)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
pub struct Statistics {
    pub descents: usize,
    pub excedances: usize,
    pub records: usize,
    pub nontrivial_records: usize,
    pub pinv: usize,
    pub inv: usize,
}

/// Conditions a P-tableau may be required to satisfy.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Predicate {
    Any,
    ColumnStrict,
    RowSemistrict,
    Standard,
    CyclicallyRowSemistrict,
    ExcedanceFree,
    RecordFree,
    RecordFreeAndRowSemistrict,
    StandardAndCyclic,
    StandardAndRecordFree,
}

#[derive(Clone, Copy, Default)]
struct Conditions {
    column_strict: bool,
    row_semistrict: bool,
    cyclic: bool,
    excedance_free: bool,
    record_free: bool,
}

impl Predicate {
    pub const ALL: [Predicate; 10] = [
        Predicate::Any,
        Predicate::ColumnStrict,
        Predicate::RowSemistrict,
        Predicate::Standard,
        Predicate::CyclicallyRowSemistrict,
        Predicate::ExcedanceFree,
        Predicate::RecordFree,
        Predicate::RecordFreeAndRowSemistrict,
        Predicate::StandardAndCyclic,
        Predicate::StandardAndRecordFree,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Predicate::Any => "any",
            Predicate::ColumnStrict => "column-strict",
            Predicate::RowSemistrict => "row-semistrict",
            Predicate::Standard => "standard",
            Predicate::CyclicallyRowSemistrict => "cyclically-row-semistrict",
            Predicate::ExcedanceFree => "excedance-free",
            Predicate::RecordFree => "record-free",
            Predicate::RecordFreeAndRowSemistrict => "record-free-and-row-semistrict",
            Predicate::StandardAndCyclic => "standard-and-cyclic",
            Predicate::StandardAndRecordFree => "standard-and-record-free",
        }
    }

    fn conditions(self) -> Conditions {
        let mut c = Conditions::default();
        match self {
            Predicate::Any => {}
            Predicate::ColumnStrict => c.column_strict = true,
            Predicate::RowSemistrict => c.row_semistrict = true,
            Predicate::Standard => {
                c.column_strict = true;
                c.row_semistrict = true;
            }
            Predicate::CyclicallyRowSemistrict => {
                c.row_semistrict = true;
                c.cyclic = true;
            }
            Predicate::ExcedanceFree => c.excedance_free = true,
            Predicate::RecordFree => c.record_free = true,
            Predicate::RecordFreeAndRowSemistrict => {
                c.record_free = true;
                c.row_semistrict = true;
            }
            Predicate::StandardAndCyclic => {
                c.column_strict = true;
                c.row_semistrict = true;
                c.cyclic = true;
            }
            Predicate::StandardAndRecordFree => {
                c.column_strict = true;
                c.row_semistrict = true;
                c.record_free = true;
            }
        }
        c
    }
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Predicate {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase().replace('_', "-");
        Predicate::ALL
            .into_iter()
            .find(|p| p.name() == key)
            .or(match key.as_str() {
                "descent-free" => Some(Predicate::RowSemistrict),
                "cyclic" => Some(Predicate::CyclicallyRowSemistrict),
                _ => None,
            })
            .ok_or_else(|| Error::Parse(format!("unknown tableau predicate {s:?}")))
    }
}

struct Search<'a> {
    p: &'a Poset,
    shape: &'a [usize],
    cond: Conditions,
    rows: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn run(&mut self, i: usize, free: u32, visit: &mut dyn FnMut(&[Vec<usize>])) {
        if i == self.shape.len() {
            visit(&self.rows);
            return;
        }
        let j = self.rows[i].len();
        if j == self.shape[i] {
            if self.row_complete_ok(i) {
                self.run(i + 1, free, visit);
            }
            return;
        }
        let mut candidates = free;
        while candidates != 0 {
            let v = candidates.trailing_zeros() as usize + 1;
            candidates &= candidates - 1;
            if self.cell_ok(i, j, v) {
                self.rows[i].push(v);
                self.run(i, free & !(1 << (v - 1)), visit);
                self.rows[i].pop();
            }
        }
    }

    fn cell_ok(&self, i: usize, j: usize, v: usize) -> bool {
        let row = &self.rows[i];
        if self.cond.row_semistrict && j > 0 && self.p.gt(row[j - 1], v) {
            return false;
        }
        if self.cond.record_free && j > 0 && row.iter().all(|&a| self.p.lt(a, v)) {
            return false;
        }
        if self.cond.column_strict && i > 0 && !self.p.lt(self.rows[i - 1][j], v) {
            return false;
        }
        true
    }

    fn row_complete_ok(&self, i: usize) -> bool {
        let row = &self.rows[i];
        if self.cond.cyclic && self.p.gt(row[row.len() - 1], row[0]) {
            return false;
        }
        if self.cond.excedance_free {
            let mut sorted = row.clone();
            sorted.sort_unstable();
            if row.iter().zip(&sorted).any(|(&u, &s)| self.p.gt(u, s)) {
                return false;
            }
        }
        true
    }
}

/// Visit every P-tableau of shape `λ` satisfying `pred`, in lexicographic
/// order of rows bottom to top.
pub fn for_each_tableau(p: &Poset, lambda: &Partition, pred: Predicate, mut visit: impl FnMut(&PTableau)) {
    if lambda.size() != p.n() {
        return;
    }
    let free = if p.n() == 0 { 0 } else { ((1u64 << p.n()) - 1) as u32 };
    let mut search = Search { p, shape: lambda.parts(), cond: pred.conditions(), rows: vec![Vec::new(); lambda.len()] };
    search.run(0, free, &mut |rows| {
        visit(&PTableau { shape: lambda.clone(), rows: rows.to_vec() });
    });
}

pub fn tableaux(p: &Poset, lambda: &Partition, pred: Predicate) -> Vec<PTableau> {
    let mut out = Vec::new();
    for_each_tableau(p, lambda, pred, |t| out.push(t.clone()));
    out
}

pub fn count_tableaux(p: &Poset, lambda: &Partition, pred: Predicate) -> u64 {
    let mut count = 0;
    for_each_tableau(p, lambda, pred, |_| count += 1);
    count
}

/// `{i : U_i >_P U_{i+1}}` for a P-permutation.
pub fn descent_set(p: &Poset, w: &Permutation) -> DescentSet {
    let word = w.word();
    let set = (1..w.n()).filter(|&i| p.gt(word[i - 1], word[i])).collect();
    DescentSet::new(w.n(), set).expect("descents lie in [n-1]")
}

/// `#{i : w_i >_P i}`.
pub fn pexc(p: &Poset, w: &Permutation) -> usize {
    (1..=w.n()).filter(|&i| p.gt(w.at(i), i)).count()
}

/// `#{i : w_i <_P i}`.
pub fn paexc(p: &Poset, w: &Permutation) -> usize {
    (1..=w.n()).filter(|&i| p.lt(w.at(i), i)).count()
}

pub fn pdes(p: &Poset, w: &Permutation) -> usize {
    w.word().windows(2).filter(|x| p.gt(x[0], x[1])).count()
}

pub fn pasc(p: &Poset, w: &Permutation) -> usize {
    w.word().windows(2).filter(|x| p.lt(x[0], x[1])).count()
}

/// Histograms of the four permutation statistics over all P-permutations.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Equidistribution {
    pub pdes: Vec<u64>,
    pub pasc: Vec<u64>,
    pub pexc: Vec<u64>,
    pub paexc: Vec<u64>,
}

impl Equidistribution {
    pub fn holds(&self) -> bool {
        self.pdes == self.pasc && self.pasc == self.pexc && self.pexc == self.paexc
    }
}

pub fn equidistribution_check(p: &Poset) -> Equidistribution {
    let len = p.n().max(1);
    let mut h = Equidistribution { pdes: vec![0; len], pasc: vec![0; len], pexc: vec![0; len], paexc: vec![0; len] };
    for w in all_permutations(p.n()) {
        h.pdes[pdes(p, &w)] += 1;
        h.pasc[pasc(p, &w)] += 1;
        h.pexc[pexc(p, &w)] += 1;
        h.paexc[paexc(p, &w)] += 1;
    }
    h
}

/// Least-index-source reading of acyclic orientations `O_i` of the induced
/// incomparability graphs `inc(P)_{I_i}`. Each `O_i` is labeled by the
/// order-preserving map `I_i → [|I_i|]`.
pub fn orientation_to_tableau(p: &Poset, blocks: &[Vec<usize>], orientations: &[Digraph]) -> Result<PTableau> {
    if !p.is_naturally_labeled() {
        return Err(Error::NotNaturallyLabeled);
    }
    if blocks.len() != orientations.len() {
        return Err(Error::SizeMismatch { expected: blocks.len(), found: orientations.len() });
    }
    let mut rows = Vec::with_capacity(blocks.len());
    for (block, o) in blocks.iter().zip(orientations) {
        let mut sorted = block.clone();
        sorted.sort_unstable();
        let g = p.incomparability_graph().induced(&sorted);
        if o.n() != g.n() {
            return Err(Error::SizeMismatch { expected: g.n(), found: o.n() });
        }
        for (a, b) in o.arcs() {
            if !g.has_edge(a, b) || o.has_arc(b, a) {
                return Err(Error::InvalidArgument(format!("arc ({a},{b}) is not an orientation of an incomparability edge")));
            }
        }
        if o.arcs().len() != g.edge_count() {
            return Err(Error::InvalidArgument("orientation misses some edges".into()));
        }
        let mut remaining: u32 = if o.n() == 0 { 0 } else { ((1u64 << o.n()) - 1) as u32 };
        let mut row = Vec::with_capacity(o.n());
        while remaining != 0 {
            let source = (0..o.n())
                .find(|&v| remaining & (1 << v) != 0 && (0..o.n()).all(|u| remaining & (1 << u) == 0 || !o.has_arc(u + 1, v + 1)))
                .ok_or(Error::Cyclic)?;
            remaining &= !(1 << source);
            row.push(sorted[source]);
        }
        rows.push(row);
    }
    PTableau::new(rows)
}

/// Inverse of [`orientation_to_tableau`]: orient `j → k` when incomparable `j` precedes `k` in its row.
pub fn tableau_to_orientation(p: &Poset, u: &PTableau) -> (Vec<Vec<usize>>, Vec<Digraph>) {
    let mut blocks = Vec::new();
    let mut orientations = Vec::new();
    for row in u.rows() {
        let mut sorted = row.clone();
        sorted.sort_unstable();
        let index = |v: usize| sorted.binary_search(&v).expect("row element") + 1;
        let mut d = Digraph::empty(row.len());
        for a in 0..row.len() {
            for b in a + 1..row.len() {
                if p.incomparable(row[a], row[b]) {
                    d.add_arc(index(row[a]), index(row[b]));
                }
            }
        }
        blocks.push(sorted);
        orientations.push(d);
    }
    (blocks, orientations)
}

/// Acyclic orientations `(O_1, ..., O_r)` of ordered induced subgraph partitions
/// of `inc(P)` of type `λ`, optionally requiring every `O_i` to have exactly one
/// source (or exactly one sink).
pub fn count_oisp_orientations(p: &Poset, lambda: &Partition, filter: OrientationFilter) -> u64 {
    let g = p.incomparability_graph();
    let mut cache: BTreeMap<Vec<usize>, u64> = BTreeMap::new();
    ordered_set_partitions(p.n(), lambda)
        .into_iter()
        .map(|blocks| {
            blocks
                .iter()
                .map(|b| {
                    *cache.entry(b.clone()).or_insert_with(|| {
                        g.induced(b)
                            .acyclic_orientations()
                            .into_iter()
                            .filter(|o| match filter {
                                OrientationFilter::All => true,
                                OrientationFilter::OneSource => o.sources().len() == 1,
                                OrientationFilter::OneSink => o.sinks().len() == 1,
                            })
                            .count() as u64
                    })
                })
                .product::<u64>()
        })
        .sum()
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OrientationFilter {
    All,
    OneSource,
    OneSink,
}
