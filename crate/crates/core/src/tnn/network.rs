//! Weighted planar networks, their path matrices, path families and
//! bijective skeletons.

use std::collections::BTreeMap;
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group_algebra::GroupAlgebraElement;
use crate::perm::{all_permutations, Permutation};
use crate::poset::Poset;
use crate::scalar::Scalar;

use super::matrix::Matrix;

/// Vertex sets of paths are stored as `u128` masks.
pub const MAX_NETWORK_VERTICES: usize = 128;

/// Bounds on exhaustive path and family enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationLimits {
    pub max_paths_per_pair: usize,
    pub max_families: usize,
}

impl Default for EnumerationLimits {
    fn default() -> Self {
        EnumerationLimits { max_paths_per_pair: 10_000, max_families: 500_000 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub weight: Scalar,
}

/// Acyclic weighted digraph with boundary sources `s_1..s_n` and sinks `t_1..t_n`.
/// Vertices are numbered `1..=V`; planarity of the embedding is assumed, not checked.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanarNetwork {
    names: Vec<String>,
    edges: Vec<Edge>,
    out: Vec<Vec<usize>>,
    topo: Vec<usize>,
    sources: Vec<usize>,
    sinks: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum VerticesRepr {
    Count(usize),
    Names(Vec<String>),
}

#[derive(Serialize, Deserialize, Clone)]
#[serde(untagged)]
enum VertexRef {
    Index(usize),
    Name(String),
}

#[derive(Serialize, Deserialize)]
struct EdgeRepr {
    u: VertexRef,
    v: VertexRef,
    #[serde(default = "Scalar::one")]
    w: Scalar,
}

#[derive(Serialize, Deserialize)]
struct NetworkRepr {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    n: Option<usize>,
    vertices: VerticesRepr,
    edges: Vec<EdgeRepr>,
    sources: Vec<VertexRef>,
    sinks: Vec<VertexRef>,
}

impl Serialize for PlanarNetwork {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let name = |v: usize| VertexRef::Name(self.names[v].clone());
        NetworkRepr {
            n: Some(self.n()),
            vertices: VerticesRepr::Names(self.names.clone()),
            edges: self.edges.iter().map(|e| EdgeRepr { u: name(e.u), v: name(e.v), w: e.weight.clone() }).collect(),
            sources: self.sources.iter().map(|&v| name(v)).collect(),
            sinks: self.sinks.iter().map(|&v| name(v)).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for PlanarNetwork {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = NetworkRepr::deserialize(d)?;
        PlanarNetwork::from_repr(r).map_err(serde::de::Error::custom)
    }
}

impl PlanarNetwork {
    /// Edges `(u, v, weight)` and boundary vertices use 1-based vertex numbers.
    pub fn new(
        vertices: usize,
        edges: impl IntoIterator<Item = (usize, usize, Scalar)>,
        sources: Vec<usize>,
        sinks: Vec<usize>,
    ) -> Result<Self> {
        let names = (1..=vertices).map(|v| v.to_string()).collect();
        Self::build(names, edges.into_iter().collect(), sources, sinks)
    }

    /// As [`PlanarNetwork::new`] but with vertex names.
    pub fn with_names(
        names: Vec<String>,
        edges: impl IntoIterator<Item = (usize, usize, Scalar)>,
        sources: Vec<usize>,
        sinks: Vec<usize>,
    ) -> Result<Self> {
        Self::build(names, edges.into_iter().collect(), sources, sinks)
    }

    fn from_repr(r: NetworkRepr) -> Result<Self> {
        let names = match r.vertices {
            VerticesRepr::Count(k) => (1..=k).map(|v| v.to_string()).collect(),
            VerticesRepr::Names(ns) => ns,
        };
        let lookup = |x: &VertexRef| -> Result<usize> {
            match x {
                VertexRef::Index(i) => Ok(*i),
                VertexRef::Name(s) => names
                    .iter()
                    .position(|n| n == s)
                    .map(|p| p + 1)
                    .ok_or_else(|| Error::InvalidArgument(format!("unknown vertex '{s}'"))),
            }
        };
        let edges =
            r.edges.iter().map(|e| Ok((lookup(&e.u)?, lookup(&e.v)?, e.w.clone()))).collect::<Result<Vec<_>>>()?;
        let sources = r.sources.iter().map(lookup).collect::<Result<Vec<_>>>()?;
        let sinks = r.sinks.iter().map(lookup).collect::<Result<Vec<_>>>()?;
        let n = r.n.unwrap_or(sources.len());
        if sources.len() != n || sinks.len() != n {
            return Err(Error::SizeMismatch { expected: n, found: if sources.len() != n { sources.len() } else { sinks.len() } });
        }
        Self::build(names, edges, sources, sinks)
    }

    fn build(names: Vec<String>, edges: Vec<(usize, usize, Scalar)>, sources: Vec<usize>, sinks: Vec<usize>) -> Result<Self> {
        let nv = names.len();
        if nv > MAX_NETWORK_VERTICES {
            return Err(Error::LimitExceeded(format!("{nv} vertices (maximum {MAX_NETWORK_VERTICES})")));
        }
        if sources.len() != sinks.len() {
            return Err(Error::SizeMismatch { expected: sources.len(), found: sinks.len() });
        }
        let in_range = |v: usize| {
            if v == 0 || v > nv {
                Err(Error::InvalidArgument(format!("vertex {v} out of range 1..={nv}")))
            } else {
                Ok(v - 1)
            }
        };
        let mut out = vec![Vec::new(); nv];
        let mut indeg = vec![0usize; nv];
        let mut es = Vec::with_capacity(edges.len());
        for (u, v, w) in edges {
            let (u, v) = (in_range(u)?, in_range(v)?);
            if u == v {
                return Err(Error::Cyclic);
            }
            out[u].push(es.len());
            indeg[v] += 1;
            es.push(Edge { u, v, weight: w });
        }
        let sources = sources.into_iter().map(in_range).collect::<Result<Vec<_>>>()?;
        let sinks = sinks.into_iter().map(in_range).collect::<Result<Vec<_>>>()?;
        let mut boundary: Vec<usize> = sources.iter().chain(&sinks).copied().collect();
        boundary.sort_unstable();
        if boundary.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidArgument("boundary vertices must be distinct".into()));
        }
        if let Some(&s) = sources.iter().find(|&&s| indeg[s] != 0) {
            return Err(Error::InvalidArgument(format!("source '{}' has incoming edges", names[s])));
        }
        if let Some(&t) = sinks.iter().find(|&&t| !out[t].is_empty()) {
            return Err(Error::InvalidArgument(format!("sink '{}' has outgoing edges", names[t])));
        }
        let mut deg = indeg.clone();
        let mut stack: Vec<usize> = (0..nv).filter(|&v| deg[v] == 0).collect();
        let mut topo = Vec::with_capacity(nv);
        while let Some(v) = stack.pop() {
            topo.push(v);
            for &e in &out[v] {
                let t = es[e].v;
                deg[t] -= 1;
                if deg[t] == 0 {
                    stack.push(t);
                }
            }
        }
        if topo.len() != nv {
            return Err(Error::Cyclic);
        }
        Ok(PlanarNetwork { names, edges: es, out, topo, sources, sinks })
    }

    /// Order `n` of the network.
    pub fn n(&self) -> usize {
        self.sources.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn vertex_name(&self, v: usize) -> &str {
        &self.names[v - 1]
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// `A(D)`: `a_{i,j}` is the total weight of paths from `s_i` to `t_j`.
    pub fn path_matrix(&self) -> Matrix {
        let n = self.n();
        let mut rows = Vec::with_capacity(n);
        for &s in &self.sources {
            let mut acc = vec![Scalar::zero(); self.vertex_count()];
            acc[s] = Scalar::one();
            for &v in &self.topo {
                if acc[v].is_zero() {
                    continue;
                }
                let here = acc[v].clone();
                for &e in &self.out[v] {
                    let edge = &self.edges[e];
                    acc[edge.v] += &(&here * &edge.weight);
                }
            }
            rows.push(self.sinks.iter().map(|&t| acc[t].clone()).collect());
        }
        Matrix::new(rows).expect("square by construction")
    }

    /// All paths from `s_i` to `t_j` (1-based).
    pub fn paths(&self, i: usize, j: usize, limits: &EnumerationLimits) -> Result<Vec<Path>> {
        let (s, t) = (self.sources[i - 1], self.sinks[j - 1]);
        let mut reach = vec![false; self.vertex_count()];
        reach[t] = true;
        for &v in self.topo.iter().rev() {
            if self.out[v].iter().any(|&e| reach[self.edges[e].v]) {
                reach[v] = true;
            }
        }
        let mut found: Vec<Vec<usize>> = Vec::new();
        if !reach[s] {
            return Ok(Vec::new());
        }
        let mut stack = Vec::new();
        self.walk(s, t, &reach, &mut stack, &mut found, limits)?;
        Ok(found
            .into_iter()
            .map(|edges| {
                let mut vertices = 1u128 << s;
                let mut weight = Scalar::one();
                for &e in &edges {
                    vertices |= 1u128 << self.edges[e].v;
                    weight *= &self.edges[e].weight;
                }
                Path { source: i, sink: j, edges, vertices, weight }
            })
            .collect())
    }

    fn walk(
        &self,
        v: usize,
        t: usize,
        reach: &[bool],
        stack: &mut Vec<usize>,
        found: &mut Vec<Vec<usize>>,
        limits: &EnumerationLimits,
    ) -> Result<()> {
        if v == t {
            if found.len() >= limits.max_paths_per_pair {
                return Err(Error::LimitExceeded(format!("more than {} paths between one pair", limits.max_paths_per_pair)));
            }
            found.push(stack.clone());
            return Ok(());
        }
        for &e in &self.out[v] {
            let w = self.edges[e].v;
            if reach[w] {
                stack.push(e);
                self.walk(w, t, reach, stack, found, limits)?;
                stack.pop();
            }
        }
        Ok(())
    }

    /// `paths(i, j)` for every pair.
    pub fn path_catalog(&self, limits: &EnumerationLimits) -> Result<PathCatalog> {
        let n = self.n();
        let mut table = Vec::with_capacity(n);
        for i in 1..=n {
            let row = (1..=n).map(|j| Ok(self.paths(i, j, limits)?.into_iter().map(Arc::new).collect())).collect::<Result<Vec<_>>>()?;
            table.push(row);
        }
        Ok(PathCatalog { n, table })
    }

    /// `𝒫_w(D)`, or `𝒫(D)` when `w` is `None`.
    pub fn families(&self, w: Option<&Permutation>, limits: &EnumerationLimits) -> Result<Vec<PathFamily>> {
        let catalog = self.path_catalog(limits)?;
        let types = match w {
            Some(w) => {
                if w.n() != self.n() {
                    return Err(Error::SizeMismatch { expected: self.n(), found: w.n() });
                }
                vec![w.clone()]
            }
            None => all_permutations(self.n()),
        };
        let mut out = Vec::new();
        for ty in types {
            catalog.families_of_type(&ty, limits, &mut out)?;
        }
        Ok(out)
    }

    /// Families of type `e` whose paths are pairwise vertex-disjoint.
    pub fn nonintersecting_families(&self, limits: &EnumerationLimits) -> Result<Vec<PathFamily>> {
        Ok(self.families(Some(&Permutation::identity(self.n())), limits)?.into_iter().filter(PathFamily::is_nonintersecting).collect())
    }

    /// Total weight of vertex-disjoint families joining `s_{I_k}` to `t_{J_k}` (sorted, 1-based).
    pub fn nonintersecting_weight(&self, rows: &[usize], cols: &[usize], catalog: &PathCatalog) -> Result<Scalar> {
        if rows.len() != cols.len() {
            return Err(Error::SizeMismatch { expected: rows.len(), found: cols.len() });
        }
        let mut rs = rows.to_vec();
        let mut cs = cols.to_vec();
        rs.sort_unstable();
        cs.sort_unstable();
        fn go(k: usize, used: u128, rs: &[usize], cs: &[usize], cat: &PathCatalog) -> Scalar {
            if k == rs.len() {
                return Scalar::one();
            }
            let mut total = Scalar::zero();
            for p in cat.get(rs[k], cs[k]) {
                if p.vertices & used == 0 {
                    let rest = go(k + 1, used | p.vertices, rs, cs, cat);
                    if !rest.is_zero() {
                        total += &(&p.weight * &rest);
                    }
                }
            }
            total
        }
        Ok(go(0, 0, &rs, &cs, catalog))
    }

    /// Bijective skeletons with their families, keyed by the sorted edge multiset.
    pub fn skeletons(&self, limits: &EnumerationLimits) -> Result<Vec<Skeleton>> {
        let mut map: BTreeMap<Vec<usize>, Vec<PathFamily>> = BTreeMap::new();
        for f in self.families(None, limits)? {
            map.entry(f.edge_multiset()).or_default().push(f);
        }
        Ok(map
            .into_iter()
            .map(|(edges, families)| {
                let weight = families[0].weight.clone();
                Skeleton { edges, weight, families }
            })
            .collect())
    }

    /// Wiring-diagram network: `n` horizontal lines, `chords.len()` columns (at least one), and in column `k`
    /// a diagonal edge between lines `l` and `l + 1` (1-based `l`), upward when the flag is set.
    pub fn wiring_diagram(n: usize, chords: &[(usize, bool, Scalar)], horizontal: impl Fn(usize, usize) -> Scalar) -> Result<Self> {
        let m = chords.len().max(1);
        let id = |line: usize, col: usize| (line - 1) * (m + 1) + col + 1;
        let names = (1..=n).flat_map(|l| (0..=m).map(move |c| format!("{l}.{c}"))).collect();
        let mut edges = Vec::new();
        for l in 1..=n {
            for c in 0..m {
                edges.push((id(l, c), id(l, c + 1), horizontal(l, c)));
            }
        }
        for (c, (l, up, w)) in chords.iter().enumerate() {
            if *l == 0 || *l >= n {
                return Err(Error::InvalidArgument(format!("chord line {l} must lie in 1..{n}")));
            }
            let (a, b) = if *up { (*l, l + 1) } else { (l + 1, *l) };
            edges.push((id(a, c), id(b, c + 1), w.clone()));
        }
        let sources = (1..=n).map(|l| id(l, 0)).collect();
        let sinks = (1..=n).map(|l| id(l, m)).collect();
        Self::with_names(names, edges, sources, sinks)
    }

    /// Random wiring diagram with weights drawn from `{1, 2, 3, 1/2, 2/3}`.
    pub fn random<R: Rng>(n: usize, chords: usize, rng: &mut R) -> Result<Self> {
        let weights = [Scalar::one(), Scalar::from_int(2), Scalar::from_int(3), Scalar::from_ratio(1, 2), Scalar::from_ratio(2, 3)];
        if n < 2 {
            return Self::wiring_diagram(n, &[], |_, _| Scalar::one());
        }
        let cs: Vec<(usize, bool, Scalar)> =
            (0..chords).map(|_| (rng.gen_range(1..n), rng.gen_bool(0.5), weights.choose(rng).expect("nonempty").clone())).collect();
        let cols = chords.max(1);
        let hw: Vec<Scalar> = (0..n * cols).map(|_| weights.choose(rng).expect("nonempty").clone()).collect();
        Self::wiring_diagram(n, &cs, |l, c| hw[(l - 1) * cols + c].clone())
    }

    /// The order-5 network whose path matrix is the 0-1 staircase matrix.
    pub fn staircase_example() -> Self {
        let names: Vec<String> = ["s1", "s2", "s3", "s4", "s5", "v1", "v2", "v3", "v4", "t1", "t2", "t3", "t4", "t5"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        let ix = |s: &str| names.iter().position(|n| n == s).expect("known vertex") + 1;
        let arcs = [
            ("s5", "v1"),
            ("v1", "v2"),
            ("v2", "v3"),
            ("v3", "v4"),
            ("v4", "t1"),
            ("s4", "v1"),
            ("v1", "t5"),
            ("s3", "v2"),
            ("v2", "t4"),
            ("s2", "v3"),
            ("v3", "t3"),
            ("s1", "v4"),
            ("v4", "t2"),
        ];
        let edges: Vec<_> = arcs.iter().map(|(a, b)| (ix(a), ix(b), Scalar::one())).collect();
        let sources = (1..=5).map(|i| ix(&format!("s{i}"))).collect();
        let sinks = (1..=5).map(|i| ix(&format!("t{i}"))).collect();
        Self::with_names(names.clone(), edges, sources, sinks).expect("valid network")
    }
}

/// A source-to-sink path, recorded by its edge indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Path {
    pub source: usize,
    pub sink: usize,
    pub edges: Vec<usize>,
    vertices: u128,
    pub weight: Scalar,
}

impl Path {
    pub fn meets(&self, other: &Path) -> bool {
        self.vertices & other.vertices != 0
    }
}

/// `paths(i, j)` for all pairs.
#[derive(Clone, Debug)]
pub struct PathCatalog {
    n: usize,
    table: Vec<Vec<Vec<Arc<Path>>>>,
}

impl PathCatalog {
    pub fn get(&self, i: usize, j: usize) -> &[Arc<Path>] {
        &self.table[i - 1][j - 1]
    }

    fn families_of_type(&self, ty: &Permutation, limits: &EnumerationLimits, out: &mut Vec<PathFamily>) -> Result<()> {
        let lists: Vec<&[Arc<Path>]> = (1..=self.n).map(|i| self.get(i, ty.at(i))).collect();
        if lists.iter().any(|l| l.is_empty()) {
            return Ok(());
        }
        let mut idx = vec![0usize; self.n];
        loop {
            if out.len() >= limits.max_families {
                return Err(Error::LimitExceeded(format!("more than {} path families", limits.max_families)));
            }
            let paths: Vec<Arc<Path>> = idx.iter().zip(&lists).map(|(&k, l)| l[k].clone()).collect();
            out.push(PathFamily::from_paths(ty.clone(), paths));
            let mut pos = self.n;
            loop {
                if pos == 0 {
                    return Ok(());
                }
                pos -= 1;
                idx[pos] += 1;
                if idx[pos] < lists[pos].len() {
                    break;
                }
                idx[pos] = 0;
            }
        }
    }
}

/// `(π_1, …, π_n)` with `π_i` running from `s_i` to `t_{w_i}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathFamily {
    paths: Vec<Arc<Path>>,
    ty: Permutation,
    weight: Scalar,
}

impl PathFamily {
    fn from_paths(ty: Permutation, paths: Vec<Arc<Path>>) -> Self {
        let weight = paths.iter().fold(Scalar::one(), |acc, p| &acc * &p.weight);
        PathFamily { paths, ty, weight }
    }

    pub fn n(&self) -> usize {
        self.paths.len()
    }

    /// `π_i`, 1-based.
    pub fn path(&self, i: usize) -> &Path {
        &self.paths[i - 1]
    }

    pub fn type_permutation(&self) -> &Permutation {
        &self.ty
    }

    pub fn weight(&self) -> &Scalar {
        &self.weight
    }

    pub fn intersect(&self, i: usize, j: usize) -> bool {
        self.path(i).meets(self.path(j))
    }

    pub fn is_nonintersecting(&self) -> bool {
        (1..=self.n()).all(|i| (i + 1..=self.n()).all(|j| !self.intersect(i, j)))
    }

    pub fn edge_multiset(&self) -> Vec<usize> {
        let mut es: Vec<usize> = self.paths.iter().flat_map(|p| p.edges.iter().copied()).collect();
        es.sort_unstable();
        es
    }

    /// `P(π)`: `i < j` when `i < j` as integers and `π_i`, `π_j` share no vertex.
    pub fn poset(&self) -> Result<Poset> {
        Poset::from_fn(self.n(), |i, j| i < j && !self.intersect(i, j))
            .map_err(|_| Error::InvalidArgument("intersection relation of the family is not transitive; is the network planar?".into()))
    }
}

/// An edge multiset together with every family that uses exactly those edges.
#[derive(Clone, Debug)]
pub struct Skeleton {
    pub edges: Vec<usize>,
    pub weight: Scalar,
    pub families: Vec<PathFamily>,
}

impl Skeleton {
    /// `z(K) = Σ_{π ∈ Π(K)} type(π)`.
    pub fn z(&self) -> GroupAlgebraElement {
        let n = self.families[0].n();
        GroupAlgebraElement::sum_of(n, self.families.iter().map(|f| &f.ty))
    }

    pub fn identity_families(&self) -> impl Iterator<Item = &PathFamily> {
        self.families.iter().filter(|f| f.ty.length() == 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn lim() -> EnumerationLimits {
        EnumerationLimits::default()
    }

    #[test]
    fn staircase_path_matrix() {
        let d = PlanarNetwork::staircase_example();
        let want = Matrix::from_i64(&[
            vec![1, 1, 0, 0, 0],
            vec![1, 1, 1, 0, 0],
            vec![1, 1, 1, 1, 0],
            vec![1, 1, 1, 1, 1],
            vec![1, 1, 1, 1, 1],
        ])
        .unwrap();
        assert_eq!(d.path_matrix(), want);
        assert_eq!(d.families(None, &lim()).unwrap().len(), 16);
        assert_eq!(Scalar::from_int(16), want.perm());
    }

    #[test]
    fn trivial_networks() {
        let c = Scalar::from_ratio(3, 2);
        let d = PlanarNetwork::new(2, [(1, 2, c.clone())], vec![1], vec![2]).unwrap();
        assert_eq!(d.path_matrix().entry(1, 1), &c);
        let (a, b) = (Scalar::from_int(2), Scalar::from_int(5));
        let d = PlanarNetwork::new(4, [(1, 2, a), (2, 4, Scalar::one()), (1, 3, b), (3, 4, Scalar::one())], vec![1], vec![4]).unwrap();
        assert_eq!(d.path_matrix().entry(1, 1), &Scalar::from_int(7));
        let d = PlanarNetwork::new(6, (1..=3).map(|i| (i, i + 3, Scalar::one())), vec![1, 2, 3], vec![4, 5, 6]).unwrap();
        let fams = d.families(None, &lim()).unwrap();
        assert_eq!(fams.len(), 1);
        assert_eq!(fams[0].poset().unwrap(), Poset::chain(3));
    }

    #[test]
    fn rejects_bad_networks() {
        assert_eq!(PlanarNetwork::new(3, [(1, 2, Scalar::one()), (2, 1, Scalar::one())], vec![3], vec![3]).unwrap_err(), Error::InvalidArgument("boundary vertices must be distinct".into()));
        assert_eq!(
            PlanarNetwork::new(4, [(2, 3, Scalar::one()), (3, 2, Scalar::one())], vec![1], vec![4]).unwrap_err(),
            Error::Cyclic
        );
        assert!(PlanarNetwork::new(2, [(2, 1, Scalar::one())], vec![1], vec![2]).is_err());
        assert!(PlanarNetwork::new(2, [(1, 3, Scalar::one())], vec![1], vec![2]).is_err());
    }

    #[test]
    fn covering_family_of_staircase() {
        let d = PlanarNetwork::staircase_example();
        let w: Permutation = "23154".parse().unwrap();
        let fams = d.families(Some(&w), &lim()).unwrap();
        assert_eq!(fams.len(), 1);
        let f = &fams[0];
        assert_eq!(f.edge_multiset().len(), 13);
        let all: Vec<usize> = (0..d.edges().len()).collect();
        let mut distinct = f.edge_multiset();
        distinct.dedup();
        assert_eq!(distinct, all);
        let skel = d.skeletons(&lim()).unwrap();
        assert!(skel.iter().any(|k| k.families.iter().any(|g| g == f)));
        let total: usize = skel.iter().map(|k| k.families.len()).sum();
        assert_eq!(total, 16);
    }

    #[test]
    fn lindstrom_on_staircase() {
        let d = PlanarNetwork::staircase_example();
        let a = d.path_matrix();
        let nonint: Scalar = d.nonintersecting_families(&lim()).unwrap().iter().map(|f| f.weight().clone()).sum();
        assert_eq!(nonint, a.det());
        let cat = d.path_catalog(&lim()).unwrap();
        assert_eq!(d.nonintersecting_weight(&[1, 2], &[1, 2], &cat).unwrap(), Scalar::zero());
        assert_eq!(d.nonintersecting_weight(&[4, 5], &[4, 5], &cat).unwrap(), a.minor(&[4, 5], &[4, 5]).unwrap());
    }

    #[test]
    fn random_networks_are_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let d = PlanarNetwork::random(4, 6, &mut rng).unwrap();
            for f in d.families(None, &lim()).unwrap() {
                f.poset().unwrap();
            }
            assert!(d.path_matrix().is_totally_nonnegative().unwrap());
        }
    }

    #[test]
    fn limits_are_enforced() {
        let d = PlanarNetwork::staircase_example();
        let tight = EnumerationLimits { max_paths_per_pair: 10, max_families: 3 };
        assert!(matches!(d.families(None, &tight), Err(Error::LimitExceeded(_))));
    }

    #[test]
    fn json_round_trip() {
        let d = PlanarNetwork::staircase_example();
        let js = serde_json::to_string(&d).unwrap();
        let back: PlanarNetwork = serde_json::from_str(&js).unwrap();
        assert_eq!(back.path_matrix(), d.path_matrix());
        let small: PlanarNetwork =
            serde_json::from_str(r#"{"n":1,"vertices":2,"edges":[{"u":1,"v":2,"w":"1/3"}],"sources":[1],"sinks":[2]}"#).unwrap();
        assert_eq!(small.path_matrix().entry(1, 1), &Scalar::from_ratio(1, 3));
        assert!(serde_json::from_str::<PlanarNetwork>(r#"{"n":1,"vertices":["a"],"edges":[],"sources":["b"],"sinks":["a"]}"#).is_err());
    }
}
