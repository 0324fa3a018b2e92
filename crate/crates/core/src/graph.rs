//! Simple graphs and digraphs on `[n]` (1-based labels, bitmask storage),
//! proper colorings and acyclic orientations.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{Composition, Partition};
use crate::scalar::Scalar;

/// Largest vertex count supported by the bitmask representation.
pub const MAX_VERTICES: usize = 32;

/// Undirected simple graph.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Graph {
    n: usize,
    adj: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    n: usize,
    edges: Vec<[usize; 2]>,
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GraphRepr { n: self.n, edges: self.edges().into_iter().map(|(a, b)| [a, b]).collect() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = GraphRepr::deserialize(d)?;
        Graph::from_edges(r.n, r.edges.iter().map(|e| (e[0], e[1]))).map_err(serde::de::Error::custom)
    }
}

fn check_size(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        return Err(Error::LimitExceeded(format!("{n} vertices (maximum {MAX_VERTICES})")));
    }
    Ok(())
}

impl Graph {
    pub fn edgeless(n: usize) -> Self {
        Graph { n, adj: vec![0; n] }
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        check_size(n)?;
        let mut g = Graph::edgeless(n);
        for (a, b) in edges {
            if a == 0 || b == 0 || a > n || b > n {
                return Err(Error::InvalidArgument(format!("edge ({a},{b}) outside [1,{n}]")));
            }
            if a == b {
                return Err(Error::InvalidArgument(format!("loop at {a} in a simple graph")));
            }
            g.adj[a - 1] |= 1 << (b - 1);
            g.adj[b - 1] |= 1 << (a - 1);
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let full = if n == 0 { 0 } else { (1u64 << n) as u32 - 1 };
        let full = if n == 32 { u32::MAX } else { full };
        Graph { n, adj: (0..n).map(|i| full & !(1 << i)).collect() }
    }

    pub fn path(n: usize) -> Self {
        Graph::from_edges(n, (1..n).map(|i| (i, i + 1))).expect("valid path")
    }

    pub fn cycle(n: usize) -> Self {
        let mut edges: Vec<(usize, usize)> = (1..n).map(|i| (i, i + 1)).collect();
        if n >= 3 {
            edges.push((n, 1));
        }
        Graph::from_edges(n, edges).expect("valid cycle")
    }

    pub(crate) fn from_adjacency(adj: Vec<u32>) -> Self {
        Graph { n: adj.len(), adj }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a != b && self.adj[a - 1] & (1 << (b - 1)) != 0
    }

    /// Neighbours of `v` as a 0-based bitmask.
    pub fn neighbor_mask(&self, v: usize) -> u32 {
        self.adj[v - 1]
    }

    /// Edges `(a, b)` with `a < b`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.n {
            for b in a + 1..self.n {
                if self.adj[a] & (1 << b) != 0 {
                    out.push((a + 1, b + 1));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    /// Subgraph induced on `J` (1-based, any order), relabeled by the
    /// order-preserving map `J → [|J|]`.
    pub fn induced(&self, j: &[usize]) -> Graph {
        let mut verts = j.to_vec();
        verts.sort_unstable();
        let adj = verts
            .iter()
            .map(|&a| {
                verts
                    .iter()
                    .enumerate()
                    .filter(|&(_, &b)| self.has_edge(a, b))
                    .fold(0u32, |m, (k, _)| m | (1 << k))
            })
            .collect();
        Graph { n: verts.len(), adj }
    }

    /// Induced subgraph on a 0-based vertex mask.
    pub fn induced_mask(&self, mask: u32) -> Graph {
        let verts: Vec<usize> = (0..self.n).filter(|&i| mask & (1 << i) != 0).map(|i| i + 1).collect();
        self.induced(&verts)
    }

    pub fn is_independent_mask(&self, mask: u32) -> bool {
        (0..self.n).all(|i| mask & (1 << i) == 0 || self.adj[i] & mask == 0)
    }

    /// Connected components as 0-based vertex masks.
    pub fn components(&self) -> Vec<u32> {
        let mut seen = 0u32;
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen & (1 << s) != 0 {
                continue;
            }
            let mut comp = 1u32 << s;
            let mut frontier = comp;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let new = self.adj[v] & !comp;
                comp |= new;
                frontier |= new;
            }
            seen |= comp;
            out.push(comp);
        }
        out
    }

    /// Proper colorings of type `α`: color `i` is used on exactly `α_i` vertices.
    pub fn count_colorings(&self, alpha: &Composition) -> u64 {
        self.coloring_census(alpha).values().sum()
    }

    /// `Σ_κ q^{inv_G(κ)}` over proper colorings of type `α`, where
    /// `inv_G(κ)` counts edges `i < j` with `κ(i) > κ(j)`.
    pub fn count_colorings_q(&self, alpha: &Composition) -> Scalar {
        let census = self.coloring_census(alpha);
        let top = census.keys().next_back().copied().unwrap_or(0);
        let mut coeffs = vec![0i64; top + 1];
        for (k, v) in census {
            coeffs[k] = v as i64;
        }
        Scalar::from_coeffs(coeffs.into_iter().map(crate::scalar::rat_int).collect())
    }

    /// Histogram of `inv_G` over proper colorings of type `α`.
    fn coloring_census(&self, alpha: &Composition) -> BTreeMap<usize, u64> {
        let mut out = BTreeMap::new();
        if alpha.size() != self.n {
            return out;
        }
        let full: u32 = if self.n == 0 { 0 } else { (((1u64) << self.n) - 1) as u32 };
        self.color_classes(alpha.parts(), 0, 0, full, 0, &mut out);
        out
    }

    fn color_classes(&self, alpha: &[usize], k: usize, used: u32, full: u32, inv: usize, out: &mut BTreeMap<usize, u64>) {
        if k == alpha.len() {
            if used == full {
                *out.entry(inv).or_insert(0) += 1;
            }
            return;
        }
        let free = full & !used;
        self.independent_subsets(free, alpha[k], 0, &mut |class| {
            // edges v–u with v in the new (larger) color, u earlier, v < u
            let mut extra = 0;
            let mut c = class;
            while c != 0 {
                let v = c.trailing_zeros();
                c &= c - 1;
                let later = used & self.adj[v as usize] & !((2u32 << v).wrapping_sub(1));
                extra += later.count_ones() as usize;
            }
            self.color_classes(alpha, k + 1, used | class, full, inv + extra, out);
        });
    }

    /// Visit all independent subsets of `pool` with exactly `size` vertices.
    fn independent_subsets(&self, pool: u32, size: usize, chosen: u32, visit: &mut dyn FnMut(u32)) {
        if size == 0 {
            visit(chosen);
            return;
        }
        if (pool.count_ones() as usize) < size {
            return;
        }
        let v = pool.trailing_zeros() as usize;
        let rest = pool & !(1 << v);
        self.independent_subsets(rest & !self.adj[v], size - 1, chosen | (1 << v), visit);
        self.independent_subsets(rest, size, chosen, visit);
    }

    /// `c(G, λ)`: proper colorings using color `i` exactly `λ_i` times.
    pub fn c(&self, lambda: &Partition) -> u64 {
        self.count_colorings(&Composition::from(lambda))
    }

    /// All acyclic orientations, edge by edge, never closing a directed cycle.
    pub fn acyclic_orientations(&self) -> Vec<Digraph> {
        let edges = self.edges();
        let mut out = Vec::new();
        let mut d = Digraph::empty(self.n);
        fn rec(edges: &[(usize, usize)], k: usize, d: &mut Digraph, out: &mut Vec<Digraph>) {
            if k == edges.len() {
                out.push(d.clone());
                return;
            }
            let (a, b) = edges[k];
            for (u, v) in [(a, b), (b, a)] {
                if !d.reaches(v, u) {
                    d.add_arc(u, v);
                    rec(edges, k + 1, d, out);
                    d.remove_arc(u, v);
                }
            }
        }
        rec(&edges, 0, &mut d, &mut out);
        out
    }
}

/// Directed graph on `[n]`; loops allowed.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Digraph {
    n: usize,
    out: Vec<u32>,
}

impl Digraph {
    pub fn empty(n: usize) -> Self {
        Digraph { n, out: vec![0; n] }
    }

    pub fn from_arcs(n: usize, arcs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        check_size(n)?;
        let mut d = Digraph::empty(n);
        for (a, b) in arcs {
            if a == 0 || b == 0 || a > n || b > n {
                return Err(Error::InvalidArgument(format!("arc ({a},{b}) outside [1,{n}]")));
            }
            d.add_arc(a, b);
        }
        Ok(d)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add_arc(&mut self, a: usize, b: usize) {
        self.out[a - 1] |= 1 << (b - 1);
    }

    pub fn remove_arc(&mut self, a: usize, b: usize) {
        self.out[a - 1] &= !(1 << (b - 1));
    }

    pub fn has_arc(&self, a: usize, b: usize) -> bool {
        self.out[a - 1] & (1 << (b - 1)) != 0
    }

    pub fn out_mask(&self, v: usize) -> u32 {
        self.out[v - 1]
    }

    pub fn arcs(&self) -> Vec<(usize, usize)> {
        let mut v = Vec::new();
        for a in 0..self.n {
            for b in 0..self.n {
                if self.out[a] & (1 << b) != 0 {
                    v.push((a + 1, b + 1));
                }
            }
        }
        v
    }

    /// Is there a directed path (possibly empty) from `a` to `b`?
    pub fn reaches(&self, a: usize, b: usize) -> bool {
        let mut seen = 1u32 << (a - 1);
        let mut frontier = seen;
        while frontier != 0 {
            if seen & (1 << (b - 1)) != 0 {
                return true;
            }
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let new = self.out[v] & !seen;
            seen |= new;
            frontier |= new;
        }
        seen & (1 << (b - 1)) != 0
    }

    pub fn is_acyclic(&self) -> bool {
        let mut remaining: u32 = if self.n == 0 { 0 } else { (((1u64) << self.n) - 1) as u32 };
        loop {
            if remaining == 0 {
                return true;
            }
            let source = (0..self.n)
                .find(|&v| remaining & (1 << v) != 0 && (0..self.n).all(|u| remaining & (1 << u) == 0 || self.out[u] & (1 << v) == 0));
            match source {
                Some(v) => remaining &= !(1 << v),
                None => return false,
            }
        }
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.out.iter().filter(|m| *m & (1 << (v - 1)) != 0).count()
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out[v - 1].count_ones() as usize
    }

    /// Vertices of in-degree zero.
    pub fn sources(&self) -> Vec<usize> {
        (1..=self.n).filter(|&v| self.in_degree(v) == 0).collect()
    }

    /// Vertices of out-degree zero.
    pub fn sinks(&self) -> Vec<usize> {
        (1..=self.n).filter(|&v| self.out_degree(v) == 0).collect()
    }

    /// Arcs `j → i` with `j > i`.
    pub fn inv(&self) -> usize {
        self.arcs().into_iter().filter(|(a, b)| a > b).count()
    }

    pub fn reversed(&self) -> Digraph {
        let mut d = Digraph::empty(self.n);
        for (a, b) in self.arcs() {
            d.add_arc(b, a);
        }
        d
    }

    /// Subdigraph induced on `J`, relabeled order-preservingly.
    pub fn induced(&self, j: &[usize]) -> Digraph {
        let mut verts = j.to_vec();
        verts.sort_unstable();
        let mut d = Digraph::empty(verts.len());
        for (x, &a) in verts.iter().enumerate() {
            for (y, &b) in verts.iter().enumerate() {
                if self.has_arc(a, b) {
                    d.add_arc(x + 1, y + 1);
                }
            }
        }
        d
    }

    /// Directed cycles through exactly the vertices of `mask` (0-based),
    /// each counted once as a subgraph. A single vertex needs a loop.
    pub fn hamiltonian_cycles_on(&self, mask: u32) -> u64 {
        if mask == 0 {
            return 0;
        }
        let start = mask.trailing_zeros() as usize;
        if mask.count_ones() == 1 {
            return u64::from(self.out[start] & (1 << start) != 0);
        }
        fn dfs(d: &Digraph, start: usize, v: usize, visited: u32, mask: u32) -> u64 {
            if visited == mask {
                return u64::from(d.out[v] & (1 << start) != 0);
            }
            let mut next = d.out[v] & mask & !visited;
            let mut total = 0;
            while next != 0 {
                let u = next.trailing_zeros() as usize;
                next &= next - 1;
                total += dfs(d, start, u, visited | (1 << u), mask);
            }
            total
        }
        dfs(self, start, start, 1 << start, mask)
    }

    /// Ordered disjoint cycle covers of type `λ`: sequences `(H_1, ..., H_r)` of
    /// vertex-disjoint directed cycles covering every vertex, `|H_j| = λ_j`.
    /// Cycles are counted as subgraphs.
    pub fn ordered_disjoint_cycle_covers(&self, lambda: &Partition) -> u64 {
        if lambda.size() != self.n {
            return 0;
        }
        ordered_set_partitions_masks(self.n, lambda.parts())
            .into_iter()
            .map(|blocks| blocks.iter().map(|&b| self.hamiltonian_cycles_on(b)).product::<u64>())
            .sum()
    }

    /// Same covers with a marked starting vertex on every cycle.
    pub fn ordered_disjoint_rooted_cycle_covers(&self, lambda: &Partition) -> u64 {
        let roots: u64 = lambda.parts().iter().map(|&p| p as u64).product();
        roots * self.ordered_disjoint_cycle_covers(lambda)
    }
}

/// Ordered set partitions `(I_1, ..., I_r)` of `[n]` with `|I_j| = sizes_j`, as 0-based masks.
pub fn ordered_set_partitions_masks(n: usize, sizes: &[usize]) -> Vec<Vec<u32>> {
    let full: u32 = if n == 0 { 0 } else { (((1u64) << n) - 1) as u32 };
    let mut out = Vec::new();
    fn subsets(pool: u32, size: usize, chosen: u32, visit: &mut dyn FnMut(u32)) {
        if size == 0 {
            visit(chosen);
            return;
        }
        if (pool.count_ones() as usize) < size {
            return;
        }
        let v = pool.trailing_zeros();
        let rest = pool & !(1 << v);
        subsets(rest, size - 1, chosen | (1 << v), visit);
        subsets(rest, size, chosen, visit);
    }
    fn rec(sizes: &[usize], k: usize, free: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if k == sizes.len() {
            if free == 0 {
                out.push(prefix.clone());
            }
            return;
        }
        subsets(free, sizes[k], 0, &mut |s| {
            prefix.push(s);
            rec(sizes, k + 1, free & !s, prefix, out);
            prefix.pop();
        });
    }
    if sizes.iter().sum::<usize>() == n {
        rec(sizes, 0, full, &mut Vec::new(), &mut out);
    }
    out
}

/// Ordered set partitions of `[n]` of type `λ`, blocks as sorted 1-based lists.
pub fn ordered_set_partitions(n: usize, lambda: &Partition) -> Vec<Vec<Vec<usize>>> {
    ordered_set_partitions_masks(n, lambda.parts())
        .into_iter()
        .map(|blocks| blocks.into_iter().map(mask_to_vertices).collect())
        .collect()
}

/// Ordered induced subgraph partitions `(G_{I_1}, ..., G_{I_r})` of type `λ`.
pub fn ordered_induced_subgraph_partitions(g: &Graph, lambda: &Partition) -> Vec<(Vec<Vec<usize>>, Vec<Graph>)> {
    ordered_set_partitions(g.n(), lambda)
        .into_iter()
        .map(|blocks| {
            let graphs = blocks.iter().map(|b| g.induced(b)).collect();
            (blocks, graphs)
        })
        .collect()
}

pub fn mask_to_vertices(mask: u32) -> Vec<usize> {
    (0..32).filter(|&i| mask & (1 << i) != 0).map(|i| i + 1).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{compositions_of, factorial, partitions_of};

    fn comp(s: &str) -> Composition {
        s.parse().unwrap()
    }

    /// Proper colorings by brute force over all maps `[n] → [k]`.
    fn brute_colorings(g: &Graph, k: usize) -> u64 {
        let n = g.n();
        let mut count = 0;
        let total = (k as u64).pow(n as u32);
        for code in 0..total {
            let mut c = code;
            let colors: Vec<usize> = (0..n)
                .map(|_| {
                    let v = (c % k as u64) as usize;
                    c /= k as u64;
                    v
                })
                .collect();
            if g.edges().iter().all(|&(a, b)| colors[a - 1] != colors[b - 1]) {
                count += 1;
            }
        }
        count
    }

    fn all_graphs(n: usize) -> Vec<Graph> {
        let pairs: Vec<(usize, usize)> = (1..=n).flat_map(|a| (a + 1..=n).map(move |b| (a, b))).collect();
        (0u32..(1 << pairs.len()))
            .map(|m| Graph::from_edges(n, pairs.iter().enumerate().filter(|(i, _)| m & (1 << i) != 0).map(|(_, &e)| e)).unwrap())
            .collect()
    }

    #[test]
    fn coloring_examples() {
        let p3 = Graph::path(3);
        assert_eq!(p3.count_colorings(&comp("2,1")), 1);
        assert_eq!(p3.count_colorings_q(&comp("2,1")), Scalar::q());
        assert_eq!(p3.count_colorings(&comp("1,2")), 1);
        assert_eq!(p3.count_colorings_q(&comp("1,2")), Scalar::q());
        for n in 1..=5 {
            let g = Graph::cycle(n);
            assert_eq!(g.count_colorings(&Composition::from(&Partition::column(n))), factorial(n));
            let k = Graph::complete(n);
            for alpha in compositions_of(n) {
                if alpha.parts().iter().any(|&p| p >= 2) {
                    assert_eq!(k.count_colorings(&alpha), 0);
                }
            }
        }
    }

    #[test]
    fn colorings_match_chromatic_polynomial() {
        for n in 1..=5 {
            for g in all_graphs(n) {
                for k in 1..=4usize {
                    let mut total = 0u64;
                    for l in partitions_of(n) {
                        if l.len() > k {
                            continue;
                        }
                        let mut ways = factorial(k) / factorial(k - l.len());
                        for v in 1..=n {
                            ways /= factorial(l.multiplicity(v));
                        }
                        total += g.c(&l) * ways;
                    }
                    assert_eq!(total, brute_colorings(&g, k));
                }
            }
        }
    }

    #[test]
    fn orientation_counts() {
        let tree = Graph::from_edges(5, [(1, 2), (1, 3), (3, 4), (3, 5)]).unwrap();
        assert_eq!(tree.acyclic_orientations().len(), 16);
        assert_eq!(Graph::complete(3).acyclic_orientations().len(), 6);
        assert_eq!(Graph::path(5).acyclic_orientations().len(), 16);
        assert_eq!(Graph::complete(5).acyclic_orientations().len(), 120);
        for o in Graph::cycle(4).acyclic_orientations() {
            assert!(o.is_acyclic());
        }
        assert_eq!(Graph::cycle(4).acyclic_orientations().len(), 14);
    }

    #[test]
    fn ordered_partitions() {
        assert_eq!(ordered_set_partitions(3, &Partition::row(3)).len(), 1);
        assert_eq!(ordered_set_partitions(3, &"2,1".parse().unwrap()).len(), 3);
        assert_eq!(ordered_set_partitions(4, &"2,2".parse().unwrap()).len(), 6);
        let g = Graph::path(4);
        let parts = ordered_induced_subgraph_partitions(&g, &"2,2".parse().unwrap());
        assert_eq!(parts.len(), 6);
        assert_eq!(parts[0].1[0].edge_count(), 1);
    }

    #[test]
    fn cycle_covers() {
        let mut d = Digraph::from_arcs(2, [(1, 1), (2, 2), (1, 2), (2, 1)]).unwrap();
        assert_eq!(d.ordered_disjoint_cycle_covers(&Partition::row(2)), 1);
        assert_eq!(d.ordered_disjoint_rooted_cycle_covers(&Partition::row(2)), 2);
        assert_eq!(d.ordered_disjoint_cycle_covers(&Partition::column(2)), 2);
        d.remove_arc(2, 1);
        assert_eq!(d.ordered_disjoint_cycle_covers(&Partition::row(2)), 0);
        let complete = Digraph::from_arcs(3, (1..=3).flat_map(|a| (1..=3).map(move |b| (a, b)))).unwrap();
        assert_eq!(complete.ordered_disjoint_cycle_covers(&Partition::row(3)), 2);
    }

    #[test]
    fn induced_relabels() {
        let g = Graph::path(5);
        let h = g.induced(&[2, 3, 5]);
        assert_eq!(h.edges(), vec![(1, 2)]);
        assert_eq!(g.components().len(), 1);
        assert_eq!(Graph::edgeless(3).components().len(), 3);
    }

    #[test]
    fn json() {
        let g: Graph = serde_json::from_str(r#"{"n":5,"edges":[[1,2],[2,3]]}"#).unwrap();
        assert_eq!(g.edge_count(), 2);
        assert!(serde_json::from_str::<Graph>(r#"{"n":2,"edges":[[1,3]]}"#).is_err());
    }
}
