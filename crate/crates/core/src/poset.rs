//! Finite posets on `[n]` stored as strict-order bitmasks, with unit interval
//! order recognition and the correspondence with 312-avoiding permutations.

use std::collections::BTreeSet;
use std::sync::OnceLock;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Digraph, Graph, MAX_VERTICES};
use crate::perm::{avoiders_312, Permutation};

/// Largest size served by [`all_posets`].
pub const MAX_ENUMERATED: usize = 7;

/// Strict partial order on `[n]`. `up[i]` holds the (0-based) elements above `i`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poset {
    n: usize,
    up: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct PosetRepr {
    n: usize,
    relations: Vec<[usize; 2]>,
}

impl Serialize for Poset {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let relations = self.cover_relations().into_iter().map(|(a, b)| [a, b]).collect();
        PosetRepr { n: self.n, relations }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Poset {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = PosetRepr::deserialize(d)?;
        Poset::from_relations(r.n, r.relations.iter().map(|e| (e[0], e[1]))).map_err(serde::de::Error::custom)
    }
}

fn full_mask(n: usize) -> u32 {
    if n == 0 {
        0
    } else {
        ((1u64 << n) - 1) as u32
    }
}

impl Poset {
    /// Transitive closure of the relations `a < b`.
    pub fn from_relations(n: usize, relations: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::LimitExceeded(format!("{n} elements (maximum {MAX_VERTICES})")));
        }
        let mut up = vec![0u32; n];
        for (a, b) in relations {
            if a == 0 || b == 0 || a > n || b > n {
                return Err(Error::InvalidArgument(format!("relation ({a},{b}) outside [1,{n}]")));
            }
            if a == b {
                return Err(Error::CyclicRelation(a));
            }
            up[a - 1] |= 1 << (b - 1);
        }
        // Warshall closure on bitmasks.
        for k in 0..n {
            for i in 0..n {
                if up[i] & (1 << k) != 0 {
                    up[i] |= up[k];
                }
            }
        }
        if let Some(i) = (0..n).find(|&i| up[i] & (1 << i) != 0) {
            return Err(Error::CyclicRelation(i + 1));
        }
        Ok(Poset { n, up })
    }

    /// `i <_P j` iff `lt(i, j)` (1-based). The predicate must define a strict order.
    pub fn from_fn(n: usize, lt: impl Fn(usize, usize) -> bool) -> Result<Self> {
        let rels: Vec<(usize, usize)> = (1..=n).flat_map(|i| (1..=n).map(move |j| (i, j))).filter(|&(i, j)| lt(i, j)).collect();
        let p = Poset::from_relations(n, rels.iter().copied())?;
        if rels.len() != p.relation_count() {
            return Err(Error::InvalidArgument("relation is not transitive".into()));
        }
        Ok(p)
    }

    pub fn chain(n: usize) -> Self {
        Poset { n, up: (0..n).map(|i| full_mask(n) & !full_mask(i + 1)).collect() }
    }

    pub fn antichain(n: usize) -> Self {
        Poset { n, up: vec![0; n] }
    }

    /// `i <_P j` iff `i + 1 < j`; its incomparability graph is the path.
    pub fn path_inc(n: usize) -> Self {
        Poset::from_fn(n, |i, j| i + 1 < j).expect("strict order")
    }

    /// Disjoint sum of an `a`-chain on `1..=a` and a `b`-chain on `a+1..=a+b`.
    pub fn chain_sum(a: usize, b: usize) -> Self {
        Poset::from_fn(a + b, |i, j| i < j && ((j <= a) || (i > a))).expect("strict order")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn lt(&self, i: usize, j: usize) -> bool {
        self.up[i - 1] & (1 << (j - 1)) != 0
    }

    pub fn gt(&self, i: usize, j: usize) -> bool {
        self.lt(j, i)
    }

    pub fn comparable(&self, i: usize, j: usize) -> bool {
        i == j || self.lt(i, j) || self.lt(j, i)
    }

    pub fn incomparable(&self, i: usize, j: usize) -> bool {
        !self.comparable(i, j)
    }

    /// Elements strictly above `i`, as a 0-based mask.
    pub fn up_mask(&self, i: usize) -> u32 {
        self.up[i - 1]
    }

    /// Elements strictly below `i`, as a 0-based mask.
    pub fn down_mask(&self, i: usize) -> u32 {
        (0..self.n).filter(|&k| self.up[k] & (1 << (i - 1)) != 0).fold(0, |m, k| m | (1 << k))
    }

    /// All pairs `(i, j)` with `i <_P j`.
    pub fn relations(&self) -> Vec<(usize, usize)> {
        let mut v = Vec::new();
        for i in 1..=self.n {
            for j in 1..=self.n {
                if self.lt(i, j) {
                    v.push((i, j));
                }
            }
        }
        v
    }

    pub fn relation_count(&self) -> usize {
        self.up.iter().map(|m| m.count_ones() as usize).sum()
    }

    /// Covering pairs of the Hasse diagram.
    pub fn cover_relations(&self) -> Vec<(usize, usize)> {
        self.relations()
            .into_iter()
            .filter(|&(i, j)| !(1..=self.n).any(|k| self.lt(i, k) && self.lt(k, j)))
            .collect()
    }

    /// Subposet on `J`, relabeled order-preservingly.
    pub fn induced(&self, j: &[usize]) -> Poset {
        let mut verts = j.to_vec();
        verts.sort_unstable();
        verts.dedup();
        let up = verts
            .iter()
            .map(|&a| verts.iter().enumerate().filter(|&(_, &b)| self.lt(a, b)).fold(0u32, |m, (k, _)| m | (1 << k)))
            .collect();
        Poset { n: verts.len(), up }
    }

    pub fn induced_mask(&self, mask: u32) -> Poset {
        let verts: Vec<usize> = (0..self.n).filter(|&i| mask & (1 << i) != 0).map(|i| i + 1).collect();
        self.induced(&verts)
    }

    /// Relabel element `i` as `perm(i)`.
    pub fn relabel(&self, perm: &Permutation) -> Poset {
        let mut up = vec![0u32; self.n];
        for (i, j) in self.relations() {
            up[perm.at(i) - 1] |= 1 << (perm.at(j) - 1);
        }
        Poset { n: self.n, up }
    }

    /// `#{x ≤_P y} − #{z ≥_P y}`.
    pub fn beta(&self, y: usize) -> i64 {
        self.down_mask(y).count_ones() as i64 - self.up_mask(y).count_ones() as i64
    }

    pub fn is_naturally_labeled(&self) -> bool {
        self.relations().into_iter().all(|(i, j)| i < j)
    }

    pub fn incomparability_graph(&self) -> Graph {
        let adj = (0..self.n)
            .map(|i| full_mask(self.n) & !(1 << i) & !self.up[i] & !self.down_mask(i + 1))
            .collect();
        Graph::from_adjacency(adj)
    }

    /// Digraph of pairs `(i, j)` with `i ≯_P j`, loops included.
    pub fn ngr(&self) -> Digraph {
        let mut d = Digraph::empty(self.n);
        for i in 1..=self.n {
            for j in 1..=self.n {
                if !self.gt(i, j) {
                    d.add_arc(i, j);
                }
            }
        }
        d
    }

    /// Contains no induced copy of the disjoint sum of an `a`-chain and a `b`-chain?
    pub fn is_ab_free(&self, a: usize, b: usize) -> bool {
        let chains_a = self.chains(a);
        let chains_b = if a == b { chains_a.clone() } else { self.chains(b) };
        for &x in &chains_a {
            for &y in &chains_b {
                if x & y != 0 {
                    continue;
                }
                let independent = (0..self.n).filter(|&i| x & (1 << i) != 0).all(|i| (self.up[i] | self.down_mask(i + 1)) & y == 0);
                if independent {
                    return false;
                }
            }
        }
        true
    }

    /// Chains with exactly `k` elements, as masks.
    pub fn chains(&self, k: usize) -> Vec<u32> {
        let mut out = Vec::new();
        fn rec(p: &Poset, k: usize, top: Option<usize>, mask: u32, out: &mut Vec<u32>) {
            if k == 0 {
                out.push(mask);
                return;
            }
            let candidates = match top {
                None => full_mask(p.n),
                Some(t) => p.up[t],
            };
            for v in 0..p.n {
                if candidates & (1 << v) != 0 {
                    rec(p, k - 1, Some(v), mask | (1 << v), out);
                }
            }
        }
        if k > 0 {
            rec(self, k, None, 0, &mut out);
        } else {
            out.push(0);
        }
        out
    }

    pub fn is_unit_interval_order(&self) -> bool {
        self.is_ab_free(3, 1) && self.is_ab_free(2, 2)
    }

    /// Orders in which every element follows everything below it.
    pub fn linear_extensions(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let downs: Vec<u32> = (1..=self.n).map(|i| self.down_mask(i)).collect();
        fn rec(n: usize, downs: &[u32], placed: u32, word: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if word.len() == n {
                out.push(word.clone());
                return;
            }
            for v in 0..n {
                if placed & (1 << v) == 0 && downs[v] & !placed == 0 {
                    word.push(v + 1);
                    rec(n, downs, placed | (1 << v), word, out);
                    word.pop();
                }
            }
        }
        rec(self.n, &downs, 0, &mut Vec::new(), &mut out);
        out
    }

    /// Representative of the isomorphism class: the naturally labeled copy
    /// whose upper-triangular relation bits are lexicographically least.
    pub fn canonical_form(&self) -> Poset {
        let mut best: Option<(Vec<u32>, Vec<u32>)> = None;
        for ext in self.linear_extensions() {
            // ext[k] is the element receiving label k + 1.
            let mut pos = vec![0usize; self.n];
            for (k, &e) in ext.iter().enumerate() {
                pos[e - 1] = k;
            }
            let up: Vec<u32> = ext
                .iter()
                .map(|&e| {
                    let mut m = 0u32;
                    let mut u = self.up[e - 1];
                    while u != 0 {
                        let v = u.trailing_zeros() as usize;
                        u &= u - 1;
                        m |= 1 << pos[v];
                    }
                    m
                })
                .collect();
            let key: Vec<u32> = up.iter().map(|m| m.reverse_bits()).collect();
            if best.as_ref().is_none_or(|(k, _)| key < *k) {
                best = Some((key, up));
            }
        }
        Poset { n: self.n, up: best.map(|(_, up)| up).unwrap_or_default() }
    }

    pub fn is_isomorphic(&self, other: &Poset) -> bool {
        self.n == other.n
            && self.relation_count() == other.relation_count()
            && self.canonical_form() == other.canonical_form()
    }

    /// Relabel so that `β` is nondecreasing (ties keep their relative order).
    pub fn uio_canonical_labeling(&self) -> Result<Poset> {
        if !self.is_unit_interval_order() {
            return Err(Error::NotUnitIntervalOrder);
        }
        let mut order: Vec<usize> = (1..=self.n).collect();
        order.sort_by_key(|&y| self.beta(y));
        let mut word = vec![0usize; self.n];
        for (k, &y) in order.iter().enumerate() {
            word[y - 1] = k + 1;
        }
        Ok(self.relabel(&Permutation::new(word)?))
    }

    pub fn has_canonical_uio_labeling(&self) -> bool {
        (1..self.n).all(|y| self.beta(y) <= self.beta(y + 1))
    }

    /// `w_j = max({i : i ≯_P j} ∖ {w_1, ..., w_{j−1}})` for a canonically labeled UIO.
    pub fn uio_to_312_avoiding(&self) -> Result<Permutation> {
        if !self.is_unit_interval_order() {
            return Err(Error::NotUnitIntervalOrder);
        }
        if !self.has_canonical_uio_labeling() {
            return Err(Error::NonCanonicalLabeling);
        }
        let mut used = 0u32;
        let mut word = Vec::with_capacity(self.n);
        for j in 1..=self.n {
            let w = (1..=self.n)
                .rev()
                .find(|&i| used & (1 << (i - 1)) == 0 && !self.gt(i, j))
                .ok_or(Error::NonCanonicalLabeling)?;
            used |= 1 << (w - 1);
            word.push(w);
        }
        Permutation::new(word)
    }

    /// Inverse of [`Poset::uio_to_312_avoiding`]: `i >_P j` iff `i > max(w_1, ..., w_j)`.
    pub fn uio_from_312_avoiding(w: &Permutation) -> Result<Poset> {
        if !w.avoids_312() {
            return Err(Error::Not312Avoiding(w.to_string()));
        }
        let n = w.n();
        let mut prefix_max = Vec::with_capacity(n);
        let mut m = 0;
        for j in 1..=n {
            m = m.max(w.at(j));
            prefix_max.push(m);
        }
        Poset::from_fn(n, |j, i| i > prefix_max[j - 1])
    }

    /// Random naturally labeled poset: each pair `i < j` is a relation with
    /// probability `p` before transitive closure.
    pub fn random<R: Rng>(n: usize, p: f64, rng: &mut R) -> Poset {
        let mut rels = Vec::new();
        for i in 1..=n {
            for j in i + 1..=n {
                if rng.gen_bool(p) {
                    rels.push((i, j));
                }
            }
        }
        Poset::from_relations(n, rels).expect("acyclic by construction")
    }
}

/// All posets on `n ≤ 7` elements up to isomorphism, each naturally labeled.
pub fn all_posets(n: usize) -> Result<&'static [Poset]> {
    static CACHE: [OnceLock<Vec<Poset>>; MAX_ENUMERATED + 1] = [const { OnceLock::new() }; MAX_ENUMERATED + 1];
    if n > MAX_ENUMERATED {
        return Err(Error::LimitExceeded(format!("poset enumeration for n = {n} (maximum {MAX_ENUMERATED})")));
    }
    Ok(CACHE[n].get_or_init(|| {
        if n == 0 {
            return vec![Poset::antichain(0)];
        }
        let smaller = all_posets(n - 1).expect("within limit");
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for p in smaller {
            // a new maximal element placed over every order ideal
            for ideal in p.order_ideals() {
                let mut up: Vec<u32> = p.up.clone();
                for (i, m) in up.iter_mut().enumerate() {
                    if ideal & (1 << i) != 0 {
                        *m |= 1 << (n - 1);
                    }
                }
                up.push(0);
                let c = Poset { n, up }.canonical_form();
                if seen.insert(c.up.clone()) {
                    out.push(c);
                }
            }
        }
        out
    }))
}

impl Poset {
    /// Downward-closed subsets, as masks.
    pub fn order_ideals(&self) -> Vec<u32> {
        let downs: Vec<u32> = (1..=self.n).map(|i| self.down_mask(i)).collect();
        (0..=full_mask(self.n))
            .filter(|&m| (0..self.n).all(|i| m & (1 << i) == 0 || downs[i] & !m == 0))
            .collect()
    }
}

/// All canonically labeled unit interval orders on `[n]`, in the order of
/// their 312-avoiding permutations.
pub fn unit_interval_orders(n: usize) -> Vec<Poset> {
    avoiders_312(n)
        .iter()
        .map(|w| Poset::uio_from_312_avoiding(w).expect("312-avoiding"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::all_permutations;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn figure_poset() -> Poset {
        Poset::from_relations(5, [(1, 3), (3, 5), (1, 4), (2, 4), (2, 5)]).unwrap()
    }

    /// Brute-force isomorphism over all bijections.
    fn brute_isomorphic(p: &Poset, q: &Poset) -> bool {
        p.n() == q.n() && all_permutations(p.n()).iter().any(|w| &p.relabel(w) == q)
    }

    #[test]
    fn basic_structure() {
        assert_eq!(Poset::chain(3).incomparability_graph().edge_count(), 0);
        assert_eq!(Poset::antichain(4).incomparability_graph(), Graph::complete(4));
        let p = figure_poset();
        assert_eq!(p, Poset::path_inc(5));
        assert_eq!(p.incomparability_graph(), Graph::path(5));
        assert!(p.lt(1, 5));
        assert!(p.is_unit_interval_order());
        assert!(matches!(Poset::from_relations(3, [(1, 2), (2, 3), (3, 1)]), Err(Error::CyclicRelation(_))));
        let sub = p.induced(&[2, 4, 5]);
        assert_eq!(sub.relations(), vec![(1, 2), (1, 3)]);
    }

    #[test]
    fn free_conditions() {
        assert!(Poset::chain(5).is_ab_free(3, 1) && Poset::chain(5).is_ab_free(2, 2));
        assert!(!Poset::chain_sum(2, 2).is_ab_free(2, 2));
        assert!(!Poset::chain_sum(3, 1).is_unit_interval_order());
        assert!(Poset::chain_sum(3, 1).is_ab_free(2, 2));
        assert!(Poset::antichain(4).is_unit_interval_order());
    }

    #[test]
    fn ngr_loops_and_arcs() {
        let d = Poset::chain(3).ngr();
        assert!(d.has_arc(1, 1) && d.has_arc(1, 2) && !d.has_arc(2, 1));
        let d = Poset::antichain(2).ngr();
        assert_eq!(d.ordered_disjoint_cycle_covers(&crate::Partition::row(2)), 1);
        let c = Poset::chain(4).ngr();
        assert_eq!(c.ordered_disjoint_cycle_covers(&crate::Partition::column(4)), 24);
        assert_eq!(d.ordered_disjoint_rooted_cycle_covers(&crate::Partition::row(2)), 2);
    }

    #[test]
    fn poset_counts_up_to_isomorphism() {
        let counts: Vec<usize> = (0..=6).map(|n| all_posets(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 16, 63, 318]);
        for p in all_posets(5).unwrap() {
            assert!(p.is_naturally_labeled());
        }
        assert!(all_posets(8).is_err());
    }

    #[test]
    fn canonical_form_agrees_with_brute_force() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let ps: Vec<Poset> = (0..12).map(|_| Poset::random(5, 0.35, &mut rng)).collect();
        let perms = all_permutations(5);
        for (k, p) in ps.iter().enumerate() {
            let shuffled = p.relabel(&perms[(k * 37) % perms.len()]);
            assert!(p.is_isomorphic(&shuffled));
            for q in &ps {
                assert_eq!(p.is_isomorphic(q), brute_isomorphic(p, q));
            }
        }
    }

    #[test]
    fn uio_examples() {
        let w = Poset::path_inc(5).uio_to_312_avoiding().unwrap();
        assert_eq!(w.to_string(), "2,3,4,5,1");
        assert_eq!(Poset::chain(4).uio_to_312_avoiding().unwrap(), Permutation::identity(4));
        assert_eq!(Poset::antichain(4).uio_to_312_avoiding().unwrap(), Permutation::longest(4));
        assert!(matches!(Poset::chain_sum(3, 1).uio_to_312_avoiding(), Err(Error::NotUnitIntervalOrder)));
        let w312: Permutation = "312".parse().unwrap();
        assert!(matches!(Poset::uio_from_312_avoiding(&w312), Err(Error::Not312Avoiding(_))));
    }

    #[test]
    fn uio_round_trips() {
        for n in 0..=6 {
            let avoiders = avoiders_312(n);
            for w in &avoiders {
                let p = Poset::uio_from_312_avoiding(w).unwrap();
                assert!(p.is_unit_interval_order());
                assert!(p.has_canonical_uio_labeling());
                assert_eq!(&p.uio_to_312_avoiding().unwrap(), w);
            }
            // every unit interval order, canonically relabeled, is reached
            let classes: BTreeSet<Vec<u32>> = avoiders.iter().map(|w| Poset::uio_from_312_avoiding(w).unwrap().canonical_form().up).collect();
            assert_eq!(classes.len(), avoiders.len());
            let uios = all_posets(n).unwrap().iter().filter(|p| p.is_unit_interval_order()).count();
            assert_eq!(uios, avoiders.len());
            for p in all_posets(n).unwrap().iter().filter(|p| p.is_unit_interval_order()) {
                let c = p.uio_canonical_labeling().unwrap();
                assert!(c.is_isomorphic(p));
                let back = Poset::uio_from_312_avoiding(&c.uio_to_312_avoiding().unwrap()).unwrap();
                assert_eq!(back, c);
            }
        }
    }

    #[test]
    fn json() {
        let p: Poset = serde_json::from_str(r#"{"n":5,"relations":[[1,3],[3,5],[1,4],[2,4],[2,5]]}"#).unwrap();
        assert_eq!(p, Poset::path_inc(5));
        let back: Poset = serde_json::from_str(&serde_json::to_string(&p).unwrap()).unwrap();
        assert_eq!(back, p);
        assert!(serde_json::from_str::<Poset>(r#"{"n":2,"relations":[[1,2],[2,1]]}"#).is_err());
    }
}
