//! Permutations of `[n]` in one-line notation.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;

/// `w = w_1 ⋯ w_n` with values in `1..=n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(word: Vec<usize>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &v in &word {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidArgument(format!("{word:?} is not a permutation of [{n}]")));
            }
            seen[v] = true;
        }
        Ok(Permutation(word))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    /// The longest element `n ⋯ 2 1`.
    pub fn longest(n: usize) -> Self {
        Permutation((1..=n).rev().collect())
    }

    /// Longest element of the Young subgroup `S_μ`: each block of consecutive
    /// letters reversed.
    pub fn longest_of_young_subgroup(mu: &Partition) -> Self {
        let mut word = Vec::with_capacity(mu.size());
        let mut start = 0;
        for &p in mu.parts() {
            word.extend((start + 1..=start + p).rev());
            start += p;
        }
        Permutation(word)
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn word(&self) -> &[usize] {
        &self.0
    }

    /// `w(i)` for `1 ≤ i ≤ n`.
    pub fn at(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.n()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation(inv)
    }

    /// The composite `self ∘ other`, i.e. `i ↦ self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.n(), other.n(), "composing permutations of different sizes");
        Permutation(other.0.iter().map(|&i| self.0[i - 1]).collect())
    }

    /// Number of inversions `ℓ(w)`.
    pub fn length(&self) -> usize {
        let w = &self.0;
        (0..w.len()).map(|i| (i + 1..w.len()).filter(|&j| w[i] > w[j]).count()).sum()
    }

    pub fn sign(&self) -> i64 {
        if self.length().is_multiple_of(2) { 1 } else { -1 }
    }

    /// Cycles, each starting at its largest element, ordered by increasing maximum.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n + 1];
        let mut out = Vec::new();
        for start in (1..=n).rev() {
            if seen[start] {
                continue;
            }
            let mut cyc = vec![start];
            seen[start] = true;
            let mut x = self.at(start);
            while x != start {
                seen[x] = true;
                cyc.push(x);
                x = self.at(x);
            }
            out.push(cyc);
        }
        out.reverse();
        out
    }

    pub fn cycle_type(&self) -> Partition {
        Partition::from_unsorted(self.cycles().iter().map(|c| c.len()).collect())
    }

    /// True unless some subsequence of `w` is order-isomorphic to `pattern`.
    pub fn avoids(&self, pattern: &Permutation) -> bool {
        let k = pattern.n();
        let w = &self.0;
        fn rec(w: &[usize], pat: &[usize], start: usize, chosen: &mut Vec<usize>) -> bool {
            if chosen.len() == pat.len() {
                return true;
            }
            let idx = chosen.len();
            for pos in start..w.len() {
                let v = w[pos];
                let ok = chosen.iter().enumerate().all(|(j, &c)| (pat[j] < pat[idx]) == (c < v));
                if ok {
                    chosen.push(v);
                    if rec(w, pat, pos + 1, chosen) {
                        return true;
                    }
                    chosen.pop();
                }
            }
            false
        }
        k > w.len() || !rec(w, &pattern.0, 0, &mut Vec::new())
    }

    /// Smooth permutations avoid both 4231 and 3412.
    pub fn is_smooth(&self) -> bool {
        self.avoids(&Permutation(vec![4, 2, 3, 1])) && self.avoids(&Permutation(vec![3, 4, 1, 2]))
    }

    pub fn avoids_312(&self) -> bool {
        self.avoids(&Permutation(vec![3, 1, 2]))
    }

    /// `r_w(i,j) = #{a ≤ i : w_a ≥ j}` for `1 ≤ i,j ≤ n`.
    fn rank_matrix(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut r = vec![vec![0; n + 2]; n + 1];
        for i in 1..=n {
            for j in 1..=n {
                r[i][j] = r[i - 1][j] + usize::from(self.at(i) >= j);
            }
        }
        r
    }

    /// Bruhat order `self ≤ other` by the rank-matrix criterion.
    pub fn bruhat_leq(&self, other: &Permutation) -> Result<bool> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch { expected: other.n(), found: self.n() });
        }
        let a = self.rank_matrix();
        let b = other.rank_matrix();
        Ok((1..=self.n()).all(|i| (1..=self.n()).all(|j| a[i][j] <= b[i][j])))
    }

    /// A reduced word `s_{i_1} ⋯ s_{i_ℓ}` for `w`, found by bubble sort.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.0.clone();
        let mut word = Vec::new();
        loop {
            let Some(i) = (0..w.len().saturating_sub(1)).find(|&i| w[i] > w[i + 1]) else { break };
            w.swap(i, i + 1);
            word.push(i + 1);
        }
        word.reverse();
        word
    }

    /// `w · s_i`: swap positions `i` and `i+1`.
    pub fn times_simple(&self, i: usize) -> Permutation {
        let mut w = self.0.clone();
        w.swap(i - 1, i);
        Permutation(w)
    }

    /// Erase the parentheses of the standard cycle notation.
    pub fn sigma_flatten(&self) -> Permutation {
        Permutation(self.cycles().concat())
    }

    /// Inverse of [`Permutation::sigma_flatten`]: a new cycle starts at each
    /// left-to-right maximum.
    pub fn sigma_unflatten(&self) -> Permutation {
        let n = self.n();
        let mut out = vec![0; n];
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut max = 0;
        for &v in &self.0 {
            if v > max {
                max = v;
                cycles.push(vec![v]);
            } else {
                cycles.last_mut().expect("first letter starts a cycle").push(v);
            }
        }
        for c in cycles {
            for k in 0..c.len() {
                out[c[k] - 1] = c[(k + 1) % c.len()];
            }
        }
        Permutation(out)
    }

    /// Lexicographically next permutation, if any.
    pub fn next_lex(&self) -> Option<Permutation> {
        let mut w = self.0.clone();
        let i = (0..w.len().saturating_sub(1)).rev().find(|&i| w[i] < w[i + 1])?;
        let j = (i + 1..w.len()).rev().find(|&j| w[j] > w[i])?;
        w.swap(i, j);
        w[i + 1..].reverse();
        Some(Permutation(w))
    }
}

/// All of `S_n` in lexicographic order.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut out = vec![Permutation::identity(n)];
    while let Some(next) = out.last().unwrap().next_lex() {
        out.push(next);
    }
    out
}

/// All `v` with `v ≤ w` in Bruhat order.
pub fn bruhat_lower_interval(w: &Permutation) -> Vec<Permutation> {
    all_permutations(w.n())
        .into_iter()
        .filter(|v| v.bruhat_leq(w).expect("same size"))
        .collect()
}

/// The Young subgroup `S_μ`, acting on consecutive blocks of sizes `μ_1, μ_2, ...`.
pub fn young_subgroup(mu: &Partition) -> Vec<Permutation> {
    let mut out = vec![Vec::new()];
    let mut start = 0;
    for &p in mu.parts() {
        let block = all_permutations(p);
        let mut next = Vec::new();
        for prefix in &out {
            for b in &block {
                let mut w: Vec<usize> = prefix.clone();
                w.extend(b.word().iter().map(|&v| v + start));
                next.push(w);
            }
        }
        out = next;
        start += p;
    }
    out.into_iter().map(Permutation).collect()
}

/// All 312-avoiding permutations of `[n]`.
pub fn avoiders_312(n: usize) -> Vec<Permutation> {
    all_permutations(n).into_iter().filter(|w| w.avoids_312()).collect()
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n() <= 9 {
            let s: String = self.0.iter().map(|v| v.to_string()).collect();
            write!(f, "{s}")
        } else {
            write!(f, "[{self}]")
        }
    }
}

impl FromStr for Permutation {
    type Err = Error;
    /// `5,2,4,3,7,6,1`, or the compact `5243761` when every letter is one digit.
    fn from_str(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let word: Vec<usize> = if s.contains(',') {
            s.split(',')
                .map(|t| t.parse::<usize>().map_err(|_| Error::Parse(format!("bad letter '{t}'"))))
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(|| Error::Parse(format!("bad letter '{c}'"))))
                .collect::<Result<_>>()?
        };
        Permutation::new(word).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl TryFrom<String> for Permutation {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<Permutation> for String {
    fn from(p: Permutation) -> String {
        p.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn w(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    /// Bruhat lower interval as the set of subword products of one reduced word.
    fn subword_interval(w: &Permutation) -> BTreeSet<Permutation> {
        let word = w.reduced_word();
        let mut out = BTreeSet::new();
        for mask in 0u32..(1 << word.len()) {
            let mut v = Permutation::identity(w.n());
            for (k, &i) in word.iter().enumerate() {
                if mask & (1 << k) != 0 {
                    v = v.times_simple(i);
                }
            }
            out.insert(v);
        }
        out
    }

    #[test]
    fn cycle_type_of_example() {
        let v = w("5243761");
        assert_eq!(v.cycles(), vec![vec![2], vec![4, 3], vec![6], vec![7, 1, 5]]);
        assert_eq!(v.cycle_type(), "3,2,1,1".parse().unwrap());
        assert_eq!(Permutation::identity(4).cycle_type(), Partition::column(4));
        assert_eq!(Permutation::identity(4).length(), 0);
    }

    #[test]
    fn patterns() {
        assert!(!w("312").avoids_312());
        assert!(w("231").avoids_312());
        assert!(!w("4231").is_smooth());
        assert!(!w("3412").is_smooth());
        assert!(w("321").is_smooth());
        assert_eq!(avoiders_312(6).len(), 132);
    }

    #[test]
    fn sigma() {
        assert_eq!(w("5243761").sigma_flatten(), w("2436715"));
        assert_eq!(Permutation::identity(5).sigma_flatten(), Permutation::identity(5));
        for n in 1..=6 {
            let images: BTreeSet<_> = all_permutations(n).iter().map(|v| v.sigma_flatten()).collect();
            assert_eq!(images.len() as u64, crate::partition::factorial(n));
            for v in all_permutations(n) {
                assert_eq!(v.sigma_flatten().sigma_unflatten(), v);
            }
        }
    }

    #[test]
    fn bruhat_examples() {
        let top = w("321");
        assert_eq!(bruhat_lower_interval(&top).len(), 6);
        for v in all_permutations(4) {
            assert!(Permutation::identity(4).bruhat_leq(&v).unwrap());
            assert!(v.bruhat_leq(&v).unwrap());
        }
        assert!(w("12").bruhat_leq(&w("123")).is_err());
    }

    #[test]
    fn bruhat_agrees_with_subword_oracle() {
        for n in 1..=5 {
            for top in all_permutations(n) {
                let want = subword_interval(&top);
                let got: BTreeSet<_> = bruhat_lower_interval(&top).into_iter().collect();
                assert_eq!(got, want, "{top:?}");
            }
        }
    }

    #[test]
    fn young_subgroup_is_lower_interval_of_its_longest_element() {
        for n in 1..=5 {
            for mu in crate::partition::partitions_of(n) {
                let top = Permutation::longest_of_young_subgroup(&mu);
                let a: BTreeSet<_> = young_subgroup(&mu).into_iter().collect();
                let b: BTreeSet<_> = bruhat_lower_interval(&top).into_iter().collect();
                assert_eq!(a, b);
            }
        }
    }

    #[test]
    fn reduced_words_have_length() {
        for v in all_permutations(5) {
            let word = v.reduced_word();
            assert_eq!(word.len(), v.length());
            let mut u = Permutation::identity(5);
            for &i in &word {
                u = u.times_simple(i);
            }
            assert_eq!(u, v);
        }
    }

    #[test]
    fn parse_forms() {
        assert_eq!(w("5,2,4,3,7,6,1"), w("5243761"));
        assert!("1,1".parse::<Permutation>().is_err());
        assert_eq!(w("231").inverse(), w("312"));
        assert_eq!(w("231").compose(&w("231").inverse()), Permutation::identity(3));
    }
}
