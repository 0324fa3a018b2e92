//! Integer partitions, compositions and descent sets: the index language used
//! by every coefficient table in the crate.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidArgument(format!("partition {parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidArgument(format!("partition {parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    /// Sorts arbitrary positive parts into a partition; zeros are dropped.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The one-row partition `(n)`.
    pub fn row(n: usize) -> Self {
        if n == 0 { Partition::empty() } else { Partition(vec![n]) }
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition(vec![1; n])
    }

    /// The hook `(k, 1^{n-k})`.
    pub fn hook(n: usize, k: usize) -> Result<Self> {
        if k == 0 || k > n {
            return Err(Error::InvalidArgument(format!("hook ({k},1^{}) of {n}", n.saturating_sub(k))));
        }
        let mut parts = vec![k];
        parts.extend(std::iter::repeat_n(1, n - k));
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// `|λ|`.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// `ℓ(λ)`, the number of parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Multiplicity of the part value `i`.
    pub fn multiplicity(&self, i: usize) -> usize {
        self.0.iter().filter(|&&p| p == i).count()
    }

    pub fn transpose(&self) -> Partition {
        let width = self.part(0);
        Partition((1..=width).map(|i| self.0.iter().filter(|&&p| p >= i).count()).collect())
    }

    pub fn is_hook(&self) -> bool {
        self.0.iter().skip(1).all(|&p| p == 1)
    }

    pub fn is_rectangle(&self) -> bool {
        self.0.windows(2).all(|w| w[0] == w[1])
    }

    /// `z_λ = Π i^{m_i} m_i!` as a machine integer.
    pub fn z(&self) -> u64 {
        let mut acc: u64 = self.0.iter().map(|&p| p as u64).product();
        let mut i = 0;
        while i < self.0.len() {
            let mut j = i;
            while j < self.0.len() && self.0[j] == self.0[i] {
                j += 1;
            }
            acc *= factorial(j - i);
            i = j;
        }
        acc
    }

    /// `(-1)^{|λ| - ℓ(λ)}`, the sign of any permutation of cycle type `λ`.
    pub fn sign(&self) -> i64 {
        if (self.size() - self.len()).is_multiple_of(2) { 1 } else { -1 }
    }

    /// Exponential notation, e.g. `4^21^6` for `(4,4,1,1,1,1,1,1)`.
    pub fn to_exponential(&self) -> String {
        let mut out = String::new();
        let mut i = 0;
        while i < self.0.len() {
            let mut j = i;
            while j < self.0.len() && self.0[j] == self.0[i] {
                j += 1;
            }
            let part = self.0[i].to_string();
            let exp = j - i;
            let braced = |s: String| if s.len() > 1 { format!("{{{s}}}") } else { s };
            out.push_str(&braced(part));
            if exp > 1 {
                out.push('^');
                out.push_str(&braced(exp.to_string()));
            }
            i = j;
        }
        out
    }

    /// Concatenate parts and re-sort.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Partition::from_unsorted(parts)
    }

    /// Cells `(row, col)` of the Young diagram, 0-based, row 0 the longest.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
            .collect()
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Vec<usize> {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

/// Parse a single token of exponential notation: a digit or a braced number.
fn read_number(chars: &[char], pos: &mut usize) -> Result<usize> {
    if chars.get(*pos) == Some(&'{') {
        let end = chars[*pos..]
            .iter()
            .position(|&c| c == '}')
            .ok_or_else(|| Error::Parse("unclosed brace in partition".into()))?;
        let s: String = chars[*pos + 1..*pos + end].iter().collect();
        *pos += end + 1;
        s.parse().map_err(|_| Error::Parse(format!("bad number '{s}' in partition")))
    } else {
        let c = chars
            .get(*pos)
            .ok_or_else(|| Error::Parse("truncated partition".into()))?;
        let d = c
            .to_digit(10)
            .ok_or_else(|| Error::Parse(format!("unexpected '{c}' in partition")))?;
        *pos += 1;
        Ok(d as usize)
    }
}

fn parse_exponential(s: &str) -> Result<Vec<usize>> {
    let chars: Vec<char> = s.chars().collect();
    let mut parts = Vec::new();
    let mut pos = 0;
    while pos < chars.len() {
        let part = read_number(&chars, &mut pos)?;
        let mut mult = 1;
        if chars.get(pos) == Some(&'^') {
            pos += 1;
            mult = read_number(&chars, &mut pos)?;
        }
        parts.extend(std::iter::repeat_n(part, mult));
    }
    Ok(parts)
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `3,1,1`, `4^2,1^6`, the exponential form `31^2` (single-digit
    /// parts and exponents, or braced `1^{10}`), and the empty string.
    fn from_str(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let s = s.trim_start_matches('(').trim_end_matches(')');
        if s.is_empty() || s == "\u{2205}" {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        if s.contains(',') {
            for tok in s.split(',') {
                match tok.split_once('^') {
                    Some((p, m)) => {
                        let p: usize = p.parse().map_err(|_| Error::Parse(format!("bad part '{tok}'")))?;
                        let m: usize = m
                            .trim_start_matches('{')
                            .trim_end_matches('}')
                            .parse()
                            .map_err(|_| Error::Parse(format!("bad exponent '{tok}'")))?;
                        parts.extend(std::iter::repeat_n(p, m));
                    }
                    None => parts.push(tok.parse().map_err(|_| Error::Parse(format!("bad part '{tok}'")))?),
                }
            }
        } else {
            parts = parse_exponential(s)?;
        }
        Partition::new(parts).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// A sequence of positive integers (an ordered rearrangement of a partition).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidArgument(format!("composition {parts:?} has a zero part")));
        }
        Ok(Composition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Partial sums `{α1, α1+α2, ...}` excluding the total.
    pub fn to_descent_set(&self) -> DescentSet {
        let n = self.size();
        let mut acc = 0;
        let mut set = Vec::new();
        for &p in &self.0[..self.0.len().saturating_sub(1)] {
            acc += p;
            set.push(acc);
        }
        DescentSet { n, set }
    }
}

impl TryFrom<Vec<usize>> for Composition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Composition::new(v)
    }
}

impl From<Composition> for Vec<usize> {
    fn from(c: Composition) -> Vec<usize> {
        c.0
    }
}

impl From<&Partition> for Composition {
    fn from(p: &Partition) -> Composition {
        Composition(p.0.clone())
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl FromStr for Composition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Ok(Composition(Vec::new()));
        }
        let parts = s
            .split(',')
            .map(|t| t.parse::<usize>().map_err(|_| Error::Parse(format!("bad part '{t}'"))))
            .collect::<Result<Vec<_>>>()?;
        Composition::new(parts).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// A subset `S` of `[n-1]`, kept sorted.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DescentSet {
    n: usize,
    set: Vec<usize>,
}

impl DescentSet {
    pub fn new(n: usize, mut set: Vec<usize>) -> Result<Self> {
        set.sort_unstable();
        set.dedup();
        if set.iter().any(|&i| i == 0 || i >= n) {
            return Err(Error::InvalidArgument(format!("{set:?} is not a subset of [{}]", n.saturating_sub(1))));
        }
        Ok(DescentSet { n, set })
    }

    /// Bit `i-1` set iff `i ∈ S`.
    pub fn from_mask(n: usize, mask: u32) -> Self {
        let set = (1..n).filter(|&i| mask & (1 << (i - 1)) != 0).collect();
        DescentSet { n, set }
    }

    pub fn mask(&self) -> u32 {
        self.set.iter().fold(0, |m, &i| m | (1 << (i - 1)))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> &[usize] {
        &self.set
    }

    pub fn len(&self) -> usize {
        self.set.len()
    }

    pub fn is_empty(&self) -> bool {
        self.set.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.set.binary_search(&i).is_ok()
    }

    pub fn complement(&self) -> DescentSet {
        DescentSet { n: self.n, set: (1..self.n).filter(|&i| !self.contains(i)).collect() }
    }

    pub fn is_subset(&self, other: &DescentSet) -> bool {
        self.set.iter().all(|&i| other.contains(i))
    }

    pub fn to_composition(&self) -> Composition {
        if self.n == 0 {
            return Composition(Vec::new());
        }
        let mut parts = Vec::new();
        let mut prev = 0;
        for &i in self.set.iter().chain(std::iter::once(&self.n)) {
            parts.push(i - prev);
            prev = i;
        }
        Composition(parts)
    }

    /// All subsets of `[n-1]`, in order of their bitmask.
    pub fn all(n: usize) -> Vec<DescentSet> {
        let bits = n.saturating_sub(1);
        (0..(1u32 << bits)).map(|m| DescentSet::from_mask(n, m)).collect()
    }
}

impl fmt::Display for DescentSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.set.iter().map(|p| p.to_string()).collect();
        write!(f, "{{{}}}", s.join(","))
    }
}

impl fmt::Debug for DescentSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl DescentSet {
    /// Parse `{1,3}` / `1,3` / `` for a given `n`.
    pub fn parse(n: usize, s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace() && *c != '{' && *c != '}').collect();
        if s.is_empty() {
            return DescentSet::new(n, Vec::new());
        }
        let set = s
            .split(',')
            .map(|t| t.parse::<usize>().map_err(|_| Error::Parse(format!("bad element '{t}'"))))
            .collect::<Result<Vec<_>>>()?;
        DescentSet::new(n, set)
    }
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k as u64).fold(1, |acc, i| acc * (n as u64 - i) / (i + 1))
}

/// All partitions of `n` in reverse lexicographic order: `(n)` first, `(1^n)` last.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for first in (1..=n.min(max)).rev() {
            prefix.push(first);
            rec(n - first, first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// All compositions of `n`, first part largest first (reverse lexicographic).
pub fn compositions_of(n: usize) -> Vec<Composition> {
    fn rec(n: usize, prefix: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if n == 0 {
            out.push(Composition(prefix.clone()));
            return;
        }
        for first in (1..=n).rev() {
            prefix.push(first);
            rec(n - first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), &mut out);
    out
}

/// The partition obtained by sorting the parts of `α` decreasingly.
pub fn rearrangement_class(alpha: &Composition) -> Partition {
    Partition::from_unsorted(alpha.0.clone())
}

pub fn transpose(lambda: &Partition) -> Partition {
    lambda.transpose()
}

/// `z_λ` as an exact scalar.
pub fn z_lambda(lambda: &Partition) -> Scalar {
    Scalar::from_int(lambda.z() as i64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(p("3,1,1,1").transpose(), p("4,1,1"));
        assert_eq!(Partition::row(5).transpose(), Partition::column(5));
        assert_eq!(p("2,2").transpose(), p("2,2"));
        assert_eq!(Partition::empty().transpose(), Partition::empty());
    }

    #[test]
    fn transpose_is_involution() {
        for n in 0..=10 {
            for l in partitions_of(n) {
                assert_eq!(l.transpose().transpose(), l);
                assert_eq!(l.transpose().size(), n);
            }
        }
    }

    #[test]
    fn z_examples() {
        assert_eq!(z_lambda(&p("1,1,1")), Scalar::from_int(6));
        assert_eq!(p("7").z(), 7);
        assert_eq!(p("2,2,1").z(), 8);
    }

    #[test]
    fn class_sizes_sum_to_factorial() {
        for n in 0..=8 {
            let total: u64 = partitions_of(n).iter().map(|l| factorial(n) / l.z()).sum();
            assert_eq!(total, factorial(n));
        }
    }

    #[test]
    fn enumeration_counts_and_order() {
        assert_eq!(partitions_of(4).len(), 5);
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        assert_eq!(partitions_of(8).len(), 22);
        let four: Vec<String> = partitions_of(4).iter().map(|l| l.to_string()).collect();
        assert_eq!(four, ["4", "3,1", "2,2", "2,1,1", "1,1,1,1"]);
        assert_eq!(compositions_of(5).len(), 16);
        assert_eq!(compositions_of(0).len(), 1);
        let c: Composition = "1,3".parse().unwrap();
        assert_eq!(rearrangement_class(&c), p("3,1"));
    }

    #[test]
    fn parse_forms() {
        assert_eq!(p("4^21^6").parts(), &[4, 4, 1, 1, 1, 1, 1, 1]);
        assert_eq!(p("31^2"), p("3,1,1"));
        assert_eq!(p("1^{10}").size(), 10);
        assert_eq!(p("4^2,1^6"), p("4^21^6"));
        assert_eq!(p("4^21^6").to_exponential(), "4^21^6");
        assert_eq!(p(""), Partition::empty());
        assert!("1,3".parse::<Partition>().is_err());
        assert!("3,x".parse::<Partition>().is_err());
    }

    #[test]
    fn descent_sets_and_compositions() {
        let c: Composition = "2,1,3".parse().unwrap();
        let s = c.to_descent_set();
        assert_eq!(s.elements(), &[2, 3]);
        assert_eq!(s.to_composition(), c);
        assert_eq!(DescentSet::all(4).len(), 8);
        for d in DescentSet::all(5) {
            assert_eq!(d.to_composition().to_descent_set(), d);
            assert_eq!(DescentSet::from_mask(5, d.mask()), d);
        }
        assert!(DescentSet::new(3, vec![3]).is_err());
        assert_eq!(DescentSet::parse(4, "{1,3}").unwrap().complement().elements(), &[2]);
    }
}
