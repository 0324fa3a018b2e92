//! The group algebra `Q[q][S_n]` (used at `q = 1`) and Kazhdan-Lusztig basis
//! elements of smooth permutations.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{bruhat_lower_interval, young_subgroup, Permutation};
use crate::partition::Partition;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GroupRepr", into = "GroupRepr")]
pub struct GroupAlgebraElement {
    n: usize,
    terms: BTreeMap<Permutation, Scalar>,
}

#[derive(Serialize, Deserialize)]
struct GroupTerm {
    w: Permutation,
    c: Scalar,
}

#[derive(Serialize, Deserialize)]
struct GroupRepr {
    n: usize,
    terms: Vec<GroupTerm>,
}

impl TryFrom<GroupRepr> for GroupAlgebraElement {
    type Error = Error;
    fn try_from(r: GroupRepr) -> Result<Self> {
        let mut g = GroupAlgebraElement::zero(r.n);
        for t in r.terms {
            if t.w.n() != r.n {
                return Err(Error::SizeMismatch { expected: r.n, found: t.w.n() });
            }
            g.add_term(&t.w, &t.c);
        }
        Ok(g)
    }
}

impl From<GroupAlgebraElement> for GroupRepr {
    fn from(g: GroupAlgebraElement) -> Self {
        GroupRepr { n: g.n, terms: g.terms.into_iter().map(|(w, c)| GroupTerm { w, c }).collect() }
    }
}

impl GroupAlgebraElement {
    pub fn zero(n: usize) -> Self {
        GroupAlgebraElement { n, terms: BTreeMap::new() }
    }

    pub fn from_permutation(w: &Permutation) -> Self {
        let mut g = GroupAlgebraElement::zero(w.n());
        g.add_term(w, &Scalar::one());
        g
    }

    /// Unit-coefficient sum of the given permutations.
    pub fn sum_of<'a>(n: usize, ws: impl IntoIterator<Item = &'a Permutation>) -> Self {
        let mut g = GroupAlgebraElement::zero(n);
        for w in ws {
            g.add_term(w, &Scalar::one());
        }
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeff(&self, w: &Permutation) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &Scalar)> {
        self.terms.iter()
    }

    pub fn support_len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, w: &Permutation, c: &Scalar) {
        assert_eq!(w.n(), self.n, "permutation of the wrong size");
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(w.clone()).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.remove(w);
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = GroupAlgebraElement::zero(self.n);
        for (w, v) in &self.terms {
            out.add_term(w, &(v * c));
        }
        out
    }
}

impl Add<&GroupAlgebraElement> for &GroupAlgebraElement {
    type Output = GroupAlgebraElement;
    fn add(self, rhs: &GroupAlgebraElement) -> GroupAlgebraElement {
        assert_eq!(self.n, rhs.n, "adding elements of different group algebras");
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w, c);
        }
        out
    }
}

impl Sub<&GroupAlgebraElement> for &GroupAlgebraElement {
    type Output = GroupAlgebraElement;
    fn sub(self, rhs: &GroupAlgebraElement) -> GroupAlgebraElement {
        self + &(-rhs)
    }
}

impl Neg for &GroupAlgebraElement {
    type Output = GroupAlgebraElement;
    fn neg(self) -> GroupAlgebraElement {
        self.scale(&Scalar::from_int(-1))
    }
}

impl Mul<&GroupAlgebraElement> for &GroupAlgebraElement {
    type Output = GroupAlgebraElement;
    /// Convolution product; `u · v` is the composite `u ∘ v`.
    fn mul(self, rhs: &GroupAlgebraElement) -> GroupAlgebraElement {
        assert_eq!(self.n, rhs.n, "multiplying elements of different group algebras");
        let mut out = GroupAlgebraElement::zero(self.n);
        for (u, a) in &self.terms {
            for (v, b) in &rhs.terms {
                out.add_term(&u.compose(v), &(a * b));
            }
        }
        out
    }
}

/// `C'_w(1) = Σ_{v ≤ w} v` for smooth `w`.
pub fn kl_basis_element_q1(w: &Permutation) -> Result<GroupAlgebraElement> {
    if !w.is_smooth() {
        return Err(Error::NonSmooth(w.to_string()));
    }
    Ok(GroupAlgebraElement::sum_of(w.n(), &bruhat_lower_interval(w)))
}

/// `Σ_{v ∈ S_μ} v`, equal to `C'_{w_μ}(1)`.
pub fn young_subgroup_sum(mu: &Partition) -> GroupAlgebraElement {
    GroupAlgebraElement::sum_of(mu.size(), &young_subgroup(mu))
}
