//! Degree-`n` symmetric functions in the six classical bases, together with
//! their quasisymmetric expansions.

pub mod characters;
pub mod oracle;
pub mod qsym;
pub mod ribbon;
mod tables;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::RMatrix;
use crate::partition::{factorial, partitions_of, Partition};
use crate::scalar::{Rational, Scalar};

pub use characters::murnaghan_nakayama;
pub use oracle::{kostka_number, monomial_oracle};
pub use qsym::{b_statistic, qsym_f_to_m, qsym_m_to_f, to_fundamental, QBasis, QSymFunc};
pub use ribbon::{inverse_kostka_ribbon, ribbon_expansion, special_ribbon_diagrams, RibbonDiagram};
pub use tables::MAX_DEGREE;

pub(crate) use tables::tables;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Basis {
    #[serde(rename = "m")]
    M,
    #[serde(rename = "e")]
    E,
    #[serde(rename = "h")]
    H,
    #[serde(rename = "p")]
    P,
    #[serde(rename = "s")]
    S,
    #[serde(rename = "f")]
    F,
}

impl Basis {
    pub const ALL: [Basis; 6] = [Basis::M, Basis::E, Basis::H, Basis::P, Basis::S, Basis::F];

    pub(crate) fn index(self) -> usize {
        self as usize
    }

    pub fn letter(self) -> char {
        match self {
            Basis::M => 'm',
            Basis::E => 'e',
            Basis::H => 'h',
            Basis::P => 'p',
            Basis::S => 's',
            Basis::F => 'f',
        }
    }

    /// The basis that `ω` maps this one onto.
    pub fn omega(self) -> Basis {
        match self {
            Basis::E => Basis::H,
            Basis::H => Basis::E,
            Basis::M => Basis::F,
            Basis::F => Basis::M,
            b => b,
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl FromStr for Basis {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.trim().to_ascii_lowercase().as_str() {
            "m" | "monomial" => Basis::M,
            "e" | "elementary" => Basis::E,
            "h" | "homogeneous" => Basis::H,
            "p" | "power" => Basis::P,
            "s" | "schur" => Basis::S,
            "f" | "forgotten" => Basis::F,
            other => return Err(Error::Parse(format!("unknown basis '{other}'"))),
        })
    }
}

/// An element of `Q[q] ⊗ Λ_n` written in one basis.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "SymFuncRepr", into = "SymFuncRepr")]
pub struct SymFunc {
    n: usize,
    basis: Basis,
    coeffs: BTreeMap<Partition, Scalar>,
}

#[derive(Serialize, Deserialize)]
struct SymFuncRepr {
    n: usize,
    basis: Basis,
    coeffs: BTreeMap<String, Scalar>,
}

impl TryFrom<SymFuncRepr> for SymFunc {
    type Error = Error;
    fn try_from(r: SymFuncRepr) -> Result<Self> {
        let mut terms = Vec::new();
        for (k, v) in r.coeffs {
            terms.push((k.parse::<Partition>()?, v));
        }
        SymFunc::from_terms(r.n, r.basis, terms)
    }
}

impl From<SymFunc> for SymFuncRepr {
    fn from(f: SymFunc) -> Self {
        SymFuncRepr {
            n: f.n,
            basis: f.basis,
            coeffs: f.coeffs.into_iter().map(|(k, v)| (k.to_string(), v)).collect(),
        }
    }
}

impl SymFunc {
    pub fn zero(n: usize, basis: Basis) -> Self {
        SymFunc { n, basis, coeffs: BTreeMap::new() }
    }

    /// The basis element `b_λ`.
    pub fn basis_element(basis: Basis, lambda: &Partition) -> Self {
        let mut f = SymFunc::zero(lambda.size(), basis);
        f.coeffs.insert(lambda.clone(), Scalar::one());
        f
    }

    pub fn from_terms(n: usize, basis: Basis, terms: impl IntoIterator<Item = (Partition, Scalar)>) -> Result<Self> {
        let mut f = SymFunc::zero(n, basis);
        for (lambda, c) in terms {
            if lambda.size() != n {
                return Err(Error::SizeMismatch { expected: n, found: lambda.size() });
            }
            f.add_term(&lambda, &c);
        }
        Ok(f)
    }

    /// Coefficient vector over the canonical partition order.
    pub fn from_vector(n: usize, basis: Basis, v: &[Scalar]) -> Self {
        let parts = partitions_of(n);
        assert_eq!(parts.len(), v.len(), "vector length must be the number of partitions of {n}");
        let coeffs = parts.into_iter().zip(v.iter().cloned()).filter(|(_, c)| !c.is_zero()).collect();
        SymFunc { n, basis, coeffs }
    }

    pub fn to_vector(&self) -> Vec<Scalar> {
        partitions_of(self.n).iter().map(|l| self.coeff(l)).collect()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn coeff(&self, lambda: &Partition) -> Scalar {
        self.coeffs.get(lambda).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Scalar)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add_term(&mut self, lambda: &Partition, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(lambda.clone()).or_default();
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(lambda);
        }
    }

    pub fn scale(&self, c: &Scalar) -> SymFunc {
        let coeffs = self
            .coeffs
            .iter()
            .map(|(k, v)| (k.clone(), v * c))
            .filter(|(_, v)| !v.is_zero())
            .collect();
        SymFunc { n: self.n, basis: self.basis, coeffs }
    }

    /// Rewrite in another basis.
    pub fn convert(&self, target: Basis) -> SymFunc {
        if target == self.basis {
            return self.clone();
        }
        let t = tables(self.n);
        let m = t.matrix(self.basis, target);
        let mut out = vec![Scalar::zero(); t.parts.len()];
        for (lambda, c) in &self.coeffs {
            let row = &m[t.idx(lambda)];
            for (j, v) in row.iter().enumerate() {
                if !v.is_zero() {
                    out[j] += &c.scale(v);
                }
            }
        }
        SymFunc::from_vector(self.n, target, &out)
    }

    /// Same element of `Λ_n`, regardless of the bases used to write them.
    pub fn same_as(&self, other: &SymFunc) -> bool {
        self.n == other.n && other.convert(self.basis) == *self
    }

    /// The involution `ω`, applied basis-wise.
    pub fn omega(&self) -> SymFunc {
        let basis = self.basis.omega();
        let coeffs = self
            .coeffs
            .iter()
            .map(|(l, c)| match self.basis {
                Basis::S => (l.transpose(), c.clone()),
                Basis::P if l.sign() < 0 => (l.clone(), -c),
                _ => (l.clone(), c.clone()),
            })
            .collect();
        SymFunc { n: self.n, basis, coeffs }
    }

    /// Product in `Λ`, computed in the power-sum basis and returned in the basis of `self`.
    pub fn multiply(&self, other: &SymFunc) -> SymFunc {
        let a = self.convert(Basis::P);
        let b = other.convert(Basis::P);
        let mut out = SymFunc::zero(self.n + other.n, Basis::P);
        for (la, ca) in &a.coeffs {
            for (lb, cb) in &b.coeffs {
                out.add_term(&la.union(lb), &(ca * cb));
            }
        }
        out.convert(self.basis)
    }

    /// Specialize `q = 1` in every coefficient.
    pub fn at_q_one(&self) -> SymFunc {
        let coeffs = self
            .coeffs
            .iter()
            .map(|(k, v)| (k.clone(), Scalar::from_rational(v.at_one())))
            .filter(|(_, v)| !v.is_zero())
            .collect();
        SymFunc { n: self.n, basis: self.basis, coeffs }
    }

    fn check_same_degree(&self, other: &SymFunc) {
        assert_eq!(self.n, other.n, "adding symmetric functions of different degrees");
    }
}

impl Add<&SymFunc> for &SymFunc {
    type Output = SymFunc;
    fn add(self, rhs: &SymFunc) -> SymFunc {
        self.check_same_degree(rhs);
        let mut out = self.clone();
        for (l, c) in rhs.convert(self.basis).coeffs {
            out.add_term(&l, &c);
        }
        out
    }
}

impl Sub<&SymFunc> for &SymFunc {
    type Output = SymFunc;
    fn sub(self, rhs: &SymFunc) -> SymFunc {
        self + &(-rhs)
    }
}

impl Neg for &SymFunc {
    type Output = SymFunc;
    fn neg(self) -> SymFunc {
        self.scale(&Scalar::from_int(-1))
    }
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let parts = partitions_of(self.n);
        let mut first = true;
        for l in &parts {
            let Some(c) = self.coeffs.get(l) else { continue };
            let c = c.to_string();
            let (neg, body) = match c.strip_prefix('-') {
                Some(rest) if !rest.contains(['+', '-']) => (true, rest.to_string()),
                _ => (false, c.clone()),
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let body = if body.contains(['+', '-']) { format!("({body})") } else { body };
            let label: String = l.parts().iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",");
            if body == "1" {
                write!(f, "{}_{{{label}}}", self.basis)?;
            } else {
                write!(f, "{body}*{}_{{{label}}}", self.basis)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymFunc[n={}]({self})", self.n)
    }
}

/// A change-of-basis matrix: `from_λ = Σ_μ entries[λ][μ] to_μ` over the
/// canonical partition order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransitionMatrix {
    pub n: usize,
    pub from: Basis,
    pub to: Basis,
    pub partitions: Vec<Partition>,
    pub entries: RMatrix,
}

impl TransitionMatrix {
    pub fn get(&self, row: &Partition, col: &Partition) -> Rational {
        let t = tables(self.n);
        self.entries[t.idx(row)][t.idx(col)].clone()
    }
}

pub fn transition(n: usize, from: Basis, to: Basis) -> TransitionMatrix {
    let t = tables(n);
    TransitionMatrix { n, from, to, partitions: t.parts.clone(), entries: t.matrix(from, to).clone() }
}

/// Kostka matrix `K_{λ,μ}`, the `s → m` transition.
pub fn kostka(n: usize) -> TransitionMatrix {
    transition(n, Basis::S, Basis::M)
}

/// Inverse Kostka matrix `K⁻¹_{λ,μ}`, the `m → s` transition.
pub fn inverse_kostka(n: usize) -> TransitionMatrix {
    transition(n, Basis::M, Basis::S)
}

/// Character table as the `p → s` transition: entry `[λ][μ] = χ^μ(λ)`.
pub fn character_table(n: usize) -> TransitionMatrix {
    transition(n, Basis::P, Basis::S)
}

/// `χ^μ(λ)` read from the cached table.
pub fn character(mu: &Partition, lambda: &Partition) -> Rational {
    let t = tables(mu.size());
    t.matrix(Basis::P, Basis::S)[t.idx(lambda)][t.idx(mu)].clone()
}

/// Ways to delete edges of the cycle `C_n` so that the remaining paths have
/// vertex counts `μ`.
pub fn cycle_removal_coeff(mu: &Partition) -> Scalar {
    let n = mu.size();
    if n == 0 {
        return Scalar::one();
    }
    // Each cyclic arrangement of the parts is realized n/ℓ times per rotation class.
    let l = mu.len() as u64;
    let mut arrangements = factorial(mu.len());
    for v in 1..=n {
        arrangements /= factorial(mu.multiplicity(v));
    }
    Scalar::from_int((n as u64 * arrangements / l) as i64)
}
