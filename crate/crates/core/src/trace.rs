//! Class functions on `S_n`, their six standard bases, the Frobenius map and
//! the generating function `Y(g)`.

use std::fmt;
use std::ops::{Add, Sub};
use std::str::FromStr;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group_algebra::{young_subgroup_sum, GroupAlgebraElement};
use crate::partition::{factorial, partitions_of, Partition};
use crate::scalar::{Rational, Scalar};
use crate::symfunc::{tables, Basis, SymFunc};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TraceBasis {
    Epsilon,
    Eta,
    Chi,
    Psi,
    Phi,
    Gamma,
}

impl TraceBasis {
    pub const ALL: [TraceBasis; 6] =
        [TraceBasis::Epsilon, TraceBasis::Eta, TraceBasis::Chi, TraceBasis::Psi, TraceBasis::Phi, TraceBasis::Gamma];

    /// The symmetric function basis matched to this one by the Frobenius map.
    pub fn frobenius_partner(self) -> Basis {
        match self {
            TraceBasis::Epsilon => Basis::E,
            TraceBasis::Eta => Basis::H,
            TraceBasis::Chi => Basis::S,
            TraceBasis::Psi => Basis::P,
            TraceBasis::Phi => Basis::M,
            TraceBasis::Gamma => Basis::F,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            TraceBasis::Epsilon => "epsilon",
            TraceBasis::Eta => "eta",
            TraceBasis::Chi => "chi",
            TraceBasis::Psi => "psi",
            TraceBasis::Phi => "phi",
            TraceBasis::Gamma => "gamma",
        }
    }
}

impl fmt::Display for TraceBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TraceBasis {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.trim().to_ascii_lowercase().as_str() {
            "epsilon" | "eps" | "ε" => TraceBasis::Epsilon,
            "eta" | "η" => TraceBasis::Eta,
            "chi" | "χ" => TraceBasis::Chi,
            "psi" | "ψ" => TraceBasis::Psi,
            "phi" | "φ" => TraceBasis::Phi,
            "gamma" | "γ" => TraceBasis::Gamma,
            other => return Err(Error::Parse(format!("unknown trace basis '{other}'"))),
        })
    }
}

/// A class function, stored by its value on each cycle type in canonical order.
#[derive(Clone, PartialEq, Eq)]
pub struct Trace {
    n: usize,
    values: Vec<Scalar>,
}

impl Trace {
    pub fn zero(n: usize) -> Self {
        Trace { n, values: vec![Scalar::zero(); partitions_of(n).len()] }
    }

    pub fn from_values(n: usize, values: Vec<Scalar>) -> Result<Self> {
        let expected = partitions_of(n).len();
        if values.len() != expected {
            return Err(Error::SizeMismatch { expected, found: values.len() });
        }
        Ok(Trace { n, values })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[Scalar] {
        &self.values
    }

    /// `θ(w)` for any `w` of cycle type `λ`.
    pub fn value(&self, lambda: &Partition) -> Scalar {
        self.values[tables(self.n).idx(lambda)].clone()
    }

    pub fn scale(&self, c: &Scalar) -> Trace {
        Trace { n: self.n, values: self.values.iter().map(|v| v * c).collect() }
    }

    /// Coefficients `a_λ` with `θ = Σ_λ a_λ θ_basis^λ`, in canonical order.
    pub fn coordinates(&self, basis: TraceBasis) -> Vec<Scalar> {
        frobenius(self).convert(basis.frobenius_partner()).to_vector()
    }
}

impl Add<&Trace> for &Trace {
    type Output = Trace;
    fn add(self, rhs: &Trace) -> Trace {
        assert_eq!(self.n, rhs.n, "adding traces of different degrees");
        Trace { n: self.n, values: self.values.iter().zip(&rhs.values).map(|(a, b)| a + b).collect() }
    }
}

impl Sub<&Trace> for &Trace {
    type Output = Trace;
    fn sub(self, rhs: &Trace) -> Trace {
        assert_eq!(self.n, rhs.n, "subtracting traces of different degrees");
        Trace { n: self.n, values: self.values.iter().zip(&rhs.values).map(|(a, b)| a - b).collect() }
    }
}

impl fmt::Debug for Trace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts = partitions_of(self.n);
        let items: Vec<String> = parts.iter().zip(&self.values).map(|(p, v)| format!("{p}: {v}")).collect();
        write!(f, "Trace[n={}]{{{}}}", self.n, items.join(", "))
    }
}

/// `θ^λ_basis` built from the character table and Kostka data:
/// `θ^λ = Σ_μ M_{λ,μ} χ^μ` where `M` is the transition from the partner basis to Schur.
pub fn trace_basis(n: usize, basis: TraceBasis, lambda: &Partition) -> Result<Trace> {
    if lambda.size() != n {
        return Err(Error::SizeMismatch { expected: n, found: lambda.size() });
    }
    let t = tables(n);
    let m = t.matrix(basis.frobenius_partner(), Basis::S);
    let chi = t.matrix(Basis::P, Basis::S);
    let row = &m[t.idx(lambda)];
    let values = (0..t.parts.len())
        .map(|k| {
            // value on class k: Σ_μ M_{λ,μ} χ^μ(class k)
            let v: Rational = row
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(mu, c)| c * &chi[k][mu])
                .sum();
            Scalar::from_rational(v)
        })
        .collect();
    Ok(Trace { n, values })
}

/// `ψ^λ(w) = z_λ` on the class `λ` and zero elsewhere.
pub fn psi_direct(n: usize, lambda: &Partition) -> Trace {
    let mut th = Trace::zero(n);
    let t = tables(n);
    th.values[t.idx(lambda)] = Scalar::from_int(lambda.z() as i64);
    th
}

/// `Σ_{ctype(w) = λ} g(w)` for every class, in canonical order.
pub fn class_sums(g: &GroupAlgebraElement) -> Vec<Scalar> {
    let t = tables(g.n());
    let mut out = vec![Scalar::zero(); t.parts.len()];
    for (w, c) in g.terms() {
        out[t.idx(&w.cycle_type())] += c;
    }
    out
}

/// `θ(g) = Σ_w g(w) θ(ctype w)`.
pub fn evaluate(theta: &Trace, g: &GroupAlgebraElement) -> Result<Scalar> {
    if theta.n != g.n() {
        return Err(Error::SizeMismatch { expected: theta.n, found: g.n() });
    }
    Ok(class_sums(g).iter().zip(&theta.values).map(|(a, b)| a * b).sum())
}

/// `θ^λ_basis(g)` for every `λ`, in canonical order.
pub fn evaluate_basis(basis: TraceBasis, g: &GroupAlgebraElement) -> Vec<Scalar> {
    let n = g.n();
    let sums = class_sums(g);
    partitions_of(n)
        .iter()
        .map(|l| {
            let th = trace_basis(n, basis, l).expect("partition of n");
            sums.iter().zip(&th.values).map(|(a, b)| a * b).sum()
        })
        .collect()
}

/// `Frob(θ) = Σ_λ θ(λ)/z_λ p_λ`.
pub fn frobenius(theta: &Trace) -> SymFunc {
    let parts = partitions_of(theta.n);
    let v: Vec<Scalar> = parts
        .iter()
        .zip(&theta.values)
        .map(|(l, c)| c.scale(&Rational::new(1.into(), (l.z() as i64).into())))
        .collect();
    SymFunc::from_vector(theta.n, Basis::P, &v)
}

pub fn frobenius_inverse(f: &SymFunc) -> Trace {
    let p = f.convert(Basis::P);
    let values = partitions_of(f.n())
        .iter()
        .map(|l| p.coeff(l).scale(&Rational::from_integer((l.z() as i64).into())))
        .collect();
    Trace { n: f.n(), values }
}

/// The symmetric function whose `basis`-coefficients are the trace values that
/// the expansion of `Y` prescribes:
/// `[m_λ] ε^λ`, `[f_λ] η^λ`, `[p_λ] (-1)^{n-ℓ} ψ^λ / z_λ`, `[s_λ] χ^{λ^tr}`, `[e_λ] φ^λ`, `[h_λ] γ^λ`.
pub fn y_expansion(n: usize, basis: Basis, eval: impl Fn(TraceBasis, &Partition) -> Scalar) -> SymFunc {
    let terms = partitions_of(n).into_iter().map(|l| {
        let c = match basis {
            Basis::M => eval(TraceBasis::Epsilon, &l),
            Basis::F => eval(TraceBasis::Eta, &l),
            Basis::P => eval(TraceBasis::Psi, &l)
                .scale(&Rational::new(l.sign().into(), (l.z() as i64).into())),
            Basis::S => eval(TraceBasis::Chi, &l.transpose()),
            Basis::E => eval(TraceBasis::Phi, &l),
            Basis::H => eval(TraceBasis::Gamma, &l),
        };
        (l, c)
    });
    SymFunc::from_terms(n, basis, terms).expect("partitions of n")
}

/// The same list for `ωY`: `[f] ε`, `[m] η`, `[p] ψ/z`, `[s] χ`, `[h] φ`, `[e] γ`.
pub fn omega_y_expansion(n: usize, basis: Basis, eval: impl Fn(TraceBasis, &Partition) -> Scalar) -> SymFunc {
    let terms = partitions_of(n).into_iter().map(|l| {
        let c = match basis {
            Basis::F => eval(TraceBasis::Epsilon, &l),
            Basis::M => eval(TraceBasis::Eta, &l),
            Basis::P => eval(TraceBasis::Psi, &l).scale(&Rational::new(1.into(), (l.z() as i64).into())),
            Basis::S => eval(TraceBasis::Chi, &l),
            Basis::H => eval(TraceBasis::Phi, &l),
            Basis::E => eval(TraceBasis::Gamma, &l),
        };
        (l, c)
    });
    SymFunc::from_terms(n, basis, terms).expect("partitions of n")
}

/// `Y(g) = Σ_λ ε^λ(g) m_λ`.
pub fn y_of(g: &GroupAlgebraElement) -> SymFunc {
    let eps = evaluate_basis(TraceBasis::Epsilon, g);
    SymFunc::from_vector(g.n(), Basis::M, &eps)
}

/// An element `g` with `Y(g) = f`: `g = Σ_μ a_μ / (μ_1! ⋯ μ_ℓ!) Σ_{v ∈ S_μ} v`
/// where `f = Σ a_μ e_μ`.
pub fn realize_symfunc(f: &SymFunc) -> GroupAlgebraElement {
    let e = f.convert(Basis::E);
    let mut g = GroupAlgebraElement::zero(f.n());
    for (mu, a) in e.terms() {
        let denom: u64 = mu.parts().iter().map(|&p| factorial(p)).product();
        let c = a.scale(&Rational::new(1.into(), (denom as i64).into()));
        g = &g + &young_subgroup_sum(mu).scale(&c);
    }
    g
}
