//! Degree-`n` quasisymmetric functions in the monomial `M_α` and fundamental
//! `F_{n,S}` bases. Both are keyed internally by subsets of `[n-1]`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{Basis, SymFunc};
use crate::error::{Error, Result};
use crate::partition::{partitions_of, rearrangement_class, Composition, DescentSet, Partition};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum QBasis {
    Monomial,
    Fundamental,
}

#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "QSymRepr", into = "QSymRepr")]
pub struct QSymFunc {
    n: usize,
    basis: QBasis,
    coeffs: BTreeMap<DescentSet, Scalar>,
}

#[derive(Serialize, Deserialize)]
struct QSymRepr {
    n: usize,
    basis: QBasis,
    coeffs: BTreeMap<String, Scalar>,
}

impl TryFrom<QSymRepr> for QSymFunc {
    type Error = Error;
    fn try_from(r: QSymRepr) -> Result<Self> {
        let mut f = QSymFunc::zero(r.n, r.basis);
        for (k, v) in r.coeffs {
            let key = match r.basis {
                QBasis::Monomial => {
                    let alpha: Composition = k.parse()?;
                    if alpha.size() != r.n {
                        return Err(Error::SizeMismatch { expected: r.n, found: alpha.size() });
                    }
                    alpha.to_descent_set()
                }
                QBasis::Fundamental => DescentSet::parse(r.n, &k)?,
            };
            f.add_term(&key, &v);
        }
        Ok(f)
    }
}

impl From<QSymFunc> for QSymRepr {
    fn from(f: QSymFunc) -> Self {
        let coeffs = f
            .coeffs
            .into_iter()
            .map(|(k, v)| {
                let key = match f.basis {
                    QBasis::Monomial => k.to_composition().to_string(),
                    QBasis::Fundamental => k.to_string(),
                };
                (key, v)
            })
            .collect();
        QSymRepr { n: f.n, basis: f.basis, coeffs }
    }
}

impl QSymFunc {
    pub fn zero(n: usize, basis: QBasis) -> Self {
        QSymFunc { n, basis, coeffs: BTreeMap::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn basis(&self) -> QBasis {
        self.basis
    }

    pub fn coeff(&self, s: &DescentSet) -> Scalar {
        self.coeffs.get(s).cloned().unwrap_or_default()
    }

    /// Coefficient of `M_α` (or of `F_{n,S(α)}` in the fundamental basis).
    pub fn coeff_composition(&self, alpha: &Composition) -> Scalar {
        self.coeff(&alpha.to_descent_set())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&DescentSet, &Scalar)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add_term(&mut self, s: &DescentSet, c: &Scalar) {
        assert_eq!(s.n(), self.n, "subset of the wrong ground set");
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(s.clone()).or_default();
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(s);
        }
    }

    /// A symmetric function read as the quasisymmetric sum `Σ_α [m_{sort α}] M_α`.
    pub fn from_symmetric(f: &SymFunc) -> QSymFunc {
        let m = f.convert(Basis::M);
        let mut out = QSymFunc::zero(f.n(), QBasis::Monomial);
        for s in DescentSet::all(f.n()) {
            let c = m.coeff(&rearrangement_class(&s.to_composition()));
            out.add_term(&s, &c);
        }
        out
    }

    pub fn to_basis(&self, basis: QBasis) -> QSymFunc {
        match (self.basis, basis) {
            (QBasis::Monomial, QBasis::Fundamental) => qsym_m_to_f(self),
            (QBasis::Fundamental, QBasis::Monomial) => qsym_f_to_m(self),
            _ => self.clone(),
        }
    }

    /// If the monomial coefficients depend only on the sorted composition,
    /// return the symmetric function; otherwise report a witnessing pair.
    pub fn to_symmetric(&self) -> Result<SymFunc> {
        let m = self.to_basis(QBasis::Monomial);
        let mut seen: BTreeMap<Partition, (Composition, Scalar)> = BTreeMap::new();
        for s in DescentSet::all(self.n) {
            let alpha = s.to_composition();
            let c = m.coeff(&s);
            let lambda = rearrangement_class(&alpha);
            match seen.get(&lambda) {
                Some((first, v)) if *v != c => {
                    return Err(Error::NotSymmetric {
                        first: first.to_string(),
                        first_value: v.to_string(),
                        second: alpha.to_string(),
                        second_value: c.to_string(),
                    })
                }
                Some(_) => {}
                None => {
                    seen.insert(lambda, (alpha, c));
                }
            }
        }
        SymFunc::from_terms(self.n, Basis::M, seen.into_iter().map(|(l, (_, c))| (l, c)))
    }

    pub fn at_q_one(&self) -> QSymFunc {
        let mut out = QSymFunc::zero(self.n, self.basis);
        for (k, v) in &self.coeffs {
            out.add_term(k, &Scalar::from_rational(v.at_one()));
        }
        out
    }
}

/// Rewrite monomial coefficients in the fundamental basis using
/// `M_S = Σ_{T ⊇ S} (-1)^{|T - S|} F_T`.
pub fn qsym_m_to_f(g: &QSymFunc) -> QSymFunc {
    if g.basis == QBasis::Fundamental {
        return g.clone();
    }
    let mut out = QSymFunc::zero(g.n, QBasis::Fundamental);
    let all = DescentSet::all(g.n);
    for (s, c) in &g.coeffs {
        for t in all.iter().filter(|t| s.is_subset(t)) {
            let sign = if (t.len() - s.len()) % 2 == 0 { c.clone() } else { -c };
            out.add_term(t, &sign);
        }
    }
    out
}

/// Rewrite fundamental coefficients in the monomial basis using `F_S = Σ_{T ⊇ S} M_T`.
pub fn qsym_f_to_m(g: &QSymFunc) -> QSymFunc {
    if g.basis == QBasis::Monomial {
        return g.clone();
    }
    let mut out = QSymFunc::zero(g.n, QBasis::Monomial);
    let all = DescentSet::all(g.n);
    for (s, c) in &g.coeffs {
        for t in all.iter().filter(|t| s.is_subset(t)) {
            out.add_term(t, c);
        }
    }
    out
}

/// Standard Young tableaux of shape `λ`; `rows[0]` is the first (longest) row.
pub fn standard_young_tableaux(lambda: &Partition) -> Vec<Vec<Vec<usize>>> {
    fn rec(k: usize, n: usize, shape: &[usize], rows: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        if k > n {
            out.push(rows.clone());
            return;
        }
        for r in 0..shape.len() {
            let len = rows[r].len();
            if len < shape[r] && (r == 0 || rows[r - 1].len() > len) {
                rows[r].push(k);
                rec(k + 1, n, shape, rows, out);
                rows[r].pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(1, lambda.size(), lambda.parts(), &mut vec![Vec::new(); lambda.len()], &mut out);
    out
}

/// `{i : i+1 appears before i}` in the word `U_r ∘ ⋯ ∘ U_1`.
pub fn inverse_descent_set(rows: &[Vec<usize>]) -> DescentSet {
    let n: usize = rows.iter().map(|r| r.len()).sum();
    let word: Vec<usize> = rows.iter().rev().flatten().copied().collect();
    let mut pos = vec![0; n + 1];
    for (i, &v) in word.iter().enumerate() {
        pos[v] = i;
    }
    DescentSet::new(n, (1..n).filter(|&i| pos[i + 1] < pos[i]).collect()).expect("subset of [n-1]")
}

/// Number of standard Young tableaux of shape `λ` whose inverse descent set is `S`.
pub fn b_statistic(lambda: &Partition, s: &DescentSet) -> Result<u64> {
    if s.n() != lambda.size() {
        return Err(Error::SizeMismatch { expected: lambda.size(), found: s.n() });
    }
    Ok(standard_young_tableaux(lambda)
        .iter()
        .filter(|t| &inverse_descent_set(t) == s)
        .count() as u64)
}

/// Fundamental expansion: `d_S = Σ_λ b(λ,S) c_λ` with `c_λ` the Schur coefficients.
pub fn to_fundamental(f: &SymFunc) -> QSymFunc {
    let n = f.n();
    let schur = f.convert(Basis::S);
    let mut out = QSymFunc::zero(n, QBasis::Fundamental);
    for lambda in partitions_of(n) {
        let c = schur.coeff(&lambda);
        if c.is_zero() {
            continue;
        }
        for t in standard_young_tableaux(&lambda) {
            out.add_term(&inverse_descent_set(&t), &c);
        }
    }
    out
}

impl fmt::Display for QSymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .map(|(k, v)| match self.basis {
                QBasis::Monomial => format!("({v})*M_[{}]", k.to_composition()),
                QBasis::Fundamental => format!("({v})*F_{k}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

impl fmt::Debug for QSymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QSymFunc[n={}]({self})", self.n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::factorial;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn b_statistic_small() {
        let empty = DescentSet::new(2, vec![]).unwrap();
        let one = DescentSet::new(2, vec![1]).unwrap();
        assert_eq!(b_statistic(&p("2"), &empty).unwrap(), 1);
        assert_eq!(b_statistic(&p("1,1"), &one).unwrap(), 1);
        assert_eq!(b_statistic(&p("1,1"), &empty).unwrap(), 0);
    }

    #[test]
    fn syt_counts() {
        assert_eq!(standard_young_tableaux(&p("3,2")).len(), 5);
        let total: usize = partitions_of(6).iter().map(|l| standard_young_tableaux(l).len().pow(2)).sum();
        assert_eq!(total as u64, factorial(6));
    }

    #[test]
    fn single_row_schur() {
        for n in 1..=5 {
            let f = to_fundamental(&SymFunc::basis_element(Basis::S, &Partition::row(n)));
            assert_eq!(f.terms().count(), 1);
            assert_eq!(f.coeff(&DescentSet::new(n, vec![]).unwrap()), Scalar::one());
        }
    }

    #[test]
    fn f_of_empty_set_in_two_variables() {
        let mut f = QSymFunc::zero(2, QBasis::Fundamental);
        f.add_term(&DescentSet::new(2, vec![]).unwrap(), &Scalar::one());
        let m = qsym_f_to_m(&f);
        assert_eq!(m.coeff_composition(&"2".parse().unwrap()), Scalar::one());
        assert_eq!(m.coeff_composition(&"1,1".parse().unwrap()), Scalar::one());
        assert_eq!(qsym_m_to_f(&m), f);
    }

    #[test]
    fn m_to_f_round_trip() {
        for n in 1..=5 {
            for s in DescentSet::all(n) {
                let mut g = QSymFunc::zero(n, QBasis::Monomial);
                g.add_term(&s, &Scalar::from_int(3));
                assert_eq!(qsym_f_to_m(&qsym_m_to_f(&g)), g);
            }
        }
    }

    #[test]
    fn fundamental_expansion_restricts_to_monomial_expansion() {
        for n in 1..=6 {
            for lambda in partitions_of(n) {
                for b in Basis::ALL {
                    let f = SymFunc::basis_element(b, &lambda);
                    let via_f = qsym_f_to_m(&to_fundamental(&f));
                    let direct = QSymFunc::from_symmetric(&f);
                    assert_eq!(via_f, direct, "{b:?} {lambda:?}");
                    assert!(via_f.to_symmetric().unwrap().same_as(&f));
                }
            }
        }
    }

    #[test]
    fn asymmetric_input_reports_witness() {
        let mut g = QSymFunc::zero(3, QBasis::Monomial);
        g.add_term(&"2,1".parse::<Composition>().unwrap().to_descent_set(), &Scalar::one());
        match g.to_symmetric() {
            Err(Error::NotSymmetric { first, second, .. }) => {
                assert_ne!(first, second);
            }
            other => panic!("expected a witness, got {other:?}"),
        }
    }

    #[test]
    fn json_keys() {
        let mut g = QSymFunc::zero(3, QBasis::Monomial);
        g.add_term(&"1,2".parse::<Composition>().unwrap().to_descent_set(), &Scalar::from_int(2));
        let js = serde_json::to_string(&g).unwrap();
        assert!(js.contains("\"1,2\""));
        let back: QSymFunc = serde_json::from_str(&js).unwrap();
        assert_eq!(back, g);
        let f = qsym_m_to_f(&g);
        let back: QSymFunc = serde_json::from_str(&serde_json::to_string(&f).unwrap()).unwrap();
        assert_eq!(back, f);
    }
}
