//! Square matrices over `Scalar`, with determinants, permanents, minors and
//! immanants.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::perm::all_permutations;
use crate::scalar::Scalar;
use crate::trace::{psi_direct, Trace};

/// Largest order for which minors are computed by the subset recursion.
pub const MAX_ORDER: usize = 20;

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<Scalar>>", into = "Vec<Vec<Scalar>>")]
pub struct Matrix {
    n: usize,
    a: Vec<Scalar>,
}

impl TryFrom<Vec<Vec<Scalar>>> for Matrix {
    type Error = Error;
    fn try_from(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        Matrix::new(rows)
    }
}

impl From<Matrix> for Vec<Vec<Scalar>> {
    fn from(m: Matrix) -> Self {
        m.rows()
    }
}

impl Matrix {
    pub fn new(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let n = rows.len();
        if n > MAX_ORDER {
            return Err(Error::LimitExceeded(format!("matrix of order {n} (maximum {MAX_ORDER})")));
        }
        if let Some(r) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::SizeMismatch { expected: n, found: r.len() });
        }
        Ok(Matrix { n, a: rows.into_iter().flatten().collect() })
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Result<Self> {
        Matrix::new(rows.iter().map(|r| r.iter().map(|&v| Scalar::from_int(v)).collect()).collect())
    }

    pub fn zero(n: usize) -> Self {
        Matrix { n, a: vec![Scalar::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n);
        for i in 0..n {
            m.a[i * n + i] = Scalar::one();
        }
        m
    }

    pub fn ones(n: usize) -> Self {
        Matrix { n, a: vec![Scalar::one(); n * n] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `a_{i,j}`, 1-based.
    pub fn entry(&self, i: usize, j: usize) -> &Scalar {
        &self.a[(i - 1) * self.n + (j - 1)]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.a[(i - 1) * self.n + (j - 1)] = v;
    }

    fn at(&self, i: usize, j: usize) -> &Scalar {
        &self.a[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<Scalar>> {
        self.a.chunks(self.n.max(1)).take(self.n).map(<[Scalar]>::to_vec).collect()
    }

    pub fn is_rational(&self) -> bool {
        self.a.iter().all(Scalar::is_rational)
    }

    /// `A_{I,J}` for 1-based index lists of equal length.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Result<Matrix> {
        if rows.len() != cols.len() {
            return Err(Error::SizeMismatch { expected: rows.len(), found: cols.len() });
        }
        for &i in rows.iter().chain(cols) {
            if i == 0 || i > self.n {
                return Err(Error::InvalidArgument(format!("index {i} out of range 1..={}", self.n)));
            }
        }
        let k = rows.len();
        let mut a = Vec::with_capacity(k * k);
        for &i in rows {
            for &j in cols {
                a.push(self.entry(i, j).clone());
            }
        }
        Ok(Matrix { n: k, a })
    }

    /// `A_{J,J}` for a bitmask `J` over 0-based indices.
    pub(crate) fn principal_mask(&self, mask: u32) -> Matrix {
        let idx: Vec<usize> = (0..self.n).filter(|&i| mask >> i & 1 == 1).collect();
        let mut a = Vec::with_capacity(idx.len() * idx.len());
        for &i in &idx {
            for &j in &idx {
                a.push(self.at(i, j).clone());
            }
        }
        Matrix { n: idx.len(), a }
    }

    pub fn det(&self) -> Scalar {
        self.expand(true)
    }

    pub fn perm(&self) -> Scalar {
        self.expand(false)
    }

    /// Row-by-row expansion over column subsets; exact over any commutative ring.
    fn expand(&self, signed: bool) -> Scalar {
        let n = self.n;
        let mut dp = vec![Scalar::zero(); 1 << n];
        dp[0] = Scalar::one();
        for mask in 0u32..(1u32 << n) {
            if dp[mask as usize].is_zero() {
                continue;
            }
            let r = mask.count_ones() as usize;
            if r == n {
                continue;
            }
            let cur = dp[mask as usize].clone();
            for c in 0..n {
                if mask >> c & 1 == 1 || self.at(r, c).is_zero() {
                    continue;
                }
                let mut term = &cur * self.at(r, c);
                if signed && (mask >> c).count_ones() % 2 == 1 {
                    term = -term;
                }
                dp[(mask | 1 << c) as usize] += &term;
            }
        }
        dp[(1usize << n) - 1].clone()
    }

    /// `det(A_{I,J})` for 1-based index lists.
    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> Result<Scalar> {
        Ok(self.submatrix(rows, cols)?.det())
    }

    /// Checks every square minor. Exponential in `n`.
    pub fn is_totally_nonnegative(&self) -> Result<bool> {
        Ok(self.first_negative_minor()?.is_none())
    }

    /// A pair `(I, J)` with `det(A_{I,J}) < 0`, if any.
    pub fn first_negative_minor(&self) -> Result<Option<(Vec<usize>, Vec<usize>)>> {
        if !self.is_rational() {
            return Err(Error::NotRational("total nonnegativity test input".into()));
        }
        let n = self.n;
        for rm in 1u32..(1u32 << n) {
            let rows: Vec<usize> = (0..n).filter(|&i| rm >> i & 1 == 1).map(|i| i + 1).collect();
            for cm in 1u32..(1u32 << n) {
                if cm.count_ones() != rm.count_ones() {
                    continue;
                }
                let cols: Vec<usize> = (0..n).filter(|&i| cm >> i & 1 == 1).map(|i| i + 1).collect();
                if self.minor(&rows, &cols)?.is_nonnegative() == Some(false) {
                    return Ok(Some((rows, cols)));
                }
            }
        }
        Ok(None)
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows()
            .iter()
            .map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "))
            .collect();
        write!(f, "[{}]", rows.join("; "))
    }
}

/// `Imm_θ(A) = Σ_w θ(w) a_{1,w_1} ⋯ a_{n,w_n}`, summed over all of `S_n`.
pub fn immanant(theta: &Trace, a: &Matrix) -> Result<Scalar> {
    if theta.n() != a.n {
        return Err(Error::SizeMismatch { expected: theta.n(), found: a.n });
    }
    if a.n == 0 {
        return Ok(theta.values()[0].clone());
    }
    let mut total = Scalar::zero();
    for w in all_permutations(a.n) {
        let mut prod = Scalar::one();
        for i in 0..a.n {
            let x = a.at(i, w.at(i + 1) - 1);
            if x.is_zero() {
                prod = Scalar::zero();
                break;
            }
            prod *= x;
        }
        if prod.is_zero() {
            continue;
        }
        let th = theta.value(&w.cycle_type());
        if !th.is_zero() {
            total += &(&th * &prod);
        }
    }
    Ok(total)
}

/// `Imm_{ψ^λ}(A) = z_λ Σ_{ctype(w) = λ} a_{1,w_1} ⋯ a_{n,w_n}`.
pub fn power_immanant(lambda: &Partition, a: &Matrix) -> Result<Scalar> {
    if lambda.size() != a.n {
        return Err(Error::SizeMismatch { expected: lambda.size(), found: a.n });
    }
    immanant(&psi_direct(a.n, lambda), a)
}

/// Reads rows of comma- or whitespace-separated exact scalars.
pub fn parse_csv(text: &str) -> Result<Matrix> {
    let rows = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| l.split(|c: char| c == ',' || c.is_whitespace()).filter(|s| !s.is_empty()).map(str::parse).collect())
        .collect::<Result<Vec<Vec<Scalar>>>>()?;
    Matrix::new(rows)
}

pub fn to_csv(a: &Matrix) -> String {
    a.rows().iter().map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>().join(",") + "\n").collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions_of;
    use crate::trace::{trace_basis, TraceBasis};

    fn staircase() -> Matrix {
        Matrix::from_i64(&[
            vec![1, 1, 0, 0, 0],
            vec![1, 1, 1, 0, 0],
            vec![1, 1, 1, 1, 0],
            vec![1, 1, 1, 1, 1],
            vec![1, 1, 1, 1, 1],
        ])
        .unwrap()
    }

    fn leibniz(a: &Matrix, signed: bool) -> Scalar {
        all_permutations(a.n())
            .iter()
            .map(|w| {
                let p: Scalar = (1..=a.n()).fold(Scalar::one(), |acc, i| &acc * a.entry(i, w.at(i)));
                if signed && w.sign() < 0 {
                    -p
                } else {
                    p
                }
            })
            .sum()
    }

    #[test]
    fn small_values() {
        assert_eq!(Matrix::identity(4).det(), Scalar::one());
        assert_eq!(Matrix::ones(3).perm(), Scalar::from_int(6));
        assert_eq!(Matrix::ones(3).det(), Scalar::zero());
        assert_eq!(Matrix::zero(0).det(), Scalar::one());
        let m = Matrix::from_i64(&[vec![2, 1], vec![7, 5]]).unwrap();
        assert_eq!(m.det(), Scalar::from_int(3));
        assert_eq!(m.perm(), Scalar::from_int(17));
    }

    #[test]
    fn expansion_matches_leibniz() {
        let m = Matrix::from_i64(&[vec![3, -1, 2, 0], vec![1, 4, -2, 5], vec![0, 2, 1, 1], vec![-3, 1, 0, 2]]).unwrap();
        assert_eq!(m.det(), leibniz(&m, true));
        assert_eq!(m.perm(), leibniz(&m, false));
        let mut qm = Matrix::identity(3);
        qm.set(1, 2, Scalar::q());
        qm.set(2, 1, Scalar::q());
        assert_eq!(qm.det(), leibniz(&qm, true));
    }

    #[test]
    fn staircase_is_tnn() {
        let a = staircase();
        assert!(a.is_totally_nonnegative().unwrap());
        assert_eq!(a.minor(&[1, 2], &[1, 2]).unwrap(), Scalar::zero());
        assert!(!Matrix::from_i64(&[vec![0, 1], vec![1, 0]]).unwrap().is_totally_nonnegative().unwrap());
        let mut qm = Matrix::identity(2);
        qm.set(1, 2, Scalar::q());
        assert!(matches!(qm.is_totally_nonnegative(), Err(Error::NotRational(_))));
    }

    #[test]
    fn immanant_specializations() {
        let a = staircase();
        let n = 5;
        let eps = trace_basis(n, TraceBasis::Epsilon, &Partition::row(n)).unwrap();
        let eta = trace_basis(n, TraceBasis::Eta, &Partition::row(n)).unwrap();
        assert_eq!(immanant(&eps, &a).unwrap(), a.det());
        assert_eq!(immanant(&eta, &a).unwrap(), a.perm());
        let phi = |l: Vec<usize>| immanant(&trace_basis(n, TraceBasis::Phi, &Partition::new(l).unwrap()).unwrap(), &a).unwrap();
        assert_eq!(phi(vec![3, 2]), Scalar::from_int(7));
        assert_eq!(phi(vec![5]), Scalar::from_int(5));
        assert_eq!(phi(vec![4, 1]), Scalar::from_int(3));
        assert_eq!(phi(vec![2, 2, 1]), Scalar::from_int(1));
        assert_eq!(phi(vec![3, 1, 1]), Scalar::zero());
        assert_eq!(phi(vec![2, 1, 1, 1]), Scalar::zero());
        assert_eq!(phi(vec![1, 1, 1, 1, 1]), Scalar::zero());
        for l in partitions_of(n) {
            let psi = immanant(&trace_basis(n, TraceBasis::Psi, &l).unwrap(), &a).unwrap();
            assert_eq!(psi, power_immanant(&l, &a).unwrap());
        }
    }

    #[test]
    fn submatrix_errors() {
        let a = staircase();
        assert!(a.submatrix(&[1, 2], &[1]).is_err());
        assert!(a.submatrix(&[0], &[1]).is_err());
        assert!(Matrix::new(vec![vec![Scalar::one(), Scalar::one()]]).is_err());
    }

    #[test]
    fn csv_and_json() {
        let a = parse_csv("1, 1/2\n-3 q\n").unwrap();
        assert_eq!(a.entry(1, 2), &Scalar::from_ratio(1, 2));
        assert_eq!(parse_csv(&to_csv(&a)).unwrap(), a);
        let js = serde_json::to_string(&a).unwrap();
        assert_eq!(serde_json::from_str::<Matrix>(&js).unwrap(), a);
        assert!(serde_json::from_str::<Matrix>(r#"[["1","2"]]"#).is_err());
    }
}
