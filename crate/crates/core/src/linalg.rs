//! Dense exact linear algebra over the rationals, used for transition matrices.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::Rational;

pub type RMatrix = Vec<Vec<Rational>>;

pub fn identity(n: usize) -> RMatrix {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect())
        .collect()
}

pub fn from_i64(rows: &[Vec<i64>]) -> RMatrix {
    rows.iter()
        .map(|r| r.iter().map(|&v| Rational::from_integer(v.into())).collect())
        .collect()
}

pub fn mul(a: &RMatrix, b: &RMatrix) -> RMatrix {
    let n = a.len();
    let m = b.first().map_or(0, |r| r.len());
    let k = b.len();
    let mut out = vec![vec![Rational::zero(); m]; n];
    for i in 0..n {
        for t in 0..k {
            if a[i][t].is_zero() {
                continue;
            }
            for j in 0..m {
                if !b[t][j].is_zero() {
                    out[i][j] += &a[i][t] * &b[t][j];
                }
            }
        }
    }
    out
}

pub fn transpose(a: &RMatrix) -> RMatrix {
    let m = a.first().map_or(0, |r| r.len());
    (0..m).map(|j| a.iter().map(|r| r[j].clone()).collect()).collect()
}

/// Gauss-Jordan inverse of a square matrix.
pub fn inverse(a: &RMatrix) -> Result<RMatrix> {
    let n = a.len();
    if a.iter().any(|r| r.len() != n) {
        return Err(Error::InvalidArgument("matrix is not square".into()));
    }
    let mut m: RMatrix = a.clone();
    let mut inv = identity(n);
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero()).ok_or(Error::Singular)?;
        m.swap(col, pivot);
        inv.swap(col, pivot);
        let p = m[col][col].clone();
        if !p.is_one() {
            for j in 0..n {
                m[col][j] /= &p;
                inv[col][j] /= &p;
            }
        }
        for r in 0..n {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let f = m[r][col].clone();
            for j in 0..n {
                if !m[col][j].is_zero() {
                    let d = &f * &m[col][j];
                    m[r][j] -= d;
                }
                if !inv[col][j].is_zero() {
                    let d = &f * &inv[col][j];
                    inv[r][j] -= d;
                }
            }
        }
    }
    Ok(inv)
}

pub fn is_identity(a: &RMatrix) -> bool {
    a.iter().enumerate().all(|(i, r)| {
        r.len() == a.len() && r.iter().enumerate().all(|(j, v)| if i == j { v.is_one() } else { v.is_zero() })
    })
}
