//! Per-degree transition matrices, computed once from the counting oracle.

use std::collections::HashMap;
use std::sync::OnceLock;

use super::oracle::m_coefficient;
use super::Basis;
use crate::linalg::{self, RMatrix};
use crate::partition::{partitions_of, Partition};
use crate::scalar::Rational;

/// Largest degree for which transition tables are built.
pub const MAX_DEGREE: usize = 12;

pub(crate) struct Tables {
    pub parts: Vec<Partition>,
    pub index: HashMap<Partition, usize>,
    /// `trans[from][to]`: row `λ` holds the `to`-coefficients of `from_λ`.
    trans: Vec<Vec<RMatrix>>,
}

impl Tables {
    fn build(n: usize) -> Tables {
        let parts = partitions_of(n);
        let index = parts.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let counted = |b: Basis| -> RMatrix {
            parts
                .iter()
                .map(|l| {
                    parts
                        .iter()
                        .map(|m| Rational::from_integer(m_coefficient(b, l, m).expect("direct basis").into()))
                        .collect()
                })
                .collect()
        };
        let mut to_m: Vec<RMatrix> = Vec::with_capacity(6);
        for b in Basis::ALL {
            let m = match b {
                Basis::F => {
                    let m_to_e = linalg::inverse(&to_m[Basis::E.index()]).expect("invertible");
                    linalg::mul(&m_to_e, &to_m[Basis::H.index()])
                }
                _ => counted(b),
            };
            to_m.push(m);
        }
        let from_m: Vec<RMatrix> = to_m.iter().map(|m| linalg::inverse(m).expect("bases of the same space")).collect();
        let trans = to_m
            .iter()
            .map(|a| from_m.iter().map(|b| linalg::mul(a, b)).collect())
            .collect();
        Tables { parts, index, trans }
    }

    pub fn matrix(&self, from: Basis, to: Basis) -> &RMatrix {
        &self.trans[from.index()][to.index()]
    }

    pub fn idx(&self, p: &Partition) -> usize {
        self.index[p]
    }
}

static TABLES: [OnceLock<Tables>; MAX_DEGREE + 1] = [const { OnceLock::new() }; MAX_DEGREE + 1];

/// Tables for degree `n`. Panics above [`MAX_DEGREE`].
pub(crate) fn tables(n: usize) -> &'static Tables {
    assert!(n <= MAX_DEGREE, "symmetric function tables are limited to degree {MAX_DEGREE}, got {n}");
    TABLES[n].get_or_init(|| Tables::build(n))
}
