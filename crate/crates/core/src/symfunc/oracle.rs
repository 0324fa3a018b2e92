//! Ground truth for the symmetric bases: explicit polynomials in finitely many
//! variables, and the counting forms of their monomial coefficients.

use std::collections::{BTreeMap, HashMap};

use super::Basis;
use crate::error::{Error, Result};
use crate::linalg;
use crate::partition::{partitions_of, Partition};
use crate::scalar::{Rational, Scalar};

type Poly = HashMap<Vec<u8>, i64>;
type RPoly = HashMap<Vec<u8>, Rational>;

fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u8> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            *out.entry(e).or_insert(0) += ca * cb;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

fn unit(vars: usize) -> Poly {
    Poly::from([(vec![0; vars], 1)])
}

fn elementary(k: usize, vars: usize) -> Poly {
    let mut out = Poly::new();
    for mask in 0u32..(1 << vars) {
        if mask.count_ones() as usize == k {
            out.insert((0..vars).map(|i| ((mask >> i) & 1) as u8).collect(), 1);
        }
    }
    out
}

fn homogeneous(k: usize, vars: usize) -> Poly {
    fn rec(k: usize, i: usize, cur: &mut Vec<u8>, out: &mut Poly) {
        if i + 1 == cur.len() {
            cur[i] = k as u8;
            out.insert(cur.clone(), 1);
            return;
        }
        for a in 0..=k {
            cur[i] = a as u8;
            rec(k - a, i + 1, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Poly::new();
    rec(k, 0, &mut vec![0; vars], &mut out);
    out
}

fn power(k: usize, vars: usize) -> Poly {
    (0..vars)
        .map(|i| {
            let mut e = vec![0; vars];
            e[i] = k as u8;
            (e, 1)
        })
        .collect()
}

fn monomial(lambda: &Partition, vars: usize) -> Poly {
    fn rec(parts: &mut Vec<u8>, start: usize, out: &mut Poly) {
        if start == parts.len() {
            out.insert(parts.clone(), 1);
            return;
        }
        let mut seen = Vec::new();
        for i in start..parts.len() {
            if seen.contains(&parts[i]) {
                continue;
            }
            seen.push(parts[i]);
            parts.swap(start, i);
            rec(parts, start + 1, out);
            parts.swap(start, i);
        }
    }
    let mut exps: Vec<u8> = lambda.parts().iter().map(|&p| p as u8).collect();
    exps.resize(vars, 0);
    let mut out = Poly::new();
    rec(&mut exps, 0, &mut out);
    out
}

/// Sum of `x^T` over semistandard tableaux of shape `λ` with entries in `1..=vars`.
fn schur(lambda: &Partition, vars: usize) -> Poly {
    let cells = lambda.cells();
    let mut filling: HashMap<(usize, usize), usize> = HashMap::new();
    let mut out = Poly::new();
    fn rec(
        idx: usize,
        cells: &[(usize, usize)],
        vars: usize,
        filling: &mut HashMap<(usize, usize), usize>,
        out: &mut Poly,
    ) {
        if idx == cells.len() {
            let mut e = vec![0u8; vars];
            for v in filling.values() {
                e[*v - 1] += 1;
            }
            *out.entry(e).or_insert(0) += 1;
            return;
        }
        let (r, c) = cells[idx];
        let lo_row = if c > 0 { filling[&(r, c - 1)] } else { 1 };
        let lo_col = if r > 0 { filling[&(r - 1, c)] + 1 } else { 1 };
        for v in lo_row.max(lo_col)..=vars {
            filling.insert((r, c), v);
            rec(idx + 1, cells, vars, filling, out);
        }
        filling.remove(&(r, c));
    }
    rec(0, &cells, vars, &mut filling, &mut out);
    out
}

fn product_of(parts: &[usize], vars: usize, factor: impl Fn(usize, usize) -> Poly) -> Poly {
    parts.iter().fold(unit(vars), |acc, &k| poly_mul(&acc, &factor(k, vars)))
}

fn integer_poly(basis: Basis, lambda: &Partition, vars: usize) -> Poly {
    match basis {
        Basis::E => product_of(lambda.parts(), vars, elementary),
        Basis::H => product_of(lambda.parts(), vars, homogeneous),
        Basis::P => product_of(lambda.parts(), vars, power),
        Basis::M => monomial(lambda, vars),
        Basis::S => schur(lambda, vars),
        Basis::F => unreachable!("forgotten basis is computed through the elementary oracle"),
    }
}

fn exponent_of(mu: &Partition, vars: usize) -> Vec<u8> {
    let mut e: Vec<u8> = mu.parts().iter().map(|&p| p as u8).collect();
    e.resize(vars, 0);
    e
}

fn forgotten(lambda: &Partition, vars: usize) -> RPoly {
    // m_λ = Σ_ν a_{λν} e_ν, read off the polynomial oracle, then e_ν ↦ h_ν.
    let n = lambda.size();
    let parts = partitions_of(n);
    let e_to_m: linalg::RMatrix = parts
        .iter()
        .map(|nu| {
            let poly = integer_poly(Basis::E, nu, vars);
            parts
                .iter()
                .map(|mu| Rational::from_integer(poly.get(&exponent_of(mu, vars)).copied().unwrap_or(0).into()))
                .collect()
        })
        .collect();
    let m_to_e = linalg::inverse(&e_to_m).expect("elementary transition is unitriangular");
    let row = parts.iter().position(|p| p == lambda).expect("partition of n");
    let mut out = RPoly::new();
    for (j, nu) in parts.iter().enumerate() {
        let a = &m_to_e[row][j];
        if num_traits::Zero::is_zero(a) {
            continue;
        }
        for (e, c) in integer_poly(Basis::H, nu, vars) {
            *out.entry(e).or_insert_with(|| Rational::from_integer(0.into())) += a * Rational::from_integer(c.into());
        }
    }
    out.retain(|_, c| !num_traits::Zero::is_zero(c));
    out
}

/// Expand a single basis element as a polynomial in `n_vars` variables.
/// Keys are exponent vectors of length `n_vars`.
pub fn monomial_oracle(basis: Basis, lambda: &Partition, n_vars: usize) -> Result<BTreeMap<Vec<usize>, Scalar>> {
    if n_vars < lambda.size() {
        return Err(Error::InvalidArgument(format!(
            "{n_vars} variables cannot determine a degree-{} symmetric function",
            lambda.size()
        )));
    }
    let widen = |e: Vec<u8>| e.into_iter().map(usize::from).collect::<Vec<_>>();
    Ok(match basis {
        Basis::F => forgotten(lambda, n_vars)
            .into_iter()
            .map(|(e, c)| (widen(e), Scalar::from_rational(c)))
            .collect(),
        _ => integer_poly(basis, lambda, n_vars)
            .into_iter()
            .map(|(e, c)| (widen(e), Scalar::from_int(c)))
            .collect(),
    })
}

/// Number of matrices with entries in `0..=cap` having the given row and column sums.
fn count_matrices(rows: &[usize], cols: &[usize], binary: bool) -> i64 {
    fn distribute(
        rest: usize,
        j: usize,
        caps: &mut Vec<usize>,
        binary: bool,
        rows: &[usize],
        next: usize,
        memo: &mut HashMap<(usize, Vec<usize>), i64>,
    ) -> i64 {
        if j == caps.len() {
            return if rest == 0 { by_row(rows, next, caps, binary, memo) } else { 0 };
        }
        let max = if binary { caps[j].min(1) } else { caps[j] }.min(rest);
        let mut total = 0;
        for a in 0..=max {
            caps[j] -= a;
            total += distribute(rest - a, j + 1, caps, binary, rows, next, memo);
            caps[j] += a;
        }
        total
    }
    fn by_row(
        rows: &[usize],
        i: usize,
        caps: &[usize],
        binary: bool,
        memo: &mut HashMap<(usize, Vec<usize>), i64>,
    ) -> i64 {
        if i == rows.len() {
            return if caps.iter().all(|&c| c == 0) { 1 } else { 0 };
        }
        let mut key = caps.to_vec();
        key.sort_unstable();
        if let Some(&v) = memo.get(&(i, key.clone())) {
            return v;
        }
        let mut caps = caps.to_vec();
        let v = distribute(rows[i], 0, &mut caps, binary, rows, i + 1, memo);
        memo.insert((i, key), v);
        v
    }
    by_row(rows, 0, cols, binary, &mut HashMap::new())
}

/// Ways to send each part of `λ` to a column so that column `j` receives total `μ_j`.
fn count_part_assignments(parts: &[usize], cols: &[usize]) -> i64 {
    fn rec(parts: &[usize], i: usize, caps: &mut Vec<usize>, memo: &mut HashMap<(usize, Vec<usize>), i64>) -> i64 {
        if i == parts.len() {
            return if caps.iter().all(|&c| c == 0) { 1 } else { 0 };
        }
        let mut key = caps.clone();
        key.sort_unstable();
        if let Some(&v) = memo.get(&(i, key.clone())) {
            return v;
        }
        let mut total = 0;
        for j in 0..caps.len() {
            if caps[j] >= parts[i] {
                caps[j] -= parts[i];
                total += rec(parts, i + 1, caps, memo);
                caps[j] += parts[i];
            }
        }
        memo.insert((i, key), total);
        total
    }
    rec(parts, 0, &mut cols.to_vec(), &mut HashMap::new())
}

/// Kostka number `K_{λ,μ}`: semistandard tableaux of shape `λ` and content `μ`,
/// built by adding one horizontal strip per letter.
pub fn kostka_number(lambda: &Partition, mu: &Partition) -> i64 {
    if lambda.size() != mu.size() {
        return 0;
    }
    // Grow the shape row by row; row r may reach the old length of row r-1.
    fn strip(row: usize, shape: &mut Vec<usize>, outer: &[usize], old: &[usize], left: usize, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(shape.clone());
            return;
        }
        if row >= outer.len() {
            return;
        }
        let limit = if row == 0 { outer[0] } else { outer[row].min(old[row - 1]) };
        for add in 0..=limit.saturating_sub(old[row]).min(left) {
            shape[row] = old[row] + add;
            strip(row + 1, shape, outer, old, left - add, out);
        }
        shape[row] = old[row];
    }
    fn rec(shape: Vec<usize>, outer: &[usize], content: &[usize], k: usize) -> i64 {
        if k == content.len() {
            return 1;
        }
        let mut next = Vec::new();
        strip(0, &mut shape.clone(), outer, &shape, content[k], &mut next);
        next.into_iter().map(|sh| rec(sh, outer, content, k + 1)).sum()
    }
    rec(vec![0; lambda.len()], lambda.parts(), mu.parts(), 0)
}

/// Coefficient of `m_μ` in the basis element `b_λ` by its counting form.
/// The forgotten basis has no direct counting form and is rejected.
pub fn m_coefficient(basis: Basis, lambda: &Partition, mu: &Partition) -> Option<i64> {
    if lambda.size() != mu.size() {
        return Some(0);
    }
    Some(match basis {
        Basis::M => i64::from(lambda == mu),
        Basis::E => count_matrices(lambda.parts(), mu.parts(), true),
        Basis::H => count_matrices(lambda.parts(), mu.parts(), false),
        Basis::P => count_part_assignments(lambda.parts(), mu.parts()),
        Basis::S => kostka_number(lambda, mu),
        Basis::F => return None,
    })
}
