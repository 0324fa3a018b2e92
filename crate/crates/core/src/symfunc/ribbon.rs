//! Special ribbon diagrams: subdivisions of a Young diagram into border strips
//! that each meet the first row. Their signed census gives the elementary
//! expansion of a Schur function.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::partition::Partition;

/// One border strip of a diagram, as a bitmask over its cells.
#[derive(Clone, Debug)]
struct Ribbon {
    mask: u64,
    size: usize,
    /// Number of horizontally adjacent pairs of cells inside the strip.
    horizontal: usize,
}

/// A subdivision of a diagram into special ribbons.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RibbonDiagram {
    /// Ribbon sizes, ordered by their leftmost first-row cell.
    pub sizes: Vec<usize>,
    /// Cells of each ribbon as `(row, col)`, 0-based with row 0 the first row.
    pub cells: Vec<Vec<(usize, usize)>>,
    pub sign: i64,
}

impl RibbonDiagram {
    pub fn ribbon_type(&self) -> Partition {
        Partition::from_unsorted(self.sizes.clone())
    }
}

fn cell_index(mu: &Partition, r: usize, c: usize) -> usize {
    mu.parts()[..r].iter().sum::<usize>() + c
}

/// Every strip that contains a first-row cell. In row `r` a strip occupies a
/// contiguous segment `[a_r, b_r]`, and `b_{r+1} = a_r` links consecutive rows.
fn special_ribbons(mu: &Partition) -> Vec<Ribbon> {
    fn extend(mu: &Partition, row: usize, a: usize, mask: u64, size: usize, horizontal: usize, out: &mut Vec<Ribbon>) {
        out.push(Ribbon { mask, size, horizontal });
        let next = row + 1;
        if next >= mu.len() || mu.parts()[next] <= a {
            return;
        }
        let b = a;
        for a2 in (0..=b).rev() {
            let mut m = mask;
            for c in a2..=b {
                m |= 1 << cell_index(mu, next, c);
            }
            extend(mu, next, a2, m, size + b - a2 + 1, horizontal + b - a2, out);
        }
    }
    let mut out = Vec::new();
    let w = mu.part(0);
    for a in 0..w {
        for b in a..w {
            let mut mask = 0u64;
            for c in a..=b {
                mask |= 1 << cell_index(mu, 0, c);
            }
            extend(mu, 0, a, mask, b - a + 1, b - a, &mut out);
        }
    }
    out
}

fn cells_of(mu: &Partition, mask: u64) -> Vec<(usize, usize)> {
    mu.cells().into_iter().filter(|&(r, c)| mask & (1 << cell_index(mu, r, c)) != 0).collect()
}

/// All special ribbon diagrams of shape `μ`.
pub fn special_ribbon_diagrams(mu: &Partition) -> Result<Vec<RibbonDiagram>> {
    let n = mu.size();
    if n > 63 {
        return Err(Error::LimitExceeded(format!("ribbon diagrams of a {n}-cell shape")));
    }
    let ribbons = special_ribbons(mu);
    let full: u64 = if n == 0 { 0 } else { (1u64 << n) - 1 };
    let mut out = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();
    fn cover(covered: u64, full: u64, ribbons: &[Ribbon], chosen: &mut Vec<usize>, mu: &Partition, out: &mut Vec<RibbonDiagram>) {
        if covered == full {
            let mut picked: Vec<&Ribbon> = chosen.iter().map(|&i| &ribbons[i]).collect();
            picked.sort_by_key(|r| r.mask.trailing_zeros());
            let horizontal: usize = picked.iter().map(|r| r.horizontal).sum();
            out.push(RibbonDiagram {
                sizes: picked.iter().map(|r| r.size).collect(),
                cells: picked.iter().map(|r| cells_of(mu, r.mask)).collect(),
                sign: if horizontal.is_multiple_of(2) { 1 } else { -1 },
            });
            return;
        }
        let first = (!covered & full).trailing_zeros();
        for (i, r) in ribbons.iter().enumerate() {
            if r.mask & (1 << first) != 0 && r.mask & covered == 0 {
                chosen.push(i);
                cover(covered | r.mask, full, ribbons, chosen, mu, out);
                chosen.pop();
            }
        }
    }
    cover(0, full, &ribbons, &mut chosen, mu, &mut out);
    Ok(out)
}

/// Signed census by type: the map `λ ↦ K⁻¹_{λ,μ^tr}`.
pub fn ribbon_expansion(mu: &Partition) -> Result<BTreeMap<Partition, i64>> {
    let mut out = BTreeMap::new();
    for d in special_ribbon_diagrams(mu)? {
        *out.entry(d.ribbon_type()).or_insert(0) += d.sign;
    }
    out.retain(|_, v| *v != 0);
    Ok(out)
}

/// `K⁻¹_{λ,μ^tr}` as the signed count of special ribbon diagrams of shape `μ`
/// and type `λ`.
pub fn inverse_kostka_ribbon(lambda: &Partition, mu: &Partition) -> Result<i64> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch { expected: mu.size(), found: lambda.size() });
    }
    Ok(special_ribbon_diagrams(mu)?
        .into_iter()
        .filter(|d| &d.ribbon_type() == lambda)
        .map(|d| d.sign)
        .sum())
}
