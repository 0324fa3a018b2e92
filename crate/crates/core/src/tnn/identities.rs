//! π-tableaux and the immanant identities for path matrices of planar networks.

use std::str::FromStr;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::chromatic::{induction_product, trace_of_graph};
use crate::error::{Error, Result};
use crate::graph::ordered_set_partitions;
use crate::group_algebra::kl_basis_element_q1;
use crate::partition::{partitions_of, Partition};
use crate::perm::all_permutations;
use crate::poset::{unit_interval_orders, Poset};
use crate::report::{Check, Expectation, Report};
use crate::scalar::Scalar;
use crate::tableaux::{count_tableaux, PTableau, Predicate};
use crate::trace::{evaluate, trace_basis, Trace, TraceBasis};

use super::matrix::{immanant, power_immanant, Matrix};
use super::network::{EnumerationLimits, PathFamily, PlanarNetwork};

/// Conditions on fillings of a Young diagram by the paths of a family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PiPredicate {
    RowClosedLeftRowStrict,
    Cylindrical,
    ColumnStrictCylindrical,
}

impl PiPredicate {
    pub const ALL: [PiPredicate; 3] =
        [PiPredicate::RowClosedLeftRowStrict, PiPredicate::Cylindrical, PiPredicate::ColumnStrictCylindrical];

    pub fn name(self) -> &'static str {
        match self {
            PiPredicate::RowClosedLeftRowStrict => "row-closed-left-row-strict",
            PiPredicate::Cylindrical => "cylindrical",
            PiPredicate::ColumnStrictCylindrical => "column-strict-cylindrical",
        }
    }
}

impl FromStr for PiPredicate {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_lowercase().replace('_', "-");
        PiPredicate::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown π-tableau condition '{s}'")))
    }
}

/// `L(U)`: source indices, which are the entries themselves.
pub fn left_tableau(u: &PTableau) -> Vec<Vec<usize>> {
    u.rows().to_vec()
}

/// `R(U)`: sink indices of the paths in `U`.
pub fn right_tableau(u: &PTableau, family: &PathFamily) -> Vec<Vec<usize>> {
    let w = family.type_permutation();
    u.rows().iter().map(|r| r.iter().map(|&i| w.at(i)).collect()).collect()
}

pub fn is_left_row_strict(u: &PTableau) -> bool {
    u.rows().iter().all(|r| r.windows(2).all(|p| p[0] < p[1]))
}

pub fn is_row_closed(u: &PTableau, family: &PathFamily) -> bool {
    left_tableau(u).into_iter().zip(right_tableau(u, family)).all(|(mut l, mut r)| {
        l.sort_unstable();
        r.sort_unstable();
        l == r
    })
}

/// Each path starts where the previous one in its row ends, cyclically.
pub fn is_cylindrical(u: &PTableau, family: &PathFamily) -> bool {
    let w = family.type_permutation();
    u.rows().iter().all(|r| (0..r.len()).all(|k| w.at(r[k]) == r[(k + 1) % r.len()]))
}

/// All π-tableaux of shape `λ` for `family` satisfying `pred`.
pub fn pi_tableaux(family: &PathFamily, lambda: &Partition, pred: PiPredicate) -> Result<Vec<PTableau>> {
    let n = family.n();
    if lambda.size() != n {
        return Err(Error::SizeMismatch { expected: n, found: lambda.size() });
    }
    let w = family.type_permutation();
    let mut out = Vec::new();
    match pred {
        PiPredicate::RowClosedLeftRowStrict => {
            for blocks in ordered_set_partitions(n, lambda) {
                if blocks.iter().all(|b| b.iter().all(|&i| b.binary_search(&w.at(i)).is_ok())) {
                    out.push(PTableau::new(blocks)?);
                }
            }
        }
        PiPredicate::Cylindrical | PiPredicate::ColumnStrictCylindrical => {
            let p = if pred == PiPredicate::ColumnStrictCylindrical { Some(family.poset()?) } else { None };
            for blocks in ordered_set_partitions(n, lambda) {
                let mut rows_choices: Vec<Vec<Vec<usize>>> = Vec::with_capacity(blocks.len());
                for b in &blocks {
                    let mut row = vec![b[0]];
                    while row.len() < b.len() {
                        row.push(w.at(*row.last().expect("nonempty")));
                    }
                    let mut sorted = row.clone();
                    sorted.sort_unstable();
                    if sorted != *b || w.at(row[row.len() - 1]) != row[0] {
                        rows_choices.clear();
                        break;
                    }
                    rows_choices.push((0..row.len()).map(|s| row[s..].iter().chain(&row[..s]).copied().collect()).collect());
                }
                if rows_choices.len() != blocks.len() {
                    continue;
                }
                let mut idx = vec![0usize; rows_choices.len()];
                'outer: loop {
                    let rows = idx.iter().zip(&rows_choices).map(|(&k, c)| c[k].clone()).collect();
                    let u = PTableau::new(rows)?;
                    if p.as_ref().is_none_or(|p| u.is_column_strict(p)) {
                        out.push(u);
                    }
                    for pos in (0..idx.len()).rev() {
                        idx[pos] += 1;
                        if idx[pos] < rows_choices[pos].len() {
                            continue 'outer;
                        }
                        idx[pos] = 0;
                    }
                    break;
                }
            }
        }
    }
    Ok(out)
}

/// `Σ_{π ∈ 𝒫(D)} wgt(π) · #{π-tableaux of shape λ satisfying pred}`.
pub fn pi_tableau_count(d: &PlanarNetwork, lambda: &Partition, pred: PiPredicate, limits: &EnumerationLimits) -> Result<Scalar> {
    let mut total = Scalar::zero();
    for f in d.families(None, limits)? {
        let k = pi_tableaux(&f, lambda, pred)?.len();
        if k > 0 {
            total += &(f.weight() * &Scalar::from_int(k as i64));
        }
    }
    Ok(total)
}

/// `Σ_{π ∈ 𝒫_e(D)} wgt(π) · #{P(π)-tableaux of shape λ satisfying pred}`.
pub fn poset_tableau_count(d: &PlanarNetwork, lambda: &Partition, pred: Predicate, limits: &EnumerationLimits) -> Result<Scalar> {
    let mut total = Scalar::zero();
    for (w, p) in identity_posets(d, limits)? {
        let k = count_tableaux(&p, lambda, pred);
        if k > 0 {
            total += &(&w * &Scalar::from_int(k as i64));
        }
    }
    Ok(total)
}

fn identity_posets(d: &PlanarNetwork, limits: &EnumerationLimits) -> Result<Vec<(Scalar, Poset)>> {
    d.families(Some(&crate::perm::Permutation::identity(d.n())), limits)?
        .into_iter()
        .map(|f| Ok((f.weight().clone(), f.poset()?)))
        .collect()
}

fn masks_of_size(n: usize, k: usize) -> impl Iterator<Item = u32> {
    (0u32..(1u32 << n)).filter(move |m| m.count_ones() as usize == k)
}

fn full(n: usize) -> u32 {
    ((1u64 << n) - 1) as u32
}

fn indices(mask: u32) -> Vec<usize> {
    (0..32).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect()
}

/// `det(A_{I,J})` against vertex-disjoint families from `s_I` to `t_J`, for every `(I, J)`.
pub fn verify_lindstrom(d: &PlanarNetwork, limits: &EnumerationLimits) -> Result<Report> {
    let a = d.path_matrix();
    let n = d.n();
    let mut r = Report::new();
    let nonint: Scalar = d.nonintersecting_families(limits)?.iter().map(|f| f.weight().clone()).sum();
    r.push(Check::equal("det versus nonintersecting identity families", a.det(), nonint));
    let catalog = d.path_catalog(limits)?;
    for k in 1..=n {
        for rm in masks_of_size(n, k) {
            for cm in masks_of_size(n, k) {
                let (rows, cols) = (indices(rm), indices(cm));
                let lhs = a.minor(&rows, &cols)?;
                let rhs = d.nonintersecting_weight(&rows, &cols, &catalog)?;
                r.push(Check::equal(format!("minor {rows:?}x{cols:?}"), lhs, rhs));
            }
        }
    }
    Ok(r)
}

/// `Imm_{ε^λ}` and `Imm_{η^λ}` against sums of products of principal determinants and permanents.
pub fn verify_lmw(a: &Matrix, lambda: &Partition) -> Result<Report> {
    let n = a.n();
    if lambda.size() != n {
        return Err(Error::SizeMismatch { expected: n, found: lambda.size() });
    }
    let mut eps_sum = Scalar::zero();
    let mut eta_sum = Scalar::zero();
    for blocks in ordered_set_partitions(n, lambda) {
        let subs: Vec<Matrix> = blocks.iter().map(|b| a.submatrix(b, b)).collect::<Result<_>>()?;
        eps_sum += &subs.iter().fold(Scalar::one(), |acc, m| &acc * &m.det());
        eta_sum += &subs.iter().fold(Scalar::one(), |acc, m| &acc * &m.perm());
    }
    let mut r = Report::new();
    let eps = immanant(&trace_basis(n, TraceBasis::Epsilon, lambda)?, a)?;
    let eta = immanant(&trace_basis(n, TraceBasis::Eta, lambda)?, a)?;
    r.push(Check::equal(format!("epsilon^{lambda} immanant versus determinant products"), eps, eps_sum));
    r.push(Check::equal(format!("eta^{lambda} immanant versus permanent products"), eta, eta_sum));
    Ok(r)
}

/// `Σ_{|J| = k} Imm_{θ_1}(A_{J,J}) Imm_{θ_2}(A_{J̄,J̄})` with `k = |θ_1|`.
pub fn immanant_factorization(theta1: &Trace, theta2: &Trace, a: &Matrix) -> Result<Scalar> {
    let (k, n) = (theta1.n(), a.n());
    if k + theta2.n() != n {
        return Err(Error::SizeMismatch { expected: n, found: k + theta2.n() });
    }
    let mut total = Scalar::zero();
    for mask in masks_of_size(n, k) {
        let x = immanant(theta1, &a.principal_mask(mask))?;
        if x.is_zero() {
            continue;
        }
        let y = immanant(theta2, &a.principal_mask(!mask & full(n)))?;
        total += &(&x * &y);
    }
    Ok(total)
}

/// The factorization against the immanant of the induced product trace.
pub fn verify_factorization(theta1: &Trace, theta2: &Trace, a: &Matrix) -> Result<Report> {
    let lhs = immanant(&induction_product(theta1, theta2), a)?;
    let rhs = immanant_factorization(theta1, theta2, a)?;
    let mut r = Report::new();
    r.push(Check::equal(format!("induced product of degrees {} and {}", theta1.n(), theta2.n()), lhs, rhs));
    Ok(r)
}

/// The three identities pairing power sum immanants, permanents and determinants.
pub fn verify_muir(a: &Matrix) -> Result<Report> {
    let n = a.n();
    let nn = Scalar::from_int(n as i64);
    let (mut perm_sum, mut det_sum, mut alt) = (Scalar::zero(), Scalar::zero(), Scalar::zero());
    for mask in 0u32..(1u32 << n) {
        let i = mask.count_ones() as usize;
        let (inner, outer) = (a.principal_mask(mask), a.principal_mask(!mask & full(n)));
        let sign = if i.is_multiple_of(2) { Scalar::one() } else { -Scalar::one() };
        alt += &(&sign * &(&inner.det() * &outer.perm()));
        if i == 0 {
            continue;
        }
        let psi = power_immanant(&Partition::row(i), &inner)?;
        perm_sum += &(&psi * &outer.perm());
        det_sum += &(&(-&sign) * &(&psi * &outer.det()));
    }
    let mut r = Report::new();
    r.push(Check::equal("n perm versus power sum and permanent products", &nn * &a.perm(), perm_sum));
    r.push(Check::equal("n det versus signed power sum and determinant products", &nn * &a.det(), det_sum));
    r.push(Check::equal("alternating determinant-permanent sum", alt, Scalar::zero()));
    Ok(r)
}

/// `Imm_θ(A) = Σ_K wgt(K) θ(z(K))`, and `θ(z(K)) = Σ_{π ∈ Π_e(K)} θ(inc(P(π)))` for each skeleton.
pub fn skeleton_decomposition_check(d: &PlanarNetwork, theta: &Trace, limits: &EnumerationLimits) -> Result<Report> {
    let a = d.path_matrix();
    let mut r = Report::new();
    let mut via_z = Scalar::zero();
    let mut via_posets = Scalar::zero();
    let mut per_skeleton = Report::new();
    for (k, skel) in d.skeletons(limits)?.iter().enumerate() {
        let tz = evaluate(theta, &skel.z())?;
        let mut tp = Scalar::zero();
        for f in skel.identity_families() {
            tp += &trace_of_graph(theta, &f.poset()?.incomparability_graph())?;
        }
        via_z += &(&skel.weight * &tz);
        via_posets += &(&skel.weight * &tp);
        per_skeleton.push(Check::equal(format!("skeleton {k} of {} edges", skel.edges.len()), tz, tp));
    }
    let imm = immanant(theta, &a)?;
    r.push(Check::equal("immanant versus skeleton sum", imm.clone(), via_z));
    r.push(Check::equal("immanant versus identity-family poset sum", imm, via_posets));
    r.extend(per_skeleton);
    Ok(r)
}

/// Hook immanants against standard tableaux counts, for every hook.
pub fn verify_hook_immanants(d: &PlanarNetwork, limits: &EnumerationLimits) -> Result<Report> {
    let n = d.n();
    let a = d.path_matrix();
    let mut r = Report::new();
    for k in 1..=n {
        let hook = Partition::hook(n, k)?;
        let imm = immanant(&trace_basis(n, TraceBasis::Chi, &hook)?, &a)?;
        r.push(Check::equal(format!("chi^{hook} immanant versus standard tableaux"), imm, poset_tableau_count(d, &hook, Predicate::Standard, limits)?));
    }
    Ok(r)
}

/// The permanent against family weights and descent- and excedance-free counts.
pub fn verify_permanent(d: &PlanarNetwork, limits: &EnumerationLimits) -> Result<Report> {
    let n = d.n();
    let perm = d.path_matrix().perm();
    let all: Scalar = d.families(None, limits)?.iter().map(|f| f.weight().clone()).sum();
    let row = Partition::row(n);
    let mut r = Report::new();
    r.push(Check::equal("permanent versus family weights", perm.clone(), all));
    r.push(Check::equal("permanent versus descent-free permutations", perm.clone(), poset_tableau_count(d, &row, Predicate::RowSemistrict, limits)?));
    r.push(Check::equal("permanent versus excedance-free permutations", perm, poset_tableau_count(d, &row, Predicate::ExcedanceFree, limits)?));
    Ok(r)
}

/// [`verify_hook_immanants`] followed by [`verify_permanent`].
pub fn verify_hook_and_permanent(d: &PlanarNetwork, limits: &EnumerationLimits) -> Result<Report> {
    let mut r = verify_hook_immanants(d, limits)?;
    r.extend(verify_permanent(d, limits)?);
    Ok(r)
}

/// `Imm_{η^λ}` against the three tableau counts.
pub fn verify_eta_immanant(d: &PlanarNetwork, lambda: &Partition, limits: &EnumerationLimits) -> Result<Report> {
    let n = d.n();
    let imm = immanant(&trace_basis(n, TraceBasis::Eta, lambda)?, &d.path_matrix())?;
    let mut r = Report::new();
    r.push(Check::equal(
        format!("eta^{lambda}: row-closed left row-strict π-tableaux"),
        imm.clone(),
        pi_tableau_count(d, lambda, PiPredicate::RowClosedLeftRowStrict, limits)?,
    ));
    r.push(Check::equal(format!("eta^{lambda}: descent-free P-tableaux"), imm.clone(), poset_tableau_count(d, lambda, Predicate::RowSemistrict, limits)?));
    r.push(Check::equal(format!("eta^{lambda}: excedance-free P-tableaux"), imm, poset_tableau_count(d, lambda, Predicate::ExcedanceFree, limits)?));
    Ok(r)
}

/// `Imm_{ψ^λ}` against the three tableau counts.
pub fn verify_power_immanant(d: &PlanarNetwork, lambda: &Partition, limits: &EnumerationLimits) -> Result<Report> {
    let imm = power_immanant(lambda, &d.path_matrix())?;
    let mut r = Report::new();
    r.push(Check::equal(
        format!("psi^{lambda}: cyclically row-semistrict P-tableaux"),
        imm.clone(),
        poset_tableau_count(d, lambda, Predicate::CyclicallyRowSemistrict, limits)?,
    ));
    r.push(Check::equal(
        format!("psi^{lambda}: record-free row-semistrict P-tableaux"),
        imm.clone(),
        poset_tableau_count(d, lambda, Predicate::RecordFreeAndRowSemistrict, limits)?,
    ));
    r.push(Check::equal(format!("psi^{lambda}: cylindrical π-tableaux"), imm, pi_tableau_count(d, lambda, PiPredicate::Cylindrical, limits)?));
    Ok(r)
}

/// `Imm_{φ^λ}` against column-strict cylindrical π-tableaux. Equality is
/// expected for rectangles and only recorded otherwise.
pub fn verify_stembridge(d: &PlanarNetwork, lambda: &Partition, limits: &EnumerationLimits) -> Result<Report> {
    let imm = immanant(&trace_basis(d.n(), TraceBasis::Phi, lambda)?, &d.path_matrix())?;
    let count = pi_tableau_count(d, lambda, PiPredicate::ColumnStrictCylindrical, limits)?;
    let expectation = if lambda.is_rectangle() { Expectation::Equal } else { Expectation::Info };
    let mut r = Report::new();
    r.push(Check::new(format!("phi^{lambda}: immanant versus column-strict cylindrical π-tableaux"), imm, count, expectation));
    Ok(r)
}

/// A trace with small random integer coordinates in the irreducible basis.
pub fn random_trace<R: Rng>(n: usize, rng: &mut R) -> Trace {
    partitions_of(n).iter().fold(Trace::zero(n), |acc, l| {
        let c = Scalar::from_int(rng.gen_range(-3..=3));
        &acc + &trace_basis(n, TraceBasis::Chi, l).expect("partition of n").scale(&c)
    })
}

/// Random matrix with entries from `{-2, …, 3}` and occasional halves.
pub fn random_matrix<R: Rng>(n: usize, rng: &mut R) -> Matrix {
    let rows = (0..n)
        .map(|_| {
            (0..n)
                .map(|_| if rng.gen_bool(0.2) { Scalar::from_ratio(rng.gen_range(-3..=3), 2) } else { Scalar::from_int(rng.gen_range(-2..=3)) })
                .collect()
        })
        .collect();
    Matrix::new(rows).expect("square")
}

/// Empirical checks of the testable implications between nonnegativity
/// conditions, at order `n ≤ 5`.
pub fn tnn_implication_suite<R: Rng>(n: usize, networks: usize, rng: &mut R, limits: &EnumerationLimits) -> Result<Report> {
    if n > 5 {
        return Err(Error::LimitExceeded(format!("implication suite at n = {n} (maximum 5)")));
    }
    let mut r = Report::new();
    let parts = partitions_of(n);
    for t in 0..networks {
        let d = PlanarNetwork::random(n, 2 * n, rng)?;
        for l in &parts {
            let theta = trace_basis(n, TraceBasis::Phi, l)?;
            let mut rep = skeleton_decomposition_check(&d, &theta, limits)?;
            rep.checks.truncate(2);
            r.extend_prefixed(&format!("network {t}, phi^{l}"), rep);
        }
    }
    for p in unit_interval_orders(n) {
        let p = p.uio_canonical_labeling()?;
        let w = p.uio_to_312_avoiding()?;
        let kl = kl_basis_element_q1(&w)?;
        let g = p.incomparability_graph();
        for basis in TraceBasis::ALL {
            for l in &parts {
                let theta = trace_basis(n, basis, l)?;
                r.push(Check::equal(format!("w = {w}: {basis}^{l} at inc(P(w)) versus C'_w(1)"), trace_of_graph(&theta, &g)?, evaluate(&theta, &kl)?));
            }
        }
    }
    for w in all_permutations(n).into_iter().filter(|w| w.is_smooth()) {
        let kl = kl_basis_element_q1(&w)?;
        for l in &parts {
            let v = evaluate(&trace_basis(n, TraceBasis::Chi, l)?, &kl)?;
            r.push(Check::property(format!("chi^{l}(C'_{w}(1)) nonnegative"), v.is_nonnegative() == Some(true)));
        }
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn lim() -> EnumerationLimits {
        EnumerationLimits::default()
    }

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn staircase_counterexample() {
        let d = PlanarNetwork::staircase_example();
        let l = part(&[3, 2]);
        let families = d.families(None, &lim()).unwrap();
        let covering: Vec<&PathFamily> =
            families.iter().filter(|f| !pi_tableaux(f, &l, PiPredicate::ColumnStrictCylindrical).unwrap().is_empty()).collect();
        assert_eq!(covering.len(), 1);
        let shown: Vec<String> =
            pi_tableaux(covering[0], &l, PiPredicate::ColumnStrictCylindrical).unwrap().iter().map(ToString::to_string).collect();
        let mut shown = shown;
        shown.sort();
        let mut want = vec!["[4,5|1,2,3]", "[5,4|1,2,3]", "[5,4|2,3,1]", "[4,5|3,1,2]"];
        want.sort();
        assert_eq!(shown, want);
        assert_eq!(pi_tableau_count(&d, &l, PiPredicate::ColumnStrictCylindrical, &lim()).unwrap(), Scalar::from_int(4));
        let rep = verify_stembridge(&d, &l, &lim()).unwrap();
        assert_eq!(rep.checks[0].lhs, Scalar::from_int(7));
        assert_eq!(rep.checks[0].expectation, Expectation::Info);
    }

    #[test]
    fn staircase_suites() {
        let d = PlanarNetwork::staircase_example();
        assert!(verify_lindstrom(&d, &lim()).unwrap().holds());
        assert!(verify_hook_and_permanent(&d, &lim()).unwrap().holds());
        for l in partitions_of(5) {
            assert!(verify_eta_immanant(&d, &l, &lim()).unwrap().holds(), "{l}");
            assert!(verify_power_immanant(&d, &l, &lim()).unwrap().holds(), "{l}");
        }
        let theta = trace_basis(5, TraceBasis::Phi, &part(&[3, 2])).unwrap();
        let rep = skeleton_decomposition_check(&d, &theta, &lim()).unwrap();
        assert!(rep.holds());
        assert_eq!(rep.checks[0].lhs, Scalar::from_int(7));
        let a = d.path_matrix();
        assert!(verify_muir(&a).unwrap().holds());
    }

    #[test]
    fn cylindrical_counts_are_z_lambda() {
        let d = PlanarNetwork::staircase_example();
        for f in d.families(None, &lim()).unwrap() {
            let ct = f.type_permutation().cycle_type();
            for l in partitions_of(5) {
                let k = pi_tableaux(&f, &l, PiPredicate::Cylindrical).unwrap().len() as u64;
                assert_eq!(k, if l == ct { l.z() } else { 0 });
            }
        }
    }

    #[test]
    fn random_networks() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..10 {
            let n = rng.gen_range(1..=4);
            let d = PlanarNetwork::random(n, 5, &mut rng).unwrap();
            assert!(verify_lindstrom(&d, &lim()).unwrap().holds());
            assert!(verify_hook_and_permanent(&d, &lim()).unwrap().holds());
            for l in partitions_of(n) {
                assert!(verify_eta_immanant(&d, &l, &lim()).unwrap().holds());
                assert!(verify_power_immanant(&d, &l, &lim()).unwrap().holds());
                if l.is_rectangle() {
                    assert!(verify_stembridge(&d, &l, &lim()).unwrap().holds());
                }
            }
            let theta = random_trace(n, &mut rng);
            assert!(skeleton_decomposition_check(&d, &theta, &lim()).unwrap().holds());
        }
    }

    #[test]
    fn matrix_identities() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..10 {
            let a = random_matrix(4, &mut rng);
            assert!(verify_muir(&a).unwrap().holds());
            for l in partitions_of(4) {
                assert!(verify_lmw(&a, &l).unwrap().holds());
            }
            let t1 = random_trace(1 + rng.gen_range(0..3), &mut rng);
            let t2 = random_trace(4 - t1.n(), &mut rng);
            assert!(verify_factorization(&t1, &t2, &a).unwrap().holds());
        }
        assert!(verify_muir(&Matrix::identity(3)).unwrap().holds());
    }

    #[test]
    fn row_closed_counts() {
        let d = PlanarNetwork::staircase_example();
        let f = &d.families(Some(&"23154".parse().unwrap()), &lim()).unwrap()[0];
        for u in pi_tableaux(f, &part(&[3, 2]), PiPredicate::RowClosedLeftRowStrict).unwrap() {
            assert!(is_left_row_strict(&u) && is_row_closed(&u, f));
        }
        assert_eq!(pi_tableaux(f, &part(&[3, 2]), PiPredicate::RowClosedLeftRowStrict).unwrap().len(), 1);
        assert_eq!(pi_tableaux(f, &part(&[5]), PiPredicate::RowClosedLeftRowStrict).unwrap().len(), 1);
        assert!(pi_tableaux(f, &part(&[4, 1]), PiPredicate::RowClosedLeftRowStrict).unwrap().is_empty());
        assert_eq!("cylindrical".parse::<PiPredicate>().unwrap(), PiPredicate::Cylindrical);
    }

    #[test]
    fn implication_suite_small() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for n in 1..=4 {
            let rep = tnn_implication_suite(n, 2, &mut rng, &lim()).unwrap();
            assert!(rep.holds(), "{:?}", rep.failures().next());
        }
    }
}
