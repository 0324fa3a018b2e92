//! Chromatic symmetric and quasisymmetric functions, trace evaluations at
//! graphs and the identities relating them.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::partition::{compositions_of, partitions_of, DescentSet, Partition};
use crate::perm::{all_permutations, bruhat_lower_interval};
use crate::poset::Poset;
use crate::scalar::{rat, Rational, Scalar};
use crate::symfunc::{to_fundamental, Basis, QBasis, QSymFunc, SymFunc};
use crate::tableaux::{descent_set, for_each_tableau, PTableau, Predicate};
use crate::trace::{frobenius, frobenius_inverse, Trace, TraceBasis};

fn x_cache() -> &'static Mutex<HashMap<Graph, Arc<SymFunc>>> {
    static CACHE: OnceLock<Mutex<HashMap<Graph, Arc<SymFunc>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `X_G = Σ_λ c(G, λ) m_λ`.
pub fn chromatic_symfunc(g: &Graph) -> SymFunc {
    if let Some(x) = x_cache().lock().expect("cache lock").get(g) {
        return (**x).clone();
    }
    let terms = partitions_of(g.n()).into_iter().map(|l| {
        let c = Scalar::from_int(g.c(&l) as i64);
        (l, c)
    });
    let x = SymFunc::from_terms(g.n(), Basis::M, terms).expect("partitions of n");
    x_cache().lock().expect("cache lock").insert(g.clone(), Arc::new(x.clone()));
    x
}

/// `X_{G,q} = Σ_α c(G, α, q) M_α`, with `q` marking `inv_G`.
pub fn chromatic_qsym(g: &Graph) -> QSymFunc {
    let mut out = QSymFunc::zero(g.n(), QBasis::Monomial);
    for alpha in compositions_of(g.n()) {
        out.add_term(&alpha.to_descent_set(), &g.count_colorings_q(&alpha));
    }
    out
}

/// The symmetric function of a quasisymmetric one, or the witnessing failure.
pub fn symmetrize_if_symmetric(f: &QSymFunc) -> Result<SymFunc> {
    f.to_symmetric()
}

/// `X_{G,q}` as a symmetric function with polynomial coefficients.
pub fn chromatic_symfunc_q(g: &Graph) -> Result<SymFunc> {
    symmetrize_if_symmetric(&chromatic_qsym(g))
}

/// `X_{inc(P),q}` for a canonically labeled unit interval order.
pub fn chromatic_symfunc_q_uio(p: &Poset) -> Result<SymFunc> {
    if !p.is_unit_interval_order() {
        return Err(Error::NotUnitIntervalOrder);
    }
    if !p.has_canonical_uio_labeling() {
        return Err(Error::NonCanonicalLabeling);
    }
    chromatic_symfunc_q(&p.incomparability_graph())
}

/// Read `θ^λ_basis(G)` off `X = X_G` for every `λ`, in canonical order, using
/// `X = Σ ε m = Σ η f = Σ (-1)^{n-ℓ} ψ/z p = Σ χ^{λ^tr} s = Σ φ e = Σ γ h`.
pub fn traces_from_x(x: &SymFunc, basis: TraceBasis) -> Vec<Scalar> {
    let n = x.n();
    let target = match basis {
        TraceBasis::Epsilon => Basis::M,
        TraceBasis::Eta => Basis::F,
        TraceBasis::Psi => Basis::P,
        TraceBasis::Chi => Basis::S,
        TraceBasis::Phi => Basis::E,
        TraceBasis::Gamma => Basis::H,
    };
    let y = x.convert(target);
    partitions_of(n)
        .iter()
        .map(|l| match basis {
            TraceBasis::Psi => y.coeff(l).scale(&Rational::from_integer((l.sign() * l.z() as i64).into())),
            TraceBasis::Chi => y.coeff(&l.transpose()),
            _ => y.coeff(l),
        })
        .collect()
}

/// `θ^λ_basis(G)` for every `λ ⊢ n`, in canonical order.
pub fn graph_traces(g: &Graph, basis: TraceBasis) -> Vec<Scalar> {
    traces_from_x(&chromatic_symfunc(g), basis)
}

/// `θ^λ_basis(G)`; the empty graph and empty partition give `1`.
pub fn graph_trace(g: &Graph, basis: TraceBasis, lambda: &Partition) -> Result<Scalar> {
    if lambda.size() != g.n() {
        return Err(Error::SizeMismatch { expected: g.n(), found: lambda.size() });
    }
    if g.n() == 0 {
        return Ok(Scalar::one());
    }
    let idx = partitions_of(g.n()).iter().position(|l| l == lambda).expect("partition of n");
    Ok(graph_traces(g, basis).swap_remove(idx))
}

/// `θ(G) = Σ_λ a_λ c(G, λ)` where `θ = Σ a_λ ε^λ`.
pub fn trace_of_graph(theta: &Trace, g: &Graph) -> Result<Scalar> {
    if theta.n() != g.n() {
        return Err(Error::SizeMismatch { expected: theta.n(), found: g.n() });
    }
    let coords = theta.coordinates(TraceBasis::Epsilon);
    Ok(partitions_of(g.n())
        .iter()
        .zip(&coords)
        .filter(|(_, a)| !a.is_zero())
        .map(|(l, a)| a * &Scalar::from_int(g.c(l) as i64))
        .sum())
}

/// `Σ_{|J| = k} θ_1(G_J) θ_2(G_{J̄})` with `k = |θ_1|`.
pub fn induced_product_trace(theta1: &Trace, theta2: &Trace, g: &Graph) -> Result<Scalar> {
    let (k, n) = (theta1.n(), g.n());
    if k + theta2.n() != n {
        return Err(Error::SizeMismatch { expected: n, found: k + theta2.n() });
    }
    let mut total = Scalar::zero();
    for mask in 0u32..(1u32 << n) {
        if mask.count_ones() as usize != k {
            continue;
        }
        let a = trace_or_unit(theta1, &g.induced_mask(mask))?;
        let b = trace_or_unit(theta2, &g.induced_mask(!mask & ((1u64 << n) - 1) as u32))?;
        total += &(&a * &b);
    }
    Ok(total)
}

fn trace_or_unit(theta: &Trace, g: &Graph) -> Result<Scalar> {
    if g.n() == 0 {
        Ok(theta.values().first().cloned().unwrap_or_else(Scalar::one))
    } else {
        trace_of_graph(theta, g)
    }
}

/// The trace whose Frobenius image is `Frob(θ_1) Frob(θ_2)`.
pub fn induction_product(theta1: &Trace, theta2: &Trace) -> Trace {
    frobenius_inverse(&frobenius(theta1).multiply(&frobenius(theta2)))
}

/// `X_G` with its trace coefficient tables.
#[derive(Clone, Debug)]
pub struct ChromaticExpansion {
    x: SymFunc,
    q: bool,
}

impl ChromaticExpansion {
    pub fn new(g: &Graph) -> Self {
        ChromaticExpansion { x: chromatic_symfunc(g), q: false }
    }

    /// The `q`-version; requires `X_{G,q}` to be symmetric.
    pub fn new_q(g: &Graph) -> Result<Self> {
        Ok(ChromaticExpansion { x: chromatic_symfunc_q(g)?, q: true })
    }

    pub fn is_q(&self) -> bool {
        self.q
    }

    pub fn x(&self) -> &SymFunc {
        &self.x
    }

    pub fn in_basis(&self, basis: Basis) -> SymFunc {
        self.x.convert(basis)
    }

    pub fn omega_in_basis(&self, basis: Basis) -> SymFunc {
        self.x.omega().convert(basis)
    }

    pub fn traces(&self, basis: TraceBasis) -> BTreeMap<Partition, Scalar> {
        partitions_of(self.x.n()).into_iter().zip(traces_from_x(&self.x, basis)).collect()
    }
}

/// `ξ^S(inc(P))` three ways.
#[derive(Clone, Debug, Serialize)]
pub struct FundamentalCoefficients {
    /// P-permutations by P-descent set.
    pub census: BTreeMap<DescentSet, u64>,
    /// Coefficient of `F_{n,S}` in `ω X_{inc(P)}`.
    pub from_omega_x: BTreeMap<DescentSet, Scalar>,
    /// Coefficient of `F_{n,[n-1] ∖ S}` in `X_{inc(P)}`.
    pub from_x: BTreeMap<DescentSet, Scalar>,
}

impl FundamentalCoefficients {
    pub fn agree(&self) -> bool {
        let expected = |s: &DescentSet| Scalar::from_int(self.census.get(s).copied().unwrap_or(0) as i64);
        let keys: Vec<&DescentSet> = self.census.keys().chain(self.from_omega_x.keys()).chain(self.from_x.keys()).collect();
        keys.into_iter().all(|s| {
            let want = expected(s);
            self.from_omega_x.get(s).cloned().unwrap_or_default() == want && self.from_x.get(s).cloned().unwrap_or_default() == want
        })
    }
}

pub fn fundamental_coefficients(p: &Poset) -> FundamentalCoefficients {
    let n = p.n();
    let mut census = BTreeMap::new();
    for w in all_permutations(n) {
        *census.entry(descent_set(p, &w)).or_insert(0u64) += 1;
    }
    let x = chromatic_symfunc(&p.incomparability_graph());
    let omega = to_fundamental(&x.omega());
    let plain = to_fundamental(&x);
    let mut from_omega_x = BTreeMap::new();
    let mut from_x = BTreeMap::new();
    for s in DescentSet::all(n) {
        let a = omega.coeff(&s);
        if !a.is_zero() {
            from_omega_x.insert(s.clone(), a);
        }
        let b = plain.coeff(&s.complement());
        if !b.is_zero() {
            from_x.insert(s, b);
        }
    }
    FundamentalCoefficients { census, from_omega_x, from_x }
}

/// Sides of the three subset-sum identities for graph traces.
#[derive(Clone, Debug, Serialize)]
pub struct TraceIdentityReport {
    pub n: usize,
    pub eta_lhs: Scalar,
    pub eta_rhs: Scalar,
    pub epsilon_lhs: Scalar,
    pub epsilon_rhs: Scalar,
    pub alternating_sum: Scalar,
}

impl TraceIdentityReport {
    pub fn holds(&self) -> bool {
        self.eta_lhs == self.eta_rhs && self.epsilon_lhs == self.epsilon_rhs && (self.n == 0 || self.alternating_sum.is_zero())
    }
}

/// `θ^{(k)}(G)` for `θ ∈ {ε, η, ψ}`; `1` on the empty graph.
fn single_row_trace(g: &Graph, basis: TraceBasis) -> Scalar {
    if g.n() == 0 {
        return Scalar::one();
    }
    graph_traces(g, basis).swap_remove(0)
}

/// `n η^n(G) = Σ_J ψ^{|J|}(G_J) η(G_{J̄})`,
/// `n ε^n(G) = Σ_J (-1)^{|J|-1} ψ^{|J|}(G_J) ε(G_{J̄})` (both over nonempty `J`),
/// `Σ_J (-1)^{|J|} ε(G_J) η(G_{J̄}) = 0`.
pub fn verify_trace_identities(g: &Graph) -> TraceIdentityReport {
    let n = g.n();
    let full = if n == 0 { 0 } else { ((1u64 << n) - 1) as u32 };
    let mut table: HashMap<(u32, TraceBasis), Scalar> = HashMap::new();
    let mut value = |mask: u32, basis: TraceBasis| -> Scalar {
        table.entry((mask, basis)).or_insert_with(|| single_row_trace(&g.induced_mask(mask), basis)).clone()
    };
    let nn = Scalar::from_int(n as i64);
    let eta_lhs = &nn * &value(full, TraceBasis::Eta);
    let epsilon_lhs = &nn * &value(full, TraceBasis::Epsilon);
    let mut eta_rhs = Scalar::zero();
    let mut epsilon_rhs = Scalar::zero();
    let mut alternating_sum = Scalar::zero();
    for j in 0..=full {
        let rest = full & !j;
        let size = j.count_ones();
        let sign = if size % 2 == 0 { Scalar::one() } else { Scalar::from_int(-1) };
        if size > 0 {
            let psi = value(j, TraceBasis::Psi);
            eta_rhs += &(&psi * &value(rest, TraceBasis::Eta));
            epsilon_rhs += &(&(&psi * &value(rest, TraceBasis::Epsilon)) * &(-&sign));
        }
        alternating_sum += &(&(&value(j, TraceBasis::Epsilon) * &value(rest, TraceBasis::Eta)) * &sign);
    }
    TraceIdentityReport { n, eta_lhs, eta_rhs, epsilon_lhs, epsilon_rhs, alternating_sum }
}

/// `Σ_λ φ_q^λ(inc(P))` computed five ways, and its refinement by `ℓ(λ) = k`.
#[derive(Clone, Debug, Serialize)]
pub struct QTraceSums {
    /// From the `e`-expansion of `X_{inc(P),q}`.
    pub from_expansion: Scalar,
    /// `Σ_O q^{inv(O)}` over acyclic orientations.
    pub orientations: Scalar,
    /// `Σ_U q^{pinv(U)}` over descent-free P-permutations.
    pub descent_free: Scalar,
    /// `Σ_{v ≤ w(P)} q^{ℓ(v)}`.
    pub bruhat: Scalar,
    /// `Σ_U q^{inv(U)}` over excedance-free P-permutations.
    pub excedance_free: Scalar,
    /// Index `k - 1`: `(Σ_{ℓ(λ)=k} φ_q^λ, k-source orientations, k-record permutations)`.
    pub by_length: Vec<[Scalar; 3]>,
}

impl QTraceSums {
    pub fn total_agrees(&self) -> bool {
        let t = &self.from_expansion;
        [&self.orientations, &self.descent_free, &self.bruhat, &self.excedance_free].iter().all(|v| *v == t)
    }

    pub fn refined_agrees(&self) -> bool {
        self.by_length.iter().all(|[a, b, c]| a == b && b == c)
    }
}

fn q_power(k: usize) -> Scalar {
    Scalar::monomial(rat(1, 1), k)
}

pub fn q_trace_sums(p: &Poset) -> Result<QTraceSums> {
    let n = p.n();
    let x = chromatic_symfunc_q_uio(p)?;
    let w = p.uio_to_312_avoiding()?;
    let e = x.convert(Basis::E);
    let mut by_length = vec![[Scalar::zero(), Scalar::zero(), Scalar::zero()]; n];
    let mut from_expansion = Scalar::zero();
    for (l, c) in e.terms() {
        from_expansion += c;
        by_length[l.len() - 1][0] += c;
    }
    let mut orientations = Scalar::zero();
    for o in p.incomparability_graph().acyclic_orientations() {
        let t = q_power(o.inv());
        orientations += &t;
        by_length[o.sources().len() - 1][1] += &t;
    }
    let mut descent_free = Scalar::zero();
    let row = Partition::row(n);
    for_each_tableau(p, &row, Predicate::RowSemistrict, |u: &PTableau| {
        let t = q_power(u.pinv(p));
        descent_free += &t;
        by_length[u.records(p) - 1][2] += &t;
    });
    let bruhat = bruhat_lower_interval(&w).iter().map(|v| q_power(v.length())).sum();
    let mut excedance_free = Scalar::zero();
    for_each_tableau(p, &row, Predicate::ExcedanceFree, |u: &PTableau| {
        excedance_free += &q_power(u.inv());
    });
    Ok(QTraceSums { from_expansion, orientations, descent_free, bruhat, excedance_free, by_length })
}
