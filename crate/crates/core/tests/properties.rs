use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use chromsym::chromatic::{chromatic_symfunc, verify_trace_identities};
use chromsym::graph::Graph;
use chromsym::partition::partitions_of;
use chromsym::perm::all_permutations;
use chromsym::poset::Poset;
use chromsym::tableaux::equidistribution_check;
use chromsym::tnn::{immanant, random_matrix, random_trace, verify_lindstrom, EnumerationLimits, Matrix, PlanarNetwork};
use chromsym::trace::{frobenius, frobenius_inverse};
use chromsym::{Basis, Scalar};

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn arb_graph() -> impl Strategy<Value = Graph> {
    (1usize..=6).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (1..=n).flat_map(|a| (a + 1..=n).map(move |b| (a, b))).collect();
        proptest::collection::vec(any::<bool>(), pairs.len())
            .prop_map(move |keep| Graph::from_edges(n, pairs.iter().zip(keep).filter(|(_, k)| *k).map(|(e, _)| *e)).unwrap())
    })
}

fn arb_poset() -> impl Strategy<Value = Poset> {
    (1usize..=6, 0.0f64..1.0, any::<u64>()).prop_map(|(n, p, seed)| Poset::random(n, p, &mut rng(seed)))
}

/// Proper colorings using colour `i` exactly `counts[i]` times, by brute force.
fn colorings(g: &Graph, counts: &[usize]) -> u64 {
    fn go(g: &Graph, v: usize, colour: &mut Vec<usize>, left: &mut [usize]) -> u64 {
        if v > g.n() {
            return 1;
        }
        let mut total = 0;
        for c in 0..left.len() {
            if left[c] == 0 || (1..v).any(|u| colour[u] == c && g.has_edge(u, v)) {
                continue;
            }
            left[c] -= 1;
            colour[v] = c;
            total += go(g, v + 1, colour, left);
            left[c] += 1;
        }
        total
    }
    go(g, 1, &mut vec![usize::MAX; g.n() + 1], &mut counts.to_vec())
}

fn transpose(a: &Matrix) -> Matrix {
    let rows = a.rows();
    let t: Vec<Vec<Scalar>> = (0..a.n()).map(|j| rows.iter().map(|r| r[j].clone()).collect()).collect();
    Matrix::new(t).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn monomial_coefficients_count_colorings(g in arb_graph()) {
        let x = chromatic_symfunc(&g);
        prop_assert_eq!(x.basis(), Basis::M);
        for l in partitions_of(g.n()) {
            prop_assert_eq!(x.coeff(&l), Scalar::from_int(colorings(&g, l.parts()) as i64), "lambda {}", l);
        }
    }

    #[test]
    fn trace_identities_hold_on_graphs(g in arb_graph()) {
        prop_assert!(verify_trace_identities(&g).holds());
    }

    #[test]
    fn omega_is_an_involution(g in arb_graph(), b in 0usize..6) {
        let x = chromatic_symfunc(&g).convert(Basis::ALL[b]);
        prop_assert_eq!(x.omega().omega(), x);
    }

    #[test]
    fn permutation_statistics_equidistributed(p in arb_poset()) {
        prop_assert!(equidistribution_check(&p).holds());
    }

    #[test]
    fn frobenius_round_trip(n in 1usize..=6, seed in any::<u64>()) {
        let t = random_trace(n, &mut rng(seed));
        prop_assert_eq!(frobenius_inverse(&frobenius(&t)), t);
    }

    #[test]
    fn immanants_are_transpose_invariant(n in 1usize..=4, seed in any::<u64>()) {
        let mut r = rng(seed);
        let a = random_matrix(n, &mut r);
        let t = random_trace(n, &mut r);
        prop_assert_eq!(immanant(&t, &a).unwrap(), immanant(&t, &transpose(&a)).unwrap());
    }

    #[test]
    fn determinant_is_multiplicative(n in 1usize..=4, seed in any::<u64>()) {
        let mut r = rng(seed);
        let (a, b) = (random_matrix(n, &mut r), random_matrix(n, &mut r));
        let (ra, rb) = (a.rows(), b.rows());
        let prod: Vec<Vec<Scalar>> = (0..n)
            .map(|i| (0..n).map(|j| (0..n).map(|k| &ra[i][k] * &rb[k][j]).sum()).collect())
            .collect();
        prop_assert_eq!(Matrix::new(prod).unwrap().det(), &a.det() * &b.det());
    }

    #[test]
    fn random_networks_satisfy_lindstrom(n in 1usize..=4, chords in 0usize..8, seed in any::<u64>()) {
        let d = PlanarNetwork::random(n, chords, &mut rng(seed)).unwrap();
        let limits = EnumerationLimits::default();
        prop_assert!(verify_lindstrom(&d, &limits).unwrap().holds());
        prop_assert!(d.path_matrix().is_totally_nonnegative().unwrap());
        let total: Scalar = d.families(None, &limits).unwrap().iter().map(|f| f.weight().clone()).sum();
        prop_assert_eq!(d.path_matrix().perm(), total);
    }
}

#[test]
fn leibniz_sum_matches_determinant() {
    let mut r = rng(11);
    for n in 1..=4 {
        let a = random_matrix(n, &mut r);
        let rows = a.rows();
        let leibniz: Scalar = all_permutations(n)
            .iter()
            .map(|w| {
                let term = (0..n).fold(Scalar::one(), |acc, i| &acc * &rows[i][w.at(i + 1) - 1]);
                term * Scalar::from_int(w.sign())
            })
            .sum();
        assert_eq!(a.det(), leibniz);
    }
}
