//! Property and identity tests: ring axioms on exact polynomials, the
//! defining identities of the correction polynomials against the oracle,
//! and the structural facts about invariant tables that the formulas rely
//! on.

mod common;

use num_bigint::BigInt;
use proptest::prelude::*;

use common::*;
use polyface_core::catalog::{
    binary_affine_matroid, greedy_johnson_stable_set, is_johnson_stable, projective_plane_f3,
    uniform_matroid,
};
use polyface_core::engine::{
    cut_faces_f, hypersimplex_f, hypersimplex_positive_dim_f, is_log_concave, is_unimodal,
    modular_pair_correction, split_correction,
};
use polyface_core::matroid::Matroid;
use polyface_core::oracle::{f_vector_oracle, OracleLimits};
use polyface_core::poly::{binom, multinom, FPolynomial, LaurentPolynomial};
use polyface_core::subset::{k_subsets, Subset};

fn poly_strategy() -> impl Strategy<Value = FPolynomial> {
    prop::collection::vec(-50i64..50, 0..8).prop_map(|v| FPolynomial::from_i64s(&v))
}

proptest! {
    #[test]
    fn add_commutes(a in poly_strategy(), b in poly_strategy()) {
        prop_assert_eq!(&a + &b, &b + &a);
    }

    #[test]
    fn mul_commutes_and_associates(
        a in poly_strategy(),
        b in poly_strategy(),
        c in poly_strategy()
    ) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn mul_distributes(a in poly_strategy(), b in poly_strategy(), c in poly_strategy()) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn sub_is_add_inverse(a in poly_strategy(), b in poly_strategy()) {
        prop_assert_eq!(&(&a - &b) + &b, a);
    }

    #[test]
    fn laurent_shift_round_trip(a in poly_strategy(), shift in 0i64..6) {
        let l = LaurentPolynomial::from_poly(&a).shift(shift);
        let back = l.shift(-shift).to_f_polynomial().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn laurent_mul_matches_poly_mul(a in poly_strategy(), b in poly_strategy()) {
        let la = LaurentPolynomial::from_poly(&a);
        let lb = LaurentPolynomial::from_poly(&b);
        prop_assert_eq!(la.mul(&lb).to_f_polynomial().unwrap(), &a * &b);
    }

    #[test]
    fn log_concave_implies_unimodal(seq in prop::collection::vec(1i64..200, 1..10)) {
        let seq: Vec<BigInt> = seq.into_iter().map(BigInt::from).collect();
        if is_log_concave(&seq).unwrap() {
            prop_assert!(is_unimodal(&seq));
        }
    }

    #[test]
    fn unimodal_matches_quantifier_definition(seq in prop::collection::vec(0i64..12, 1..8)) {
        let seq: Vec<BigInt> = seq.into_iter().map(BigInt::from).collect();
        let brute = (0..seq.len()).any(|j| {
            seq[..=j].windows(2).all(|w| w[0] <= w[1])
                && seq[j..].windows(2).all(|w| w[0] >= w[1])
        });
        prop_assert_eq!(is_unimodal(&seq), brute);
    }

    #[test]
    fn multinom_factors_through_binom(t in 0i64..40, i in -2i64..42, j in -2i64..42) {
        prop_assert_eq!(multinom(t, i, j), binom(t, i) * binom(t - i, j));
    }
}

/// Bases of the single-split matroid, built directly so the boundary case
/// h = n - k + r (a disconnected degeneration) is constructible too.
fn raw_schubert_bases(r: usize, k: usize, h: usize, n: usize) -> Matroid {
    let head = Subset::full(h);
    let bases: Vec<Subset> = k_subsets(n, k)
        .into_iter()
        .filter(|b| b.intersect(head).len() <= r)
        .collect();
    Matroid::new(n, bases).expect("parameters admit bases")
}

fn oracle(m: &Matroid) -> FPolynomial {
    f_vector_oracle(m, &OracleLimits::default()).expect("within limits")
}

/// The split correction is, by definition, the face count the hypersimplex
/// loses to the split: checked against the lattice oracle on every valid
/// parameter set with up to 9 elements, boundary cases included, plus a
/// seeded sample at 10 elements.
#[test]
fn split_correction_matches_oracle_definition() {
    let mut cases = Vec::new();
    for n in 3..=9usize {
        for k in 2..n {
            for r in 1..k {
                for h in r + 1..=n - k + r {
                    if h < n {
                        cases.push((r, k, h, n));
                    }
                }
            }
        }
    }
    let ten: Vec<(usize, usize, usize, usize)> = vec![(2, 3, 4, 10), (3, 5, 5, 10), (1, 4, 3, 10)];
    cases.extend(ten);
    for (r, k, h, n) in cases {
        let m = raw_schubert_bases(r, k, h, n);
        let expected = &hypersimplex_f(k, n).unwrap() - &oracle(&m);
        assert_eq!(
            split_correction(r, k, h, n).unwrap(),
            expected,
            "split correction differs from the oracle at ({r},{k},{h},{n})"
        );
    }
}

/// The pair correction satisfies its defining identity, with both split
/// corrections taken from the oracle rather than the closed form.
#[test]
fn pair_correction_matches_oracle_definition() {
    for a in 2..=5usize {
        for b in a..=5usize {
            if a + b > 10 {
                continue;
            }
            for alpha in 1..a {
                for beta in 1..b {
                    let k = alpha + beta;
                    let n = a + b;
                    let u_oracle = |r: usize, h: usize| {
                        &hypersimplex_f(k, n).unwrap() - &oracle(&raw_schubert_bases(r, k, h, n))
                    };
                    let expected = &(&(&hypersimplex_f(k, n).unwrap()
                        - &(&hypersimplex_f(alpha, a).unwrap()
                            * &hypersimplex_f(beta, b).unwrap()))
                        - &u_oracle(alpha, a))
                        - &u_oracle(beta, b);
                    assert_eq!(
                        modular_pair_correction(alpha, beta, a, b).unwrap(),
                        expected,
                        "pair correction differs from its definition at ({alpha},{beta},{a},{b})"
                    );
                }
            }
        }
    }
}

/// Back-solving the main-term polynomial from an oracle-computed split
/// correction on the octahedron case.
#[test]
fn cut_faces_back_solved_from_oracle() {
    let u_oracle = &hypersimplex_f(2, 4).unwrap() - &oracle(&raw_schubert_bases(1, 2, 2, 4));
    let split_pairs = &(&hypersimplex_positive_dim_f(1, 2).unwrap()
        * &hypersimplex_positive_dim_f(1, 2).unwrap())
        * &FPolynomial::one_plus_t_pow(1);
    let cut_vertices = FPolynomial::constant(binom(2, 2) * binom(2, 0));
    let expected = &(&u_oracle + &split_pairs) - &cut_vertices;
    assert_eq!(cut_faces_f(1, 2, 2, 4).unwrap(), expected);
}

/// Modular pairs counted in the mu table always have independent
/// intersection, and the table never holds more pairs than exist.
#[test]
fn mu_table_structure_on_catalog_instances() {
    let mut items = named_corpus();
    items.extend(schubert_corpus(7));
    for item in items {
        let m = &item.matroid;
        if m.connected_components().len() != 1 || !m.is_split() {
            continue;
        }
        let (lambda, mu) = m.cyclic_flat_tables().unwrap();
        let total = lambda.total();
        assert!(
            mu.total() <= total.saturating_mul(total.saturating_sub(1)) / 2,
            "{}: more modular pairs than pairs",
            item.name
        );
        let flats: Vec<_> = m
            .cyclic_flats()
            .into_iter()
            .filter(|f| !f.elements.is_empty() && f.size < m.ground_set_size())
            .collect();
        for (i, f) in flats.iter().enumerate() {
            for g in flats.iter().skip(i + 1) {
                let inter = f.elements.intersect(g.elements);
                let modular = f.rank + g.rank
                    == m.rank_of(inter).unwrap() + m.rank_of(f.elements.union(g.elements)).unwrap();
                if modular {
                    assert_eq!(
                        m.rank_of(inter).unwrap(),
                        inter.len(),
                        "{}: modular pair with dependent intersection",
                        item.name
                    );
                }
            }
        }
    }
}

#[test]
fn oracle_duality_and_dimension() {
    for m in [
        uniform_matroid(2, 6).unwrap(),
        binary_affine_matroid(3).unwrap(),
        raw_schubert_bases(1, 2, 2, 5),
    ] {
        let f = oracle(&m);
        assert_eq!(f, oracle(&m.dual()), "oracle duality");
        let lattice =
            polyface_core::oracle::face_lattice(&m, &OracleLimits::default()).unwrap();
        assert_eq!(
            lattice.dim(),
            m.ground_set_size() - m.connected_components().len()
        );
        assert!(f.euler_characteristic() == BigInt::from(1));
    }
}

#[test]
fn johnson_families_are_stable() {
    for n in 5..=9usize {
        for k in 2..n - 1 {
            assert!(is_johnson_stable(&greedy_johnson_stable_set(n, k)));
            for seed in 0..3u64 {
                let fam = random_johnson_stable_set(n, k, seed);
                assert!(is_johnson_stable(&fam));
                assert!(is_johnson_stable(&random_subfamily(&fam, seed ^ 0xFFFF)));
            }
        }
    }
}

/// The two-flat shortcut and the general profile formula agree on every
/// realizable instance at sizes past the oracle sweep.
#[test]
fn two_flat_agrees_with_profile_formula_to_ten_elements() {
    use polyface_core::engine::{matroid_f, two_flat_f};
    let mut checked = 0;
    for n in 9..=10usize {
        for p in two_flat_params(n) {
            let Some(m) = realize_two_flat(&p) else {
                continue;
            };
            assert_eq!(
                two_flat_f(&p).unwrap(),
                matroid_f(&m).unwrap(),
                "two-flat vs profile mismatch at {p:?}"
            );
            checked += 1;
        }
    }
    assert!(checked > 0);
}

/// The u128 fast path hands over to big-integer arithmetic above 80
/// elements; the Laurent closed form computes the same polynomial through
/// big integers at every size, so agreement across the boundary validates
/// both routes.
#[test]
fn correction_paths_agree_across_the_integer_boundary() {
    use polyface_core::engine::sparse_paving_correction;
    for n in [79usize, 80, 81, 82, 90] {
        for k in [5usize, 40] {
            assert_eq!(
                sparse_paving_correction(k, n).unwrap(),
                split_correction(k - 1, k, k, n).unwrap(),
                "paths disagree at ({k},{n})"
            );
        }
    }
}

/// Catalog constructions are honest matroids: the exchange property holds
/// on every instance small enough to check exhaustively.
#[test]
fn catalog_outputs_pass_exchange_validation() {
    let mut items = named_corpus();
    items.extend(schubert_corpus(7));
    items.extend(rank_two_corpus(7));
    let greedy = greedy_johnson_stable_set(7, 3);
    items.push(CorpusItem {
        name: "sparse_paving(3,7) greedy".into(),
        matroid: polyface_core::catalog::sparse_paving_matroid(3, 7, &greedy).unwrap(),
        circuit_hyperplanes: Some(greedy),
    });
    for item in items {
        if item.matroid.ground_set_size() <= 12 {
            item.matroid
                .check_exchange()
                .unwrap_or_else(|e| panic!("{}: {e}", item.name));
        }
    }
}

/// The projective plane keeps its tables under the closure-generated
/// enumeration path exercised by its 13-element ground set.
#[test]
fn projective_plane_closure_path() {
    let m = projective_plane_f3();
    let flats = m.cyclic_flats();
    assert_eq!(flats.len(), 15); // empty set, 13 lines, ground set
    assert!(flats
        .iter()
        .filter(|f| f.size == 4)
        .all(|f| f.rank == 2));
}
