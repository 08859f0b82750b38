//! Shared corpus builders and helpers for the integration suites.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::One;

use polyface_core::catalog::{
    binary_affine_matroid, circuit_hyperplane_counts, greedy_johnson_stable_set,
    projective_plane_f3, rank_two_matroid, schubert_matroid, sparse_paving_matroid,
    uniform_matroid,
};
use polyface_core::engine::{self, TwoFlatParams};
use polyface_core::matroid::Matroid;
use polyface_core::poly::FPolynomial;
use polyface_core::subset::{k_subsets, Subset};

pub fn big(v: &[i64]) -> FPolynomial {
    FPolynomial::from_i64s(v)
}

/// Deterministic pseudo-random stream for corpus sampling.
pub struct SplitMix64(pub u64);

impl SplitMix64 {
    pub fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, bound: usize) -> usize {
        (self.next() % bound as u64) as usize
    }

    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            items.swap(i, self.below(i + 1));
        }
    }
}

/// Random maximal stable set in the Johnson graph: greedy over a shuffled
/// candidate order.
pub fn random_johnson_stable_set(n: usize, k: usize, seed: u64) -> Vec<Subset> {
    let mut candidates = k_subsets(n, k);
    SplitMix64(seed).shuffle(&mut candidates);
    let mut picked: Vec<Subset> = Vec::new();
    for cand in candidates {
        if picked
            .iter()
            .all(|&p| p.symmetric_difference(cand).len() >= 4)
        {
            picked.push(cand);
        }
    }
    picked
}

/// Random sub-family of a stable family (stability survives taking subsets).
pub fn random_subfamily(family: &[Subset], seed: u64) -> Vec<Subset> {
    let mut rng = SplitMix64(seed);
    family
        .iter()
        .copied()
        .filter(|_| rng.next().is_multiple_of(2))
        .collect()
}

/// All partitions of n into at least `min_parts` positive parts, each
/// partition listed with non-increasing parts.
pub fn partitions(n: usize, min_parts: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, max: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for first in (1..=n.min(max)).rev() {
            for mut rest in rec(n - first, first) {
                rest.insert(0, first);
                out.push(rest);
            }
        }
        out
    }
    rec(n, n)
        .into_iter()
        .filter(|p| p.len() >= min_parts)
        .collect()
}

/// A corpus entry: a named matroid together with the circuit-hyperplane
/// family when the instance is sparse paving (for facet-count checks).
pub struct CorpusItem {
    pub name: String,
    pub matroid: Matroid,
    pub circuit_hyperplanes: Option<Vec<Subset>>,
}

impl CorpusItem {
    fn plain(name: String, matroid: Matroid) -> Self {
        CorpusItem {
            name,
            matroid,
            circuit_hyperplanes: None,
        }
    }
}

/// The Fano plane: rank 3 on seven points whose seven lines are the
/// circuit-hyperplanes.
pub fn fano_lines() -> Vec<Subset> {
    [
        [0, 1, 2],
        [0, 3, 4],
        [0, 5, 6],
        [1, 3, 5],
        [1, 4, 6],
        [2, 3, 6],
        [2, 4, 5],
    ]
    .iter()
    .map(|l| Subset::from_elements(l.iter().copied()))
    .collect()
}

/// The Vamos matroid: rank 4 on eight elements grouped in four pairs, with
/// five of the six pair-unions as circuit-hyperplanes.
pub fn vamos_planes() -> Vec<Subset> {
    [
        [0, 1, 2, 3],
        [0, 1, 4, 5],
        [0, 1, 6, 7],
        [2, 3, 4, 5],
        [2, 3, 6, 7],
    ]
    .iter()
    .map(|p| Subset::from_elements(p.iter().copied()))
    .collect()
}

/// Sparse paving instances on at most 8 elements built from greedy and
/// random Johnson stable families: singletons, pairs, full greedy families,
/// random maximal families, random sub-families, and the classical Fano and
/// Vamos matroids.
pub fn sparse_paving_corpus_n8() -> Vec<CorpusItem> {
    let mut out = Vec::new();
    let mut push = |k: usize, n: usize, chs: Vec<Subset>, tag: String| {
        let m = sparse_paving_matroid(k, n, &chs).expect("stable family must build");
        out.push(CorpusItem {
            name: format!("sparse_paving({k},{n}) {tag}"),
            matroid: m,
            circuit_hyperplanes: Some(chs),
        });
    };
    push(3, 7, fano_lines(), "fano".into());
    push(4, 8, vamos_planes(), "vamos".into());
    for n in 4..=8usize {
        for k in 2..=n - 2 {
            let greedy = greedy_johnson_stable_set(n, k);
            for (i, &ch) in greedy.iter().enumerate() {
                push(k, n, vec![ch], format!("single #{i}"));
            }
            for (i, &a) in greedy.iter().enumerate() {
                for (j, &b) in greedy.iter().enumerate().skip(i + 1) {
                    push(k, n, vec![a, b], format!("pair #{i},{j}"));
                }
            }
            push(k, n, greedy.clone(), "greedy full".to_string());
            for seed in 0..4u64 {
                let base = 1000 * n as u64 + 10 * k as u64 + seed;
                let random = random_johnson_stable_set(n, k, base);
                push(k, n, random.clone(), format!("random seed {seed}"));
                let sub = random_subfamily(&random, base ^ 0xDEAD_BEEF);
                if !sub.is_empty() {
                    push(k, n, sub, format!("random subfamily seed {seed}"));
                }
            }
        }
    }
    out
}

/// All essential Schubert parameter tuples (r, k, h, n) for n up to the
/// bound: 0 < r < k < n, r < h < n - k + r.
pub fn schubert_params(max_n: usize) -> Vec<(usize, usize, usize, usize)> {
    let mut out = Vec::new();
    for n in 3..=max_n {
        for k in 2..n {
            for r in 1..k {
                for h in r + 1..n - k + r {
                    out.push((r, k, h, n));
                }
            }
        }
    }
    out
}

pub fn schubert_corpus(max_n: usize) -> Vec<CorpusItem> {
    schubert_params(max_n)
        .into_iter()
        .map(|(r, k, h, n)| {
            CorpusItem::plain(
                format!("schubert({r},{k},{h},{n})"),
                schubert_matroid(r, k, h, n).expect("essential parameters"),
            )
        })
        .collect()
}

pub fn rank_two_corpus(max_n: usize) -> Vec<CorpusItem> {
    let mut out = Vec::new();
    for n in 2..=max_n {
        for parts in partitions(n, 2) {
            out.push(CorpusItem::plain(
                format!("rank2{parts:?}"),
                rank_two_matroid(&parts).expect("partition parameters"),
            ));
        }
    }
    out
}

/// Candidate bases of the two-flat matroid: k-subsets respecting both rank
/// caps. Returns the matroid only when the family is a matroid whose proper
/// nonempty cyclic flats are exactly the two requested flats.
pub fn realize_two_flat(p: &TwoFlatParams) -> Option<Matroid> {
    let f = Subset::full(p.size_f);
    let g = Subset::from_elements(
        (p.size_f - p.intersection..p.size_f - p.intersection + p.size_g).collect::<Vec<_>>(),
    );
    let bases: Vec<Subset> = k_subsets(p.n, p.rank)
        .into_iter()
        .filter(|b| {
            b.intersect(f).len() <= p.rank_f && b.intersect(g).len() <= p.rank_g
        })
        .collect();
    if bases.is_empty() {
        return None;
    }
    let m = Matroid::new(p.n, bases).ok()?;
    if m.rank() != p.rank || m.check_exchange().is_err() {
        return None;
    }
    let proper: Vec<(Subset, usize)> = m
        .cyclic_flats()
        .into_iter()
        .filter(|fl| !fl.elements.is_empty() && fl.size < p.n)
        .map(|fl| (fl.elements, fl.rank))
        .collect();
    let expected = {
        let mut v = vec![(f, p.rank_f), (g, p.rank_g)];
        v.sort_by_key(|&(s, _)| (s.len(), s.elements()));
        v
    };
    if proper == expected {
        Some(m)
    } else {
        None
    }
}

/// Every realizable two-flat parameter tuple with ground set of size n.
pub fn two_flat_params(n: usize) -> Vec<TwoFlatParams> {
    let mut out = Vec::new();
    for size_f in 2..n {
        for size_g in 2..n {
            let overlap_min = (size_f + size_g).saturating_sub(n);
            for c in overlap_min..size_f.min(size_g) {
                for rank_f in 1..size_f {
                    for rank_g in 1..size_g {
                        let k_hi = rank_f + rank_g - c.min(rank_f + rank_g);
                        for k in rank_f.max(rank_g) + 1..=k_hi {
                            if c + k > rank_f + rank_g || k >= n {
                                continue;
                            }
                            out.push(TwoFlatParams {
                                rank_f,
                                rank_g,
                                size_f,
                                size_g,
                                intersection: c,
                                rank: k,
                                n,
                            });
                        }
                    }
                }
            }
        }
    }
    out
}

/// The named small instances every suite leans on.
pub fn named_corpus() -> Vec<CorpusItem> {
    let all = k_subsets(6, 3);
    let remove = |banned: &[Subset]| {
        Matroid::new(
            6,
            all.iter().copied().filter(|b| !banned.contains(b)).collect(),
        )
        .unwrap()
    };
    vec![
        CorpusItem::plain("U(3,6)".into(), uniform_matroid(3, 6).unwrap()),
        CorpusItem {
            name: "M = U(3,6) minus one".into(),
            matroid: remove(&[Subset::from_elements([0, 1, 2])]),
            circuit_hyperplanes: Some(vec![Subset::from_elements([0, 1, 2])]),
        },
        CorpusItem {
            name: "N1".into(),
            matroid: remove(&[
                Subset::from_elements([0, 1, 2]),
                Subset::from_elements([3, 4, 5]),
            ]),
            circuit_hyperplanes: Some(vec![
                Subset::from_elements([0, 1, 2]),
                Subset::from_elements([3, 4, 5]),
            ]),
        },
        CorpusItem {
            name: "N2".into(),
            matroid: remove(&[
                Subset::from_elements([0, 1, 2]),
                Subset::from_elements([2, 3, 4]),
            ]),
            circuit_hyperplanes: Some(vec![
                Subset::from_elements([0, 1, 2]),
                Subset::from_elements([2, 3, 4]),
            ]),
        },
        CorpusItem::plain("AG(3,2)".into(), binary_affine_matroid(3).unwrap()),
        CorpusItem::plain("PG(2,3)".into(), projective_plane_f3()),
    ]
}

/// Structural checks every produced f-polynomial must satisfy.
pub fn assert_f_invariants(name: &str, m: &Matroid, f: &FPolynomial) {
    let components = m.connected_components().len();
    let dim = m.ground_set_size() - components;
    f.check_f_polynomial(dim)
        .unwrap_or_else(|e| panic!("{name}: {e}"));
    assert_eq!(
        f.coeff(0),
        BigInt::from(m.num_bases() as u64),
        "{name}: vertex count must equal the number of bases"
    );
    assert!(f.coeffs()[dim].is_one(), "{name}: top face count must be 1");
}

/// Extracts (lambda, mu) the sparse paving way and checks them against the
/// full table extraction when the instance is connected.
pub fn sparse_paving_lambda_mu(item: &CorpusItem) -> (u64, u64) {
    circuit_hyperplane_counts(
        item.circuit_hyperplanes
            .as_ref()
            .expect("sparse paving item"),
    )
}

pub fn formula_f(m: &Matroid) -> FPolynomial {
    engine::matroid_f(m).expect("corpus matroids are split")
}
