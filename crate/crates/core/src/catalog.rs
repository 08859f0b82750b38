//! Named matroid constructors, the JSON interchange format and the result
//! document emitted by the command-line driver.
//!
//! Elements are 0-based on the wire. Ground sets are capped at 64 elements
//! and explicit basis families at two million sets; callers wanting larger
//! instances must go through the closed formulas, which take parameters,
//! not basis lists.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::engine::EngineError;
use crate::matroid::{Matroid, MatroidError};
use crate::oracle::OracleError;
use crate::poly::FPolynomial;
use crate::subset::{k_subsets, Subset};

const MAX_EXPLICIT_BASES: usize = 2_000_000;

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("unknown family {0:?}; `catalog list` shows the available families")]
    UnknownFamily(String),
    #[error("family {family} expects {expected}, got {got} parameters")]
    ParamCount {
        family: &'static str,
        expected: &'static str,
        got: usize,
    },
    #[error("invalid parameters for family {family}: {message}")]
    BadParam {
        family: &'static str,
        message: String,
    },
    #[error("instance would have {count} explicit bases, above the {MAX_EXPLICIT_BASES} limit")]
    TooManyBases { count: u128 },
    #[error(transparent)]
    Matroid(#[from] MatroidError),
    #[error("invalid matroid description: {0}")]
    Parse(#[from] serde_json::Error),
}

/// Serialized description of a matroid: explicit bases, a named family with
/// numeric parameters, or a direct sum of descriptions.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MatroidSpec {
    Explicit { n: usize, bases: Vec<Vec<usize>> },
    Family {
        family: String,
        #[serde(default)]
        params: Vec<i64>,
    },
    DirectSum { direct_sum: Vec<MatroidSpec> },
}

impl MatroidSpec {
    pub fn from_json(text: &str) -> Result<Self, CatalogError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("spec serialization cannot fail")
    }

    /// Explicit form of a built matroid, suitable for round-tripping.
    pub fn explicit_from(m: &Matroid) -> Self {
        MatroidSpec::Explicit {
            n: m.ground_set_size(),
            bases: m.bases().iter().map(|b| b.elements()).collect(),
        }
    }
}

fn check_basis_budget(count: u128) -> Result<usize, CatalogError> {
    if count == 0 || count > MAX_EXPLICIT_BASES as u128 {
        Err(CatalogError::TooManyBases { count })
    } else {
        Ok(count as usize)
    }
}

fn binom_u128(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let mut acc: u128 = 1;
    for i in 0..k.min(n - k) {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// Uniform matroid: every k-subset is a basis.
pub fn uniform_matroid(k: usize, n: usize) -> Result<Matroid, CatalogError> {
    if k == 0 || k > n {
        return Err(CatalogError::BadParam {
            family: "uniform",
            message: format!("needs 0 < k <= n, got k = {k}, n = {n}"),
        });
    }
    check_basis_budget(binom_u128(n, k))?;
    Ok(Matroid::new(n, k_subsets(n, k))?)
}

fn schubert_check(r: usize, k: usize, h: usize, n: usize) -> Result<(), CatalogError> {
    let bad = |message: String| CatalogError::BadParam {
        family: "schubert",
        message,
    };
    if !(0 < r && r < k && k < n) {
        return Err(bad(format!("needs 0 < r < k < n, got r = {r}, k = {k}, n = {n}")));
    }
    if !(r < h && h < n) {
        return Err(bad(format!("needs r < h < n, got r = {r}, h = {h}, n = {n}")));
    }
    if h >= n - k + r {
        return Err(bad(format!(
            "needs h < n - k + r so the flat is essential and the matroid connected; \
             got h = {h}, n - k + r = {}",
            n - k + r
        )));
    }
    Ok(())
}

/// Split matroid with exactly three cyclic flats: the empty set, the ground
/// set, and the first `h` elements forming a flat of rank `r`. Bases are the
/// k-subsets with at most `r` elements among the first `h`.
///
/// Parameter order is `(r, k, h, n)`: rank and size of the proper flat,
/// then rank and size of the matroid.
pub fn schubert_matroid(r: usize, k: usize, h: usize, n: usize) -> Result<Matroid, CatalogError> {
    schubert_check(r, k, h, n)?;
    let mut count: u128 = 0;
    for i in 0..=r {
        count += binom_u128(h, i) * binom_u128(n - h, k - i);
    }
    check_basis_budget(count)?;
    let head = Subset::full(h);
    let bases = k_subsets(n, k)
        .into_iter()
        .filter(|b| b.intersect(head).len() <= r)
        .collect();
    Ok(Matroid::new(n, bases)?)
}

/// The 13-point rank-3 projective plane over the field with three elements:
/// points are the normalized nonzero vectors of F3^3, bases the
/// non-collinear triples.
pub fn projective_plane_f3() -> Matroid {
    let mut points: Vec<[i64; 3]> = Vec::new();
    for a in 0..3i64 {
        for b in 0..3i64 {
            for c in 0..3i64 {
                let v = [a, b, c];
                if v == [0, 0, 0] {
                    continue;
                }
                // normalize: first nonzero coordinate equal to 1
                let first = v.iter().find(|&&x| x != 0).unwrap();
                if *first == 1 {
                    points.push(v);
                }
            }
        }
    }
    debug_assert_eq!(points.len(), 13);
    let det = |a: [i64; 3], b: [i64; 3], c: [i64; 3]| {
        a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0])
            + a[2] * (b[0] * c[1] - b[1] * c[0])
    };
    let bases = k_subsets(13, 3)
        .into_iter()
        .filter(|s| {
            let e = s.elements();
            det(points[e[0]], points[e[1]], points[e[2]]).rem_euclid(3) != 0
        })
        .collect();
    Matroid::new(13, bases).expect("projective plane construction is fixed")
}

fn binary_affine_check(m: usize) -> Result<usize, CatalogError> {
    if !(3..=6).contains(&m) {
        return Err(CatalogError::BadParam {
            family: "binary_affine",
            message: format!("needs 3 <= m <= 6 (ground set 2^m <= 64), got m = {m}"),
        });
    }
    Ok(1usize << m)
}

/// Rank-4 matroid on the 2^m binary vectors of length m whose bases are the
/// affinely independent quadruples; for m = 3 this is the binary affine
/// cube. Sparse paving with the maximum number of circuit-hyperplanes.
pub fn binary_affine_matroid(m: usize) -> Result<Matroid, CatalogError> {
    let n = binary_affine_check(m)?;
    check_basis_budget(binom_u128(n, 4))?;
    // distinct points are affinely dependent over F2 exactly when they XOR
    // to zero
    let bases = k_subsets(n, 4)
        .into_iter()
        .filter(|s| s.iter().fold(0usize, |acc, e| acc ^ e) != 0)
        .collect();
    Ok(Matroid::new(n, bases)?)
}

/// The circuit-hyperplanes of the binary affine matroid: the quadruples of
/// points that XOR to zero.
pub fn binary_affine_circuit_hyperplanes(m: usize) -> Result<Vec<Subset>, CatalogError> {
    let n = binary_affine_check(m)?;
    Ok(k_subsets(n, 4)
        .into_iter()
        .filter(|s| s.iter().fold(0usize, |acc, e| acc ^ e) == 0)
        .collect())
}

/// Checks that a family of k-sets is a stable set in the Johnson graph:
/// pairwise symmetric difference at least 4.
pub fn is_johnson_stable(sets: &[Subset]) -> bool {
    for (i, &a) in sets.iter().enumerate() {
        for &b in &sets[i + 1..] {
            if a.symmetric_difference(b).len() < 4 {
                return false;
            }
        }
    }
    true
}

fn sparse_paving_check(
    k: usize,
    n: usize,
    circuit_hyperplanes: &[Subset],
) -> Result<Vec<Subset>, CatalogError> {
    let bad = |message: String| CatalogError::BadParam {
        family: "sparse_paving",
        message,
    };
    if k == 0 || k >= n {
        return Err(bad(format!("needs 0 < k < n, got k = {k}, n = {n}")));
    }
    let full = Subset::full(n);
    for &ch in circuit_hyperplanes {
        if !ch.is_subset_of(full) || ch.len() != k {
            return Err(bad(format!(
                "circuit-hyperplane {ch} is not a k-subset of the ground set"
            )));
        }
    }
    let mut sorted: Vec<Subset> = circuit_hyperplanes.to_vec();
    sorted.sort();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(bad("duplicate circuit-hyperplane".to_string()));
    }
    if !is_johnson_stable(&sorted) {
        return Err(bad(
            "two circuit-hyperplanes share more than k - 2 elements".to_string(),
        ));
    }
    Ok(sorted)
}

/// Sparse paving matroid: all k-subsets are bases except the listed
/// circuit-hyperplanes, which must form a Johnson stable family.
pub fn sparse_paving_matroid(
    k: usize,
    n: usize,
    circuit_hyperplanes: &[Subset],
) -> Result<Matroid, CatalogError> {
    let sorted = sparse_paving_check(k, n, circuit_hyperplanes)?;
    check_basis_budget(binom_u128(n, k) - sorted.len() as u128)?;
    let bases = k_subsets(n, k)
        .into_iter()
        .filter(|b| sorted.binary_search(b).is_err())
        .collect();
    Ok(Matroid::new(n, bases)?)
}

/// Counts `(lambda, mu)` for a circuit-hyperplane family: the family size
/// and the number of unordered pairs meeting in k - 2 elements.
pub fn circuit_hyperplane_counts(circuit_hyperplanes: &[Subset]) -> (u64, u64) {
    let lambda = circuit_hyperplanes.len() as u64;
    let mut mu = 0;
    for (i, &a) in circuit_hyperplanes.iter().enumerate() {
        for &b in &circuit_hyperplanes[i + 1..] {
            if a.symmetric_difference(b).len() == 4 {
                mu += 1;
            }
        }
    }
    (lambda, mu)
}

/// Loopless rank-two matroid with rank-one flats of the given sizes,
/// assigned to consecutive elements; bases are the cross-flat pairs.
pub fn rank_two_matroid(parts: &[usize]) -> Result<Matroid, CatalogError> {
    let bad = |message: String| CatalogError::BadParam {
        family: "rank2",
        message,
    };
    if parts.len() < 2 {
        return Err(bad(format!(
            "needs at least two rank-one flats, got {}",
            parts.len()
        )));
    }
    if parts.contains(&0) {
        return Err(bad("flat sizes must be positive".to_string()));
    }
    let n: usize = parts.iter().sum();
    let mut flat_of = Vec::with_capacity(n);
    for (idx, &h) in parts.iter().enumerate() {
        flat_of.extend(std::iter::repeat_n(idx, h));
    }
    let mut bases = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if flat_of[i] != flat_of[j] {
                bases.push(Subset::from_elements([i, j]));
            }
        }
    }
    Ok(Matroid::new(n, bases)?)
}

/// Direct sum: summand ground sets are shifted to consecutive ranges and
/// every combination of summand bases becomes a basis.
pub fn direct_sum(summands: &[Matroid]) -> Result<Matroid, CatalogError> {
    if summands.is_empty() {
        return Err(CatalogError::BadParam {
            family: "direct_sum",
            message: "needs at least one summand".to_string(),
        });
    }
    let n: usize = summands.iter().map(|m| m.ground_set_size()).sum();
    let count = summands
        .iter()
        .fold(1u128, |acc, m| acc.saturating_mul(m.num_bases() as u128));
    check_basis_budget(count)?;
    let mut bases: Vec<Subset> = vec![Subset::EMPTY];
    let mut offset = 0;
    for m in summands {
        let shifted: Vec<Subset> = m
            .bases()
            .iter()
            .map(|b| Subset::from_bits(b.bits() << offset))
            .collect();
        bases = bases
            .iter()
            .flat_map(|&prefix| shifted.iter().map(move |&b| prefix.union(b)))
            .collect();
        offset += m.ground_set_size();
    }
    Ok(Matroid::new(n, bases)?)
}

/// Greedy stable set in the Johnson graph: scans the k-subsets in
/// lexicographic order and keeps each one at symmetric difference at least
/// 4 from everything kept so far. Deterministic; maximal but not maximum.
pub fn greedy_johnson_stable_set(n: usize, k: usize) -> Vec<Subset> {
    let mut picked: Vec<Subset> = Vec::new();
    for cand in k_subsets(n, k) {
        if picked
            .iter()
            .all(|&p| p.symmetric_difference(cand).len() >= 4)
        {
            picked.push(cand);
        }
    }
    picked
}

fn params_exact<const N: usize>(
    family: &'static str,
    expected: &'static str,
    params: &[i64],
) -> Result<[usize; N], CatalogError> {
    if params.len() != N {
        return Err(CatalogError::ParamCount {
            family,
            expected,
            got: params.len(),
        });
    }
    let mut out = [0usize; N];
    for (slot, &p) in out.iter_mut().zip(params) {
        if p < 0 {
            return Err(CatalogError::BadParam {
                family,
                message: format!("parameters must be non-negative, got {p}"),
            });
        }
        *slot = p as usize;
    }
    Ok(out)
}

enum ParsedFamily {
    Uniform { k: usize, n: usize },
    Schubert { r: usize, k: usize, h: usize, n: usize },
    Pg23,
    BinaryAffine { m: usize },
    SparsePaving { k: usize, n: usize, chs: Vec<Subset> },
    RankTwo { parts: Vec<usize> },
}

fn parse_family(family: &str, params: &[i64]) -> Result<ParsedFamily, CatalogError> {
    match family {
        "uniform" => {
            let [k, n] = params_exact("uniform", "2 (k, n)", params)?;
            Ok(ParsedFamily::Uniform { k, n })
        }
        "schubert" => {
            let [r, k, h, n] = params_exact("schubert", "4 (r, k, h, n)", params)?;
            Ok(ParsedFamily::Schubert { r, k, h, n })
        }
        "pg23" => {
            if !params.is_empty() {
                return Err(CatalogError::ParamCount {
                    family: "pg23",
                    expected: "0",
                    got: params.len(),
                });
            }
            Ok(ParsedFamily::Pg23)
        }
        "binary_affine" => {
            let [m] = params_exact("binary_affine", "1 (m)", params)?;
            Ok(ParsedFamily::BinaryAffine { m })
        }
        "sparse_paving" => {
            if params.len() < 2 {
                return Err(CatalogError::ParamCount {
                    family: "sparse_paving",
                    expected: "at least 2 (k, n, then circuit-hyperplanes in groups of k)",
                    got: params.len(),
                });
            }
            let [k, n] = params_exact::<2>("sparse_paving", "", &params[..2])?;
            let rest = &params[2..];
            if k == 0 || rest.len() % k != 0 {
                return Err(CatalogError::BadParam {
                    family: "sparse_paving",
                    message: format!(
                        "circuit-hyperplane list length {} is not a multiple of k = {k}",
                        rest.len()
                    ),
                });
            }
            let mut chs = Vec::new();
            for chunk in rest.chunks(k) {
                if chunk.iter().any(|&e| e < 0 || e as usize >= n) {
                    return Err(CatalogError::BadParam {
                        family: "sparse_paving",
                        message: format!("element out of range in {chunk:?}"),
                    });
                }
                chs.push(Subset::from_elements(chunk.iter().map(|&e| e as usize)));
            }
            Ok(ParsedFamily::SparsePaving { k, n, chs })
        }
        "rank2" => {
            if params.len() < 2 {
                return Err(CatalogError::ParamCount {
                    family: "rank2",
                    expected: "at least 2 flat sizes",
                    got: params.len(),
                });
            }
            if params.iter().any(|&p| p <= 0) {
                return Err(CatalogError::BadParam {
                    family: "rank2",
                    message: "flat sizes must be positive".to_string(),
                });
            }
            Ok(ParsedFamily::RankTwo {
                parts: params.iter().map(|&p| p as usize).collect(),
            })
        }
        other => Err(CatalogError::UnknownFamily(other.to_string())),
    }
}

/// Builds the matroid described by a spec. Explicit basis lists are checked
/// for the exchange property when the ground set has at most 12 elements;
/// larger explicit inputs are trusted.
pub fn build_matroid(spec: &MatroidSpec) -> Result<Matroid, CatalogError> {
    match spec {
        MatroidSpec::Explicit { n, bases } => {
            let m = Matroid::from_basis_lists(*n, bases)?;
            if *n <= 12 {
                m.check_exchange()?;
            }
            Ok(m)
        }
        MatroidSpec::Family { family, params } => match parse_family(family, params)? {
            ParsedFamily::Uniform { k, n } => uniform_matroid(k, n),
            ParsedFamily::Schubert { r, k, h, n } => schubert_matroid(r, k, h, n),
            ParsedFamily::Pg23 => Ok(projective_plane_f3()),
            ParsedFamily::BinaryAffine { m } => binary_affine_matroid(m),
            ParsedFamily::SparsePaving { k, n, chs } => sparse_paving_matroid(k, n, &chs),
            ParsedFamily::RankTwo { parts } => rank_two_matroid(&parts),
        },
        MatroidSpec::DirectSum { direct_sum: specs } => {
            if specs.is_empty() {
                return Err(CatalogError::BadParam {
                    family: "direct_sum",
                    message: "needs at least one summand".to_string(),
                });
            }
            let mut built = Vec::with_capacity(specs.len());
            for s in specs {
                built.push(build_matroid(s)?);
            }
            direct_sum(&built)
        }
    }
}

/// An instance evaluated straight from family parameters: the f-polynomial
/// plus the invariant data, with no basis list ever materialized. The
/// component count is the ground-set size minus the polynomial degree; the
/// tables describe the connected case.
pub struct AnalyticInstance {
    pub n: usize,
    pub rank: usize,
    pub f: FPolynomial,
    pub lambda: crate::matroid::LambdaTable,
    pub mu: crate::matroid::MuTable,
}

impl AnalyticInstance {
    pub fn components(&self) -> usize {
        self.n - self.f.degree()
    }
}

/// Evaluates a spec through the closed formulas alone. Returns `None` when
/// the description carries explicit bases, which have no analytic route.
/// This is how parameterized families reach ground sets far beyond anything
/// an explicit basis list could hold.
pub fn analytic_instance(spec: &MatroidSpec) -> Result<Option<AnalyticInstance>, CatalogError> {
    use crate::engine;
    use crate::matroid::{LambdaTable, MuKey, MuTable};
    let plain = |n: usize, rank: usize, f: FPolynomial| AnalyticInstance {
        n,
        rank,
        f,
        lambda: LambdaTable::new(),
        mu: MuTable::new(),
    };
    match spec {
        MatroidSpec::Explicit { .. } => Ok(None),
        MatroidSpec::Family { family, params } => match parse_family(family, params)? {
            ParsedFamily::Uniform { k, n } => {
                if k == 0 || k > n {
                    return Err(CatalogError::BadParam {
                        family: "uniform",
                        message: format!("needs 0 < k <= n, got k = {k}, n = {n}"),
                    });
                }
                Ok(Some(plain(n, k, engine::hypersimplex_f(k, n)?)))
            }
            ParsedFamily::Schubert { r, k, h, n } => {
                schubert_check(r, k, h, n)?;
                let f = &engine::hypersimplex_f(k, n)? - &engine::split_correction(r, k, h, n)?;
                let mut lambda = LambdaTable::new();
                lambda.insert(r, h, 1);
                Ok(Some(AnalyticInstance {
                    n,
                    rank: k,
                    f,
                    lambda,
                    mu: MuTable::new(),
                }))
            }
            ParsedFamily::Pg23 => {
                let mut lambda = LambdaTable::new();
                lambda.insert(2, 4, 13);
                let mut mu = MuTable::new();
                mu.insert(MuKey::canonical(1, 1, 3, 3), 78);
                let profile = engine::SplitProfile {
                    rank: 3,
                    n: 13,
                    lambda: lambda.clone(),
                    mu: mu.clone(),
                };
                Ok(Some(AnalyticInstance {
                    n: 13,
                    rank: 3,
                    f: engine::split_matroid_f(&profile)?,
                    lambda,
                    mu,
                }))
            }
            ParsedFamily::BinaryAffine { m } => {
                let chs = binary_affine_circuit_hyperplanes(m)?;
                let n = 1usize << m;
                let (count, pairs) = circuit_hyperplane_counts(&chs);
                let f = engine::sparse_paving_f(4, n, count, pairs)?;
                let mut lambda = LambdaTable::new();
                lambda.insert(3, 4, count);
                let mut mu = MuTable::new();
                mu.insert(MuKey::canonical(1, 1, 2, 2), pairs);
                Ok(Some(AnalyticInstance {
                    n,
                    rank: 4,
                    f,
                    lambda,
                    mu,
                }))
            }
            ParsedFamily::SparsePaving { k, n, chs } => {
                let sorted = sparse_paving_check(k, n, &chs)?;
                let (count, pairs) = circuit_hyperplane_counts(&sorted);
                let f = engine::sparse_paving_f(k, n, count, pairs)?;
                let mut lambda = LambdaTable::new();
                lambda.insert(k - 1, k, count);
                let mut mu = MuTable::new();
                mu.insert(MuKey::canonical(1, 1, 2, 2), pairs);
                Ok(Some(AnalyticInstance {
                    n,
                    rank: k,
                    f,
                    lambda,
                    mu,
                }))
            }
            ParsedFamily::RankTwo { parts } => {
                let n: usize = parts.iter().sum();
                let f = engine::rank_two_f(&parts)?;
                let big_parts: Vec<usize> = parts.iter().copied().filter(|&h| h >= 2).collect();
                let mut lambda = LambdaTable::new();
                for &h in &big_parts {
                    lambda.increment(1, h);
                }
                let mut mu = MuTable::new();
                for (i, &a) in big_parts.iter().enumerate() {
                    for &b in &big_parts[i + 1..] {
                        mu.increment(MuKey::canonical(1, 1, a, b));
                    }
                }
                Ok(Some(AnalyticInstance {
                    n,
                    rank: 2,
                    f,
                    lambda,
                    mu,
                }))
            }
        },
        MatroidSpec::DirectSum { direct_sum: specs } => {
            if specs.is_empty() {
                return Err(CatalogError::BadParam {
                    family: "direct_sum",
                    message: "needs at least one summand".to_string(),
                });
            }
            if specs.len() == 1 {
                return analytic_instance(&specs[0]);
            }
            let mut n = 0;
            let mut rank = 0;
            let mut f = FPolynomial::one();
            for s in specs {
                let Some(inner) = analytic_instance(s)? else {
                    return Ok(None);
                };
                n += inner.n;
                rank += inner.rank;
                f = &f * &inner.f;
            }
            Ok(Some(plain(n, rank, f)))
        }
    }
}


/// One line of the `catalog list` output.
pub struct FamilyInfo {
    pub name: &'static str,
    pub params: &'static str,
    pub summary: &'static str,
}

pub fn family_catalog() -> Vec<FamilyInfo> {
    vec![
        FamilyInfo {
            name: "uniform",
            params: "k,n",
            summary: "uniform matroid of rank k on n elements",
        },
        FamilyInfo {
            name: "schubert",
            params: "r,k,h,n",
            summary: "three cyclic flats; the proper one has rank r and holds the first h of \
                      n elements (note the order: the flat parameters come first)",
        },
        FamilyInfo {
            name: "pg23",
            params: "(none)",
            summary: "13-point rank-3 projective plane over the 3-element field",
        },
        FamilyInfo {
            name: "binary_affine",
            params: "m",
            summary: "rank-4 matroid on the 2^m binary vectors; bases are affinely \
                      independent quadruples",
        },
        FamilyInfo {
            name: "sparse_paving",
            params: "k,n,e11,...,e1k,e21,...",
            summary: "uniform matroid minus the listed circuit-hyperplanes (groups of k \
                      elements, pairwise symmetric difference >= 4)",
        },
        FamilyInfo {
            name: "rank2",
            params: "h1,h2,...",
            summary: "loopless rank-2 matroid with rank-one flats of the given sizes",
        },
    ]
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct LambdaEntry {
    pub rank: usize,
    pub size: usize,
    pub count: u64,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct MuEntry {
    pub alpha: usize,
    pub beta: usize,
    pub a: usize,
    pub b: usize,
    pub count: u64,
}

/// The document emitted by the CLI for one matroid. The f-vector entries are
/// decimal strings so arbitrary-precision counts survive JSON round trips.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct ResultDocument {
    pub n: usize,
    pub rank: usize,
    pub components: usize,
    pub dimension: usize,
    pub method: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub f_vector: Option<Vec<String>>,
    pub split: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda: Option<Vec<LambdaEntry>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mu: Option<Vec<MuEntry>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub unimodal: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub log_concave: Option<bool>,
    pub timing_ms: f64,
}

pub fn f_vector_strings(f: &FPolynomial) -> Vec<String> {
    f.coeffs().iter().map(|c| c.to_string()).collect()
}

/// Assembles the result document for a matroid: component count, split
/// flag, invariant tables when the matroid is connected and split, and
/// shape flags when an f-vector is supplied.
pub fn result_document(
    m: &Matroid,
    f: Option<&FPolynomial>,
    method: &str,
    timing_ms: f64,
) -> ResultDocument {
    let components = m.connected_components().len();
    let split = m.is_split();
    let (lambda, mu) = if components == 1 && split {
        let (lt, mt) = m
            .cyclic_flat_tables()
            .expect("connected split matroid has tables");
        (
            Some(
                lt.iter()
                    .map(|(rank, size, count)| LambdaEntry { rank, size, count })
                    .collect(),
            ),
            Some(
                mt.iter()
                    .map(|(key, count)| MuEntry {
                        alpha: key.alpha,
                        beta: key.beta,
                        a: key.a,
                        b: key.b,
                        count,
                    })
                    .collect(),
            ),
        )
    } else {
        (None, None)
    };
    let (unimodal, log_concave) = match f {
        Some(f) => (
            Some(crate::engine::is_unimodal(f.coeffs())),
            crate::engine::is_log_concave(f.coeffs()).ok(),
        ),
        None => (None, None),
    };
    ResultDocument {
        n: m.ground_set_size(),
        rank: m.rank(),
        components,
        dimension: m.ground_set_size() - components,
        method: method.to_string(),
        f_vector: f.map(f_vector_strings),
        split,
        lambda,
        mu,
        unimodal,
        log_concave,
        timing_ms,
    }
}

/// Document for an analytically evaluated instance; mirrors
/// `result_document`, with the tables reported only in the connected case.
/// Every analytic family is split, as is any direct sum of them.
pub fn analytic_document(ai: &AnalyticInstance, method: &str, timing_ms: f64) -> ResultDocument {
    let components = ai.components();
    let connected = components == 1;
    ResultDocument {
        n: ai.n,
        rank: ai.rank,
        components,
        dimension: ai.f.degree(),
        method: method.to_string(),
        f_vector: Some(f_vector_strings(&ai.f)),
        split: true,
        lambda: connected.then(|| {
            ai.lambda
                .iter()
                .map(|(rank, size, count)| LambdaEntry { rank, size, count })
                .collect()
        }),
        mu: connected.then(|| {
            ai.mu
                .iter()
                .map(|(key, count)| MuEntry {
                    alpha: key.alpha,
                    beta: key.beta,
                    a: key.a,
                    b: key.b,
                    count,
                })
                .collect()
        }),
        unimodal: Some(crate::engine::is_unimodal(ai.f.coeffs())),
        log_concave: crate::engine::is_log_concave(ai.f.coeffs()).ok(),
        timing_ms,
    }
}

/// Maps library errors onto the CLI exit-code classes: 1 for computation
/// refusals, 2 for usage and parse errors.
pub fn refusal_exit_code(err: &CatalogError) -> i32 {
    match err {
        CatalogError::Matroid(MatroidError::NotConnected)
        | CatalogError::Matroid(MatroidError::NotSplit { .. })
        | CatalogError::TooManyBases { .. } => 1,
        _ => 2,
    }
}

impl From<OracleError> for CatalogError {
    fn from(e: OracleError) -> Self {
        CatalogError::BadParam {
            family: "oracle",
            message: e.to_string(),
        }
    }
}

impl From<EngineError> for CatalogError {
    fn from(e: EngineError) -> Self {
        match e {
            EngineError::Matroid(me) => CatalogError::Matroid(me),
            other => CatalogError::BadParam {
                family: "formula",
                message: other.to_string(),
            },
        }
    }
}
