//! Closed-form face counting for split matroid base polytopes.
//!
//! The central quantity is the f-polynomial of the hypersimplex, corrected
//! downward by one polynomial per proper nonempty cyclic flat (counted by
//! rank and size) and one per modular pair of such flats (counted by the
//! intersection key). All arithmetic is exact; the hot double-multinomial
//! sums run in u128 while ground sets stay below 81 elements and fall back
//! to big integers beyond that.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::matroid::{LambdaTable, Matroid, MatroidError, MuKey, MuTable};
use crate::poly::{binom, multinom, FPolynomial, LaurentPolynomial, PolyError};

#[derive(Debug, Error)]
pub enum EngineError {
    #[error("parameter out of range: {0}")]
    ParamRange(String),
    #[error("invalid table key: {0}")]
    TableKey(String),
    #[error(transparent)]
    Matroid(#[from] MatroidError),
    #[error("log-concavity is defined for positive sequences; entry {index} is {value}")]
    NonPositiveEntry { index: usize, value: BigInt },
    #[error("internal formula error: {0}")]
    Internal(#[from] PolyError),
}

fn require(cond: bool, msg: impl FnOnce() -> String) -> Result<(), EngineError> {
    if cond {
        Ok(())
    } else {
        Err(EngineError::ParamRange(msg()))
    }
}

/// Ground-set sizes up to this bound keep every coefficient of the
/// double-multinomial sums below 3^80 < 2^127, so u128 accumulation is safe.
const FAST_LIMIT: usize = 80;

/// f-polynomial of the hypersimplex: the base polytope of the uniform
/// matroid of rank `k` on `n` elements. For `k = 0` or `k = n` the polytope
/// degenerates to a single point and the constant polynomial 1 is returned
/// rather than an error, since product-rule callers feed loop and coloop
/// components through here.
pub fn hypersimplex_f(k: usize, n: usize) -> Result<FPolynomial, EngineError> {
    require(n >= 1, || format!("hypersimplex needs n >= 1, got n = {n}"))?;
    require(k <= n, || format!("hypersimplex needs k <= n, got k = {k}, n = {n}"))?;
    if k == 0 || k == n {
        return Ok(FPolynomial::one());
    }
    let (ki, ni) = (k as i64, n as i64);
    let mut coeffs = Vec::with_capacity(n);
    coeffs.push(binom(ni, ki));
    for i in 1..=ni - 1 {
        let mut inner = BigInt::zero();
        for j in 1..=i {
            inner += binom(ni - i - 1, ki - j);
        }
        coeffs.push(binom(ni, i + 1) * inner);
    }
    let f = FPolynomial::from_coeffs(coeffs);
    debug_assert!(f.euler_characteristic().is_one());
    Ok(f)
}

/// True when the hypersimplex parameters describe a single point.
pub fn hypersimplex_is_point(k: usize, n: usize) -> bool {
    k == 0 || k == n
}

/// Positive-dimensional faces of the hypersimplex: its f-polynomial with the
/// vertex count stripped.
pub fn hypersimplex_positive_dim_f(r: usize, h: usize) -> Result<FPolynomial, EngineError> {
    require(0 < r && r < h, || {
        format!("positive-dimensional face count needs 0 < r < h, got r = {r}, h = {h}")
    })?;
    positive_dim_unchecked(r, h)
}

/// Tolerant variant used internally: for r = 0 or r = h the hypersimplex is
/// a point and the result is the zero polynomial.
fn positive_dim_unchecked(r: usize, h: usize) -> Result<FPolynomial, EngineError> {
    let f = hypersimplex_f(r, h)?;
    Ok(&f - &FPolynomial::constant(binom(h as i64, r as i64)))
}

fn pascal_u128(n: usize) -> Vec<Vec<u128>> {
    let mut rows: Vec<Vec<u128>> = Vec::with_capacity(n + 1);
    for m in 0..=n {
        let mut row = vec![1u128; m + 1];
        for j in 1..m {
            row[j] = rows[m - 1][j - 1] + rows[m - 1][j];
        }
        rows.push(row);
    }
    rows
}

fn mult_u128(pascal: &[Vec<u128>], n: usize, i: usize, j: usize) -> u128 {
    if i + j > n {
        return 0;
    }
    pascal[n][i] * pascal[n - i][j]
}

fn cut_faces_coeffs_u128(r: usize, k: usize, h: usize, n: usize) -> Vec<u128> {
    let pascal = pascal_u128(n);
    let mut coeffs = vec![0u128; n];
    for j in 0..=h - r - 1 {
        let m_cap_j = (n as i64 - k as i64 - j as i64 - 1).min((n - h) as i64);
        if m_cap_j < 0 {
            continue;
        }
        for i in 0..=(h - j).min(k - 1) {
            let a = mult_u128(&pascal, h, i, j);
            if a == 0 {
                continue;
            }
            for l in 0..=(k - i - 1).min(k - r - 1) {
                let b_cap = (m_cap_j as usize).min(n - h - l);
                let base = n - 1 - i - j - l;
                for m in 0..=b_cap {
                    let b = mult_u128(&pascal, n - h, l, m);
                    if b != 0 {
                        coeffs[base - m] += a * b;
                    }
                }
            }
        }
    }
    coeffs
}

fn cut_faces_coeffs_big(r: usize, k: usize, h: usize, n: usize) -> Vec<BigInt> {
    let (ri, ki, hi, ni) = (r as i64, k as i64, h as i64, n as i64);
    let mut coeffs = vec![BigInt::zero(); n];
    for j in 0..=hi - ri - 1 {
        for i in 0..=(hi - j).min(ki - 1) {
            let a = multinom(hi, i, j);
            if a.is_zero() {
                continue;
            }
            for l in 0..=(ki - i - 1).min(ki - ri - 1) {
                for m in 0..=(ni - hi - l).min(ni - ki - j - 1) {
                    let b = multinom(ni - hi, l, m);
                    if !b.is_zero() {
                        coeffs[(ni - 1 - i - j - l - m) as usize] += &a * b;
                    }
                }
            }
        }
    }
    coeffs
}

/// Non-vertex faces of the hypersimplex that contain at least one vertex
/// cut off by the split constraint "at most `r` ones among the first `h`
/// coordinates". Counted by fixing coordinates: a face keeps its dimension
/// down by one per fixed coordinate.
pub fn cut_faces_f(r: usize, k: usize, h: usize, n: usize) -> Result<FPolynomial, EngineError> {
    check_split_params(r, k, h, n)?;
    Ok(cut_faces_unchecked(r, k, h, n))
}

fn cut_faces_unchecked(r: usize, k: usize, h: usize, n: usize) -> FPolynomial {
    if n <= FAST_LIMIT {
        FPolynomial::from_coeffs(
            cut_faces_coeffs_u128(r, k, h, n)
                .into_iter()
                .map(BigInt::from)
                .collect(),
        )
    } else {
        FPolynomial::from_coeffs(cut_faces_coeffs_big(r, k, h, n))
    }
}

fn check_split_params(r: usize, k: usize, h: usize, n: usize) -> Result<(), EngineError> {
    require(r > 0, || format!("split parameters need r > 0, got r = {r}"))?;
    require(r < k, || format!("split parameters need r < k, got r = {r}, k = {k}"))?;
    require(k < n, || format!("split parameters need k < n, got k = {k}, n = {n}"))?;
    require(r < h, || format!("split parameters need r < h, got r = {r}, h = {h}"))?;
    require(h < n, || format!("split parameters need h < n, got h = {h}, n = {n}"))?;
    // existence of a basis with at most r elements among the first h
    require(h <= n - k + r, || {
        format!("split parameters need h <= n - k + r, got h = {h}, n - k + r = {}", n - k + r)
    })?;
    Ok(())
}

/// Difference between the f-polynomial of the hypersimplex and that of the
/// polytope carved out of it by a single split constraint with parameters
/// `(r, h)`. Coefficients may have either sign.
pub fn split_correction(r: usize, k: usize, h: usize, n: usize) -> Result<FPolynomial, EngineError> {
    check_split_params(r, k, h, n)?;
    let p = cut_faces_unchecked(r, k, h, n);
    let split_pairs = &(&positive_dim_unchecked(r, h)? * &positive_dim_unchecked(k - r, n - h)?)
        * &FPolynomial::one_plus_t_pow(1);
    let mut cut_vertices = BigInt::zero();
    for i in r as i64 + 1..=k as i64 {
        cut_vertices += binom(h as i64, i) * binom((n - h) as i64, k as i64 - i);
    }
    Ok(&(&p - &split_pairs) + &FPolynomial::constant(cut_vertices))
}

/// Correction polynomial for one modular pair of cyclic flats with
/// intersection key `(alpha, beta, a, b)`. Coefficients are nonnegative.
pub fn modular_pair_correction(
    alpha: usize,
    beta: usize,
    a: usize,
    b: usize,
) -> Result<FPolynomial, EngineError> {
    require(0 < alpha && alpha < a, || {
        format!("pair correction needs 0 < alpha < a, got alpha = {alpha}, a = {a}")
    })?;
    require(0 < beta && beta < b, || {
        format!("pair correction needs 0 < beta < b, got beta = {beta}, b = {b}")
    })?;
    let base = if a + b <= FAST_LIMIT {
        let pascal = pascal_u128(a + b);
        let mut coeffs = vec![0u128; a + b - 1];
        for i in 0..=a - alpha - 1 {
            for j in 0..=alpha - 1 {
                let x = mult_u128(&pascal, a, i, j);
                if x == 0 {
                    continue;
                }
                for ip in 0..=b - beta - 1 {
                    for jp in 0..=beta - 1 {
                        let y = mult_u128(&pascal, b, ip, jp);
                        if y != 0 {
                            coeffs[a + b - i - j - ip - jp - 2] += x * y;
                        }
                    }
                }
            }
        }
        FPolynomial::from_coeffs(coeffs.into_iter().map(BigInt::from).collect())
    } else {
        let (ai, bi) = (a as i64, b as i64);
        let mut coeffs = vec![BigInt::zero(); a + b - 1];
        for i in 0..=ai - alpha as i64 - 1 {
            for j in 0..=alpha as i64 - 1 {
                let x = multinom(ai, i, j);
                if x.is_zero() {
                    continue;
                }
                for ip in 0..=bi - beta as i64 - 1 {
                    for jp in 0..=beta as i64 - 1 {
                        let y = multinom(bi, ip, jp);
                        if !y.is_zero() {
                            coeffs[(ai + bi - i - j - ip - jp - 2) as usize] += &x * y;
                        }
                    }
                }
            }
        }
        FPolynomial::from_coeffs(coeffs)
    };
    Ok(&base * &FPolynomial::one_plus_t_pow(1))
}

/// The invariant data of a connected split matroid needed for face counting.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitProfile {
    pub rank: usize,
    pub n: usize,
    pub lambda: LambdaTable,
    pub mu: MuTable,
}

impl SplitProfile {
    /// Extracts the profile from a connected split matroid.
    pub fn of(m: &Matroid) -> Result<Self, EngineError> {
        let (lambda, mu) = m.cyclic_flat_tables()?;
        Ok(SplitProfile {
            rank: m.rank(),
            n: m.ground_set_size(),
            lambda,
            mu,
        })
    }
}

/// f-polynomial of a connected split matroid base polytope from its profile:
/// the hypersimplex count minus one correction per proper nonempty cyclic
/// flat and one per modular pair.
pub fn split_matroid_f(profile: &SplitProfile) -> Result<FPolynomial, EngineError> {
    let (k, n) = (profile.rank, profile.n);
    require(0 < k && k < n, || {
        format!("split profile needs 0 < rank < n, got rank = {k}, n = {n}")
    })?;
    let mut f = hypersimplex_f(k, n)?;
    for (r, h, count) in profile.lambda.iter() {
        if count == 0 {
            continue;
        }
        let u = split_correction(r, k, h, n)
            .map_err(|e| EngineError::TableKey(format!("flat count at (r = {r}, h = {h}): {e}")))?;
        f = &f - &u.scale(&BigInt::from(count));
    }
    for (key, count) in profile.mu.iter() {
        if count == 0 {
            continue;
        }
        if key != MuKey::canonical(key.alpha, key.beta, key.a, key.b) {
            return Err(EngineError::TableKey(format!(
                "pair key (alpha = {}, beta = {}, a = {}, b = {}) is not canonical",
                key.alpha, key.beta, key.a, key.b
            )));
        }
        let w = modular_pair_correction(key.alpha, key.beta, key.a, key.b).map_err(|e| {
            EngineError::TableKey(format!(
                "pair count at (alpha = {}, beta = {}, a = {}, b = {}): {e}",
                key.alpha, key.beta, key.a, key.b
            ))
        })?;
        f = &f - &w.scale(&BigInt::from(count));
    }
    debug_assert!(f.euler_characteristic().is_one());
    Ok(f)
}

/// f-polynomial of an arbitrary matroid whose connected components are all
/// split: the product over components. Single-element components contribute
/// a point factor. Fails with the violating pair when a component is not
/// split.
pub fn matroid_f(m: &Matroid) -> Result<FPolynomial, EngineError> {
    let components = m.connected_components();
    let mut f = FPolynomial::one();
    for comp in &components {
        if comp.len() == 1 {
            continue;
        }
        let (sub, labels) = m.restriction(*comp);
        let profile = SplitProfile::of(&sub).map_err(|e| match e {
            EngineError::Matroid(MatroidError::NotSplit { f, g }) => {
                let lift = |s: crate::subset::Subset| {
                    crate::subset::Subset::from_elements(s.iter().map(|e| labels[e]))
                };
                EngineError::Matroid(MatroidError::NotSplit {
                    f: lift(f),
                    g: lift(g),
                })
            }
            other => other,
        })?;
        f = &f * &split_matroid_f(&profile)?;
    }
    debug_assert_eq!(f.degree(), m.ground_set_size() - components.len());
    Ok(f)
}

/// Parameters of a split matroid whose cyclic flats are the empty set, two
/// proper flats `F` and `G`, and the full ground set `F ∪ G`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TwoFlatParams {
    pub rank_f: usize,
    pub rank_g: usize,
    pub size_f: usize,
    pub size_g: usize,
    pub intersection: usize,
    pub rank: usize,
    pub n: usize,
}

/// f-polynomial of the two-flat matroid: both single-split corrections are
/// subtracted from the hypersimplex count, plus a pair correction exactly
/// when the flats form a modular pair.
pub fn two_flat_f(p: &TwoFlatParams) -> Result<FPolynomial, EngineError> {
    let TwoFlatParams {
        rank_f,
        rank_g,
        size_f,
        size_g,
        intersection: c,
        rank: k,
        n,
    } = *p;
    require(size_f + size_g <= n + c, || {
        format!(
            "flats do not fit in the ground set: size_f + size_g - intersection = {} but n = {n}",
            size_f + size_g - c
        )
    })?;
    require(c <= size_f.min(size_g), || {
        format!("intersection {c} exceeds a flat size ({size_f}, {size_g})")
    })?;
    require(0 < rank_f && rank_f < size_f, || {
        format!("flat F needs 0 < rank < size, got rank = {rank_f}, size = {size_f}")
    })?;
    require(0 < rank_g && rank_g < size_g, || {
        format!("flat G needs 0 < rank < size, got rank = {rank_g}, size = {size_g}")
    })?;
    require(size_f < n && size_g < n, || {
        format!("flats must be proper, got sizes {size_f}, {size_g} on n = {n}")
    })?;
    require(k > rank_f && k > rank_g, || {
        format!("matroid rank {k} must exceed both flat ranks {rank_f}, {rank_g}")
    })?;
    require(c + k <= rank_f + rank_g, || {
        format!(
            "not a split matroid: intersection + rank = {} exceeds rank_f + rank_g = {}",
            c + k,
            rank_f + rank_g
        )
    })?;
    let mut f = &(&hypersimplex_f(k, n)? - &split_correction(rank_f, k, size_f, n)?)
        - &split_correction(rank_g, k, size_g, n)?;
    if c + k == rank_f + rank_g {
        f = &f - &modular_pair_correction(rank_f - c, rank_g - c, size_f - c, size_g - c)?;
    }
    debug_assert!(f.euler_characteristic().is_one());
    Ok(f)
}

/// f-polynomial of a sparse paving matroid with `lambda` circuit-hyperplanes
/// of which `mu` unordered pairs meet in `rank - 2` elements.
pub fn sparse_paving_f(
    k: usize,
    n: usize,
    lambda: u64,
    mu: u64,
) -> Result<FPolynomial, EngineError> {
    require(0 < k && k < n, || {
        format!("sparse paving needs 0 < k < n, got k = {k}, n = {n}")
    })?;
    let mut f = hypersimplex_f(k, n)?;
    if lambda > 0 {
        require(k >= 2, || {
            format!("circuit-hyperplanes need rank >= 2, got k = {k} with lambda = {lambda}")
        })?;
        f = &f - &split_correction(k - 1, k, k, n)?.scale(&BigInt::from(lambda));
    }
    if mu > 0 {
        f = &f - &FPolynomial::from_i64s(&[0, 0, 1, 1]).scale(&BigInt::from(mu));
    }
    debug_assert!(f.euler_characteristic().is_one());
    Ok(f)
}

/// Closed form of the circuit-hyperplane correction `split_correction(k-1,
/// k, k, n)`, evaluated through Laurent arithmetic: the intermediate terms
/// carry `t^{-1}` and `t^{-2}` factors that cancel on combination.
pub fn sparse_paving_correction(k: usize, n: usize) -> Result<FPolynomial, EngineError> {
    require(1 < k && k < n, || {
        format!("circuit-hyperplane correction needs 1 < k < n, got k = {k}, n = {n}")
    })?;
    let (kb, nb) = (BigInt::from(k as i64), BigInt::from(n as i64));
    let cb = BigInt::from((n - k) as i64);
    let pow = |e: usize| LaurentPolynomial::from_poly(&FPolynomial::one_plus_t_pow(e));
    let one_plus_t = pow(1);
    let head = LaurentPolynomial::term(BigInt::one(), 0).sub(&one_plus_t.scale(&(&kb * &cb)));
    let mid = pow(k + 1)
        .scale(&cb)
        .add(&pow(n - k + 1).scale(&kb))
        .sub(&one_plus_t.scale(&nb))
        .shift(-1);
    let tail = pow(k)
        .add(&pow(n - k))
        .sub(&pow(n))
        .sub(&LaurentPolynomial::term(BigInt::one(), 0))
        .shift(-2);
    Ok(head.add(&mid).add(&tail).to_f_polynomial()?)
}

/// f-polynomial of the loopless rank-two matroid whose rank-one flats have
/// the given sizes; equivalently of the edge polytope of the complete
/// multipartite graph with those part sizes.
pub fn rank_two_f(parts: &[usize]) -> Result<FPolynomial, EngineError> {
    let s = parts.len();
    require(s >= 2, || {
        format!("rank-two matroid needs at least 2 rank-one flats, got {s}")
    })?;
    require(parts.iter().all(|&h| h >= 1), || {
        "rank-one flat sizes must be positive".to_string()
    })?;
    let n: usize = parts.iter().sum();
    let dim = if s >= 3 { n - 1 } else { n - 2 };
    // multiset of pairwise part-size sums, grouped to keep the inner loop
    // over distinct values
    let mut pair_sums: std::collections::BTreeMap<usize, u64> = std::collections::BTreeMap::new();
    for j in 0..s {
        for l in j + 1..s {
            *pair_sums.entry(parts[j] + parts[l]).or_insert(0) += 1;
        }
    }
    let mut part_sizes: std::collections::BTreeMap<usize, u64> = std::collections::BTreeMap::new();
    for &h in parts {
        *part_sizes.entry(h).or_insert(0) += 1;
    }
    let (ni, si) = (n as i64, s as i64);
    let mut coeffs = Vec::with_capacity(dim + 1);
    for i in 0..=dim as i64 {
        let mut c = binom(ni + 1, i + 2) + binom(ni, i + 2) * (si - 1);
        for (&sum, &count) in &pair_sums {
            c -= binom(sum as i64 + 1, i + 2) * BigInt::from(count);
        }
        for (&h, &count) in &part_sizes {
            c += binom(h as i64 + 1, i + 2) * BigInt::from(count) * (si - 2);
            c -= binom(ni - h as i64, i + 2) * BigInt::from(count);
        }
        coeffs.push(c);
    }
    let f = FPolynomial::from_coeffs(coeffs);
    debug_assert!(f.euler_characteristic().is_one());
    debug_assert_eq!(f.degree(), dim);
    Ok(f)
}

/// Facet count of a connected sparse paving matroid polytope with `lambda`
/// circuit-hyperplanes: the 2n coordinate facets plus one per flat. The
/// formula needs n > 4.
pub fn sparse_paving_facet_count(n: usize, lambda: u64) -> Result<u64, EngineError> {
    require(n > 4, || {
        format!("facet count formula needs n > 4, got n = {n}")
    })?;
    Ok(2 * n as u64 + lambda)
}

/// Lower bound on the maximum number of circuit-hyperplanes of a sparse
/// paving matroid on n elements, as an exact rational: binom(n, floor(n/2)) / n.
pub fn graham_sloane_bound(n: usize) -> Result<BigRational, EngineError> {
    require(n >= 1, || format!("bound needs n >= 1, got n = {n}"))?;
    Ok(BigRational::new(
        binom(n as i64, n as i64 / 2),
        BigInt::from(n as i64),
    ))
}

/// Whether the sequence rises to a single peak and then falls.
pub fn is_unimodal(seq: &[BigInt]) -> bool {
    let mut i = 0;
    while i + 1 < seq.len() && seq[i] <= seq[i + 1] {
        i += 1;
    }
    while i + 1 < seq.len() && seq[i] >= seq[i + 1] {
        i += 1;
    }
    i + 1 >= seq.len()
}

/// Whether `a_j^2 >= a_{j-1} a_{j+1}` holds at every interior index.
/// Defined only for sequences of positive entries.
pub fn is_log_concave(seq: &[BigInt]) -> Result<bool, EngineError> {
    if let Some((index, value)) = seq.iter().enumerate().find(|(_, v)| !v.is_positive()) {
        return Err(EngineError::NonPositiveEntry {
            index,
            value: value.clone(),
        });
    }
    for j in 1..seq.len().saturating_sub(1) {
        if &seq[j] * &seq[j] < &seq[j - 1] * &seq[j + 1] {
            return Ok(false);
        }
    }
    Ok(true)
}
