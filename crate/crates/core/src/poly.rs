//! Exact dense polynomial arithmetic over arbitrary-precision integers,
//! plus the binomial/multinomial kernels shared by all formula code.
//!
//! The face-count polynomials handled here follow the convention that the
//! coefficient of `t^i` is the number of i-dimensional faces, the empty face
//! is omitted and the polytope itself is included, so the alternating sum of
//! coefficients of a valid f-polynomial is 1.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::RwLock;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("laurent polynomial has negative minimum exponent {min_exp} after normalization")]
    NegativeExponent { min_exp: i64 },
}

static PASCAL: RwLock<Vec<Vec<BigInt>>> = RwLock::new(Vec::new());

/// Binomial coefficient as a total function: 0 whenever `k < 0`, `k > n`
/// or `n < 0`. Rows of Pascal's triangle are cached lazily.
pub fn binom(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let (n, k) = (n as usize, k as usize);
    {
        let cache = PASCAL.read().unwrap();
        if n < cache.len() {
            return cache[n][k].clone();
        }
    }
    let mut cache = PASCAL.write().unwrap();
    while cache.len() <= n {
        let m = cache.len();
        let mut row = vec![BigInt::one(); m + 1];
        for j in 1..m {
            row[j] = &cache[m - 1][j - 1] + &cache[m - 1][j];
        }
        cache.push(row);
    }
    cache[n][k].clone()
}

/// Trinomial coefficient `total! / (i! j! (total-i-j)!)`, 0 when `i < 0`,
/// `j < 0` or `i + j > total`.
pub fn multinom(total: i64, i: i64, j: i64) -> BigInt {
    if total < 0 || i < 0 || j < 0 || i + j > total {
        return BigInt::zero();
    }
    binom(total, i) * binom(total - i, j)
}

/// Dense integer polynomial; index i holds the coefficient of `t^i`.
///
/// The same type carries face polynomials and the signed correction
/// polynomials, so coefficients may be negative. Invariants (positivity,
/// Euler relation) are asserted where a value is claimed to be the
/// f-polynomial of a polytope.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct FPolynomial {
    coeffs: Vec<BigInt>,
}

impl FPolynomial {
    pub fn zero() -> Self {
        FPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        FPolynomial::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        let mut p = FPolynomial { coeffs: vec![c] };
        p.normalize();
        p
    }

    /// Builds from dense coefficients (index = exponent), stripping trailing zeros.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = FPolynomial { coeffs };
        p.normalize();
        p
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        FPolynomial::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// The polynomial `(1 + t)^e`.
    pub fn one_plus_t_pow(e: usize) -> Self {
        let coeffs = (0..=e as i64).map(|i| binom(e as i64, i)).collect();
        FPolynomial::from_coeffs(coeffs)
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the polynomial; the zero polynomial reports degree 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return FPolynomial::zero();
        }
        FPolynomial::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiplication by `t^s`.
    pub fn shift_up(&self, s: usize) -> Self {
        if self.is_zero() {
            return FPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); s];
        coeffs.extend(self.coeffs.iter().cloned());
        FPolynomial { coeffs }
    }

    /// Alternating sum of the coefficients; equals 1 for the f-polynomial of
    /// a nonempty polytope under the convention used throughout this crate.
    pub fn euler_characteristic(&self) -> BigInt {
        let mut acc = BigInt::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            if i % 2 == 0 {
                acc += c;
            } else {
                acc -= c;
            }
        }
        acc
    }

    /// Checks the invariants of an f-polynomial of a polytope of dimension
    /// `dim`: positive coefficients, degree `dim`, monic leading term and
    /// alternating sum 1.
    pub fn check_f_polynomial(&self, dim: usize) -> Result<(), String> {
        if self.degree() != dim || self.is_zero() {
            return Err(format!(
                "degree {} does not match polytope dimension {dim}",
                self.degree()
            ));
        }
        if !self.coeffs[dim].is_one() {
            return Err(format!("leading coefficient {} is not 1", self.coeffs[dim]));
        }
        if let Some(c) = self.coeffs.iter().find(|c| !c.is_positive()) {
            return Err(format!("non-positive coefficient {c}"));
        }
        let euler = self.euler_characteristic();
        if !euler.is_one() {
            return Err(format!("alternating coefficient sum {euler}, expected 1"));
        }
        Ok(())
    }
}

impl fmt::Debug for FPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for FPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "(0)");
        }
        write!(f, "(")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl Add for &FPolynomial {
    type Output = FPolynomial;
    fn add(self, rhs: &FPolynomial) -> FPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = vec![BigInt::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        FPolynomial::from_coeffs(coeffs)
    }
}

impl Sub for &FPolynomial {
    type Output = FPolynomial;
    fn sub(self, rhs: &FPolynomial) -> FPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = vec![BigInt::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] -= c;
        }
        FPolynomial::from_coeffs(coeffs)
    }
}

impl Mul for &FPolynomial {
    type Output = FPolynomial;
    fn mul(self, rhs: &FPolynomial) -> FPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return FPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        FPolynomial::from_coeffs(coeffs)
    }
}

impl Neg for &FPolynomial {
    type Output = FPolynomial;
    fn neg(self) -> FPolynomial {
        FPolynomial::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

/// Integer Laurent polynomial: dense coefficients starting at `min_exp`,
/// which may be negative. Normalization strips zero coefficients at both
/// ends; the zero polynomial is stored with an empty coefficient list.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LaurentPolynomial {
    min_exp: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        LaurentPolynomial {
            min_exp: 0,
            coeffs: Vec::new(),
        }
    }

    pub fn from_poly(p: &FPolynomial) -> Self {
        let mut l = LaurentPolynomial {
            min_exp: 0,
            coeffs: p.coeffs().to_vec(),
        };
        l.normalize();
        l
    }

    /// Single term `c * t^e`.
    pub fn term(c: BigInt, e: i64) -> Self {
        let mut l = LaurentPolynomial {
            min_exp: e,
            coeffs: vec![c],
        };
        l.normalize();
        l
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        let lead_zeros = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros > 0 {
            self.coeffs.drain(..lead_zeros);
            self.min_exp += lead_zeros as i64;
        }
        if self.coeffs.is_empty() {
            self.min_exp = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Minimum exponent carrying a nonzero coefficient, when any.
    pub fn min_exponent(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.min_exp)
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let lo = self.min_exp.min(rhs.min_exp);
        let hi = (self.min_exp + self.coeffs.len() as i64)
            .max(rhs.min_exp + rhs.coeffs.len() as i64);
        let mut coeffs = vec![BigInt::zero(); (hi - lo) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[(self.min_exp - lo) as usize + i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[(rhs.min_exp - lo) as usize + i] += c;
        }
        let mut l = LaurentPolynomial {
            min_exp: lo,
            coeffs,
        };
        l.normalize();
        l
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.scale(&BigInt::from(-1)))
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        let mut l = LaurentPolynomial {
            min_exp: self.min_exp + rhs.min_exp,
            coeffs,
        };
        l.normalize();
        l
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return LaurentPolynomial::zero();
        }
        LaurentPolynomial {
            min_exp: self.min_exp,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplication by `t^e` (e may be negative).
    pub fn shift(&self, e: i64) -> Self {
        if self.is_zero() {
            return LaurentPolynomial::zero();
        }
        LaurentPolynomial {
            min_exp: self.min_exp + e,
            coeffs: self.coeffs.clone(),
        }
    }

    /// Converts to an ordinary polynomial. A surviving negative exponent
    /// signals a bug in the calling formula, not bad user input.
    pub fn to_f_polynomial(&self) -> Result<FPolynomial, PolyError> {
        if self.is_zero() {
            return Ok(FPolynomial::zero());
        }
        if self.min_exp < 0 {
            return Err(PolyError::NegativeExponent {
                min_exp: self.min_exp,
            });
        }
        let mut coeffs = vec![BigInt::zero(); self.min_exp as usize];
        coeffs.extend(self.coeffs.iter().cloned());
        Ok(FPolynomial::from_coeffs(coeffs))
    }
}
