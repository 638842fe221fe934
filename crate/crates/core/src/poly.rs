//! Dense univariate polynomials with big integer coefficients and their
//! γ-vectors.

use std::fmt;
use std::ops::{Add, Mul, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("{poly} is not symmetric with respect to degree {n}")]
    NotSymmetric { poly: String, n: usize },
    #[error("cannot parse coefficient {0:?}")]
    BadCoefficient(String),
}

/// Coefficients lowest degree first, trailing zeros trimmed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0)
    }

    pub fn monomial(c: BigInt, degree: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = c;
        Self::new(coeffs)
    }

    /// `(1 + t)^n`.
    pub fn one_plus_t_pow(n: usize) -> Self {
        Self::new((0..=n).map(|i| binomial(BigInt::from(n), BigInt::from(i))).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// `coeff_i = coeff_{n−i}` for every `i`, and nothing above degree `n`.
    pub fn is_symmetric(&self, n: usize) -> bool {
        self.degree().is_none_or(|deg| deg <= n)
            && (0..=n).all(|i| self.coeff(i) == self.coeff(n - i))
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }
}

impl fmt::Display for IntPolynomial {
    /// `1 + 3t + t^2`; the zero polynomial prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match (i, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (1, true) => f.write_str("t")?,
                (1, false) => write!(f, "{a}t")?,
                (_, true) => write!(f, "t^{i}")?,
                (_, false) => write!(f, "{a}t^{i}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for IntPolynomial {
    type Err = PolyError;

    /// Comma separated coefficients, lowest degree first: `1,3,1`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.split(',')
            .map(|c| c.trim().parse::<BigInt>().map_err(|_| PolyError::BadCoefficient(c.trim().to_string())))
            .collect::<Result<Vec<_>, _>>()
            .map(Self::new)
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, other: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        IntPolynomial::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, other: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        IntPolynomial::new((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, other: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || other.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPolynomial::new(coeffs)
    }
}

impl std::iter::Sum for IntPolynomial {
    fn sum<I: Iterator<Item = IntPolynomial>>(iter: I) -> Self {
        iter.fold(IntPolynomial::zero(), |acc, p| &acc + &p)
    }
}

/// Coefficients of `p = Σ γ_i t^i (1 + t)^{n−2i}`.
///
/// Trailing zero γ's are dropped, so the zero polynomial has an empty
/// vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaVector {
    pub n: usize,
    pub gammas: Vec<BigInt>,
}

impl GammaVector {
    pub fn new(n: usize, mut gammas: Vec<BigInt>) -> Self {
        while gammas.last().is_some_and(Zero::is_zero) {
            gammas.pop();
        }
        Self { n, gammas }
    }

    pub fn reconstruct(&self) -> IntPolynomial {
        self.gammas
            .iter()
            .enumerate()
            .map(|(i, g)| IntPolynomial::one_plus_t_pow(self.n - 2 * i).shift(i).scale(g))
            .sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.gammas.iter().all(|g| !g.is_negative())
    }
}

/// Peels off `γ_i t^i (1 + t)^{n−2i}` from the lowest degree upwards.
pub fn gamma_vector(p: &IntPolynomial, n: usize) -> Result<GammaVector, PolyError> {
    if !p.is_symmetric(n) {
        return Err(PolyError::NotSymmetric { poly: p.to_string(), n });
    }
    let mut rest = p.clone();
    let mut gammas = Vec::with_capacity(n / 2 + 1);
    for i in 0..=n / 2 {
        let g = rest.coeff(i);
        rest = &rest - &IntPolynomial::one_plus_t_pow(n - 2 * i).shift(i).scale(&g);
        gammas.push(g);
    }
    debug_assert!(rest.is_zero(), "a symmetric polynomial is spanned by the gamma basis");
    Ok(GammaVector::new(n, gammas))
}
