//! The linear maps sending the f- and h-vector of a complex to those of its
//! type I multichain subdivision, and the chain counts behind them.

use std::collections::HashMap;
use std::fmt;
use std::ops::Mul;

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Pow, Zero};
use thiserror::Error;

use crate::colored::{bar_partition_count, EulerianTable};
use crate::complex::{FVector, HVector};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TransformError {
    #[error("alpha_1 must be at least 1, got {0:?}")]
    InvalidAlpha(Vec<usize>),
    #[error("k must be at least -1, got {0}")]
    InvalidK(i64),
}

/// Square matrix of big integers, `entries[row][col]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerMatrix {
    entries: Vec<Vec<BigInt>>,
}

impl IntegerMatrix {
    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> BigInt) -> Self {
        Self { entries: (0..n).map(|i| (0..n).map(|j| f(i, j)).collect()).collect() }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| if i == j { BigInt::one() } else { BigInt::zero() })
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, row: usize, col: usize) -> &BigInt {
        &self.entries[row][col]
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.entries
    }

    pub fn column(&self, col: usize) -> Vec<BigInt> {
        self.entries.iter().map(|row| row[col].clone()).collect()
    }

    pub fn apply(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.size(), "vector length must match the matrix");
        self.entries.iter().map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum()).collect()
    }
}

impl Mul for &IntegerMatrix {
    type Output = IntegerMatrix;

    fn mul(self, other: &IntegerMatrix) -> IntegerMatrix {
        assert_eq!(self.size(), other.size());
        let n = self.size();
        IntegerMatrix::from_fn(n, |i, j| (0..n).map(|k| &self.entries[i][k] * &other.entries[k][j]).sum())
    }
}

impl fmt::Display for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.entries {
            writeln!(f, "{}", row.iter().join(" "))?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChainMethod {
    Closed,
    Recurrence,
}

/// `(−1)^n` times `x`.
fn signed(n: usize, x: BigInt) -> BigInt {
    if n.is_multiple_of(2) {
        x
    } else {
        -x
    }
}

fn pow(base: usize, exp: usize) -> BigInt {
    Pow::pow(BigInt::from(base), exp)
}

fn choose(n: usize, k: usize) -> BigInt {
    if k > n {
        BigInt::zero()
    } else {
        binomial(BigInt::from(n), BigInt::from(k))
    }
}

/// `P_k^{α_1,…,α_r}`: strict chains `x_0 ≺ … ≺ x_k` of type I multichains
/// ending at a fixed multichain whose successive differences have sizes
/// `α_1, …, α_r`.
pub fn chain_count(k: i64, alphas: &[usize], method: ChainMethod) -> Result<BigInt, TransformError> {
    if alphas.first().is_none_or(|&a| a == 0) {
        return Err(TransformError::InvalidAlpha(alphas.to_vec()));
    }
    if k < -1 {
        return Err(TransformError::InvalidK(k));
    }
    if k == -1 {
        return Ok(BigInt::zero());
    }
    let k = k as usize;
    Ok(match method {
        ChainMethod::Closed => chain_count_closed(k, alphas),
        ChainMethod::Recurrence => chain_count_recurrence(k, alphas, &mut HashMap::new()),
    })
}

/// `Σ_i (−1)^{k−i} C(k,i) (i+1)^{α_2+…+α_r} ((i+1)^{α_1} − i^{α_1})`.
fn chain_count_closed(k: usize, alphas: &[usize]) -> BigInt {
    let rest: usize = alphas[1..].iter().sum();
    let a1 = alphas[0];
    (0..=k)
        .map(|i| signed(k - i, choose(k, i) * pow(i + 1, rest) * (pow(i + 1, a1) - pow(i, a1))))
        .sum()
}

fn chain_count_recurrence(k: usize, alphas: &[usize], memo: &mut HashMap<(usize, Vec<usize>), BigInt>) -> BigInt {
    if k == 0 {
        return BigInt::one();
    }
    if let Some(v) = memo.get(&(k, alphas.to_vec())) {
        return v.clone();
    }
    // the predecessor keeps k_i of the α_i new elements, with k_1 ≥ 1
    let ranges = alphas.iter().enumerate().map(|(i, &a)| (usize::from(i == 0)..=a).collect::<Vec<_>>());
    let mut total = BigInt::zero();
    for ks in ranges.multi_cartesian_product() {
        let weight: BigInt = alphas.iter().zip(&ks).map(|(&a, &b)| choose(a, b)).product();
        total += weight * chain_count_recurrence(k - 1, &ks, memo);
    }
    total -= chain_count_recurrence(k - 1, alphas, memo);
    memo.insert((k, alphas.to_vec()), total.clone());
    total
}

/// `f_{l,m}`; row 0 is `[m = 0]`.
pub fn f_matrix_entry(l: usize, m: usize, r: usize) -> BigInt {
    if l == 0 {
        return if m == 0 { BigInt::one() } else { BigInt::zero() };
    }
    (0..l)
        .map(|i| signed(l - 1 - i, choose(l - 1, i) * (pow(r * i + r, m) - pow(r * i + r - 1, m))))
        .sum()
}

/// `F_d`: row `l` is the output index, column `m` addresses `f_{m−1}`.
pub fn f_matrix(d: usize, r: usize) -> IntegerMatrix {
    IntegerMatrix::from_fn(d + 1, |l, m| f_matrix_entry(l, m, r))
}

pub fn transform_f(f: &FVector, r: usize) -> FVector {
    FVector(f_matrix(f.d(), r).apply(f.entries()))
}

/// `f_k` of the subdivision as a sum of chain counts over the multichains
/// `A_1 ⊆ … ⊆ A_r = A` of each face `A`.
pub fn f_via_multichain_sum(f: &FVector, r: usize, k: usize) -> BigInt {
    let mut total = BigInt::zero();
    for (l, f_prev) in f.entries().iter().enumerate().skip(1) {
        let mut inner = BigInt::zero();
        for sizes in weakly_increasing(r - 1, 1, l) {
            let mut chain = sizes.clone();
            chain.push(l);
            let weight: BigInt = chain.windows(2).map(|w| choose(w[1], w[0])).product();
            let alphas: Vec<usize> =
                std::iter::once(chain[0]).chain(chain.windows(2).map(|w| w[1] - w[0])).collect();
            inner += weight * chain_count_closed(k, &alphas);
        }
        total += inner * f_prev;
    }
    total
}

/// Weakly increasing sequences of length `len` with entries in `lo..=hi`.
fn weakly_increasing(len: usize, lo: usize, hi: usize) -> Vec<Vec<usize>> {
    if len == 0 {
        return vec![Vec::new()];
    }
    (lo..=hi).combinations_with_replacement(len).collect()
}

/// `R_d`: entry `(m, k)` is `A^(0)(d+1, k+1, m)`.
pub fn h_matrix(d: usize, r: usize) -> IntegerMatrix {
    let table = EulerianTable::recurrence(d + 1, r);
    IntegerMatrix::from_fn(d + 1, |m, k| table.count(0, k + 1, m))
}

pub fn transform_h(h: &HVector, r: usize) -> HVector {
    HVector(h_matrix(h.d(), r).apply(h.entries()))
}

/// `H_d` with `h = H_d f`.
pub fn f_to_h_matrix(d: usize) -> IntegerMatrix {
    IntegerMatrix::from_fn(d + 1, |j, i| if i <= j { signed(j - i, choose(d - i, j - i)) } else { BigInt::zero() })
}

/// `H_d^{−1}` with `f = H_d^{−1} h`.
pub fn h_to_f_matrix(d: usize) -> IntegerMatrix {
    IntegerMatrix::from_fn(d + 1, |j, i| if i <= j { choose(d - i, j - i) } else { BigInt::zero() })
}

/// `H_d F_d H_d^{−1}`.
pub fn conjugated_f_matrix(d: usize, r: usize) -> IntegerMatrix {
    let h = f_to_h_matrix(d);
    let h_inv = h_to_f_matrix(d);
    assert_eq!(&h * &h_inv, IntegerMatrix::identity(d + 1), "H_d is unitriangular");
    &(&h * &f_matrix(d, r)) * &h_inv
}

/// First `(l, m)` with `Σ_{j=1}^m r^j C(m,j) f_{l,m−j} ≠ f_{l+1,m}`, for
/// `1 ≤ l ≤ d − 1` and `1 ≤ m ≤ d`.
pub fn f_entry_recurrence_violation(d: usize, r: usize) -> Option<(usize, usize)> {
    for l in 1..d {
        for m in 1..=d {
            let lhs: BigInt = (1..=m).map(|j| pow(r, j) * choose(m, j) * f_matrix_entry(l, m - j, r)).sum();
            if lhs != f_matrix_entry(l + 1, m, r) {
                return Some((l, m));
            }
        }
    }
    None
}

/// `Σ_m C(d−j, d−m) f_{t,m}`, the predicted number of bar partitions.
pub fn bar_partition_formula(d: usize, t: usize, j: usize, r: usize) -> BigInt {
    (0..=d).filter(|&m| m >= j).map(|m| choose(d - j, d - m) * f_matrix_entry(t, m, r)).sum()
}

/// First `(t, j)` where enumeration and formula disagree.
pub fn bar_partition_violation(d: usize, r: usize) -> Option<(usize, usize)> {
    (0..=d)
        .cartesian_product(0..=d)
        .find(|&(t, j)| bar_partition_count(d, t, j, r) != bar_partition_formula(d, t, j, r))
}
