//! Colored permutations `Z_r ≀ S_d`, their descents and slides, the refined
//! Eulerian counts `A^(s)(d, j, m)` and the bar partitions that count the
//! entries of the f-vector transformation.
//!
//! A colored permutation is written `σ_1^{ε_1} … σ_d^{ε_d}`. Comparisons use
//! the color first and the value second, so `x^a < y^b` iff `a < b`, or
//! `a = b` and `x < y`.

use std::cmp::Ordering;
use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ColoredError {
    #[error("{0:?} is not a permutation of 1..={1}")]
    NotAPermutation(Vec<usize>, usize),
    #[error("color {0} is out of range for r = {1}")]
    ColorOutOfRange(usize, usize),
    #[error("expected {0} colors, got {1}")]
    LengthMismatch(usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColoredPermutation {
    sigma: Vec<usize>,
    eps: Vec<usize>,
    r: usize,
}

impl ColoredPermutation {
    pub fn new(sigma: Vec<usize>, eps: Vec<usize>, r: usize) -> Result<Self, ColoredError> {
        let d = sigma.len();
        if eps.len() != d {
            return Err(ColoredError::LengthMismatch(d, eps.len()));
        }
        let mut seen = vec![false; d + 1];
        for &v in &sigma {
            if v == 0 || v > d || std::mem::replace(&mut seen[v], true) {
                return Err(ColoredError::NotAPermutation(sigma, d));
            }
        }
        if let Some(&c) = eps.iter().find(|&&c| c >= r) {
            return Err(ColoredError::ColorOutOfRange(c, r));
        }
        Ok(Self { sigma, eps, r })
    }

    pub fn d(&self) -> usize {
        self.sigma.len()
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn sigma(&self) -> &[usize] {
        &self.sigma
    }

    pub fn eps(&self) -> &[usize] {
        &self.eps
    }

    /// Value and color at 1-based position `i`, padded with `(d+1)^0` at
    /// `i = d + 1`.
    fn letter(&self, i: usize) -> (usize, usize) {
        if i == self.d() + 1 {
            (self.d() + 1, 0)
        } else {
            (self.sigma[i - 1], self.eps[i - 1])
        }
    }

    /// Positions `i ∈ [d]` with `σ_i^{ε_i} > σ_{i+1}^{ε_{i+1}}`.
    pub fn descent_set(&self) -> Vec<usize> {
        (1..=self.d())
            .filter(|&i| compare(self.letter(i), self.letter(i + 1)) == Ordering::Greater)
            .collect()
    }

    pub fn descent_number(&self) -> usize {
        self.descent_set().len()
    }

    /// Decreasing runs of length at least two in `∞^0 σ_1 … σ_d (d+1)^0`.
    pub fn slide_count(&self) -> usize {
        let d = self.d();
        let word: Vec<(usize, usize)> = std::iter::once((usize::MAX, 0))
            .chain((1..=d + 1).map(|i| self.letter(i)))
            .collect();
        let mut slides = 0;
        let mut run = 1;
        for w in word.windows(2) {
            if compare(w[0], w[1]) == Ordering::Less {
                slides += usize::from(run >= 2);
                run = 1;
            } else {
                run += 1;
            }
        }
        slides + usize::from(run >= 2)
    }
}

/// Color first, then value.
fn compare(a: (usize, usize), b: (usize, usize)) -> Ordering {
    a.1.cmp(&b.1).then(a.0.cmp(&b.0))
}

impl fmt::Display for ColoredPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> =
            self.sigma.iter().zip(&self.eps).map(|(v, c)| format!("{v}^{c}")).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Which colored permutations to enumerate. The default selects everything.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct PermFilter {
    pub first_color_zero: bool,
    pub last_value: Option<usize>,
    pub last_color: Option<usize>,
}

impl PermFilter {
    pub fn all() -> Self {
        Self::default()
    }

    /// The set `A_d`: first letter has color 0.
    pub fn first_color_zero() -> Self {
        Self { first_color_zero: true, ..Self::default() }
    }

    /// The set `A_{d,j}^{(s)}`: first color 0, `σ_d = d + 1 − j`, `ε_d = s`.
    pub fn block(d: usize, j: usize, s: usize) -> Self {
        Self { first_color_zero: true, last_value: Some(d + 1 - j), last_color: Some(s) }
    }

    pub fn with_last_value(self, v: usize) -> Self {
        Self { last_value: Some(v), ..self }
    }

    pub fn with_last_color(self, s: usize) -> Self {
        Self { last_color: Some(s), ..self }
    }

    fn accepts(&self, sigma: &[usize], eps: &[usize]) -> bool {
        (!self.first_color_zero || eps[0] == 0)
            && self.last_value.is_none_or(|v| sigma.last() == Some(&v))
            && self.last_color.is_none_or(|s| eps.last() == Some(&s))
    }
}

/// Calls `visit` on every matching colored permutation: permutations in
/// lexicographic order, colors varying fastest (last position fastest).
pub fn for_each_colored(d: usize, r: usize, filter: PermFilter, mut visit: impl FnMut(&ColoredPermutation)) {
    assert!(d >= 1 && r >= 1, "need d >= 1 and r >= 1");
    let colorings: Vec<Vec<usize>> =
        std::iter::repeat_n(0..r, d).multi_cartesian_product().collect();
    for sigma in (1..=d).permutations(d) {
        if filter.last_value.is_some_and(|v| sigma[d - 1] != v) {
            continue;
        }
        for eps in &colorings {
            if filter.accepts(&sigma, eps) {
                visit(&ColoredPermutation { sigma: sigma.clone(), eps: eps.clone(), r });
            }
        }
    }
}

pub fn enumerate(d: usize, r: usize, filter: PermFilter) -> Vec<ColoredPermutation> {
    let mut out = Vec::new();
    for_each_colored(d, r, filter, |p| out.push(p.clone()));
    out
}

/// `A^(s)(d, j, m)` for fixed `d` and `r`: colored permutations with first
/// color 0, `σ_d = d + 1 − j`, `ε_d = s` and `m` descents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerianTable {
    d: usize,
    r: usize,
    // counts[s][j - 1][m]
    counts: Vec<Vec<Vec<BigInt>>>,
}

impl EulerianTable {
    fn zeros(d: usize, r: usize) -> Self {
        Self { d, r, counts: vec![vec![vec![BigInt::zero(); d + 1]; d]; r] }
    }

    pub fn bruteforce(d: usize, r: usize) -> Self {
        let mut table = Self::zeros(d, r);
        for_each_colored(d, r, PermFilter::first_color_zero(), |p| {
            let j = d + 1 - p.sigma[d - 1];
            table.counts[p.eps[d - 1]][j - 1][p.descent_number()] += 1;
        });
        table
    }

    /// Built upwards from `A^(0)(1, 1, 0) = 1` by removing the last letter.
    pub fn recurrence(d: usize, r: usize) -> Self {
        assert!(d >= 1 && r >= 1, "need d >= 1 and r >= 1");
        let mut table = Self::zeros(1, r);
        table.counts[0][0][0] = BigInt::from(1);
        for _ in 1..d {
            table = table.grow();
        }
        table
    }

    /// The table for `n + 1` from the table for `n`.
    fn grow(&self) -> Self {
        let (n, r) = (self.d, self.r);
        let mut next = Self::zeros(n + 1, r);
        // sums over j of A^(l)(n, j+1, m) for each color l
        let column_sum = |l: usize, m: usize| -> BigInt { (0..n).map(|j| &self.counts[l][j][m]).sum() };
        let at = |l: usize, j: usize, m: isize| -> BigInt {
            if m < 0 || m as usize > n {
                BigInt::zero()
            } else {
                self.counts[l][j][m as usize].clone()
            }
        };
        let shifted = |l: usize, m: usize| -> BigInt { if m == 0 { BigInt::zero() } else { column_sum(l, m - 1) } };
        for k in 0..=n {
            for m in 0..=n + 1 {
                let mi = m as isize;
                let same: BigInt = (k..n).map(|j| at(0, j, mi)).sum();
                let lower: BigInt = (0..k).map(|j| at(0, j, mi - 1)).sum();
                let other: BigInt = (1..r).filter(|_| m <= n).map(|l| column_sum(l, m)).sum();
                next.counts[0][k][m] = same + other + lower;
                for s in 1..r {
                    let mut total: BigInt = (k..n).map(|j| at(s, j, mi)).sum();
                    if m <= n {
                        total += (1..s).map(|l| column_sum(l, m)).sum::<BigInt>();
                    }
                    total += shifted(0, m);
                    total += (0..k).map(|j| at(s, j, mi - 1)).sum::<BigInt>();
                    total += (s + 1..r).map(|l| shifted(l, m)).sum::<BigInt>();
                    next.counts[s][k][m] = total;
                }
            }
        }
        next
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn r(&self) -> usize {
        self.r
    }

    /// `A^(s)(d, j, m)`; zero outside `1 ≤ j ≤ d`, `0 ≤ m ≤ d`.
    pub fn count(&self, s: usize, j: usize, m: usize) -> BigInt {
        if s >= self.r || j == 0 || j > self.d || m > self.d {
            return BigInt::zero();
        }
        self.counts[s][j - 1][m].clone()
    }

    /// `(A^(s)(d, j, 0), …, A^(s)(d, j, d))`.
    pub fn row(&self, s: usize, j: usize) -> &[BigInt] {
        &self.counts[s][j - 1]
    }

    /// `H_{d−1}^(s)(k)`: the first `d` entries of the row for `j = k + 1`.
    pub fn h_row(&self, s: usize, k: usize) -> &[BigInt] {
        &self.counts[s][k][..self.d]
    }

    pub fn total(&self) -> BigInt {
        self.counts.iter().flatten().flatten().sum()
    }

    /// First `(s, k, m)` breaking the reversal symmetries
    /// `A^(0)(n, k+1, m) = A^(0)(n, n−k, n−1−m)` and, for `s ≠ 0`,
    /// `A^(s)(n, k+1, m) = A^(r−s)(n, n−k, n−m)` for permutations of length `n`.
    pub fn symmetry_violation(&self) -> Option<(usize, usize, usize)> {
        let d = self.d - 1;
        for k in 0..=d {
            for m in 0..=d {
                if self.count(0, k + 1, m) != self.count(0, d + 1 - k, d - m) {
                    return Some((0, k, m));
                }
                for s in 1..self.r {
                    if self.count(s, k + 1, m) != self.count(self.r - s, d + 1 - k, d + 1 - m) {
                        return Some((s, k, m));
                    }
                }
            }
        }
        None
    }
}

/// `A^(s)(d, j, m)` by direct enumeration of `A_{d,j}^{(s)}`.
pub fn eulerian_count_bruteforce(d: usize, j: usize, m: usize, s: usize, r: usize) -> BigInt {
    let mut count = BigInt::zero();
    if j == 0 || j > d || s >= r {
        return count;
    }
    for_each_colored(d, r, PermFilter::block(d, j, s), |p| {
        if p.descent_number() == m {
            count += 1;
        }
    });
    count
}

/// An ordered set partition `T_1 | … | T_t | T_{t+1}` of `1..=d+1`.
///
/// Letters of `T_1..T_t` carry colors; `T_1` holds at least one letter of
/// color 0. The last block is uncolored (stored with color 0), contains
/// `d + 1 − j` and nothing larger.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BarPartition {
    /// `(value, color)` pairs, each block sorted.
    pub blocks: Vec<Vec<(usize, usize)>>,
}

impl BarPartition {
    /// Concatenates the blocks, each written increasingly (color first).
    pub fn to_permutation(&self, r: usize) -> ColoredPermutation {
        let mut sigma = Vec::new();
        let mut eps = Vec::new();
        for block in &self.blocks {
            let mut sorted = block.clone();
            sorted.sort_by(|a, b| compare(*a, *b));
            for (v, c) in sorted {
                sigma.push(v);
                eps.push(c);
            }
        }
        ColoredPermutation::new(sigma, eps, r).expect("blocks cover 1..=d+1")
    }

    /// Positions of the `t` bars in the concatenated word.
    pub fn bar_positions(&self) -> Vec<usize> {
        self.blocks[..self.blocks.len() - 1]
            .iter()
            .scan(0, |acc, b| {
                *acc += b.len();
                Some(*acc)
            })
            .collect()
    }
}

fn walk_bar_partitions(d: usize, t: usize, j: usize, r: usize, mut visit: impl FnMut(&[usize], &[usize])) {
    if j > d {
        return;
    }
    let top = d + 1 - j;
    let n = d + 1;
    // block[v - 1] in 0..=t (t is the last block), color[v - 1]
    let mut block = vec![0usize; n];
    let mut color = vec![0usize; n];
    #[allow(clippy::too_many_arguments)]
    fn go(
        v: usize,
        n: usize,
        t: usize,
        r: usize,
        top: usize,
        block: &mut [usize],
        color: &mut [usize],
        visit: &mut dyn FnMut(&[usize], &[usize]),
    ) {
        if v > n {
            let mut sizes = vec![0usize; t];
            let mut first_has_zero = t == 0;
            for i in 0..n {
                if block[i] < t {
                    sizes[block[i]] += 1;
                    first_has_zero |= block[i] == 0 && color[i] == 0;
                }
            }
            if first_has_zero && sizes.iter().all(|&s| s > 0) {
                visit(block, color);
            }
            return;
        }
        if v <= top {
            block[v - 1] = t;
            color[v - 1] = 0;
            go(v + 1, n, t, r, top, block, color, visit);
        }
        if v != top {
            for b in 0..t {
                for c in 0..r {
                    block[v - 1] = b;
                    color[v - 1] = c;
                    go(v + 1, n, t, r, top, block, color, visit);
                }
            }
        }
    }
    go(1, n, t, r, top, &mut block, &mut color, &mut visit);
}

/// Number of bar partitions of rank `t` whose last block has maximum
/// `d + 1 − j`.
pub fn bar_partition_count(d: usize, t: usize, j: usize, r: usize) -> BigInt {
    let mut count = BigInt::zero();
    walk_bar_partitions(d, t, j, r, |_, _| count += 1);
    count
}

pub fn enumerate_bar_partitions(d: usize, t: usize, j: usize, r: usize) -> Vec<BarPartition> {
    let mut out = Vec::new();
    walk_bar_partitions(d, t, j, r, |block, color| {
        let mut blocks = vec![Vec::new(); t + 1];
        for (i, (&b, &c)) in block.iter().zip(color).enumerate() {
            blocks[b].push((i + 1, c));
        }
        out.push(BarPartition { blocks });
    });
    out
}
