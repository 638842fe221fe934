//! Colored Eulerian polynomials, their γ-vectors and the slide statistic.
//!
//! Block polynomials are indexed from zero: `block(k, s)` is the descent
//! generating function of `A_{d,k+1}^{(s)}`, the colored permutations with
//! first color 0, last letter `d − k` and last color `s`.

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::Zero;

use crate::colored::{for_each_colored, EulerianTable, PermFilter};
use crate::poly::{gamma_vector, GammaVector, IntPolynomial, PolyError};
use crate::sturm::{interlacing_sequence, SturmError};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Selector {
    /// `A_d(t)`.
    Total,
    /// `A_d^(s)(t)`.
    Color(usize),
    /// `A_d^(≠0)(t)`.
    Nonzero,
    /// `A_{d,j}^(s)(t)` with `1 ≤ j ≤ d`.
    Block { j: usize, s: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Bruteforce,
    Recurrence,
}

/// The two symmetric polynomials with a γ-expansion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GammaSelector {
    Color0,
    Nonzero,
}

impl GammaSelector {
    pub fn selector(self) -> Selector {
        match self {
            Self::Color0 => Selector::Color(0),
            Self::Nonzero => Selector::Nonzero,
        }
    }

    /// Symmetry degree: `d − 1` for color 0 and `d` for nonzero colors.
    pub fn center(self, d: usize) -> usize {
        match self {
            Self::Color0 => d - 1,
            Self::Nonzero => d,
        }
    }

    fn accepts(self, last_color: usize) -> bool {
        match self {
            Self::Color0 => last_color == 0,
            Self::Nonzero => last_color != 0,
        }
    }
}

/// `blocks[s][k]` for `0 ≤ k < d`, either by enumeration or by growing
/// polynomials one letter at a time.
pub fn block_polynomials(d: usize, r: usize, method: Method) -> Vec<Vec<IntPolynomial>> {
    assert!(d >= 1 && r >= 1, "need d >= 1 and r >= 1");
    match method {
        Method::Bruteforce => {
            let table = EulerianTable::bruteforce(d, r);
            (0..r)
                .map(|s| (1..=d).map(|j| IntPolynomial::new(table.row(s, j).to_vec())).collect())
                .collect()
        }
        Method::Recurrence => {
            let mut blocks = base_blocks(r);
            for n in 2..=d {
                blocks = (0..r).map(|s| (0..n).map(|k| next_block(&blocks, r, k, s)).collect()).collect();
            }
            blocks
        }
    }
}

fn base_blocks(r: usize) -> Vec<Vec<IntPolynomial>> {
    (0..r).map(|s| vec![if s == 0 { IntPolynomial::one() } else { IntPolynomial::zero() }]).collect()
}

/// One block of size `n` from the blocks of size `n − 1`.
fn next_block(prev: &[Vec<IntPolynomial>], r: usize, k: usize, s: usize) -> IntPolynomial {
    let all = |l: usize| -> IntPolynomial { prev[l].iter().cloned().sum() };
    let below = |l: usize| -> IntPolynomial { prev[l][..k.min(prev[l].len())].iter().cloned().sum() };
    let from = |l: usize| -> IntPolynomial { prev[l][k.min(prev[l].len())..].iter().cloned().sum() };
    let t = |p: IntPolynomial| p.shift(1);
    if s == 0 {
        let others: IntPolynomial = (1..r).map(all).sum();
        &(&t(below(0)) + &from(0)) + &others
    } else {
        let raised: IntPolynomial = std::iter::once(0).chain(s + 1..r).map(all).sum();
        let lower: IntPolynomial = (1..s).map(all).sum();
        &(&(&t(raised) + &t(below(s))) + &from(s)) + &lower
    }
}

pub fn eulerian_polynomial(d: usize, r: usize, selector: Selector, method: Method) -> IntPolynomial {
    let blocks = block_polynomials(d, r, method);
    let color = |s: usize| -> IntPolynomial { blocks[s].iter().cloned().sum() };
    match selector {
        Selector::Total => (0..r).map(color).sum(),
        Selector::Color(s) => color(s),
        Selector::Nonzero => (1..r).map(color).sum(),
        Selector::Block { j, s } => {
            assert!((1..=d).contains(&j) && s < r, "block index out of range");
            blocks[s][j - 1].clone()
        }
    }
}

/// `(A_{d,1}^(0), …, A_{d,d}^(0), A_{d,1}^(r−1), …, A_{d,d}^(r−1), …, A_{d,1}^(1), …, A_{d,d}^(1))`.
pub fn block_sequence(d: usize, r: usize) -> Vec<IntPolynomial> {
    let mut blocks = block_polynomials(d, r, Method::Recurrence);
    let mut out = std::mem::take(&mut blocks[0]);
    for s in (1..r).rev() {
        out.append(&mut blocks[s]);
    }
    out
}

pub fn block_sequence_interlaces(d: usize, r: usize) -> Result<bool, SturmError> {
    interlacing_sequence(&block_sequence(d, r))
}

pub fn eulerian_gamma(d: usize, r: usize, which: GammaSelector) -> Result<GammaVector, PolyError> {
    let p = eulerian_polynomial(d, r, which.selector(), Method::Recurrence);
    gamma_vector(&p, which.center(d))
}

/// `a[k][s]`: elements with `k` descents and `s + 1` slides.
pub fn slide_descent_counts(d: usize, r: usize, which: GammaSelector) -> Vec<Vec<BigInt>> {
    let mut a = vec![vec![BigInt::zero(); d + 2]; d + 1];
    for_each_colored(d, r, PermFilter::first_color_zero(), |p| {
        if which.accepts(p.eps()[d - 1]) {
            a[p.descent_number()][p.slide_count() - 1] += 1;
        }
    });
    a
}

/// `γ_i` counted as the elements with `i` descents and `i + 1` slides.
pub fn gamma_via_slides(d: usize, r: usize, which: GammaSelector) -> GammaVector {
    let a = slide_descent_counts(d, r, which);
    let n = which.center(d);
    GammaVector::new(n, (0..=n / 2).map(|i| a[i][i].clone()).collect())
}

/// First `(k, s)` violating `a(d, k, s) = C(n − 2s, k − s)·a(d, s, s)`, where
/// `n` is the symmetry degree.
pub fn slide_lemma_violation(d: usize, r: usize, which: GammaSelector) -> Option<(usize, usize)> {
    let a = slide_descent_counts(d, r, which);
    let n = which.center(d) as i64;
    for (k, row) in a.iter().enumerate() {
        for (s, count) in row.iter().enumerate() {
            let top = n - 2 * s as i64;
            let expected = if s <= k && top >= 0 {
                binomial(BigInt::from(top), BigInt::from(k - s)) * &a[s][s]
            } else {
                BigInt::zero()
            };
            if *count != expected {
                return Some((k, s));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colored::enumerate;
    use crate::sturm::is_real_rooted;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn small_cases() {
        let e = |sel| eulerian_polynomial(2, 2, sel, Method::Bruteforce);
        assert_eq!(e(Selector::Total), p(&[1, 3]));
        assert_eq!(e(Selector::Color(0)), p(&[1, 1]));
        assert_eq!(e(Selector::Nonzero), p(&[0, 2]));
        for r in 1..4 {
            for s in 1..r {
                assert!(eulerian_polynomial(1, r, Selector::Color(s), Method::Recurrence).is_zero());
            }
        }
    }

    #[test]
    fn classical_eulerian_numbers_at_one_color() {
        assert_eq!(eulerian_polynomial(4, 1, Selector::Total, Method::Recurrence), p(&[1, 11, 11, 1]));
    }

    #[test]
    fn total_counts_the_whole_set() {
        // |A_d| = d!·r^{d−1}
        for (d, r, size) in [(3, 2, 24), (4, 3, 648), (5, 2, 1920)] {
            let a = eulerian_polynomial(d, r, Selector::Total, Method::Recurrence);
            assert_eq!(a.eval(&BigInt::from(1)), BigInt::from(size));
        }
    }

    #[test]
    fn block_polynomial_by_direct_count() {
        let d = 3;
        let direct = enumerate(d, 2, PermFilter::block(d, 2, 1));
        let mut coeffs = vec![0i64; d + 1];
        for perm in &direct {
            coeffs[perm.descent_number()] += 1;
        }
        assert_eq!(eulerian_polynomial(d, 2, Selector::Block { j: 2, s: 1 }, Method::Recurrence), p(&coeffs));
    }

    #[test]
    fn recurrence_matches_enumeration() {
        for d in 1..=5 {
            for r in 1..=3 {
                assert_eq!(
                    block_polynomials(d, r, Method::Recurrence),
                    block_polynomials(d, r, Method::Bruteforce),
                    "d={d} r={r}"
                );
            }
        }
    }

    #[test]
    fn symmetry_centers() {
        for d in 1..=5 {
            for r in 1..=3 {
                let zero = eulerian_polynomial(d, r, Selector::Color(0), Method::Recurrence);
                let nonzero = eulerian_polynomial(d, r, Selector::Nonzero, Method::Recurrence);
                assert!(zero.is_symmetric(d - 1));
                assert!(nonzero.is_symmetric(d));
            }
        }
    }

    #[test]
    fn gamma_examples() {
        assert_eq!(gamma_via_slides(2, 1, GammaSelector::Color0).gammas, ints(&[1]));
        assert_eq!(gamma_via_slides(2, 2, GammaSelector::Nonzero).gammas, ints(&[0, 2]));
        assert_eq!(eulerian_gamma(2, 2, GammaSelector::Nonzero).unwrap().gammas, ints(&[0, 2]));
    }

    #[test]
    fn gamma_by_slides_matches_decomposition() {
        for d in 1..=5 {
            for r in 1..=3 {
                for which in [GammaSelector::Color0, GammaSelector::Nonzero] {
                    let by_slides = gamma_via_slides(d, r, which);
                    assert_eq!(by_slides, eulerian_gamma(d, r, which).unwrap(), "d={d} r={r} {which:?}");
                    assert!(by_slides.is_nonnegative());
                }
            }
        }
    }

    #[test]
    fn slide_lemma_with_symmetry_degree_binomials() {
        for d in 1..=5 {
            for r in 1..=3 {
                assert_eq!(slide_lemma_violation(d, r, GammaSelector::Color0), None);
                assert_eq!(slide_lemma_violation(d, r, GammaSelector::Nonzero), None);
            }
        }
    }

    #[test]
    fn nonzero_slides_need_the_wider_binomial() {
        // C(d − 1 − 2s, k − s) would force a(3, 2, 1) = C(0, 1)·a(3, 1, 1) = 0
        let a = slide_descent_counts(3, 2, GammaSelector::Nonzero);
        assert!(!a[2][1].is_zero());
        assert_eq!(a[2][1], &a[1][1] * BigInt::from(1));
    }

    #[test]
    fn real_rooted_and_interlacing() {
        for d in 1..=4 {
            for r in 1..=3 {
                for sel in [Selector::Total, Selector::Color(0), Selector::Nonzero] {
                    assert!(is_real_rooted(&eulerian_polynomial(d, r, sel, Method::Recurrence)));
                }
                assert!(block_sequence_interlaces(d, r).unwrap(), "d={d} r={r}");
            }
        }
        assert_eq!(block_sequence(2, 2), vec![p(&[1]), p(&[0, 1]), p(&[0, 1]), p(&[0, 1])]);
    }

    proptest! {
        #[test]
        fn colors_partition_the_total(d in 1usize..6, r in 1usize..4) {
            let total = eulerian_polynomial(d, r, Selector::Total, Method::Recurrence);
            let zero = eulerian_polynomial(d, r, Selector::Color(0), Method::Recurrence);
            let rest = eulerian_polynomial(d, r, Selector::Nonzero, Method::Recurrence);
            prop_assert_eq!(total, &zero + &rest);
        }
    }
}
