//! Exact real root counting and isolation with Sturm sequences.
//!
//! Everything runs over `BigRational`; roots are located in disjoint
//! half-open intervals `(lo, hi]` and never approximated in floating point.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::poly::IntPolynomial;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SturmError {
    #[error("polynomial #{index} ({poly}) is not real-rooted")]
    NotRealRooted { index: usize, poly: String },
}

/// Rational coefficients, lowest degree first, trimmed.
#[derive(Clone, Debug, PartialEq, Eq)]
struct RatPoly(Vec<BigRational>);

impl RatPoly {
    fn from_int(p: &IntPolynomial) -> Self {
        Self(p.coeffs().iter().map(|c| BigRational::from_integer(c.clone())).collect())
    }

    fn trimmed(mut c: Vec<BigRational>) -> Self {
        while c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        Self(c)
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    fn lead(&self) -> &BigRational {
        self.0.last().expect("nonzero polynomial")
    }

    fn derivative(&self) -> Self {
        Self::trimmed(
            self.0.iter().enumerate().skip(1).map(|(i, c)| c * BigRational::from_integer(BigInt::from(i))).collect(),
        )
    }

    fn eval(&self, x: &BigRational) -> BigRational {
        self.0.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    fn div_rem(&self, other: &Self) -> (Self, Self) {
        let mut rem = self.0.clone();
        let d = other.degree();
        if other.is_zero() {
            panic!("division by the zero polynomial");
        }
        if self.is_zero() || self.degree() < d {
            return (Self(Vec::new()), self.clone());
        }
        let mut quot = vec![BigRational::zero(); self.degree() - d + 1];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + d] / other.lead();
            for (i, b) in other.0.iter().enumerate() {
                rem[k + i] -= &c * b;
            }
            quot[k] = c;
        }
        rem.truncate(d);
        (Self::trimmed(quot), Self::trimmed(rem))
    }

    fn monic(&self) -> Self {
        let l = self.lead().clone();
        Self(self.0.iter().map(|c| c / &l).collect())
    }

    fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.monic()
        }
    }

    /// `p / gcd(p, p')`, which has the same roots, all simple.
    fn square_free(&self) -> Self {
        let g = self.gcd(&self.derivative());
        if g.degree() == 0 {
            self.monic()
        } else {
            self.div_rem(&g).0.monic()
        }
    }
}

struct Sturm {
    seq: Vec<RatPoly>,
}

impl Sturm {
    fn new(p: &RatPoly) -> Self {
        let mut seq = vec![p.clone(), p.derivative()];
        while !seq.last().unwrap().is_zero() {
            let n = seq.len();
            let r = seq[n - 2].div_rem(&seq[n - 1]).1;
            seq.push(Self::negate(r));
        }
        seq.pop();
        Self { seq }
    }

    fn negate(p: RatPoly) -> RatPoly {
        RatPoly(p.0.into_iter().map(|c| -c).collect())
    }

    fn changes(signs: impl Iterator<Item = i8>) -> usize {
        let nonzero: Vec<i8> = signs.filter(|&s| s != 0).collect();
        nonzero.windows(2).filter(|w| w[0] != w[1]).count()
    }

    fn at(&self, x: &BigRational) -> usize {
        Self::changes(self.seq.iter().map(|p| sign(&p.eval(x))))
    }

    fn at_infinity(&self, positive: bool) -> usize {
        Self::changes(self.seq.iter().map(|p| {
            let s = sign(p.lead());
            if positive || p.degree() % 2 == 0 {
                s
            } else {
                -s
            }
        }))
    }

    /// Distinct roots in `(a, b]`.
    fn count(&self, a: &BigRational, b: &BigRational) -> usize {
        self.at(a) - self.at(b)
    }

    fn count_all(&self) -> usize {
        self.at_infinity(false) - self.at_infinity(true)
    }
}

fn sign(x: &BigRational) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

/// Number of distinct real roots.
pub fn count_real_roots(p: &IntPolynomial) -> usize {
    if p.degree().unwrap_or(0) == 0 {
        return 0;
    }
    Sturm::new(&RatPoly::from_int(p).square_free()).count_all()
}

/// Every root is real. Constants and the zero polynomial count as
/// real-rooted.
pub fn is_real_rooted(p: &IntPolynomial) -> bool {
    if p.degree().unwrap_or(0) == 0 {
        return true;
    }
    let q = RatPoly::from_int(p).square_free();
    Sturm::new(&q).count_all() == q.degree()
}

/// A real root isolated in `(lo, hi]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootInterval {
    pub lo: BigRational,
    pub hi: BigRational,
    pub multiplicity: usize,
}

/// Real roots in increasing order, in pairwise disjoint intervals.
pub fn isolate_real_roots(p: &IntPolynomial) -> Vec<RootInterval> {
    if p.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let p = RatPoly::from_int(p);
    let q = p.square_free();
    let intervals = isolate(&q);
    // x has multiplicity > k in p iff it is a root of the k-th iterated gcd
    let mut layers = Vec::new();
    let mut g = p.gcd(&p.derivative());
    while g.degree() > 0 {
        layers.push(Sturm::new(&g.square_free()));
        g = g.gcd(&g.derivative());
    }
    intervals
        .into_iter()
        .map(|(lo, hi)| {
            let multiplicity = 1 + layers.iter().take_while(|s| s.count(&lo, &hi) == 1).count();
            RootInterval { lo, hi, multiplicity }
        })
        .collect()
}

fn isolate(q: &RatPoly) -> Vec<(BigRational, BigRational)> {
    let sturm = Sturm::new(q);
    // strictly beyond the Cauchy bound
    let bound = BigRational::one()
        + BigRational::one()
        + q.0[..q.degree()].iter().map(|c| (c / q.lead()).abs()).fold(BigRational::zero(), |a, b| a.max(b));
    let mut out = Vec::new();
    let mut stack = vec![(-bound.clone(), bound)];
    while let Some((a, b)) = stack.pop() {
        match sturm.count(&a, &b) {
            0 => {}
            1 => out.push((a, b)),
            _ => {
                let mid = (&a + &b) / BigRational::from_integer(BigInt::from(2));
                stack.push((mid.clone(), b));
                stack.push((a, mid));
            }
        }
    }
    out.sort_by(|x, y| x.0.cmp(&y.0));
    out
}

/// Root multiplicities of `p` and `q` at each point where either vanishes,
/// in increasing order.
fn merged_roots(p: &IntPolynomial, q: &IntPolynomial) -> Vec<(usize, usize)> {
    let product = p * q;
    let multiplicity_in = |f: &IntPolynomial, iv: &RootInterval| -> usize {
        if f.degree().unwrap_or(0) == 0 {
            return 0;
        }
        let rf = RatPoly::from_int(f);
        let mut k = 0;
        let mut g = rf.clone();
        while g.degree() > 0 && Sturm::new(&g.square_free()).count(&iv.lo, &iv.hi) == 1 {
            k += 1;
            g = g.gcd(&g.derivative());
        }
        k
    };
    isolate_real_roots(&product)
        .iter()
        .map(|iv| (multiplicity_in(p, iv), multiplicity_in(q, iv)))
        .collect()
}

/// Whether the roots of two real-rooted polynomials weakly alternate.
///
/// Roots are merged in increasing order; tied roots may be listed in any
/// order, and the merged word must alternate between `p` and `q`. The zero
/// polynomial interlaces everything.
pub fn interlaces(p: &IntPolynomial, q: &IntPolynomial) -> Result<bool, SturmError> {
    for (index, f) in [p, q].into_iter().enumerate() {
        if !is_real_rooted(f) {
            return Err(SturmError::NotRealRooted { index, poly: f.to_string() });
        }
    }
    if p.is_zero() || q.is_zero() {
        return Ok(true);
    }
    // reachable states after each group: the last letter placed
    let (mut ends_p, mut ends_q, mut empty) = (false, false, true);
    for (a, b) in merged_roots(p, q) {
        if a.abs_diff(b) > 1 {
            return Ok(false);
        }
        let can_start_p = empty || ends_q;
        let can_start_q = empty || ends_p;
        let (next_p, next_q) = match a.cmp(&b) {
            std::cmp::Ordering::Greater => (can_start_p, false),
            std::cmp::Ordering::Less => (false, can_start_q),
            std::cmp::Ordering::Equal => (can_start_q, can_start_p),
        };
        if !next_p && !next_q {
            return Ok(false);
        }
        (ends_p, ends_q, empty) = (next_p, next_q, false);
    }
    Ok(true)
}

/// Every pair `(p_i, p_j)` with `i < j` interlaces.
pub fn interlacing_sequence(ps: &[IntPolynomial]) -> Result<bool, SturmError> {
    for (index, p) in ps.iter().enumerate() {
        if !is_real_rooted(p) {
            return Err(SturmError::NotRealRooted { index, poly: p.to_string() });
        }
    }
    for i in 0..ps.len() {
        for j in i + 1..ps.len() {
            if !interlaces(&ps[i], &ps[j])? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
