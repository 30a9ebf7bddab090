//! Closed rational intervals, used to enclose polynomial ranges over grid blocks.

use num_traits::Zero;

use crate::poly::Polynomial;
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    pub lo: Rational,
    pub hi: Rational,
}

impl Interval {
    pub fn new(lo: Rational, hi: Rational) -> Self {
        debug_assert!(lo <= hi);
        Interval { lo, hi }
    }

    pub fn point(x: Rational) -> Self {
        Interval { lo: x.clone(), hi: x }
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn add_scalar(&self, c: &Rational) -> Self {
        Interval { lo: &self.lo + c, hi: &self.hi + c }
    }

    pub fn mul(&self, other: &Interval) -> Self {
        let products = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let lo = products.iter().min().cloned().unwrap_or_else(Rational::zero);
        let hi = products.iter().max().cloned().unwrap_or_else(Rational::zero);
        Interval { lo, hi }
    }

    /// True when every point of the interval has magnitude at least `gamma`.
    pub fn clear_of(&self, gamma: &Rational) -> bool {
        &self.lo >= gamma || self.hi <= -gamma
    }
}

/// Interval Horner enclosure of `p` over `x`.
///
/// Evaluated in the shifted basis around the midpoint, `p(m + t)` for `t ∈ [-w, w]`, which keeps
/// the overestimate proportional to the width.
pub fn enclose(p: &Polynomial, x: &Interval) -> Interval {
    let mid = (&x.lo + &x.hi) / Rational::from_integer(2.into());
    let half = &x.hi - &mid;
    let t = Interval { lo: -half.clone(), hi: half };
    let shifted = taylor_shift(p, &mid);
    let mut acc = Interval::point(Rational::zero());
    for c in shifted.iter().rev() {
        acc = acc.mul(&t).add_scalar(c);
    }
    acc
}

/// Coefficients of `p(x + a)` in powers of `x`.
pub fn taylor_shift(p: &Polynomial, a: &Rational) -> Vec<Rational> {
    let mut c = p.coeffs().to_vec();
    let n = c.len();
    for i in 0..n {
        for j in (i..n - 1).rev() {
            let t = &c[j + 1] * a;
            c[j] += t;
        }
    }
    c
}
