//! Rational helpers shared across modules.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact arbitrary-precision fraction, always stored in lowest terms with a positive denominator.
pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `num/den`; panics if `den == 0`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// `2^e` for any signed exponent.
pub fn pow2(e: i64) -> Rational {
    let p = BigInt::one() << e.unsigned_abs();
    if e >= 0 {
        Rational::from_integer(p)
    } else {
        Rational::new(BigInt::one(), p)
    }
}

/// Smallest `k` with `2^k >= x`, for `x > 0`.
pub fn ceil_log2(x: &Rational) -> i64 {
    assert!(x.is_positive(), "ceil_log2 of a non-positive value");
    // bits(n) - bits(d) is within one of log2(n/d).
    let n_bits = x.numer().bits() as i64;
    let d_bits = x.denom().bits() as i64;
    let mut k = n_bits - d_bits;
    while pow2(k) < *x {
        k += 1;
    }
    while pow2(k - 1) >= *x {
        k -= 1;
    }
    k
}

/// Parses `"n"`, `"n/d"` or `"-n/d"`, rejecting zero denominators.
pub fn parse(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Rational::new(n, d))
            }
        }
        None => s.parse::<BigInt>().ok().map(Rational::from_integer),
    }
}

/// Canonical `"num/den"` rendering (`den > 0`, reduced).
pub fn to_fraction_string(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// If `q = m / 2^k` in lowest terms, returns `(m, k)`.
pub fn as_dyadic(q: &Rational) -> Option<(BigInt, u64)> {
    let d = q.denom();
    let k = d.trailing_zeros().unwrap_or(0);
    if (BigInt::one() << k) == *d {
        Some((q.numer().clone(), k))
    } else {
        None
    }
}

pub fn max_abs<'a>(values: impl IntoIterator<Item = &'a Rational>) -> Rational {
    values
        .into_iter()
        .map(|v| v.abs())
        .max()
        .unwrap_or_else(Rational::zero)
}

/// `x^k` for non-negative `k` (`x^0 = 1`).
pub fn powu(x: &Rational, k: usize) -> Rational {
    num_traits::pow(x.clone(), k)
}
