//! Quantitative error bounds for computing with `2^-r`-approximations.
//!
//! Everything here returns exact rationals. The bounds are used in two ways: as acceptance
//! tolerances (the evaluation predicate) and as thresholds fed to root enumeration.

use num_traits::{One, Signed, Zero};

use crate::approx_sign::Threshold;
use crate::poly::Polynomial;
use crate::rational::{int, max_abs, pow2, powu, Rational};
use crate::{Error, Result};

/// Precision exponent `r` and degree `d` shared by the bounds below.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ApproxContext {
    pub r: u32,
    pub d: usize,
}

impl ApproxContext {
    pub fn new(r: u32, d: usize) -> Result<Self> {
        if r == 0 || d == 0 {
            return Err(Error::PreconditionViolated("r and d must both be at least 1".into()));
        }
        Ok(ApproxContext { r, d })
    }

    /// `2^r > d(1 + max{|x|, |x|^2d})`, the precision at which a snapped coefficient vector is
    /// guaranteed to stay inside the unit ball around the original.
    pub fn snap_within_unit_ball(&self, x: &Rational) -> bool {
        pow2(i64::from(self.r)) > int(self.d as i64) * (Rational::one() + max_x_pow(x, 2 * self.d))
    }
}

/// `max{|x|, |x|^k}`.
fn max_x_pow(x: &Rational, k: usize) -> Rational {
    let ax = x.abs();
    let p = powu(&ax, k);
    if p > ax {
        p
    } else {
        ax
    }
}

/// Bound on `|a^k - b^k|` when `|a - b| < 2^-r`: `2^-r · k · max{|a|, |a|^k, |b|, |b|^k}`.
///
/// For `k = 1` the max term is taken together with `1`, since `|a - b|` itself can exceed
/// `2^-r · max{|a|, |b|}` when both are small.
pub fn power_diff_bound(a: &Rational, b: &Rational, k: u32, r: u32) -> Result<Rational> {
    if k == 0 {
        return Err(Error::PreconditionViolated("k must be at least 1".into()));
    }
    let eps = pow2(-i64::from(r));
    if (a - b).abs() >= eps {
        return Err(Error::PreconditionViolated("|a - b| must be below 2^-r".into()));
    }
    let k_us = k as usize;
    let mut m = max_x_pow(a, k_us).max(max_x_pow(b, k_us));
    if k == 1 && m < Rational::one() {
        m = Rational::one();
    }
    Ok(eps * int(i64::from(k)) * m)
}

/// Tolerance `T = (d+1) 2^-r (t + d·t·max|ã_i|)` with `t = max{1, u, u^d}`, `u = |x̃| + 2^-r`.
///
/// For any true coefficients `a`, point `x` within `2^-r` of `coeffs` and `x̃`,
/// `|P_a(x) - P_ã(x̃)| < T`.
pub fn eval_tolerance(coeffs: &Polynomial, x_approx: &Rational, r: u32) -> Result<Rational> {
    let d = coeffs.degree_at_least(1)?;
    let eps = pow2(-i64::from(r));
    let u = x_approx.abs() + &eps;
    let t = max_x_pow(&u, d).max(Rational::one());
    let dr = int(d as i64);
    let max_coeff = max_abs(coeffs.coeffs());
    Ok((&dr + Rational::one()) * eps * (&t + dr * &t * max_coeff))
}

/// Accepts `(x̃, ỹ)` as a `2^-r`-approximation of a point on the graph of a polynomial whose
/// coefficients are within `2^-r` of `coeffs`: `|ỹ - P̃(x̃)| < T + 2^-r`.
pub fn intersection_predicate(coeffs: &Polynomial, x_approx: &Rational, y_approx: &Rational, r: u32) -> Result<bool> {
    let tol = eval_tolerance(coeffs, x_approx, r)? + pow2(-i64::from(r));
    Ok((y_approx - coeffs.eval(x_approx)).abs() < tol)
}

/// Coefficients `b` with `b_i = ã_i` for `i ≥ 1` and `b_0` chosen so that `P_b(x) = P_a(x)`.
pub fn snap_polynomial(a: &Polynomial, approx: &Polynomial, x: &Rational) -> Result<Polynomial> {
    let d = a.degree_at_least(1)?;
    let da = approx.degree().unwrap_or(0);
    if da != d {
        return Err(Error::DegreeMismatch { left: d, right: da });
    }
    let tail = approx.eval(x) - &approx.coeffs()[0];
    let mut b = approx.coeffs().to_vec();
    b[0] = a.eval(x) - tail;
    Ok(Polynomial::new(b))
}

/// `W = d² 2^-2r (1 + max{|x|, |x|^2d})`, bounding `‖a - snap(a, ã, x)‖²`.
pub fn perturbation_bound(x: &Rational, ctx: &ApproxContext) -> Rational {
    let d = int(ctx.d as i64);
    &d * &d * pow2(-2 * i64::from(ctx.r)) * (Rational::one() + max_x_pow(x, 2 * ctx.d))
}

/// Squared Euclidean distance between coefficient vectors.
pub fn coeff_distance_sq(a: &Polynomial, b: &Polynomial) -> Rational {
    let n = a.coeffs().len().max(b.coeffs().len());
    let zero = Rational::zero();
    (0..n)
        .map(|i| {
            let diff = a.coeffs().get(i).unwrap_or(&zero) - b.coeffs().get(i).unwrap_or(&zero);
            &diff * &diff
        })
        .sum()
}

/// `Σ_{i≥1} i·|c_i|`, a Lipschitz constant for `p` on `[0, 1]`.
pub fn lipschitz_constant(p: &Polynomial) -> Rational {
    p.coeffs()
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c.abs() * int(i as i64))
        .sum()
}

/// `γ = min{1, Δmin/2} · c_q · 2^-dr`.
///
/// `separation` must be a lower bound on the distance between distinct real roots of `p`, and
/// `rootless_floor` a lower bound on `|q|` for the factor `q` of `p` with no real roots (leading
/// coefficient included). It defaults to `|lc(p)|`, which is exact when every root of `p` is real.
/// Then every `y` farther than `2^-r` from all real roots has `|p(y)| > γ`.
pub fn small_value_threshold(
    p: &Polynomial,
    separation: &Rational,
    ctx: &ApproxContext,
    rootless_floor: Option<&Rational>,
) -> Result<Threshold> {
    if !separation.is_positive() {
        return Err(Error::PreconditionViolated("root separation must be positive".into()));
    }
    let half = separation / int(2);
    if pow2(-i64::from(ctx.r)) >= half {
        return Err(Error::SeparationTooSmall);
    }
    let floor = match rootless_floor {
        Some(c) => c.clone(),
        None => p.leading().abs(),
    };
    let clamp = if half < Rational::one() { half } else { Rational::one() };
    let exp = i64::try_from(ctx.d)
        .ok()
        .and_then(|d| d.checked_mul(i64::from(ctx.r)))
        .ok_or_else(|| Error::PreconditionViolated("d·r overflows".into()))?;
    Threshold::new(clamp * floor * pow2(-exp))
}
