//! Planted-root instance generators and brute-force oracles.
//!
//! The oracles here are deliberately naive (exponential enumeration, plain bisection) and share no
//! code with the algorithms they check beyond polynomial evaluation.

use num_traits::{One, Signed, Zero};
use rand::Rng;

use crate::poly::Polynomial;
use crate::rational::{int, pow2, ratio, Rational};
use crate::sturm::EvaluationVector;
use crate::approx_sign::Threshold;
use crate::{Error, Result};

/// Longest vector [`sign_extremes`] will enumerate.
pub const MAX_ORACLE_LEN: usize = 20;

/// Ground truth for a polynomial `lc · Π (x - ρ_i)^{m_i} · Π (x² + p_j x + q_j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlantedSpec {
    /// Distinct real roots with multiplicities.
    pub real_roots: Vec<(Rational, u32)>,
    /// `(p, q)` with `p² - 4q < 0`.
    pub quadratics: Vec<(Rational, Rational)>,
    pub leading: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Planted {
    pub poly: Polynomial,
    /// Sorted distinct real roots.
    pub roots: Vec<Rational>,
    /// Minimum distance between distinct real roots; `None` with fewer than two.
    pub separation: Option<Rational>,
    /// Lower bound on `|lc · Π quadratics|` over the reals.
    pub rootless_floor: Rational,
}

impl PlantedSpec {
    pub fn degree(&self) -> usize {
        self.real_roots.iter().map(|&(_, m)| m as usize).sum::<usize>() + 2 * self.quadratics.len()
    }
}

/// Expands a planted specification.
pub fn plant(spec: &PlantedSpec, max_degree: usize) -> Result<Planted> {
    if spec.leading.is_zero() {
        return Err(Error::PreconditionViolated("leading coefficient must be nonzero".into()));
    }
    let degree = spec.degree();
    if degree > max_degree {
        return Err(Error::DegreeOverflow { degree, max: max_degree });
    }
    let mut roots: Vec<Rational> = spec.real_roots.iter().map(|(r, _)| r.clone()).collect();
    roots.sort();
    if roots.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::PreconditionViolated("planted roots must be distinct".into()));
    }
    if spec.real_roots.iter().any(|&(_, m)| m == 0) {
        return Err(Error::PreconditionViolated("multiplicities must be at least 1".into()));
    }
    let mut poly = Polynomial::constant(spec.leading.clone());
    for (root, mult) in &spec.real_roots {
        let factor = Polynomial::linear_factor(root);
        for _ in 0..*mult {
            poly = &poly * &factor;
        }
    }
    let mut floor = spec.leading.abs();
    for (p, q) in &spec.quadratics {
        if p * p - int(4) * q >= Rational::zero() {
            return Err(Error::PreconditionViolated("quadratic factor has real roots".into()));
        }
        poly = &poly * &Polynomial::new(vec![q.clone(), p.clone(), Rational::one()]);
        // Minimum of x² + px + q.
        floor *= q - p * p / int(4);
    }
    let separation = roots.windows(2).map(|w| &w[1] - &w[0]).min();
    Ok(Planted { poly, roots, separation, rootless_floor: floor })
}

/// Shape of randomly generated planted polynomials.
#[derive(Clone, Debug)]
pub struct PlantConfig {
    pub max_degree: usize,
    /// Roots lie in the open interval `(-root_range, root_range)`.
    pub root_range: i64,
    pub max_multiplicity: u32,
    pub max_denominator: i64,
    pub allow_quadratics: bool,
}

impl Default for PlantConfig {
    fn default() -> Self {
        PlantConfig { max_degree: 6, root_range: 10, max_multiplicity: 3, max_denominator: 8, allow_quadratics: true }
    }
}

impl PlantConfig {
    pub fn square_free(max_degree: usize) -> Self {
        PlantConfig { max_degree, max_multiplicity: 1, ..Default::default() }
    }
}

fn random_rational(rng: &mut impl Rng, range: i64, max_den: i64) -> Rational {
    let den = rng.gen_range(1..=max_den);
    // Open interval: |num| < range · den.
    let num = rng.gen_range(-(range * den - 1)..=(range * den - 1));
    ratio(num, den)
}

/// Random planted specification with degree in `1..=cfg.max_degree`.
pub fn random_spec(rng: &mut impl Rng, cfg: &PlantConfig) -> PlantedSpec {
    let target = rng.gen_range(1..=cfg.max_degree);
    let mut remaining = target;
    let mut quadratics = Vec::new();
    if cfg.allow_quadratics && remaining >= 2 && rng.gen_bool(0.3) {
        let p = random_rational(rng, 5, 4);
        let floor = ratio(rng.gen_range(1..=20), rng.gen_range(1..=4));
        let q = &p * &p / int(4) + floor;
        quadratics.push((p, q));
        remaining -= 2;
    }
    let mut real_roots: Vec<(Rational, u32)> = Vec::new();
    while remaining > 0 {
        let root = random_rational(rng, cfg.root_range, cfg.max_denominator);
        if real_roots.iter().any(|(r, _)| *r == root) {
            continue;
        }
        let cap = cfg.max_multiplicity.min(remaining as u32);
        let mult = rng.gen_range(1..=cap);
        remaining -= mult as usize;
        real_roots.push((root, mult));
    }
    let mut leading = ratio(rng.gen_range(1..=5), rng.gen_range(1..=3));
    if rng.gen_bool(0.5) {
        leading = -leading;
    }
    PlantedSpec { real_roots, quadratics, leading }
}

pub fn random_planted(rng: &mut impl Rng, cfg: &PlantConfig) -> Planted {
    let spec = random_spec(rng, cfg);
    plant(&spec, cfg.max_degree).expect("generated specs are valid")
}

fn changes(signs: &[bool]) -> usize {
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Exact minimum and maximum sign-change counts over every real vector within γ of `θ`,
/// by trying both signs for each entry with `|θ_i| < γ`.
pub fn sign_extremes(theta: &EvaluationVector, gamma: &Threshold) -> Result<(usize, usize)> {
    let n = theta.values.len();
    if n > MAX_ORACLE_LEN {
        return Err(Error::TooLong { len: n, max: MAX_ORACLE_LEN });
    }
    let free: Vec<usize> = (0..n).filter(|&i| theta.values[i].abs() < *gamma.gamma()).collect();
    let mut signs: Vec<bool> = theta.values.iter().map(|v| v.is_negative()).collect();
    let mut lo = usize::MAX;
    let mut hi = 0;
    for mask in 0u32..(1u32 << free.len()) {
        for (bit, &i) in free.iter().enumerate() {
            signs[i] = mask >> bit & 1 == 1;
        }
        let c = changes(&signs);
        lo = lo.min(c);
        hi = hi.max(c);
    }
    if n == 0 {
        lo = 0;
    }
    Ok((lo, hi))
}

/// Bisection to a point `q` such that `p` changes sign inside `[q - 2^-r, q + 2^-r]`.
pub fn bisect_root(p: &Polynomial, lo: &Rational, hi: &Rational, r: u32) -> Result<Rational> {
    let (mut lo, mut hi) = if lo <= hi { (lo.clone(), hi.clone()) } else { (hi.clone(), lo.clone()) };
    let mut f_lo = p.eval(&lo);
    let f_hi = p.eval(&hi);
    if (&f_lo * &f_hi) >= Rational::zero() {
        return Err(Error::NoSignChange);
    }
    let eps = pow2(-i64::from(r));
    let two = int(2);
    loop {
        let mid = (&lo + &hi) / &two;
        if (&hi - &lo) / &two <= eps {
            return Ok(mid);
        }
        let f_mid = p.eval(&mid);
        if f_mid.is_zero() {
            return Ok(mid);
        }
        if f_mid.is_negative() == f_lo.is_negative() {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
}
