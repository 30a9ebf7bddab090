//! Enumeration of dyadic approximations to every real root of a polynomial.
//!
//! The search interval `[-B, B]` is cut into a uniform dyadic grid of spacing `2^-r`, where
//! `B = 2^⌈log₂ β⌉` rounds the Cauchy bound up to a power of two. A cell `[z, z + 2^-r]` fires when
//! the conservative sign-change bounds of the Sturm chain at its endpoints differ,
//! `max_sign_change(θ(z)) - min_sign_change(θ(z + 2^-r)) ≥ 1`, and then contributes its midpoint.
//!
//! Rather than visiting all `2^(r+1) B` cells, the scan walks aligned dyadic blocks. When an interval
//! enclosure shows that every chain polynomial stays outside `(-γ, γ)` over a whole block, all grid
//! points in it share one unambiguous sign vector, so no cell inside can fire. The output is the same
//! list a cell-by-cell scan produces.

use num_traits::Signed;

use crate::approx_sign::{max_sign_change, min_sign_change, Threshold};
use crate::interval::{enclose, Interval};
use crate::poly::Polynomial;
use crate::rational::{ceil_log2, pow2, Rational};
use crate::sturm::{cauchy_bound, SturmChain};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrecisionParams {
    /// Roots are located to within `2^-r`.
    pub r: u32,
    pub gamma: Threshold,
}

impl PrecisionParams {
    pub fn new(r: u32, gamma: Rational) -> Result<Self> {
        if r == 0 {
            return Err(Error::PreconditionViolated("precision r must be at least 1".into()));
        }
        Ok(PrecisionParams { r, gamma: Threshold::new(gamma)? })
    }
}

/// Grid geometry of one enumeration run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridInfo {
    /// Cauchy bound β of the input.
    pub cauchy_bound: Rational,
    /// Power-of-two half-width `B ≥ β` of the scanned interval.
    pub grid_bound: Rational,
    /// `r + 1 + ⌈log₂ β⌉`; the grid has `2^r'` cells.
    pub refined_precision: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootCandidateList {
    /// Strictly increasing dyadic rationals.
    pub candidates: Vec<Rational>,
    /// Grid spacing, `2^-r`.
    pub interval_width: Rational,
    /// `6d²`.
    pub length_bound: usize,
    pub degree: usize,
    /// `None` when there was nothing to scan (a constant difference in [`intersect`]).
    pub grid: Option<GridInfo>,
}

impl RootCandidateList {
    pub fn len(&self) -> usize {
        self.candidates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.candidates.is_empty()
    }

    /// Whether some candidate lies within `tol` of `x`.
    pub fn covers(&self, x: &Rational, tol: &Rational) -> bool {
        // Candidates are sorted, so only the neighbours of the insertion point matter.
        let i = self.candidates.partition_point(|c| c < x);
        [i.checked_sub(1), Some(i)]
            .into_iter()
            .flatten()
            .filter_map(|j| self.candidates.get(j))
            .any(|c| (c - x).abs() <= *tol)
    }
}

pub fn length_bound(degree: usize) -> usize {
    6 * degree * degree
}

/// Enumerates candidates for every real root of `c`; see the module docs.
pub fn root_enum(c: &Polynomial, params: &PrecisionParams) -> Result<RootCandidateList> {
    let degree = c.degree_at_least(1)?;
    let beta = cauchy_bound(c)?;
    let log_beta = ceil_log2(&beta);
    let grid_bound = pow2(log_beta);
    let spacing = pow2(-i64::from(params.r));
    let refined_precision = i64::from(params.r) + 1 + log_beta;

    let chain = SturmChain::new(c)?;
    let scan = Scan { chain: &chain, gamma: &params.gamma, spacing: &spacing };
    let mut candidates = Vec::new();
    let all: Vec<usize> = (0..chain.len()).collect();
    scan.block(-grid_bound.clone(), refined_precision, &all, &mut candidates);

    Ok(RootCandidateList {
        candidates,
        interval_width: spacing,
        length_bound: length_bound(degree),
        degree,
        grid: Some(GridInfo { cauchy_bound: beta, grid_bound, refined_precision }),
    })
}

/// Entry point for approximate coefficient vectors `(c_0, …, c_d)`.
///
/// The degree is the declared length of the vector; a leading entry with `|c_d| ≤ 2γ` cannot be
/// told apart from zero and is rejected.
pub fn root_enum_coeffs(coeffs: &[Rational], params: &PrecisionParams) -> Result<RootCandidateList> {
    let lead = coeffs.last().ok_or(Error::DegreeTooLow { required: 1 })?;
    if coeffs.len() < 2 {
        return Err(Error::DegreeTooLow { required: 1 });
    }
    if lead.abs() <= params.gamma.gamma() * Rational::from_integer(2.into()) {
        return Err(Error::DegreeUnresolved { leading: lead.to_string() });
    }
    root_enum(&Polynomial::new(coeffs.to_vec()), params)
}

/// Candidates for the intersection points of the graphs of `a` and `b`, i.e. roots of `a - b`.
///
/// A nonzero constant difference has no intersections and yields an empty list.
pub fn intersect(a: &Polynomial, b: &Polynomial, params: &PrecisionParams) -> Result<RootCandidateList> {
    let diff = a - b;
    match diff.degree() {
        None => Err(Error::IdenticalPolynomials),
        Some(0) => Ok(RootCandidateList {
            candidates: Vec::new(),
            interval_width: pow2(-i64::from(params.r)),
            length_bound: 0,
            degree: 0,
            grid: None,
        }),
        Some(_) => root_enum(&diff, params),
    }
}

struct Scan<'a> {
    chain: &'a SturmChain,
    gamma: &'a Threshold,
    spacing: &'a Rational,
}

impl Scan<'_> {
    /// Scans the block of `2^log_cells` cells starting at `start`, appending fired midpoints in order.
    fn block(&self, start: Rational, log_cells: i64, uncertain: &[usize], out: &mut Vec<Rational>) {
        let width = self.spacing * pow2(log_cells);
        let end = &start + &width;
        let hull = Interval::new(start.clone(), end.clone());
        let polys = self.chain.polys();
        let still: Vec<usize> = uncertain
            .iter()
            .copied()
            .filter(|&i| !enclose(&polys[i], &hull).clear_of(self.gamma.gamma()))
            .collect();
        if still.is_empty() {
            return;
        }
        if log_cells == 0 {
            let left = max_sign_change(&self.chain.eval(&start), self.gamma);
            let right = min_sign_change(&self.chain.eval(&end), self.gamma);
            if left > right {
                let half = self.spacing / Rational::from_integer(2.into());
                out.push(start + half);
            }
            return;
        }
        let mid = &start + &width / Rational::from_integer(2.into());
        self.block(start, log_cells - 1, &still, out);
        self.block(mid, log_cells - 1, &still, out);
    }
}

/// Reference scan that visits every cell; exponential in `r`, only for cross-checking.
pub fn root_enum_exhaustive(c: &Polynomial, params: &PrecisionParams) -> Result<Vec<Rational>> {
    c.degree_at_least(1)?;
    let beta = cauchy_bound(c)?;
    let grid_bound = pow2(ceil_log2(&beta));
    let spacing = pow2(-i64::from(params.r));
    let half = &spacing / Rational::from_integer(2.into());
    let chain = SturmChain::new(c)?;
    let mut out = Vec::new();
    let mut z = -grid_bound.clone();
    let mut left = max_sign_change(&chain.eval(&z), &params.gamma);
    while z < grid_bound {
        let next = &z + &spacing;
        let theta = chain.eval(&next);
        if left > min_sign_change(&theta, &params.gamma) {
            out.push(&z + &half);
        }
        left = max_sign_change(&theta, &params.gamma);
        z = next;
    }
    Ok(out)
}
