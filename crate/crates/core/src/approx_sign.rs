//! Conservative sign-change counting for values only trusted to within a threshold γ.
//!
//! An entry with `|θ_i| < γ` may stand for a true value of either sign (or zero); every other
//! entry has a certain sign. [`max_sign_change`] and [`min_sign_change`] bracket the number of
//! sign changes (zeros deleted) over every real vector within γ of `θ` componentwise.
//!
//! The bounds are computed run by run. Certain entries anchor the sequence; a maximal run of `k`
//! ambiguous entries between two anchors spans `k + 1` edges and can realise any change count with
//! the parity fixed by the anchors, from `[anchors differ]` up to `k + 1` or `k`. A run at either end
//! has one anchor and can contribute anywhere from 0 to `k` changes.
//!
//! The classical per-entry rules (count changes by the strict product test, then adjust by one at
//! an ambiguous end and by two at an ambiguous interior entry with same-signed neighbours) are kept
//! as [`max_sign_change_rules`] and [`min_sign_change_rules`]. They agree with the run bounds on
//! isolated ambiguous entries with nonzero neighbours, but they miss changes inside runs of adjacent
//! ambiguous entries, so enumeration uses the run bounds.

use std::cmp::Ordering;

use num_traits::{Signed, Zero};

use crate::rational::Rational;
use crate::sturm::EvaluationVector;
use crate::{Error, Result};

/// Positive magnitude below which a value's sign is treated as unknown.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Threshold(Rational);

impl Threshold {
    pub fn new(gamma: Rational) -> Result<Self> {
        if gamma.is_positive() {
            Ok(Threshold(gamma))
        } else {
            Err(Error::ThresholdNonPositive)
        }
    }

    pub fn gamma(&self) -> &Rational {
        &self.0
    }

    pub fn into_inner(self) -> Rational {
        self.0
    }

    pub fn is_ambiguous(&self, v: &Rational) -> bool {
        v.abs() < self.0
    }
}

fn sgn(v: &Rational) -> i8 {
    match v.cmp(&Rational::zero()) {
        Ordering::Less => -1,
        Ordering::Equal => 0,
        Ordering::Greater => 1,
    }
}

fn base_count(values: &[Rational]) -> i64 {
    values.windows(2).filter(|w| sgn(&w[0]) * sgn(&w[1]) < 0).count() as i64
}

/// The per-entry adjustment: `+1` at an ambiguous end, `+2` at an ambiguous interior entry with
/// same-signed neighbours. Returned as a non-negative amount to add (max) or subtract (min).
fn rule_adjustment(values: &[Rational], gamma: &Threshold) -> i64 {
    let n = values.len() - 1;
    let mut s = 0;
    if gamma.is_ambiguous(&values[0]) {
        s += 1;
    }
    for i in 1..n {
        if gamma.is_ambiguous(&values[i]) && sgn(&values[i - 1]) * sgn(&values[i + 1]) > 0 {
            s += 2;
        }
    }
    if gamma.is_ambiguous(&values[n]) {
        s += 1;
    }
    s
}

/// `(min, max)` sign changes over all sign assignments of the ambiguous entries.
fn run_bounds(values: &[Rational], gamma: &Threshold) -> (usize, usize) {
    let n = values.len();
    let mut lo = 0;
    let mut hi = 0;
    // Last certain entry seen so far: (index, is_negative).
    let mut anchor: Option<(usize, bool)> = None;
    for (i, v) in values.iter().enumerate() {
        if gamma.is_ambiguous(v) {
            continue;
        }
        let neg = v.is_negative();
        match anchor {
            None => {
                // Leading run of i ambiguous entries can alternate freely.
                hi += i;
            }
            Some((j, prev_neg)) => {
                let gap = i - j - 1;
                let differ = usize::from(prev_neg != neg);
                lo += differ;
                // gap + 1 edges; the count's parity is fixed by the anchors.
                hi += if (gap + 1) % 2 == differ { gap + 1 } else { gap };
            }
        }
        anchor = Some((i, neg));
    }
    match anchor {
        Some((j, _)) => hi += n - 1 - j,
        None => hi += n.saturating_sub(1),
    }
    (lo, hi)
}

/// Upper bound on sign changes of any real vector within γ of `θ`.
pub fn max_sign_change(theta: &EvaluationVector, gamma: &Threshold) -> usize {
    run_bounds(&theta.values, gamma).1
}

/// Lower bound on sign changes of any real vector within γ of `θ`.
pub fn min_sign_change(theta: &EvaluationVector, gamma: &Threshold) -> usize {
    run_bounds(&theta.values, gamma).0
}

/// Per-entry rules: strict-product base count plus one per ambiguous end and two per ambiguous
/// interior entry between same-signed neighbours.
pub fn max_sign_change_rules(theta: &EvaluationVector, gamma: &Threshold) -> usize {
    let values = &theta.values;
    if values.len() <= 1 {
        return 0;
    }
    (base_count(values) + rule_adjustment(values, gamma)) as usize
}

/// Dual of [`max_sign_change_rules`], clamped at zero.
pub fn min_sign_change_rules(theta: &EvaluationVector, gamma: &Threshold) -> usize {
    let values = &theta.values;
    if values.len() <= 1 {
        return 0;
    }
    (base_count(values) - rule_adjustment(values, gamma)).max(0) as usize
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn theta(xs: &[Rational]) -> EvaluationVector {
        EvaluationVector::new(xs.to_vec())
    }

    fn g(n: i64, d: i64) -> Threshold {
        Threshold::new(ratio(n, d)).unwrap()
    }

    #[test]
    fn max_examples() {
        let gamma = g(1, 100);
        assert_eq!(max_sign_change(&theta(&[int(1), ratio(1, 1000), int(-1)]), &gamma), 1);
        assert_eq!(max_sign_change(&theta(&[int(1), ratio(1, 1000), int(1)]), &gamma), 2);
        assert_eq!(max_sign_change(&theta(&[ratio(1, 1000), int(1)]), &gamma), 1);
    }

    #[test]
    fn min_examples() {
        let gamma = g(1, 100);
        assert_eq!(min_sign_change(&theta(&[int(1), ratio(-1, 1000), int(1)]), &gamma), 0);
        // Neighbours of the ambiguous entry differ, so every nearby vector has exactly one change.
        assert_eq!(min_sign_change(&theta(&[int(1), ratio(1, 1000), int(-1)]), &gamma), 1);
        assert_eq!(min_sign_change(&theta(&[int(1), int(1)]), &gamma), 0);
    }

    #[test]
    fn adjacent_ambiguous_entries_are_covered() {
        let gamma = g(1, 10);
        let v = theta(&[ratio(2, 10), ratio(1, 20), ratio(-1, 20), ratio(-2, 10)]);
        assert_eq!(max_sign_change(&v, &gamma), 3);
        let v = theta(&[int(1), int(0), int(0), int(1)]);
        assert_eq!(max_sign_change(&v, &gamma), 2);
        let v = theta(&[int(1), ratio(-1, 20), ratio(-1, 20), int(1)]);
        assert_eq!(min_sign_change(&v, &gamma), 0);
        let v = theta(&vec![int(0); 5]);
        assert_eq!(max_sign_change(&v, &gamma), 4);
        assert_eq!(min_sign_change(&v, &gamma), 0);
    }

    #[test]
    fn per_entry_rules() {
        let gamma = g(1, 100);
        let v = theta(&[int(1), ratio(1, 1000), int(1)]);
        assert_eq!(max_sign_change_rules(&v, &gamma), 2);
        let v = theta(&[int(1), ratio(-1, 1000), int(1)]);
        assert_eq!(min_sign_change_rules(&v, &gamma), 0);
        assert_eq!(max_sign_change_rules(&v, &gamma), 4);
        let v = theta(&[int(1), ratio(1, 1000), int(-1)]);
        assert_eq!(min_sign_change_rules(&v, &gamma), 1);
        assert_eq!(max_sign_change_rules(&v, &gamma), 1);
        // Two adjacent ambiguous entries: the rules see 1, but +,+,-,- can become +,-,+,-.
        let gamma = g(1, 10);
        let v = theta(&[ratio(2, 10), ratio(1, 20), ratio(-1, 20), ratio(-2, 10)]);
        assert_eq!(max_sign_change_rules(&v, &gamma), 1);
        assert_eq!(max_sign_change(&v, &gamma), 3);
    }

    #[test]
    fn short_vectors() {
        let gamma = g(1, 10);
        assert_eq!(max_sign_change(&theta(&[int(0)]), &gamma), 0);
        assert_eq!(min_sign_change(&theta(&[]), &gamma), 0);
    }

    #[test]
    fn threshold_must_be_positive() {
        assert_eq!(Threshold::new(int(0)), Err(Error::ThresholdNonPositive));
        assert_eq!(Threshold::new(int(-1)), Err(Error::ThresholdNonPositive));
    }
}
