//! Sturm chains and exact real-root counting.

use num_traits::{One, Signed, Zero};

use crate::poly::Polynomial;
use crate::rational::Rational;
use crate::{Error, Result};

/// `P_0 = p`, `P_1 = p'`, `P_i = -rem(P_{i-2}, P_{i-1})`, stopping before the first zero remainder.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SturmChain {
    chain: Vec<Polynomial>,
}

/// The chain evaluated at a single point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvaluationVector {
    pub values: Vec<Rational>,
}

impl EvaluationVector {
    pub fn new(values: Vec<Rational>) -> Self {
        EvaluationVector { values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

impl From<Vec<Rational>> for EvaluationVector {
    fn from(values: Vec<Rational>) -> Self {
        EvaluationVector { values }
    }
}

impl SturmChain {
    pub fn new(p: &Polynomial) -> Result<Self> {
        p.degree_at_least(1)?;
        let mut chain = vec![p.clone(), p.derivative()];
        loop {
            let n = chain.len();
            let rem = chain[n - 2].euclid_rem(&chain[n - 1])?;
            if rem.is_zero() {
                break;
            }
            chain.push(-rem);
        }
        Ok(SturmChain { chain })
    }

    pub fn polys(&self) -> &[Polynomial] {
        &self.chain
    }

    pub fn len(&self) -> usize {
        self.chain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chain.is_empty()
    }

    pub fn eval(&self, at: &Rational) -> EvaluationVector {
        EvaluationVector { values: self.chain.iter().map(|p| p.eval(at)).collect() }
    }

    /// Sign variations at `at`, zeros deleted.
    pub fn variations_at(&self, at: &Rational) -> usize {
        sign_variations(&self.eval(at))
    }

    /// Distinct real roots of `P_0` in `(a, b]`; neither endpoint may be a root.
    pub fn count_roots(&self, a: &Rational, b: &Rational) -> Result<usize> {
        if a >= b {
            return Err(Error::EmptyInterval);
        }
        let va = self.eval(a);
        let vb = self.eval(b);
        for (v, at) in [(&va, a), (&vb, b)] {
            if v.values[0].is_zero() {
                return Err(Error::EndpointIsRoot(at.to_string()));
            }
        }
        let (sa, sb) = (sign_variations(&va), sign_variations(&vb));
        // σ is non-increasing for a genuine Sturm chain.
        Ok(sa.checked_sub(sb).expect("sign variations increased along the interval"))
    }
}

pub fn sturm_chain(p: &Polynomial) -> Result<SturmChain> {
    SturmChain::new(p)
}

pub fn sturm_eval(chain: &SturmChain, at: &Rational) -> EvaluationVector {
    chain.eval(at)
}

/// Sign alternations after deleting zero entries.
pub fn sign_variations(v: &EvaluationVector) -> usize {
    let mut count = 0;
    let mut prev: Option<bool> = None;
    for x in v.values.iter().filter(|x| !x.is_zero()) {
        let neg = x.is_negative();
        if prev.is_some_and(|p| p != neg) {
            count += 1;
        }
        prev = Some(neg);
    }
    count
}

pub fn count_roots(p: &Polynomial, a: &Rational, b: &Rational) -> Result<usize> {
    SturmChain::new(p)?.count_roots(a, b)
}

/// `1 + max_i |c_i / c_d|`; every real root lies strictly inside `(-β, β)`.
pub fn cauchy_bound(p: &Polynomial) -> Result<Rational> {
    let d = p.degree_at_least(1)?;
    let lead = p.leading().abs();
    let m = p.coeffs()[..d]
        .iter()
        .map(|c| c.abs())
        .max()
        .unwrap_or_else(Rational::zero);
    Ok(Rational::one() + m / lead)
}
