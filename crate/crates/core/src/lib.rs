//! Certified real-root enumeration for univariate polynomials.
//!
//! Every computation runs over exact rationals. The crate is organised bottom-up:
//!
//! - [`poly`]: exact polynomial arithmetic over [`Rational`].
//! - [`sturm`]: Sturm chains, sign variations, exact root counting and the Cauchy bound.
//! - [`approx_sign`]: conservative sign-change counting for values known only to within a threshold.
//! - [`rootenum`]: grid-based enumeration of every real root to a requested precision, and
//!   intersection of two polynomials.
//! - [`errbounds`]: the quantitative error toolkit (power differences, evaluation tolerance,
//!   coefficient snapping, Lipschitz constants, the small-value threshold).
//! - [`spectrum`]: the bit-interleaving point construction driven by a stage schedule.
//! - [`testkit`]: planted-root generators and brute-force oracles.

pub mod approx_sign;
pub mod errbounds;
mod error;
pub mod interval;
pub mod poly;
pub mod rational;
pub mod rootenum;
pub mod spectrum;
pub mod sturm;
pub mod testkit;

pub use approx_sign::{max_sign_change, min_sign_change, Threshold};
pub use errbounds::ApproxContext;
pub use error::{Error, Result};
pub use poly::Polynomial;
pub use rational::Rational;
pub use rootenum::{intersect, root_enum, root_enum_coeffs, PrecisionParams, RootCandidateList};
pub use spectrum::{BitSource, BitString, StageSchedule};
pub use sturm::{EvaluationVector, SturmChain};
