//! Numerical estimation of summing-type operator norms on finite-dimensional
//! sequence spaces.
//!
//! The crate provides:
//!
//! - weighted `ℓ_r^n` spaces with explicit duality ([`spaces`]),
//! - finite atomic measures and their `L_p` embedding constants ([`measures`]),
//! - a deterministic seeded multi-start ascent engine for sup-type
//!   quantities over norm balls and over finite vector families ([`optim`]),
//! - the abstract two-evaluator summing framework and its inclusion
//!   machinery ([`rs`]),
//! - `(q, p, sigma)`-absolutely-continuous norm estimation with exact
//!   rank-one and column-sum oracles ([`summing`]),
//! - discretized vector-valued function seminorms and the composition
//!   operator norm ([`vvfun`]),
//! - brute-force oracle validation routines ([`oracles`]).
//!
//! All estimators report certified lower bounds: the returned value is the
//! objective re-evaluated at the stored witness, never a smoothed or
//! extrapolated quantity. Runs are reproducible bit-for-bit from the master
//! seed.

pub mod error;
pub mod measures;
pub mod numerics;
pub mod optim;
pub mod oracles;
pub mod rs;
pub mod spaces;
pub mod summing;
pub mod vvfun;

mod dualsup;

pub use error::{Error, Result};
pub use measures::{AtomicMeasure, ScalarWeighting};
pub use optim::{EstimateReport, OracleRef, SearchConfig};
pub use spaces::{DualPoint, Exponent, NormedSpace};
pub use summing::{Operator, SummingParams};
pub use vvfun::SimpleFunction;
