//! Phaseless polynomial interpolation.
//!
//! Recovers real and complex polynomials, up to a unit-modulus factor, from
//! evaluations whose phase (or sign) has been discarded, and accounts for
//! the number of queries and arithmetic operations each algorithm spends.
//!
//! ```
//! use phaseless::{EvaluationOracle, RealPoly, real_recovery};
//!
//! let hidden = RealPoly::new(vec![1.0, -2.0, 0.5]).unwrap();
//! let mut oracle = EvaluationOracle::new(hidden.clone());
//! let result = real_recovery::recover_nonadaptive(&mut oracle, 2).unwrap();
//! assert!(result.polynomial.phase_equivalent(&hidden, 1e-9));
//! assert_eq!(result.ledger.phaseless_queries, 5);
//! ```

pub mod complex_recovery;
pub mod counterexample;
mod error;
mod ledger;
pub mod oracle;
pub mod poly;
pub mod real_recovery;
mod recovery;
pub mod transcendental;

pub use error::{Error, Result};
pub use ledger::CostLedger;
pub use oracle::{EvaluationOracle, Hidden, PhaselessSample, Transcript};
pub use poly::{AnyPoly, ComplexPoly, PolyJson, RationalPoly, RealPoly};
pub use recovery::RecoveryResult;
pub use transcendental::TranscendentalPoint;

pub use num_complex::Complex64;
pub use num_rational::BigRational;
