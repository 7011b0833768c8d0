//! Dense polynomial algebra over the reals, the complexes and the rationals.

mod complex;
pub(crate) mod interp;
mod json;
mod rational;
mod real;

pub use complex::{roots_of_unity, ComplexPoly};
pub use interp::chebyshev_nodes;
pub use json::{AnyPoly, JsonScalar, PolyJson};
pub use rational::{ratio, RationalPoly};
pub(crate) use rational::vandermonde_inverse;
pub use real::RealPoly;
