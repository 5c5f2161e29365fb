//! Exact Littlewood-Richardson coefficients for Coxeter groups with a
//! compatible quasi-Cartan matrix.

pub mod error;
pub mod closedform;
pub mod coxeter;
pub mod exactring;
pub mod oracles;
pub mod positivity;
pub mod rank2;

pub use error::{LrcError, Result};
pub use exactring::{parse_poly, AlgebraicSpec, Monomial, MultiPoly, NumberField, PolyRing, Scalar, Sign};
pub use coxeter::{preset, GroupElement, QuasiCartanMatrix, RootVector, Word};
