//! Exact coefficient arithmetic.

mod field;
mod parse;
mod poly;

pub use field::{AlgebraicSpec, NumberField, Scalar, Sign};
pub use parse::parse_poly;
pub use poly::{Monomial, MultiPoly, PolyRing};

#[cfg(test)]
mod tests;
