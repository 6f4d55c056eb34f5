//! Exact triangle geometry in homogeneous barycentric coordinates.

pub mod centers;
pub mod curves;
pub mod kernel;
pub mod linalg;
pub mod scenarios;

/// Arbitrary-precision rational scalar; the only number type of the core.
pub type Rational = num_rational::BigRational;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/coordinates.md")]
    mod coordinates {}
    #[doc = include_str!("../../../book/src/centers.md")]
    mod centers {}
    #[doc = include_str!("../../../book/src/curves.md")]
    mod curves {}
    #[doc = include_str!("../../../book/src/scenarios.md")]
    mod scenarios {}
}
