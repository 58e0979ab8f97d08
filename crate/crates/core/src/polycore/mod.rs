//! Exact rational arithmetic and uni/bivariate polynomial algebra.

pub mod bipoly;
pub mod linalg;
pub mod poly;
pub mod rational;

pub use bipoly::BiPoly;
pub use poly::{ComplexPair, Poly};
pub use rational::{parse_rational, rat, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("cannot parse rational from {0:?}")]
    Parse(String),
    #[error("scale factor must be positive, got {0}")]
    NonPositiveScale(String),
    #[error("complex pair #{0} has a non-positive squared imaginary part")]
    DegenerateComplexPair(usize),
    #[error("leading coefficient must be nonzero")]
    ZeroLeadingCoefficient,
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
}
