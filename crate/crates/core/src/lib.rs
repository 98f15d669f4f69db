//! Exact-arithmetic toolkit for Newton polytopes, mixed volumes, and
//! BKK-bound certification of Laurent polynomial systems, with an
//! application to algebraic Kuramoto equations and independent root
//! oracles for desk-scale verification.
//!
//! The geometry kernel is generic over an ordered-field [`scalar::Scalar`];
//! the concrete aliases below fix the exact rational instantiation used
//! throughout the certification pipeline. Complex floating arithmetic
//! appears only inside [`oracle`].

pub mod laurent;
pub mod lp;
pub mod matrix;
pub mod polytope;
pub mod scalar;

pub use laurent::{
    parse_polynomial, CoefficientSampler, ExponentVector, LaurentError, LaurentPolynomial,
    SampledElement, SpanSpace,
};
pub use polytope::{Face, FaceMeet, Facet, Polytope, PolytopeError};
pub use scalar::Scalar;

/// Exact rational scalar used by the certification pipeline.
pub type Rational = num_rational::BigRational;

/// Laurent polynomial with exact rational coefficients.
pub type QPoly = laurent::LaurentPolynomial<Rational>;

/// Laurent polynomial with complex floating coefficients (root oracle only).
pub type CPoly = laurent::LaurentPolynomial<num_complex::Complex64>;

/// Rational polytope.
pub type QPolytope = polytope::Polytope<Rational>;

/// Span space over the rationals.
pub type QSpanSpace = laurent::SpanSpace<Rational>;
