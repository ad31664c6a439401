//! Exact implicitization of canal surfaces, their offsets and the dual
//! varieties of spine curves lifted to the Lie quadric.
//!
//! The polynomial kernels are generic over the coefficient [`Scalar`]; the
//! geometric pipeline runs over [`Rational`].

pub mod canal;
pub mod error;
pub mod exactalg;
pub mod liegeom;
pub mod mubasis;
pub mod scalar;

pub use error::{Error, Result};
pub use scalar::{FieldScalar, Scalar};

/// Exact rational coefficients.
pub type Rational = num_rational::BigRational;
/// Dense polynomial in `t` over the rationals.
pub type UniPoly = exactalg::UnivariatePolynomial<Rational>;
/// Row vector of polynomials in `t`.
pub type PolyVec = exactalg::PolynomialVector<Rational>;
/// Sparse polynomial in `(u, y0, .., y4)`.
pub type MultiPoly = exactalg::MultivariatePolynomial<Rational>;
/// Polynomial in `t` with coefficients in `Q[u, y0, .., y4]`.
pub type TPoly = exactalg::ParametricPolynomial<Rational>;
