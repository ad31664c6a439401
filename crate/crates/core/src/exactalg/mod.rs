//! Exact polynomial kernels.

pub mod canonical;
pub mod determinant;
pub mod multipoly;
pub mod polyvec;
pub mod resultant;
pub mod tpoly;
pub mod unipoly;

pub use canonical::{canonical_form, exact_divide, substitute_u, substitute_u_with_exponent, weighted_degree, SubstitutionMode};
pub use determinant::{expansion_determinant, ff_determinant, DomainElement};
pub use multipoly::{Accumulator, Monomial, MultivariatePolynomial, Var, NVARS};
pub use polyvec::{independent_pair, PolynomialVector};
pub use resultant::{sylvester_matrix, sylvester_resultant, sylvester_resultant_generic};
pub use tpoly::ParametricPolynomial;
pub use unipoly::UnivariatePolynomial;
