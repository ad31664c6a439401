//! Modules over `Q[t]` with two quasi-generators.

pub mod basis;
pub mod plucker;
pub mod smith;

pub use basis::{module_membership, mu_basis, rank_over_fraction_field, MuBasis};
pub use plucker::{degree_report, integer_normalized, mu_basis_with_k, mu_resultant, mu_resultant_in, plucker_param_degree, ModuleDegreeReport};
pub use smith::{mat_mul, smith_form, SmithDecomposition};
