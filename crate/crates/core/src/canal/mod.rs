//! From a spine curve to the implicit equations of its canal surface,
//! offsets and dual variety.

mod degree;
mod equations;
mod sample;
mod spine;

pub use degree::{general_type_check, predicted_degrees, DegreePrediction, GeneralTypeReport};
pub use equations::{
    canal_equation, dual_variety_equation, g_system, gamma_equation, h_resultant, h_system, lorentz_form,
    naive_envelope, naive_envelope_d, offset_dual_equation, pull_back, ImplicitResult, PipelineOptions,
};
pub use sample::dual_point_sample;
pub use spine::{build_D_Dprime, build_E_Eprime, lift_spine, make_spine, random_spine, Denominator, SpineCurve};
