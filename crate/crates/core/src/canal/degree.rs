//! General-type test and the degree formulas it unlocks.

use super::spine::{build_E_Eprime, SpineCurve};
use crate::error::{Error, Result};
use crate::mubasis::plucker_param_degree;
use crate::{PolyVec, UniPoly};

#[derive(Clone, Debug, PartialEq)]
pub struct GeneralTypeReport {
    pub w: PolyVec,
    /// `max deg w_j`.
    pub gamma: usize,
    pub gcd_w_trivial: bool,
    pub gcd_e0_e0prime_trivial: bool,
    pub gcd_e0_ee_trivial: bool,
    /// `deg Ē == deg e0`.
    pub degree_match: bool,
    /// Plücker parametrization degree of `<E, E'>`.
    pub k: usize,
    pub k_is_one: bool,
    pub is_general_type: bool,
}

fn coprime(a: &UniPoly, b: &UniPoly) -> Result<bool> {
    Ok(UniPoly::gcd_all([a, b])?.deg() == 0)
}

pub fn general_type_check(s: &SpineCurve, seed: u64) -> Result<GeneralTypeReport> {
    let w = PolyVec::new(s.w().to_vec());
    let gamma = w.deg();
    let gcd_w_trivial = w.content_gcd()?.deg() == 0;
    let e0 = s.e0();
    let gcd_e0_e0prime_trivial = coprime(e0, &e0.derivative())?;
    let gcd_e0_ee_trivial = coprime(e0, &s.lorentz_square())?;
    let degree_match = e0.deg() == s.n;
    let (e, de) = build_E_Eprime(s);
    let k = plucker_param_degree(&e, &de, seed)?;
    let k_is_one = k == 1;
    Ok(GeneralTypeReport {
        is_general_type: gcd_w_trivial && gcd_e0_e0prime_trivial && gcd_e0_ee_trivial && degree_match && k_is_one,
        w,
        gamma,
        gcd_w_trivial,
        gcd_e0_e0prime_trivial,
        gcd_e0_ee_trivial,
        degree_match,
        k,
        k_is_one,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreePrediction {
    /// `4n - 2`.
    pub deg_v: usize,
    /// `6n - 4`.
    pub deg_gamma: usize,
    /// `deg V + deg w - deg gcd(w)`; an unproven estimate, reported only.
    pub conjectured_deg_gamma: usize,
}

/// Degrees of `V(Ê)` and `Γ` for a spine of general type, without computing
/// any resultant.
pub fn predicted_degrees(s: &SpineCurve, seed: u64) -> Result<DegreePrediction> {
    let report = general_type_check(s, seed)?;
    if !report.is_general_type {
        return Err(Error::NotGeneralType);
    }
    let deg_v = 4 * s.n - 2;
    let gcd_deg = report.w.content_gcd()?.deg();
    Ok(DegreePrediction {
        deg_v,
        deg_gamma: 6 * s.n - 4,
        conjectured_deg_gamma: deg_v + report.gamma - gcd_deg,
    })
}
