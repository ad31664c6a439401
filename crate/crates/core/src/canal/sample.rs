//! Points of the dual variety from the tangent hyperplanes at one parameter.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::spine::{build_E_Eprime, SpineCurve};
use crate::error::{Error, Result};
use crate::exactalg::ff_determinant;
use crate::liegeom::LiePoint;

/// Scales a nonzero rational vector to coprime integers, keeping its sign.
fn remove_content(v: [BigRational; 6]) -> [BigRational; 6] {
    let den = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let num = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x.numer()));
    let factor = BigRational::new(den, num.abs());
    v.map(|x| x * &factor)
}

/// The point `(det D1, -det D2, .., -det D6)` of `V(Ê)`, where `D_i` drops
/// column `i` of the matrix with rows `E(t0), E'(t0), a1, a2, a3`.
pub fn dual_point_sample(s: &SpineCurve, t0: &BigRational, a: &[LiePoint<BigRational>; 3]) -> Result<LiePoint<BigRational>> {
    let (e, de) = build_E_Eprime(s);
    let rows: Vec<Vec<BigRational>> = [e.eval(t0), de.eval(t0)]
        .into_iter()
        .chain(a.iter().map(|p| p.coords.to_vec()))
        .collect();
    let mut minors: [BigRational; 6] = Default::default();
    for (i, m) in minors.iter_mut().enumerate() {
        let sub: Vec<Vec<BigRational>> = rows
            .iter()
            .map(|r| r.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, x)| x.clone()).collect())
            .collect();
        let det = ff_determinant(&sub)?;
        *m = if i % 2 == 0 { det } else { -det };
    }
    if minors.iter().all(Zero::is_zero) {
        return Err(Error::DegenerateSample);
    }
    Ok(LiePoint::new(remove_content(minors)))
}
