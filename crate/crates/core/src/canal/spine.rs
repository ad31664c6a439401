//! Spine curves in `P^4` and their lifts to the Lie quadric.

use num_rational::BigRational;
use num_traits::Zero;
use rand::Rng;

use crate::error::{Error, Result};
use crate::liegeom::{apply_c_curve, lorentz_poly};
use crate::scalar::Scalar;
use crate::{PolyVec, UniPoly};

/// A rational curve `t -> (e0 : e1 : e2 : e3 : e4)`; the affine point is the
/// sphere with center `(e1, e2, e3) / e0` and signed radius `e4 / e0`.
#[derive(Clone, Debug, PartialEq)]
pub struct SpineCurve {
    pub e: [UniPoly; 5],
    /// `max deg e_i`.
    pub n: usize,
}

impl SpineCurve {
    /// Normalizes a homogeneous tuple: divides out the common factor and
    /// rejects curves at infinity and constant curves.
    pub fn from_homogeneous(e: [UniPoly; 5]) -> Result<Self> {
        if e[0].is_zero() {
            return Err(Error::ZeroDenominator(0));
        }
        let g = UniPoly::gcd_all(e.iter())?;
        let e = e.map(|p| p.exact_quotient(&g).expect("gcd divides every coordinate"));
        let n = e.iter().map(UniPoly::deg).max().unwrap_or(0);
        let s = Self { e, n };
        if s.w().iter().all(UniPoly::is_zero) {
            return Err(Error::PointSpine);
        }
        Ok(s)
    }

    pub fn e0(&self) -> &UniPoly {
        &self.e[0]
    }

    /// `(e1, e2, e3, e4)`.
    pub fn spatial(&self) -> &[UniPoly] {
        &self.e[1..]
    }

    /// `<e, e>` in the Lorentz form of signature `(+, +, +, -)`.
    pub fn lorentz_square(&self) -> UniPoly {
        lorentz_poly(self.spatial(), self.spatial())
    }

    /// `w_j = e_j' e0 - e_j e0'`; all zero for a constant curve.
    pub fn w(&self) -> [UniPoly; 4] {
        let e0 = self.e0();
        let d0 = e0.derivative();
        std::array::from_fn(|j| {
            let ej = &self.e[j + 1];
            &(&ej.derivative() * e0) - &(ej * &d0)
        })
    }
}

/// Builds the spine `(num_i / den_i)_{i=1..4}` over the least common
/// denominator.
pub fn make_spine(nums: &[UniPoly; 4], dens: &[UniPoly; 4]) -> Result<SpineCurve> {
    if let Some(i) = dens.iter().position(UniPoly::is_zero) {
        return Err(Error::ZeroDenominator(i + 1));
    }
    let mut e0 = UniPoly::one();
    for d in dens {
        e0 = e0.lcm(d)?;
    }
    let mut e = [e0.clone(), UniPoly::zero(), UniPoly::zero(), UniPoly::zero(), UniPoly::zero()];
    for i in 0..4 {
        let cofactor = e0.exact_quotient(&dens[i]).expect("denominator divides the lcm");
        e[i + 1] = &nums[i] * &cofactor;
    }
    SpineCurve::from_homogeneous(e)
}

/// `Ê = (<e,e>, e0^2, e0 e1, e0 e2, e0 e3, e0 e4)`, a curve on the Lie quadric.
pub fn lift_spine(s: &SpineCurve) -> PolyVec {
    let e0 = s.e0();
    let mut entries = vec![s.lorentz_square(), e0 * e0];
    entries.extend(s.spatial().iter().map(|ei| e0 * ei));
    PolyVec::new(entries)
}

/// `E = Ê C` and its derivative.
#[allow(non_snake_case)]
pub fn build_E_Eprime(s: &SpineCurve) -> (PolyVec, PolyVec) {
    let e = apply_c_curve(&lift_spine(s));
    let de = e.derivative();
    (e, de)
}

/// The five-coordinate system for the `d`-offset: `E` with `y4 = -d y0`
/// folded into the `y0` slot, and its derivative.
#[allow(non_snake_case)]
pub fn build_D_Dprime(s: &SpineCurve, d: &BigRational) -> (PolyVec, PolyVec) {
    let (e, _) = build_E_Eprime(s);
    let x = e.entries();
    // The y4 coefficient of E is -e0 e4.
    let y0 = &x[1] - &x[5].scale(d);
    let dv = PolyVec::new(vec![x[0].clone(), y0, x[2].clone(), x[3].clone(), x[4].clone()]);
    let dd = dv.derivative();
    (dv, dd)
}

/// How [`random_spine`] picks the common denominator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Denominator {
    /// `e0 = 1 + t^2`.
    CircleQuadric,
    /// Random of degree `n` with nonzero constant term.
    Random,
}

fn random_coeff(rng: &mut impl Rng) -> BigRational {
    BigRational::from_int(rng.gen_range(-9..=9))
}

fn random_poly(rng: &mut impl Rng, deg: usize) -> UniPoly {
    UniPoly::new((0..=deg).map(|_| random_coeff(rng)).collect())
}

fn nonzero_coeff(rng: &mut impl Rng) -> BigRational {
    loop {
        let c = random_coeff(rng);
        if !c.is_zero() {
            return c;
        }
    }
}

/// A spine of degree `n` with integer coefficients in `-9..=9`. Retries
/// until the tuple is a valid spine of full degree.
pub fn random_spine(rng: &mut impl Rng, n: usize, den: Denominator) -> SpineCurve {
    loop {
        let e0 = match den {
            Denominator::CircleQuadric => UniPoly::from_ints(&[1, 0, 1]),
            Denominator::Random => {
                let mut c: Vec<BigRational> = (0..=n).map(|_| random_coeff(rng)).collect();
                c[0] = nonzero_coeff(rng);
                c[n] = nonzero_coeff(rng);
                UniPoly::new(c)
            }
        };
        let e = [
            e0,
            random_poly(rng, n),
            random_poly(rng, n),
            random_poly(rng, n),
            random_poly(rng, n),
        ];
        if let Ok(s) = SpineCurve::from_homogeneous(e) {
            if s.n == n && (den == Denominator::CircleQuadric || s.e0().deg() == n) {
                return s;
            }
        }
    }
}
