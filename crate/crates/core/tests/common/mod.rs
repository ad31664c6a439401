#![allow(dead_code)]

use canal_core::canal::{make_spine, SpineCurve};
use canal_core::exactalg::{canonical_form, Var};
use canal_core::{MultiPoly, Rational, Scalar, UniPoly};

pub fn p(c: &[i64]) -> UniPoly {
    UniPoly::from_ints(c)
}

pub fn spine(nums: [&[i64]; 4], dens: [&[i64]; 4]) -> SpineCurve {
    make_spine(&nums.map(p), &dens.map(p)).unwrap()
}

/// `(0, 0, 8t/(1+t^2), (3-3t^2)/(1+t^2))`.
pub fn ellipse() -> SpineCurve {
    spine([&[], &[], &[0, 8], &[3, 0, -3]], [&[1], &[1], &[1, 0, 1], &[1, 0, 1]])
}

/// `(3t^2+1, 4t^2+t, 0, 5t^2)`.
pub fn polynomial_quadratic() -> SpineCurve {
    spine([&[1, 0, 3], &[0, 1, 4], &[], &[0, 0, 5]], [&[1], &[1], &[1], &[1]])
}

/// Viviani curve with unit radius.
pub fn viviani() -> SpineCurve {
    let sq = &[1, 0, 2, 0, 1][..];
    spine([&[1, 0, -2, 0, 1], &[0, 2, 0, -2], &[0, 2], &[1]], [sq, sq, &[1, 0, 1], &[1]])
}

/// Circle of radius 1 in the `y1 y2` plane, radius `1/2`.
pub fn torus() -> SpineCurve {
    let den = &[1, 0, 1][..];
    let half = canal_core::UniPoly::constant(canal_core::scalar::rat(1, 2));
    make_spine(&[p(&[1, 0, -1]), p(&[0, 2]), p(&[]), half], &[p(den), p(den), p(&[1]), p(&[1])]).unwrap()
}

pub fn v(x: Var) -> MultiPoly {
    MultiPoly::var(x)
}

pub fn c(n: i64) -> MultiPoly {
    MultiPoly::constant(Rational::from_int(n))
}

pub fn canon(f: &MultiPoly) -> MultiPoly {
    canonical_form(f).unwrap()
}

/// Sets `y0 = 1` and canonicalizes.
pub fn affine(f: &MultiPoly) -> MultiPoly {
    canon(&f.specialize(Var::Y0, &Rational::from_int(1)))
}
