//! Lie and Laguerre sphere geometry.
//!
//! Points of `P^5` are written `(u, y0, y1, y2, y3, y4)`. The Lie quadric is
//! `-u y0 + y1^2 + y2^2 + y3^2 - y4^2 = 0`; its points away from `y0 = 0` are
//! oriented spheres, those on `y0 = 0` oriented planes.

use crate::error::{Error, Result};
use crate::exactalg::{PolynomialVector, UnivariatePolynomial};
use crate::scalar::FieldScalar;

/// A representative of a point of `P^5`.
#[derive(Clone, Debug, PartialEq)]
pub struct LiePoint<S> {
    pub coords: [S; 6],
}

/// An oriented sphere; the sign of the radius is the orientation.
#[derive(Clone, Debug, PartialEq)]
pub struct Sphere<S> {
    pub center: [S; 3],
    pub radius: S,
}

/// The oriented plane `v . normal = offset`.
#[derive(Clone, Debug, PartialEq)]
pub struct Plane<S> {
    pub normal: [S; 3],
    pub offset: S,
}

/// A point of the Lorentz space `R^4_1`.
#[derive(Clone, Debug, PartialEq)]
pub struct Point4<S> {
    pub coords: [S; 4],
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum LineType {
    PlusLine,
    ZeroLine,
    MinusLine,
}

impl<S: FieldScalar> LiePoint<S> {
    pub fn new(coords: [S; 6]) -> Self {
        Self { coords }
    }

    /// The improper point `q = (1:0:0:0:0:0)`.
    pub fn improper() -> Self {
        let mut c: [S; 6] = std::array::from_fn(|_| S::zero());
        c[0] = S::one();
        Self { coords: c }
    }

    pub fn dot(&self, other: &Self) -> S {
        self.coords
            .iter()
            .zip(&other.coords)
            .fold(S::zero(), |acc, (a, b)| acc.add_ref(&a.mul_ref(b)))
    }
}

impl<S: FieldScalar> Point4<S> {
    pub fn new(coords: [S; 4]) -> Self {
        Self { coords }
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self { coords: std::array::from_fn(|i| self.coords[i].sub_ref(&other.coords[i])) }
    }
}

fn half<S: FieldScalar>() -> S {
    S::from_int(2).inv()
}

/// `[x, z] = -(x1 z2 + x2 z1)/2 + x3 z3 + x4 z4 + x5 z5 - x6 z6`.
pub fn lie_product<S: FieldScalar>(x: &LiePoint<S>, z: &LiePoint<S>) -> S {
    let (a, b) = (&x.coords, &z.coords);
    let cross = a[0].mul_ref(&b[1]).add_ref(&a[1].mul_ref(&b[0])).mul_ref(&half());
    a[2].mul_ref(&b[2])
        .add_ref(&a[3].mul_ref(&b[3]))
        .add_ref(&a[4].mul_ref(&b[4]))
        .sub_ref(&a[5].mul_ref(&b[5]))
        .sub_ref(&cross)
}

/// The row vector `x C`, so that `[x, z] = (x C) . z`.
pub fn apply_c<S: FieldScalar>(x: &LiePoint<S>) -> LiePoint<S> {
    let c = &x.coords;
    let h = half::<S>();
    LiePoint::new([
        c[1].mul_ref(&h).neg_ref(),
        c[0].mul_ref(&h).neg_ref(),
        c[2].clone(),
        c[3].clone(),
        c[4].clone(),
        c[5].neg_ref(),
    ])
}

/// `x C` for a curve `x(t)` in `P^5`.
pub fn apply_c_curve<S: FieldScalar>(x: &PolynomialVector<S>) -> PolynomialVector<S> {
    assert_eq!(x.len(), 6, "Lie coordinates have six entries");
    let h = half::<S>();
    let e = x.entries();
    PolynomialVector::new(vec![
        e[1].scale(&h.neg_ref()),
        e[0].scale(&h.neg_ref()),
        e[2].clone(),
        e[3].clone(),
        e[4].clone(),
        -&e[5],
    ])
}

/// `Lie(S_{p,r}) = (2(p.p - r^2), 2, 2p, 2r)`.
pub fn sphere_to_lie<S: FieldScalar>(s: &Sphere<S>) -> LiePoint<S> {
    let two = S::from_int(2);
    let pp = s.center.iter().fold(S::zero(), |acc, x| acc.add_ref(&x.mul_ref(x)));
    let u = pp.sub_ref(&s.radius.mul_ref(&s.radius)).mul_ref(&two);
    LiePoint::new([
        u,
        two.clone(),
        s.center[0].mul_ref(&two),
        s.center[1].mul_ref(&two),
        s.center[2].mul_ref(&two),
        s.radius.mul_ref(&two),
    ])
}

/// `Lie(P_{n,h}) = (2h, 0, n, 1)`; the normal must have unit length.
pub fn plane_to_lie<S: FieldScalar>(p: &Plane<S>) -> Result<LiePoint<S>> {
    let nn = p.normal.iter().fold(S::zero(), |acc, x| acc.add_ref(&x.mul_ref(x)));
    if nn != S::one() {
        return Err(Error::NonUnitNormal);
    }
    Ok(LiePoint::new([
        p.offset.mul_ref(&S::from_int(2)),
        S::zero(),
        p.normal[0].clone(),
        p.normal[1].clone(),
        p.normal[2].clone(),
        S::one(),
    ]))
}

/// The affine chart `(y1, y2, y3, y4) / y0`.
pub fn phi<S: FieldScalar>(x: &LiePoint<S>) -> Result<Point4<S>> {
    let y0 = &x.coords[1];
    if y0.is_zero() {
        return Err(Error::PointAtInfinity);
    }
    let inv = y0.inv();
    Ok(Point4::new(std::array::from_fn(|i| x.coords[i + 2].mul_ref(&inv))))
}

/// The projection `(u:y0:..:y4) -> (y0:..:y4)` away from the improper point.
pub fn phi_projective<S: FieldScalar>(x: &LiePoint<S>) -> Result<[S; 5]> {
    let y: [S; 5] = std::array::from_fn(|i| x.coords[i + 1].clone());
    if y.iter().all(|c| c.is_zero()) {
        return Err(Error::ZeroVector);
    }
    Ok(y)
}

/// `phi^{-1}(y) = (<y,y>, 1, y)`.
pub fn phi_inverse<S: FieldScalar>(y: &Point4<S>) -> LiePoint<S> {
    let c = &y.coords;
    LiePoint::new([lorentz(y, y), S::one(), c[0].clone(), c[1].clone(), c[2].clone(), c[3].clone()])
}

/// `Phi^{-1}(y0:y) = (<y,y> : y0^2 : y0 y)`.
pub fn phi_inverse_proj<S: FieldScalar>(ybar: &[S; 5]) -> Result<LiePoint<S>> {
    if ybar.iter().all(|c| c.is_zero()) {
        return Err(Error::ZeroVector);
    }
    let y0 = &ybar[0];
    let y = Point4::new(std::array::from_fn(|i| ybar[i + 1].clone()));
    Ok(LiePoint::new([
        lorentz(&y, &y),
        y0.mul_ref(y0),
        y0.mul_ref(&ybar[1]),
        y0.mul_ref(&ybar[2]),
        y0.mul_ref(&ybar[3]),
        y0.mul_ref(&ybar[4]),
    ]))
}

/// `<v, w> = v1 w1 + v2 w2 + v3 w3 - v4 w4`.
pub fn lorentz<S: FieldScalar>(v: &Point4<S>, w: &Point4<S>) -> S {
    let (a, b) = (&v.coords, &w.coords);
    a[0].mul_ref(&b[0])
        .add_ref(&a[1].mul_ref(&b[1]))
        .add_ref(&a[2].mul_ref(&b[2]))
        .sub_ref(&a[3].mul_ref(&b[3]))
}

/// Lorentz form on polynomial 4-vectors.
pub fn lorentz_poly<S: FieldScalar>(v: &[UnivariatePolynomial<S>], w: &[UnivariatePolynomial<S>]) -> UnivariatePolynomial<S> {
    let p = |i: usize| &v[i] * &w[i];
    &(&(&p(0) + &p(1)) + &p(2)) - &p(3)
}

pub fn oriented_contact<S: FieldScalar>(s1: &Sphere<S>, s2: &Sphere<S>) -> bool {
    lie_product(&sphere_to_lie(s1), &sphere_to_lie(s2)).is_zero()
}

/// Sign of `<v, v>` for the line through the origin spanned by `v`.
pub fn line_type<S: FieldScalar + PartialOrd>(v: &Point4<S>) -> Result<LineType> {
    if v.coords.iter().all(|c| c.is_zero()) {
        return Err(Error::ZeroVector);
    }
    let q = lorentz(v, v);
    Ok(if q.is_zero() {
        LineType::ZeroLine
    } else if q > S::zero() {
        LineType::PlusLine
    } else {
        LineType::MinusLine
    })
}

/// `g((a0:a),(y0:y)) = y0^2 <a,a> - 2 a0 y0 <a,y> + a0^2 <y,y>`.
pub fn isotropic_cone_eval<S: FieldScalar>(a: &[S; 5], y: &[S; 5]) -> S {
    let av = Point4::new(std::array::from_fn(|i| a[i + 1].clone()));
    let yv = Point4::new(std::array::from_fn(|i| y[i + 1].clone()));
    let (a0, y0) = (&a[0], &y[0]);
    y0.mul_ref(y0)
        .mul_ref(&lorentz(&av, &av))
        .sub_ref(&S::from_int(2).mul_ref(a0).mul_ref(y0).mul_ref(&lorentz(&av, &yv)))
        .add_ref(&a0.mul_ref(a0).mul_ref(&lorentz(&yv, &yv)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, Scalar};
    use crate::Rational;

    fn r(x: i64) -> Rational {
        Rational::from_int(x)
    }

    fn lp(c: [i64; 6]) -> LiePoint<Rational> {
        LiePoint::new(c.map(r))
    }

    fn sphere(c: [i64; 3], radius: i64) -> Sphere<Rational> {
        Sphere { center: c.map(r), radius: r(radius) }
    }

    #[test]
    fn improper_point_on_quadric() {
        let q = LiePoint::<Rational>::improper();
        assert_eq!(lie_product(&q, &q), r(0));
    }

    #[test]
    fn sphere_encoding() {
        let unit = sphere_to_lie(&sphere([0, 0, 0], 1));
        assert_eq!(unit, lp([-2, 2, 0, 0, 0, 2]));
        assert_eq!(lie_product(&unit, &unit), r(0));
        assert_eq!(sphere_to_lie(&sphere([1, 0, 0], 0)), lp([2, 2, 2, 0, 0, 0]));
        assert_eq!(phi(&unit).unwrap(), Point4::new([0, 0, 0, 1].map(r)));
    }

    #[test]
    fn contact_examples() {
        let s = sphere([0, 0, 0], 1);
        assert!(oriented_contact(&s, &sphere([3, 0, 0], 4)));
        assert!(oriented_contact(&s, &sphere([3, 0, 0], -2)));
        assert!(!oriented_contact(&s, &sphere([3, 0, 0], 1)));
        let a = [1, 0, 0, 0, 1].map(r);
        let y = [1, 3, 0, 0, 4].map(r);
        assert_eq!(isotropic_cone_eval(&a, &y), r(0));
    }

    #[test]
    fn c_matrix() {
        assert_eq!(apply_c(&lp([1, 0, 0, 0, 0, 0])).coords, [r(0), rat(-1, 2), r(0), r(0), r(0), r(0)]);
        let x = lp([2, 2, 0, 0, 0, 0]);
        assert_eq!(apply_c(&x), lp([-1, -1, 0, 0, 0, 0]));
    }

    #[test]
    fn planes() {
        let p = Plane { normal: [1, 0, 0].map(r), offset: r(2) };
        let x = plane_to_lie(&p).unwrap();
        assert_eq!(x, lp([4, 0, 1, 0, 0, 1]));
        assert_eq!(lie_product(&x, &x), r(0));
        assert_eq!(phi(&x), Err(Error::PointAtInfinity));
        let tilted = Plane { normal: [rat(3, 5), rat(4, 5), r(0)], offset: r(0) };
        assert_eq!(plane_to_lie(&tilted).unwrap().coords, [r(0), r(0), rat(3, 5), rat(4, 5), r(0), r(1)]);
        let bad = Plane { normal: [1, 1, 0].map(r), offset: r(0) };
        assert_eq!(plane_to_lie(&bad), Err(Error::NonUnitNormal));
        assert_eq!(phi(&lp([0, 0, 1, 0, 0, 1])), Err(Error::PointAtInfinity));
    }

    #[test]
    fn inverse_maps() {
        assert_eq!(phi_inverse(&Point4::new([0, 0, 0, 1].map(r))), lp([-1, 1, 0, 0, 0, 1]));
        assert_eq!(phi_inverse(&Point4::new([0, 0, 0, 0].map(r))), lp([0, 1, 0, 0, 0, 0]));
        let y = phi_inverse_proj(&[2, 1, 0, 0, 1].map(r)).unwrap();
        assert_eq!(lie_product(&y, &y), r(0));
        assert_eq!(phi_projective(&y).unwrap(), [4, 2, 0, 0, 2].map(r));
    }

    #[test]
    fn lorentz_and_lines() {
        let v = Point4::new([1, 0, 0, 1].map(r));
        assert_eq!(lorentz(&v, &v), r(0));
        assert_eq!(lorentz(&Point4::new([1, 0, 0, 0].map(r)), &Point4::new([0, 1, 0, 0].map(r))), r(0));
        assert_eq!(lorentz(&Point4::new([0, 0, 0, 1].map(r)), &Point4::new([0, 0, 0, 1].map(r))), r(-1));
        assert_eq!(line_type(&Point4::new([1, 0, 0, 0].map(r))).unwrap(), LineType::PlusLine);
        assert_eq!(line_type(&v).unwrap(), LineType::ZeroLine);
        assert_eq!(line_type(&Point4::new([0, 0, 0, 1].map(r))).unwrap(), LineType::MinusLine);
        assert_eq!(line_type(&Point4::new([0, 0, 0, 0].map(r))), Err(Error::ZeroVector));
    }

    #[test]
    fn works_in_floating_point() {
        let s = Sphere { center: [0.0, 0.0, 0.0], radius: 1.0f64 };
        let t = Sphere { center: [3.0, 0.0, 0.0], radius: 4.0f64 };
        assert!(oriented_contact(&s, &t));
        assert_eq!(sphere_to_lie(&s).coords, [-2.0, 2.0, 0.0, 0.0, 0.0, 2.0]);
    }
}
