//! Coefficient types.
//!
//! Every polynomial container in this crate is generic over [`Scalar`]. The
//! exact pipeline runs over [`crate::Rational`]; the integer instance backs the
//! determinant kernels, and the float instances exist for the geometric
//! primitives where approximate evaluation is good enough.

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::{FromPrimitive, One, Signed, Zero};

/// A commutative ring element usable as a polynomial coefficient.
///
/// The by-reference arithmetic methods exist so generic code can stay
/// allocation-light for big-number instances.
pub trait Scalar:
    Clone + Debug + Display + PartialEq + Send + Sync + Zero + One + FromPrimitive + 'static
{
    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn add_assign_ref(&mut self, rhs: &Self);
    fn sub_assign_ref(&mut self, rhs: &Self);

    /// `Some(q)` with `q * rhs == self`, `None` if `rhs` is zero or does not
    /// divide `self` in the ring.
    fn exact_div(&self, rhs: &Self) -> Option<Self>;

    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("integer fits the scalar type")
    }
}

/// Scalars that form a field; every nonzero element is invertible.
pub trait FieldScalar: Scalar {
    fn div_ref(&self, rhs: &Self) -> Self;

    fn inv(&self) -> Self {
        Self::one().div_ref(self)
    }
}

macro_rules! impl_ref_ops {
    ($t:ty) => {
        fn add_ref(&self, rhs: &Self) -> Self {
            self + rhs
        }
        fn sub_ref(&self, rhs: &Self) -> Self {
            self - rhs
        }
        fn mul_ref(&self, rhs: &Self) -> Self {
            self * rhs
        }
        fn neg_ref(&self) -> Self {
            -self
        }
        fn add_assign_ref(&mut self, rhs: &Self) {
            *self += rhs;
        }
        fn sub_assign_ref(&mut self, rhs: &Self) {
            *self -= rhs;
        }
    };
}

impl Scalar for BigInt {
    impl_ref_ops!(BigInt);

    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(rhs);
        r.is_zero().then_some(q)
    }
}

impl Scalar for BigRational {
    impl_ref_ops!(BigRational);

    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        (!rhs.is_zero()).then(|| self / rhs)
    }
}

impl FieldScalar for BigRational {
    fn div_ref(&self, rhs: &Self) -> Self {
        self / rhs
    }
}

impl Scalar for Ratio<i64> {
    impl_ref_ops!(Ratio<i64>);

    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        (!rhs.is_zero()).then(|| self / rhs)
    }
}

impl FieldScalar for Ratio<i64> {
    fn div_ref(&self, rhs: &Self) -> Self {
        self / rhs
    }
}

macro_rules! impl_float {
    ($t:ty) => {
        impl Scalar for $t {
            impl_ref_ops!($t);

            fn exact_div(&self, rhs: &Self) -> Option<Self> {
                (*rhs != 0.0).then(|| self / rhs)
            }
        }

        impl FieldScalar for $t {
            fn div_ref(&self, rhs: &Self) -> Self {
                self / rhs
            }
        }
    };
}

impl_float!(f32);
impl_float!(f64);

/// Sign of an ordered scalar, used by classification routines.
pub fn sign_of<S: Scalar + Signed>(x: &S) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

/// Parses `"p"`, `"-p"`, or `"p/q"` into an exact rational.
pub fn parse_rational(text: &str) -> Option<BigRational> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (text, None),
    };
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = match den {
        Some(d) => d.parse().ok()?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return None;
    }
    Some(BigRational::new(num, den))
}

/// Shorthand for building a rational from machine integers.
pub fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_div_integers() {
        let a = BigInt::from(12);
        assert_eq!(a.exact_div(&BigInt::from(4)), Some(BigInt::from(3)));
        assert_eq!(a.exact_div(&BigInt::from(5)), None);
        assert_eq!(a.exact_div(&BigInt::zero()), None);
    }

    #[test]
    fn parse_rationals() {
        assert_eq!(parse_rational("1/3"), Some(rat(1, 3)));
        assert_eq!(parse_rational(" -4/6 "), Some(rat(-2, 3)));
        assert_eq!(parse_rational("7"), Some(rat(7, 1)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("0.5"), None);
        assert_eq!(parse_rational("abc"), None);
    }

    #[test]
    fn rational_normalizes() {
        let r = rat(4, -8);
        assert_eq!(r.numer(), &BigInt::from(-1));
        assert_eq!(r.denom(), &BigInt::from(2));
        assert_eq!(rat(0, 5), BigRational::zero());
    }
}
