//! Dense univariate polynomials in the curve parameter `t`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::{FieldScalar, Scalar};

/// Dense polynomial, `coeffs[i]` is the coefficient of `t^i`.
///
/// The last stored coefficient is nonzero; the zero polynomial has no
/// coefficients at all.
#[derive(Clone, PartialEq, Debug)]
pub struct UnivariatePolynomial<S> {
    coeffs: Vec<S>,
}

impl<S: Scalar> UnivariatePolynomial<S> {
    pub fn new(mut coeffs: Vec<S>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| S::from_int(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(S::one())
    }

    pub fn constant(c: S) -> Self {
        Self::new(vec![c])
    }

    /// `c * t^k`.
    pub fn monomial(c: S, k: usize) -> Self {
        let mut coeffs = vec![S::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// The polynomial `t`.
    pub fn t() -> Self {
        Self::monomial(S::one(), 1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    /// Coefficient of `t^i`, zero past the end.
    pub fn coeff(&self, i: usize) -> S {
        self.coeffs.get(i).cloned().unwrap_or_else(S::zero)
    }

    pub fn leading_coeff(&self) -> S {
        self.coeffs.last().cloned().unwrap_or_else(S::zero)
    }

    pub fn eval(&self, t: &S) -> S {
        let mut acc = S::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_ref(t);
            acc.add_assign_ref(c);
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.mul_ref(&S::from_int(i as i64)))
                .collect(),
        )
    }

    pub fn scale(&self, c: &S) -> Self {
        Self::new(self.coeffs.iter().map(|x| x.mul_ref(c)).collect())
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![S::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> UnivariatePolynomial<T> {
        UnivariatePolynomial::new(self.coeffs.iter().map(f).collect())
    }
}

impl<S: FieldScalar> UnivariatePolynomial<S> {
    /// Euclidean division, `self = q * rhs + r` with `deg r < deg rhs`.
    pub fn div_rem(&self, rhs: &Self) -> Result<(Self, Self)> {
        let rd = rhs.degree().ok_or(Error::DivisionByZero)?;
        let lc_inv = rhs.leading_coeff().inv();
        let mut rem = self.coeffs.clone();
        let qlen = (self.coeffs.len() + 1).saturating_sub(rd + 1);
        let mut quot = vec![S::zero(); qlen];
        while rem.len() > rd {
            let top = rem.len() - 1;
            let c = rem[top].mul_ref(&lc_inv);
            let shift = top - rd;
            for (i, b) in rhs.coeffs.iter().enumerate() {
                rem[shift + i].sub_assign_ref(&c.mul_ref(b));
            }
            quot[shift] = c;
            rem.pop();
            while rem.last().is_some_and(|x| x.is_zero()) {
                rem.pop();
            }
        }
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Quotient if `rhs` divides `self` exactly.
    pub fn exact_quotient(&self, rhs: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(rhs).ok()?;
        r.is_zero().then_some(q)
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.exact_quotient(self).is_some()
    }

    /// Leading coefficient scaled to 1; zero stays zero.
    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        self.scale(&self.leading_coeff().inv())
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::GcdOfZero);
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    /// Extended Euclid: returns `(g, s, t)` with `s*self + t*other = g`, `g` monic.
    pub fn ext_gcd(&self, other: &Self) -> Result<(Self, Self, Self)> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::GcdOfZero);
        }
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::one(), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1)?;
            let s2 = &s0 - &(&q * &s1);
            let t2 = &t0 - &(&q * &t1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        let inv = r0.leading_coeff().inv();
        Ok((r0.scale(&inv), s0.scale(&inv), t0.scale(&inv)))
    }

    /// Monic gcd of a list, ignoring zero entries.
    pub fn gcd_all<'a>(polys: impl IntoIterator<Item = &'a Self>) -> Result<Self>
    where
        S: 'a,
    {
        let mut acc = Self::zero();
        for p in polys {
            if p.is_zero() {
                continue;
            }
            acc = if acc.is_zero() { p.monic() } else { acc.gcd(p)? };
            if acc.degree() == Some(0) {
                break;
            }
        }
        if acc.is_zero() {
            Err(Error::GcdOfZero)
        } else {
            Ok(acc)
        }
    }

    /// Monic least common multiple.
    pub fn lcm(&self, other: &Self) -> Result<Self> {
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero());
        }
        let g = self.gcd(other)?;
        let prod = self * other;
        Ok(prod.exact_quotient(&g).expect("gcd divides product").monic())
    }
}

impl<S: Scalar> Add for &UnivariatePolynomial<S> {
    type Output = UnivariatePolynomial<S>;
    fn add(self, rhs: Self) -> Self::Output {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let v = match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                (Some(a), Some(b)) => a.add_ref(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            };
            out.push(v);
        }
        UnivariatePolynomial::new(out)
    }
}

impl<S: Scalar> Sub for &UnivariatePolynomial<S> {
    type Output = UnivariatePolynomial<S>;
    fn sub(self, rhs: Self) -> Self::Output {
        self + &(-rhs)
    }
}

impl<S: Scalar> Neg for &UnivariatePolynomial<S> {
    type Output = UnivariatePolynomial<S>;
    fn neg(self) -> Self::Output {
        UnivariatePolynomial {
            coeffs: self.coeffs.iter().map(|c| c.neg_ref()).collect(),
        }
    }
}

impl<S: Scalar> Mul for &UnivariatePolynomial<S> {
    type Output = UnivariatePolynomial<S>;
    fn mul(self, rhs: Self) -> Self::Output {
        if self.is_zero() || rhs.is_zero() {
            return UnivariatePolynomial::zero();
        }
        let mut out = vec![S::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j].add_assign_ref(&a.mul_ref(b));
            }
        }
        UnivariatePolynomial::new(out)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<S: Scalar> $tr for UnivariatePolynomial<S> {
            type Output = UnivariatePolynomial<S>;
            fn $m(self, rhs: Self) -> Self::Output {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<S: Scalar> fmt::Display for UnivariatePolynomial<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let text = c.to_string();
            let (negative, magnitude) = match text.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, text),
            };
            match (first, negative) {
                (true, true) => write!(f, "-")?,
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
                (true, false) => {}
            }
            first = false;
            let unit = magnitude == "1";
            match (i, unit) {
                (0, _) => write!(f, "{magnitude}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{magnitude}*t")?,
                (_, true) => write!(f, "t^{i}")?,
                (_, false) => write!(f, "{magnitude}*t^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    type P = UnivariatePolynomial<Rational>;

    #[test]
    fn gcd_examples() {
        let a = P::from_ints(&[-1, 0, 1]);
        let b = P::from_ints(&[-1, 1]);
        assert_eq!(a.gcd(&b).unwrap(), P::from_ints(&[-1, 1]));
        assert_eq!(P::t().gcd(&P::one()).unwrap(), P::one());
        // t^3 + t = t (t^2 + 1)
        let c = P::from_ints(&[0, 1, 0, 1]);
        let d = P::from_ints(&[1, 0, 1]);
        assert_eq!(&P::t() * &d, c);
        assert_eq!(c.gcd(&d).unwrap(), d);
    }

    #[test]
    fn display() {
        assert_eq!(P::from_ints(&[1, -2, 1]).to_string(), "t^2 - 2*t + 1");
        assert_eq!(P::from_ints(&[0, -1]).to_string(), "-t");
        assert_eq!(P::zero().to_string(), "0");
    }

    #[test]
    fn gcd_of_zero_is_error() {
        assert_eq!(P::zero().gcd(&P::zero()), Err(Error::GcdOfZero));
        assert_eq!(P::zero().gcd(&P::from_ints(&[0, 2])).unwrap(), P::t());
    }

    #[test]
    fn ext_gcd_bezout() {
        let a = P::from_ints(&[3, -2, 0, 5, 1]);
        let b = P::from_ints(&[1, 1, 4]);
        let (g, s, t) = a.ext_gcd(&b).unwrap();
        assert_eq!(&(&s * &a) + &(&t * &b), g);
        assert_eq!(g, a.gcd(&b).unwrap());
    }

    #[test]
    fn div_rem_reconstructs() {
        let a = P::from_ints(&[5, 0, -3, 7, 2]);
        let b = P::from_ints(&[1, 2, 3]);
        let (q, r) = a.div_rem(&b).unwrap();
        assert!(r.deg() < 2);
        assert_eq!(&(&q * &b) + &r, a);
        assert_eq!(a.div_rem(&P::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn lcm_and_derivative() {
        let a = P::from_ints(&[1, 0, 1]);
        let b = P::from_ints(&[-1, 0, 1]);
        assert_eq!(a.lcm(&b).unwrap(), P::from_ints(&[-1, 0, 0, 0, 1]));
        assert_eq!(P::from_ints(&[4, 3, 2, 1]).derivative(), P::from_ints(&[3, 4, 3]));
        assert_eq!(P::from_ints(&[1, 1]).pow(3), P::from_ints(&[1, 3, 3, 1]));
    }
}
