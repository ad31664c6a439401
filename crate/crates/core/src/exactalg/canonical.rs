//! Normal forms for polynomials that are only defined up to a scalar, and
//! the `u`-substitution that pulls an equation back to `P^4`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::multipoly::{Monomial, MultivariatePolynomial, Var};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

type MultiPoly = MultivariatePolynomial<BigRational>;

/// Scales `f` to coprime integer coefficients with a positive coefficient on
/// the graded-lex greatest monomial.
pub fn canonical_form(f: &MultiPoly) -> Result<MultiPoly> {
    let (_, lead) = f.leading_term().ok_or(Error::ZeroPolynomial("canonical_form"))?;
    let mut den = BigInt::one();
    let mut num = BigInt::zero();
    for (_, c) in f.terms() {
        den = den.lcm(c.denom());
        num = num.gcd(c.numer());
    }
    let mut factor = BigRational::new(den, num);
    if lead.is_negative() {
        factor = -factor;
    }
    Ok(f.scale(&factor))
}

/// Which quadric replaces `u * y0` in [`substitute_u`].
#[derive(Clone, Debug, PartialEq)]
pub enum SubstitutionMode {
    /// `u = (y1^2 + y2^2 + y3^2 - y4^2) / y0`.
    Gamma,
    /// `u = (y1^2 + y2^2 + y3^2 - d^2 y0^2) / y0`.
    Offset(BigRational),
}

impl SubstitutionMode {
    pub fn quadric(&self) -> MultiPoly {
        let sq = |v: Var| MultiPoly::term(Monomial::var_pow(v, 2), BigRational::one());
        let base = &(&sq(Var::Y1) + &sq(Var::Y2)) + &sq(Var::Y3);
        match self {
            Self::Gamma => &base - &sq(Var::Y4),
            Self::Offset(d) => &base - &sq(Var::Y0).scale(&(d * d)),
        }
    }
}

/// Substitutes `u = Q / y0`, clears the denominator with the least power of
/// `y0` and canonicalizes. Returns the result together with that power.
pub fn substitute_u_with_exponent(f: &MultiPoly, mode: &SubstitutionMode) -> Result<(MultiPoly, u32)> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial("substitute_u"));
    }
    let k = f.degree_in(Var::U);
    let q = mode.quadric();
    let mut q_powers = vec![MultiPoly::one()];
    for a in 1..=k as usize {
        q_powers.push(&q_powers[a - 1] * &q);
    }
    let mut acc = super::multipoly::Accumulator::new();
    for (m, c) in f.terms() {
        let a = m.exponent(Var::U);
        let rest = m.without(Var::U) * Monomial::var_pow(Var::Y0, k - a);
        acc.add(&q_powers[a as usize].mul_term(rest, c));
    }
    let out = acc.finish();
    if out.is_zero() {
        return Err(Error::ZeroPolynomial("substitute_u"));
    }
    let strip = k.min(out.valuation_in(Var::Y0));
    let out = out.div_var_pow(Var::Y0, strip);
    Ok((canonical_form(&out)?, k - strip))
}

/// [`substitute_u_with_exponent`] without the exponent.
pub fn substitute_u(f: &MultiPoly, mode: &SubstitutionMode) -> Result<MultiPoly> {
    substitute_u_with_exponent(f, mode).map(|(p, _)| p)
}

/// Degree counting `u` twice, `y0` not at all and `y1..y4` once.
pub fn weighted_degree<S: Scalar>(f: &MultivariatePolynomial<S>) -> Result<u32> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial("weighted_degree"));
    }
    Ok(f.terms()
        .iter()
        .map(|(m, _)| {
            let e = m.exponents();
            2 * e[0] + e[2] + e[3] + e[4] + e[5]
        })
        .max()
        .unwrap_or(0))
}

/// Exact quotient `f / g`; `Ok(None)` when `g` does not divide `f`.
pub fn exact_divide<S: Scalar>(
    f: &MultivariatePolynomial<S>,
    g: &MultivariatePolynomial<S>,
) -> Result<Option<MultivariatePolynomial<S>>> {
    if g.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(f.exact_div(g))
}
