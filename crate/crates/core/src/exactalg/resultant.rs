//! Sylvester resultants at declared formal degrees.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;

use super::determinant::{expansion_determinant, DomainElement};
use super::multipoly::MultivariatePolynomial;
use super::tpoly::ParametricPolynomial;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

fn check_degrees<S: Scalar>(
    f: &ParametricPolynomial<S>,
    g: &ParametricPolynomial<S>,
    deg_f: usize,
    deg_g: usize,
) -> Result<()> {
    if deg_f == 0 && deg_g == 0 {
        return Err(Error::NoVariableToEliminate);
    }
    for (p, declared) in [(f, deg_f), (g, deg_g)] {
        if let Some(actual) = p.degree() {
            if actual > declared {
                return Err(Error::DegreeBelowActual { declared, actual });
            }
        }
    }
    Ok(())
}

/// The `(deg_f + deg_g)`-square Sylvester matrix: `deg_g` shifted rows of `f`
/// followed by `deg_f` shifted rows of `g`, highest power of `t` first.
pub fn sylvester_matrix<T: DomainElement>(f: &[T], g: &[T], deg_f: usize, deg_g: usize) -> Vec<Vec<T>> {
    let size = deg_f + deg_g;
    let coeff = |p: &[T], k: usize| p.get(k).cloned().unwrap_or_else(T::zero);
    let mut rows = Vec::with_capacity(size);
    for (p, deg, count) in [(f, deg_f, deg_g), (g, deg_g, deg_f)] {
        for shift in 0..count {
            let mut row = vec![T::zero(); size];
            for k in 0..=deg {
                row[shift + k] = coeff(p, deg - k);
            }
            rows.push(row);
        }
    }
    rows
}

/// `Res_t(f, g)` over any coefficient scalar, without normalization.
pub fn sylvester_resultant_generic<S: Scalar>(
    f: &ParametricPolynomial<S>,
    g: &ParametricPolynomial<S>,
    deg_f: usize,
    deg_g: usize,
) -> Result<MultivariatePolynomial<S>> {
    check_degrees(f, g, deg_f, deg_g)?;
    let m = sylvester_matrix(f.coeffs(), g.coeffs(), deg_f, deg_g);
    expansion_determinant(&m)
}

/// Least common multiple of the coefficient denominators.
fn denominator_lcm(p: &ParametricPolynomial<BigRational>) -> BigInt {
    let mut l = <BigInt as One>::one();
    for c in p.coeffs() {
        for (_, x) in c.terms() {
            l = l.lcm(x.denom());
        }
    }
    l
}

/// `Res_t(f, g)` over the rationals, without normalization.
///
/// Both inputs are scaled to integer coefficients first so the determinant
/// runs over `Z`; the scaling is undone at the end using
/// `Res(a f, b g) = a^{deg_g} b^{deg_f} Res(f, g)`.
pub fn sylvester_resultant(
    f: &ParametricPolynomial<BigRational>,
    g: &ParametricPolynomial<BigRational>,
    deg_f: usize,
    deg_g: usize,
) -> Result<MultivariatePolynomial<BigRational>> {
    check_degrees(f, g, deg_f, deg_g)?;
    let to_int = |p: &ParametricPolynomial<BigRational>, scale: &BigInt| -> Vec<MultivariatePolynomial<BigInt>> {
        p.coeffs()
            .iter()
            .map(|c| c.map_coeffs(|x| x.numer() * (scale / x.denom())))
            .collect()
    };
    let cf = denominator_lcm(f);
    let cg = denominator_lcm(g);
    let m = sylvester_matrix(&to_int(f, &cf), &to_int(g, &cg), deg_f, deg_g);
    let det = expansion_determinant(&m)?;
    let factor = num_traits::pow(cf, deg_g) * num_traits::pow(cg, deg_f);
    let factor = BigRational::from_integer(factor);
    Ok(det.map_coeffs(|x| BigRational::from_integer(x.clone()) / &factor))
}
