//! Polynomials in `t` with multivariate coefficients, the inputs of
//! elimination.

use super::multipoly::{MultivariatePolynomial, Var, NVARS};
use super::unipoly::UnivariatePolynomial;
use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Debug)]
pub struct ParametricPolynomial<S> {
    coeffs: Vec<MultivariatePolynomial<S>>,
}

impl<S: Scalar> ParametricPolynomial<S> {
    pub fn new(mut coeffs: Vec<MultivariatePolynomial<S>>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    /// Lifts a univariate polynomial; every coefficient becomes a constant.
    pub fn from_univariate(p: &UnivariatePolynomial<S>) -> Self {
        Self::new(p.coeffs().iter().map(|c| MultivariatePolynomial::constant(c.clone())).collect())
    }

    pub fn coeffs(&self) -> &[MultivariatePolynomial<S>] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> MultivariatePolynomial<S> {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    /// Coefficient of the highest power of `t`.
    pub fn leading_coeff(&self) -> MultivariatePolynomial<S> {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.scale(&S::from_int(i as i64)))
                .collect(),
        )
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|k| &self.coeff(k) + &other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|k| &self.coeff(k) - &other.coeff(k)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![MultivariatePolynomial::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Self::new(out)
    }

    pub fn mul_univariate(&self, p: &UnivariatePolynomial<S>) -> Self {
        self.mul(&Self::from_univariate(p))
    }

    pub fn scale(&self, c: &S) -> Self {
        Self::new(self.coeffs.iter().map(|x| x.scale(c)).collect())
    }

    /// Applies a map to every coefficient (substitution, specialization).
    pub fn map_coeffs(&self, f: impl Fn(&MultivariatePolynomial<S>) -> MultivariatePolynomial<S>) -> Self {
        Self::new(self.coeffs.iter().map(f).collect())
    }

    pub fn specialize(&self, v: Var, value: &S) -> Self {
        self.map_coeffs(|c| c.specialize(v, value))
    }

    pub fn compose(&self, images: &[MultivariatePolynomial<S>; NVARS]) -> Self {
        self.map_coeffs(|c| c.compose(images))
    }

    /// Evaluates the coefficients at a point, leaving a polynomial in `t`.
    pub fn eval_coeffs(&self, point: &[S; NVARS]) -> UnivariatePolynomial<S> {
        UnivariatePolynomial::new(self.coeffs.iter().map(|c| c.eval(point)).collect())
    }

    /// Substitutes a value for `t`.
    pub fn eval_t(&self, t: &S) -> MultivariatePolynomial<S> {
        let mut acc = MultivariatePolynomial::zero();
        for c in self.coeffs.iter().rev() {
            acc = &acc.scale(t) + c;
        }
        acc
    }
}
