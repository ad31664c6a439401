//! Row vectors over `S[t]` and their Plücker coordinates.

use std::ops::Index;

use super::multipoly::{Monomial, MultivariatePolynomial, Var};
use super::tpoly::ParametricPolynomial;
use super::unipoly::UnivariatePolynomial;
use crate::error::{Error, Result};
use crate::scalar::{FieldScalar, Scalar};

#[derive(Clone, PartialEq, Debug)]
pub struct PolynomialVector<S> {
    entries: Vec<UnivariatePolynomial<S>>,
}

impl<S: Scalar> PolynomialVector<S> {
    pub fn new(entries: Vec<UnivariatePolynomial<S>>) -> Self {
        Self { entries }
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Self::new(rows.iter().map(|r| UnivariatePolynomial::from_ints(r)).collect())
    }

    pub fn zeros(len: usize) -> Self {
        Self::new(vec![UnivariatePolynomial::zero(); len])
    }

    /// Standard basis vector `e_i` of length `len`.
    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = Self::zeros(len);
        v.entries[i] = UnivariatePolynomial::one();
        v
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[UnivariatePolynomial<S>] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<UnivariatePolynomial<S>> {
        self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    /// Maximal entry degree; `None` for the zero vector.
    pub fn degree(&self) -> Option<usize> {
        self.entries.iter().filter_map(|e| e.degree()).max()
    }

    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    /// Coefficient vector of `t^deg`.
    pub fn leading_vector(&self) -> Vec<S> {
        match self.degree() {
            Some(d) => self.entries.iter().map(|e| e.coeff(d)).collect(),
            None => vec![S::zero(); self.len()],
        }
    }

    /// Coefficient vector of `t^k`.
    pub fn coeff_vector(&self, k: usize) -> Vec<S> {
        self.entries.iter().map(|e| e.coeff(k)).collect()
    }

    pub fn eval(&self, t: &S) -> Vec<S> {
        self.entries.iter().map(|e| e.eval(t)).collect()
    }

    pub fn derivative(&self) -> Self {
        Self::new(self.entries.iter().map(|e| e.derivative()).collect())
    }

    pub fn scale(&self, h: &UnivariatePolynomial<S>) -> Self {
        Self::new(self.entries.iter().map(|e| e * h).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::new(self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect())
    }

    /// `self - h * other`.
    pub fn sub_scaled(&self, h: &UnivariatePolynomial<S>, other: &Self) -> Self {
        Self::new(
            self.entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a - &(b * h))
                .collect(),
        )
    }

    /// Standard dot product with a polynomial vector.
    pub fn dot(&self, other: &Self) -> UnivariatePolynomial<S> {
        self.entries
            .iter()
            .zip(&other.entries)
            .fold(UnivariatePolynomial::zero(), |acc, (a, b)| &acc + &(a * b))
    }

    /// The pencil `self(t) . x` for `x = (vars[0], .., vars[d-1])`, a
    /// polynomial in `t` whose coefficients are linear forms.
    pub fn linear_form(&self, vars: &[Var]) -> ParametricPolynomial<S> {
        assert_eq!(vars.len(), self.len(), "one variable per entry");
        let deg = self.deg();
        let coeffs = (0..=deg)
            .map(|k| {
                let terms = vars
                    .iter()
                    .zip(&self.entries)
                    .map(|(&v, e)| (Monomial::var(v), e.coeff(k)))
                    .collect();
                MultivariatePolynomial::from_terms(terms)
            })
            .collect();
        ParametricPolynomial::new(coeffs)
    }

    /// Plücker coordinates: the minors `[i,j] = A_i B_j - A_j B_i`, `i < j`,
    /// in lexicographic order.
    pub fn wedge(&self, other: &Self) -> Result<Self> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch { left: self.len(), right: other.len() });
        }
        let d = self.len();
        let mut out = Vec::with_capacity(d * (d - 1) / 2);
        for i in 0..d {
            for j in i + 1..d {
                out.push(&(&self.entries[i] * &other.entries[j]) - &(&self.entries[j] * &other.entries[i]));
            }
        }
        Ok(Self::new(out))
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T + Copy) -> PolynomialVector<T> {
        PolynomialVector::new(self.entries.iter().map(|e| e.map(f)).collect())
    }
}

impl<S: FieldScalar> PolynomialVector<S> {
    /// Monic gcd of the nonzero entries.
    pub fn content_gcd(&self) -> Result<UnivariatePolynomial<S>> {
        UnivariatePolynomial::gcd_all(self.entries.iter())
    }

    /// Divides every entry by `g`, which must divide each of them.
    pub fn exact_div(&self, g: &UnivariatePolynomial<S>) -> Option<Self> {
        self.entries
            .iter()
            .map(|e| e.exact_quotient(g))
            .collect::<Option<Vec<_>>>()
            .map(Self::new)
    }
}

impl<S> Index<usize> for PolynomialVector<S> {
    type Output = UnivariatePolynomial<S>;
    fn index(&self, i: usize) -> &Self::Output {
        &self.entries[i]
    }
}

/// Lowest-index 2x2 minor of two constant vectors that is nonzero, if any.
pub fn independent_pair<S: Scalar>(a: &[S], b: &[S]) -> Option<(usize, usize, S)> {
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            let m = a[i].mul_ref(&b[j]).sub_ref(&a[j].mul_ref(&b[i]));
            if !m.is_zero() {
                return Some((i, j, m));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    type V = PolynomialVector<Rational>;

    #[test]
    fn wedge_unit_vectors() {
        let a = V::unit(3, 0);
        let b = V::unit(3, 1);
        assert_eq!(a.wedge(&b).unwrap(), V::from_ints(&[&[1], &[], &[]]));
    }

    #[test]
    fn wedge_by_direct_expansion() {
        // A = (t, t^2, 1), B = (1, t, 0):
        // [1,2] = t*t - t^2*1 = 0, [1,3] = t*0 - 1*1 = -1, [2,3] = t^2*0 - 1*t = -t
        let a = V::from_ints(&[&[0, 1], &[0, 0, 1], &[1]]);
        let b = V::from_ints(&[&[1], &[0, 1], &[]]);
        assert_eq!(a.wedge(&b).unwrap(), V::from_ints(&[&[], &[-1], &[0, -1]]));
    }

    #[test]
    fn wedge_length_mismatch() {
        assert_eq!(
            V::zeros(3).wedge(&V::zeros(4)),
            Err(Error::LengthMismatch { left: 3, right: 4 })
        );
    }

    #[test]
    fn leading_vector_and_degree() {
        let a = V::from_ints(&[&[1, 2], &[0, 0, 3], &[5]]);
        assert_eq!(a.degree(), Some(2));
        assert_eq!(a.leading_vector(), vec![Rational::from_int(0), Rational::from_int(3), Rational::from_int(0)]);
        assert_eq!(V::zeros(2).degree(), None);
    }
}
