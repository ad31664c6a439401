//! Division-free and fraction-free determinants over integral domains.

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;
use rustc_hash::FxHashMap;

use super::multipoly::{Accumulator, MultivariatePolynomial};
use super::unipoly::UnivariatePolynomial;
use crate::error::{Error, Result};
use crate::scalar::{FieldScalar, Scalar};

/// Ring elements the determinant kernels can work with.
pub trait DomainElement: Clone + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn exact_div(&self, rhs: &Self) -> Option<Self>;

    /// `sum_i (-1)^{neg_i} a_i b_i`.
    fn sum_of_products(terms: &[(&Self, &Self, bool)]) -> Self {
        let mut acc = Self::zero();
        for (a, b, neg) in terms {
            let p = a.mul(b);
            acc = if *neg { acc.sub(&p) } else { acc.add(&p) };
        }
        acc
    }
}

macro_rules! scalar_domain {
    ($t:ty) => {
        impl DomainElement for $t {
            fn zero() -> Self {
                <$t as num_traits::Zero>::zero()
            }
            fn one() -> Self {
                <$t as num_traits::One>::one()
            }
            fn is_zero(&self) -> bool {
                num_traits::Zero::is_zero(self)
            }
            fn add(&self, rhs: &Self) -> Self {
                self.add_ref(rhs)
            }
            fn sub(&self, rhs: &Self) -> Self {
                self.sub_ref(rhs)
            }
            fn mul(&self, rhs: &Self) -> Self {
                self.mul_ref(rhs)
            }
            fn neg(&self) -> Self {
                self.neg_ref()
            }
            fn exact_div(&self, rhs: &Self) -> Option<Self> {
                Scalar::exact_div(self, rhs)
            }
        }
    };
}

scalar_domain!(BigInt);
scalar_domain!(BigRational);
scalar_domain!(f64);

impl<S: Scalar> DomainElement for MultivariatePolynomial<S> {
    fn zero() -> Self {
        MultivariatePolynomial::zero()
    }
    fn one() -> Self {
        MultivariatePolynomial::one()
    }
    fn is_zero(&self) -> bool {
        MultivariatePolynomial::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        MultivariatePolynomial::exact_div(self, rhs)
    }
    fn sum_of_products(terms: &[(&Self, &Self, bool)]) -> Self {
        let mut acc = Accumulator::new();
        for (a, b, neg) in terms {
            acc.add_product(a, b, *neg);
        }
        acc.finish()
    }
}

impl<S: FieldScalar> DomainElement for UnivariatePolynomial<S> {
    fn zero() -> Self {
        UnivariatePolynomial::zero()
    }
    fn one() -> Self {
        UnivariatePolynomial::one()
    }
    fn is_zero(&self) -> bool {
        UnivariatePolynomial::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        self.exact_quotient(rhs)
    }
}

fn check_square<T>(m: &[Vec<T>]) -> Result<usize> {
    let n = m.len();
    for row in m {
        if row.len() != n {
            return Err(Error::NotSquare { rows: n, cols: row.len() });
        }
    }
    Ok(n)
}

/// Fraction-free (Bareiss) elimination. Every division is exact in exact
/// arithmetic; a failing division is reported as [`Error::InexactDivision`].
pub fn ff_determinant<T: DomainElement>(matrix: &[Vec<T>]) -> Result<T> {
    let n = check_square(matrix)?;
    if n == 0 {
        return Ok(T::one());
    }
    let mut m: Vec<Vec<T>> = matrix.to_vec();
    let mut negate = false;
    let mut prev = T::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return Ok(T::zero()),
            }
        }
        let (top, bottom) = m.split_at_mut(k + 1);
        let pivot_row = &top[k];
        let pivot = &pivot_row[k];
        bottom
            .par_iter_mut()
            .map(|row| -> Result<()> {
                for j in k + 1..n {
                    let num = T::sum_of_products(&[(&row[j], pivot, false), (&row[k], &pivot_row[j], true)]);
                    row[j] = num.exact_div(&prev).ok_or(Error::InexactDivision)?;
                }
                row[k] = T::zero();
                Ok(())
            })
            .collect::<Result<()>>()?;
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    Ok(if negate { det.neg() } else { det })
}

/// Determinant by memoized Laplace expansion along the columns.
///
/// The minors on the first `k` columns are indexed by their row sets; each
/// level is built from the previous one with one multiplication per nonzero
/// entry, so no division ever occurs. For the sparse Sylvester matrices with
/// small polynomial entries this beats elimination by a wide margin, because
/// every product has one short factor.
pub fn expansion_determinant<T: DomainElement>(matrix: &[Vec<T>]) -> Result<T> {
    let n = check_square(matrix)?;
    if n == 0 {
        return Ok(T::one());
    }
    assert!(n < 64, "expansion determinant supports at most 63 rows");
    let mut level: FxHashMap<u64, T> = FxHashMap::default();
    level.insert(0, T::one());
    for col in 0..n {
        let mut targets: Vec<u64> = Vec::new();
        for &mask in level.keys() {
            for (r, row) in matrix.iter().enumerate() {
                if mask & (1 << r) == 0 && !row[col].is_zero() {
                    targets.push(mask | (1 << r));
                }
            }
        }
        targets.sort_unstable();
        targets.dedup();
        let next: Vec<(u64, T)> = targets
            .par_iter()
            .filter_map(|&mask| {
                let mut parts = Vec::new();
                for (r, row) in matrix.iter().enumerate() {
                    if mask & (1 << r) == 0 || row[col].is_zero() {
                        continue;
                    }
                    if let Some(minor) = level.get(&(mask & !(1 << r))) {
                        let pos = (mask & ((1u64 << r) - 1)).count_ones() as usize;
                        parts.push((&row[col], minor, (pos + col) % 2 == 1));
                    }
                }
                let value = T::sum_of_products(&parts);
                (!value.is_zero()).then_some((mask, value))
            })
            .collect();
        level = next.into_iter().collect();
        if level.is_empty() {
            return Ok(T::zero());
        }
    }
    Ok(level.remove(&((1u64 << n) - 1)).unwrap_or_else(T::zero))
}
