//! Smith form of a `2 x d` matrix over `S[t]`.

use crate::error::{Error, Result};
use crate::exactalg::{ff_determinant, PolynomialVector, UnivariatePolynomial};
use crate::scalar::FieldScalar;

type Poly<S> = UnivariatePolynomial<S>;
type Matrix<S> = Vec<Vec<Poly<S>>>;

/// `W = U * S * V` with `S = [[1, 0, ..], [0, q, 0, ..]]`, `U` and `V`
/// unimodular.
#[derive(Clone, Debug, PartialEq)]
pub struct SmithDecomposition<S> {
    pub u: Matrix<S>,
    pub q: Poly<S>,
    pub v: Matrix<S>,
}

fn identity<S: FieldScalar>(n: usize) -> Matrix<S> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { Poly::one() } else { Poly::zero() }).collect())
        .collect()
}

/// Plain matrix product over `S[t]`.
pub fn mat_mul<S: FieldScalar>(a: &[Vec<Poly<S>>], b: &[Vec<Poly<S>>]) -> Matrix<S> {
    let inner = b.len();
    let cols = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).fold(Poly::zero(), |acc, k| &acc + &(&row[k] * &b[k][j])))
                .collect()
        })
        .collect()
}

impl<S: FieldScalar> SmithDecomposition<S> {
    pub fn d(&self) -> usize {
        self.v.len()
    }

    /// The `2 x d` middle factor.
    pub fn s_matrix(&self) -> Matrix<S> {
        let d = self.d();
        let mut s = vec![vec![Poly::zero(); d]; 2];
        s[0][0] = Poly::one();
        s[1][1] = self.q.clone();
        s
    }

    /// `U * S * V`.
    pub fn reconstruct(&self) -> Matrix<S> {
        mat_mul(&mat_mul(&self.u, &self.s_matrix()), &self.v)
    }

    pub fn det_u(&self) -> Result<Poly<S>> {
        ff_determinant(&self.u)
    }

    pub fn det_v(&self) -> Result<Poly<S>> {
        ff_determinant(&self.v)
    }

    /// The first two rows of `V`, which span the saturated module.
    pub fn leading_rows(&self) -> (PolynomialVector<S>, PolynomialVector<S>) {
        (PolynomialVector::new(self.v[0].clone()), PolynomialVector::new(self.v[1].clone()))
    }
}

/// Working state with the invariant `W = U * cur * V`.
struct Reduction<S> {
    cur: [Vec<Poly<S>>; 2],
    u: Matrix<S>,
    v: Matrix<S>,
}

impl<S: FieldScalar> Reduction<S> {
    fn swap_rows(&mut self) {
        self.cur.swap(0, 1);
        for row in &mut self.u {
            row.swap(0, 1);
        }
    }

    /// `row_i += h * row_j`.
    fn add_row(&mut self, i: usize, j: usize, h: &Poly<S>) {
        let src = self.cur[j].clone();
        for (x, y) in self.cur[i].iter_mut().zip(&src) {
            *x = &*x + &(y * h);
        }
        for row in &mut self.u {
            row[j] = &row[j] - &(&row[i] * h);
        }
    }

    fn scale_row(&mut self, i: usize, c: &S) {
        for x in &mut self.cur[i] {
            *x = x.scale(c);
        }
        let inv = c.inv();
        for row in &mut self.u {
            row[i] = row[i].scale(&inv);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for row in &mut self.cur {
            row.swap(i, j);
        }
        self.v.swap(i, j);
    }

    /// `col_j += h * col_i`.
    fn add_col(&mut self, j: usize, i: usize, h: &Poly<S>) {
        for row in &mut self.cur {
            row[j] = &row[j] + &(&row[i] * h);
        }
        let vj = self.v[j].clone();
        for (x, y) in self.v[i].iter_mut().zip(&vj) {
            *x = &*x - &(y * h);
        }
    }

    /// Position of a nonzero entry of least degree among `rows x cols`.
    fn min_entry(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, usize)> = None;
        for r in rows {
            for c in cols.clone() {
                if let Some(deg) = self.cur[r][c].degree() {
                    if best.is_none_or(|(_, _, b)| deg < b) {
                        best = Some((r, c, deg));
                    }
                }
            }
        }
        best.map(|(r, c, _)| (r, c))
    }

    /// Clears row `r` right of column `c` by Euclidean column operations;
    /// returns whether a nonzero remainder was left behind.
    fn sweep_row(&mut self, r: usize, c: usize) -> Result<bool> {
        let mut dirty = false;
        for j in c + 1..self.cur[r].len() {
            if self.cur[r][j].is_zero() {
                continue;
            }
            let (quot, rem) = self.cur[r][j].div_rem(&self.cur[r][c])?;
            self.add_col(j, c, &-&quot);
            dirty |= !rem.is_zero();
        }
        Ok(dirty)
    }
}

/// Smith form of the matrix with rows `a` and `b`.
///
/// Requires the entries to be coprime and the rows to be independent over
/// `S(t)`.
pub fn smith_form<S: FieldScalar>(
    a: &PolynomialVector<S>,
    b: &PolynomialVector<S>,
) -> Result<SmithDecomposition<S>> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch { left: a.len(), right: b.len() });
    }
    let d = a.len();
    if d < 2 {
        return Err(Error::DependentQuasiGenerators);
    }
    let mut w = Reduction {
        cur: [a.entries().to_vec(), b.entries().to_vec()],
        u: identity(2),
        v: identity(d),
    };

    // First invariant factor: gcd of all entries, moved to (0, 0).
    loop {
        let (r, c) = w.min_entry(0..2, 0..d).ok_or(Error::DependentQuasiGenerators)?;
        if r != 0 {
            w.swap_rows();
        }
        w.swap_cols(0, c);
        let mut dirty = w.sweep_row(0, 0)?;
        if !w.cur[1][0].is_zero() {
            let (quot, rem) = w.cur[1][0].div_rem(&w.cur[0][0])?;
            w.add_row(1, 0, &-&quot);
            dirty |= !rem.is_zero();
        }
        if dirty {
            continue;
        }
        let pivot = w.cur[0][0].clone();
        match (1..d).find(|&j| !pivot.divides(&w.cur[1][j])) {
            Some(_) => w.add_row(0, 1, &Poly::one()),
            None => break,
        }
    }
    let pivot = w.cur[0][0].clone();
    if pivot.deg() > 0 {
        return Err(Error::NotReduced(pivot.monic().to_string()));
    }
    w.scale_row(0, &pivot.leading_coeff().inv());

    // Second invariant factor: gcd of the remaining row.
    loop {
        let (_, c) = w.min_entry(1..2, 1..d).ok_or(Error::DependentQuasiGenerators)?;
        w.swap_cols(1, c);
        if !w.sweep_row(1, 1)? {
            break;
        }
    }
    let lc = w.cur[1][1].leading_coeff();
    w.scale_row(1, &lc.inv());
    let q = w.cur[1][1].clone();
    Ok(SmithDecomposition { u: w.u, q, v: w.v })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{PolyVec, Rational, UniPoly};

    fn check(a: &PolyVec, b: &PolyVec) -> SmithDecomposition<Rational> {
        let s = smith_form(a, b).unwrap();
        assert_eq!(s.reconstruct(), vec![a.entries().to_vec(), b.entries().to_vec()]);
        assert_eq!(s.det_u().unwrap().deg(), 0);
        assert!(!s.det_u().unwrap().is_zero());
        assert_eq!(s.det_v().unwrap().deg(), 0);
        assert!(!s.det_v().unwrap().is_zero());
        s
    }

    #[test]
    fn identity_rows() {
        let a = PolyVec::unit(3, 0);
        let b = PolyVec::unit(3, 1);
        let s = check(&a, &b);
        assert_eq!(s.q, UniPoly::one());
        assert_eq!(s.u, identity::<Rational>(2));
        assert_eq!(s.v, identity::<Rational>(3));
    }

    #[test]
    fn two_by_two_minor() {
        let a = PolyVec::from_ints(&[&[1], &[0, 1]]);
        let b = PolyVec::from_ints(&[&[0, 1], &[1]]);
        let s = check(&a, &b);
        assert_eq!(s.q, UniPoly::from_ints(&[-1, 0, 1]));
    }

    #[test]
    fn rejects_common_factor() {
        let a = PolyVec::from_ints(&[&[0, 1], &[]]);
        let b = PolyVec::from_ints(&[&[], &[0, 2]]);
        assert_eq!(smith_form(&a, &b), Err(Error::NotReduced("t".into())));
    }

    #[test]
    fn rejects_dependent_rows() {
        let a = PolyVec::from_ints(&[&[1], &[0, 1], &[2]]);
        let b = a.scale(&UniPoly::from_ints(&[1, 1]));
        assert_eq!(smith_form(&a, &b), Err(Error::DependentQuasiGenerators));
    }
}
