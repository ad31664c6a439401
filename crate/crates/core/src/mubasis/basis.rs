//! μ-bases of modules with two quasi-generators.

use super::smith::smith_form;
use crate::error::{Error, Result};
use crate::exactalg::{independent_pair, PolynomialVector, UnivariatePolynomial};
use crate::scalar::FieldScalar;

type Poly<S> = UnivariatePolynomial<S>;
type Vector<S> = PolynomialVector<S>;

/// Quasi-generators of minimal total degree.
#[derive(Clone, Debug, PartialEq)]
pub struct MuBasis<S> {
    pub a_tilde: Vector<S>,
    pub b_tilde: Vector<S>,
    pub deg_pair: (usize, usize),
    pub plucker_gcd: Poly<S>,
    /// Degree of the Plücker parametrization when it has been computed.
    pub k: Option<usize>,
}

impl<S: FieldScalar> MuBasis<S> {
    pub fn degree(&self) -> usize {
        self.deg_pair.0 + self.deg_pair.1
    }

    /// `LV(Ã) ∧ LV(B̃) != 0`.
    pub fn leading_vectors_independent(&self) -> bool {
        independent_pair(&self.a_tilde.leading_vector(), &self.b_tilde.leading_vector()).is_some()
    }
}

/// If `LV(x) = c LV(y)` for a scalar `c`, returns `c`.
fn leading_ratio<S: FieldScalar>(x: &Vector<S>, y: &Vector<S>) -> Option<S> {
    let lx = x.leading_vector();
    let ly = y.leading_vector();
    let p = ly.iter().position(|c| !c.is_zero())?;
    let c = lx[p].div_ref(&ly[p]);
    lx.iter()
        .zip(&ly)
        .all(|(a, b)| *a == c.mul_ref(b))
        .then_some(c)
}

/// Divides a vector by the gcd of its entries; the saturated module does not
/// see such factors.
fn primitive_part<S: FieldScalar>(v: &Vector<S>) -> Result<Vector<S>> {
    if v.is_zero() {
        return Err(Error::DependentQuasiGenerators);
    }
    let g = v.content_gcd()?;
    Ok(v.exact_div(&g).expect("content divides every entry"))
}

/// Computes a μ-basis of `<a, b>`: the Smith form makes the Plücker gcd
/// constant, then degree reductions make the leading vectors independent.
pub fn mu_basis<S: FieldScalar>(a: &Vector<S>, b: &Vector<S>) -> Result<MuBasis<S>> {
    let smith = smith_form(&primitive_part(a)?, &primitive_part(b)?)?;
    let (mut r1, mut r2) = smith.leading_rows();
    loop {
        let (d1, d2) = (r1.deg(), r2.deg());
        // The larger row is reduced; on a tie the second one.
        if d1 > d2 {
            match leading_ratio(&r1, &r2) {
                Some(c) => r1 = r1.sub_scaled(&Poly::monomial(c, d1 - d2), &r2),
                None => break,
            }
        } else {
            match leading_ratio(&r2, &r1) {
                Some(c) => r2 = r2.sub_scaled(&Poly::monomial(c, d2 - d1), &r1),
                None => break,
            }
        }
    }
    let plucker_gcd = r1.wedge(&r2)?.content_gcd()?;
    if plucker_gcd.deg() != 0 {
        return Err(Error::Inconsistent(format!("Plücker gcd of the reduced basis is {plucker_gcd}")));
    }
    Ok(MuBasis {
        deg_pair: (r1.deg(), r2.deg()),
        a_tilde: r1,
        b_tilde: r2,
        plucker_gcd,
        k: None,
    })
}

/// Solves `c = h1 Ã + h2 B̃` by cancelling the top coefficient of the
/// remainder, which is possible because the leading vectors are
/// independent. `None` if `c` is not in the module.
pub fn module_membership<S: FieldScalar>(c: &Vector<S>, basis: &MuBasis<S>) -> Option<(Poly<S>, Poly<S>)> {
    let (a, b) = (&basis.a_tilde, &basis.b_tilde);
    let (da, db) = basis.deg_pair;
    let la = a.leading_vector();
    let lb = b.leading_vector();
    let (i, j, det) = independent_pair(&la, &lb)?;
    let mut rem = c.clone();
    let mut h1 = Poly::zero();
    let mut h2 = Poly::zero();
    while let Some(m) = rem.degree() {
        let top = rem.coeff_vector(m);
        let (alpha, beta) = match (m >= da, m >= db) {
            (true, true) => (
                top[i].mul_ref(&lb[j]).sub_ref(&top[j].mul_ref(&lb[i])).div_ref(&det),
                la[i].mul_ref(&top[j]).sub_ref(&la[j].mul_ref(&top[i])).div_ref(&det),
            ),
            (true, false) => {
                let p = la.iter().position(|x| !x.is_zero())?;
                (top[p].div_ref(&la[p]), S::zero())
            }
            (false, true) => {
                let p = lb.iter().position(|x| !x.is_zero())?;
                (S::zero(), top[p].div_ref(&lb[p]))
            }
            (false, false) => return None,
        };
        let fits = top
            .iter()
            .zip(la.iter().zip(&lb))
            .all(|(t, (x, y))| *t == alpha.mul_ref(x).add_ref(&beta.mul_ref(y)));
        if !fits {
            return None;
        }
        if !alpha.is_zero() {
            let h = Poly::monomial(alpha, m - da);
            rem = rem.sub_scaled(&h, a);
            h1 = &h1 + &h;
        }
        if !beta.is_zero() {
            let h = Poly::monomial(beta, m - db);
            rem = rem.sub_scaled(&h, b);
            h2 = &h2 + &h;
        }
    }
    Some((h1, h2))
}

/// Rank of a list of row vectors over the fraction field `S(t)`, by
/// fraction-free elimination.
pub fn rank_over_fraction_field<S: FieldScalar>(rows: &[Vector<S>]) -> usize {
    let mut m: Vec<Vec<Poly<S>>> = rows.iter().map(|r| r.entries().to_vec()).collect();
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot_row = m[rank].clone();
        for row in m.iter_mut().skip(rank + 1) {
            if row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                *x = &(&*x * &pivot_row[col]) - &(y * &factor);
            }
            // Keep entries small: divide out the row content.
            if let Ok(g) = Poly::gcd_all(row.iter()) {
                for x in row.iter_mut() {
                    *x = x.exact_quotient(&g).expect("content divides");
                }
            }
        }
        rank += 1;
    }
    rank
}
