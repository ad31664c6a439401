//! Degree data of the Plücker curve `t -> A(t) ∧ B(t)` and the implicit
//! equation of a module.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::basis::{mu_basis, MuBasis};
use crate::error::{Error, Result};
use crate::exactalg::{canonical_form, sylvester_resultant, MultivariatePolynomial, PolynomialVector, UnivariatePolynomial, Var};

type Poly = UnivariatePolynomial<BigRational>;
type Vector = PolynomialVector<BigRational>;

const SAMPLES: usize = 3;
const ATTEMPTS: usize = 10;

/// Degrees tying together the module, its Plücker curve and `S_M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleDegreeReport {
    pub deg_wedge: usize,
    pub deg_gcd: usize,
    pub k: usize,
    pub deg_hypersurface: usize,
    pub deg_module: usize,
}

fn random_parameter(rng: &mut ChaCha8Rng) -> BigRational {
    let num: i64 = rng.gen_range(-1000..=1000);
    let den: i64 = rng.gen_range(1..=97);
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Number of parameters (with multiplicity) mapping to the point `P(t0)`,
/// read off as the degree of `gcd_{i<j} (P_i(t) c_j - P_j(t) c_i)`.
fn fiber_degree(p: &Vector, t0: &BigRational) -> Result<usize> {
    let c = p.eval(t0);
    let mut minors = Vec::new();
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            minors.push(&p[i].scale(&c[j]) - &p[j].scale(&c[i]));
        }
    }
    Ok(Poly::gcd_all(minors.iter())?.deg())
}

/// Degree `k` of the map `t -> (A ∧ B)(t) / gcd`, estimated by counting the
/// fiber over random points. Three samples must agree; after ten failed
/// rounds the sampling is reported as degenerate.
pub fn plucker_param_degree(a: &Vector, b: &Vector, seed: u64) -> Result<usize> {
    let wedge = a.wedge(b)?;
    if wedge.is_zero() {
        return Err(Error::DependentQuasiGenerators);
    }
    let g = wedge.content_gcd()?;
    let p = wedge.exact_div(&g).expect("content divides every entry");
    if p.deg() == 0 {
        // A constant curve is traced once.
        return Ok(1);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..ATTEMPTS {
        let mut ks = Vec::with_capacity(SAMPLES);
        while ks.len() < SAMPLES {
            let t0 = random_parameter(&mut rng);
            if p.eval(&t0).iter().all(Zero::is_zero) {
                continue;
            }
            ks.push(fiber_degree(&p, &t0)?);
        }
        if ks.iter().all(|&k| k == ks[0]) {
            return Ok(ks[0]);
        }
    }
    Err(Error::DegenerateSampling)
}

/// Scales a nonzero vector to coprime integer coefficients. The leading
/// sign is kept.
pub fn integer_normalized(v: &Vector) -> Vector {
    let mut den = BigInt::one();
    let mut num = BigInt::zero();
    for e in v.entries() {
        for c in e.coeffs() {
            den = den.lcm(c.denom());
            num = num.gcd(c.numer());
        }
    }
    if num.is_zero() {
        return v.clone();
    }
    let factor = BigRational::new(den, num.abs());
    Vector::new(v.entries().iter().map(|e| e.scale(&factor)).collect())
}

/// Computes the μ-basis together with `k`; the basis rows come back with
/// coprime integer coefficients.
pub fn mu_basis_with_k(a: &Vector, b: &Vector, seed: u64) -> Result<MuBasis<BigRational>> {
    let mut mb = mu_basis(a, b)?;
    mb.a_tilde = integer_normalized(&mb.a_tilde);
    mb.b_tilde = integer_normalized(&mb.b_tilde);
    mb.k = Some(plucker_param_degree(a, b, seed)?);
    Ok(mb)
}

pub fn degree_report(a: &Vector, b: &Vector, seed: u64) -> Result<ModuleDegreeReport> {
    let wedge = a.wedge(b)?;
    let deg_wedge = wedge.deg();
    let deg_gcd = wedge.content_gcd()?.deg();
    let k = plucker_param_degree(a, b, seed)?;
    let deg_module = mu_basis(a, b)?.degree();
    if deg_module != deg_wedge - deg_gcd {
        return Err(Error::Inconsistent(format!(
            "module degree {deg_module} differs from deg(A^B) - deg q = {}",
            deg_wedge - deg_gcd
        )));
    }
    if deg_module % k != 0 {
        return Err(Error::Inconsistent(format!("k = {k} does not divide the module degree {deg_module}")));
    }
    Ok(ModuleDegreeReport { deg_wedge, deg_gcd, k, deg_hypersurface: deg_module / k, deg_module })
}

/// Canonical `Res_t(Ã(t)·x, B̃(t)·x)` in the first `d` Lie coordinates.
pub fn mu_resultant(basis: &MuBasis<BigRational>) -> Result<MultivariatePolynomial<BigRational>> {
    let d = basis.a_tilde.len();
    if d > Var::ALL.len() {
        return Err(Error::LengthMismatch { left: d, right: Var::ALL.len() });
    }
    mu_resultant_in(basis, &Var::ALL[..d])
}

/// [`mu_resultant`] with an explicit variable for each coordinate.
pub fn mu_resultant_in(basis: &MuBasis<BigRational>, vars: &[Var]) -> Result<MultivariatePolynomial<BigRational>> {
    let (da, db) = basis.deg_pair;
    if da + db == 0 {
        return Err(Error::NoHypersurface);
    }
    let f = basis.a_tilde.linear_form(vars);
    let g = basis.b_tilde.linear_form(vars);
    canonical_form(&sylvester_resultant(&f, &g, da, db)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::PolyVec;

    #[test]
    fn constant_module() {
        let a = PolyVec::unit(3, 0);
        let b = PolyVec::unit(3, 1);
        assert_eq!(plucker_param_degree(&a, &b, 1).unwrap(), 1);
        let r = degree_report(&a, &b, 1).unwrap();
        assert_eq!((r.deg_wedge, r.deg_gcd, r.deg_hypersurface), (0, 0, 0));
        let mb = mu_basis(&a, &b).unwrap();
        assert_eq!(mu_resultant(&mb), Err(Error::NoHypersurface));
    }

    #[test]
    fn twice_traced_conic() {
        // A line pencil through t -> t^2 is a degree-2 parametrization.
        let a = PolyVec::from_ints(&[&[1], &[], &[0, 0, 1]]);
        let b = PolyVec::from_ints(&[&[], &[1], &[0, 0, 0, 0, 1]]);
        assert_eq!(plucker_param_degree(&a, &b, 7).unwrap(), 2);
    }

    #[test]
    fn rational_normal_curve_once() {
        let a = PolyVec::from_ints(&[&[1], &[], &[0, 1]]);
        let b = PolyVec::from_ints(&[&[], &[1], &[0, 0, 1]]);
        assert_eq!(plucker_param_degree(&a, &b, 7).unwrap(), 1);
    }
}
