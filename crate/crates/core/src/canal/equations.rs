//! Implicit equations of the dual variety, its offsets, the isotropic
//! hypersurface and the canal surface, plus the naive envelope resultants
//! they are compared against.

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::spine::{build_D_Dprime, build_E_Eprime, SpineCurve};
use crate::error::{Error, Result};
use crate::exactalg::{canonical_form, substitute_u_with_exponent, sylvester_resultant, weighted_degree, SubstitutionMode, Var};
use crate::mubasis::{mu_basis_with_k, MuBasis};
use crate::{MultiPoly, PolyVec, TPoly, UniPoly};

/// Knobs shared by the equation pipelines.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PipelineOptions {
    /// Seed for the sampling that estimates `k`.
    pub seed: u64,
    /// Set `y0 = 1` before the resultant instead of after it.
    pub affine_early: bool,
}

impl Default for PipelineOptions {
    fn default() -> Self {
        Self { seed: 2024, affine_early: false }
    }
}

/// A canonical equation together with its degree data.
#[derive(Clone, Debug, PartialEq)]
pub struct ImplicitResult {
    /// `F^k` for the implicit equation `F`.
    pub equation: MultiPoly,
    pub k: usize,
    pub total_degree: u32,
    pub weighted_degree: Option<u32>,
    pub monomial_count: usize,
    pub mu_degrees: Option<(usize, usize)>,
}

impl ImplicitResult {
    fn new(equation: MultiPoly, k: usize, weighted: bool, mu_degrees: Option<(usize, usize)>) -> Result<Self> {
        let total_degree = equation.total_degree().ok_or(Error::ZeroPolynomial("implicit equation"))?;
        let weighted_degree = if weighted { Some(weighted_degree(&equation)?) } else { None };
        Ok(Self {
            monomial_count: equation.num_terms(),
            equation,
            k,
            total_degree,
            weighted_degree,
            mu_degrees,
        })
    }
}

/// `sum_i polys[i](t) * forms[i]`.
fn pencil(polys: &[UniPoly], forms: &[MultiPoly]) -> TPoly {
    let deg = polys.iter().map(UniPoly::deg).max().unwrap_or(0);
    let coeffs = (0..=deg)
        .map(|k| {
            polys.iter().zip(forms).fold(MultiPoly::zero(), |acc, (p, f)| {
                let c = p.coeff(k);
                if c.is_zero() {
                    acc
                } else {
                    &acc + &f.scale(&c)
                }
            })
        })
        .collect();
    TPoly::new(coeffs)
}

fn var(v: Var) -> MultiPoly {
    MultiPoly::var(v)
}

/// `<y, y> = y1^2 + y2^2 + y3^2 - y4^2`.
pub fn lorentz_form() -> MultiPoly {
    SubstitutionMode::Gamma.quadric()
}

/// The substitution `y4 = -d y0`, identity on the other variables.
fn offset_images(d: &BigRational) -> [MultiPoly; 6] {
    let mut images = Var::ALL.map(var);
    images[Var::Y4.index()] = var(Var::Y0).scale(&-d);
    images
}

/// `g1 = <e0 y - y0 e, e0 y - y0 e>` and `g2 = dg1/dt`, the tangency system
/// of the sphere family.
pub fn g_system(s: &SpineCurve) -> (TPoly, TPoly) {
    let e0 = s.e0();
    let y0 = var(Var::Y0);
    let mut polys = vec![e0 * e0, s.lorentz_square()];
    let mut forms = vec![lorentz_form(), &y0 * &y0];
    let signs = [-2, -2, -2, 2];
    for (j, v) in [Var::Y1, Var::Y2, Var::Y3, Var::Y4].into_iter().enumerate() {
        polys.push(e0 * &s.e[j + 1]);
        forms.push((&y0 * &var(v)).scale(&BigRational::from_integer(signs[j].into())));
    }
    let g1 = pencil(&polys, &forms);
    let g2 = g1.derivative();
    (g1, g2)
}

/// `h1 = u e0^2 + y0 <e,e> - 2 <e0 e, y>`, that is `-2 E . ŷ`, and its
/// derivative. Both are linear in `ŷ`.
pub fn h_system(s: &SpineCurve) -> (TPoly, TPoly) {
    let (e, _) = build_E_Eprime(s);
    let h1 = e.linear_form(&Var::ALL).scale(&BigRational::from_integer((-2).into()));
    let h2 = h1.derivative();
    (h1, h2)
}

/// Resultant at the actual `t`-degrees of the unspecialized system.
/// Declaring `(2n, 2n - 1)` instead would add a common root at infinity
/// whenever `<e, e>` drops degree.
fn system_resultant(f: &TPoly, g: &TPoly, degrees: (usize, usize)) -> Result<MultiPoly> {
    canonical_form(&sylvester_resultant(f, g, degrees.0, degrees.1)?)
}

fn degrees(f: &TPoly, g: &TPoly) -> (usize, usize) {
    (f.deg(), g.deg())
}

/// `G = Res_t(g1, g2)`, extraneous factors included.
pub fn naive_envelope(s: &SpineCurve) -> Result<MultiPoly> {
    let (g1, g2) = g_system(s);
    system_resultant(&g1, &g2, degrees(&g1, &g2))
}

/// `G_d = G |_{y4 = -d y0}`, computed by specializing before eliminating `t`.
pub fn naive_envelope_d(s: &SpineCurve, d: &BigRational) -> Result<MultiPoly> {
    let (g1, g2) = g_system(s);
    let images = offset_images(d);
    system_resultant(&g1.compose(&images), &g2.compose(&images), degrees(&g1, &g2))
}

/// `H = Res_t(h1, h2)`.
pub fn h_resultant(s: &SpineCurve) -> Result<MultiPoly> {
    let (h1, h2) = h_system(s);
    system_resultant(&h1, &h2, degrees(&h1, &h2))
}

/// Canonical `Res_t(Ã . x, B̃ . x)`, optionally on the chart `y0 = 1`.
fn basis_resultant(mb: &MuBasis<BigRational>, vars: &[Var], affine_early: bool) -> Result<MultiPoly> {
    let (da, db) = mb.deg_pair;
    if da + db == 0 {
        return Err(Error::NoHypersurface);
    }
    let mut f = mb.a_tilde.linear_form(vars);
    let mut g = mb.b_tilde.linear_form(vars);
    if affine_early {
        f = f.specialize(Var::Y0, &BigRational::one());
        g = g.specialize(Var::Y0, &BigRational::one());
    }
    canonical_form(&sylvester_resultant(&f, &g, da, db)?)
}

fn module_equation(a: &PolyVec, b: &PolyVec, vars: &[Var], opts: &PipelineOptions) -> Result<ImplicitResult> {
    let mb = mu_basis_with_k(a, b, opts.seed)?;
    let k = mb.k.expect("k was computed");
    let equation = basis_resultant(&mb, vars, opts.affine_early)?;
    ImplicitResult::new(equation, k, true, Some(mb.deg_pair))
}

/// `F_V^k` for the dual variety `V(Ê)` in `(u, y0, .., y4)`.
pub fn dual_variety_equation(s: &SpineCurve, opts: &PipelineOptions) -> Result<ImplicitResult> {
    let (e, de) = build_E_Eprime(s);
    module_equation(&e, &de, &Var::ALL, opts)
}

/// `F_{V_d}^k` in `(u, y0, y1, y2, y3)`.
pub fn offset_dual_equation(s: &SpineCurve, d: &BigRational, opts: &PipelineOptions) -> Result<ImplicitResult> {
    let (dv, dd) = build_D_Dprime(s, d);
    module_equation(&dv, &dd, &Var::OFFSET, opts)
}

/// Replaces `u` by the quadric of `mode` over `y0` and clears `y0`.
/// `k` and the μ-basis degrees carry over from `dual`.
pub fn pull_back(dual: &ImplicitResult, mode: &SubstitutionMode, affine_early: bool) -> Result<ImplicitResult> {
    let equation = if affine_early {
        let mut images = Var::ALL.map(var);
        images[Var::U.index()] = mode.quadric().specialize(Var::Y0, &BigRational::one());
        canonical_form(&dual.equation.compose(&images))?
    } else {
        substitute_u_with_exponent(&dual.equation, mode)?.0
    };
    ImplicitResult::new(equation, dual.k, false, dual.mu_degrees)
}

/// The isotropic hypersurface `Γ` of the spine in `P^4`.
pub fn gamma_equation(s: &SpineCurve, opts: &PipelineOptions) -> Result<ImplicitResult> {
    pull_back(&dual_variety_equation(s, opts)?, &SubstitutionMode::Gamma, opts.affine_early)
}

/// The `d`-offset of the canal surface in `(y0, y1, y2, y3)`; `d = 0` gives
/// the canal surface itself.
pub fn canal_equation(s: &SpineCurve, d: &BigRational, opts: &PipelineOptions) -> Result<ImplicitResult> {
    let dual = offset_dual_equation(s, d, opts)?;
    pull_back(&dual, &SubstitutionMode::Offset(d.clone()), opts.affine_early)
}
