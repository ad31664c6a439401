//! Resultant identities and degree formulas on random spines.

mod common;

use canal_core::canal::*;
use canal_core::exactalg::{exact_divide, sylvester_resultant, Var};
use canal_core::{MultiPoly, Rational, Scalar, TPoly};
use common::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn opts() -> PipelineOptions {
    PipelineOptions::default()
}

/// `Φ^{-1}`: `u -> <y, y>`, `y0 -> y0^2`, `y_i -> y0 y_i`.
fn lift_images() -> [MultiPoly; 6] {
    let y0 = v(Var::Y0);
    let mut images = Var::ALL.map(|x| &y0 * &v(x));
    images[Var::U.index()] = lorentz_form();
    images
}

/// Draws general-type spines, returning them with the number of draws.
fn general_spines(rng: &mut ChaCha8Rng, n: usize, count: usize) -> (Vec<SpineCurve>, usize) {
    let mut out = Vec::new();
    let mut draws = 0;
    while out.len() < count {
        draws += 1;
        let den = if n == 2 && rng.gen_bool(0.5) { Denominator::CircleQuadric } else { Denominator::Random };
        let s = random_spine(rng, n, den);
        if general_type_check(&s, rng.gen()).map(|r| r.is_general_type).unwrap_or(false) {
            out.push(s);
        }
    }
    (out, draws)
}

#[test]
fn naive_envelope_is_h_on_the_quadric() {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let images = lift_images();
    for i in 0..20 {
        let n = 1 + i % 2;
        let s = random_spine(&mut rng, n, Denominator::Random);
        let g = naive_envelope(&s).unwrap();
        let h = h_resultant(&s).unwrap();
        assert_eq!(g, canon(&h.compose(&images)), "spine {:?}", s.e);
    }
}

#[test]
fn offset_envelope_is_h_on_the_quadric_for_cubics() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..3 {
        let s = random_spine(&mut rng, 3, Denominator::Random);
        let d = Rational::from_int(rng.gen_range(-3..=3));
        let (h1, h2) = h_system(&s);
        let mut images = Var::ALL.map(v);
        images[Var::Y4.index()] = v(Var::Y0).scale(&-d.clone());
        let degrees = (h1.deg(), h2.deg());
        let (h1, h2) = (h1.compose(&images), h2.compose(&images));
        let hd = sylvester_resultant(&h1, &h2, degrees.0, degrees.1).unwrap();
        let mut lift = lift_images();
        lift[Var::U.index()] = canal_core::exactalg::SubstitutionMode::Offset(d.clone()).quadric();
        assert_eq!(naive_envelope_d(&s, &d).unwrap(), canon(&hd.compose(&lift)));
    }
}

#[test]
fn dual_equation_divides_h() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let mut spines = vec![ellipse(), polynomial_quadratic(), torus()];
    spines.extend((0..3).map(|_| random_spine(&mut rng, 2, Denominator::Random)));
    for s in spines {
        let dual = dual_variety_equation(&s, &opts()).unwrap();
        let h = h_resultant(&s).unwrap();
        assert!(exact_divide(&h, &dual.equation).unwrap().is_some(), "spine {:?}", s.e);
    }
}

#[test]
fn canal_surface_divides_the_d_envelope() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let mut cases = vec![(ellipse(), 0), (torus(), 0), (torus(), 1), (polynomial_quadratic(), 2)];
    cases.extend((0..3).map(|i| (random_spine(&mut rng, 2, Denominator::Random), i - 1)));
    for (s, d) in cases {
        let d = Rational::from_int(d);
        let canal = canal_equation(&s, &d, &opts()).unwrap();
        let envelope = naive_envelope_d(&s, &d).unwrap();
        assert!(exact_divide(&envelope, &canal.equation).unwrap().is_some(), "spine {:?}, d = {d}", s.e);
    }
}

#[test]
fn general_type_h_is_g_times_leading_coefficient() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    let (spines, _) = general_spines(&mut rng, 2, 5);
    for s in spines {
        let dual = dual_variety_equation(&s, &opts()).unwrap();
        let (h1, _) = h_system(&s);
        let lc = h1.leading_coeff();
        assert_eq!(h_resultant(&s).unwrap(), canon(&(&dual.equation * &lc)));
    }
}

#[test]
fn quotient_rule_variant_of_h2() {
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    let (spines, _) = general_spines(&mut rng, 2, 2);
    for s in spines {
        let n = s.n;
        let (h1, dh1) = h_system(&s);
        let g = s.e0() * s.e0();
        let variant = dh1.mul_univariate(&g).sub(&h1.mul_univariate(&g.derivative()));
        let lhs = &h1.coeff(2 * n) * &sylvester_resultant(&h1, &variant, 2 * n, 4 * n - 2).unwrap();
        let rhs = sylvester_resultant(&h1, &dh1.mul_univariate(&g), 2 * n, 4 * n - 1).unwrap();
        assert_eq!(canon(&lhs), canon(&rhs));
    }
}

#[test]
fn h1_meets_e0_only_at_y0() {
    let s = ellipse();
    let (h1, _) = h_system(&s);
    let r = sylvester_resultant(&h1, &TPoly::from_univariate(s.e0()), 2 * s.n, s.e0().deg()).unwrap();
    assert_eq!(canon(&r), v(Var::Y0).pow(s.e0().deg() as u32));
}

fn check_degree_theorems(n: usize, count: usize, seed: u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (spines, draws) = general_spines(&mut rng, n, count);
    eprintln!("n = {n}: {count} general-type spines in {draws} draws");
    for s in spines {
        let pred = predicted_degrees(&s, 1).unwrap();
        let dual = dual_variety_equation(&s, &opts()).unwrap();
        let gamma = pull_back(&dual, &canal_core::exactalg::SubstitutionMode::Gamma, false).unwrap();
        assert_eq!(dual.total_degree as usize, 4 * n - 2);
        assert_eq!(gamma.total_degree as usize, 6 * n - 4);
        assert_eq!((pred.deg_v, pred.deg_gamma), (4 * n - 2, 6 * n - 4));
        assert_eq!(dual.weighted_degree, Some(gamma.total_degree));
    }
}

#[test]
fn degree_theorems_for_quadratic_spines() {
    check_degree_theorems(2, 10, 16);
}

#[test]
fn degree_theorems_for_cubic_spines() {
    check_degree_theorems(3, 5, 17);
}

#[test]
fn weighted_degree_is_gamma_degree() {
    for s in [ellipse(), polynomial_quadratic(), viviani(), torus()] {
        let dual = dual_variety_equation(&s, &opts()).unwrap();
        let gamma = pull_back(&dual, &canal_core::exactalg::SubstitutionMode::Gamma, false).unwrap();
        assert_eq!(dual.weighted_degree, Some(gamma.total_degree));
    }
}

fn random_lie_point(rng: &mut ChaCha8Rng) -> canal_core::liegeom::LiePoint<Rational> {
    canal_core::liegeom::LiePoint::new(std::array::from_fn(|_| Rational::from_int(rng.gen_range(-20..=20))))
}

#[test]
fn sampled_points_lie_on_the_dual_variety() {
    let mut rng = ChaCha8Rng::seed_from_u64(18);
    let spines = [ellipse(), random_spine(&mut rng, 2, Denominator::Random), random_spine(&mut rng, 2, Denominator::CircleQuadric)];
    for s in spines {
        let f = dual_variety_equation(&s, &opts()).unwrap().equation;
        let mut hits = 0;
        while hits < 20 {
            let t0 = Rational::new(rng.gen_range(-50..=50).into(), rng.gen_range(1..=9).into());
            let a = [random_lie_point(&mut rng), random_lie_point(&mut rng), random_lie_point(&mut rng)];
            let Ok(point) = dual_point_sample(&s, &t0, &a) else { continue };
            assert!(f.eval(&point.coords).is_zero_value());
            let doubled = [canal_core::liegeom::LiePoint::new(a[0].coords.clone().map(|x| x * Rational::from_int(2))), a[1].clone(), a[2].clone()];
            assert_eq!(dual_point_sample(&s, &t0, &doubled).unwrap(), point);
            hits += 1;
        }
    }
}

trait IsZeroValue {
    fn is_zero_value(&self) -> bool;
}

impl IsZeroValue for Rational {
    fn is_zero_value(&self) -> bool {
        *self == Rational::from_int(0)
    }
}
