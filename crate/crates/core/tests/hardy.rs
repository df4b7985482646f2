use std::f64::consts::{PI, TAU};

use disk_sharp::constants::{gradient_constant, wirtinger_constant};
use disk_sharp::hardy::{Samples, TrigPoly};
use disk_sharp::verification::{random_trig_poly, trial_rng};
use disk_sharp::{BoundaryFunction, DiskPoint, Direction, Execution, Exponent, HarmonicExtension};
use num_complex::Complex64;
use proptest::prelude::*;
use rand::Rng;

fn p(v: f64) -> Exponent {
    Exponent::new(v).unwrap()
}

fn z(r: f64, a: f64) -> DiskPoint {
    DiskPoint::new(r, a).unwrap()
}

fn ext(poly: TrigPoly) -> HarmonicExtension {
    HarmonicExtension::new(poly)
}

#[test]
fn boundary_norms() {
    let one = BoundaryFunction::from(TrigPoly::constant(1.0));
    assert!((one.lp_norm(p(2.0)).unwrap() - TAU.sqrt()).abs() < 1e-10);
    let cos = BoundaryFunction::from(TrigPoly::cosine());
    assert!((cos.lp_norm(p(2.0)).unwrap() - PI.sqrt()).abs() < 1e-10);
    assert!((cos.lp_norm(Exponent::infinity()).unwrap() - 1.0).abs() < 1e-12);
}

#[test]
fn evaluation_examples() {
    let one = ext(TrigPoly::constant(1.0));
    let cos = ext(TrigPoly::cosine());
    for w in [z(0.0, 0.0), z(0.4, 1.0), z(0.95, -2.0)] {
        assert!((one.evaluate(&w).unwrap() - 1.0).norm() < 1e-14);
        assert!((cos.evaluate(&w).unwrap() - w.to_complex().re).norm() < 1e-14);
        let d = cos.derivative(&w).unwrap();
        assert!((d.dz - 0.5).norm() < 1e-14 && (d.dzbar - 0.5).norm() < 1e-14);
        assert!((d.norm() - 1.0).abs() < 1e-14);
    }
    let cube = ext(TrigPoly::monomial(3));
    let v = cube.evaluate(&z(0.5, 0.2)).unwrap();
    assert!((v - Complex64::from_polar(0.125, 0.6)).norm() < 1e-14);
    let id = ext(TrigPoly::monomial(1)).derivative(&z(0.3, 0.3)).unwrap();
    assert!((id.dz - 1.0).norm() < 1e-14 && id.dzbar.norm() < 1e-14);
}

#[test]
fn sampled_path_matches_polynomial_path() {
    let mut rng = trial_rng(7, 0);
    let poly = random_trig_poly(&mut rng, 8, false);
    let exact = ext(poly.clone());
    let sampled = HarmonicExtension::new(poly.to_samples(256).unwrap());
    for _ in 0..10 {
        let w = z(rng.random_range(0.0..0.9), rng.random_range(-PI..PI));
        assert!((exact.evaluate(&w).unwrap() - sampled.evaluate(&w).unwrap()).norm() < 1e-8);
        let a = exact.derivative(&w).unwrap();
        let b = sampled.derivative(&w).unwrap();
        assert!((a.dz - b.dz).norm() < 1e-8 && (a.dzbar - b.dzbar).norm() < 1e-8);
    }
}

#[test]
fn samples_reject_bad_lengths() {
    assert!(Samples::from_real(&[1.0; 8]).is_err());
    assert!(Samples::from_real(&[1.0; 100]).is_err());
    assert!(Samples::from_real(&[1.0; 64]).is_ok());
}

#[test]
fn hardy_norm_examples() {
    let one = ext(TrigPoly::constant(1.0)).hardy_norm(p(2.0)).unwrap();
    assert!((one.value - TAU.sqrt()).abs() < 1e-8);
    let cos = ext(TrigPoly::cosine()).hardy_norm(p(2.0)).unwrap();
    assert!((cos.value - PI.sqrt()).abs() < 1e-6);
    assert!(cos.is_nondecreasing());
    let mut rng = trial_rng(11, 3);
    let poly = random_trig_poly(&mut rng, 6, false);
    let boundary = BoundaryFunction::from(poly.clone()).lp_norm(p(3.0)).unwrap();
    let h = ext(poly).hardy_norm(p(3.0)).unwrap();
    assert!((h.value - boundary).abs() < 1e-6 * boundary, "{} vs {boundary}", h.value);
    assert!(h.is_nondecreasing());
}

#[test]
fn center_equality_cases() {
    let cos = BoundaryFunction::from(TrigPoly::cosine());
    let d = HarmonicExtension::new(cos.clone()).derivative(&DiskPoint::origin()).unwrap();
    let rhs = gradient_constant(p(2.0), &DiskPoint::origin()).unwrap().value * cos.lp_norm(p(2.0)).unwrap();
    assert!((d.norm() - 1.0).abs() < 1e-10 && (rhs - 1.0).abs() < 1e-10);
    let e1 = BoundaryFunction::from(TrigPoly::monomial(1));
    let d = HarmonicExtension::new(e1.clone()).derivative(&DiskPoint::origin()).unwrap();
    let rhs = wirtinger_constant(p(2.0), 0.0).unwrap().value * e1.lp_norm(p(2.0)).unwrap();
    assert!((d.dz.norm() - rhs).abs() < 1e-10);
}

#[test]
fn bloch_examples() {
    let re = ext(TrigPoly::cosine()).bloch_constant().unwrap();
    assert!((re.value - 1.0).abs() < 1e-9, "{}", re.value);
    let id = ext(TrigPoly::monomial(1)).bloch_constant().unwrap();
    assert!((id.value - 1.0).abs() < 1e-9);
}

#[test]
fn smoothed_step_respects_bloch_bound() {
    let n = 4096;
    let values: Vec<f64> = (0..n).map(|j| (8.0 * (TAU * j as f64 / n as f64).cos()).tanh()).collect();
    let w = HarmonicExtension::new(Samples::from_real(&values).unwrap());
    let b = w.bloch_constant_with(&Default::default(), Execution::default()).unwrap();
    assert!(b.value <= 4.0 / PI + 1e-3, "{}", b.value);
    assert!(b.value > 1.0);
}

#[test]
fn serde_round_trip() {
    let poly = TrigPoly::new(-2, vec![Complex64::new(1.0, -0.5), Complex64::new(0.0, 0.0), Complex64::new(2.0, 0.25)]).unwrap();
    let f = BoundaryFunction::from(poly);
    let back = BoundaryFunction::from_json(&f.to_json().unwrap()).unwrap();
    assert_eq!(f, back);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn mean_value_property(seed in 0u64..1000) {
        let mut rng = trial_rng(seed, 1);
        let poly = random_trig_poly(&mut rng, 10, false);
        let samples = poly.to_samples(64).unwrap();
        let mean: Complex64 = samples.values().iter().sum::<Complex64>() / 64.0;
        let w = ext(poly);
        prop_assert!((w.evaluate(&DiskPoint::origin()).unwrap() - mean).norm() < 1e-10);
    }

    #[test]
    fn directional_image_below_operator_norm(seed in 0u64..1000, r in 0.0f64..0.95, a in -PI..PI) {
        let mut rng = trial_rng(seed, 2);
        let w = ext(random_trig_poly(&mut rng, 10, false));
        let d = w.derivative(&z(r, a)).unwrap();
        for _ in 0..20 {
            let t = rng.random_range(-PI..PI);
            prop_assert!(d.apply(&Direction::new(t)).norm() <= d.norm() * (1.0 + 1e-12));
        }
        let best = d.apply(&d.maximizing_direction()).norm();
        prop_assert!((best - d.norm()).abs() <= 1e-12 * d.norm().max(1.0));
    }

    #[test]
    fn derivative_matches_finite_differences(seed in 0u64..1000, r in 0.0f64..0.9, a in -PI..PI, t in -PI..PI) {
        let mut rng = trial_rng(seed, 3);
        let w = ext(random_trig_poly(&mut rng, 10, false));
        let at = z(r, a);
        let u = Direction::new(t).unit();
        let h = 1e-6;
        let plus = DiskPoint::from_complex(at.to_complex() + h * u).unwrap();
        let minus = DiskPoint::from_complex(at.to_complex() - h * u).unwrap();
        let fd = (w.evaluate(&plus).unwrap() - w.evaluate(&minus).unwrap()) / (2.0 * h);
        let exact = w.derivative(&at).unwrap().apply(&Direction::new(t));
        prop_assert!((fd - exact).norm() < 1e-5 * exact.norm().max(1.0));
    }
}
