use std::f64::consts::PI;

use disk_sharp::constants::{global_constant, wirtinger_constant_global};
use disk_sharp::extremal::{
    extrapolate_linear, gradient_study, make_extremal_gradient, norm_limit_study, sharpness_ratio_gradient,
    sharpness_ratio_wirtinger, ExtremalFamily, Orientation, RHO_LADDER,
};
use disk_sharp::{DiskPoint, Execution, Exponent, HarmonicExtension, Integrator};
use proptest::prelude::*;

fn p(v: f64) -> Exponent {
    Exponent::new(v).unwrap()
}

#[test]
fn small_rho_is_a_rotation() {
    let e = p(1.5);
    let q = e.q();
    let f = ExtremalFamily::gradient(1e-12, e).unwrap();
    for t in [0.1, 0.7, 2.0, -1.3] {
        let s = t + PI;
        let c = s.cos();
        let expected = (c * (1.0 - c)).abs().powf(q - 1.0) * c.signum();
        assert!((f.value(t).re - expected).abs() < 1e-9, "t = {t}");
        assert_eq!(f.value(t).im, 0.0);
    }
}

#[test]
fn family_is_real() {
    for v in [1.5, 2.0, 4.0] {
        for rho in RHO_LADDER {
            let f = ExtremalFamily::gradient(rho, p(v)).unwrap();
            assert!(f.is_real());
            assert!((0..50).all(|k| f.value(-PI + k as f64 * 0.125).im == 0.0));
        }
    }
}

#[test]
fn real_family_extends_to_real_harmonic() {
    let w = HarmonicExtension::new(make_extremal_gradient(0.9, p(1.5)).unwrap());
    for (r, a) in [(0.0, 0.0), (0.5, 1.0), (0.9, 0.0), (0.8, -2.5)] {
        let v = w.evaluate(&DiskPoint::new(r, a).unwrap()).unwrap();
        assert!(v.im.abs() <= 1e-10, "{v}");
    }
}

#[test]
fn ratio_examples() {
    let c2 = (2.0 / PI).sqrt();
    let ratio = sharpness_ratio_gradient(p(2.0), 0.999).unwrap();
    assert!((ratio - c2).abs() < 0.01 * c2);
    let w2 = wirtinger_constant_global(p(2.0)).unwrap().value;
    let ratio = sharpness_ratio_wirtinger(p(2.0), 0.999, Orientation::Plus).unwrap();
    assert!((ratio - w2).abs() < 0.01 * w2);
}

#[test]
fn ladder_approaches_monotonically() {
    let integ = Integrator::default();
    let study = gradient_study(&integ, p(1.5), &RHO_LADDER, Execution::default()).unwrap();
    assert!(study.monotone);
    assert!((study.target - global_constant(p(1.5)).unwrap().value).abs() < 1e-12);
    assert!(study.relative_error() < 2e-3);
    assert!(study.last_raw_relative_error() < 1e-2);
}

#[test]
fn norm_power_limit() {
    let integ = Integrator::default();
    for v in [1.5, 3.0] {
        let study = norm_limit_study(&integ, p(v), &RHO_LADDER, Execution::default()).unwrap();
        let expected = (PI * global_constant(p(v)).unwrap().value / 2.0).powf(p(v).q());
        assert!((study.target - expected).abs() < 1e-9 * expected);
        assert!(study.relative_error() < 5e-3, "p = {v}: {}", study.relative_error());
    }
}

#[test]
fn orientation_parsing() {
    assert_eq!("+".parse::<Orientation>().unwrap(), Orientation::Plus);
    assert_eq!("minus".parse::<Orientation>().unwrap(), Orientation::Minus);
    assert!("sideways".parse::<Orientation>().is_err());
}

#[test]
fn linear_extrapolation() {
    let v = extrapolate_linear(&[(0.2, 1.2), (0.1, 1.1)]).unwrap();
    assert!((v - 1.0).abs() < 1e-14);
    assert!(extrapolate_linear(&[(0.1, 1.0)]).is_err());
}

#[test]
fn domain_errors() {
    assert!(ExtremalFamily::gradient(0.0, p(2.0)).is_err());
    assert!(ExtremalFamily::gradient(1.0, p(2.0)).is_err());
    assert!(ExtremalFamily::wirtinger(-0.5, p(2.0), Orientation::Plus).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn ratio_never_exceeds_constant(v in 1.2f64..8.0, rho in 0.05f64..0.995) {
        let e = p(v);
        let bound = global_constant(e).unwrap().value;
        let ratio = sharpness_ratio_gradient(e, rho).unwrap();
        prop_assert!(ratio <= bound * (1.0 + 1e-8), "{} > {}", ratio, bound);
        let wbound = wirtinger_constant_global(e).unwrap().value;
        let wratio = sharpness_ratio_wirtinger(e, rho, Orientation::Plus).unwrap();
        prop_assert!(wratio <= wbound * (1.0 + 1e-8));
    }

    #[test]
    fn orientations_are_symmetric(v in 1.2f64..8.0, rho in 0.1f64..0.99) {
        let e = p(v);
        let plus = sharpness_ratio_wirtinger(e, rho, Orientation::Plus).unwrap();
        let minus = sharpness_ratio_wirtinger(e, rho, Orientation::Minus).unwrap();
        prop_assert!((plus - minus).abs() < 1e-8);
    }
}
