use std::f64::consts::{PI, TAU};

use disk_sharp::kernel::{
    d_poisson, dbar_poisson, directional_poisson, mobius_substitution, normalize_angle, poisson, DiskPoint, Direction,
};
use disk_sharp::quadrature::integrate_periodic;
use disk_sharp::KinkSet;
use num_complex::Complex64;
use proptest::prelude::*;

#[test]
fn poisson_values() {
    let o = DiskPoint::origin();
    for t in [0.0, 1.0, 4.0] {
        assert!((poisson(&o, t) - 1.0).abs() < 1e-15);
    }
    let z = DiskPoint::new(0.5, 0.0).unwrap();
    assert!((poisson(&z, PI) - 1.0 / 3.0).abs() < 1e-15);
}

#[test]
fn poisson_mean_value_on_grid() {
    for i in 0..4 {
        for j in 0..5 {
            let z = DiskPoint::new(0.2 * i as f64 + 0.15, 1.3 * j as f64).unwrap();
            let res = integrate_periodic(|t| poisson(&z, t), &KinkSet::new([z.alpha()]), 1e-11).unwrap();
            assert!((res.value / TAU - 1.0).abs() < 1e-10, "{z:?}");
            for k in 0..16 {
                assert!(poisson(&z, k as f64 * TAU / 16.0) > 0.0);
            }
        }
    }
}

#[test]
fn derivative_at_center_and_conjugacy() {
    let o = DiskPoint::origin();
    let t = 0.9;
    assert!((d_poisson(&o, t) - Complex64::from_polar(1.0, -t)).norm() < 1e-15);
    let z = DiskPoint::new(0.6, 2.1).unwrap();
    for t in [0.0, 0.5, 3.0] {
        assert!((dbar_poisson(&z, t) - d_poisson(&z, t).conj()).norm() < 1e-14);
    }
}

#[test]
fn real_axis_finite_difference() {
    let (r, a, t) = (0.4, 0.7, 1.1);
    let z = DiskPoint::new(r, a).unwrap();
    let h = 1e-6;
    let zc = z.to_complex();
    let plus = DiskPoint::from_complex(zc + h).unwrap();
    let minus = DiskPoint::from_complex(zc - h).unwrap();
    let fd = (poisson(&plus, t) - poisson(&minus, t)) / (2.0 * h);
    assert!((fd - 2.0 * d_poisson(&z, t).re).abs() < 1e-6);
}

#[test]
fn substitution_at_zero_radius() {
    for s in [0.0, 1.0, -2.5] {
        let sub = mobius_substitution(0.0, s).unwrap();
        assert!((normalize_angle(sub.theta - s - PI)).abs() < 1e-14);
        assert!((sub.jacobian - 1.0).abs() < 1e-15);
    }
    assert!(mobius_substitution(1.0, 0.0).is_err());
}

#[test]
fn directions() {
    let z = DiskPoint::new(0.5, 0.8).unwrap();
    assert!((Direction::radial(&z).tau() - 0.8).abs() < 1e-15);
    assert!((Direction::tangential(&z).unit() - Complex64::new(0.0, 1.0) * Direction::radial(&z).unit()).norm() < 1e-15);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn directional_matches_finite_differences(r in 0.0f64..0.9, a in -PI..PI, tau in -PI..PI, t in -PI..PI) {
        let z = DiskPoint::new(r, a).unwrap();
        let d = Direction::new(tau);
        let h = 1e-6;
        let zc = z.to_complex();
        let plus = DiskPoint::from_complex(zc + h * d.unit()).unwrap();
        let minus = DiskPoint::from_complex(zc - h * d.unit()).unwrap();
        let fd = (poisson(&plus, t) - poisson(&minus, t)) / (2.0 * h);
        let exact = directional_poisson(&z, t, &d);
        prop_assert!((fd - exact).abs() < 1e-5 * exact.abs().max(1.0), "{} vs {}", fd, exact);
    }

    #[test]
    fn jacobian_integrates_to_full_turn(r in 0.0f64..0.99) {
        let res = integrate_periodic(|s| mobius_substitution(r, s).unwrap().jacobian, &KinkSet::new([0.0]), 1e-11).unwrap();
        prop_assert!((res.value - TAU).abs() < 1e-9);
    }

    #[test]
    fn substitution_is_monotone(r in 0.0f64..0.99) {
        let n = 2048;
        let mut prev = mobius_substitution(r, 0.0).unwrap().theta;
        let mut total = 0.0;
        for k in 1..=n {
            let th = mobius_substitution(r, k as f64 * TAU / n as f64).unwrap().theta;
            let step = normalize_angle(th - prev);
            prop_assert!(step > 0.0);
            total += step;
            prev = th;
        }
        prop_assert!((total - TAU).abs() < 1e-9);
    }
}
