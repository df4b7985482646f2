//! Poisson kernel of the unit disk, its Wirtinger derivatives, and the
//! Möbius change of variable `e^{iθ} = (r - e^{is})/(1 - r e^{is})`.

use std::f64::consts::{FRAC_PI_2, PI, TAU};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Map an angle to `[-π, π)`.
pub fn normalize_angle(a: f64) -> f64 {
    let m = (a + PI).rem_euclid(TAU) - PI;
    if m >= PI {
        -PI
    } else {
        m
    }
}

/// A point `z = r e^{iα}` of the open unit disk.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DiskPoint {
    r: f64,
    alpha: f64,
}

impl DiskPoint {
    pub fn new(r: f64, alpha: f64) -> Result<Self> {
        if !(0.0..1.0).contains(&r) || !alpha.is_finite() {
            return Err(Error::Domain(format!(
                "disk point needs 0 <= r < 1 and finite angle, got r = {r}, alpha = {alpha}"
            )));
        }
        Ok(Self {
            r,
            alpha: normalize_angle(alpha),
        })
    }

    pub fn origin() -> Self {
        Self { r: 0.0, alpha: 0.0 }
    }

    pub fn from_complex(z: Complex64) -> Result<Self> {
        Self::new(z.norm(), z.arg())
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn to_complex(&self) -> Complex64 {
        Complex64::from_polar(self.r, self.alpha)
    }

    /// `1 - |z|²`
    pub fn boundary_distance_factor(&self) -> f64 {
        1.0 - self.r * self.r
    }
}

/// A unit vector `e^{iτ}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Direction {
    tau: f64,
}

impl Direction {
    pub fn new(tau: f64) -> Self {
        Self {
            tau: normalize_angle(tau),
        }
    }

    /// `n = z/|z|`
    pub fn radial(z: &DiskPoint) -> Self {
        Self::new(z.alpha)
    }

    /// `t = i z/|z|`
    pub fn tangential(z: &DiskPoint) -> Self {
        Self::new(z.alpha + FRAC_PI_2)
    }

    pub fn tau(&self) -> f64 {
        self.tau
    }

    pub fn unit(&self) -> Complex64 {
        Complex64::from_polar(1.0, self.tau)
    }
}

fn boundary(theta: f64) -> Complex64 {
    Complex64::from_polar(1.0, theta)
}

/// `P(z, e^{iθ}) = (1 - |z|²)/|z - e^{iθ}|²`
pub fn poisson(z: &DiskPoint, theta: f64) -> f64 {
    let r = z.r;
    (1.0 - r * r) / (1.0 + r * r - 2.0 * r * (theta - z.alpha).cos())
}

/// `∂P = e^{iθ}/(z - e^{iθ})²`
pub fn d_poisson(z: &DiskPoint, theta: f64) -> Complex64 {
    let e = boundary(theta);
    let d = z.to_complex() - e;
    e / (d * d)
}

/// `∂̄P = e^{-iθ}/(z̄ - e^{-iθ})²`, the conjugate of [`d_poisson`].
pub fn dbar_poisson(z: &DiskPoint, theta: f64) -> Complex64 {
    let e = boundary(-theta);
    let d = z.to_complex().conj() - e;
    e / (d * d)
}

/// Derivative of `P(·, e^{iθ})` at `z` in direction `e^{iτ}`: `2 Re(e^{iτ} ∂P)`.
pub fn directional_poisson(z: &DiskPoint, theta: f64, d: &Direction) -> f64 {
    2.0 * (d.unit() * d_poisson(z, theta)).re
}

/// Result of the substitution `e^{iθ} = (r - e^{is})/(1 - r e^{is})`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Substitution {
    /// θ(s), normalized to `[-π, π)`.
    pub theta: f64,
    /// `dθ/ds = (1 - r²)/(1 + r² - 2r cos s)`.
    pub jacobian: f64,
}

pub fn mobius_substitution(r: f64, s: f64) -> Result<Substitution> {
    if !(0.0..1.0).contains(&r) {
        return Err(Error::Domain(format!("Möbius substitution needs 0 <= r < 1, got {r}")));
    }
    Ok(mobius_unchecked(r, s))
}

pub(crate) fn mobius_unchecked(r: f64, s: f64) -> Substitution {
    let e = boundary(s);
    let w = (r - e) / (1.0 - r * e);
    Substitution {
        theta: normalize_angle(w.arg()),
        jacobian: (1.0 - r) * (1.0 + r) / ((1.0 - r) * (1.0 - r) + 4.0 * r * (0.5 * s).sin().powi(2)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(r: f64, a: f64) -> DiskPoint {
        DiskPoint::new(r, a).unwrap()
    }

    #[test]
    fn angles_normalize_into_half_open_range() {
        assert_eq!(normalize_angle(PI), -PI);
        assert!((normalize_angle(3.0 * PI + 0.1) - (-PI + 0.1)).abs() < 1e-12);
        assert!((normalize_angle(-0.5) + 0.5).abs() < 1e-15);
    }

    #[test]
    fn disk_point_rejects_boundary() {
        assert!(DiskPoint::new(1.0, 0.0).is_err());
        assert!(DiskPoint::new(-0.1, 0.0).is_err());
        assert!(DiskPoint::new(0.5, f64::NAN).is_err());
    }

    #[test]
    fn poisson_values() {
        assert!((poisson(&DiskPoint::origin(), 1.234) - 1.0).abs() < 1e-15);
        assert!((poisson(&z(0.5, 0.0), PI) - 1.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn d_poisson_at_origin() {
        for theta in [0.0, 0.3, 2.0, -1.7] {
            let d = d_poisson(&DiskPoint::origin(), theta);
            assert!((d - Complex64::from_polar(1.0, -theta)).norm() < 1e-15);
        }
    }

    #[test]
    fn dbar_is_conjugate_of_d() {
        let p = z(0.63, -2.2);
        for theta in [0.1, 1.9, -3.0] {
            assert!((dbar_poisson(&p, theta) - d_poisson(&p, theta).conj()).norm() < 1e-13);
        }
    }

    #[test]
    fn real_axis_finite_difference() {
        let (r, alpha, theta, h) = (0.4, 0.7, 1.1, 1e-6);
        let c = z(r, alpha).to_complex();
        let plus = DiskPoint::from_complex(c + h).unwrap();
        let minus = DiskPoint::from_complex(c - h).unwrap();
        let fd = (poisson(&plus, theta) - poisson(&minus, theta)) / (2.0 * h);
        let exact = 2.0 * d_poisson(&z(r, alpha), theta).re;
        assert!((fd - exact).abs() < 1e-6);
    }

    #[test]
    fn substitution_at_zero_radius_is_rotation() {
        for s in [-2.0, 0.0, 0.5, 3.0] {
            let sub = mobius_substitution(0.0, s).unwrap();
            assert!((sub.jacobian - 1.0).abs() < 1e-15);
            assert!((normalize_angle(sub.theta - s - PI)).abs() < 1e-12);
        }
    }

    #[test]
    fn transported_kernel_identity() {
        // Re(e^{i(θ+φ)}/(r - e^{iθ})²) = -(1 + r² - 2r cos s) cos(s - φ)/(1 - r²)²
        for &(r, s, shift) in &[(0.3, 0.4, 0.0), (0.8, -2.1, 0.7), (0.95, 3.0, -1.3), (0.5, 1.57, 2.5)] {
            let sub = mobius_substitution(r, s).unwrap();
            let e = Complex64::from_polar(1.0, sub.theta);
            let d = r - e;
            let lhs = (Complex64::from_polar(1.0, sub.theta + shift) / (d * d)).re;
            let rhs = -(1.0 + r * r - 2.0 * r * s.cos()) * (s - shift).cos() / (1.0 - r * r).powi(2);
            assert!((lhs - rhs).abs() < 1e-12 * rhs.abs().max(1.0), "{r} {s}: {lhs} vs {rhs}");
        }
    }

    #[test]
    fn substitution_preserves_total_angle() {
        use crate::quadrature::{integrate_periodic, KinkSet};
        for r in [0.1, 0.5, 0.9, 0.99] {
            let total = integrate_periodic(
                |s| mobius_substitution(r, s).unwrap().jacobian,
                &KinkSet::new([0.0]),
                1e-11,
            )
            .unwrap();
            assert!((total.value - TAU).abs() < 1e-9);
        }
    }
}
