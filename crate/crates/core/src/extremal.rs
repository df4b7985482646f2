//! Boundary families whose derivative-to-norm ratio at `z = ρ` tends to
//! the sharp constants as `ρ → 1`, and the ratio studies built on them.
//!
//! Every family is parametrised by `s`, where
//! `e^{it} = (ρ - e^{is})/(1 - ρ e^{is})`, and all integrals are taken in `s`.

use std::f64::consts::{FRAC_PI_2, PI};
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::Serialize;

use crate::constants::{global_constant_with, wirtinger_constant_global, Exponent};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::hardy::{periodic_sup, BoundaryFunction, HarmonicExtension};
use crate::kernel::{mobius_unchecked, DiskPoint, Direction};
use crate::quadrature::{Integrator, KinkSet};

/// Default `ρ` ladder for ratio studies.
pub const RHO_LADDER: [f64; 3] = [0.9, 0.99, 0.999];

/// Which Wirtinger derivative a family targets: `+` for `∂w`, `-` for `∂̄w`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Orientation {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Orientation {
    fn sign(self) -> f64 {
        match self {
            Orientation::Plus => 1.0,
            Orientation::Minus => -1.0,
        }
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Orientation::Plus => "+",
            Orientation::Minus => "-",
        })
    }
}

impl FromStr for Orientation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "+" | "plus" => Ok(Orientation::Plus),
            "-" | "minus" => Ok(Orientation::Minus),
            _ => Err(Error::InvalidParameter(format!("orientation must be + or -, got {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ExtremalFamily {
    /// Real family for the gradient constant:
    /// `(1-ρ²)^{-1/p} |T(s)(1 - cos s)|^{q-1} sign T(s)` with `T = cos`
    /// for `p < 2` and `T = sin` for `p ≥ 2`.
    Gradient { rho: f64, exponent: Exponent },
    /// `(1-ρ²)^{-1/p} |1 - cos s|^{q-1} e^{±is}`
    Wirtinger {
        rho: f64,
        exponent: Exponent,
        orientation: Orientation,
    },
}

fn check_rho(rho: f64) -> Result<()> {
    if rho > 0.0 && rho < 1.0 {
        Ok(())
    } else {
        Err(Error::Domain(format!("extremal family needs 0 < rho < 1, got {rho}")))
    }
}

impl ExtremalFamily {
    pub fn gradient(rho: f64, exponent: Exponent) -> Result<Self> {
        check_rho(rho)?;
        Ok(ExtremalFamily::Gradient { rho, exponent })
    }

    pub fn wirtinger(rho: f64, exponent: Exponent, orientation: Orientation) -> Result<Self> {
        check_rho(rho)?;
        Ok(ExtremalFamily::Wirtinger {
            rho,
            exponent,
            orientation,
        })
    }

    pub fn rho(&self) -> f64 {
        match *self {
            ExtremalFamily::Gradient { rho, .. } | ExtremalFamily::Wirtinger { rho, .. } => rho,
        }
    }

    pub fn exponent(&self) -> Exponent {
        match *self {
            ExtremalFamily::Gradient { exponent, .. } | ExtremalFamily::Wirtinger { exponent, .. } => exponent,
        }
    }

    pub fn is_real(&self) -> bool {
        matches!(self, ExtremalFamily::Gradient { .. })
    }

    fn prefactor(&self) -> f64 {
        let rho = self.rho();
        ((1.0 - rho) * (1.0 + rho)).powf(-self.exponent().inv_p())
    }

    /// Value as a function of the Möbius parameter `s`.
    pub fn value_at_s(&self, s: f64) -> Complex64 {
        let q = self.exponent().q();
        let one_minus_cos = 2.0 * (0.5 * s).sin().powi(2);
        match *self {
            ExtremalFamily::Gradient { exponent, .. } => {
                let t = if exponent.tangential_extremal() { s.sin() } else { s.cos() };
                let v = self.prefactor() * (t * one_minus_cos).abs().powf(q - 1.0) * t.signum();
                Complex64::new(v, 0.0)
            }
            ExtremalFamily::Wirtinger { orientation, .. } => {
                Complex64::from_polar(self.prefactor() * one_minus_cos.powf(q - 1.0), orientation.sign() * s)
            }
        }
    }

    /// `s(t)`: the Möbius map is an involution, so it inverts itself.
    pub fn s_of_theta(&self, theta: f64) -> f64 {
        mobius_unchecked(self.rho(), theta).theta
    }

    pub fn value(&self, theta: f64) -> Complex64 {
        self.value_at_s(self.s_of_theta(theta))
    }

    /// Non-smooth points of the integrands in `s`.
    pub fn kinks(&self) -> KinkSet {
        match *self {
            ExtremalFamily::Gradient { exponent, .. } => {
                if exponent.tangential_extremal() {
                    KinkSet::new([0.0, PI])
                } else {
                    KinkSet::new([0.0, FRAC_PI_2, -FRAC_PI_2])
                }
            }
            ExtremalFamily::Wirtinger { .. } => KinkSet::new([0.0]),
        }
    }

    /// `‖f_ρ‖_p` computed as `(∫ |f(s)|^p θ'(s) ds)^{1/p}`.
    pub fn lp_norm_with(&self, integ: &Integrator, e: Exponent) -> Result<f64> {
        if e.is_infinite() {
            return Ok(periodic_sup(|s| self.value_at_s(s).norm(), 4096));
        }
        Ok(self.lp_power_with(integ, e)?.powf(e.inv_p()))
    }

    /// `‖f_ρ‖_p^p`
    pub fn lp_power_with(&self, integ: &Integrator, e: Exponent) -> Result<f64> {
        if e.is_infinite() {
            return Err(Error::InvalidParameter("p-th power of the sup norm".into()));
        }
        let p = e.p();
        let rho = self.rho();
        let r = integ.integrate_periodic(
            |s| self.value_at_s(s).norm().powf(p) * mobius_unchecked(rho, s).jacobian,
            &self.kinks(),
        )?;
        Ok(r.value)
    }
}

pub fn make_extremal_gradient(rho: f64, e: Exponent) -> Result<BoundaryFunction> {
    Ok(ExtremalFamily::gradient(rho, e)?.into())
}

pub fn make_extremal_wirtinger(rho: f64, e: Exponent, orientation: Orientation) -> Result<BoundaryFunction> {
    Ok(ExtremalFamily::wirtinger(rho, e, orientation)?.into())
}

/// Direction in which the gradient family is differentiated at `z = ρ`.
pub fn ratio_direction(e: Exponent) -> Direction {
    if e.tangential_extremal() {
        Direction::new(FRAC_PI_2)
    } else {
        Direction::new(0.0)
    }
}

pub fn sharpness_ratio_gradient(e: Exponent, rho: f64) -> Result<f64> {
    sharpness_ratio_gradient_with(&Integrator::default(), e, rho)
}

/// `(1-ρ²)^{1+1/p} |Dw_ρ(ρ) e^{iτ}| / ‖f_ρ‖_p`
pub fn sharpness_ratio_gradient_with(integ: &Integrator, e: Exponent, rho: f64) -> Result<f64> {
    let fam = ExtremalFamily::gradient(rho, e)?;
    let ext = HarmonicExtension::new(fam);
    let d = ext.derivative_with(integ, &DiskPoint::new(rho, 0.0)?)?;
    let image = d.apply(&ratio_direction(e)).norm();
    Ok(image / e.growth_factor(rho) / fam.lp_norm_with(integ, e)?)
}

pub fn sharpness_ratio_wirtinger(e: Exponent, rho: f64, orientation: Orientation) -> Result<f64> {
    sharpness_ratio_wirtinger_with(&Integrator::default(), e, rho, orientation)
}

/// `(1-ρ²)^{1+1/p} |∂w_ρ(ρ)| / ‖f_ρ‖_p` (orientation `+`) or the same with `∂̄w` (`-`).
pub fn sharpness_ratio_wirtinger_with(
    integ: &Integrator,
    e: Exponent,
    rho: f64,
    orientation: Orientation,
) -> Result<f64> {
    let fam = ExtremalFamily::wirtinger(rho, e, orientation)?;
    let ext = HarmonicExtension::new(fam);
    let d = ext.derivative_with(integ, &DiskPoint::new(rho, 0.0)?)?;
    let part = match orientation {
        Orientation::Plus => d.dz,
        Orientation::Minus => d.dzbar,
    };
    Ok(part.norm() / e.growth_factor(rho) / fam.lp_norm_with(integ, e)?)
}

/// Limit at `h = 0` of the line through the last two `(h, v)` pairs.
pub fn extrapolate_linear(points: &[(f64, f64)]) -> Result<f64> {
    let n = points.len();
    if n < 2 {
        return Err(Error::InvalidParameter("extrapolation needs two points".into()));
    }
    let (h1, v1) = points[n - 2];
    let (h2, v2) = points[n - 1];
    if h1 == h2 {
        return Err(Error::InvalidParameter("extrapolation nodes coincide".into()));
    }
    Ok(v2 + (v2 - v1) * h2 / (h1 - h2))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LadderPoint {
    pub rho: f64,
    pub value: f64,
}

/// A quantity along a `ρ` ladder, its limit extrapolated linearly in `1 - ρ²`,
/// and the target it should approach.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SharpnessStudy {
    pub quantity: &'static str,
    pub exponent: Exponent,
    pub target: f64,
    pub ladder: Vec<LadderPoint>,
    pub extrapolated: f64,
    /// Observed only; the limit is what is claimed.
    pub monotone: bool,
}

impl SharpnessStudy {
    fn build(quantity: &'static str, exponent: Exponent, target: f64, ladder: Vec<LadderPoint>) -> Result<Self> {
        let pts: Vec<(f64, f64)> = ladder.iter().map(|l| (1.0 - l.rho * l.rho, l.value)).collect();
        let extrapolated = extrapolate_linear(&pts)?;
        let monotone = ladder.windows(2).all(|w| w[1].value >= w[0].value);
        Ok(Self {
            quantity,
            exponent,
            target,
            ladder,
            extrapolated,
            monotone,
        })
    }

    pub fn relative_error(&self) -> f64 {
        (self.extrapolated - self.target).abs() / self.target
    }

    pub fn last_raw_relative_error(&self) -> f64 {
        let last = self.ladder.last().map_or(f64::NAN, |l| l.value);
        (last - self.target).abs() / self.target
    }
}

fn ladder_values<F>(ladder: &[f64], exec: Execution, f: F) -> Result<Vec<LadderPoint>>
where
    F: Fn(f64) -> Result<f64> + Sync + Send,
{
    exec.try_map(ladder, |&rho| Ok(LadderPoint { rho, value: f(rho)? }))
}

/// Gradient ratio along the ladder against `C_p`.
pub fn gradient_study(integ: &Integrator, e: Exponent, ladder: &[f64], exec: Execution) -> Result<SharpnessStudy> {
    let target = global_constant_with(integ, e)?.value;
    let pts = ladder_values(ladder, exec, |rho| sharpness_ratio_gradient_with(integ, e, rho))?;
    SharpnessStudy::build("gradient ratio", e, target, pts)
}

/// Wirtinger ratio along the ladder against `c_p`.
pub fn wirtinger_study(
    integ: &Integrator,
    e: Exponent,
    orientation: Orientation,
    ladder: &[f64],
    exec: Execution,
) -> Result<SharpnessStudy> {
    let target = wirtinger_constant_global(e)?.value;
    let pts = ladder_values(ladder, exec, |rho| sharpness_ratio_wirtinger_with(integ, e, rho, orientation))?;
    SharpnessStudy::build("wirtinger ratio", e, target, pts)
}

/// `‖f_ρ‖_p^p` of the gradient family against `π^q C_p^q / 2^q`.
pub fn norm_limit_study(integ: &Integrator, e: Exponent, ladder: &[f64], exec: Execution) -> Result<SharpnessStudy> {
    let q = e.q();
    let cp = global_constant_with(integ, e)?.value;
    let target = (PI * cp / 2.0).powf(q);
    let pts = ladder_values(ladder, exec, |rho| ExtremalFamily::gradient(rho, e)?.lp_power_with(integ, e))?;
    SharpnessStudy::build("norm power", e, target, pts)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: f64) -> Exponent {
        Exponent::new(v).unwrap()
    }

    #[test]
    fn rejects_bad_rho() {
        assert!(ExtremalFamily::gradient(0.0, p(2.0)).is_err());
        assert!(ExtremalFamily::gradient(1.0, p(2.0)).is_err());
        assert!(ExtremalFamily::wirtinger(-0.1, p(2.0), Orientation::Plus).is_err());
    }

    #[test]
    fn small_rho_is_a_rotation_by_pi() {
        let e = p(1.5);
        let q = e.q();
        let rho = 1e-9;
        let fam = ExtremalFamily::gradient(rho, e).unwrap();
        for t in [0.3, 1.2, -2.0] {
            let s = t + PI;
            let expected = (s.cos() * (1.0 - s.cos())).abs().powf(q - 1.0) * s.cos().signum();
            assert!((fam.value(t).re - expected).abs() < 1e-7);
        }
    }

    #[test]
    fn gradient_family_is_real() {
        let fam = ExtremalFamily::gradient(0.8, p(3.0)).unwrap();
        for j in 0..50 {
            assert_eq!(fam.value(j as f64 * 0.13).im, 0.0);
        }
        let ext = HarmonicExtension::new(fam);
        let w = ext.evaluate(&DiskPoint::new(0.4, 1.0).unwrap()).unwrap();
        assert!(w.im.abs() <= 1e-10);
    }

    #[test]
    fn sup_norm_ratio_is_four_over_pi_at_every_rho() {
        for rho in [0.3, 0.9] {
            let r = sharpness_ratio_gradient(Exponent::infinity(), rho).unwrap();
            assert!((r - 4.0 / PI).abs() < 1e-8, "{r}");
        }
    }

    #[test]
    fn orientations_agree() {
        let e = p(2.5);
        let a = sharpness_ratio_wirtinger(e, 0.9, Orientation::Plus).unwrap();
        let b = sharpness_ratio_wirtinger(e, 0.9, Orientation::Minus).unwrap();
        assert!((a - b).abs() < 1e-8);
    }

    #[test]
    fn linear_extrapolation() {
        let v = extrapolate_linear(&[(0.5, 2.0), (0.25, 1.5)]).unwrap();
        assert!((v - 1.0).abs() < 1e-15);
        assert!(extrapolate_linear(&[(0.1, 1.0)]).is_err());
    }

    #[test]
    fn orientation_parsing() {
        assert_eq!("+".parse::<Orientation>().unwrap(), Orientation::Plus);
        assert_eq!("minus".parse::<Orientation>().unwrap(), Orientation::Minus);
        assert!("x".parse::<Orientation>().is_err());
    }
}
