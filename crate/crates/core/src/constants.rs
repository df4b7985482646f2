//! The sharp constants of the gradient estimates, by quadrature and by
//! closed form.
//!
//! With `q` the conjugate exponent and `z = r e^{iα}`:
//!
//! * `C_p(z, e^{iτ}) = (1/π) (∫_{-π}^{π} |cos(s+τ-α)|^q (1 + r² - 2r cos s)^{q-1} ds)^{1/q}`
//! * `C_p(z)` takes the radial direction for `p < 2` and the tangential one
//!   for `p ≥ 2`; for `p ≥ 2` it also has a Beta/`₂F₁` closed form.
//! * `C_p = sup_z C_p(z)` is the `r = 1` integral.
//! * `c_p(z) = (2π)^{1/q-1} F(1-q, 1-q; 1; r²)^{1/q}` and its supremum `c_p`
//!   in Gamma functions.
//!
//! `p = ∞` is a first-class exponent with `q = 1`.

use std::f64::consts::{FRAC_PI_2, PI, TAU};
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::kernel::{DiskPoint, Direction};
use crate::quadrature::{Integrator, KinkSet, QuadResult};
use crate::specfun::{beta, gamma, HypergeometricParams};

/// Relative accuracy claimed for Gamma/Beta evaluations.
const SPECFUN_REL: f64 = 1e-12;

/// Agreement threshold between closed form and quadrature.
pub const CROSS_CHECK_TOL: f64 = 1e-8;

/// Radius above which `s = 0` is declared a kink of the weight.
pub const NEAR_BOUNDARY_R: f64 = 0.9;

/// A Hardy exponent `p ∈ (1, ∞]` with conjugate `q = p/(p-1)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Exponent {
    p: f64,
}

impl Exponent {
    pub fn new(p: f64) -> Result<Self> {
        if p.is_nan() || p <= 1.0 {
            return Err(Error::Domain(format!("exponent p = {p} must lie in (1, ∞]")));
        }
        Ok(Self { p })
    }

    pub fn infinity() -> Self {
        Self { p: f64::INFINITY }
    }

    /// From the conjugate exponent; `q = 1` gives `p = ∞`.
    pub fn from_conjugate(q: f64) -> Result<Self> {
        if !(q >= 1.0) || !q.is_finite() {
            return Err(Error::Domain(format!("conjugate exponent q = {q} must lie in [1, ∞)")));
        }
        if q == 1.0 {
            return Ok(Self::infinity());
        }
        Self::new(q / (q - 1.0))
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn q(&self) -> f64 {
        if self.p.is_infinite() {
            1.0
        } else {
            1.0 / (1.0 - 1.0 / self.p)
        }
    }

    /// `1/p`, zero at `p = ∞`.
    pub fn inv_p(&self) -> f64 {
        1.0 / self.p
    }

    pub fn is_infinite(&self) -> bool {
        self.p.is_infinite()
    }

    /// The tangential direction is extremal for `p ≥ 2`.
    pub fn tangential_extremal(&self) -> bool {
        self.p >= 2.0
    }

    /// `(1 - r²)^{-1-1/p}`, the growth factor of the estimates.
    pub fn growth_factor(&self, r: f64) -> f64 {
        (1.0 - r * r).powf(-1.0 - self.inv_p())
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_infinite() {
            f.write_str("inf")
        } else {
            write!(f, "{}", self.p)
        }
    }
}

impl FromStr for Exponent {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "inf" | "infinity" | "∞" => Ok(Self::infinity()),
            t => t
                .parse::<f64>()
                .map_err(|_| Error::InvalidParameter(format!("cannot parse exponent {s:?}")))
                .and_then(Self::new),
        }
    }
}

impl Serialize for Exponent {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        if self.is_infinite() {
            s.serialize_str("inf")
        } else {
            s.serialize_f64(self.p)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Quadrature,
    ClosedForm,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Quadrature => "quadrature",
            Method::ClosedForm => "closed-form",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ConstantReport {
    pub value: f64,
    pub method: Method,
    /// Absolute error estimate.
    pub error_estimate: f64,
}

impl ConstantReport {
    fn from_integral(integral: QuadResult, q: f64, scale: f64) -> Self {
        // value = scale · I^{1/q}
        let value = scale * integral.value.powf(1.0 / q);
        let error_estimate = value / q * integral.error_estimate / integral.value.abs();
        Self {
            value,
            method: Method::Quadrature,
            error_estimate,
        }
    }

    fn closed(value: f64, rel_error: f64) -> Self {
        Self {
            value,
            method: Method::ClosedForm,
            error_estimate: value.abs() * rel_error,
        }
    }

    /// Whether two reports of the same quantity agree within `tol` plus
    /// their combined error estimates.
    pub fn agrees_with(&self, other: &ConstantReport, tol: f64) -> bool {
        (self.value - other.value).abs() <= tol + self.error_estimate + other.error_estimate
    }
}

fn check_radius(r: f64) -> Result<()> {
    if !(0.0..1.0).contains(&r) {
        return Err(Error::Domain(format!("radius r = {r} must lie in [0, 1)")));
    }
    Ok(())
}

/// `1 + r² - 2r cos s`, written to stay accurate near `r = 1, s = 0`.
pub(crate) fn boundary_weight_base(r: f64, s: f64) -> f64 {
    let h = (0.5 * s).sin();
    (1.0 - r) * (1.0 - r) + 4.0 * r * h * h
}

/// `∫_{-π}^{π} |cos(s + shift)|^q (1 + r² - 2r cos s)^{q-1} ds` for `r ∈ [0, 1]`.
pub(crate) fn weighted_cosine_integral(integ: &Integrator, q: f64, r: f64, shift: f64) -> Result<QuadResult> {
    let mut kinks = KinkSet::cosine_zeros(shift);
    if r > NEAR_BOUNDARY_R {
        kinks = kinks.with(0.0);
    }
    integ.integrate_periodic(
        |s| (s + shift).cos().abs().powf(q) * boundary_weight_base(r, s).powf(q - 1.0),
        &kinks,
    )
}

/// `C_p(z, e^{iτ})` by quadrature.
pub fn directional_constant_with(
    integ: &Integrator,
    e: Exponent,
    z: &DiskPoint,
    d: &Direction,
) -> Result<ConstantReport> {
    let q = e.q();
    let integral = weighted_cosine_integral(integ, q, z.r(), d.tau() - z.alpha())?;
    Ok(ConstantReport::from_integral(integral, q, 1.0 / PI))
}

pub fn directional_constant(e: Exponent, z: &DiskPoint, d: &Direction) -> Result<ConstantReport> {
    directional_constant_with(&Integrator::default(), e, z, d)
}

/// The extremal direction at `z` for exponent `e`.
pub fn extremal_direction(e: Exponent, z: &DiskPoint) -> Direction {
    if e.tangential_extremal() {
        Direction::tangential(z)
    } else {
        Direction::radial(z)
    }
}

/// `C_p(z)` by quadrature in the extremal direction; for `p ≥ 2` the value
/// is also checked against [`gradient_constant_closed`].
pub fn gradient_constant_with(integ: &Integrator, e: Exponent, z: &DiskPoint) -> Result<ConstantReport> {
    let quad = directional_constant_with(integ, e, z, &extremal_direction(e, z))?;
    if e.tangential_extremal() {
        let closed = gradient_constant_closed(e, z.r())?;
        if !quad.agrees_with(&closed, CROSS_CHECK_TOL * quad.value.max(1.0)) {
            return Err(Error::CrossCheck {
                what: "gradient constant (quadrature vs closed form)",
                left: quad.value,
                right: closed.value,
            });
        }
    }
    Ok(quad)
}

pub fn gradient_constant(e: Exponent, z: &DiskPoint) -> Result<ConstantReport> {
    gradient_constant_with(&Integrator::default(), e, z)
}

/// `C_p(z) = 2^{1/q}/π · (B((1+q)/2, 1/2) F(1 - 3q/2, 1 - q; 1 + q/2; r²))^{1/q}`, `p ≥ 2`.
pub fn gradient_constant_closed(e: Exponent, r: f64) -> Result<ConstantReport> {
    if !e.tangential_extremal() {
        return Err(Error::InvalidParameter(format!(
            "closed form for C_p(z) needs p >= 2, got p = {e}"
        )));
    }
    check_radius(r)?;
    let q = e.q();
    let b = beta(0.5 * (1.0 + q), 0.5)?;
    let f = HypergeometricParams::new(1.0 - 1.5 * q, 1.0 - q, 1.0 + 0.5 * q, r * r)?.eval_with_error()?;
    let value = 2f64.powf(1.0 / q) / PI * (b * f.value).powf(1.0 / q);
    let rel = (SPECFUN_REL + f.error_estimate / f.value.abs()) / q;
    Ok(ConstantReport::closed(value, rel))
}

/// Which trigonometric factor the `r = 1` integral carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GlobalBranch {
    /// `|cos s|^q`, radial, `1 < p < 2`.
    Cosine,
    /// `|sin s|^q`, tangential, `p ≥ 2`.
    Sine,
}

impl GlobalBranch {
    pub fn for_exponent(e: Exponent) -> Self {
        if e.tangential_extremal() {
            GlobalBranch::Sine
        } else {
            GlobalBranch::Cosine
        }
    }

    fn shift(self) -> f64 {
        match self {
            GlobalBranch::Cosine => 0.0,
            GlobalBranch::Sine => -FRAC_PI_2,
        }
    }
}

/// `∫_{-π}^{π} |trig s|^q (2 - 2cos s)^{q-1} ds` for the given branch.
pub fn global_integral_with(integ: &Integrator, e: Exponent, branch: GlobalBranch) -> Result<QuadResult> {
    weighted_cosine_integral(integ, e.q(), 1.0, branch.shift())
}

/// `C_p = sup_z C_p(z)`, the `r = 1` integral on the branch selected by `p`.
pub fn global_constant_with(integ: &Integrator, e: Exponent) -> Result<ConstantReport> {
    let integral = global_integral_with(integ, e, GlobalBranch::for_exponent(e))?;
    Ok(ConstantReport::from_integral(integral, e.q(), 1.0 / PI))
}

pub fn global_constant(e: Exponent) -> Result<ConstantReport> {
    global_constant_with(&Integrator::default(), e)
}

/// `c_p(z) = (2π)^{1/q-1} F(1-q, 1-q; 1; r²)^{1/q}`.
pub fn wirtinger_constant(e: Exponent, r: f64) -> Result<ConstantReport> {
    check_radius(r)?;
    let q = e.q();
    let f = HypergeometricParams::new(1.0 - q, 1.0 - q, 1.0, r * r)?.eval_with_error()?;
    let value = TAU.powf(1.0 / q - 1.0) * f.value.powf(1.0 / q);
    let rel = (SPECFUN_REL + f.error_estimate / f.value.abs()) / q;
    Ok(ConstantReport::closed(value, rel))
}

/// `c_p(z)` through the Hölder integral after the Möbius substitution:
/// `(1/2π) (∫₀^{2π} |1 - r e^{is}|^{2q-2} ds)^{1/q}`.
pub fn wirtinger_constant_quadrature_with(integ: &Integrator, e: Exponent, r: f64) -> Result<ConstantReport> {
    check_radius(r)?;
    let q = e.q();
    let kinks = if r > NEAR_BOUNDARY_R {
        KinkSet::new([0.0])
    } else {
        KinkSet::empty()
    };
    let integral = integ.integrate_periodic(|s| boundary_weight_base(r, s).powf(q - 1.0), &kinks)?;
    Ok(ConstantReport::from_integral(integral, q, 1.0 / TAU))
}

pub fn wirtinger_constant_quadrature(e: Exponent, r: f64) -> Result<ConstantReport> {
    wirtinger_constant_quadrature_with(&Integrator::default(), e, r)
}

/// `c_p = 2^{(q-1)/q} π^{-1+1/(2q)} (Γ(q - 1/2)/Γ(q))^{1/q}`.
pub fn wirtinger_constant_global(e: Exponent) -> Result<ConstantReport> {
    let q = e.q();
    let ratio = gamma(q - 0.5)? / gamma(q)?;
    let value = 2f64.powf((q - 1.0) / q) * PI.powf(-1.0 + 0.5 / q) * ratio.powf(1.0 / q);
    Ok(ConstantReport::closed(value, 2.0 * SPECFUN_REL))
}

/// Macintyre–Rogosinski factor `(1 + r²/(p-1)²)^{1/q}`.
pub fn mr_factor(e: Exponent, r: f64) -> f64 {
    let q = e.q();
    if e.is_infinite() {
        return 1.0;
    }
    let pm1 = e.p() - 1.0;
    (1.0 + r * r / (pm1 * pm1)).powf(1.0 / q)
}

/// The q-th powers of `c_p(z)` and of the Macintyre–Rogosinski factor.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MrComparison {
    /// `(2π)^{1-q} F(1-q, 1-q; 1; r²)`
    pub sharp: f64,
    /// `1 + r²/(p-1)²`
    pub classical: f64,
}

impl MrComparison {
    pub fn margin(&self) -> f64 {
        self.classical - self.sharp
    }
}

pub fn mr_comparison(e: Exponent, r: f64) -> Result<MrComparison> {
    check_radius(r)?;
    let q = e.q();
    let f = HypergeometricParams::new(1.0 - q, 1.0 - q, 1.0, r * r)?.eval()?;
    let classical = if e.is_infinite() {
        1.0
    } else {
        1.0 + r * r / (e.p() - 1.0).powi(2)
    };
    Ok(MrComparison {
        sharp: TAU.powf(1.0 - q) * f,
        classical,
    })
}
