//! Boundary data on the circle and its Poisson extension.
//!
//! Norm convention: `‖f‖_p = (∫₀^{2π} |f(e^{iθ})|^p dθ)^{1/p}`, with the
//! unnormalized measure `dθ`. This is the convention under which the
//! equality case `f = cos θ`, `p = 2`, `z = 0` reads
//! `|Dw(0)| = C₂(0) ‖f‖₂ = (1/√π)·√π = 1`. The normalized-measure norm
//! differs by the factor `(2π)^{1/p}`.

use std::f64::consts::TAU;
use std::sync::OnceLock;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::constants::Exponent;
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::extremal::{ExtremalFamily, Orientation};
use crate::kernel::{d_poisson, dbar_poisson, mobius_unchecked, poisson, DiskPoint, Direction};
use crate::quadrature::{Integrator, KinkSet};

/// Radii at which the `L^p` means of the dilations are taken.
pub const HARDY_LADDER: [f64; 6] = [0.5, 0.9, 0.99, 0.999, 0.9999, 0.99999];

/// Polar grid for [`HarmonicExtension::bloch_constant`].
pub const BLOCH_RADIAL: usize = 64;
pub const BLOCH_ANGULAR: usize = 128;
const BLOCH_REFINE: usize = 17;

const SUP_GRID_MIN: usize = 4096;
const GOLDEN: f64 = 0.618_033_988_749_894_9;

/// Trigonometric polynomial `Σ_{k=k_min}^{k_min+n-1} c_k e^{ikθ}`.
#[derive(Debug, Clone, PartialEq)]
pub struct TrigPoly {
    k_min: i64,
    coeffs: Vec<Complex64>,
}

impl TrigPoly {
    pub fn new(k_min: i64, coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidParameter("trig polynomial needs a coefficient".into()));
        }
        if coeffs.iter().any(|c| !c.re.is_finite() || !c.im.is_finite()) {
            return Err(Error::InvalidParameter("non-finite trig coefficient".into()));
        }
        Ok(Self { k_min, coeffs })
    }

    /// Symmetric layout `k = -n..=n`.
    pub fn symmetric(coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.len() % 2 == 0 {
            return Err(Error::InvalidParameter("symmetric layout needs 2N + 1 coefficients".into()));
        }
        let n = (coeffs.len() / 2) as i64;
        Self::new(-n, coeffs)
    }

    /// `Σ_{k≥0} c_k e^{ikθ}`: boundary values of an analytic polynomial.
    pub fn analytic(coeffs: Vec<Complex64>) -> Result<Self> {
        Self::new(0, coeffs)
    }

    pub fn monomial(k: i64) -> Self {
        Self {
            k_min: k,
            coeffs: vec![Complex64::new(1.0, 0.0)],
        }
    }

    /// `cos θ`
    pub fn cosine() -> Self {
        Self {
            k_min: -1,
            coeffs: vec![Complex64::new(0.5, 0.0), Complex64::new(0.0, 0.0), Complex64::new(0.5, 0.0)],
        }
    }

    pub fn constant(c: f64) -> Self {
        Self {
            k_min: 0,
            coeffs: vec![Complex64::new(c, 0.0)],
        }
    }

    pub fn k_min(&self) -> i64 {
        self.k_min
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn k_max(&self) -> i64 {
        self.k_min + self.coeffs.len() as i64 - 1
    }

    pub fn degree(&self) -> u64 {
        self.k_min.unsigned_abs().max(self.k_max().unsigned_abs())
    }

    pub fn coefficient(&self, k: i64) -> Complex64 {
        if k < self.k_min || k > self.k_max() {
            return Complex64::new(0.0, 0.0);
        }
        self.coeffs[(k - self.k_min) as usize]
    }

    fn terms(&self) -> impl Iterator<Item = (i64, Complex64)> + '_ {
        self.coeffs.iter().enumerate().map(move |(i, &c)| (self.k_min + i as i64, c))
    }

    pub fn is_analytic(&self) -> bool {
        self.terms().all(|(k, c)| k >= 0 || c == Complex64::new(0.0, 0.0))
    }

    pub fn boundary_value(&self, theta: f64) -> Complex64 {
        self.terms().map(|(k, c)| c * Complex64::from_polar(1.0, k as f64 * theta)).sum()
    }

    /// Coefficients scaled by `r^{|k|}`: the boundary data of `w(r·)`.
    pub fn dilate(&self, r: f64) -> Self {
        Self {
            k_min: self.k_min,
            coeffs: self.terms().map(|(k, c)| c * r.powi(k.unsigned_abs() as i32)).collect(),
        }
    }

    /// Split into (analytic part `Σ_{k≥0}`, co-analytic part `Σ_{k<0}` as powers of z̄).
    fn split_powers(&self) -> (Vec<Complex64>, Vec<Complex64>) {
        let mut analytic = vec![Complex64::new(0.0, 0.0); self.k_max().max(-1).saturating_add(1) as usize];
        let mut co = vec![Complex64::new(0.0, 0.0); (-self.k_min).max(0) as usize + 1];
        for (k, c) in self.terms() {
            if k >= 0 {
                analytic[k as usize] = c;
            } else {
                co[(-k) as usize] = c;
            }
        }
        (analytic, co)
    }

    /// `Σ_{k≥0} c_k z^k + Σ_{k<0} c_k z̄^{|k|}`
    pub fn extension_value(&self, z: Complex64) -> Complex64 {
        let (analytic, co) = self.split_powers();
        horner(&analytic, z) + horner(&co, z.conj()) - co[0]
    }

    pub fn extension_derivative(&self, z: Complex64) -> DerivativePair {
        let (analytic, co) = self.split_powers();
        DerivativePair {
            dz: horner_derivative(&analytic, z),
            dzbar: horner_derivative(&co, z.conj()),
        }
    }

    /// Values at the `m` uniform nodes `2πj/m`.
    pub fn to_samples(&self, m: usize) -> Result<Samples> {
        Samples::new((0..m).map(|j| self.boundary_value(TAU * j as f64 / m as f64)).collect())
    }
}

fn horner(c: &[Complex64], z: Complex64) -> Complex64 {
    c.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &a| acc * z + a)
}

fn horner_derivative(c: &[Complex64], z: Complex64) -> Complex64 {
    c.iter()
        .enumerate()
        .skip(1)
        .rev()
        .fold(Complex64::new(0.0, 0.0), |acc, (k, &a)| acc * z + a * k as f64)
}

/// `M` uniform samples `f(2πj/M)`, `M` a power of two `≥ 16`.
#[derive(Debug, Clone)]
pub struct Samples {
    values: Vec<Complex64>,
    spectrum: OnceLock<TrigPoly>,
}

impl PartialEq for Samples {
    fn eq(&self, other: &Self) -> bool {
        self.values == other.values
    }
}

impl Samples {
    pub fn new(values: Vec<Complex64>) -> Result<Self> {
        let m = values.len();
        if m < 16 || !m.is_power_of_two() {
            return Err(Error::InvalidParameter(format!(
                "sample count {m} must be a power of two >= 16"
            )));
        }
        if values.iter().any(|v| !v.re.is_finite() || !v.im.is_finite()) {
            return Err(Error::InvalidParameter("non-finite sample".into()));
        }
        Ok(Self {
            values,
            spectrum: OnceLock::new(),
        })
    }

    pub fn from_real(values: &[f64]) -> Result<Self> {
        Self::new(values.iter().map(|&v| Complex64::new(v, 0.0)).collect())
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn node(&self, j: usize) -> f64 {
        TAU * j as f64 / self.values.len() as f64
    }

    /// Trigonometric interpolant through the samples (Nyquist term split
    /// evenly between `±M/2`).
    pub fn interpolant(&self) -> &TrigPoly {
        self.spectrum.get_or_init(|| {
            let m = self.values.len();
            let half = (m / 2) as i64;
            let coeffs = (-half..=half)
                .map(|k| {
                    let sum: Complex64 = self
                        .values
                        .iter()
                        .enumerate()
                        .map(|(j, &f)| f * Complex64::from_polar(1.0, -(k as f64) * self.node(j)))
                        .sum();
                    let c = sum / m as f64;
                    if k.abs() == half {
                        c * 0.5
                    } else {
                        c
                    }
                })
                .collect();
            TrigPoly { k_min: -half, coeffs }
        })
    }
}

/// Boundary data `f(e^{iθ})`.
#[derive(Debug, Clone, PartialEq)]
pub enum BoundaryFunction {
    TrigPoly(TrigPoly),
    Sampled(Samples),
    Named(ExtremalFamily),
}

impl From<TrigPoly> for BoundaryFunction {
    fn from(p: TrigPoly) -> Self {
        BoundaryFunction::TrigPoly(p)
    }
}

impl From<Samples> for BoundaryFunction {
    fn from(s: Samples) -> Self {
        BoundaryFunction::Sampled(s)
    }
}

impl From<ExtremalFamily> for BoundaryFunction {
    fn from(f: ExtremalFamily) -> Self {
        BoundaryFunction::Named(f)
    }
}

impl BoundaryFunction {
    /// Pointwise boundary value (the trigonometric interpolant for samples).
    pub fn value(&self, theta: f64) -> Complex64 {
        match self {
            BoundaryFunction::TrigPoly(p) => p.boundary_value(theta),
            BoundaryFunction::Sampled(s) => s.interpolant().boundary_value(theta),
            BoundaryFunction::Named(f) => f.value(theta),
        }
    }

    pub fn lp_norm(&self, e: Exponent) -> Result<f64> {
        self.lp_norm_with(&Integrator::default(), e)
    }

    /// `(∫₀^{2π} |f|^p dθ)^{1/p}`, or the essential supremum at `p = ∞`.
    pub fn lp_norm_with(&self, integ: &Integrator, e: Exponent) -> Result<f64> {
        match self {
            BoundaryFunction::TrigPoly(poly) => {
                if e.is_infinite() {
                    let n = SUP_GRID_MIN.max(64 * poly.degree() as usize);
                    return Ok(periodic_sup(|t| poly.boundary_value(t).norm(), n));
                }
                let p = e.p();
                let r = integ.integrate_periodic(|t| poly.boundary_value(t).norm().powf(p), &KinkSet::empty())?;
                Ok(r.value.powf(1.0 / p))
            }
            BoundaryFunction::Sampled(s) => {
                if e.is_infinite() {
                    return Ok(s.values.iter().map(|v| v.norm()).fold(0.0, f64::max));
                }
                let p = e.p();
                let h = TAU / s.len() as f64;
                let sum: f64 = s.values.iter().map(|v| v.norm().powf(p)).sum();
                Ok((h * sum).powf(1.0 / p))
            }
            BoundaryFunction::Named(fam) => fam.lp_norm_with(integ, e),
        }
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string(&BoundaryDoc::from(self))?)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str::<BoundaryDoc>(s)?.try_into()
    }
}

/// Supremum of a 2π-periodic function: uniform grid, then golden-section
/// refinement around the best few cells.
pub(crate) fn periodic_sup<F: Fn(f64) -> f64>(f: F, n: usize) -> f64 {
    let h = TAU / n as f64;
    let mut vals: Vec<(f64, f64)> = (0..n).map(|j| (j as f64 * h, f(j as f64 * h))).collect();
    vals.sort_by(|a, b| b.1.total_cmp(&a.1));
    vals.iter()
        .take(8)
        .map(|&(t, v)| golden_max(&f, t - h, t + h, 60).max(v))
        .fold(f64::NEG_INFINITY, f64::max)
}

/// Golden-section search for a local maximum of `f` on `[a, b]`; returns the value.
pub(crate) fn golden_max<F: Fn(f64) -> f64>(f: &F, mut a: f64, mut b: f64, iters: usize) -> f64 {
    golden_argmax(f, &mut a, &mut b, iters).1
}

/// Golden-section search returning `(argmax, max)`.
pub(crate) fn golden_argmax<F: Fn(f64) -> f64>(f: &F, a: &mut f64, b: &mut f64, iters: usize) -> (f64, f64) {
    let mut x1 = *b - GOLDEN * (*b - *a);
    let mut x2 = *a + GOLDEN * (*b - *a);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    for _ in 0..iters {
        if f1 < f2 {
            *a = x1;
            x1 = x2;
            f1 = f2;
            x2 = *a + GOLDEN * (*b - *a);
            f2 = f(x2);
        } else {
            *b = x2;
            x2 = x1;
            f2 = f1;
            x1 = *b - GOLDEN * (*b - *a);
            f1 = f(x1);
        }
    }
    if f1 > f2 {
        (x1, f1)
    } else {
        (x2, f2)
    }
}

/// `∂w` and `∂̄w` at a point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DerivativePair {
    pub dz: Complex64,
    pub dzbar: Complex64,
}

impl DerivativePair {
    /// Operator norm of the formal differential: `|∂w| + |∂̄w|`.
    pub fn norm(&self) -> f64 {
        self.dz.norm() + self.dzbar.norm()
    }

    /// `Dw(z) e^{iτ} = ∂w e^{iτ} + ∂̄w e^{-iτ}`.
    pub fn apply(&self, d: &Direction) -> Complex64 {
        let u = d.unit();
        self.dz * u + self.dzbar * u.conj()
    }

    /// The direction attaining [`norm`](Self::norm).
    pub fn maximizing_direction(&self) -> Direction {
        // |∂w e^{iτ} + ∂̄w e^{-iτ}| is maximal when both terms share an argument
        Direction::new(0.5 * (self.dzbar.arg() - self.dz.arg()))
    }
}

/// `L^p` means of the dilations and the resulting `h^p` norm.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HardyNorm {
    /// Extrapolated `lim_{r→1}` of the ladder, never below the ladder supremum.
    pub value: f64,
    pub ladder_sup: f64,
    /// `(r, ‖w(r·)‖_p)` along [`HARDY_LADDER`].
    pub ladder: Vec<(f64, f64)>,
}

impl HardyNorm {
    pub fn is_nondecreasing(&self) -> bool {
        self.ladder.windows(2).all(|w| w[1].1 >= w[0].1 * (1.0 - 1e-12))
    }
}

/// Grid estimate of `sup_z (1 - |z|²)|Dw(z)|`; a lower bound for the true supremum.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BlochEstimate {
    pub value: f64,
    pub at: DiskPoint,
    pub radial_step: f64,
    pub angular_step: f64,
}

/// The Poisson extension `w = P[f]`.
#[derive(Debug, Clone, PartialEq)]
pub struct HarmonicExtension {
    source: BoundaryFunction,
}

impl HarmonicExtension {
    pub fn new(source: impl Into<BoundaryFunction>) -> Self {
        Self { source: source.into() }
    }

    pub fn source(&self) -> &BoundaryFunction {
        &self.source
    }

    pub fn evaluate(&self, z: &DiskPoint) -> Result<Complex64> {
        self.evaluate_with(&Integrator::default(), z)
    }

    pub fn evaluate_with(&self, integ: &Integrator, z: &DiskPoint) -> Result<Complex64> {
        match &self.source {
            BoundaryFunction::TrigPoly(p) => Ok(p.extension_value(z.to_complex())),
            BoundaryFunction::Sampled(s) => Ok(sampled_integral(s, |t| Complex64::new(poisson(z, t), 0.0))),
            BoundaryFunction::Named(fam) => {
                named_integral(integ, fam, |t| Complex64::new(poisson(z, t), 0.0)).map(|v| v / TAU)
            }
        }
    }

    pub fn derivative(&self, z: &DiskPoint) -> Result<DerivativePair> {
        self.derivative_with(&Integrator::default(), z)
    }

    pub fn derivative_with(&self, integ: &Integrator, z: &DiskPoint) -> Result<DerivativePair> {
        match &self.source {
            BoundaryFunction::TrigPoly(p) => Ok(p.extension_derivative(z.to_complex())),
            BoundaryFunction::Sampled(s) => Ok(DerivativePair {
                dz: sampled_integral(s, |t| d_poisson(z, t)),
                dzbar: sampled_integral(s, |t| dbar_poisson(z, t)),
            }),
            BoundaryFunction::Named(fam) => Ok(DerivativePair {
                dz: named_integral(integ, fam, |t| d_poisson(z, t))? / TAU,
                dzbar: named_integral(integ, fam, |t| dbar_poisson(z, t))? / TAU,
            }),
        }
    }

    pub fn hardy_norm(&self, e: Exponent) -> Result<HardyNorm> {
        self.hardy_norm_with(&Integrator::default(), e)
    }

    /// `sup_r ‖w(r·)‖_p` over [`HARDY_LADDER`], extrapolated linearly in
    /// `1 - r` from the two outermost rungs.
    pub fn hardy_norm_with(&self, integ: &Integrator, e: Exponent) -> Result<HardyNorm> {
        let poly = match &self.source {
            BoundaryFunction::TrigPoly(p) => p.clone(),
            BoundaryFunction::Sampled(s) => s.interpolant().clone(),
            BoundaryFunction::Named(_) => {
                return Err(Error::Unsupported("h^p norm of a named family; use lp_norm".into()))
            }
        };
        let ladder = HARDY_LADDER
            .iter()
            .map(|&r| Ok((r, BoundaryFunction::TrigPoly(poly.dilate(r)).lp_norm_with(integ, e)?)))
            .collect::<Result<Vec<_>>>()?;
        let ladder_sup = ladder.iter().map(|&(_, v)| v).fold(0.0, f64::max);
        let n = ladder.len();
        let (r1, v1) = ladder[n - 2];
        let (r2, v2) = ladder[n - 1];
        let (h1, h2) = (1.0 - r1, 1.0 - r2);
        let extrapolated = v2 + (v2 - v1) * h2 / (h1 - h2);
        Ok(HardyNorm {
            value: extrapolated.max(ladder_sup),
            ladder_sup,
            ladder,
        })
    }

    pub fn bloch_constant(&self) -> Result<BlochEstimate> {
        self.bloch_constant_with(&Integrator::default(), Execution::default())
    }

    /// `sup (1 - |z|²)|Dw(z)|` over a 64×128 polar grid, then one finer
    /// pass around the grid maximiser.
    pub fn bloch_constant_with(&self, integ: &Integrator, exec: Execution) -> Result<BlochEstimate> {
        let dr = 1.0 / BLOCH_RADIAL as f64;
        let da = TAU / BLOCH_ANGULAR as f64;
        let nodes: Vec<(f64, f64)> = (0..BLOCH_RADIAL)
            .flat_map(|i| (0..BLOCH_ANGULAR).map(move |j| (i as f64 * dr, j as f64 * da)))
            .collect();
        let stretch = |&(r, a): &(f64, f64)| -> Result<(f64, DiskPoint)> {
            let z = DiskPoint::new(r, a)?;
            Ok(((1.0 - r * r) * self.derivative_with(integ, &z)?.norm(), z))
        };
        let coarse = exec.try_map(&nodes, stretch)?;
        let (best, at) = coarse
            .into_iter()
            .max_by(|a, b| a.0.total_cmp(&b.0))
            .expect("non-empty grid");

        let step_r = 2.0 * dr / (BLOCH_REFINE - 1) as f64;
        let step_a = 2.0 * da / (BLOCH_REFINE - 1) as f64;
        let fine_nodes: Vec<(f64, f64)> = (0..BLOCH_REFINE)
            .flat_map(|i| {
                (0..BLOCH_REFINE).map(move |j| {
                    (at.r() - dr + i as f64 * step_r, at.alpha() - da + j as f64 * step_a)
                })
            })
            .filter(|&(r, _)| (0.0..1.0).contains(&r))
            .collect();
        let fine = exec.try_map(&fine_nodes, stretch)?;
        let (value, at) = fine
            .into_iter()
            .fold((best, at), |acc, c| if c.0 > acc.0 { c } else { acc });
        Ok(BlochEstimate {
            value,
            at,
            radial_step: step_r,
            angular_step: step_a,
        })
    }
}

/// `(1/M) Σ_j K(θ_j) f_j`, the trapezoid rule for `(1/2π)∫ K f dθ`.
fn sampled_integral<K: Fn(f64) -> Complex64>(s: &Samples, kernel: K) -> Complex64 {
    let m = s.len() as f64;
    s.values
        .iter()
        .enumerate()
        .map(|(j, &f)| kernel(s.node(j)) * f)
        .sum::<Complex64>()
        / m
}

/// `∫₀^{2π} K(θ) f(θ) dθ` for a named family, integrated in the Möbius
/// variable `s` of the family.
fn named_integral<K: Fn(f64) -> Complex64>(integ: &Integrator, fam: &ExtremalFamily, kernel: K) -> Result<Complex64> {
    let rho = fam.rho();
    let kinks = fam.kinks();
    let integrand = |s: f64| {
        let sub = mobius_unchecked(rho, s);
        kernel(sub.theta) * fam.value_at_s(s) * sub.jacobian
    };
    // both parts are judged against the size of the complex integrand, so a
    // part that cancels to roundoff does not stall the refinement
    let scale = integ.integrate_periodic(|s| integrand(s).norm(), &kinks)?.value;
    let parts = Integrator {
        tol: integ.tol.max(integ.rel_tol * scale),
        ..*integ
    };
    let re = parts.integrate_periodic(|s| integrand(s).re, &kinks)?;
    let im = parts.integrate_periodic(|s| integrand(s).im, &kinks)?;
    Ok(Complex64::new(re.value, im.value))
}

// ---- JSON document --------------------------------------------------------

#[derive(Debug, Serialize, Deserialize)]
#[serde(untagged)]
enum SampleValue {
    Real(f64),
    Complex([f64; 2]),
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(untagged)]
enum ExponentDoc {
    Number(f64),
    Text(String),
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
enum BoundaryDoc {
    Trigpoly {
        coeffs: Vec<[f64; 2]>,
        k_min: i64,
    },
    Samples {
        values: Vec<SampleValue>,
    },
    Extremal {
        family: String,
        rho: f64,
        p: ExponentDoc,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        orientation: Option<String>,
    },
}

impl From<&BoundaryFunction> for BoundaryDoc {
    fn from(f: &BoundaryFunction) -> Self {
        let exponent_doc = |e: Exponent| {
            if e.is_infinite() {
                ExponentDoc::Text("inf".into())
            } else {
                ExponentDoc::Number(e.p())
            }
        };
        match f {
            BoundaryFunction::TrigPoly(p) => BoundaryDoc::Trigpoly {
                coeffs: p.coeffs.iter().map(|c| [c.re, c.im]).collect(),
                k_min: p.k_min,
            },
            BoundaryFunction::Sampled(s) => {
                let real = s.values.iter().all(|v| v.im == 0.0);
                BoundaryDoc::Samples {
                    values: s
                        .values
                        .iter()
                        .map(|v| {
                            if real {
                                SampleValue::Real(v.re)
                            } else {
                                SampleValue::Complex([v.re, v.im])
                            }
                        })
                        .collect(),
                }
            }
            BoundaryFunction::Named(ExtremalFamily::Gradient { rho, exponent }) => BoundaryDoc::Extremal {
                family: "gradient".into(),
                rho: *rho,
                p: exponent_doc(*exponent),
                orientation: None,
            },
            BoundaryFunction::Named(ExtremalFamily::Wirtinger {
                rho,
                exponent,
                orientation,
            }) => BoundaryDoc::Extremal {
                family: "wirtinger".into(),
                rho: *rho,
                p: exponent_doc(*exponent),
                orientation: Some(orientation.to_string()),
            },
        }
    }
}

impl TryFrom<BoundaryDoc> for BoundaryFunction {
    type Error = Error;

    fn try_from(doc: BoundaryDoc) -> Result<Self> {
        match doc {
            BoundaryDoc::Trigpoly { coeffs, k_min } => Ok(TrigPoly::new(
                k_min,
                coeffs.into_iter().map(|[re, im]| Complex64::new(re, im)).collect(),
            )?
            .into()),
            BoundaryDoc::Samples { values } => Ok(Samples::new(
                values
                    .into_iter()
                    .map(|v| match v {
                        SampleValue::Real(x) => Complex64::new(x, 0.0),
                        SampleValue::Complex([re, im]) => Complex64::new(re, im),
                    })
                    .collect(),
            )?
            .into()),
            BoundaryDoc::Extremal {
                family,
                rho,
                p,
                orientation,
            } => {
                let e = match p {
                    ExponentDoc::Number(v) => Exponent::new(v)?,
                    ExponentDoc::Text(t) => t.parse()?,
                };
                match family.as_str() {
                    "gradient" => Ok(ExtremalFamily::gradient(rho, e)?.into()),
                    "wirtinger" => {
                        let o: Orientation = orientation.as_deref().unwrap_or("+").parse()?;
                        Ok(ExtremalFamily::wirtinger(rho, e, o)?.into())
                    }
                    other => Err(Error::InvalidParameter(format!("unknown extremal family {other:?}"))),
                }
            }
        }
    }
}
