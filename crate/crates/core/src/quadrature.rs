//! Adaptive Gauss–Kronrod (7/15) quadrature on intervals and on the circle.
//!
//! Subintervals live in a max-heap keyed by their error estimate; the worst
//! one is bisected until the summed estimate meets the tolerance. Periodic
//! integrands are pre-split at their declared kinks so every panel the rule
//! sees is smooth.

use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::f64::consts::{PI, TAU};

use serde::Serialize;

use crate::error::{Error, Result};

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_8,
];
// Gauss 7-point weights on the odd Kronrod nodes (XGK[1], XGK[3], XGK[5], centre).
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

pub const DEFAULT_TOL: f64 = 1e-10;
pub const DEFAULT_REL_TOL: f64 = 1e-12;
pub const DEFAULT_MAX_DEPTH: u32 = 60;
pub const DEFAULT_MAX_INTERVALS: usize = 50_000;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QuadResult {
    pub value: f64,
    /// Absolute error estimate.
    pub error_estimate: f64,
    pub evaluations: usize,
}

/// Angles in `[0, 2π)` where a periodic integrand may lose smoothness.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct KinkSet {
    locations: Vec<f64>,
}

impl KinkSet {
    pub fn new<I: IntoIterator<Item = f64>>(angles: I) -> Self {
        let mut locations: Vec<f64> = angles
            .into_iter()
            .filter(|a| a.is_finite())
            .map(|a| {
                let m = a.rem_euclid(TAU);
                if m >= TAU {
                    0.0
                } else {
                    m
                }
            })
            .collect();
        locations.sort_by(|a, b| a.partial_cmp(b).unwrap());
        // dedupe modulo 2π, including the wrap-around pair
        let mut out: Vec<f64> = Vec::with_capacity(locations.len());
        for a in locations {
            if out.last().is_none_or(|&l| a - l > 1e-13) {
                out.push(a);
            }
        }
        if out.len() > 1 && (out[0] + TAU - out[out.len() - 1]) <= 1e-13 {
            out.pop();
        }
        Self { locations: out }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// Zeros of `cos(s + shift)`: `s = π/2 - shift + kπ`.
    pub fn cosine_zeros(shift: f64) -> Self {
        Self::new([PI / 2.0 - shift, 3.0 * PI / 2.0 - shift])
    }

    pub fn with(mut self, angle: f64) -> Self {
        self.locations.push(angle);
        Self::new(self.locations)
    }

    pub fn locations(&self) -> &[f64] {
        &self.locations
    }

    pub fn len(&self) -> usize {
        self.locations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.locations.is_empty()
    }
}

#[derive(Debug, Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    value: f64,
    abs: f64,
    error: f64,
    depth: u32,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

fn gauss_kronrod<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64, f64) {
    let centre = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(centre);
    let mut kronrod = fc * WGK[7];
    let mut gauss = fc * WG[3];
    let mut abs_k = kronrod.abs();
    let mut fv1 = [0.0; 7];
    let mut fv2 = [0.0; 7];
    for j in 0..7 {
        let dx = half * XGK[j];
        let f1 = f(centre - dx);
        let f2 = f(centre + dx);
        fv1[j] = f1;
        fv2[j] = f2;
        kronrod += WGK[j] * (f1 + f2);
        abs_k += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            gauss += WG[j / 2] * (f1 + f2);
        }
    }
    let mean = 0.5 * kronrod;
    let mut asc = WGK[7] * (fc - mean).abs();
    for j in 0..7 {
        asc += WGK[j] * ((fv1[j] - mean).abs() + (fv2[j] - mean).abs());
    }
    let value = kronrod * half;
    let res_abs = abs_k * half.abs();
    let res_asc = asc * half.abs();

    // QUADPACK's rescaling of |K - G|
    let mut err = ((kronrod - gauss) * half).abs();
    if res_asc != 0.0 && err != 0.0 {
        err = res_asc * (200.0 * err / res_asc).powf(1.5).min(1.0);
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        err = err.max(50.0 * f64::EPSILON * res_abs);
    }
    (value, res_abs, err)
}

/// Adaptive integrator configuration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Integrator {
    /// Absolute tolerance on the total error estimate.
    pub tol: f64,
    /// Relative floor: the target is `max(tol, rel_tol·∫|f|)`, so integrals
    /// that cancel to near zero stop at the level roundoff allows.
    pub rel_tol: f64,
    pub max_depth: u32,
    pub max_intervals: usize,
}

impl Default for Integrator {
    fn default() -> Self {
        Self {
            tol: DEFAULT_TOL,
            rel_tol: DEFAULT_REL_TOL,
            max_depth: DEFAULT_MAX_DEPTH,
            max_intervals: DEFAULT_MAX_INTERVALS,
        }
    }
}

impl Integrator {
    pub fn with_tol(tol: f64) -> Self {
        Self {
            tol,
            ..Self::default()
        }
    }

    /// ∫ₐᵇ f over the breakpoints `[a, p₁, …, pₖ, b]` (all increasing).
    pub fn integrate_split<F: Fn(f64) -> f64>(&self, f: F, points: &[f64]) -> Result<QuadResult> {
        if points.len() < 2 {
            return Err(Error::InvalidParameter("need at least two breakpoints".into()));
        }
        if !(self.tol > 0.0) {
            return Err(Error::InvalidParameter(format!("tolerance {} must be > 0", self.tol)));
        }
        let mut heap = BinaryHeap::new();
        let mut evaluations = 0;
        for w in points.windows(2) {
            let (a, b) = (w[0], w[1]);
            if !(a < b) {
                if a == b {
                    continue;
                }
                return Err(Error::InvalidParameter(format!("interval [{a}, {b}] is not increasing")));
            }
            let (value, abs, error) = gauss_kronrod(&f, a, b);
            evaluations += 15;
            heap.push(Panel { a, b, value, abs, error, depth: 0 });
        }

        loop {
            let (value, abs, error) = heap
                .iter()
                .fold((0.0, 0.0, 0.0), |(v, m, e), p| (v + p.value, m + p.abs, e + p.error));
            if !value.is_finite() {
                return Err(Error::NonConvergence {
                    what: "quadrature",
                    detail: "integrand produced a non-finite value".into(),
                });
            }
            let target = self.tol.max(self.rel_tol * abs.max(value.abs()));
            if error <= target {
                return Ok(QuadResult { value, error_estimate: error, evaluations });
            }
            let worst = heap.pop().expect("at least one panel");
            if worst.depth >= self.max_depth || heap.len() + 2 > self.max_intervals {
                return Err(Error::NonConvergence {
                    what: "quadrature",
                    detail: format!(
                        "error {error:.3e} above target {target:.3e} at [{}, {}] (depth {})",
                        worst.a, worst.b, worst.depth
                    ),
                });
            }
            let mid = 0.5 * (worst.a + worst.b);
            for (a, b) in [(worst.a, mid), (mid, worst.b)] {
                let (value, abs, error) = gauss_kronrod(&f, a, b);
                heap.push(Panel { a, b, value, abs, error, depth: worst.depth + 1 });
            }
            evaluations += 30;
        }
    }

    pub fn integrate<F: Fn(f64) -> f64>(&self, f: F, a: f64, b: f64) -> Result<QuadResult> {
        if !(a < b) {
            return Err(Error::InvalidParameter(format!("need a < b, got [{a}, {b}]")));
        }
        self.integrate_split(f, &[a, b])
    }

    /// Integral over one period `[start, start + 2π)`, split at every kink.
    pub fn integrate_periodic_from<F: Fn(f64) -> f64>(
        &self,
        f: F,
        kinks: &KinkSet,
        start: f64,
    ) -> Result<QuadResult> {
        let mut points = vec![start];
        let mut inner: Vec<f64> = kinks
            .locations()
            .iter()
            .map(|&k| start + (k - start).rem_euclid(TAU))
            .filter(|&k| k > start && k < start + TAU)
            .collect();
        inner.sort_by(|a, b| a.partial_cmp(b).unwrap());
        points.extend(inner);
        points.push(start + TAU);
        self.integrate_split(f, &points)
    }

    /// Integral of a 2π-periodic `f` over one period. The window starts at
    /// the first kink when there is one, so no kink sits inside a panel.
    pub fn integrate_periodic<F: Fn(f64) -> f64>(&self, f: F, kinks: &KinkSet) -> Result<QuadResult> {
        let start = kinks.locations().first().copied().unwrap_or(0.0);
        self.integrate_periodic_from(f, kinks, start)
    }
}

/// [`Integrator::integrate`] with default settings and absolute tolerance `tol`.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> Result<QuadResult> {
    Integrator::with_tol(tol).integrate(f, a, b)
}

/// [`Integrator::integrate_periodic`] with default settings and absolute tolerance `tol`.
pub fn integrate_periodic<F: Fn(f64) -> f64>(f: F, kinks: &KinkSet, tol: f64) -> Result<QuadResult> {
    Integrator::with_tol(tol).integrate_periodic(f, kinks)
}
