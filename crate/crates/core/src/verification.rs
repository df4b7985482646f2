//! Numerical checks of the supporting lemmas and randomized testing of the
//! sharp inequalities.

use std::collections::BTreeMap;
use std::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::Serialize;
use serde_json::Value;

use crate::constants::{
    boundary_weight_base, directional_constant_with, global_constant_with, gradient_constant_with, mr_comparison,
    wirtinger_constant, wirtinger_constant_global, Exponent,
};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::extremal::{gradient_study, norm_limit_study, wirtinger_study, Orientation, SharpnessStudy};
use crate::hardy::{golden_argmax, periodic_sup, BoundaryFunction, HarmonicExtension, Samples, TrigPoly};
use crate::kernel::{DiskPoint, Direction};
use crate::quadrature::{Integrator, KinkSet};
use crate::specfun::{beta, hyp2f1};

pub const Q_GRID: [f64; 7] = [1.0, 1.2, 1.5, 2.0, 2.5, 3.0, 5.0];
pub const R_GRID: [f64; 5] = [0.0, 0.3, 0.6, 0.9, 0.99];
pub const POLET_R: [f64; 11] = [0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.99];
pub const POLET_T: [f64; 3] = [0.0, 0.3, FRAC_PI_2];

const MALE_GRID: usize = 128;
const LOCATION_TOL: f64 = PI / 64.0;
const CONSTANCY_TOL: f64 = 1e-9;
const DOMINANCE_TOL: f64 = 1e-9;
const PRUDNIKOV_TOL: f64 = 1e-8;
pub const FUZZ_REL_TOL: f64 = 1e-8;
pub const FUZZ_MAX_DEGREE: usize = 10;
pub const FUZZ_MAX_R: f64 = 0.95;
pub const COLONNA_TOL: f64 = 1e-3;
const COLONNA_SAMPLES: usize = 4096;

/// One parameter cell of a check.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Cell {
    pub params: BTreeMap<String, Value>,
    pub pass: bool,
    /// Positive when the claim holds with room to spare.
    pub margin: f64,
}

impl Cell {
    fn new(params: &[(&str, Value)], pass: bool, margin: f64) -> Self {
        Self {
            params: params.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
            pass,
            margin,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LemmaReport {
    pub claim: String,
    pub passed: bool,
    pub worst_margin: f64,
    pub cells: Vec<Cell>,
}

impl LemmaReport {
    pub fn new(claim: impl Into<String>, cells: Vec<Cell>) -> Self {
        let passed = cells.iter().all(|c| c.pass);
        let worst_margin = cells.iter().map(|c| c.margin).fold(f64::INFINITY, f64::min);
        Self {
            claim: claim.into(),
            passed,
            worst_margin,
            cells,
        }
    }

    /// Concatenate reports under a common claim.
    pub fn merge(claim: impl Into<String>, reports: impl IntoIterator<Item = LemmaReport>) -> Self {
        Self::new(claim, reports.into_iter().flat_map(|r| r.cells).collect())
    }

    pub fn failures(&self) -> impl Iterator<Item = &Cell> {
        self.cells.iter().filter(|c| !c.pass)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }
}

fn num(x: f64) -> Value {
    serde_json::Number::from_f64(x).map_or(Value::Null, Value::Number)
}

// ---- a_q(t) -------------------------------------------------------------

fn weighted_cos_power(integ: &Integrator, lambda: f64, q: f64, r: f64, t: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&r) {
        return Err(Error::Domain(format!("radius {r} outside [0, 1]")));
    }
    let kinks = KinkSet::cosine_zeros(-t).with(0.0);
    let v = integ.integrate_periodic(
        |s| (s - t).cos().abs().powf(lambda) * boundary_weight_base(r, s).powf(q - 1.0),
        &kinks,
    )?;
    Ok(v.value)
}

/// `a_q(t) = ∫_{-π}^{π} |cos(s - t)|^q |r - e^{is}|^{2q-2} ds`
pub fn a_q(t: f64, r: f64, q: f64) -> Result<f64> {
    a_q_with(&Integrator::default(), t, r, q)
}

pub fn a_q_with(integ: &Integrator, t: f64, r: f64, q: f64) -> Result<f64> {
    if !(q >= 1.0) {
        return Err(Error::Domain(format!("a_q needs q >= 1, got {q}")));
    }
    weighted_cos_power(integ, q, q, r, t)
}

/// Distance between two angles modulo `π`.
fn distance_mod_pi(a: f64, b: f64) -> f64 {
    let d = (a - b).rem_euclid(PI);
    d.min(PI - d)
}

/// Extremum locations of `a_q`: the maximum sits at `π/2` for `q < 2` and
/// at `0` for `q > 2`, the minimum at the other point; `a_q` is constant
/// for `q ∈ {1, 2}` or `r = 0`.
pub fn lemma_male_check(q: f64, r: f64) -> Result<LemmaReport> {
    lemma_male_check_with(&Integrator::default(), q, r)
}

pub fn lemma_male_check_with(integ: &Integrator, q: f64, r: f64) -> Result<LemmaReport> {
    let h = PI / MALE_GRID as f64;
    let grid = (0..MALE_GRID)
        .map(|j| {
            let t = j as f64 * h;
            Ok((t, a_q_with(integ, t, r, q)?))
        })
        .collect::<Result<Vec<_>>>()?;
    let base = [("q", num(q)), ("r", num(r))];
    let claim = format!("a_q extremum locations (q = {q}, r = {r})");

    if q == 1.0 || q == 2.0 || r == 0.0 {
        let (lo, hi) = grid
            .iter()
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &(_, v)| (lo.min(v), hi.max(v)));
        let slack = CONSTANCY_TOL * hi.abs().max(1.0) - (hi - lo);
        let mut params = base.to_vec();
        params.push(("kind", Value::from("constant")));
        params.push(("deviation", num(hi - lo)));
        return Ok(LemmaReport::new(claim, vec![Cell::new(&params, slack >= 0.0, slack)]));
    }

    let refine = |sign: f64| -> Result<f64> {
        let &(t0, _) = grid
            .iter()
            .max_by(|a, b| (sign * a.1).total_cmp(&(sign * b.1)))
            .expect("non-empty grid");
        let f = |t: f64| sign * a_q_with(integ, t, r, q).unwrap_or(f64::NAN);
        let (mut a, mut b) = (t0 - h, t0 + h);
        Ok(golden_argmax(&f, &mut a, &mut b, 40).0)
    };
    let argmax = refine(1.0)?;
    let argmin = refine(-1.0)?;
    let (want_max, want_min) = if q < 2.0 { (FRAC_PI_2, 0.0) } else { (0.0, FRAC_PI_2) };
    let cell = |kind: &str, found: f64, want: f64| {
        let margin = LOCATION_TOL - distance_mod_pi(found, want);
        let mut params = base.to_vec();
        params.push(("kind", Value::from(kind)));
        params.push(("found", num(found.rem_euclid(PI))));
        params.push(("expected", num(want)));
        Cell::new(&params, margin >= 0.0, margin)
    };
    Ok(LemmaReport::new(
        claim,
        vec![cell("argmax", argmax, want_max), cell("argmin", argmin, want_min)],
    ))
}

/// `max_r ∫|cos(s - t)|^λ |r - e^{is}|^{2q-2} ds ≤ max_{t'} (the same at r = 1)`
/// over the radii [`POLET_R`].
pub fn lemma_polet_check(lambda: f64, q: f64, t: f64) -> Result<LemmaReport> {
    lemma_polet_check_with(&Integrator::default(), lambda, q, t)
}

pub fn lemma_polet_check_with(integ: &Integrator, lambda: f64, q: f64, t: f64) -> Result<LemmaReport> {
    if !(lambda >= 0.0) || !(q >= 1.0) {
        return Err(Error::Domain(format!("need lambda >= 0 and q >= 1, got {lambda}, {q}")));
    }
    let h = PI / 64.0;
    let boundary = |tp: f64| weighted_cos_power(integ, lambda, q, 1.0, tp).unwrap_or(f64::NAN);
    let coarse = (0..64)
        .map(|j| {
            let tp = j as f64 * h;
            (tp, boundary(tp))
        })
        .max_by(|a, b| a.1.total_cmp(&b.1))
        .expect("non-empty grid");
    let (mut a, mut b) = (coarse.0 - h, coarse.0 + h);
    let bound = golden_argmax(&boundary, &mut a, &mut b, 40).1.max(coarse.1);
    if !bound.is_finite() {
        return Err(Error::NonConvergence {
            what: "boundary maximisation",
            detail: format!("lambda = {lambda}, q = {q}"),
        });
    }
    let cells = POLET_R
        .iter()
        .map(|&r| {
            let v = weighted_cos_power(integ, lambda, q, r, t)?;
            let margin = (bound - v) / bound;
            Ok(Cell::new(
                &[
                    ("lambda", num(lambda)),
                    ("q", num(q)),
                    ("t", num(t)),
                    ("r", num(r)),
                    ("value", num(v)),
                    ("bound", num(bound)),
                ],
                margin >= -DOMINANCE_TOL,
                margin,
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(LemmaReport::new(
        format!("boundary dominance (lambda = {lambda}, q = {q}, t = {t})"),
        cells,
    ))
}

/// Both lemma checks over the default grids.
pub fn lemma_suite(integ: &Integrator, exec: Execution) -> Result<LemmaReport> {
    let male: Vec<(f64, f64)> = Q_GRID.iter().flat_map(|&q| R_GRID.iter().map(move |&r| (q, r))).collect();
    let polet: Vec<(f64, f64, f64)> = Q_GRID
        .iter()
        .flat_map(|&q| [0.0, 1.0, q].into_iter().map(move |l| (l, q)))
        .flat_map(|(l, q)| POLET_T.iter().map(move |&t| (l, q, t)))
        .collect();
    let mut reports = exec.try_map(&male, |&(q, r)| lemma_male_check_with(integ, q, r))?;
    reports.extend(exec.try_map(&polet, |&(l, q, t)| lemma_polet_check_with(integ, l, q, t))?);
    Ok(LemmaReport::merge("lemma grid", reports))
}

// ---- directional dichotomy ------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum Crossover {
    Found { p: f64, bracket: f64 },
    /// The radial and tangential constants coincide for every `p`.
    Degenerate,
    NoSignChange,
}

pub const CROSSOVER_BRACKET: (f64, f64) = (1.1, 10.0);

/// `C_p(z, n) - C_p(z, t)` at `z = r`.
pub fn radial_minus_tangential(integ: &Integrator, p: f64, r: f64) -> Result<f64> {
    let e = Exponent::new(p)?;
    let z = DiskPoint::new(r, 0.0)?;
    let radial = directional_constant_with(integ, e, &z, &Direction::radial(&z))?.value;
    let tangential = directional_constant_with(integ, e, &z, &Direction::tangential(&z))?.value;
    Ok(radial - tangential)
}

/// Bisection in `p` on [`CROSSOVER_BRACKET`] for the sign change of
/// [`radial_minus_tangential`].
pub fn khavinson_crossover(r: f64) -> Result<Crossover> {
    khavinson_crossover_with(&Integrator::default(), r)
}

pub fn khavinson_crossover_with(integ: &Integrator, r: f64) -> Result<Crossover> {
    let (mut lo, mut hi) = CROSSOVER_BRACKET;
    let mut f_lo = radial_minus_tangential(integ, lo, r)?;
    let f_hi = radial_minus_tangential(integ, hi, r)?;
    if f_lo.abs().max(f_hi.abs()) <= 1e-12 {
        return Ok(Crossover::Degenerate);
    }
    if f_lo.signum() == f_hi.signum() {
        return Ok(Crossover::NoSignChange);
    }
    while hi - lo > 1e-7 {
        let mid = 0.5 * (lo + hi);
        let f_mid = radial_minus_tangential(integ, mid, r)?;
        if f_mid == 0.0 {
            return Ok(Crossover::Found { p: mid, bracket: 0.0 });
        }
        if f_mid.signum() == f_lo.signum() {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    Ok(Crossover::Found {
        p: 0.5 * (lo + hi),
        bracket: hi - lo,
    })
}

pub fn crossover_report(integ: &Integrator, radii: &[f64], exec: Execution) -> Result<LemmaReport> {
    let found = exec.try_map(radii, |&r| Ok::<_, Error>((r, khavinson_crossover_with(integ, r)?)))?;
    let cells = found
        .into_iter()
        .map(|(r, c)| match c {
            Crossover::Found { p, .. } => {
                let margin = 1e-3 - (p - 2.0).abs();
                Cell::new(&[("r", num(r)), ("p", num(p))], margin >= 0.0, margin)
            }
            Crossover::Degenerate | Crossover::NoSignChange => Cell::new(
                &[("r", num(r)), ("outcome", serde_json::to_value(c).unwrap_or(Value::Null))],
                false,
                f64::NEG_INFINITY,
            ),
        })
        .collect();
    Ok(LemmaReport::new("direction dichotomy at p = 2", cells))
}

/// Directional constants never exceed the one in the extremal direction.
pub fn ordering_check(integ: &Integrator, e: Exponent, points: usize, seed: u64) -> Result<LemmaReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cells = Vec::with_capacity(points);
    for i in 0..points {
        let r = rng.random_range(0.0..0.99);
        let alpha = rng.random_range(-PI..PI);
        let tau = rng.random_range(-PI..PI);
        let z = DiskPoint::new(r, alpha)?;
        let any = directional_constant_with(integ, e, &z, &Direction::new(tau))?.value;
        let best = gradient_constant_with(integ, e, &z)?.value;
        let margin = (best - any) / best;
        cells.push(Cell::new(
            &[
                ("p", Value::from(e.to_string())),
                ("index", Value::from(i)),
                ("r", num(r)),
                ("alpha", num(alpha)),
                ("tau", num(tau)),
            ],
            margin >= -1e-10,
            margin,
        ));
    }
    Ok(LemmaReport::new(format!("extremal direction dominates (p = {e})"), cells))
}

/// `c_p < C_p < 2 c_p`
pub fn sandwich_check(integ: &Integrator, exponents: &[Exponent]) -> Result<LemmaReport> {
    let cells = exponents
        .iter()
        .map(|&e| {
            let big = global_constant_with(integ, e)?.value;
            let small = wirtinger_constant_global(e)?.value;
            let margin = (big - small).min(2.0 * small - big) / big;
            Ok(Cell::new(
                &[("p", Value::from(e.to_string())), ("C_p", num(big)), ("c_p", num(small))],
                margin > 0.0,
                margin,
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(LemmaReport::new("c_p < C_p < 2 c_p", cells))
}

/// `(2π)^{1-q} F(1-q, 1-q; 1; r²) < 1 + r²/(p-1)²`, strictly.
pub fn mr_check(exponents: &[Exponent], radii: &[f64]) -> Result<LemmaReport> {
    let mut cells = Vec::new();
    for &e in exponents {
        for &r in radii {
            let m = mr_comparison(e, r)?;
            cells.push(Cell::new(
                &[
                    ("p", Value::from(e.to_string())),
                    ("r", num(r)),
                    ("sharp", num(m.sharp)),
                    ("classical", num(m.classical)),
                ],
                m.margin() > 0.0,
                m.margin(),
            ));
        }
    }
    Ok(LemmaReport::new("improvement over the classical factor", cells))
}

// ---- integral identity ----------------------------------------------------

/// `∫₀^π sin^{μ-1}t (1 + r² - 2r cos t)^{-ν} dt` against
/// `B(μ/2, 1/2) F(ν, ν + (1-μ)/2; (1+μ)/2; r²)`.
pub fn prudnikov_check(mu: f64, nu: f64, r: f64) -> Result<LemmaReport> {
    prudnikov_check_with(&Integrator::default(), mu, nu, r)
}

pub fn prudnikov_sides(integ: &Integrator, mu: f64, nu: f64, r: f64) -> Result<(f64, f64)> {
    if !(mu > 0.0) || !nu.is_finite() || !(0.0..1.0).contains(&r) {
        return Err(Error::Domain(format!("inadmissible (mu, nu, r) = ({mu}, {nu}, {r})")));
    }
    let lhs = integ
        .integrate(|t| t.sin().powf(mu - 1.0) * boundary_weight_base(r, t).powf(-nu), 0.0, PI)?
        .value;
    let rhs = beta(0.5 * mu, 0.5)? * hyp2f1(nu, nu + 0.5 * (1.0 - mu), 0.5 * (1.0 + mu), r * r)?;
    Ok((lhs, rhs))
}

pub fn prudnikov_check_with(integ: &Integrator, mu: f64, nu: f64, r: f64) -> Result<LemmaReport> {
    Ok(LemmaReport::new("integral identity", vec![prudnikov_cell(integ, mu, nu, r)?]))
}

fn prudnikov_cell(integ: &Integrator, mu: f64, nu: f64, r: f64) -> Result<Cell> {
    let (lhs, rhs) = prudnikov_sides(integ, mu, nu, r)?;
    let margin = PRUDNIKOV_TOL - (lhs - rhs).abs() / rhs.abs().max(1.0);
    Ok(Cell::new(
        &[
            ("mu", num(mu)),
            ("nu", num(nu)),
            ("r", num(r)),
            ("quadrature", num(lhs)),
            ("hypergeometric", num(rhs)),
        ],
        margin >= 0.0,
        margin,
    ))
}

/// `count` random admissible triples `μ ∈ [1, 5]`, `ν ∈ [-3, 3]`, `r ∈ [0, 0.95]`.
pub fn prudnikov_fuzz(integ: &Integrator, count: usize, seed: u64, exec: Execution) -> Result<LemmaReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let triples: Vec<(f64, f64, f64)> = (0..count)
        .map(|_| {
            (
                rng.random_range(1.0..5.0),
                rng.random_range(-3.0..3.0),
                rng.random_range(0.0..0.95),
            )
        })
        .collect();
    let cells = exec.try_map(&triples, |&(mu, nu, r)| prudnikov_cell(integ, mu, nu, r))?;
    Ok(LemmaReport::new("integral identity", cells))
}

// ---- randomized inequality testing ---------------------------------------

/// The generator for trial `index` of a run seeded with `seed`.
pub fn trial_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// A random trigonometric polynomial of degree `1..=max_degree` with
/// standard normal complex coefficients; only `k ≥ 0` when `analytic`.
pub fn random_trig_poly<R: Rng>(rng: &mut R, max_degree: usize, analytic: bool) -> TrigPoly {
    let n = rng.random_range(1..=max_degree) as i64;
    let coeffs = (-n..=n)
        .map(|k| {
            let c = Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal));
            if analytic && k < 0 {
                Complex64::new(0.0, 0.0)
            } else {
                c
            }
        })
        .collect();
    TrigPoly::new(-n, coeffs).expect("finite coefficients")
}

/// Every third trial is restricted to analytic polynomials.
pub fn trial_is_analytic(index: u64) -> bool {
    index % 3 == 2
}

/// Relative slack `1 - lhs/rhs`.
fn slack(lhs: f64, rhs: f64) -> f64 {
    if rhs == 0.0 {
        if lhs == 0.0 {
            0.0
        } else {
            f64::NEG_INFINITY
        }
    } else {
        1.0 - lhs / rhs
    }
}

fn fuzz_trial(integ: &Integrator, e: Exponent, seed: u64, index: u64) -> Result<Cell> {
    let mut rng = trial_rng(seed, index);
    let analytic = trial_is_analytic(index);
    let poly = random_trig_poly(&mut rng, FUZZ_MAX_DEGREE, analytic);
    let r = rng.random_range(0.0..=FUZZ_MAX_R);
    let alpha = rng.random_range(-PI..PI);
    let tau = rng.random_range(-PI..PI);
    let z = DiskPoint::new(r, alpha)?;
    let d = HarmonicExtension::new(poly.clone()).derivative(&z)?;
    let norm = BoundaryFunction::TrigPoly(poly.clone()).lp_norm_with(integ, e)?;
    let scale = e.growth_factor(r) * norm;

    let dir = Direction::new(tau);
    let directional = slack(d.apply(&dir).norm(), directional_constant_with(integ, e, &z, &dir)?.value * scale);
    let gradient = slack(d.norm(), gradient_constant_with(integ, e, &z)?.value * scale);
    let cp = wirtinger_constant(e, r)?.value * scale;
    let mut margin = directional.min(gradient);
    let mut checks = vec![("directional", num(directional)), ("gradient", num(gradient))];
    let wirt = slack(d.dz.norm(), cp).min(slack(d.dzbar.norm(), cp));
    checks.push(("wirtinger", num(wirt)));
    margin = margin.min(wirt);

    let mut params = vec![
        ("p", Value::from(e.to_string())),
        ("seed", Value::from(seed)),
        ("trial", Value::from(index)),
        ("degree", Value::from(poly.degree())),
        ("analytic", Value::from(analytic)),
        ("r", num(r)),
        ("alpha", num(alpha)),
        ("tau", num(tau)),
    ];
    params.extend(checks);
    Ok(Cell::new(&params, margin >= -FUZZ_REL_TOL, margin))
}

/// `trials` seeded random checks of the directional, gradient and
/// Wirtinger bounds. Trial `i` draws from stream `i` of the seeded
/// generator, so results do not depend on scheduling.
pub fn inequality_fuzz(e: Exponent, trials: usize, seed: u64) -> Result<LemmaReport> {
    inequality_fuzz_with(&Integrator::default(), e, trials, seed, Execution::default())
}

pub fn inequality_fuzz_with(
    integ: &Integrator,
    e: Exponent,
    trials: usize,
    seed: u64,
    exec: Execution,
) -> Result<LemmaReport> {
    let idx: Vec<u64> = (0..trials as u64).collect();
    let cells = exec.try_map(&idx, |&i| fuzz_trial(integ, e, seed, i))?;
    Ok(LemmaReport::new(format!("sharp inequalities, random data (p = {e})"), cells))
}

// ---- Bloch bound ------------------------------------------------------------

/// Random boundary data with `|f| ≤ 1`: even draws are polynomials
/// divided by their sup norm, odd draws are `3f/‖f‖_∞` clamped radially
/// to the unit disk and sampled at 4096 nodes.
pub fn bounded_boundary_function(seed: u64, index: u64) -> Result<BoundaryFunction> {
    let mut rng = trial_rng(seed, index);
    let poly = random_trig_poly(&mut rng, FUZZ_MAX_DEGREE, false);
    let sup = periodic_sup(|t| poly.boundary_value(t).norm(), 4096);
    if index % 2 == 0 {
        let scaled = poly.coeffs().iter().map(|c| c / sup).collect();
        return Ok(TrigPoly::new(poly.k_min(), scaled)?.into());
    }
    let m = COLONNA_SAMPLES;
    let values = (0..m)
        .map(|j| {
            let v = poly.boundary_value(std::f64::consts::TAU * j as f64 / m as f64) * (3.0 / sup);
            if v.norm() > 1.0 {
                v / v.norm()
            } else {
                v
            }
        })
        .collect();
    Ok(Samples::new(values)?.into())
}

/// Grid Bloch constants of bounded random data against `4/π`.
pub fn colonna_check(count: usize, seed: u64, exec: Execution) -> Result<LemmaReport> {
    let integ = Integrator::default();
    let bound = 4.0 / PI;
    let mut cells = Vec::with_capacity(count);
    for i in 0..count as u64 {
        let f = bounded_boundary_function(seed, i)?;
        let b = HarmonicExtension::new(f).bloch_constant_with(&integ, exec)?;
        let margin = bound + COLONNA_TOL - b.value;
        cells.push(Cell::new(
            &[
                ("seed", Value::from(seed)),
                ("index", Value::from(i)),
                ("bloch", num(b.value)),
                ("r", num(b.at.r())),
                ("alpha", num(b.at.alpha())),
            ],
            margin >= 0.0,
            margin,
        ));
    }
    Ok(LemmaReport::new("Bloch constant of bounded data at most 4/pi", cells))
}

// ---- sharpness --------------------------------------------------------------

pub const SHARPNESS_EXTRAPOLATED_TOL: f64 = 2e-3;
pub const SHARPNESS_RAW_TOL: f64 = 1e-2;
pub const NORM_LIMIT_TOL: f64 = 5e-3;

fn study_cells(study: &SharpnessStudy, tol_extrapolated: f64, tol_raw: Option<f64>) -> Vec<Cell> {
    let base = |kind: &str| {
        vec![
            ("quantity", Value::from(study.quantity)),
            ("p", Value::from(study.exponent.to_string())),
            ("check", Value::from(kind)),
            ("target", num(study.target)),
            ("extrapolated", num(study.extrapolated)),
            ("last", num(study.ladder.last().map_or(f64::NAN, |l| l.value))),
            ("monotone", Value::from(study.monotone)),
        ]
    };
    let mut cells = Vec::new();
    let m = tol_extrapolated - study.relative_error();
    cells.push(Cell::new(&base("extrapolated"), m >= 0.0, m));
    if let Some(tol) = tol_raw {
        let m = tol - study.last_raw_relative_error();
        cells.push(Cell::new(&base("raw"), m >= 0.0, m));
    }
    cells
}

/// Ratio studies of both families and the norm limit along `ladder`.
pub fn sharpness_suite(
    integ: &Integrator,
    exponents: &[Exponent],
    ladder: &[f64],
    exec: Execution,
) -> Result<(LemmaReport, Vec<SharpnessStudy>)> {
    let mut cells = Vec::new();
    let mut studies = Vec::new();
    for &e in exponents {
        let g = gradient_study(integ, e, ladder, exec)?;
        cells.extend(study_cells(&g, SHARPNESS_EXTRAPOLATED_TOL, Some(SHARPNESS_RAW_TOL)));
        studies.push(g);
        for o in [Orientation::Plus, Orientation::Minus] {
            let w = wirtinger_study(integ, e, o, ladder, exec)?;
            cells.extend(study_cells(&w, SHARPNESS_EXTRAPOLATED_TOL, Some(SHARPNESS_RAW_TOL)));
            studies.push(w);
        }
        if !e.is_infinite() {
            let n = norm_limit_study(integ, e, ladder, exec)?;
            cells.extend(study_cells(&n, NORM_LIMIT_TOL, None));
            studies.push(n);
        }
    }
    Ok((LemmaReport::new("extremal families attain the constants", cells), studies))
}
