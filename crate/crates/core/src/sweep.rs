//! Tabulation of the constants over a range of exponents.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::constants::{
    directional_constant_with, global_constant_with, gradient_constant_with, wirtinger_constant,
    wirtinger_constant_global, ConstantReport, Exponent, Method,
};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::kernel::{DiskPoint, Direction};
use crate::quadrature::Integrator;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Quantity {
    /// `C_p`
    GradientGlobal,
    /// `c_p`
    WirtingerGlobal,
    /// `C_p(z)`
    GradientAtZ,
    /// `c_p(z)`, depends on `|z|` only
    WirtingerAtR,
    /// `C_p(z, e^{iτ})`
    Directional,
}

impl Quantity {
    pub const ALL: [Quantity; 5] = [
        Quantity::GradientGlobal,
        Quantity::WirtingerGlobal,
        Quantity::GradientAtZ,
        Quantity::WirtingerAtR,
        Quantity::Directional,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Quantity::GradientGlobal => "Cp_global",
            Quantity::WirtingerGlobal => "cp_global",
            Quantity::GradientAtZ => "Cp_at_z",
            Quantity::WirtingerAtR => "cp_at_r",
            Quantity::Directional => "directional",
        }
    }

    pub fn needs_radius(self) -> bool {
        matches!(self, Quantity::GradientAtZ | Quantity::WirtingerAtR | Quantity::Directional)
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Quantity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Quantity::ALL
            .into_iter()
            .find(|q| q.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown quantity {s:?}")))
    }
}

/// Where a constant is evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Location {
    pub r: Option<f64>,
    pub alpha: Option<f64>,
    pub tau: Option<f64>,
}

/// Evaluate one quantity at one exponent.
pub fn evaluate(integ: &Integrator, quantity: Quantity, e: Exponent, at: &Location) -> Result<ConstantReport> {
    let radius = || {
        at.r
            .ok_or_else(|| Error::InvalidParameter(format!("{quantity} needs a radius")))
    };
    let point = || DiskPoint::new(radius()?, at.alpha.unwrap_or(0.0));
    match quantity {
        Quantity::GradientGlobal => global_constant_with(integ, e),
        Quantity::WirtingerGlobal => wirtinger_constant_global(e),
        Quantity::GradientAtZ => gradient_constant_with(integ, e, &point()?),
        Quantity::WirtingerAtR => wirtinger_constant(e, radius()?),
        Quantity::Directional => {
            let tau = at
                .tau
                .ok_or_else(|| Error::InvalidParameter("directional needs a direction angle".into()))?;
            directional_constant_with(integ, e, &point()?, &Direction::new(tau))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            _ => Err(Error::InvalidParameter(format!("unknown format {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub quantity: Quantity,
    pub p_min: Exponent,
    pub p_max: Exponent,
    pub steps: usize,
    pub at: Location,
    pub format: Format,
}

impl SweepSpec {
    pub fn new(quantity: Quantity, p_min: Exponent, p_max: Exponent, steps: usize) -> Result<Self> {
        let spec = Self {
            quantity,
            p_min,
            p_max,
            steps,
            at: Location::default(),
            format: Format::Csv,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if self.steps < 2 {
            return Err(Error::InvalidParameter(format!("steps must be >= 2, got {}", self.steps)));
        }
        if self.p_min.inv_p() <= self.p_max.inv_p() {
            return Err(Error::InvalidParameter(format!(
                "empty exponent range [{}, {}]",
                self.p_min, self.p_max
            )));
        }
        if let Some(r) = self.at.r {
            if !(0.0..1.0).contains(&r) {
                return Err(Error::Domain(format!("radius {r} outside [0, 1)")));
            }
        }
        if self.quantity.needs_radius() && self.at.r.is_none() {
            return Err(Error::InvalidParameter(format!("{} needs a radius", self.quantity)));
        }
        Ok(())
    }

    /// Exponents spaced uniformly in `1/p`, which keeps `p = ∞` reachable.
    pub fn exponents(&self) -> Result<Vec<Exponent>> {
        let (a, b) = (self.p_min.inv_p(), self.p_max.inv_p());
        let n = self.steps - 1;
        (0..self.steps)
            .map(|i| {
                if i == 0 {
                    return Ok(self.p_min);
                }
                if i == n {
                    return Ok(self.p_max);
                }
                let x = a + (b - a) * i as f64 / n as f64;
                Exponent::new(1.0 / x)
            })
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SweepRow {
    pub p: Exponent,
    pub value: f64,
    pub method: Method,
    pub error: f64,
}

/// All rows in increasing `p`; any failing cell fails the sweep.
pub fn run(spec: &SweepSpec, integ: &Integrator, exec: Execution) -> Result<Vec<SweepRow>> {
    spec.validate()?;
    let exps = spec.exponents()?;
    exec.try_map(&exps, |&e| {
        let c = evaluate(integ, spec.quantity, e, &spec.at)?;
        Ok(SweepRow {
            p: e,
            value: c.value,
            method: c.method,
            error: c.error_estimate,
        })
    })
}

/// `x` with 10 significant digits.
pub fn format_sig(x: f64) -> String {
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x.is_nan() {
        return "nan".into();
    }
    if x == 0.0 {
        return "0.000000000".into();
    }
    let exp = x.abs().log10().floor() as i32;
    if (-4..10).contains(&exp) {
        let s = format!("{:.*}", (9 - exp).max(0) as usize, x);
        // rounding can carry into a new leading digit
        if s.trim_start_matches('-').replace('.', "").trim_start_matches('0').len() > 10 {
            return format!("{:.*}", (8 - exp).max(0) as usize, x);
        }
        s
    } else {
        format!("{x:.9e}")
    }
}

fn round_sig(x: f64) -> f64 {
    if x.is_finite() {
        format_sig(x).parse().unwrap_or(x)
    } else {
        x
    }
}

fn format_p(e: Exponent) -> String {
    if e.is_infinite() {
        "inf".into()
    } else {
        format_sig(e.p())
    }
}

pub fn to_csv(rows: &[SweepRow]) -> String {
    let mut out = String::from("p,value,method,error\r\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{}\r\n",
            format_p(r.p),
            format_sig(r.value),
            r.method,
            format_sig(r.error)
        ));
    }
    out
}

pub fn to_json(rows: &[SweepRow]) -> Result<String> {
    let rounded: Vec<SweepRow> = rows
        .iter()
        .map(|r| SweepRow {
            p: r.p,
            value: round_sig(r.value),
            method: r.method,
            error: round_sig(r.error),
        })
        .collect();
    Ok(serde_json::to_string_pretty(&rounded)?)
}

pub fn render(rows: &[SweepRow], format: Format) -> Result<String> {
    match format {
        Format::Csv => Ok(to_csv(rows)),
        Format::Json => to_json(rows).map(|mut s| {
            s.push('\n');
            s
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn significant_digits() {
        assert_eq!(format_sig(0.797884560802865), "0.7978845608");
        assert_eq!(format_sig(1.0), "1.000000000");
        assert_eq!(format_sig(9.9999999999), "10.00000000");
        assert_eq!(format_sig(1.05), "1.050000000");
        assert_eq!(format_sig(1.5e-13), "1.500000000e-13");
        assert_eq!(format_sig(-2.5), "-2.500000000");
    }

    #[test]
    fn grid_reaches_infinity() {
        let spec = SweepSpec::new(
            Quantity::WirtingerGlobal,
            Exponent::new(2.0).unwrap(),
            Exponent::infinity(),
            5,
        )
        .unwrap();
        let ps: Vec<String> = spec.exponents().unwrap().iter().map(|e| e.to_string()).collect();
        assert_eq!(ps, ["2", "2.6666666666666665", "4", "8", "inf"]);
    }

    #[test]
    fn spec_validation() {
        let p2 = Exponent::new(2.0).unwrap();
        assert!(SweepSpec::new(Quantity::GradientGlobal, p2, p2, 5).is_err());
        assert!(SweepSpec::new(Quantity::GradientGlobal, p2, Exponent::infinity(), 1).is_err());
        assert!(SweepSpec::new(Quantity::GradientAtZ, p2, Exponent::infinity(), 3).is_err());
        assert!("Cp_global".parse::<Quantity>().is_ok());
        assert!("cp_GLOBAL".parse::<Quantity>().is_err());
    }

    #[test]
    fn csv_layout() {
        let spec = SweepSpec::new(
            Quantity::WirtingerGlobal,
            Exponent::new(2.0).unwrap(),
            Exponent::infinity(),
            2,
        )
        .unwrap();
        let rows = run(&spec, &Integrator::default(), Execution::Sequential).unwrap();
        let csv = to_csv(&rows);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "p,value,method,error");
        assert!(lines[1].starts_with("2.000000000,0.5641895835,closed-form,"));
        assert!(lines[2].starts_with("inf,1.000000000,"));
    }
}
