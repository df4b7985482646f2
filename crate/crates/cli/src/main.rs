use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use disk_sharp::extremal::RHO_LADDER;
use disk_sharp::sweep::{self, Format, Location, Quantity, SweepSpec};
use disk_sharp::verification::{self, LemmaReport};
use disk_sharp::{Error, Execution, Exponent, Integrator};
use serde_json::{json, Value};

const TOL_ENV: &str = "DISK_SHARP_TOL";

const EXIT_VERIFY: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_NUMERIC: u8 = 3;

#[derive(Parser, Debug)]
#[command(name = "disk-sharp", version, about = "Sharp gradient constants for harmonic functions on the unit disk")]
struct Cli {
    /// Worker threads (1 runs sequentially).
    #[arg(long, global = true)]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute one constant.
    Constant {
        #[arg(long, default_value = "Cp_global")]
        quantity: String,
        #[arg(long)]
        p: String,
        #[arg(long)]
        r: Option<f64>,
        #[arg(long)]
        alpha: Option<f64>,
        #[arg(long)]
        tau: Option<f64>,
        #[arg(long, value_enum, default_value_t = ConstantFormat::Text)]
        format: ConstantFormat,
    },
    /// Tabulate a constant over a range of exponents.
    Sweep {
        #[arg(long)]
        quantity: String,
        #[arg(long, default_value = "1.05")]
        p_min: String,
        #[arg(long, default_value = "20")]
        p_max: String,
        #[arg(long, default_value_t = 100)]
        steps: usize,
        #[arg(long)]
        r: Option<f64>,
        #[arg(long)]
        alpha: Option<f64>,
        #[arg(long)]
        tau: Option<f64>,
        #[arg(long, default_value = "csv")]
        format: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run verification suites and print a JSON report.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        /// Exponents for the fuzz and sharpness suites (repeatable).
        #[arg(long)]
        p: Vec<String>,
        /// Keep passing cells in the report.
        #[arg(long)]
        full: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ConstantFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Suite {
    Lemmas,
    Fuzz,
    Prudnikov,
    Crossover,
    Sharpness,
    All,
}

enum Failure {
    Usage(String),
    Numeric(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_numerical() {
            Failure::Numeric(e.to_string())
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn integrator() -> Result<Integrator, Failure> {
    match std::env::var(TOL_ENV) {
        Ok(v) => {
            let tol: f64 = v
                .trim()
                .parse()
                .map_err(|_| Failure::Usage(format!("{TOL_ENV}={v:?} is not a number")))?;
            if !(tol > 0.0 && tol.is_finite()) {
                return Err(Failure::Usage(format!("{TOL_ENV} must be positive, got {tol}")));
            }
            Ok(Integrator::with_tol(tol))
        }
        Err(_) => Ok(Integrator::default()),
    }
}

fn execution(jobs: Option<usize>) -> Result<Execution, Failure> {
    match jobs {
        Some(0) => Err(Failure::Usage("--jobs must be at least 1".into())),
        Some(1) => Ok(Execution::Sequential),
        #[cfg(feature = "parallel")]
        Some(n) => {
            rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build_global()
                .map_err(|e| Failure::Usage(e.to_string()))?;
            Ok(Execution::Parallel)
        }
        #[cfg(not(feature = "parallel"))]
        Some(_) => Ok(Execution::Sequential),
        None => Ok(Execution::default()),
    }
}

fn parse_exponent(s: &str) -> Result<Exponent, Failure> {
    s.parse().map_err(|e: Error| Failure::Usage(e.to_string()))
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text)?,
        None => io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn cmd_constant(
    integ: &Integrator,
    quantity: &str,
    p: &str,
    at: Location,
    format: ConstantFormat,
) -> Result<(), Failure> {
    let q: Quantity = quantity.parse()?;
    let e = parse_exponent(p)?;
    let c = sweep::evaluate(integ, q, e, &at)?;
    let text = match format {
        ConstantFormat::Text => format!(
            "{}\nmethod: {}\nerror: {}\n",
            sweep::format_sig(c.value),
            c.method,
            sweep::format_sig(c.error_estimate)
        ),
        ConstantFormat::Json => {
            let row = sweep::SweepRow {
                p: e,
                value: c.value,
                method: c.method,
                error: c.error_estimate,
            };
            let rows = sweep::to_json(&[row])?;
            let mut v: Value = serde_json::from_str(&rows).map_err(|e| Failure::Usage(e.to_string()))?;
            let mut obj = v[0].take();
            obj["quantity"] = json!(q.name());
            format!("{obj}\n")
        }
    };
    emit(&text, None)
}

fn report_json(r: &LemmaReport, full: bool) -> Value {
    let cells: Vec<&verification::Cell> = r.cells.iter().filter(|c| full || !c.pass).collect();
    json!({
        "claim": r.claim,
        "passed": r.passed,
        "worst_margin": r.worst_margin,
        "cells_total": r.cells.len(),
        "failures": r.failures().count(),
        "cells": cells,
    })
}

fn default_exponents(given: &[String], fallback: &[f64]) -> Result<Vec<Exponent>, Failure> {
    if given.is_empty() {
        Ok(fallback.iter().map(|&p| Exponent::new(p)).collect::<Result<_, _>>()?)
    } else {
        given.iter().map(|s| parse_exponent(s)).collect()
    }
}

fn run_suite(
    suite: Suite,
    integ: &Integrator,
    exec: Execution,
    seed: u64,
    trials: usize,
    ps: &[String],
) -> Result<Vec<LemmaReport>, Failure> {
    let mut reports = Vec::new();
    let all = suite == Suite::All;
    if all || suite == Suite::Lemmas {
        reports.push(verification::lemma_suite(integ, exec)?);
        let mr_ps = [1.2, 1.5, 2.0, 3.0, 10.0].map(|p| Exponent::new(p).expect("valid exponent"));
        reports.push(verification::mr_check(&mr_ps, &[0.0, 0.5, 0.9, 0.99])?);
        let sandwich: Vec<Exponent> = [1.1, 1.5, 2.0, 3.0, 5.0, 10.0]
            .iter()
            .map(|&p| Exponent::new(p).expect("valid exponent"))
            .chain([Exponent::infinity()])
            .collect();
        reports.push(verification::sandwich_check(integ, &sandwich)?);
        for e in &sandwich {
            reports.push(verification::ordering_check(integ, *e, 20, seed)?);
        }
    }
    if all || suite == Suite::Fuzz {
        for e in default_exponents(ps, &[1.5, 2.0, 4.0])? {
            reports.push(verification::inequality_fuzz_with(integ, e, trials, seed, exec)?);
        }
        reports.push(verification::colonna_check(20, seed, exec)?);
    }
    if all || suite == Suite::Prudnikov {
        reports.push(verification::prudnikov_fuzz(integ, 50, seed, exec)?);
    }
    if all || suite == Suite::Crossover {
        reports.push(verification::crossover_report(integ, &[0.3, 0.5, 0.9], exec)?);
    }
    if all || suite == Suite::Sharpness {
        let exps = default_exponents(ps, &[1.5, 2.0, 3.0, 5.0])?;
        reports.push(verification::sharpness_suite(integ, &exps, &RHO_LADDER, exec)?.0);
    }
    Ok(reports)
}

fn run(cli: Cli) -> Result<(), Failure> {
    let integ = integrator()?;
    let exec = execution(cli.jobs)?;
    match cli.command {
        Command::Constant {
            quantity,
            p,
            r,
            alpha,
            tau,
            format,
        } => cmd_constant(&integ, &quantity, &p, Location { r, alpha, tau }, format),
        Command::Sweep {
            quantity,
            p_min,
            p_max,
            steps,
            r,
            alpha,
            tau,
            format,
            out,
        } => {
            let spec = SweepSpec {
                quantity: quantity.parse()?,
                p_min: parse_exponent(&p_min)?,
                p_max: parse_exponent(&p_max)?,
                steps,
                at: Location { r, alpha, tau },
                format: format.parse::<Format>()?,
            };
            spec.validate()?;
            let rows = sweep::run(&spec, &integ, exec)?;
            emit(&sweep::render(&rows, spec.format)?, out.as_ref())
        }
        Command::Verify {
            suite,
            seed,
            trials,
            p,
            full,
            out,
        } => {
            let reports = run_suite(suite, &integ, exec, seed, trials, &p)?;
            let passed = reports.iter().all(|r| r.passed);
            let doc = json!({
                "suite": format!("{suite:?}").to_lowercase(),
                "seed": seed,
                "passed": passed,
                "reports": reports.iter().map(|r| report_json(r, full)).collect::<Vec<_>>(),
            });
            let text = serde_json::to_string_pretty(&doc).map_err(|e| Failure::Usage(e.to_string()))? + "\n";
            emit(&text, out.as_ref())?;
            if passed {
                Ok(())
            } else {
                Err(Failure::Verification)
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Numeric(msg)) => {
            eprintln!("numerical failure: {msg}");
            ExitCode::from(EXIT_NUMERIC)
        }
        Err(Failure::Verification) => {
            eprintln!("verification failed");
            ExitCode::from(EXIT_VERIFY)
        }
    }
}
