//! Command-line front end: parameter sweeps to CSV, the verification run,
//! and the acceleration-to-r helper.
//!
//! Exit codes: 0 success, 1 verification failure, 2 I/O or usage error.

use std::collections::HashMap;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use unruh_tangle::rindler::acceleration_to_r;
use unruh_tangle::sweep::{emit_csv, run_sweep, verify, ScenarioKind, SweepConfig};

const SPEED_OF_LIGHT: f64 = 299_792_458.0;

#[derive(Parser)]
#[command(
    name = "unruh-tangle",
    about = "Entanglement measures of a GHZ state under observer acceleration",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sweep the acceleration parameter and write all measures as CSV.
    Sweep(SweepArgs),
    /// Compare the numeric pipeline against the reference closed forms.
    Verify(VerifyArgs),
    /// Convert a physical acceleration to the parameter r.
    ROf(ROfArgs),
}

#[derive(clap::Args)]
struct SweepArgs {
    /// Which observers accelerate.
    #[arg(long, value_enum)]
    scenario: Option<ScenarioArg>,
    /// Force r_b = r_c instead of the full square grid.
    #[arg(long)]
    diagonal: bool,
    /// Lower end of the r range (radians unless --degrees).
    #[arg(long)]
    r_min: Option<f64>,
    /// Upper end of the r range (radians unless --degrees).
    #[arg(long)]
    r_max: Option<f64>,
    /// Number of grid points per axis, endpoints included.
    #[arg(long)]
    steps: Option<usize>,
    /// Output CSV path.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Interpret --r-min/--r-max in degrees.
    #[arg(long)]
    degrees: bool,
    /// Optional key = value file supplying any of the flags above.
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(clap::Args)]
struct VerifyArgs {
    /// Maximum allowed |numeric - analytic| deviation.
    #[arg(long)]
    tolerance: Option<f64>,
    /// Optional key = value file (the `tolerance` key applies here).
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(clap::Args)]
struct ROfArgs {
    /// Mode angular frequency (rad/s).
    #[arg(long)]
    omega: f64,
    /// Proper acceleration of the observer (m/s^2).
    #[arg(long)]
    accel: f64,
    /// Speed of light (m/s).
    #[arg(long, default_value_t = SPEED_OF_LIGHT)]
    c: f64,
}

#[derive(Clone, Copy, ValueEnum)]
enum ScenarioArg {
    One,
    Two,
}

impl From<ScenarioArg> for ScenarioKind {
    fn from(arg: ScenarioArg) -> Self {
        match arg {
            ScenarioArg::One => ScenarioKind::OneAccelerated,
            ScenarioArg::Two => ScenarioKind::TwoAccelerated,
        }
    }
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Sweep(args) => run_sweep_command(args),
        Command::Verify(args) => run_verify_command(args),
        Command::ROf(args) => run_r_of_command(args),
    }
}

fn run_sweep_command(args: SweepArgs) -> ExitCode {
    let file = match args.config.as_deref().map(load_key_values).transpose() {
        Ok(map) => map.unwrap_or_default(),
        Err(message) => return usage_error(&message),
    };

    let scenario = match args
        .scenario
        .map(|s| Ok(ScenarioKind::from(s)))
        .or_else(|| file.get("scenario").map(|v| ScenarioKind::parse(v)))
    {
        Some(Ok(kind)) => kind,
        Some(Err(err)) => return usage_error(&err.to_string()),
        None => return usage_error("missing `--scenario` (or `scenario` in the config file)"),
    };
    let degrees = args.degrees || matches!(file.get("degrees").map(String::as_str), Some("true"));
    let to_radians = |v: f64| if degrees { v.to_radians() } else { v };

    let r_min = match resolve_f64(args.r_min, &file, "r_min") {
        Ok(v) => v.map(to_radians),
        Err(message) => return usage_error(&message),
    };
    let r_max = match resolve_f64(args.r_max, &file, "r_max") {
        Ok(v) => v.map(to_radians),
        Err(message) => return usage_error(&message),
    };
    let steps = match resolve_parse::<usize>(args.steps, &file, "steps") {
        Ok(v) => v,
        Err(message) => return usage_error(&message),
    };
    let out = args.out.or_else(|| file.get("out").map(PathBuf::from));

    let (Some(r_min), Some(r_max), Some(steps), Some(out)) = (r_min, r_max, steps, out) else {
        return usage_error("missing one of `--r-min`, `--r-max`, `--steps`, `--out`");
    };
    let diagonal =
        args.diagonal || matches!(file.get("diagonal").map(String::as_str), Some("true"));

    let config = SweepConfig {
        scenario,
        r_min,
        r_max,
        steps,
        diagonal,
        tolerance: 1e-10,
    };
    let records = match run_sweep(&config) {
        Ok(records) => records,
        Err(err) => return usage_error(&err.to_string()),
    };
    match emit_csv(&records, &out) {
        Ok(()) => {
            eprintln!(
                "wrote {} records ({} grid points) to {}",
                records.len(),
                records.len() / 13,
                out.display()
            );
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn run_verify_command(args: VerifyArgs) -> ExitCode {
    let file = match args.config.as_deref().map(load_key_values).transpose() {
        Ok(map) => map.unwrap_or_default(),
        Err(message) => return usage_error(&message),
    };
    let tolerance = match resolve_f64(args.tolerance, &file, "tolerance") {
        Ok(v) => v.unwrap_or(1e-10),
        Err(message) => return usage_error(&message),
    };
    match verify(tolerance, 65) {
        Ok(report) => {
            println!("{report}");
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(err) => usage_error(&err.to_string()),
    }
}

fn run_r_of_command(args: ROfArgs) -> ExitCode {
    match acceleration_to_r(args.omega, args.accel, args.c) {
        Ok(param) => {
            println!("{:.12}", param.r());
            ExitCode::SUCCESS
        }
        Err(err) => usage_error(&err.to_string()),
    }
}

fn usage_error(message: &str) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(2)
}

/// Parses a `key = value` config file. Blank lines and `#` comments are
/// skipped; keys mirror the long flags with underscores.
fn load_key_values(path: &std::path::Path) -> Result<HashMap<String, String>, String> {
    let text = fs::read_to_string(path)
        .map_err(|err| format!("cannot read config {}: {err}", path.display()))?;
    let mut map = HashMap::new();
    for (number, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(format!(
                "config {} line {}: expected `key = value`",
                path.display(),
                number + 1
            ));
        };
        map.insert(key.trim().to_string(), value.trim().to_string());
    }
    Ok(map)
}

fn resolve_f64(
    flag: Option<f64>,
    file: &HashMap<String, String>,
    key: &str,
) -> Result<Option<f64>, String> {
    resolve_parse::<f64>(flag, file, key)
}

fn resolve_parse<T: std::str::FromStr>(
    flag: Option<T>,
    file: &HashMap<String, String>,
    key: &str,
) -> Result<Option<T>, String> {
    if flag.is_some() {
        return Ok(flag);
    }
    match file.get(key) {
        Some(raw) => raw
            .parse::<T>()
            .map(Some)
            .map_err(|_| format!("config key `{key}`: cannot parse `{raw}`")),
        None => Ok(None),
    }
}
