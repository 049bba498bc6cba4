//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when a verdict fails (class `Neither`, empty
//! kernel, family not consistent with precompactness), 2 on usage, parse or
//! configuration errors. All output on stdout is JSON with a fixed key order;
//! reported numbers are rounded to 12 significant digits.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::family::{greedy_epsilon_net, precompactness_report};
use crate::fuzzy::{classify, FuzzyClass, LevelFuzzySet};
use crate::geometry::{PolygonKernel, SetKernel};
use crate::io::{parse_config, parse_fuzzy};
use crate::metric::{dp_distance, PExponent};

const DISPLAY_DIGITS: usize = 12;

#[derive(Debug, Parser)]
#[command(
    name = "fuzzy-star",
    version,
    about = "Fuzzy star-shaped numbers under the d_p metric"
)]
struct Cli {
    /// Print progress to stderr.
    #[arg(short, long, global = true)]
    verbose: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// d_p distance between two fuzzy sets.
    Distance {
        #[arg(long)]
        p: f64,
        /// Polygon boundary sampling pitch.
        #[arg(long, default_value_t = 0.01)]
        spacing: f64,
        a: PathBuf,
        b: PathBuf,
    },
    /// Check conditions (i)-(vi) and classify.
    Validate {
        #[arg(long)]
        p: f64,
        file: PathBuf,
    },
    /// Kernel of one alpha-cut.
    Kernel {
        file: PathBuf,
        #[arg(long, default_value_t = 1.0)]
        alpha: f64,
    },
    /// Precompactness diagnostics over every *.json in a directory.
    Diagnose {
        #[arg(long)]
        config: PathBuf,
        dir: PathBuf,
    },
    /// Greedy epsilon-net over every *.json in a directory.
    Net {
        #[arg(long)]
        eps: f64,
        #[arg(long)]
        p: f64,
        #[arg(long, default_value_t = 0.01)]
        spacing: f64,
        dir: PathBuf,
    },
}

/// Runs the CLI and returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    match execute(&cli, err) {
        Ok((value, code)) => {
            let text = serde_json::to_string_pretty(&round_display(value))
                .expect("JSON values always serialize");
            if writeln!(out, "{text}").is_err() {
                return 2;
            }
            code
        }
        Err(message) => {
            let _ = writeln!(err, "error: {message}");
            2
        }
    }
}

fn execute(cli: &Cli, log: &mut dyn Write) -> Result<(Value, i32), String> {
    let mut note = |msg: String| {
        if cli.verbose {
            let _ = writeln!(log, "{msg}");
        }
    };
    match &cli.command {
        Command::Distance { p, spacing, a, b } => {
            let p = exponent(*p)?;
            let u = load(a)?;
            let v = load(b)?;
            let d = dp_distance(&u, &v, p, *spacing).map_err(|e| e.to_string())?;
            Ok((json!({"value": d.value, "error_bound": d.error_bound}), 0))
        }
        Command::Validate { p, file } => {
            let u = load(file)?;
            let report = classify(&u, exponent(*p)?);
            let code = if report.class == FuzzyClass::Neither {
                1
            } else {
                0
            };
            Ok((to_value(&report), code))
        }
        Command::Kernel { file, alpha } => {
            let u = load(file)?;
            let cut = u.alpha_cut(*alpha).map_err(|e| e.to_string())?;
            let kernel = SetKernel::of(cut);
            let code = if kernel.is_empty() { 1 } else { 0 };
            Ok((kernel_json(&kernel), code))
        }
        Command::Diagnose { config, dir } => {
            let text = read(config)?;
            let config = parse_config(&text).map_err(|e| format!("{}: {e}", config.display()))?;
            let (names, family) = load_dir(dir)?;
            note(format!(
                "loaded {} members from {}",
                names.len(),
                dir.display()
            ));
            let report = precompactness_report(
                &family,
                config.exponent().map_err(|e| e.to_string())?,
                &config.h_grid,
                config.bound_threshold,
                config.eps,
                config.spacing,
            )
            .map_err(|e| e.to_string())?;
            let code = if report.is_consistent() { 0 } else { 1 };
            Ok((to_value(&report), code))
        }
        Command::Net {
            eps,
            p,
            spacing,
            dir,
        } => {
            let p = exponent(*p)?;
            let (names, family) = load_dir(dir)?;
            note(format!(
                "loaded {} members from {}",
                names.len(),
                dir.display()
            ));
            let net = greedy_epsilon_net(&family, *eps, p, *spacing).map_err(|e| e.to_string())?;
            let assignment: Vec<Value> = net
                .assignment
                .iter()
                .map(|a| {
                    json!({
                        "member": names[a.member],
                        "representative": names[a.representative],
                        "distance": a.distance,
                    })
                })
                .collect();
            let reps: Vec<&str> = net
                .representatives
                .iter()
                .map(|&i| names[i].as_str())
                .collect();
            Ok((
                json!({
                    "eps": net.eps,
                    "p": p.value(),
                    "representatives": reps,
                    "assignment": assignment,
                }),
                0,
            ))
        }
    }
}

fn exponent(p: f64) -> Result<PExponent, String> {
    PExponent::new(p).map_err(|e| e.to_string())
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("reports always serialize")
}

fn read(path: &Path) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn load(path: &Path) -> Result<LevelFuzzySet, String> {
    parse_fuzzy(&read(path)?).map_err(|e| format!("{}: {e}", path.display()))
}

/// Every `*.json` file in `dir`, ordered by file name.
fn load_dir(dir: &Path) -> Result<(Vec<String>, Vec<LevelFuzzySet>), String> {
    let mut paths: Vec<PathBuf> = fs::read_dir(dir)
        .map_err(|e| format!("{}: {e}", dir.display()))?
        .filter_map(|entry| entry.ok().map(|e| e.path()))
        .filter(|p| p.is_file() && p.extension().is_some_and(|ext| ext == "json"))
        .collect();
    paths.sort();
    if paths.is_empty() {
        return Err(format!("{}: no *.json members found", dir.display()));
    }
    let family = paths
        .par_iter()
        .map(|p| load(p))
        .collect::<Result<Vec<_>, _>>()?;
    let names = paths
        .iter()
        .map(|p| {
            p.file_name()
                .unwrap_or_default()
                .to_string_lossy()
                .into_owned()
        })
        .collect();
    Ok((names, family))
}

fn kernel_json(kernel: &SetKernel) -> Value {
    let vertices =
        |k: &PolygonKernel| -> Vec<[f64; 2]> { k.vertices().iter().map(|v| [v.x, v.y]).collect() };
    match kernel {
        SetKernel::Interval(i) => json!({
            "empty": false,
            "degenerate": i.is_degenerate(),
            "interval": {"a": i.a, "b": i.b},
        }),
        SetKernel::Polygon(PolygonKernel::Empty) => json!({"empty": true}),
        SetKernel::Polygon(k) => json!({
            "empty": false,
            "degenerate": k.is_degenerate(),
            "vertices": vertices(k),
        }),
    }
}

fn round_sig(x: f64, digits: usize) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{:.*e}", digits - 1, x).parse().unwrap_or(x)
}

/// Rounds every float in `value` for display.
fn round_display(value: Value) -> Value {
    match value {
        Value::Number(n) if n.is_f64() => {
            let x = round_sig(n.as_f64().unwrap_or(f64::NAN), DISPLAY_DIGITS);
            serde_json::Number::from_f64(x).map_or(Value::Null, Value::Number)
        }
        Value::Array(items) => Value::Array(items.into_iter().map(round_display).collect()),
        Value::Object(map) => Value::Object(
            map.into_iter()
                .map(|(k, v)| (k, round_display(v)))
                .collect(),
        ),
        other => other,
    }
}
