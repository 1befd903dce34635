//! Command-line front end for `tri-moduli`.
//!
//! Every command reads one JSON document (stdin, or `--json <file>`) and
//! prints one JSON envelope: `{"command", "ok": true, "result"}` or
//! `{"command", "ok": false, "error": {"code", "field", "message"}}`.
//! Exit status is 0 on success, 2 for bad input or domain errors and 3 for
//! internal errors or failed verification. `plot` without `--out` prints
//! the SVG itself.

pub mod commands;
pub mod error;
pub mod json;
pub mod plot;
pub mod verify;

use std::ffi::OsString;
use std::io::Read;
use std::path::PathBuf;

use clap::{Parser, ValueEnum};
use serde_json::{json, Value};
use tri_moduli::Tolerance;

use crate::commands::Options;
use crate::error::{CliError, CliResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// Shape coordinates of a triangle or side triple
    Shape,
    /// Pompeiu point for side lengths
    Solve,
    /// Rotate/dilate a class, or decompose one class relative to another
    Act,
    /// Cevian triangle and its rotation angle
    Cevian,
    /// Similarity circle in space
    Circle3d,
    /// de Sitter lift of one or two oriented circles
    Desitter,
    /// SVG figure
    Plot,
    /// Randomized invariant suites
    Verify,
}

impl Command {
    fn name(self) -> &'static str {
        match self {
            Command::Shape => "shape",
            Command::Solve => "solve",
            Command::Act => "act",
            Command::Cevian => "cevian",
            Command::Circle3d => "circle3d",
            Command::Desitter => "desitter",
            Command::Plot => "plot",
            Command::Verify => "verify",
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "tri-moduli",
    version,
    about = "Triangle shape moduli: coordinates, Pompeiu points, disc actions"
)]
pub struct Cli {
    pub command: Command,
    /// Figure name for `plot`, suite name for `verify`
    pub target: Option<String>,
    /// Read input JSON from a file (`-` for stdin)
    #[arg(long, value_name = "FILE")]
    pub json: Option<String>,
    /// Write the SVG here instead of stdout (`plot`)
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,
    /// Relative tolerance; for `verify`, the pass threshold of every check
    #[arg(long)]
    pub tol: Option<f64>,
    /// Seed for `verify`
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    /// Cases per suite for `verify`
    #[arg(long)]
    pub n: Option<usize>,
    /// Angles in and out are in degrees
    #[arg(long)]
    pub degrees: bool,
}

/// What the process should print and return.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let (stdout, stderr) = if code == 0 {
                (text, String::new())
            } else {
                (String::new(), text)
            };
            return Outcome { stdout, stderr, code };
        }
    };
    execute(&cli, stdin)
}

pub fn execute(cli: &Cli, stdin: &mut dyn Read) -> Outcome {
    let name = cli.command.name();
    match dispatch(cli, stdin) {
        Ok(Reply::Json(result)) => line(json!({"command": name, "ok": true, "result": result}), 0),
        Ok(Reply::Svg(svg)) => Outcome {
            stdout: svg,
            stderr: String::new(),
            code: 0,
        },
        Ok(Reply::Failed(result, e)) => line(
            json!({"command": name, "ok": false, "result": result, "error": error_record(&e)}),
            e.exit_code(),
        ),
        Err(e) => line(
            json!({"command": name, "ok": false, "error": error_record(&e)}),
            e.exit_code(),
        ),
    }
}

enum Reply {
    Json(Value),
    Svg(String),
    /// A result that is reported but counts as a failure.
    Failed(Value, CliError),
}

fn line(v: Value, code: i32) -> Outcome {
    Outcome {
        stdout: json::to_string(&v) + "\n",
        stderr: String::new(),
        code,
    }
}

fn error_record(e: &CliError) -> Value {
    json!({"code": e.code, "field": e.field, "message": e.message})
}

fn read_input(cli: &Cli, stdin: &mut dyn Read) -> CliResult<Value> {
    let text = match cli.json.as_deref() {
        None | Some("-") => {
            let mut s = String::new();
            stdin
                .read_to_string(&mut s)
                .map_err(|e| CliError::input("io_error", format!("cannot read stdin: {e}")))?;
            s
        }
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| CliError::input("io_error", format!("cannot read {path}: {e}")))?,
    };
    json::parse(&text)
}

/// Target name and parameters for `plot`/`verify`. With a positional name,
/// parameters come from `--json` only; otherwise the input document names
/// the target under `key`.
fn target_and_params(cli: &Cli, stdin: &mut dyn Read, key: &str) -> CliResult<(String, Value)> {
    match &cli.target {
        Some(t) if cli.json.is_some() => Ok((t.clone(), read_input(cli, stdin)?)),
        Some(t) => Ok((t.clone(), Value::Null)),
        None => {
            let mut v = read_input(cli, stdin)?;
            let obj = v
                .as_object_mut()
                .ok_or_else(|| CliError::field("input", "expected a JSON object"))?;
            let target = obj
                .remove(key)
                .and_then(|t| t.as_str().map(str::to_owned))
                .ok_or_else(|| CliError::field(key, format!("missing string field \"{key}\"")))?;
            Ok((target, v))
        }
    }
}

fn options(cli: &Cli) -> CliResult<Options> {
    let mut opts = Options {
        degrees: cli.degrees,
        ..Options::default()
    };
    if let Some(t) = cli.tol {
        if !(t.is_finite() && t > 0.0) {
            return Err(CliError::field("tol", "tolerance must be a positive number"));
        }
        opts.tol = Tolerance::new(t, t.min(opts.tol.abs));
    }
    Ok(opts)
}

fn dispatch(cli: &Cli, stdin: &mut dyn Read) -> CliResult<Reply> {
    let opts = options(cli)?;
    if cli.target.is_some() && !matches!(cli.command, Command::Plot | Command::Verify) {
        return Err(CliError::input(
            "unexpected_argument",
            format!("{} takes no positional argument", cli.command.name()),
        ));
    }
    let simple = |f: fn(&Value, &Options) -> CliResult<Value>, stdin: &mut dyn Read| -> CliResult<Reply> {
        Ok(Reply::Json(f(&read_input(cli, stdin)?, &opts)?))
    };
    match cli.command {
        Command::Shape => simple(commands::shape, stdin),
        Command::Solve => simple(commands::solve_sides, stdin),
        Command::Act => simple(commands::act, stdin),
        Command::Cevian => simple(commands::cevian, stdin),
        Command::Circle3d => simple(commands::circle3d, stdin),
        Command::Desitter => simple(commands::desitter, stdin),
        Command::Plot => {
            let (figure, params) = target_and_params(cli, stdin, "figure")?;
            let fig = plot::render(&figure, &params)?;
            match &cli.out {
                None => Ok(Reply::Svg(fig.svg)),
                Some(path) => {
                    std::fs::write(path, &fig.svg).map_err(|e| {
                        CliError::input("io_error", format!("cannot write {}: {e}", path.display())).at("out")
                    })?;
                    Ok(Reply::Json(json!({
                        "figure": figure,
                        "path": path.display().to_string(),
                        "bytes": fig.svg.len(),
                        "summary": fig.summary,
                    })))
                }
            }
        }
        Command::Verify => {
            let (suite, params) = target_and_params(cli, stdin, "suite")?;
            let (mut n, mut seed) = (cli.n, cli.seed);
            if let Some(obj) = params.as_object() {
                if let Some(v) = json::optional_number(obj, "n")? {
                    n = Some(count(v, "n")?);
                }
                if let Some(v) = json::optional_number(obj, "seed")? {
                    seed = count(v, "seed")? as u64;
                }
            }
            let report = verify::run(&suite, n, seed, cli.tol)?;
            let value = serde_json::to_value(&report).map_err(|e| CliError::internal(e.to_string()))?;
            if report.passed() {
                Ok(Reply::Json(value))
            } else {
                let mut e = CliError::input(
                    "verification_failed",
                    format!("{} of {} cases failed", report.fail, report.pass + report.fail),
                );
                e.internal = true;
                Ok(Reply::Failed(value, e))
            }
        }
    }
}

fn count(v: f64, field: &str) -> CliResult<usize> {
    if v >= 0.0 && v.fract() == 0.0 && v <= u32::MAX as f64 {
        Ok(v as usize)
    } else {
        Err(CliError::field(field, "expected a non-negative integer"))
    }
}
