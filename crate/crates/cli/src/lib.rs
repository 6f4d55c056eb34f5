//! Command-line front end: scenario verification with NDJSON reports,
//! center queries, and SVG/CSV figures.
//!
//! Every command returns a process exit code; see [`exit`].

pub mod render;

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use tricurves::centers::{eval_center, CenterExpr, CenterId, Conjugation};
use tricurves::curves::{conic_through, pivotal_cubic, Conic, Cubic, Curve, CurveError};
use tricurves::kernel::{parse_rational, HomPoint, RefTriangle};
use tricurves::scenarios::{find_scenario, registry, run_scenario, Abort, Figure, Report, ScenarioError};
use tricurves::Rational;

use render::{RenderConfig, RenderError};

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    /// A must-pass claim failed or a claim raised an error.
    pub const FAILURE: i32 = 1;
    /// Verdict-only failures under `--strict`.
    pub const VERDICT: i32 = 2;
    /// Bad arguments, unknown scenario, center or curve.
    pub const USAGE: i32 = 64;
    /// Invalid triangle or a construction that is undefined on it.
    pub const DATA: i32 = 65;
    pub const IO: i32 = 74;
}

#[derive(Debug, Parser)]
#[command(name = "tricurves", version, about = "Exact verification of triangle conics and cubics")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run one scenario, or all of them, and write JSON reports.
    Verify(VerifyArgs),
    /// Print the barycentric coordinates of a center.
    Center(CenterArgs),
    /// List the registered scenarios.
    ListScenarios(ListArgs),
    /// Draw a scenario figure or a single curve.
    Render(RenderArgs),
}

#[derive(Debug, clap::Args)]
pub struct VerifyArgs {
    /// Scenario id, or `all`.
    pub scenario: String,
    #[arg(long, env = "TCL_DEFAULT_TRIALS", default_value_t = 100)]
    pub trials: usize,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    /// Write NDJSON reports here instead of stdout.
    #[arg(long)]
    pub json: Option<PathBuf>,
    /// Stop after the first scenario with a must-pass failure or an error.
    #[arg(long)]
    pub fail_fast: bool,
    /// Also exit non-zero when verdict-only claims fail.
    #[arg(long)]
    pub strict: bool,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Plain,
    Json,
}

#[derive(Debug, clap::Args)]
pub struct CenterArgs {
    /// Side lengths `a,b,c`; integers or fractions `p/q`.
    #[arg(long)]
    pub triangle: String,
    /// Center name, alias or expression such as `midpoint(X1, X3)`.
    #[arg(long)]
    pub center: String,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug, clap::Args)]
pub struct ListArgs {
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug, clap::Args)]
#[command(group(clap::ArgGroup::new("target").required(true).args(["scenario", "curve"])))]
#[command(group(clap::ArgGroup::new("output").required(true).args(["svg", "csv"])))]
pub struct RenderArgs {
    #[arg(long)]
    pub scenario: Option<String>,
    /// `circumcircle`, `jerabek`, `thomson`, `darboux`, `lucas`,
    /// `conic:q11,q22,q33,q12,q13,q23` or `cubic:` with ten coefficients.
    #[arg(long)]
    pub curve: Option<String>,
    #[arg(long)]
    pub triangle: String,
    #[arg(long)]
    pub svg: Option<PathBuf>,
    #[arg(long)]
    pub csv: Option<PathBuf>,
    #[arg(long, default_value_t = 800)]
    pub width: u32,
    #[arg(long, default_value_t = 800)]
    pub height: u32,
    #[arg(long, default_value_t = 256)]
    pub grid: usize,
    #[arg(long, default_value_t = 0.08)]
    pub margin: f64,
    #[arg(long)]
    pub no_labels: bool,
}

/// Parses arguments and runs the command, writing to `out` and `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = write!(out, "{e}");
            return exit::OK;
        }
        Err(e) => {
            let _ = write!(err, "{e}");
            return exit::USAGE;
        }
    };
    match cli.command {
        Command::Verify(a) => cmd_verify(&a, out, err),
        Command::Center(a) => cmd_center(&a, out, err),
        Command::ListScenarios(a) => cmd_list(&a, out),
        Command::Render(a) => cmd_render(&a, out, err),
    }
}

pub fn cmd_verify(a: &VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let ids: Vec<&str> =
        if a.scenario == "all" { registry().iter().map(|s| s.id).collect() } else { vec![a.scenario.as_str()] };
    if let Some(bad) = ids.iter().find(|id| find_scenario(id).is_err()) {
        let _ = writeln!(err, "error: unknown scenario: {bad}");
        return exit::USAGE;
    }

    let mut file = match &a.json {
        Some(path) => match File::create(path) {
            Ok(f) => Some(BufWriter::new(f)),
            Err(e) => {
                let _ = writeln!(err, "error: {}: {e}", path.display());
                return exit::IO;
            }
        },
        None => None,
    };
    let (mut failing, mut verdicts) = (false, false);
    for id in ids {
        let report = match run_scenario(id, a.trials, a.seed) {
            Ok(r) => r,
            Err(e @ (ScenarioError::UnknownScenario(_) | ScenarioError::NoTrials)) => {
                let _ = writeln!(err, "error: {e}");
                return exit::USAGE;
            }
            Err(e) => {
                let _ = writeln!(err, "error: {id}: {e}");
                failing = true;
                if a.fail_fast {
                    break;
                }
                continue;
            }
        };
        let line = serde_json::to_string(&report).expect("reports serialize");
        let written = match file.as_mut() {
            Some(f) => writeln!(f, "{line}").and_then(|_| writeln!(out, "{}", summary(&report))),
            None => writeln!(out, "{line}").and_then(|_| writeln!(err, "{}", summary(&report))),
        };
        if let Err(e) = written {
            let _ = writeln!(err, "error: {e}");
            return exit::IO;
        }
        let bad = report.must_pass_failures() + report.errors() > 0;
        failing |= bad;
        verdicts |= report.verdict_failures() > 0;
        if bad && a.fail_fast {
            break;
        }
    }
    if let Some(Err(e)) = file.as_mut().map(Write::flush) {
        let _ = writeln!(err, "error: {e}");
        return exit::IO;
    }
    if failing {
        exit::FAILURE
    } else if verdicts && a.strict {
        exit::VERDICT
    } else {
        exit::OK
    }
}

/// One human-readable line per report.
pub fn summary(r: &Report) -> String {
    format!(
        "{}: {} claims, {} trials ({} skipped), must-pass failures {}, verdict failures {}, errors {}",
        r.scenario,
        r.claims.len(),
        r.trials,
        r.skipped,
        r.must_pass_failures(),
        r.verdict_failures(),
        r.errors()
    )
}

/// Parses `a,b,c` into a triangle.
pub fn parse_triangle(s: &str) -> Result<RefTriangle, String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 3 {
        return Err(format!("expected three comma-separated sides, got {s:?}"));
    }
    let sides = parts
        .iter()
        .map(|p| parse_rational(p).ok_or_else(|| format!("not a rational number: {p:?}")))
        .collect::<Result<Vec<Rational>, _>>()?;
    let [a, b, c]: [Rational; 3] = sides.try_into().expect("three");
    RefTriangle::from_sides(a, b, c).map_err(|e| e.to_string())
}

pub fn cmd_center(a: &CenterArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let t = match parse_triangle(&a.triangle) {
        Ok(t) => t,
        Err(e) => {
            let _ = writeln!(err, "error: invalid triangle: {e}");
            return exit::DATA;
        }
    };
    let expr: CenterExpr = match a.center.parse() {
        Ok(e) => e,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return exit::USAGE;
        }
    };
    let p = match expr.eval(&t) {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return exit::DATA;
        }
    };
    let r = match a.format {
        Format::Plain => writeln!(out, "{p}"),
        Format::Json => {
            let triangle: Vec<String> = a.triangle.split(',').map(|s| s.trim().to_string()).collect();
            let coords: Vec<String> = p.coords().iter().map(ToString::to_string).collect();
            writeln!(out, "{}", json!({ "center": a.center, "triangle": triangle, "barycentric": coords }))
        }
    };
    match r {
        Ok(()) => exit::OK,
        Err(_) => exit::IO,
    }
}

pub fn cmd_list(a: &ListArgs, out: &mut dyn Write) -> i32 {
    let list = tricurves::scenarios::list_scenarios();
    let r = match a.format {
        Format::Json => writeln!(out, "{}", serde_json::to_string(&list).expect("serializes")),
        Format::Plain => {
            list.iter().try_for_each(|s| writeln!(out, "{:<28} {:>2} claims  {}", s.id, s.claims, s.description))
        }
    };
    match r {
        Ok(()) => exit::OK,
        Err(_) => exit::IO,
    }
}

#[derive(Debug)]
enum SpecError {
    Unknown(String),
    Curve(CurveError),
}

impl From<CurveError> for SpecError {
    fn from(e: CurveError) -> Self {
        SpecError::Curve(e)
    }
}

/// Builds the figure for a curve spec: the curve plus its defining points.
fn curve_figure(t: &RefTriangle, spec: &str) -> Result<Figure, SpecError> {
    let x = |id: CenterId| eval_center(t, id).map_err(CurveError::from);
    let vertices: Vec<(String, HomPoint)> =
        ["A", "B", "C"].iter().enumerate().map(|(i, l)| (l.to_string(), HomPoint::vertex(i))).collect();
    let pivotal = |pivot: CenterId, conj: Conjugation, label: &str| -> Result<Figure, SpecError> {
        let p = x(pivot)?;
        let k = pivotal_cubic(t, &p, conj)?;
        let mut points = vertices.clone();
        points.push((label.into(), p));
        Ok(Figure { curves: vec![(spec.into(), Curve::Cubic(k))], points })
    };
    let coefficients = |body: &str, n: usize| -> Result<Vec<Rational>, SpecError> {
        let v: Option<Vec<Rational>> = body.split(',').map(parse_rational).collect();
        v.filter(|v| v.len() == n)
            .ok_or_else(|| SpecError::Unknown(format!("expected {n} rational coefficients: {body}")))
    };
    let single = |c: Curve| Figure { curves: vec![(spec.into(), c)], points: vertices.clone() };

    match spec {
        "circumcircle" => {
            let [a2, b2, c2] = t.sq_sides().clone();
            let half = Rational::new(1.into(), 2.into());
            let zero = Rational::from_integer(0.into());
            let c = Conic::new(&[zero.clone(), zero.clone(), zero, c2 * &half, b2 * &half, a2 * &half])?;
            Ok(single(Curve::Conic(c)))
        }
        "jerabek" => {
            let (o, h) = (x(CenterId::X3)?, x(CenterId::X4)?);
            let mut pts: Vec<HomPoint> = vertices.iter().map(|(_, p)| p.clone()).collect();
            pts.extend([o.clone(), h.clone()]);
            let c = conic_through(&pts)?;
            let mut points = vertices.clone();
            points.extend([("O".into(), o), ("H".into(), h)]);
            Ok(Figure { curves: vec![(spec.into(), Curve::Conic(c))], points })
        }
        "thomson" => pivotal(CenterId::X2, Conjugation::Isogonal, "G"),
        "darboux" => pivotal(CenterId::X20, Conjugation::Isogonal, "L"),
        "lucas" => pivotal(CenterId::X69, Conjugation::Isotomic, "X69"),
        _ => {
            if let Some(body) = spec.strip_prefix("conic:") {
                let q: [Rational; 6] = coefficients(body, 6)?.try_into().expect("six");
                Ok(single(Curve::Conic(Conic::new(&q)?)))
            } else if let Some(body) = spec.strip_prefix("cubic:") {
                let q: [Rational; 10] = coefficients(body, 10)?.try_into().expect("ten");
                Ok(single(Curve::Cubic(Cubic::new(&q)?)))
            } else {
                Err(SpecError::Unknown(format!("unknown curve: {spec}")))
            }
        }
    }
}

pub fn cmd_render(a: &RenderArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cfg = RenderConfig { width: a.width, height: a.height, grid: a.grid, margin: a.margin, labels: !a.no_labels };
    if let Err(e) = cfg.validate() {
        let _ = writeln!(err, "error: {e}");
        return exit::USAGE;
    }
    let t = match parse_triangle(&a.triangle) {
        Ok(t) => t,
        Err(e) => {
            let _ = writeln!(err, "error: invalid triangle: {e}");
            return exit::DATA;
        }
    };
    let figure = match (&a.scenario, &a.curve) {
        (Some(id), _) => match find_scenario(id) {
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                return exit::USAGE;
            }
            Ok(s) => match s.figure(&t) {
                Ok(f) => f,
                Err(Abort::Skip(why) | Abort::Error(why)) => {
                    let _ = writeln!(err, "error: {id} is undefined on this triangle: {why}");
                    return exit::DATA;
                }
            },
        },
        (None, Some(spec)) => match curve_figure(&t, spec) {
            Ok(f) => f,
            Err(SpecError::Unknown(m)) => {
                let _ = writeln!(err, "error: {m}");
                return exit::USAGE;
            }
            Err(SpecError::Curve(e)) => {
                let _ = writeln!(err, "error: {spec} is undefined on this triangle: {e}");
                return exit::DATA;
            }
        },
        (None, None) => unreachable!("clap requires a target"),
    };

    let r = render::render(&t, &figure, &cfg);
    for label in r.empty_curves() {
        let _ = writeln!(err, "warning: {label} has no real locus in the viewport; drawing points only");
    }
    let written = match (&a.svg, &a.csv) {
        (Some(path), _) => File::create(path)
            .map_err(RenderError::from)
            .and_then(|f| render::write_svg(&r, &cfg, BufWriter::new(f)).map_err(RenderError::from)),
        (None, Some(path)) => File::create(path).map_err(RenderError::from).and_then(|f| render::write_csv(&r, f)),
        (None, None) => unreachable!("clap requires an output"),
    };
    if let Err(e) = written {
        let _ = writeln!(err, "error: {e}");
        return exit::IO;
    }
    let traced: usize = r.curves.iter().map(|(_, c)| c.len()).sum();
    let _ = writeln!(out, "{} curves, {} traced chains, {} points", r.curves.len(), traced, r.points.len());
    exit::OK
}

/// Entry point for the binary.
pub fn main_with_env() -> i32 {
    let (stdout, stderr) = (io::stdout(), io::stderr());
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/cli.md")]
mod book_cli {}
