//! Command-line frontend for the `planar-equilibria` library.
//!
//! Every subcommand reads a body specification file, runs one analysis and
//! writes JSON, CSV or SVG to standard output or to `--out`. Errors are
//! printed to standard error as a single JSON line and mapped to exit codes
//! (see [`error`]).

pub mod error;
pub mod format;
pub mod report;
pub mod spec;
pub mod svg;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use planar_equilibria::equilibria::region_map;
use planar_equilibria::evolute::sample_evolute;
use planar_equilibria::oblique::center_trace;
use planar_equilibria::{ConvexBody, Incline, PlanePoint};

pub use error::CliError;
use format::{num, to_json};
pub use report::AnalysisReport;
pub use spec::{parse_body_spec, BodySpec};

#[derive(Debug, Parser)]
#[command(name = "convex-eq", version, about = "Equilibria of planar convex bodies")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check that the body is strongly convex.
    Validate { body: PathBuf },
    /// Perimeter, area, centroid, cusps, equilibria and counts.
    Analyze {
        body: PathBuf,
        /// Center of mass `x,y`; defaults to the centroid.
        #[arg(long, allow_hyphen_values = true)]
        center: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Equilibria about a center, optionally on an incline.
    Equilibria {
        body: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        center: String,
        /// Inclination of the supporting line in degrees.
        #[arg(long, allow_hyphen_values = true)]
        alpha_deg: Option<f64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sampled evolute as CSV.
    Evolute {
        body: PathBuf,
        #[arg(long, default_value_t = 512)]
        samples: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Equilibrium counts over a grid of centers as CSV.
    RegionMap {
        body: PathBuf,
        /// `x0,y0,x1,y1`
        #[arg(long, allow_hyphen_values = true)]
        bbox: String,
        /// `WxH`
        #[arg(long)]
        res: String,
        /// Distance below which a cell is flagged as near the evolute.
        #[arg(long)]
        delta: Option<f64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Trace of the center of mass rolling on an incline as CSV.
    Roll {
        body: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        alpha_deg: f64,
        #[arg(long, default_value_t = 361)]
        samples: usize,
        #[arg(long, allow_hyphen_values = true)]
        center: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// SVG of the boundary, evolute, center and equilibria.
    Plot {
        body: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        center: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn parse_reals(text: &str, n: usize, what: &str) -> Result<Vec<f64>, CliError> {
    let values: Result<Vec<f64>, _> = text.split(',').map(|s| s.trim().parse::<f64>()).collect();
    match values {
        Ok(v) if v.len() == n && v.iter().all(|x| x.is_finite()) => Ok(v),
        _ => Err(CliError::Usage(format!("{what} expects {n} comma-separated finite numbers, got {text:?}"))),
    }
}

fn parse_point(text: &str) -> Result<PlanePoint, CliError> {
    let v = parse_reals(text, 2, "--center")?;
    Ok(PlanePoint::new(v[0], v[1]))
}

fn parse_resolution(text: &str) -> Result<(usize, usize), CliError> {
    text.split_once(['x', 'X'])
        .and_then(|(w, h)| Some((w.trim().parse().ok()?, h.trim().parse().ok()?)))
        .ok_or_else(|| CliError::Usage(format!("--res expects WxH, got {text:?}")))
}

fn incline_from_degrees(deg: f64) -> Result<Incline, CliError> {
    Ok(Incline::new(deg.to_radians())?)
}

fn load_body(path: &Path) -> Result<ConvexBody, CliError> {
    let bytes = std::fs::read(path).map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    Ok(ConvexBody::new(parse_body_spec(&bytes)?)?)
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => {
            std::fs::write(path, text).map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display())))
        }
        None => {
            use std::io::Write;
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes()).map_err(|e| CliError::Io(format!("cannot write output: {e}")))
        }
    }
}

fn execute(command: Command) -> Result<(), CliError> {
    match command {
        Command::Validate { body } => {
            let b = load_body(&body)?;
            let v = serde_json::json!({ "valid": true, "rhoMin": b.rho_min(), "degree": b.support().degree() });
            emit(None, &to_json(&v))
        }
        Command::Analyze { body, center, out } => {
            let b = load_body(&body)?;
            let center = center.as_deref().map(parse_point).transpose()?;
            emit(out.as_deref(), &to_json(&report::analyze(&b, center)?))
        }
        Command::Equilibria { body, center, alpha_deg, out } => {
            let b = load_body(&body)?;
            let center = parse_point(&center)?;
            let alpha = alpha_deg.map(|d| incline_from_degrees(d).map(|i| i.alpha())).transpose()?;
            emit(out.as_deref(), &to_json(&report::equilibria(&b, center, alpha)?))
        }
        Command::Evolute { body, samples, out } => {
            let b = load_body(&body)?;
            let poly = sample_evolute(&b, samples)?;
            let mut csv = String::from("phi,x,y,is_cusp,kind\n");
            let mut cusps = poly.cusp_indices.iter().zip(&poly.cusp_kinds).peekable();
            for (i, (phi, p)) in poly.angles.iter().zip(&poly.points).enumerate() {
                let kind = match cusps.peek() {
                    Some((&j, kind)) if j == i => {
                        let k = kind.as_str();
                        cusps.next();
                        Some(k)
                    }
                    _ => None,
                };
                writeln!(csv, "{},{},{},{},{}", num(*phi), num(p.x), num(p.y), u8::from(kind.is_some()), kind.unwrap_or(""))
                    .unwrap();
            }
            emit(out.as_deref(), &csv)
        }
        Command::RegionMap { body, bbox, res, delta, out } => {
            let b = load_body(&body)?;
            let v = parse_reals(&bbox, 4, "--bbox")?;
            let (columns, rows) = parse_resolution(&res)?;
            let delta = delta.unwrap_or(1e-2 * b.scale());
            let map = region_map(&b, PlanePoint::new(v[0], v[1]), PlanePoint::new(v[2], v[3]), columns, rows, delta)?;
            let mut csv = String::from("x,y,n,near_evolute\n");
            for j in 0..rows {
                for i in 0..columns {
                    let c = map.cell_center(i, j);
                    let n = map.count(i, j).unwrap_or(-1);
                    writeln!(csv, "{},{},{},{}", num(c.x), num(c.y), n, u8::from(map.is_near_evolute(i, j))).unwrap();
                }
            }
            emit(out.as_deref(), &csv)
        }
        Command::Roll { body, alpha_deg, samples, center, out } => {
            let b = load_body(&body)?;
            let incline = incline_from_degrees(alpha_deg)?;
            let center = center.as_deref().map(parse_point).transpose()?.unwrap_or_else(|| b.centroid());
            let mut csv = String::from("phi,x,y,height\n");
            for t in center_trace(&b, center, &incline, samples)? {
                writeln!(csv, "{},{},{},{}", num(t.phi), num(t.center.x), num(t.center.y), num(t.height())).unwrap();
            }
            emit(out.as_deref(), &csv)
        }
        Command::Plot { body, center, out } => {
            let b = load_body(&body)?;
            let center = parse_point(&center)?;
            emit(out.as_deref(), &svg::render_scene(&b, center)?)
        }
    }
}

/// Runs the command line `args` (including the program name) and returns
/// the process exit code. Errors are reported on standard error.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return error::EXIT_OK;
            }
            let err = CliError::Usage(e.to_string().lines().next().unwrap_or("invalid arguments").to_string());
            eprintln!("{}", err.to_json_line());
            return err.exit_code();
        }
    };
    match execute(cli.command) {
        Ok(()) => error::EXIT_OK,
        Err(e) => {
            eprintln!("{}", e.to_json_line());
            e.exit_code()
        }
    }
}
