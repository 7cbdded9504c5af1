//! The `feasreg` command line.
//!
//! Exit codes: 0 success, 2 usage, 3 domain error, 4 capability cap
//! exceeded, 5 verification failure, 1 I/O.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::boundary::{self, NamedCurve};
use crate::constructions::{ConstructionKind, ConstructionSpec};
use crate::error::{Error, Result};
use crate::graph::GraphJson;
use crate::lab::{self, SuiteConfig};
use crate::optimizer::{optimize_profile_with, OptimizerOptions, Sense};
use crate::quantum::QuantumGraph;

pub const EXIT_OK: i32 = 0;
pub const EXIT_IO: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;
pub const EXIT_CAPABILITY: i32 = 4;
pub const EXIT_VERIFICATION: i32 = 5;

/// Grid size used by `figures` unless `--grid` says otherwise.
pub const FIGURE_GRID: usize = 200;
/// `figures` merges the critical densities `1 - 1/k` for `2 <= k <= this`
/// into the grid.
pub const FIGURE_MAX_KNOT: usize = 30;

#[derive(Debug, Parser)]
#[command(name = "feasreg", version, about = "Feasible regions of induced graph densities")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Seed for every randomised step.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Output file (a directory for `figures`); stdout when absent.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Graph6,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sample a closed-form boundary curve, e.g. `k3minus`, `g3`, `h4`.
    Curve {
        name: String,
        #[arg(long, default_value_t = 200)]
        grid: usize,
    },
    /// Exhaustive (edge density, Q-density) cloud over all graphs on n vertices.
    Region {
        #[arg(long)]
        q: String,
        #[arg(long)]
        n: usize,
        /// Emit the per-bin empirical boundary instead of the raw cloud.
        #[arg(long)]
        bins: Option<usize>,
    },
    /// Build an extremal construction.
    Construct {
        /// h-star, bipartite-b, clique-isolated, coclique-joined or turan.
        kind: String,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0.0)]
        x: f64,
        #[arg(long, default_value_t = 1)]
        r: usize,
    },
    /// Run finite-n inequality checks: all, c4, goodman, corollary, k4minus, kst.
    Verify {
        #[arg(default_value = "all")]
        suite: String,
        /// Every isomorphism class on 1..=n vertices is checked.
        #[arg(long, default_value_t = 7)]
        n: usize,
        /// Number of random G(sample-n, x) hosts.
        #[arg(long, default_value_t = 500)]
        samples: usize,
        #[arg(long, default_value_t = 40)]
        sample_n: usize,
    },
    /// Optimise the limit Q-density over r-part complete multipartite profiles.
    ProfileOpt {
        #[arg(long)]
        q: String,
        #[arg(long)]
        x: f64,
        #[arg(long)]
        r: usize,
        #[arg(long, default_value = "max")]
        sense: String,
        #[arg(long, default_value_t = 64)]
        starts: usize,
    },
    /// Write the boundary data of the four feasible-region figures.
    Figures {
        #[arg(long, default_value_t = FIGURE_GRID)]
        grid: usize,
    },
}

/// Parses `args` (program name first), runs the command and returns the
/// exit status. Artifacts without `--out` go to `stdout`; diagnostics go to
/// `stderr`.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                stdout.write_all(text.as_bytes())
            } else {
                stderr.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(&cli, stdout) {
        Ok(Outcome::Done) => EXIT_OK,
        Ok(Outcome::VerificationFailed(n)) => {
            let _ = writeln!(stderr, "verification failed: {n} failing cases");
            EXIT_VERIFICATION
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            exit_code(&e)
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) => EXIT_USAGE,
        Error::Domain(_) | Error::Construction { .. } => EXIT_DOMAIN,
        Error::Capability(_) => EXIT_CAPABILITY,
        Error::Io(_) | Error::Json(_) => EXIT_IO,
    }
}

enum Outcome {
    Done,
    VerificationFailed(usize),
}

fn usage(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn format_or(common: &Common, default: Format, allowed: &[Format]) -> Result<Format> {
    let f = common.format.unwrap_or(default);
    if allowed.contains(&f) {
        Ok(f)
    } else {
        Err(usage(format!("format {f:?} is not available for this command")))
    }
}

/// Where an artifact goes, checked before any computation starts.
enum Sink<'a> {
    Stdout(&'a mut dyn Write),
    File(PathBuf),
}

impl<'a> Sink<'a> {
    fn new(out: Option<&Path>, stdout: &'a mut dyn Write) -> Result<Self> {
        match out {
            None => Ok(Sink::Stdout(stdout)),
            Some(p) => {
                check_file_target(p)?;
                Ok(Sink::File(p.to_path_buf()))
            }
        }
    }

    fn emit(self, text: &str) -> Result<()> {
        match self {
            Sink::Stdout(w) => {
                w.write_all(text.as_bytes())?;
                Ok(w.flush()?)
            }
            Sink::File(p) => write_atomic(&p, text),
        }
    }
}

fn parent_dir(p: &Path) -> &Path {
    match p.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    }
}

fn check_file_target(p: &Path) -> Result<()> {
    if p.is_dir() {
        return Err(usage(format!("output {} is a directory", p.display())));
    }
    let dir = parent_dir(p);
    if !dir.is_dir() {
        return Err(usage(format!("output directory {} does not exist", dir.display())));
    }
    Ok(())
}

/// Writes through a temporary file in the target directory and renames it
/// into place.
pub fn write_atomic(path: &Path, text: &str) -> Result<()> {
    let mut tmp = tempfile::NamedTempFile::new_in(parent_dir(path))?;
    tmp.write_all(text.as_bytes())?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|e| Error::Io(e.error))?;
    Ok(())
}

fn json(value: &impl serde::Serialize) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

fn execute(cli: &Cli, stdout: &mut dyn Write) -> Result<Outcome> {
    let common = &cli.common;
    match &cli.command {
        Command::Curve { name, grid } => {
            let fmt = format_or(common, Format::Csv, &[Format::Csv, Format::Json])?;
            let curve: NamedCurve = name.parse()?;
            let sink = Sink::new(common.out.as_deref(), stdout)?;
            let sampled = curve.sample(*grid)?;
            sink.emit(&match fmt {
                Format::Json => json(&sampled)?,
                _ => sampled.to_csv(),
            })?;
        }
        Command::Region { q, n, bins } => {
            let fmt = format_or(common, Format::Csv, &[Format::Csv, Format::Json])?;
            let q: QuantumGraph = q.parse()?;
            let sink = Sink::new(common.out.as_deref(), stdout)?;
            let cloud = lab::region_cloud(&q, *n)?;
            let text = match (bins, fmt) {
                (None, Format::Json) => json(&cloud)?,
                (None, _) => cloud.to_csv(),
                (Some(b), Format::Json) => json(&lab::empirical_boundary(&cloud, *b)?)?,
                (Some(b), _) => boundary_csv(&lab::empirical_boundary(&cloud, *b)?),
            };
            sink.emit(&text)?;
        }
        Command::Construct { kind, n, x, r } => {
            let fmt = format_or(common, Format::Graph6, &[Format::Graph6, Format::Json])?;
            let kind: ConstructionKind = kind.parse()?;
            let sink = Sink::new(common.out.as_deref(), stdout)?;
            let g = ConstructionSpec {
                kind,
                n: *n,
                x: *x,
                r: *r,
            }
            .build()?;
            sink.emit(&match fmt {
                Format::Json => json(&GraphJson::from_graph(&g))?,
                _ => format!("{}\n", g.to_graph6()),
            })?;
        }
        Command::Verify {
            suite,
            n,
            samples,
            sample_n,
        } => {
            format_or(common, Format::Json, &[Format::Json])?;
            let cfg = SuiteConfig {
                max_n: *n,
                samples: *samples,
                sample_n: *sample_n,
                seed: common.seed,
                checks: lab::suite_checks(suite)?,
                ..SuiteConfig::default()
            };
            let sink = Sink::new(common.out.as_deref(), stdout)?;
            let report = lab::verify_suite(&cfg)?;
            sink.emit(&json(&report)?)?;
            if report.total_failures > 0 {
                return Ok(Outcome::VerificationFailed(report.total_failures));
            }
        }
        Command::ProfileOpt { q, x, r, sense, starts } => {
            format_or(common, Format::Json, &[Format::Json])?;
            let q: QuantumGraph = q.parse()?;
            let sense: Sense = sense.parse()?;
            let sink = Sink::new(common.out.as_deref(), stdout)?;
            let opts = OptimizerOptions {
                starts: *starts,
                seed: common.seed,
                ..OptimizerOptions::default()
            };
            let best = optimize_profile_with(&q, *r, *x, sense, &opts)?;
            sink.emit(&json(&best)?)?;
        }
        Command::Figures { grid } => {
            format_or(common, Format::Csv, &[Format::Csv])?;
            let dir = common
                .out
                .as_deref()
                .ok_or_else(|| usage("figures needs --out <directory>"))?;
            if dir.exists() && !dir.is_dir() {
                return Err(usage(format!("{} is not a directory", dir.display())));
            }
            std::fs::create_dir_all(dir)?;
            for fig in figures(*grid)? {
                write_atomic(&dir.join(fig.file), &fig.to_csv())?;
            }
        }
    }
    Ok(Outcome::Done)
}

fn boundary_csv(b: &lab::EmpiricalBoundary) -> String {
    let mut out = String::from("x,lower,upper,bin_lo,bin_hi,lower_witness,upper_witness\n");
    for (lo, hi) in b.lower.iter().zip(&b.upper) {
        out.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            lo.x, lo.y, hi.y, lo.bin_lo, lo.bin_hi, lo.witness, hi.witness
        ));
    }
    out
}

/// Lower and upper boundary of one feasible-region figure.
#[derive(Debug, Clone, PartialEq)]
pub struct FigureData {
    pub file: &'static str,
    /// `(x, lower, upper)`.
    pub rows: Vec<(f64, f64, f64)>,
}

impl FigureData {
    /// `x,lower,upper,source` rows with a header line.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("x,lower,upper,source\n");
        for (x, lo, hi) in &self.rows {
            out.push_str(&format!("{x},{lo},{hi},closed_form\n"));
        }
        out
    }
}

/// `grid` equally spaced points of `[0, 1]` together with `1 - 1/k` for
/// `2 <= k <= FIGURE_MAX_KNOT`; a grid point within `1e-12` of a knot is
/// replaced by the knot.
pub fn figure_grid(grid: usize) -> Result<Vec<f64>> {
    if grid < 2 {
        return Err(Error::domain("grid needs at least 2 points"));
    }
    let knots: Vec<f64> = (2..=FIGURE_MAX_KNOT).map(|k| 1.0 - 1.0 / k as f64).collect();
    let mut xs: Vec<f64> = (0..grid)
        .map(|i| {
            if i + 1 == grid {
                1.0
            } else {
                i as f64 / (grid - 1) as f64
            }
        })
        .filter(|x| knots.iter().all(|k| (k - x).abs() > 1e-12))
        .chain(knots.iter().copied())
        .collect();
    xs.sort_by(f64::total_cmp);
    Ok(xs)
}

/// The four figure datasets: `K_3 + E_3` (Goodman lower and upper curves),
/// `K_3^-`, `K_4^-` and `C_4` (lower boundary 0, closed-form upper bounds).
pub fn figures(grid: usize) -> Result<Vec<FigureData>> {
    let xs = figure_grid(grid)?;
    let build = |file: &'static str, f: &dyn Fn(f64) -> Result<(f64, f64)>| -> Result<FigureData> {
        let rows = xs
            .iter()
            .map(|&x| f(x).map(|(lo, hi)| (x, lo, hi)))
            .collect::<Result<_>>()?;
        Ok(FigureData { file, rows })
    };
    Ok(vec![
        build("figure1_k3_plus_e3.csv", &boundary::goodman_olpp)?,
        build("figure2_k3minus.csv", &|x| Ok((0.0, boundary::k3minus_upper(x)?)))?,
        build("figure3_k4minus.csv", &|x| {
            let hi = if x <= 0.5 {
                boundary::k4minus_small_upper(x)?
            } else {
                boundary::h_t_curve(4, x)?
            };
            Ok((0.0, hi))
        })?,
        build("figure4_c4.csv", &|x| {
            let hi = if x <= 0.5 {
                boundary::kst_upper(2, 2, x)?.value
            } else {
                boundary::c4_upper_large(x)?
            };
            Ok((0.0, hi))
        })?,
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("feasreg").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn curve_contains_figure_point() {
        let (code, out, _) = call(&["curve", "k3minus", "--grid", "5"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("x,y,source\n"));
        assert!(out.lines().any(|l| l == "0.5,0.75,closed_form"), "{out}");
    }

    #[test]
    fn construct_complete() {
        let (code, out, _) = call(&["construct", "h-star", "--n", "10", "--x", "1"]);
        assert_eq!(code, 0);
        assert_eq!(out.trim(), crate::graph::Graph::complete(10).to_graph6());
    }

    #[test]
    fn exit_codes() {
        assert_eq!(call(&["frobnicate"]).0, EXIT_USAGE);
        assert_eq!(call(&["curve", "nonsense"]).0, EXIT_USAGE);
        assert_eq!(call(&["curve", "k3minus", "--format", "graph6"]).0, EXIT_USAGE);
        assert_eq!(call(&["construct", "turan", "--n", "3", "--r", "5"]).0, EXIT_DOMAIN);
        assert_eq!(call(&["region", "--q", "K3", "--n", "10"]).0, EXIT_CAPABILITY);
        assert_eq!(call(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn small_verify_is_clean() {
        let (code, out, _) = call(&["verify", "all", "--n", "5", "--samples", "3", "--sample-n", "10"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["total_failures"], 0);
    }

    #[test]
    fn profile_opt_json() {
        let (code, out, _) = call(&["profile-opt", "--q", "K3", "--x", "0.5", "--r", "2"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert!(v["value"].as_f64().unwrap().abs() < 1e-12);
        assert_eq!(v["profile"].as_array().unwrap().len(), 2);
    }

    #[test]
    fn figure_grid_has_knots() {
        let xs = figure_grid(200).unwrap();
        assert!(xs.contains(&(1.0 - 1.0 / 3.0)) && xs.contains(&0.75) && xs.contains(&0.5));
        assert!(xs.windows(2).all(|w| w[0] < w[1]));
        let figs = figures(200).unwrap();
        assert_eq!(figs.len(), 4);
        let c4 = &figs[3];
        let at = |x: f64| c4.rows.iter().find(|r| r.0 == x).unwrap().2;
        assert!((at(1.0 - 1.0 / 3.0) - 2.0 / 9.0).abs() < 1e-15);
        assert!((at(0.75) - 9.0 / 64.0).abs() < 1e-15);
    }
}
