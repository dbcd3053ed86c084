// Copyright 2026 The laplace-series authors
//
// Licensed under the Apache license, version 2.0 (the "license");
// you may not use this file except in compliance with the license.
// You may obtain a copy of the license at
//
//     http://www.apache.org/licenses/license-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the license is distributed on an "as is" basis,
// without warranties or conditions of any kind, either express or implied.
// See the license for the specific language governing permissions and
// limitations under the license.

//! Command-line front end.
//!
//! Subcommands read a JSON problem file (see [`config`]) and write a JSON
//! report, CSV tables and an optional SVG figure.

pub mod config;
pub mod report;
pub mod svg;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;

use crate::basis::eval_expansion;
use crate::cantor::{cantor_degree, cantor_solve, right_half_measures};
use crate::error::{Error, Result};
use crate::field::{extract_contours, streamline_fan_with, Polyline, TraceOptions, Window};
use crate::solver::{harmonic_measures, solve_problem, Solution};

pub use config::{parse_problem_config, Parsed, PerComponent, ProblemConfig};
pub use report::{fmt13, polylines_csv, streamline_csv_path, write_all_atomic, CantorReport, SolveReport};
pub use svg::emit_svg;

/// Grid resolution for contour extraction.
pub const CONTOUR_GRID: usize = 200;
const DEFAULT_SEEDS: usize = 24;
const DEFAULT_LEVELS: usize = 10;

#[derive(Debug, Parser)]
#[command(name = "laplace-series", version, about = "Series solutions of planar Laplace problems")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct ProblemArgs {
    /// JSON problem file.
    #[arg(long)]
    pub config: PathBuf,
    /// Series degree for every component.
    #[arg(long)]
    pub degree: Option<usize>,
    /// Boundary samples per component.
    #[arg(long)]
    pub npts: Option<usize>,
    /// Unscaled disk powers `(z - c)^-k`.
    #[arg(long)]
    pub no_scale: bool,
    /// Directory for output files.
    #[arg(short = 'o', long = "out-dir")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Fit the expansion; write the report, equipotentials and streamlines.
    Solve(ProblemArgs),
    /// Write equipotential polylines.
    Contours(ProblemArgs),
    /// Write the streamline fan from the source.
    Streamlines(ProblemArgs),
    /// Print u at the config's `eval` points and any `--at` points.
    Eval {
        #[command(flatten)]
        problem: ProblemArgs,
        /// Extra point as `x,y`; repeatable.
        #[arg(long = "at", value_parser = parse_point, allow_hyphen_values = true)]
        at: Vec<Complex64>,
    },
    /// Harmonic measures of a middle-thirds Cantor approximation.
    Cantor {
        /// Level.
        #[arg(short = 'm')]
        m: u32,
        /// Use the mirror-symmetric solve.
        #[arg(long)]
        symmetry: bool,
        #[arg(short = 'o', long = "out-dir")]
        out: Option<PathBuf>,
    },
}

fn parse_point(s: &str) -> std::result::Result<Complex64, String> {
    let (x, y) = s.split_once(',').ok_or_else(|| format!("expected x,y, got `{s}`"))?;
    let parse = |t: &str| t.trim().parse::<f64>().map_err(|e| format!("`{t}`: {e}"));
    Ok(Complex64::new(parse(x)?, parse(y)?))
}

fn load(args: &ProblemArgs) -> Result<Parsed> {
    let mut cfg = ProblemConfig::load(&args.config)?;
    if let Some(n) = args.degree {
        cfg.degree = Some(PerComponent::All(n));
    }
    if let Some(k) = args.npts {
        cfg.npts = Some(PerComponent::All(k));
    }
    if args.no_scale {
        cfg.scaled = Some(false);
    }
    cfg.build()
}

fn solve(parsed: &Parsed) -> Result<Solution> {
    solve_problem(&parsed.problem, &parsed.spec, parsed.npts.as_deref())
}

fn out_dir(out: &Option<PathBuf>) -> Result<PathBuf> {
    match out {
        Some(dir) => {
            std::fs::create_dir_all(dir).map_err(|source| Error::Io {
                path: dir.clone(),
                source,
            })?;
            Ok(dir.clone())
        }
        None => Ok(PathBuf::from(".")),
    }
}

struct Targets {
    report: PathBuf,
    csv: PathBuf,
    svg: Option<PathBuf>,
}

fn targets(parsed: &Parsed, dir: &Path) -> Targets {
    let outputs = parsed.config.outputs.clone().unwrap_or_default();
    Targets {
        report: dir.join(outputs.report.as_deref().unwrap_or("report.json")),
        csv: dir.join(outputs.csv.as_deref().unwrap_or("field.csv")),
        svg: outputs.svg.map(|s| dir.join(s)),
    }
}

/// Evenly spaced levels strictly inside the range of `u` over the window,
/// ignoring the 2% tails on either side.
fn default_levels(solution: &Solution, window: Window) -> Vec<f64> {
    let n = 64;
    let mut values: Vec<f64> = (0..n * n)
        .filter_map(|k| {
            let z = Complex64::new(
                window.x0 + window.width() * (k % n) as f64 / (n - 1) as f64,
                window.y0 + window.height() * (k / n) as f64 / (n - 1) as f64,
            );
            solution
                .problem
                .contains(z)
                .then(|| eval_expansion(&solution.expansion, z).ok())
                .flatten()
                .filter(|v| v.is_finite())
        })
        .collect();
    if values.len() < 2 {
        return vec![];
    }
    values.sort_by(f64::total_cmp);
    let lo = values[values.len() / 50];
    let hi = values[values.len() - 1 - values.len() / 50];
    if !(hi > lo) {
        return vec![];
    }
    (1..=DEFAULT_LEVELS)
        .map(|k| lo + (hi - lo) * k as f64 / (DEFAULT_LEVELS + 1) as f64)
        .collect()
}

fn contours(parsed: &Parsed, solution: &Solution) -> Result<Vec<Polyline>> {
    let window = parsed.window()?;
    let levels = match &parsed.config.levels {
        Some(l) => l.clone(),
        None => default_levels(solution, window),
    };
    extract_contours(solution, &levels, window, CONTOUR_GRID)
}

fn streamlines(parsed: &Parsed, solution: &Solution) -> Result<Vec<Polyline>> {
    let Some(zs) = solution.problem.source() else {
        return Ok(vec![]);
    };
    let (count, eps) = match &parsed.config.streamlines {
        Some(s) => (s.count, s.eps),
        None => {
            let gap = solution.problem.nearest_component(zs).map_or(f64::INFINITY, |(_, d)| d);
            (DEFAULT_SEEDS, (0.5 * gap).min(1e-2))
        }
    };
    let window = match parsed.config.window {
        Some(_) => Some(parsed.window()?),
        None => None,
    };
    let opts = TraceOptions {
        window,
        ..TraceOptions::default()
    };
    streamline_fan_with(solution, count, eps, &opts)
}

fn print_solution(out: &mut dyn Write, solution: &Solution) -> std::io::Result<()> {
    let fit = &solution.fit_report;
    writeln!(out, "residual {}", fmt13(solution.residual))?;
    writeln!(out, "rank {} of {} columns, {} rows", fit.rank, fit.cols, fit.rows)?;
    if solution.problem.source().is_some() {
        let m = harmonic_measures(solution);
        for (j, v) in solution.expansion.inner_components().iter().zip(&m.measures) {
            writeln!(out, "measure[{j}] {}", fmt13(*v))?;
        }
        writeln!(out, "total {}", fmt13(m.total))?;
    }
    Ok(())
}

fn print_eval(out: &mut dyn Write, solution: &Solution, points: &[Complex64]) -> Result<()> {
    for &z in points {
        let u = solution.eval(z)?;
        writeln!(out, "u({}, {}) = {}", fmt13(z.re), fmt13(z.im), fmt13(u)).map_err(stdout_err)?;
    }
    Ok(())
}

fn stdout_err(source: std::io::Error) -> Error {
    Error::Io {
        path: PathBuf::from("<stdout>"),
        source,
    }
}

fn commit(out: &mut dyn Write, files: Vec<(PathBuf, String)>) -> Result<()> {
    write_all_atomic(&files)?;
    for (path, _) in &files {
        writeln!(out, "wrote {}", path.display()).map_err(stdout_err)?;
    }
    Ok(())
}

/// Runs one parsed command, printing a summary to `out`.
pub fn run(cli: Cli, out: &mut dyn Write) -> Result<()> {
    match cli.command {
        Command::Solve(args) => {
            let parsed = load(&args)?;
            let solution = solve(&parsed)?;
            print_solution(out, &solution).map_err(stdout_err)?;
            let points = parsed.eval_points();
            print_eval(out, &solution, &points)?;
            let levels = contours(&parsed, &solution)?;
            let fan = streamlines(&parsed, &solution)?;
            let dir = out_dir(&args.out)?;
            let t = targets(&parsed, &dir);
            let mut files = vec![
                (t.report, SolveReport::new(&solution, &points)?.to_json()),
                (t.csv.clone(), polylines_csv(&levels)),
                (streamline_csv_path(&t.csv), polylines_csv(&fan)),
            ];
            if let Some(svg) = t.svg {
                let all: Vec<Polyline> = levels.into_iter().chain(fan).collect();
                files.push((svg, emit_svg(&all, solution.problem.components(), parsed.window()?)));
            }
            commit(out, files)
        }
        Command::Contours(args) => {
            let parsed = load(&args)?;
            let solution = solve(&parsed)?;
            let levels = contours(&parsed, &solution)?;
            writeln!(out, "{} equipotential polylines", levels.len()).map_err(stdout_err)?;
            let dir = out_dir(&args.out)?;
            let t = targets(&parsed, &dir);
            let mut files = vec![(t.csv, polylines_csv(&levels))];
            if let Some(svg) = t.svg {
                files.push((svg, emit_svg(&levels, solution.problem.components(), parsed.window()?)));
            }
            commit(out, files)
        }
        Command::Streamlines(args) => {
            let parsed = load(&args)?;
            if parsed.problem.source().is_none() {
                return Err(Error::Argument("streamlines need a source point".into()));
            }
            let solution = solve(&parsed)?;
            let fan = streamlines(&parsed, &solution)?;
            writeln!(out, "{} streamlines", fan.len()).map_err(stdout_err)?;
            let dir = out_dir(&args.out)?;
            let t = targets(&parsed, &dir);
            let mut files = vec![(streamline_csv_path(&t.csv), polylines_csv(&fan))];
            if let Some(svg) = t.svg {
                files.push((svg, emit_svg(&fan, solution.problem.components(), parsed.window()?)));
            }
            commit(out, files)
        }
        Command::Eval { problem, at } => {
            let parsed = load(&problem)?;
            let solution = solve(&parsed)?;
            let mut points = parsed.eval_points();
            points.extend(at);
            if points.is_empty() {
                return Err(Error::Argument("no evaluation points: use `eval` in the config or --at x,y".into()));
            }
            print_eval(out, &solution, &points)
        }
        Command::Cantor { m, symmetry, out: dir } => {
            let solution = cantor_solve(m, symmetry)?;
            let measures = right_half_measures(&solution);
            let inner_half_sum = (m >= 2).then(|| measures[..1usize << (m - 2)].iter().sum::<f64>());
            let report = CantorReport {
                m,
                degree: cantor_degree(m),
                symmetry,
                measures: measures.iter().copied().map(report::round13).collect(),
                inner_half_sum: inner_half_sum.map(report::round13),
                residual: report::round13(solution.residual),
            };
            writeln!(out, "m = {m}, degree {}, residual {}", report.degree, fmt13(solution.residual))
                .map_err(stdout_err)?;
            for (k, v) in measures.iter().enumerate() {
                writeln!(out, "measure[{k}] {}", fmt13(*v)).map_err(stdout_err)?;
            }
            if let Some(s) = inner_half_sum {
                writeln!(out, "inner half {}", fmt13(s)).map_err(stdout_err)?;
            }
            let dir = out_dir(&dir)?;
            commit(out, vec![(dir.join(format!("cantor_m{m}.json")), report.to_json())])
        }
    }
}

/// Entry point for the binary: parses `std::env::args`, runs, and maps
/// failures to a nonzero exit status with the message on stderr.
pub fn main_entry() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    match run(cli, &mut lock) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
