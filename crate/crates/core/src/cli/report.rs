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

//! Reports, CSV tables and atomic file output.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{Polyline, PolylineKind};
use crate::solver::{harmonic_measures, Solution};

/// Rounds to 13 significant digits.
pub fn round13(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{x:.12e}").parse().unwrap_or(x)
}

/// Text form with at most 13 significant digits.
pub fn fmt13(x: f64) -> String {
    let r = round13(x);
    let a = r.abs();
    if r == 0.0 || (1e-4..1e13).contains(&a) {
        format!("{r}")
    } else {
        let s = format!("{r:.12e}");
        let (mant, exp) = s.split_once('e').expect("exponent");
        let mant = if mant.contains('.') { mant.trim_end_matches('0').trim_end_matches('.') } else { mant };
        format!("{mant}e{exp}")
    }
}

fn round_all(v: &[f64]) -> Vec<f64> {
    v.iter().copied().map(round13).collect()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EvalEntry {
    pub z: [f64; 2],
    pub u: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MeasureEntry {
    pub component: usize,
    pub measure: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Measures {
    pub values: Vec<MeasureEntry>,
    pub total: f64,
    pub probabilistic: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CoefficientBlock {
    pub component: usize,
    /// `[a_k, b_k]` for `k = 1..N`.
    pub terms: Vec<[f64; 2]>,
}

/// Report of a solve, with every number rounded to 13 significant digits.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SolveReport {
    pub constant: f64,
    pub log_coefficients: Vec<f64>,
    pub series: Vec<CoefficientBlock>,
    pub residual: f64,
    pub rows: usize,
    pub cols: usize,
    pub rank: usize,
    pub npts: Vec<usize>,
    pub degrees: Vec<usize>,
    pub measures: Option<Measures>,
    pub eval: Vec<EvalEntry>,
}

impl SolveReport {
    pub fn new(solution: &Solution, eval: &[Complex64]) -> Result<Self> {
        let exp = &solution.expansion;
        let inner = exp.inner_components();
        let report = harmonic_measures(solution);
        let measures = solution.problem.source().map(|_| Measures {
            values: inner
                .iter()
                .zip(&report.measures)
                .map(|(&component, &m)| MeasureEntry {
                    component,
                    measure: round13(m),
                })
                .collect(),
            total: round13(report.total),
            probabilistic: report.probabilistic,
        });
        let series = (0..solution.problem.components().len())
            .map(|j| CoefficientBlock {
                component: j,
                terms: exp.power_coeffs(j).into_iter().map(|(a, b)| [round13(a), round13(b)]).collect(),
            })
            .collect();
        let eval = eval
            .iter()
            .map(|&z| {
                Ok(EvalEntry {
                    z: [z.re, z.im],
                    u: round13(solution.eval(z)?),
                })
            })
            .collect::<Result<_>>()?;
        let fit = &solution.fit_report;
        Ok(Self {
            constant: round13(exp.constant()),
            log_coefficients: round_all(exp.log_coeffs()),
            series,
            residual: round13(solution.residual),
            rows: fit.rows,
            cols: fit.cols,
            rank: fit.rank,
            npts: fit.npts.clone(),
            degrees: fit.degrees.clone(),
            measures,
            eval,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CantorReport {
    pub m: u32,
    pub degree: usize,
    pub symmetry: bool,
    /// Right-half slits, inside out.
    pub measures: Vec<f64>,
    pub inner_half_sum: Option<f64>,
    pub residual: f64,
}

impl CantorReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }
}

/// CSV with header `kind,level_or_seed,x,y` and one blank-line-separated
/// block per polyline.
pub fn polylines_csv(lines: &[Polyline]) -> String {
    let mut out = String::from("kind,level_or_seed,x,y\n");
    for (i, line) in lines.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        let (kind, tag) = match line.kind {
            PolylineKind::Equipotential { level } => ("equipotential", level),
            PolylineKind::Streamline { seed_angle } => ("streamline", seed_angle),
        };
        let tag = fmt13(tag);
        for p in &line.points {
            let _ = writeln!(out, "{kind},{tag},{},{}", fmt13(p.re), fmt13(p.im));
        }
    }
    out
}

/// Path of the streamline table that accompanies an equipotential CSV.
pub fn streamline_csv_path(csv: &Path) -> PathBuf {
    let stem = csv.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    csv.with_file_name(format!("{stem}.streamlines.csv"))
}

fn io_err(path: &Path, source: std::io::Error) -> Error {
    Error::Io {
        path: path.to_path_buf(),
        source,
    }
}

fn temp_name(path: &Path) -> PathBuf {
    let name = path.file_name().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    path.with_file_name(format!(".{name}.{}.tmp", std::process::id()))
}

/// Writes all files or none: everything goes to temporary siblings first and
/// is renamed into place only when every write succeeded.
pub fn write_all_atomic(files: &[(PathBuf, String)]) -> Result<()> {
    let mut temps: Vec<PathBuf> = Vec::with_capacity(files.len());
    let cleanup = |temps: &[PathBuf]| {
        for t in temps {
            let _ = std::fs::remove_file(t);
        }
    };
    for (path, text) in files {
        let tmp = temp_name(path);
        if let Err(e) = std::fs::write(&tmp, text) {
            cleanup(&temps);
            let _ = std::fs::remove_file(&tmp);
            return Err(io_err(path, e));
        }
        temps.push(tmp);
    }
    for (i, (path, _)) in files.iter().enumerate() {
        if let Err(e) = std::fs::rename(&temps[i], path) {
            cleanup(&temps[i..]);
            return Err(io_err(path, e));
        }
    }
    Ok(())
}
