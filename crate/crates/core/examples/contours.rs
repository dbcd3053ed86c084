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


//! Equipotentials around two slits and a disk. Writes an SVG when given a path.
//!
//!     cargo run --release --example contours [out.svg]

use laplace_series::cli::emit_svg;
use laplace_series::prelude::*;
use num_complex::Complex64;

fn main() -> Result<()> {
    let comps = vec![
        BoundaryComponent::slit(Complex64::new(3.0, 0.0), Complex64::new(1.0, -0.5))?,
        BoundaryComponent::slit(Complex64::new(-2.0, 1.5), Complex64::new(0.3, 0.8))?,
        BoundaryComponent::disk(Complex64::new(-1.0, -2.5), 0.7)?,
    ];
    let problem = Problem::green(comps)?;
    let solution = solve_problem(&problem, &ExpansionSpec::uniform(&problem, 14), None)?;
    let window = Window::new(-5.0, 5.0, -4.5, 4.5)?;
    let levels: Vec<f64> = (1..=12).map(|k| -0.15 * k as f64).collect();
    let lines = extract_contours(&solution, &levels, window, 240)?;
    let closed = lines.iter().filter(|l| l.is_closed()).count();
    println!("{} polylines, {closed} closed", lines.len());
    let fan = streamline_fan_with(&solution, 32, 1e-3, &TraceOptions { window: Some(window), ..TraceOptions::default() })?;
    if let Some(path) = std::env::args().nth(1) {
        let all: Vec<Polyline> = lines.into_iter().chain(fan).collect();
        let svg = emit_svg(&all, solution.problem.components(), window);
        std::fs::write(&path, svg).map_err(|source| Error::Io { path: path.into(), source })?;
    }
    Ok(())
}
