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


//! A fan of streamlines from the source next to a disk, with the fraction
//! that reaches the disk. Writes an SVG when given a path.
//!
//!     cargo run --release --example streamlines [out.svg]

use laplace_series::cli::emit_svg;
use laplace_series::prelude::*;
use num_complex::Complex64;

fn main() -> Result<()> {
    let disk = BoundaryComponent::disk(Complex64::new(3.0, 1.0), 1.0)?;
    let problem = Problem::green(vec![disk])?;
    let solution = solve_problem(&problem, &ExpansionSpec::uniform(&problem, 12), None)?;
    let fan = streamline_fan(&solution, 64, 1e-3)?;
    let hits = fan
        .iter()
        .filter(|p| matches!(p.termination, Some(Termination::HitBoundary(_))))
        .count();
    let steps: usize = fan.iter().map(|p| p.points.len()).sum();
    println!("{hits} of {} streamlines reach the disk ({steps} vertices)", fan.len());
    if let Some(path) = std::env::args().nth(1) {
        let window = Window::new(-3.0, 6.0, -3.5, 4.0)?;
        let svg = emit_svg(&fan, solution.problem.components(), window);
        std::fs::write(&path, svg).map_err(|source| Error::Io { path: path.into(), source })?;
    }
    Ok(())
}
