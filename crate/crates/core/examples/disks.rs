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


//! Four disks: harmonic measures of the Green function, then the same
//! geometry with u = -1 on the two small disks.
//!
//!     cargo run --example disks

use laplace_series::prelude::*;
use num_complex::Complex64;

fn disks() -> Result<Vec<BoundaryComponent>> {
    [(2.0, 2.0, 1.0), (-2.5, 1.0, 1.2), (0.5, -2.5, 0.4), (-1.0, -2.0, 0.3)]
        .iter()
        .map(|&(x, y, r)| BoundaryComponent::disk(Complex64::new(x, y), r))
        .collect()
}

fn main() -> Result<()> {
    let problem = Problem::green(disks()?)?;
    let solution = solve_problem(&problem, &ExpansionSpec::uniform(&problem, 10), None)?;
    let m = harmonic_measures(&solution);
    println!("Green function, residual {:.2e}", solution.residual);
    for (j, v) in m.measures.iter().enumerate() {
        println!("  disk {j}: measure {v:.6}");
    }
    println!("  total {:.12}", m.total);

    let values = [0.0, 0.0, -1.0, -1.0];
    let data = values.iter().map(|&v| BoundaryData::Constant(v)).collect();
    let problem = Problem::new(DomainKind::ExteriorUnbounded, disks()?, data, Some(Complex64::new(0.0, 0.0)))?;
    let solution = solve_problem(&problem, &ExpansionSpec::uniform(&problem, 10), None)?;
    println!("u = -1 on the small disks, residual {:.2e}", solution.residual);
    for (j, d) in solution.expansion.log_coeffs().iter().enumerate() {
        println!("  d_{} = {d:.6}", j + 1);
    }
    Ok(())
}
