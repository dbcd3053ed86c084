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


//! Non-constant boundary data: the exterior of the unit disk with
//! u = Re(z^2) on the circle, whose bounded harmonic extension is Re(z^-2).
//!
//!     cargo run --example variable_data

use laplace_series::prelude::*;
use num_complex::Complex64;

fn main() -> Result<()> {
    let disk = BoundaryComponent::disk(Complex64::new(0.0, 0.0), 1.0)?;
    let data = BoundaryData::function(|z: Complex64| (z * z).re);
    let problem = Problem::new(DomainKind::ExteriorUnbounded, vec![disk], vec![data], None)?;
    let solution = solve_problem(&problem, &ExpansionSpec::uniform(&problem, 4), None)?;
    for z in [Complex64::new(1.5, 0.0), Complex64::new(0.3, 2.0), Complex64::new(-4.0, 1.0)] {
        let exact = z.powi(-2).re;
        println!("u({z}) = {:+.15}  exact {exact:+.15}", solution.eval(z)?);
    }
    println!("residual {:.1e}", solution.residual);
    Ok(())
}
