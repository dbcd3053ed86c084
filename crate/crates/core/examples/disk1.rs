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


//! Green function outside one disk, and how fast the series converges.
//!
//!     cargo run --example disk1

use laplace_series::prelude::*;
use num_complex::Complex64;

fn main() -> Result<()> {
    let disk = BoundaryComponent::disk(Complex64::new(3.0, 1.0), 1.0)?;
    let problem = Problem::green(vec![disk])?;
    let z = Complex64::new(2.0, 0.0);
    println!("{:>3}  {:>18}  {:>10}", "N", "u(2)", "residual");
    for n in (2..=16).step_by(2) {
        let solution = solve_problem(&problem, &ExpansionSpec::uniform(&problem, n), None)?;
        println!("{n:>3}  {:>18.13}  {:>10.2e}", solution.eval(z)?, solution.residual);
    }
    let solution = solve_problem(&problem, &ExpansionSpec::uniform(&problem, 12), None)?;
    println!("C = {:.13}, d = {:?}", solution.expansion.constant(), solution.expansion.log_coeffs());
    Ok(())
}
