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


//! Bounded domain: the annulus 1 < |z| < 2 with u = 1 inside and u = 0
//! outside, against the exact log(|z|/2) / log(1/2).
//!
//!     cargo run --example bounded

use laplace_series::prelude::*;
use num_complex::Complex64;

fn main() -> Result<()> {
    let zero = Complex64::new(0.0, 0.0);
    let outer = BoundaryComponent::disk(zero, 2.0)?.into_outer()?;
    let inner = BoundaryComponent::disk(zero, 1.0)?;
    let data = vec![BoundaryData::Constant(0.0), BoundaryData::Constant(1.0)];
    let problem = Problem::new(DomainKind::Bounded, vec![outer, inner], data, None)?;
    let solution = solve_problem(&problem, &ExpansionSpec::uniform(&problem, 8), None)?;
    let z = Complex64::new(2f64.sqrt(), 0.0);
    println!("u(sqrt 2) = {:.13}  (exact 0.5)", solution.eval(z)?);
    println!("d         = {:.13}  (exact {:.13})", solution.expansion.log_coeffs()[0], -1.0 / 2f64.ln());
    println!("residual  = {:.2e}", solution.residual);

    // An off-center hole.
    let outer = BoundaryComponent::disk(zero, 2.0)?.into_outer()?;
    let hole = BoundaryComponent::disk(Complex64::new(0.6, 0.3), 0.5)?;
    let data = vec![BoundaryData::Constant(0.0), BoundaryData::Constant(1.0)];
    let problem = Problem::new(DomainKind::Bounded, vec![outer, hole], data, None)?;
    for n in [4, 8, 16, 24] {
        let solution = solve_problem(&problem, &ExpansionSpec::uniform(&problem, n), None)?;
        println!("off-center hole, N = {n:>2}: u(-1) = {:.12}, residual {:.1e}", solution.eval(Complex64::new(-1.0, 0.0))?, solution.residual);
    }
    Ok(())
}
