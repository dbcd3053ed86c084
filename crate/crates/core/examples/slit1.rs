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


//! Green function outside a slit and the split of its harmonic measure
//! between the two sides.
//!
//!     cargo run --example slit1

use laplace_series::prelude::*;
use num_complex::Complex64;

fn main() -> Result<()> {
    let slit = BoundaryComponent::slit(Complex64::new(3.0, 0.0), Complex64::new(1.0, -0.5))?;
    let problem = Problem::green(vec![slit])?;
    let solution = solve_problem(&problem, &ExpansionSpec::uniform(&problem, 16), None)?;
    println!("residual {:.2e}", solution.residual);
    let facing = slit_side_measure(&solution, 0, Side::Facing, 64)?;
    let away = slit_side_measure(&solution, 0, Side::Away, 64)?;
    println!("facing the source: {facing:.7}");
    println!("away from it:      {away:.7}");
    println!("sum:               {:.7}", facing + away);
    Ok(())
}
