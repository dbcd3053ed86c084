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


//! Green function outside several slits.
//!
//!     cargo run --example slits

use laplace_series::prelude::*;
use num_complex::Complex64;

fn main() -> Result<()> {
    let slits = [
        ((2.0, 1.0), (0.8, 0.3)),
        ((-1.5, 2.0), (0.5, -0.7)),
        ((-2.0, -1.5), (1.0, 0.0)),
        ((1.5, -2.0), (0.2, 0.9)),
    ]
    .iter()
    .map(|&((x, y), (a, b))| BoundaryComponent::slit(Complex64::new(x, y), Complex64::new(a, b)))
    .collect::<Result<Vec<_>>>()?;
    let problem = Problem::green(slits)?;
    for n in [4, 8, 12, 16] {
        let solution = solve_problem(&problem, &ExpansionSpec::uniform(&problem, n), None)?;
        let m = harmonic_measures(&solution);
        let list: Vec<String> = m.measures.iter().map(|v| format!("{v:.8}")).collect();
        println!("N = {n:>2}: residual {:.1e}  measures {}", solution.residual, list.join(" "));
    }
    Ok(())
}
