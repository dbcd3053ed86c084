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


//! Solving from a JSON description, as the command-line tool does.
//!
//!     cargo run --example config

use laplace_series::cli::{parse_problem_config, SolveReport};
use laplace_series::prelude::*;

const CONFIG: &str = r#"{
    "components": [
        { "kind": "disk", "center": [3, 1], "radius": 1 },
        { "kind": "slit", "center": [-2, 0], "halfspan": [0.5, 1] }
    ],
    "degree": 12,
    "eval": [[2, 0], [0, 3]]
}"#;

fn main() -> Result<()> {
    let parsed = parse_problem_config(CONFIG)?;
    let solution = solve_problem(&parsed.problem, &parsed.spec, parsed.npts.as_deref())?;
    let report = SolveReport::new(&solution, &parsed.eval_points())?;
    println!("{}", report.to_json());
    Ok(())
}
