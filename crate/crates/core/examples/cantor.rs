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


//! Harmonic measures of middle-thirds Cantor approximations seen from the
//! origin.
//!
//!     cargo run --release --example cantor [max_level]

use std::time::Instant;

use laplace_series::prelude::*;

fn main() -> Result<()> {
    let max: u32 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(6);
    for m in 1..=max.min(4) {
        let list: Vec<String> = cantor_measures(m, false)?.iter().map(|v| format!("{v:.6}")).collect();
        println!("m = {m}: {}", list.join(", "));
    }
    println!();
    println!("inner half of the right-half slits:");
    for m in 2..=max {
        let t = Instant::now();
        let general = cantor_inner_half_sum(m)?;
        let tg = t.elapsed();
        let t = Instant::now();
        let sym = cantor_inner_half_sum_with(m, true)?;
        let ts = t.elapsed();
        println!("m = {m:>2}: {general:.7} ({tg:.2?}), mirror-symmetric solve {sym:.7} ({ts:.2?})");
    }
    Ok(())
}
