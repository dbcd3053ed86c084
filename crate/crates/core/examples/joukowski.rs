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


//! The Joukowski map pair for a tilted slit and the boundary samples it
//! produces.
//!
//!     cargo run --example joukowski

use laplace_series::prelude::*;
use num_complex::Complex64;

fn main() -> Result<()> {
    let (c, r) = (Complex64::new(1.0, 1.0), Complex64::new(0.5, 1.0));
    for z in [Complex64::new(3.0, 0.0), Complex64::new(1.0, 1.2), Complex64::new(-2.0, -1.0)] {
        let w = joukowski_inverse(c, r, z)?;
        let back = joukowski_forward(c, r, w)?;
        println!("z = {z:.3}  w = {w:.6}  |w| = {:.6}  round trip error {:.1e}", w.norm(), (back - z).norm());
    }
    let slit = BoundaryComponent::slit(c, r)?;
    for s in sample_boundary(&slit, 0, 8)? {
        println!("w = {:.4} -> z = {:.4}", s.preimage, s.point);
    }
    println!("on the slit: {:?}", joukowski_inverse(c, r, c + 0.3 * r).map(|_| ()));
    Ok(())
}
