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

//! Harmonic measure carried by one side of a slit.
//!
//! The flux of `grad u` is integrated over half of the image of the circle
//! `|w| = 1 + rho` under the slit's Joukowski map. In the angle variable the
//! Gauss-Legendre nodes already bunch up at the two slit endpoints.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::gauss_legendre;
use crate::basis::eval_gradient;
use crate::error::{argument, Result};
use crate::geometry::{joukowski_forward, ComponentKind};
use crate::solver::{DomainKind, Solution};

/// Relative offset `rho` of the integration contour; the contour stays within
/// `rho * |r|` of the slit.
pub const DEFAULT_SIDE_OFFSET: f64 = 1e-4;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// The side the source sees.
    Facing,
    Away,
}

/// Harmonic measure of one side of slit `slit_index`, using `nquad`
/// Gauss-Legendre nodes. The two sides add up to the slit's total measure.
pub fn slit_side_measure(solution: &Solution, slit_index: usize, side: Side, nquad: usize) -> Result<f64> {
    let problem = &solution.problem;
    let comp = problem
        .components()
        .get(slit_index)
        .ok_or_else(|| argument(format!("no component {slit_index}")))?;
    let ComponentKind::Slit { halfspan: r } = comp.kind else {
        return Err(argument(format!("component {slit_index} is not a slit")));
    };
    if problem.domain() != DomainKind::ExteriorUnbounded || !problem.is_green() {
        return Err(argument("side measures need an exterior Green problem"));
    }
    if nquad == 0 {
        return Err(argument("nquad must be positive"));
    }
    let zs = problem.source().expect("Green problem has a source");
    let upper = ((zs - comp.center) / r).im >= 0.0;
    let upper = match side {
        Side::Facing => upper,
        Side::Away => !upper,
    };
    let (t0, t1) = if upper { (0.0, PI) } else { (PI, 2.0 * PI) };

    let rho = 1.0 + DEFAULT_SIDE_OFFSET;
    let (nodes, weights) = gauss_legendre(nquad);
    let half = 0.5 * (t1 - t0);
    let mut flux = 0.0;
    for (x, wt) in nodes.iter().zip(&weights) {
        let theta = t0 + half * (x + 1.0);
        let w = Complex64::from_polar(rho, theta);
        let z = joukowski_forward(comp.center, r, w)?;
        let dz = 0.5 * r * (1.0 - 1.0 / (w * w)) * Complex64::i() * w;
        let grad = eval_gradient(&solution.expansion, z)?;
        // Outward normal times arclength is -i dz for a counterclockwise path.
        flux += wt * half * (grad.conj() * (-Complex64::i() * dz)).re;
    }
    Ok(-flux / (2.0 * PI))
}
