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

//! Streamlines by gradient ascent, `dz/dt = grad u / |grad u|`, integrated
//! with the Bogacki-Shampine 3(2) pair.
//!
//! Steps are capped at `h_max` and at half the distance to the nearest
//! component. The field has unit speed, so an accepted step moves at most `h`
//! and can never reach (or hop over) a slit.

use num_complex::Complex64;
use rayon::prelude::*;

use super::{Polyline, PolylineKind, Termination, Window};
use crate::basis::eval_gradient;
use crate::error::{argument, Result};
use crate::solver::Solution;

const STAGNATION: f64 = 1e-12;
const MIN_STEP: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq)]
pub struct TraceOptions {
    /// Absolute step cap.
    pub h_max: f64,
    /// Stop when this close to a component.
    pub stop_distance: f64,
    pub max_steps: usize,
    /// Local error tolerance per step (absolute, in plane units).
    pub tol: f64,
    /// Leaving this rectangle ends the path; `None` traces without one.
    pub window: Option<Window>,
}

impl Default for TraceOptions {
    fn default() -> Self {
        Self {
            h_max: 0.05,
            stop_distance: 1e-3,
            max_steps: 20_000,
            tol: 1e-7,
            window: None,
        }
    }
}

enum Direction {
    Unit(Complex64),
    Stagnant,
}

fn direction(solution: &Solution, z: Complex64) -> Result<Direction> {
    let g = eval_gradient(&solution.expansion, z)?;
    let n = g.norm();
    if !(n >= STAGNATION) {
        return Ok(Direction::Stagnant);
    }
    Ok(Direction::Unit(g / n))
}

fn build(points: Vec<Complex64>, seed_angle: f64, termination: Termination, stagnated: bool) -> Polyline {
    Polyline {
        points,
        kind: PolylineKind::Streamline { seed_angle },
        termination: Some(termination),
        stagnated,
    }
}

fn trace(solution: &Solution, z0: Complex64, seed_angle: f64, opts: &TraceOptions) -> Result<Polyline> {
    let problem = &solution.problem;
    if !problem.contains(z0) {
        return Err(argument(format!("streamline seed {z0} is not in the domain")));
    }
    if !(opts.h_max > 0.0 && opts.stop_distance > 0.0 && opts.tol > 0.0) {
        return Err(argument("h_max, stop_distance and tol must be positive"));
    }
    let nearest = |z: Complex64| problem.nearest_component(z).unwrap_or((usize::MAX, f64::INFINITY));

    let mut points = vec![z0];
    let mut z = z0;
    let (j, d) = nearest(z);
    if d < opts.stop_distance {
        return Ok(build(points, seed_angle, Termination::HitBoundary(j), false));
    }
    let mut k1 = match direction(solution, z)? {
        Direction::Unit(v) => v,
        Direction::Stagnant => return Ok(build(points, seed_angle, Termination::StepLimit, true)),
    };
    let mut h = opts.h_max.min(0.5 * d);
    let mut steps = 0;

    // Evaluates the field at a stage point, or reports that it left the domain.
    let stage = |p: Complex64| -> Result<Option<Direction>> {
        if !problem.contains(p) {
            return Ok(None);
        }
        direction(solution, p).map(Some)
    };

    loop {
        if steps >= opts.max_steps {
            return Ok(build(points, seed_angle, Termination::StepLimit, false));
        }
        let (_, dist) = nearest(z);
        h = h.min(opts.h_max).min(0.5 * dist);
        if h < MIN_STEP {
            return Ok(build(points, seed_angle, Termination::StepLimit, false));
        }

        let Some(s2) = stage(z + 0.5 * h * k1)? else {
            h *= 0.5;
            continue;
        };
        let Direction::Unit(k2) = s2 else {
            return Ok(build(points, seed_angle, Termination::StepLimit, true));
        };
        let Some(s3) = stage(z + 0.75 * h * k2)? else {
            h *= 0.5;
            continue;
        };
        let Direction::Unit(k3) = s3 else {
            return Ok(build(points, seed_angle, Termination::StepLimit, true));
        };
        let next = z + h * (2.0 / 9.0 * k1 + 1.0 / 3.0 * k2 + 4.0 / 9.0 * k3);
        let Some(s4) = stage(next)? else {
            h *= 0.5;
            continue;
        };
        let Direction::Unit(k4) = s4 else {
            return Ok(build(points, seed_angle, Termination::StepLimit, true));
        };
        let err = (h * (-5.0 / 72.0 * k1 + 1.0 / 12.0 * k2 + 1.0 / 9.0 * k3 - 1.0 / 8.0 * k4)).norm();
        let factor = if err == 0.0 {
            5.0
        } else {
            (0.9 * (opts.tol / err).cbrt()).clamp(0.2, 5.0)
        };
        if err > opts.tol {
            h *= factor;
            continue;
        }

        steps += 1;
        z = next;
        k1 = k4;
        points.push(z);
        if opts.window.is_some_and(|w| !w.contains(z)) {
            return Ok(build(points, seed_angle, Termination::LeftWindow, false));
        }
        let (j, d) = nearest(z);
        if d < opts.stop_distance {
            return Ok(build(points, seed_angle, Termination::HitBoundary(j), false));
        }
        h *= factor;
    }
}

/// Climbs the gradient from `z0` until the path nears a component, leaves the
/// window, or runs out of steps.
pub fn trace_streamline(solution: &Solution, z0: Complex64, opts: &TraceOptions) -> Result<Polyline> {
    trace(solution, z0, f64::NAN, opts)
}

/// `nseeds` streamlines from `z_s + eps e^{2 pi i k / nseeds}` with default options.
pub fn streamline_fan(solution: &Solution, nseeds: usize, eps: f64) -> Result<Vec<Polyline>> {
    streamline_fan_with(solution, nseeds, eps, &TraceOptions::default())
}

pub fn streamline_fan_with(
    solution: &Solution,
    nseeds: usize,
    eps: f64,
    opts: &TraceOptions,
) -> Result<Vec<Polyline>> {
    let Some(zs) = solution.problem.source() else {
        return Err(argument("a streamline fan needs a source point"));
    };
    if nseeds == 0 {
        return Err(argument("nseeds must be at least 1"));
    }
    if !(eps > 0.0) {
        return Err(argument("eps must be positive"));
    }
    if let Some((j, d)) = solution.problem.nearest_component(zs) {
        if d <= eps {
            return Err(argument(format!("the eps-circle around the source reaches component {j}")));
        }
    }
    (0..nseeds)
        .into_par_iter()
        .map(|k| {
            let angle = 2.0 * std::f64::consts::PI * k as f64 / nseeds as f64;
            trace(solution, zs + Complex64::from_polar(eps, angle), angle, opts)
        })
        .collect()
}
