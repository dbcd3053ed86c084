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


//! Test problems shared by the integration tests.

#![allow(dead_code)]

use laplace_series::prelude::*;
use num_complex::Complex64;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn c(x: f64, y: f64) -> Complex64 {
    Complex64::new(x, y)
}

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn disk1_problem() -> Problem {
    Problem::green(vec![BoundaryComponent::disk(c(3.0, 1.0), 1.0).unwrap()]).unwrap()
}

pub fn solve_n(problem: &Problem, n: usize) -> Solution {
    solve_problem(problem, &ExpansionSpec::uniform(problem, n), None).unwrap()
}

pub fn disk1(n: usize) -> Solution {
    solve_n(&disk1_problem(), n)
}

pub fn four_disks() -> Problem {
    let comps = [(2.0, 2.0, 1.0), (-2.5, 1.0, 1.2), (0.5, -2.5, 0.4), (-1.0, -2.0, 0.3)]
        .iter()
        .map(|&(x, y, r)| BoundaryComponent::disk(c(x, y), r).unwrap())
        .collect();
    Problem::green(comps).unwrap()
}

pub fn slit1_problem() -> Problem {
    Problem::green(vec![BoundaryComponent::slit(c(3.0, 0.0), c(1.0, -0.5)).unwrap()]).unwrap()
}

pub fn four_slits() -> Problem {
    let comps = [
        ((2.0, 1.0), (0.8, 0.3)),
        ((-1.5, 2.0), (0.5, -0.7)),
        ((-2.0, -1.5), (1.0, 0.0)),
        ((1.5, -2.0), (0.2, 0.9)),
    ]
    .iter()
    .map(|&((x, y), (a, b))| BoundaryComponent::slit(c(x, y), c(a, b)).unwrap())
    .collect();
    Problem::green(comps).unwrap()
}

pub fn mixed() -> Problem {
    let comps = vec![
        BoundaryComponent::slit(c(3.0, 0.0), c(1.0, -0.5)).unwrap(),
        BoundaryComponent::disk(c(-2.0, 1.5), 0.8).unwrap(),
        BoundaryComponent::slit(c(-1.0, -2.5), c(0.3, 0.6)).unwrap(),
    ];
    Problem::green_at(comps, c(0.2, -0.1)).unwrap()
}

/// The exterior Green test problems with their degrees.
pub fn green_suite() -> Vec<(&'static str, Solution)> {
    vec![
        ("disk1", disk1(12)),
        ("four disks", solve_n(&four_disks(), 14)),
        ("slit1", solve_n(&slit1_problem(), 14)),
        ("four slits", solve_n(&four_slits(), 14)),
        ("mixed", solve_n(&mixed(), 16)),
    ]
}

/// Radius of a circle around component `j` that encloses nothing else:
/// midway between the component's extent and the nearest other object.
pub fn enclosing_radius(problem: &Problem, j: usize) -> f64 {
    let comp = &problem.components()[j];
    let extent = match comp.kind {
        ComponentKind::Disk { radius } => radius,
        ComponentKind::Slit { halfspan } => halfspan.norm(),
    };
    let mut clear = f64::INFINITY;
    for (k, other) in problem.components().iter().enumerate() {
        if k != j {
            clear = clear.min(other.boundary_distance(comp.center).abs());
        }
    }
    if let Some(zs) = problem.source() {
        clear = clear.min((zs - comp.center).norm());
    }
    0.5 * (extent + clear)
}

/// Outward flux of grad u through the circle `|z - center| = radius`,
/// trapezoid rule with `n` nodes.
pub fn circle_flux(solution: &Solution, center: Complex64, radius: f64, n: usize) -> f64 {
    let mut sum = 0.0;
    for k in 0..n {
        let e = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * k as f64 / n as f64);
        let g = eval_gradient(&solution.expansion, center + radius * e).unwrap();
        sum += (g.conj() * e).re;
    }
    sum * radius * 2.0 * std::f64::consts::PI / n as f64
}

/// Random points in the domain at least `margin` from every component and
/// the source, inside `window`.
pub fn random_points(problem: &Problem, window: Window, margin: f64, n: usize, seed: u64) -> Vec<Complex64> {
    let mut r = rng(seed);
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let z = c(r.gen_range(window.x0..window.x1), r.gen_range(window.y0..window.y1));
        if !problem.contains(z) {
            continue;
        }
        if problem.nearest_component(z).is_some_and(|(_, d)| d < margin) {
            continue;
        }
        if problem.source().is_some_and(|s| (z - s).norm() < margin) {
            continue;
        }
        out.push(z);
    }
    out
}

/// Central difference gradient of u with step `h`.
pub fn fd_gradient(solution: &Solution, z: Complex64, h: f64) -> Complex64 {
    let u = |p: Complex64| eval_expansion(&solution.expansion, p).unwrap();
    c(
        (u(z + c(h, 0.0)) - u(z - c(h, 0.0))) / (2.0 * h),
        (u(z + c(0.0, h)) - u(z - c(0.0, h))) / (2.0 * h),
    )
}
