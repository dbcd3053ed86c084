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

//! Level curves by marching squares on a uniform grid.
//!
//! Grid points outside the domain (inside disks, beyond the outer circle,
//! within 1e-6 of a slit, at the source) are masked, and so is every cell that
//! a component passes through. Crossing points are seeded by linear
//! interpolation along cell edges and then polished to the level by a
//! bracketed root search along the same edge. Saddle cells are split by
//! comparing the average of the four corners with the level.

use std::collections::HashMap;

use num_complex::Complex64;
use rayon::prelude::*;

use super::{Polyline, PolylineKind, Window};
use crate::basis::eval_expansion;
use crate::error::{argument, Result};
use crate::geometry::{point_segment_distance, segments_touch, ComponentKind, Role};
use crate::solver::Solution;

const SLIT_MASK: f64 = 1e-6;

struct Grid {
    n: usize,
    window: Window,
    values: Vec<f64>,
    cell_ok: Vec<bool>,
}

impl Grid {
    fn point(&self, i: usize, j: usize) -> Complex64 {
        let w = &self.window;
        let t = (self.n - 1) as f64;
        Complex64::new(
            w.x0 + w.width() * i as f64 / t,
            w.y0 + w.height() * j as f64 / t,
        )
    }

    fn value(&self, i: usize, j: usize) -> f64 {
        self.values[j * self.n + i]
    }
}

fn build_grid(solution: &Solution, window: Window, n: usize) -> Grid {
    let problem = &solution.problem;
    let mut grid = Grid {
        n,
        window,
        values: vec![f64::NAN; n * n],
        cell_ok: vec![true; (n - 1) * (n - 1)],
    };
    let values: Vec<f64> = (0..n * n)
        .into_par_iter()
        .map(|idx| {
            let z = grid.point(idx % n, idx / n);
            let masked = !problem.contains(z)
                || problem
                    .components()
                    .iter()
                    .any(|c| c.is_slit() && c.boundary_distance(z) < SLIT_MASK);
            if masked {
                f64::NAN
            } else {
                eval_expansion(&solution.expansion, z).unwrap_or(f64::NAN)
            }
        })
        .collect();
    grid.values = values;

    let (dx, dy) = (window.width() / (n - 1) as f64, window.height() / (n - 1) as f64);
    for comp in problem.components() {
        if comp.role == Role::Outer {
            continue;
        }
        let bb = comp.bounding_box();
        let lo_i = (((bb[0] - window.x0) / dx).floor().max(0.0) as usize).min(n - 2);
        let hi_i = (((bb[1] - window.x0) / dx).ceil().max(0.0) as usize).min(n - 2);
        let lo_j = (((bb[2] - window.y0) / dy).floor().max(0.0) as usize).min(n - 2);
        let hi_j = (((bb[3] - window.y0) / dy).ceil().max(0.0) as usize).min(n - 2);
        if bb[1] < window.x0 || bb[0] > window.x1 || bb[3] < window.y0 || bb[2] > window.y1 {
            continue;
        }
        for j in lo_j..=hi_j {
            for i in lo_i..=hi_i {
                let a = grid.point(i, j);
                let b = grid.point(i + 1, j + 1);
                let hit = match comp.kind {
                    ComponentKind::Disk { radius } => {
                        let cx = comp.center.re.clamp(a.re, b.re);
                        let cy = comp.center.im.clamp(a.im, b.im);
                        (Complex64::new(cx, cy) - comp.center).norm() <= radius
                    }
                    ComponentKind::Slit { .. } => {
                        let (p, q) = comp.endpoints().expect("slit");
                        let inside = |z: Complex64| z.re >= a.re && z.re <= b.re && z.im >= a.im && z.im <= b.im;
                        let corners = [a, Complex64::new(b.re, a.im), b, Complex64::new(a.re, b.im)];
                        inside(p)
                            || inside(q)
                            || (0..4).any(|e| segments_touch(p, q, corners[e], corners[(e + 1) % 4]))
                            || point_segment_distance(0.5 * (a + b), p, q) == 0.0
                    }
                };
                if hit {
                    grid.cell_ok[j * (n - 1) + i] = false;
                }
            }
        }
    }
    grid
}

/// Edge identifier: `(vertical, i, j)`; horizontal edges join `(i,j)-(i+1,j)`,
/// vertical ones `(i,j)-(i,j+1)`.
type EdgeKey = (bool, usize, usize);

fn cell_edges(i: usize, j: usize) -> [EdgeKey; 4] {
    // bottom, right, top, left
    [(false, i, j), (true, i + 1, j), (false, i, j + 1), (true, i, j)]
}

/// Segments for a cell as pairs of local edge indices.
fn cell_segments(case: u8, center_high: bool) -> &'static [(usize, usize)] {
    const B: usize = 0;
    const R: usize = 1;
    const T: usize = 2;
    const L: usize = 3;
    match case {
        1 => &[(L, B)],
        2 => &[(B, R)],
        3 => &[(L, R)],
        4 => &[(R, T)],
        5 if center_high => &[(B, R), (T, L)],
        5 => &[(L, B), (R, T)],
        6 => &[(B, T)],
        7 => &[(L, T)],
        8 => &[(T, L)],
        9 => &[(B, T)],
        10 if center_high => &[(L, B), (R, T)],
        10 => &[(B, R), (T, L)],
        11 => &[(R, T)],
        12 => &[(R, L)],
        13 => &[(B, R)],
        14 => &[(L, B)],
        _ => &[],
    }
}

fn edge_point(solution: &Solution, grid: &Grid, key: EdgeKey, level: f64) -> Complex64 {
    let (vertical, i, j) = key;
    let (i2, j2) = if vertical { (i, j + 1) } else { (i + 1, j) };
    let (a, b) = (grid.point(i, j), grid.point(i2, j2));
    let (fa, fb) = (grid.value(i, j) - level, grid.value(i2, j2) - level);
    let linear = if fa == fb { 0.5 } else { (fa / (fa - fb)).clamp(0.0, 1.0) };
    polish(solution, a, b, fa, fb, level).unwrap_or(a + (b - a) * linear)
}

/// Illinois false position for `u(a + t (b - a)) = level` on `t in [0, 1]`.
fn polish(solution: &Solution, a: Complex64, b: Complex64, fa: f64, fb: f64, level: f64) -> Option<Complex64> {
    if fa == 0.0 {
        return Some(a);
    }
    if fb == 0.0 {
        return Some(b);
    }
    if fa.signum() == fb.signum() {
        return None;
    }
    let (mut t0, mut t1, mut f0, mut f1) = (0.0, 1.0, fa, fb);
    let mut side = 0;
    let mut t = 0.5;
    for _ in 0..60 {
        t = (t0 * f1 - t1 * f0) / (f1 - f0);
        let f = eval_expansion(&solution.expansion, a + (b - a) * t).ok()? - level;
        if f == 0.0 || (t1 - t0).abs() < 1e-15 {
            break;
        }
        if f.signum() == f1.signum() {
            t1 = t;
            f1 = f;
            if side == -1 {
                f0 *= 0.5;
            }
            side = -1;
        } else {
            t0 = t;
            f0 = f;
            if side == 1 {
                f1 *= 0.5;
            }
            side = 1;
        }
        if f.abs() < 1e-14 * level.abs().max(1.0) {
            break;
        }
    }
    Some(a + (b - a) * t)
}

fn contour_level(solution: &Solution, grid: &Grid, level: f64) -> Vec<Polyline> {
    let n = grid.n;
    let mut segments: Vec<(EdgeKey, EdgeKey)> = Vec::new();
    for j in 0..n - 1 {
        for i in 0..n - 1 {
            if !grid.cell_ok[j * (n - 1) + i] {
                continue;
            }
            let v = [grid.value(i, j), grid.value(i + 1, j), grid.value(i + 1, j + 1), grid.value(i, j + 1)];
            if v.iter().any(|x| x.is_nan()) {
                continue;
            }
            let case = v
                .iter()
                .enumerate()
                .fold(0u8, |acc, (b, x)| acc | (u8::from(*x >= level) << b));
            let center_high = v.iter().sum::<f64>() / 4.0 >= level;
            let edges = cell_edges(i, j);
            for &(e0, e1) in cell_segments(case, center_high) {
                segments.push((edges[e0], edges[e1]));
            }
        }
    }
    if segments.is_empty() {
        return vec![];
    }

    let mut points: HashMap<EdgeKey, Complex64> = HashMap::new();
    let mut incident: HashMap<EdgeKey, Vec<usize>> = HashMap::new();
    for (s, &(a, b)) in segments.iter().enumerate() {
        incident.entry(a).or_default().push(s);
        incident.entry(b).or_default().push(s);
    }
    let mut keys: Vec<EdgeKey> = incident.keys().copied().collect();
    keys.sort_unstable();
    for key in keys {
        points.insert(key, edge_point(solution, grid, key, level));
    }

    let mut used = vec![false; segments.len()];
    let mut lines = Vec::new();
    // Open chains start at an edge used once; the rest are loops.
    let mut starts: Vec<usize> = (0..segments.len())
        .filter(|&s| incident[&segments[s].0].len() == 1 || incident[&segments[s].1].len() == 1)
        .collect();
    starts.extend(0..segments.len());
    for start in starts {
        if used[start] {
            continue;
        }
        let (a, b) = segments[start];
        let (first, mut cur) = if incident[&b].len() == 1 && incident[&a].len() != 1 { (b, a) } else { (a, b) };
        used[start] = true;
        let mut chain = vec![first, cur];
        loop {
            let next = incident[&cur].iter().copied().find(|&s| !used[s]);
            let Some(s) = next else { break };
            used[s] = true;
            let (p, q) = segments[s];
            cur = if p == cur { q } else { p };
            chain.push(cur);
        }
        let mut pts: Vec<Complex64> = Vec::with_capacity(chain.len());
        for key in chain {
            let p = points[&key];
            if pts.last() != Some(&p) {
                pts.push(p);
            }
        }
        if pts.len() >= 2 {
            lines.push(Polyline {
                points: pts,
                kind: PolylineKind::Equipotential { level },
                termination: None,
                stagnated: false,
            });
        }
    }
    lines
}

/// Level curves of `u` for each requested level on a `grid_n x grid_n` grid
/// over `window`. Closed curves repeat their first point at the end.
pub fn extract_contours(solution: &Solution, levels: &[f64], window: Window, grid_n: usize) -> Result<Vec<Polyline>> {
    if grid_n < 2 {
        return Err(argument("grid_n must be at least 2"));
    }
    let window = Window::new(window.x0, window.x1, window.y0, window.y1)?;
    if levels.is_empty() {
        return Ok(vec![]);
    }
    let grid = build_grid(solution, window, grid_n);
    let per_level: Vec<Vec<Polyline>> = levels
        .par_iter()
        .map(|&level| contour_level(solution, &grid, level))
        .collect();
    Ok(per_level.into_iter().flatten().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basis::Expansion;
    use crate::solver::{DomainKind, Problem};

    fn log_abs() -> Solution {
        let zero = Complex64::new(0.0, 0.0);
        let problem = Problem::new(DomainKind::ExteriorUnbounded, vec![], vec![], Some(zero)).unwrap();
        Solution::from_expansion(problem, Expansion::source_only(zero, 0.0)).unwrap()
    }

    #[test]
    fn unit_circle_level_set() {
        let sol = log_abs();
        let window = Window::new(-2.0, 2.0, -2.0, 2.0).unwrap();
        let n = 41;
        let lines = extract_contours(&sol, &[0.0], window, n).unwrap();
        assert_eq!(lines.len(), 1);
        let line = &lines[0];
        assert!(line.is_closed());
        for p in &line.points {
            assert!((p.norm() - 1.0).abs() <= 4.0 / n as f64);
        }
        assert!(line.points.windows(2).all(|w| w[0] != w[1]));
    }

    #[test]
    fn level_below_the_grid_minimum() {
        let sol = log_abs();
        let window = Window::new(1.0, 2.0, 1.0, 2.0).unwrap();
        assert!(extract_contours(&sol, &[-10.0], window, 20).unwrap().is_empty());
        assert!(extract_contours(&sol, &[], window, 20).unwrap().is_empty());
        assert!(extract_contours(&sol, &[0.0], window, 1).is_err());
    }

    #[test]
    fn saddle_cells_split_consistently() {
        // Exactly the four corners of one cell: high on a diagonal.
        assert_eq!(cell_segments(5, true).len(), 2);
        assert_eq!(cell_segments(10, false).len(), 2);
        assert_ne!(cell_segments(5, true), cell_segments(5, false));
        for case in 0..16u8 {
            for seg in cell_segments(case, true) {
                assert_ne!(seg.0, seg.1);
            }
        }
    }
}
