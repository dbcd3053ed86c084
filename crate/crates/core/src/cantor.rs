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

//! Middle-thirds Cantor approximations as collections of slits, and the
//! harmonic measures of their pieces seen from the origin.

use num_complex::Complex64;

use crate::basis::{Expansion, ExpansionSpec};
use crate::error::{argument, Result};
use crate::geometry::{inverse_normalized, BoundaryComponent, ComponentKind};
use crate::solver::{constraint_weight, lstsq_solve, residual_on, solve_problem, FitReport, Matrix, Problem, Solution};

pub const MAX_LEVEL: u32 = 12;

/// The `2^m` intervals left after `m` middle-third removals from `[-1.5, 1.5]`.
#[derive(Debug, Clone, PartialEq)]
pub struct CantorLevel {
    pub m: u32,
    /// Real slits, ordered left to right.
    pub slits: Vec<BoundaryComponent>,
    pub total_span: (f64, f64),
}

/// Series degree used at level `m`: `max(2, 6 - m)`.
pub fn cantor_degree(m: u32) -> usize {
    6usize.saturating_sub(m as usize).max(2)
}

fn check_level(m: u32) -> Result<()> {
    if !(1..=MAX_LEVEL).contains(&m) {
        return Err(argument(format!("Cantor level must be in 1..={MAX_LEVEL}, got {m}")));
    }
    Ok(())
}

/// Endpoints as odd integers over the common denominator `2 * 3^(m-1)`.
fn ternary_intervals(m: u32) -> Vec<(i64, i64)> {
    let full = 3i64.pow(m);
    let mut pieces = vec![(-full, full)];
    for _ in 0..m {
        pieces = pieces
            .into_iter()
            .flat_map(|(a, b)| {
                let third = (b - a) / 3;
                [(a, a + third), (b - third, b)]
            })
            .collect();
    }
    pieces
}

pub fn cantor_components(m: u32) -> Result<CantorLevel> {
    check_level(m)?;
    let denom = 2.0 * 3f64.powi(m as i32 - 1);
    let slits = ternary_intervals(m)
        .into_iter()
        .map(|(a, b)| {
            let center = ((a + b) / 2) as f64 / denom;
            let halfspan = ((b - a) / 2) as f64 / denom;
            BoundaryComponent::slit(Complex64::new(center, 0.0), Complex64::new(halfspan, 0.0))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CantorLevel {
        m,
        slits,
        total_span: (-1.5, 1.5),
    })
}

/// Green function of the level-`m` Cantor approximation with its source at the
/// origin.
///
/// With `use_symmetry` the fit uses only real, even combinations of the basis
/// and samples the upper side of the right-half slits; the result is expanded
/// back to a full expansion over all `2^m` slits.
pub fn cantor_solve(m: u32, use_symmetry: bool) -> Result<Solution> {
    let level = cantor_components(m)?;
    let problem = Problem::green(level.slits)?;
    let spec = ExpansionSpec::uniform(&problem, cantor_degree(m));
    if use_symmetry {
        solve_symmetric(&problem, &spec)
    } else {
        solve_problem(&problem, &spec, None)
    }
}

fn solve_symmetric(problem: &Problem, spec: &ExpansionSpec) -> Result<Solution> {
    let slits = problem.components();
    let nslits = slits.len();
    let half = nslits / 2;
    let degree = spec.degrees[0];
    let npts = problem.default_npts(spec)[0];
    debug_assert!(npts.is_multiple_of(2));

    // Slits are ordered left to right and mirror symmetric: slit half + p
    // mirrors slit half - 1 - p.
    let right: Vec<(Complex64, Complex64)> = slits[half..]
        .iter()
        .map(|s| match s.kind {
            ComponentKind::Slit { halfspan } => (s.center, halfspan),
            ComponentKind::Disk { .. } => unreachable!("Cantor components are slits"),
        })
        .collect();

    let ncols = 1 + half + half * degree;
    let per_slit = npts / 2;
    let nsamples = half * per_slit;
    let mut matrix = Matrix::zeros(nsamples + 1, ncols);
    let mut rhs = Vec::with_capacity(nsamples + 1);

    let mut row = 0;
    for (p, &(cp, hp)) in right.iter().enumerate() {
        for k in 0..per_slit {
            let theta = 2.0 * std::f64::consts::PI * (k as f64 + 0.5) / npts as f64;
            let w_own = Complex64::from_polar(1.0, theta);
            let z = cp + hp * w_own.re;
            matrix.set(row, 0, 1.0);
            for (q, &(cq, hq)) in right.iter().enumerate() {
                let w = if q == p { w_own } else { inverse_normalized((z - cq) / hq) };
                let w_mirror = inverse_normalized((z + cq) / hq);
                matrix.set(row, 1 + q, w.norm().ln() + w_mirror.norm().ln());
                let (step, step_mirror) = (w.inv(), w_mirror.inv());
                let (mut a, mut b) = (step, step_mirror);
                let mut sign = -1.0;
                for kk in 0..degree {
                    matrix.set(row, 1 + half + q * degree + kk, a.re + sign * b.re);
                    a *= step;
                    b *= step_mirror;
                    sign = -sign;
                }
            }
            rhs.push(-z.norm().ln());
            row += 1;
        }
    }
    // The reduced samples are a quarter of the full set, so the general
    // objective is scaled by 1/4; the same weight on (sum_p d_p + 1/2) matches it.
    let weight = constraint_weight(nslits * npts);
    for q in 0..half {
        matrix.set(nsamples, 1 + q, weight);
    }
    rhs.push(-weight / 2.0);

    let (rows, cols) = (matrix.rows(), matrix.cols());
    let ls = lstsq_solve(matrix, rhs)?;

    // Expand to the general column layout: [C, d_1..d_n, (a_j1, b_j1, ..)].
    let mut coeffs = vec![0.0; 1 + nslits + 2 * nslits * degree];
    coeffs[0] = ls.x[0];
    for q in 0..half {
        let (jr, jl) = (half + q, half - 1 - q);
        let d = ls.x[1 + q];
        coeffs[1 + jr] = d;
        coeffs[1 + jl] = d;
        for kk in 0..degree {
            let a = ls.x[1 + half + q * degree + kk];
            let sign = if kk % 2 == 0 { -1.0 } else { 1.0 };
            coeffs[1 + nslits + 2 * degree * jr + 2 * kk] = a;
            coeffs[1 + nslits + 2 * degree * jl + 2 * kk] = sign * a;
        }
    }
    let expansion = Expansion::new(slits.to_vec(), problem.source(), spec.clone(), coeffs)?;
    let full_npts = vec![npts; nslits];
    let fine: Vec<usize> = full_npts.iter().map(|n| 4 * n).collect();
    let residual = residual_on(problem, &expansion, &fine)?;
    Ok(Solution {
        problem: problem.clone(),
        expansion,
        residual,
        fit_report: FitReport {
            rows,
            cols,
            rank: ls.rank,
            npts: full_npts,
            degrees: spec.degrees.clone(),
        },
    })
}

/// Harmonic measures of the right-half slits, from the origin outward.
pub fn cantor_measures(m: u32, use_symmetry: bool) -> Result<Vec<f64>> {
    let sol = cantor_solve(m, use_symmetry)?;
    Ok(right_half_measures(&sol))
}

pub(crate) fn right_half_measures(sol: &Solution) -> Vec<f64> {
    let d = sol.expansion.log_coeffs();
    let half = d.len() / 2;
    d[half..].iter().map(|v| -v).collect()
}

/// Total measure of the inner half of the right-half slits (`m >= 2`).
pub fn cantor_inner_half_sum(m: u32) -> Result<f64> {
    cantor_inner_half_sum_with(m, false)
}

pub fn cantor_inner_half_sum_with(m: u32, use_symmetry: bool) -> Result<f64> {
    if m < 2 {
        return Err(argument("the inner-half sum needs level m >= 2"));
    }
    check_level(m)?;
    let measures = cantor_measures(m, use_symmetry)?;
    Ok(measures[..1 << (m - 2)].iter().sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn intervals(level: &CantorLevel) -> Vec<(f64, f64)> {
        level
            .slits
            .iter()
            .map(|s| {
                let (a, b) = s.endpoints().unwrap();
                (a.re, b.re)
            })
            .collect()
    }

    #[test]
    fn first_two_levels() {
        let l1 = cantor_components(1).unwrap();
        assert_eq!(intervals(&l1), vec![(-1.5, -0.5), (0.5, 1.5)]);
        let l2 = cantor_components(2).unwrap();
        let expected = [(-1.5, -7.0 / 6.0), (-5.0 / 6.0, -0.5), (0.5, 5.0 / 6.0), (7.0 / 6.0, 1.5)];
        for ((a, b), (ea, eb)) in intervals(&l2).into_iter().zip(expected) {
            assert_abs_diff_eq!(a, ea, epsilon = 1e-15);
            assert_abs_diff_eq!(b, eb, epsilon = 1e-15);
        }
    }

    #[test]
    fn count_length_and_symmetry() {
        for m in 1..=MAX_LEVEL {
            let level = cantor_components(m).unwrap();
            assert_eq!(level.slits.len(), 1 << m);
            let len = 3f64.powi(1 - m as i32);
            for (s, mirror) in level.slits.iter().zip(level.slits.iter().rev()) {
                let (a, b) = s.endpoints().unwrap();
                assert!(((b - a).re - len).abs() <= 1e-15 * len.max(1.0));
                assert_eq!(s.center.re, -mirror.center.re);
                assert_eq!(s.center.im, 0.0);
            }
        }
        assert_eq!(cantor_components(5).unwrap().slits.len(), 32);
    }

    #[test]
    fn level_out_of_range() {
        assert!(matches!(cantor_components(0), Err(crate::Error::Argument(_))));
        assert!(cantor_components(13).is_err());
        assert!(cantor_inner_half_sum(1).is_err());
    }

    #[test]
    fn degree_schedule() {
        let got: Vec<usize> = (1..=8).map(cantor_degree).collect();
        assert_eq!(got, vec![5, 4, 3, 2, 2, 2, 2, 2]);
    }

    #[test]
    fn level_one_splits_evenly() {
        let m = cantor_measures(1, false).unwrap();
        assert_eq!(m.len(), 1);
        assert_abs_diff_eq!(m[0], 0.5, epsilon = 1e-9);
    }

    #[test]
    fn symmetric_path_matches_general_path() {
        for m in 1..=4 {
            let general = cantor_measures(m, false).unwrap();
            let symmetric = cantor_measures(m, true).unwrap();
            for (g, s) in general.iter().zip(&symmetric) {
                assert_abs_diff_eq!(g, s, epsilon = 1e-8);
            }
        }
    }
}
