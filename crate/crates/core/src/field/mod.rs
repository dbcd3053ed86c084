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

//! Equipotentials, streamlines and slit side measures of a solved problem.

mod contour;
mod quadrature;
mod side_measure;
mod streamline;

use num_complex::Complex64;

pub use contour::extract_contours;
pub use quadrature::gauss_legendre;
pub use side_measure::{slit_side_measure, Side, DEFAULT_SIDE_OFFSET};
pub use streamline::{streamline_fan, streamline_fan_with, trace_streamline, TraceOptions};

use crate::solver::Problem;

/// Axis-aligned plotting window.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Window {
    pub x0: f64,
    pub x1: f64,
    pub y0: f64,
    pub y1: f64,
}

impl Window {
    pub fn new(x0: f64, x1: f64, y0: f64, y1: f64) -> crate::Result<Self> {
        if !(x0.is_finite() && x1.is_finite() && y0.is_finite() && y1.is_finite() && x0 < x1 && y0 < y1) {
            return Err(crate::error::argument(format!(
                "window [{x0}, {x1}] x [{y0}, {y1}] is empty or not finite"
            )));
        }
        Ok(Self { x0, x1, y0, y1 })
    }

    pub fn contains(&self, z: Complex64) -> bool {
        z.re >= self.x0 && z.re <= self.x1 && z.im >= self.y0 && z.im <= self.y1
    }

    pub fn width(&self) -> f64 {
        self.x1 - self.x0
    }

    pub fn height(&self) -> f64 {
        self.y1 - self.y0
    }

    /// Bounding box of the components and the source, padded by half its
    /// larger side (at least 1) on every side.
    pub fn around(problem: &Problem) -> Self {
        let mut bb = [f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY];
        let mut grow = |b: [f64; 4]| {
            bb[0] = bb[0].min(b[0]);
            bb[1] = bb[1].max(b[1]);
            bb[2] = bb[2].min(b[2]);
            bb[3] = bb[3].max(b[3]);
        };
        for c in problem.components() {
            grow(c.bounding_box());
        }
        if let Some(zs) = problem.source() {
            grow([zs.re, zs.re, zs.im, zs.im]);
        }
        if !bb[0].is_finite() {
            bb = [-1.0, 1.0, -1.0, 1.0];
        }
        let pad = (0.5 * (bb[1] - bb[0]).max(bb[3] - bb[2])).max(1.0);
        Self {
            x0: bb[0] - pad,
            x1: bb[1] + pad,
            y0: bb[2] - pad,
            y1: bb[3] + pad,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PolylineKind {
    Equipotential { level: f64 },
    /// Seed angle around the source, or `NaN` for a free seed.
    Streamline { seed_angle: f64 },
}

/// Why a streamline stopped.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Termination {
    /// Came within the stopping distance of a component.
    HitBoundary(usize),
    LeftWindow,
    StepLimit,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Polyline {
    pub points: Vec<Complex64>,
    pub kind: PolylineKind,
    /// `None` for equipotentials.
    pub termination: Option<Termination>,
    /// The gradient vanished along the path (reported with `StepLimit`).
    pub stagnated: bool,
}

impl Polyline {
    pub fn is_closed(&self) -> bool {
        self.points.len() > 2 && self.points.first() == self.points.last()
    }
}
