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

//! # Series solution of planar Laplace problems
//!
//! Harmonic functions in domains bounded by disks and slits are approximated
//! by a constant, one logarithm per hole, and a truncated series of negative
//! powers about each hole (positive powers for an outer circle). The
//! coefficients are fitted to the boundary data by least squares on oversampled
//! boundary points, and the fit is certified a posteriori by sampling the
//! boundary misfit more finely (the maximum principle turns this into an
//! error bound in the whole domain).
//!
//! Slits are handled by transplanting the disk basis through the Joukowski map
//! `z = c + r (w + 1/w) / 2`.
//!
//! ~~~
//! use laplace_series::prelude::*;
//! use num_complex::Complex64;
//!
//! let disk = BoundaryComponent::disk(Complex64::new(3.0, 1.0), 1.0).unwrap();
//! let problem = Problem::green(vec![disk]).unwrap();
//! let spec = ExpansionSpec::uniform(&problem, 16);
//! let solution = solve_problem(&problem, &spec, None).unwrap();
//! let u = eval_expansion(&solution.expansion, Complex64::new(2.0, 0.0)).unwrap();
//! assert!((u + 0.5893274981708).abs() < 1e-12);
//! ~~~

pub mod basis;
pub mod cantor;
pub mod cli;
pub mod error;
pub mod field;
pub mod geometry;
pub mod solver;

pub use error::{Error, Result};

/// Commonly used types and operations.
pub mod prelude {
    pub use crate::basis::{basis_row, eval_expansion, eval_gradient, Expansion, ExpansionSpec};
    pub use crate::cantor::{
        cantor_components, cantor_degree, cantor_inner_half_sum, cantor_inner_half_sum_with, cantor_measures, cantor_solve,
        CantorLevel,
    };
    pub use crate::error::{Error, Result};
    pub use crate::field::{
        extract_contours, slit_side_measure, streamline_fan, streamline_fan_with, trace_streamline, Polyline,
        PolylineKind, Side, Termination, TraceOptions, Window,
    };
    pub use crate::geometry::{
        joukowski_forward, joukowski_inverse, sample_boundary, BoundaryComponent, BoundarySample,
        ComponentKind, Role,
    };
    pub use crate::solver::{
        assemble_system, boundary_residual, harmonic_measures, solve_least_squares, solve_problem,
        BoundaryData, DomainKind, MeasureReport, Problem, Solution,
    };
}
