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

//! Collocation assembly, least-squares fitting, residual certificates and
//! harmonic measures.

mod lstsq;

use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;
use rayon::prelude::*;

pub use lstsq::{Matrix, RANK_TOLERANCE};
pub(crate) use lstsq::lstsq as lstsq_solve;

use crate::basis::{fill_row, Expansion, ExpansionSpec, Layout};
use crate::error::{argument, geometry, Result};
use crate::geometry::{
    ensure_finite, fit_offset, sample_with_offset, BoundaryComponent, BoundarySample, ComponentKind, Role,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DomainKind {
    /// Exterior of a set of holes, regular at infinity.
    ExteriorUnbounded,
    /// Interior of one outer circle minus a set of holes.
    Bounded,
}

/// Dirichlet data on one component.
#[derive(Clone)]
pub enum BoundaryData {
    Constant(f64),
    /// Value as a function of boundary position.
    Function(Arc<dyn Fn(Complex64) -> f64 + Send + Sync>),
}

impl BoundaryData {
    pub fn function(f: impl Fn(Complex64) -> f64 + Send + Sync + 'static) -> Self {
        Self::Function(Arc::new(f))
    }

    pub fn at(&self, z: Complex64) -> f64 {
        match self {
            Self::Constant(v) => *v,
            Self::Function(f) => f(z),
        }
    }

    pub fn as_constant(&self) -> Option<f64> {
        match self {
            Self::Constant(v) => Some(*v),
            Self::Function(_) => None,
        }
    }
}

impl fmt::Debug for BoundaryData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Constant(v) => write!(f, "Constant({v})"),
            Self::Function(_) => f.write_str("Function(..)"),
        }
    }
}

/// A validated Laplace problem.
#[derive(Debug, Clone)]
pub struct Problem {
    domain: DomainKind,
    components: Vec<BoundaryComponent>,
    data: Vec<BoundaryData>,
    source: Option<Complex64>,
}

fn check_component(j: usize, comp: &BoundaryComponent) -> Result<()> {
    ensure_finite(comp.center, "component center")?;
    let ok = match comp.kind {
        ComponentKind::Disk { radius } => radius.is_finite() && radius > 0.0,
        ComponentKind::Slit { halfspan } => {
            halfspan.re.is_finite() && halfspan.im.is_finite() && halfspan.norm_sqr() > 0.0
        }
    };
    if !ok {
        return Err(argument(format!("component {j} has a degenerate extent")));
    }
    if comp.role == Role::Outer && comp.is_slit() {
        return Err(argument(format!("component {j}: a slit cannot be an outer boundary")));
    }
    Ok(())
}

impl Problem {
    /// Validates the geometry: inner components pairwise disjoint and clear of
    /// the source; for bounded problems exactly one outer disk enclosing
    /// everything else.
    pub fn new(
        domain: DomainKind,
        components: Vec<BoundaryComponent>,
        data: Vec<BoundaryData>,
        source: Option<Complex64>,
    ) -> Result<Self> {
        if data.len() != components.len() {
            return Err(argument(format!(
                "{} components but {} boundary data entries",
                components.len(),
                data.len()
            )));
        }
        for (j, comp) in components.iter().enumerate() {
            check_component(j, comp)?;
        }
        for (j, d) in data.iter().enumerate() {
            if let Some(v) = d.as_constant() {
                if !v.is_finite() {
                    return Err(argument(format!("boundary value of component {j} is not finite")));
                }
            }
        }
        if let Some(zs) = source {
            ensure_finite(zs, "source")?;
        }

        let outers: Vec<usize> = (0..components.len())
            .filter(|&j| components[j].role == Role::Outer)
            .collect();
        match domain {
            DomainKind::ExteriorUnbounded if !outers.is_empty() => {
                return Err(geometry(format!(
                    "component {} is an outer boundary but the domain is exterior",
                    outers[0]
                )));
            }
            DomainKind::Bounded if outers.len() != 1 => {
                return Err(geometry(format!(
                    "a bounded domain needs exactly one outer component, found {}",
                    outers.len()
                )));
            }
            _ => {}
        }

        let inner: Vec<usize> = (0..components.len())
            .filter(|&j| components[j].role == Role::Inner)
            .collect();
        for (a, &i) in inner.iter().enumerate() {
            for &j in &inner[a + 1..] {
                if components[i].intersects(&components[j]) {
                    return Err(geometry(format!("components {i} and {j} overlap")));
                }
            }
        }
        if let Some(&o) = outers.first() {
            let outer = &components[o];
            let ComponentKind::Disk { radius } = outer.kind else {
                unreachable!("checked above")
            };
            for &i in &inner {
                if !components[i].strictly_inside(outer.center, radius) {
                    return Err(geometry(format!(
                        "component {i} is not strictly inside the outer component {o}"
                    )));
                }
            }
            if let Some(zs) = source {
                if outer.boundary_distance(zs) <= 0.0 {
                    return Err(geometry(format!("the source lies outside the outer component {o}")));
                }
            }
        }
        if let Some(zs) = source {
            for &i in &inner {
                if components[i].boundary_distance(zs) <= 0.0 {
                    return Err(geometry(format!("the source lies in or on component {i}")));
                }
            }
        }
        Ok(Self {
            domain,
            components,
            data,
            source,
        })
    }

    /// Exterior Green problem: zero data on every component, unit source at the origin.
    pub fn green(components: Vec<BoundaryComponent>) -> Result<Self> {
        Self::green_at(components, Complex64::new(0.0, 0.0))
    }

    pub fn green_at(components: Vec<BoundaryComponent>, source: Complex64) -> Result<Self> {
        let data = vec![BoundaryData::Constant(0.0); components.len()];
        Self::new(DomainKind::ExteriorUnbounded, components, data, Some(source))
    }

    pub fn domain(&self) -> DomainKind {
        self.domain
    }

    pub fn components(&self) -> &[BoundaryComponent] {
        &self.components
    }

    pub fn data(&self) -> &[BoundaryData] {
        &self.data
    }

    pub fn source(&self) -> Option<Complex64> {
        self.source
    }

    /// Exterior problem with a source and zero data everywhere.
    pub fn is_green(&self) -> bool {
        self.domain == DomainKind::ExteriorUnbounded
            && self.source.is_some()
            && self.data.iter().all(|d| d.as_constant() == Some(0.0))
    }

    /// Whether `z` lies strictly inside the domain and away from the source.
    pub fn contains(&self, z: Complex64) -> bool {
        if !(z.re.is_finite() && z.im.is_finite()) {
            return false;
        }
        if self.source == Some(z) {
            return false;
        }
        self.components.iter().all(|c| c.boundary_distance(z) > 0.0)
    }

    /// Smallest distance from `z` to any component, with its index.
    pub fn nearest_component(&self, z: Complex64) -> Option<(usize, f64)> {
        self.components
            .iter()
            .enumerate()
            .map(|(j, c)| (j, c.boundary_distance(z)))
            .min_by(|a, b| a.1.total_cmp(&b.1))
    }

    /// Default sample counts, `max(32, 8 N_j)` per component.
    pub fn default_npts(&self, spec: &ExpansionSpec) -> Vec<usize> {
        (0..self.components.len())
            .map(|j| (8 * spec.degree_of(&self.components, j)).max(32))
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FitReport {
    pub rows: usize,
    pub cols: usize,
    pub rank: usize,
    pub npts: Vec<usize>,
    pub degrees: Vec<usize>,
}

/// A fitted expansion with its a-posteriori boundary misfit.
#[derive(Debug, Clone)]
pub struct Solution {
    pub problem: Problem,
    pub expansion: Expansion,
    /// Max |u - g| over a boundary grid four times finer than the fit grid.
    pub residual: f64,
    pub fit_report: FitReport,
}

impl Solution {
    /// Wraps a known expansion (not fitted) and certifies it against the
    /// problem's boundary data.
    pub fn from_expansion(problem: Problem, expansion: Expansion) -> Result<Self> {
        if expansion.components() != problem.components() || expansion.source() != problem.source() {
            return Err(argument("expansion geometry does not match the problem"));
        }
        let npts = problem.default_npts(expansion.spec());
        let fine: Vec<usize> = npts.iter().map(|n| 4 * n).collect();
        let residual = residual_on(&problem, &expansion, &fine)?;
        let fit_report = FitReport {
            rows: 0,
            cols: expansion.coefficients().len(),
            rank: 0,
            npts,
            degrees: expansion.spec().degrees.clone(),
        };
        Ok(Self {
            problem,
            expansion,
            residual,
            fit_report,
        })
    }

    pub fn eval(&self, z: Complex64) -> Result<f64> {
        crate::basis::eval_expansion(&self.expansion, z)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct MeasureReport {
    /// `-d_j` for each inner component.
    pub measures: Vec<f64>,
    pub total: f64,
    /// False unless the problem is an exterior Green problem; the values are
    /// then only the negated log weights.
    pub probabilistic: bool,
}

struct Assembly {
    matrix: Matrix,
    rhs: Vec<f64>,
    layout: Layout,
}

fn check_npts(problem: &Problem, spec: &ExpansionSpec, npts: &[usize]) -> Result<()> {
    if npts.len() != problem.components.len() {
        return Err(argument(format!(
            "{} sample counts for {} components",
            npts.len(),
            problem.components.len()
        )));
    }
    for (j, &n) in npts.iter().enumerate() {
        let degree = spec.degree_of(&problem.components, j);
        if n < 2 * degree + 2 {
            return Err(argument(format!(
                "component {j} has {n} samples but degree {degree} needs at least {}",
                2 * degree + 2
            )));
        }
    }
    Ok(())
}

fn fit_samples(problem: &Problem, npts: &[usize]) -> Result<Vec<BoundarySample>> {
    let mut samples = Vec::with_capacity(npts.iter().sum());
    for (j, comp) in problem.components.iter().enumerate() {
        samples.extend(sample_with_offset(comp, j, npts[j], fit_offset(comp))?);
    }
    for s in &samples {
        for (k, other) in problem.components.iter().enumerate() {
            if k != s.component_index && other.boundary_distance(s.point) <= 0.0 {
                return Err(geometry(format!(
                    "a sample of component {} lies inside component {k}",
                    s.component_index
                )));
            }
        }
    }
    Ok(samples)
}

fn source_term(problem: &Problem, z: Complex64) -> f64 {
    problem.source.map_or(0.0, |zs| (z - zs).norm().ln())
}

fn assemble(problem: &Problem, spec: &ExpansionSpec, npts: &[usize]) -> Result<Assembly> {
    check_npts(problem, spec, npts)?;
    let layout = Layout::new(&problem.components, spec)?;
    let samples = fit_samples(problem, npts)?;
    let nsamples = samples.len();
    let constrained = problem.domain == DomainKind::ExteriorUnbounded;
    let nrows = nsamples + usize::from(constrained);
    let ncols = layout.ncols;

    let mut row_major = vec![0.0; nsamples * ncols];
    row_major
        .par_chunks_mut(ncols.max(1))
        .zip(samples.par_iter())
        .try_for_each(|(row, s)| {
            fill_row(
                s.point,
                Some((s.component_index, s.preimage)),
                &problem.components,
                &layout,
                spec.scaled,
                row,
            )
        })?;

    let mut matrix = Matrix::zeros(nrows, ncols);
    for (i, row) in row_major.chunks(ncols.max(1)).enumerate().take(nsamples) {
        for (j, &v) in row.iter().enumerate() {
            matrix.set(i, j, v);
        }
    }
    let mut rhs: Vec<f64> = samples
        .iter()
        .map(|s| problem.data[s.component_index].at(s.point) - source_term(problem, s.point))
        .collect();
    if let Some(bad) = rhs.iter().position(|v| !v.is_finite()) {
        return Err(argument(format!("boundary datum at sample {bad} is not finite")));
    }
    if constrained {
        // sum_j d_j = -(source strength), weighted to dominate the fit.
        let weight = constraint_weight(nsamples);
        for col in layout.log_cols() {
            matrix.set(nsamples, col, weight);
        }
        let strength = if problem.source.is_some() { 1.0 } else { 0.0 };
        rhs.push(-weight * strength);
    }
    Ok(Assembly { matrix, rhs, layout })
}

/// Multiplier on `sqrt(total samples)` for the constraint row. The constraint
/// misfit of a weighted row falls like the fit misfit over the squared
/// weight; with `sqrt(n)` alone it is ~1e-9 on underresolved fits.
pub const CONSTRAINT_BOOST: f64 = 1e3;

/// Weight of the constraint row for `nsamples` boundary rows.
pub fn constraint_weight(nsamples: usize) -> f64 {
    CONSTRAINT_BOOST * (nsamples as f64).sqrt()
}

/// Collocation matrix and right-hand side: one row per boundary sample, plus
/// the weighted constraint row `sum_j d_j = -1` for exterior problems.
pub fn assemble_system(problem: &Problem, spec: &ExpansionSpec, npts: &[usize]) -> Result<(Matrix, Vec<f64>)> {
    let a = assemble(problem, spec, npts)?;
    Ok((a.matrix, a.rhs))
}

/// Least-squares minimizer of `||A x - b||` via pivoted Householder QR.
pub fn solve_least_squares(matrix: &Matrix, rhs: &[f64]) -> Result<Vec<f64>> {
    Ok(lstsq::lstsq(matrix.clone(), rhs.to_vec())?.x)
}

/// Fits the expansion to the boundary data and certifies the result.
/// `npts` defaults to `max(32, 8 N_j)` samples per component.
pub fn solve_problem(problem: &Problem, spec: &ExpansionSpec, npts: Option<&[usize]>) -> Result<Solution> {
    if problem.components.is_empty() {
        return Err(argument("the problem has no boundary components to fit"));
    }
    let npts = match npts {
        Some(n) => n.to_vec(),
        None => problem.default_npts(spec),
    };
    let Assembly { matrix, rhs, layout } = assemble(problem, spec, &npts)?;
    let (rows, cols) = (matrix.rows(), matrix.cols());
    let ls = lstsq::lstsq(matrix, rhs)?;
    debug_assert_eq!(ls.x.len(), layout.ncols);
    let expansion = Expansion::new(problem.components.clone(), problem.source, spec.clone(), ls.x)?;
    let fine: Vec<usize> = npts.iter().map(|n| 4 * n).collect();
    let residual = residual_on(problem, &expansion, &fine)?;
    Ok(Solution {
        problem: problem.clone(),
        expansion,
        residual,
        fit_report: FitReport {
            rows,
            cols,
            rank: ls.rank,
            npts,
            degrees: spec.degrees.clone(),
        },
    })
}

/// Check-grid offset: half a step for disks (whose fit grid starts at angle
/// zero) and a quarter step for slits (whose fit grid is already half a step in).
fn check_offset(comp: &BoundaryComponent) -> f64 {
    if comp.is_slit() {
        0.25
    } else {
        0.5
    }
}

pub(crate) fn residual_on(problem: &Problem, expansion: &Expansion, nfine: &[usize]) -> Result<f64> {
    let mut worst: f64 = 0.0;
    for (j, comp) in problem.components.iter().enumerate() {
        let samples = sample_with_offset(comp, j, nfine[j], check_offset(comp))?;
        let local = samples
            .par_iter()
            .map(|s| {
                let u = expansion.value_with(s.point, Some((j, s.preimage)))?;
                Ok((u - problem.data[j].at(s.point)).abs())
            })
            .try_reduce(|| 0.0, |a: f64, b: f64| Ok(a.max(b)))?;
        worst = worst.max(local);
    }
    Ok(worst)
}

/// Max boundary misfit over `nfine` fresh samples per component, offset from
/// the fit grid. By the maximum principle this bounds the error everywhere in
/// the domain when the behavior at infinity is matched.
pub fn boundary_residual(solution: &Solution, nfine: usize) -> Result<f64> {
    if nfine == 0 {
        return Err(argument("nfine must be at least 1"));
    }
    let n = vec![nfine; solution.problem.components.len()];
    residual_on(&solution.problem, &solution.expansion, &n)
}

/// Harmonic measures `-d_j` of the inner components.
pub fn harmonic_measures(solution: &Solution) -> MeasureReport {
    let measures: Vec<f64> = solution.expansion.log_coeffs().iter().map(|d| -d).collect();
    let total = measures.iter().sum();
    MeasureReport {
        measures,
        total,
        probabilistic: solution.problem.is_green(),
    }
}
