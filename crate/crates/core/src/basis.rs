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

//! Series terms of the expansion and their analytic gradients.
//!
//! For each inner component `j` the expansion carries a logarithm
//! `d_j log|z - c_j|` (or `d_j log|w_j(z)|` for a slit) and a truncated series
//! `sum_k a_jk Re(zeta_j^-k) + b_jk Im(zeta_j^-k)` where `zeta_j` is
//! `(z - c_j)/r_j` (scaled disks), `z - c_j` (unscaled disks) or the inverse
//! Joukowski variable `w_j(z)` (slits). An outer circle contributes positive
//! powers of `(z - c_0)/r_0`. A logarithmic source `log|z - z_s|` enters with
//! fixed unit strength.
//!
//! Gradients use `grad Re f = conj(f')`.
//!
//! Collocation columns are laid out as
//! `[C, d_1..d_J, (a_11, b_11, .., a_1N, b_1N), .., (outer a_1, b_1, ..)]`,
//! with inner components in the order they appear in the problem.

use num_complex::Complex64;

use crate::error::{argument, domain, Result};
use crate::geometry::{inverse_normalized, on_slit, BoundaryComponent, ComponentKind, Role};

#[derive(Debug, Clone, PartialEq)]
pub struct ExpansionSpec {
    /// Series degree per component. The entry of an outer component is not
    /// used; its degree is `outer_degree`.
    pub degrees: Vec<usize>,
    /// Use `((z - c)/r)^-k` rather than `(z - c)^-k` for disks.
    pub scaled: bool,
    pub outer_degree: usize,
}

impl ExpansionSpec {
    /// Degree `n` for every component (including the outer one), scaled basis.
    pub fn uniform_for(components: &[BoundaryComponent], n: usize) -> Self {
        let has_outer = components.iter().any(|c| c.role == Role::Outer);
        Self {
            degrees: vec![n; components.len()],
            scaled: true,
            outer_degree: if has_outer { n } else { 0 },
        }
    }

    pub fn uniform(problem: &crate::solver::Problem, n: usize) -> Self {
        Self::uniform_for(problem.components(), n)
    }

    pub fn with_scaling(mut self, scaled: bool) -> Self {
        self.scaled = scaled;
        self
    }

    /// Degree used for component `j`.
    pub fn degree_of(&self, components: &[BoundaryComponent], j: usize) -> usize {
        match components[j].role {
            Role::Inner => self.degrees[j],
            Role::Outer => self.outer_degree,
        }
    }

    pub(crate) fn check(&self, components: &[BoundaryComponent]) -> Result<()> {
        if self.degrees.len() != components.len() {
            return Err(argument(format!(
                "expansion has {} degrees but the problem has {} components",
                self.degrees.len(),
                components.len()
            )));
        }
        let has_outer = components.iter().any(|c| c.role == Role::Outer);
        if !has_outer && self.outer_degree != 0 {
            return Err(argument("outer_degree is set but there is no outer component"));
        }
        Ok(())
    }
}

/// Column offsets of the collocation matrix.
#[derive(Debug, Clone, PartialEq)]
pub(crate) struct Layout {
    /// `(component index, log column, first power column, degree)` per inner component.
    pub inner: Vec<InnerBlock>,
    /// `(component index, first power column, degree)` for the outer circle.
    pub outer: Option<OuterBlock>,
    pub ncols: usize,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct InnerBlock {
    pub component: usize,
    pub log_col: usize,
    pub power_col: usize,
    pub degree: usize,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct OuterBlock {
    pub component: usize,
    pub power_col: usize,
    pub degree: usize,
}

impl Layout {
    pub(crate) fn new(components: &[BoundaryComponent], spec: &ExpansionSpec) -> Result<Self> {
        spec.check(components)?;
        let ninner = components.iter().filter(|c| c.role == Role::Inner).count();
        let mut col = 1 + ninner;
        let mut inner = Vec::with_capacity(ninner);
        let mut outer = None;
        for (j, comp) in components.iter().enumerate() {
            if comp.role == Role::Inner {
                let degree = spec.degrees[j];
                inner.push(InnerBlock {
                    component: j,
                    log_col: 1 + inner.len(),
                    power_col: col,
                    degree,
                });
                col += 2 * degree;
            }
        }
        if let Some(j) = components.iter().position(|c| c.role == Role::Outer) {
            outer = Some(OuterBlock {
                component: j,
                power_col: col,
                degree: spec.outer_degree,
            });
            col += 2 * spec.outer_degree;
        }
        Ok(Self {
            inner,
            outer,
            ncols: col,
        })
    }

    pub(crate) fn log_cols(&self) -> std::ops::Range<usize> {
        1..1 + self.inner.len()
    }
}

/// Local variable of an inner component at a point.
struct Local {
    zeta: Complex64,
    log: f64,
}

/// `w` for slit `comp` at `z`, using a known preimage when `z` is one of the
/// slit's own boundary samples.
#[inline]
fn slit_w(comp: &BoundaryComponent, halfspan: Complex64, z: Complex64, preimage: Option<Complex64>) -> Result<Complex64> {
    if let Some(w) = preimage {
        return Ok(w);
    }
    let zc = (z - comp.center) / halfspan;
    if on_slit(zc) {
        return Err(domain(format!("point {z} lies on a slit")));
    }
    Ok(inverse_normalized(zc))
}

#[inline]
fn inner_local(comp: &BoundaryComponent, scaled: bool, z: Complex64, preimage: Option<Complex64>) -> Result<Local> {
    match comp.kind {
        ComponentKind::Disk { radius } => {
            let d = z - comp.center;
            if d.norm_sqr() == 0.0 {
                return Err(domain(format!("point {z} is a disk center")));
            }
            Ok(Local {
                zeta: if scaled { d / radius } else { d },
                log: d.norm().ln(),
            })
        }
        ComponentKind::Slit { halfspan } => {
            let w = slit_w(comp, halfspan, z, preimage)?;
            Ok(Local {
                zeta: w,
                log: w.norm().ln(),
            })
        }
    }
}

fn outer_zeta(comp: &BoundaryComponent, z: Complex64) -> Complex64 {
    match comp.kind {
        ComponentKind::Disk { radius } => (z - comp.center) / radius,
        ComponentKind::Slit { .. } => unreachable!("outer components are disks"),
    }
}

/// Fills one collocation row. `own` optionally supplies the preimage of `z`
/// for the component it was sampled from.
pub(crate) fn fill_row(
    z: Complex64,
    own: Option<(usize, Complex64)>,
    components: &[BoundaryComponent],
    layout: &Layout,
    scaled: bool,
    row: &mut [f64],
) -> Result<()> {
    debug_assert_eq!(row.len(), layout.ncols);
    row[0] = 1.0;
    for block in &layout.inner {
        let comp = &components[block.component];
        let pre = own.and_then(|(j, w)| (j == block.component && comp.is_slit()).then_some(w));
        let local = inner_local(comp, scaled, z, pre)?;
        row[block.log_col] = local.log;
        let step = local.zeta.inv();
        let mut p = step;
        for k in 0..block.degree {
            row[block.power_col + 2 * k] = p.re;
            row[block.power_col + 2 * k + 1] = p.im;
            p *= step;
        }
    }
    if let Some(block) = layout.outer {
        let zeta = outer_zeta(&components[block.component], z);
        let mut p = zeta;
        for k in 0..block.degree {
            row[block.power_col + 2 * k] = p.re;
            row[block.power_col + 2 * k + 1] = p.im;
            p *= zeta;
        }
    }
    Ok(())
}

/// One row of the collocation matrix at `z` (see the module docs for the
/// column order). The source term is not part of the row.
pub fn basis_row(z: Complex64, components: &[BoundaryComponent], spec: &ExpansionSpec) -> Result<Vec<f64>> {
    let layout = Layout::new(components, spec)?;
    let mut row = vec![0.0; layout.ncols];
    fill_row(z, None, components, &layout, spec.scaled, &mut row)?;
    Ok(row)
}

/// A fitted series: constant, log weights, power coefficients and the fixed
/// unit-strength source.
#[derive(Debug, Clone, PartialEq)]
pub struct Expansion {
    components: Vec<BoundaryComponent>,
    source: Option<Complex64>,
    spec: ExpansionSpec,
    layout: Layout,
    coeffs: Vec<f64>,
}

impl Expansion {
    /// Builds an expansion from a coefficient vector in collocation-column order.
    pub fn new(
        components: Vec<BoundaryComponent>,
        source: Option<Complex64>,
        spec: ExpansionSpec,
        coeffs: Vec<f64>,
    ) -> Result<Self> {
        let layout = Layout::new(&components, &spec)?;
        if coeffs.len() != layout.ncols {
            return Err(argument(format!(
                "expected {} coefficients, got {}",
                layout.ncols,
                coeffs.len()
            )));
        }
        if let Some(bad) = coeffs.iter().position(|c| !c.is_finite()) {
            return Err(argument(format!("coefficient {bad} is not finite")));
        }
        Ok(Self {
            components,
            source,
            spec,
            layout,
            coeffs,
        })
    }

    /// `log|z - source| + constant` with no boundary components.
    pub fn source_only(source: Complex64, constant: f64) -> Self {
        let spec = ExpansionSpec {
            degrees: vec![],
            scaled: true,
            outer_degree: 0,
        };
        Self::new(vec![], Some(source), spec, vec![constant]).expect("one column")
    }

    pub fn components(&self) -> &[BoundaryComponent] {
        &self.components
    }

    pub fn source(&self) -> Option<Complex64> {
        self.source
    }

    /// Coefficient of `log|z - z_s|`: 1 with a source, 0 without.
    pub fn source_strength(&self) -> f64 {
        if self.source.is_some() {
            1.0
        } else {
            0.0
        }
    }

    pub fn spec(&self) -> &ExpansionSpec {
        &self.spec
    }

    pub fn coefficients(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn constant(&self) -> f64 {
        self.coeffs[0]
    }

    /// `d_j` for every inner component, in problem order.
    pub fn log_coeffs(&self) -> &[f64] {
        &self.coeffs[self.layout.log_cols()]
    }

    /// Indices of the inner components, matching `log_coeffs`.
    pub fn inner_components(&self) -> Vec<usize> {
        self.layout.inner.iter().map(|b| b.component).collect()
    }

    /// `(a_jk, b_jk)` for `k = 1..N_j` of component `j`; positive powers for
    /// the outer component.
    pub fn power_coeffs(&self, j: usize) -> Vec<(f64, f64)> {
        let (col, degree) = if let Some(b) = self.layout.inner.iter().find(|b| b.component == j) {
            (b.power_col, b.degree)
        } else if let Some(b) = self.layout.outer.filter(|b| b.component == j) {
            (b.power_col, b.degree)
        } else {
            return vec![];
        };
        (0..degree)
            .map(|k| (self.coeffs[col + 2 * k], self.coeffs[col + 2 * k + 1]))
            .collect()
    }

    pub(crate) fn value_with(&self, z: Complex64, own: Option<(usize, Complex64)>) -> Result<f64> {
        let mut u = self.coeffs[0];
        if let Some(zs) = self.source {
            let d = z - zs;
            if d.norm_sqr() == 0.0 {
                return Err(domain("the expansion is singular at the source point"));
            }
            u += d.norm().ln();
        }
        for block in &self.layout.inner {
            let comp = &self.components[block.component];
            let pre = own.and_then(|(j, w)| (j == block.component && comp.is_slit()).then_some(w));
            let local = inner_local(comp, self.spec.scaled, z, pre)?;
            u += self.coeffs[block.log_col] * local.log;
            let step = local.zeta.inv();
            let mut p = step;
            let cs = &self.coeffs[block.power_col..block.power_col + 2 * block.degree];
            for ab in cs.chunks_exact(2) {
                u += ab[0] * p.re + ab[1] * p.im;
                p *= step;
            }
        }
        if let Some(block) = self.layout.outer {
            let zeta = outer_zeta(&self.components[block.component], z);
            let mut p = zeta;
            let cs = &self.coeffs[block.power_col..block.power_col + 2 * block.degree];
            for ab in cs.chunks_exact(2) {
                u += ab[0] * p.re + ab[1] * p.im;
                p *= zeta;
            }
        }
        Ok(u)
    }

    /// `f'(z)` of an analytic `f` with `Re f = u` locally; the gradient is its
    /// conjugate.
    fn derivative(&self, z: Complex64) -> Result<Complex64> {
        let mut fp = Complex64::new(0.0, 0.0);
        if let Some(zs) = self.source {
            let d = z - zs;
            if d.norm_sqr() == 0.0 {
                return Err(domain("the gradient is singular at the source point"));
            }
            fp += d.inv();
        }
        for block in &self.layout.inner {
            let comp = &self.components[block.component];
            // (zeta, dzeta/dz, d(log term)/dz)
            let (zeta, dzeta, dlog) = match comp.kind {
                ComponentKind::Disk { radius } => {
                    let d = z - comp.center;
                    if d.norm_sqr() == 0.0 {
                        return Err(domain(format!("point {z} is a disk center")));
                    }
                    if self.spec.scaled {
                        (d / radius, Complex64::new(1.0 / radius, 0.0), d.inv())
                    } else {
                        (d, Complex64::new(1.0, 0.0), d.inv())
                    }
                }
                ComponentKind::Slit { halfspan } => {
                    let w = slit_w(comp, halfspan, z, None)?;
                    let denom = halfspan * (1.0 - (w * w).inv());
                    if denom.norm_sqr() == 0.0 {
                        return Err(domain(format!("point {z} is a slit endpoint")));
                    }
                    let dw = 2.0 / denom;
                    (w, dw, dw / w)
                }
            };
            fp += self.coeffs[block.log_col] * dlog;
            let step = zeta.inv();
            // d/dz (a - ib) zeta^-k = -k (a - ib) zeta^-(k+1) zeta'
            let mut p = step * step;
            let mut acc = Complex64::new(0.0, 0.0);
            let cs = &self.coeffs[block.power_col..block.power_col + 2 * block.degree];
            for (k, ab) in cs.chunks_exact(2).enumerate() {
                acc -= (k + 1) as f64 * Complex64::new(ab[0], -ab[1]) * p;
                p *= step;
            }
            fp += acc * dzeta;
        }
        if let Some(block) = self.layout.outer {
            let comp = &self.components[block.component];
            let radius = match comp.kind {
                ComponentKind::Disk { radius } => radius,
                ComponentKind::Slit { .. } => unreachable!("outer components are disks"),
            };
            let zeta = (z - comp.center) / radius;
            let mut p = Complex64::new(1.0, 0.0);
            let mut acc = Complex64::new(0.0, 0.0);
            let cs = &self.coeffs[block.power_col..block.power_col + 2 * block.degree];
            for (k, ab) in cs.chunks_exact(2).enumerate() {
                acc += (k + 1) as f64 * Complex64::new(ab[0], -ab[1]) * p;
                p *= zeta;
            }
            fp += acc / radius;
        }
        Ok(fp)
    }
}

/// `u(z)`. Fails at the source, on a slit, or at a disk center.
pub fn eval_expansion(exp: &Expansion, z: Complex64) -> Result<f64> {
    exp.value_with(z, None)
}

/// `grad u(z)` as a complex number `u_x + i u_y`.
pub fn eval_gradient(exp: &Expansion, z: Complex64) -> Result<Complex64> {
    Ok(exp.derivative(z)?.conj())
}
