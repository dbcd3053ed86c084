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

//! Boundary components (disks and slits), the Joukowski map pair used to
//! transplant the disk basis to slits, and boundary sampling.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{argument, domain, Result};

/// Which side of the domain a component bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Role {
    /// A hole: the domain lies outside it.
    Inner,
    /// The outer circle of a bounded domain: the domain lies inside it.
    Outer,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ComponentKind {
    Disk { radius: f64 },
    /// The segment `center + halfspan * [-1, 1]`.
    Slit { halfspan: Complex64 },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundaryComponent {
    pub center: Complex64,
    pub kind: ComponentKind,
    pub role: Role,
}

/// A point on a boundary component together with the unit-circle point that
/// generated it. For slits the preimage tells the two sides apart.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundarySample {
    pub point: Complex64,
    pub component_index: usize,
    pub preimage: Complex64,
}

pub(crate) fn ensure_finite(z: Complex64, what: &str) -> Result<()> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(())
    } else {
        Err(argument(format!("{what} must be finite, got {z}")))
    }
}

impl BoundaryComponent {
    pub fn disk(center: Complex64, radius: f64) -> Result<Self> {
        ensure_finite(center, "disk center")?;
        if !(radius.is_finite() && radius > 0.0) {
            return Err(argument(format!("disk radius must be positive, got {radius}")));
        }
        Ok(Self {
            center,
            kind: ComponentKind::Disk { radius },
            role: Role::Inner,
        })
    }

    pub fn slit(center: Complex64, halfspan: Complex64) -> Result<Self> {
        ensure_finite(center, "slit center")?;
        ensure_finite(halfspan, "slit halfspan")?;
        if halfspan == Complex64::new(0.0, 0.0) {
            return Err(argument("slit halfspan must be nonzero"));
        }
        Ok(Self {
            center,
            kind: ComponentKind::Slit { halfspan },
            role: Role::Inner,
        })
    }

    /// Marks this component as the outer boundary of a bounded domain.
    /// Only disks may play that role.
    pub fn into_outer(self) -> Result<Self> {
        match self.kind {
            ComponentKind::Disk { .. } => Ok(Self {
                role: Role::Outer,
                ..self
            }),
            ComponentKind::Slit { .. } => Err(argument("a slit cannot be an outer boundary")),
        }
    }

    pub fn is_slit(&self) -> bool {
        matches!(self.kind, ComponentKind::Slit { .. })
    }

    /// Slit endpoints `c - r` and `c + r`, or `None` for a disk.
    pub fn endpoints(&self) -> Option<(Complex64, Complex64)> {
        match self.kind {
            ComponentKind::Slit { halfspan } => {
                Some((self.center - halfspan, self.center + halfspan))
            }
            ComponentKind::Disk { .. } => None,
        }
    }

    /// Distance from `z` to the component, positive on the domain side.
    ///
    /// Inner disks and outer disks are signed (negative inside the hole or
    /// beyond the outer circle); slits have zero thickness so the distance is
    /// never negative.
    pub fn boundary_distance(&self, z: Complex64) -> f64 {
        match (self.kind, self.role) {
            (ComponentKind::Disk { radius }, Role::Inner) => (z - self.center).norm() - radius,
            (ComponentKind::Disk { radius }, Role::Outer) => radius - (z - self.center).norm(),
            (ComponentKind::Slit { halfspan }, _) => {
                point_segment_distance(z, self.center - halfspan, self.center + halfspan)
            }
        }
    }

    /// Axis-aligned bounding box `[x0, x1, y0, y1]`.
    pub fn bounding_box(&self) -> [f64; 4] {
        let c = self.center;
        match self.kind {
            ComponentKind::Disk { radius } => {
                [c.re - radius, c.re + radius, c.im - radius, c.im + radius]
            }
            ComponentKind::Slit { halfspan } => {
                let (a, b) = (c - halfspan, c + halfspan);
                [a.re.min(b.re), a.re.max(b.re), a.im.min(b.im), a.im.max(b.im)]
            }
        }
    }

    /// Whether two inner components touch or overlap.
    pub(crate) fn intersects(&self, other: &BoundaryComponent) -> bool {
        use ComponentKind::*;
        match (self.kind, other.kind) {
            (Disk { radius: r1 }, Disk { radius: r2 }) => {
                (self.center - other.center).norm() <= r1 + r2
            }
            (Disk { radius }, Slit { halfspan }) => {
                point_segment_distance(self.center, other.center - halfspan, other.center + halfspan)
                    <= radius
            }
            (Slit { .. }, Disk { .. }) => other.intersects(self),
            (Slit { halfspan: h1 }, Slit { halfspan: h2 }) => segments_touch(
                self.center - h1,
                self.center + h1,
                other.center - h2,
                other.center + h2,
            ),
        }
    }

    /// Whether this inner component lies strictly inside the outer disk.
    pub(crate) fn strictly_inside(&self, outer_center: Complex64, outer_radius: f64) -> bool {
        match self.kind {
            ComponentKind::Disk { radius } => (self.center - outer_center).norm() + radius < outer_radius,
            ComponentKind::Slit { halfspan } => {
                (self.center - halfspan - outer_center).norm() < outer_radius
                    && (self.center + halfspan - outer_center).norm() < outer_radius
            }
        }
    }
}

/// Joukowski map from the exterior of the unit disk to the exterior of the
/// slit `c + r[-1, 1]`: `z = c + r (w + 1/w) / 2`.
pub fn joukowski_forward(c: Complex64, r: Complex64, w: Complex64) -> Result<Complex64> {
    if w.norm_sqr() == 0.0 {
        return Err(domain("joukowski_forward is singular at w = 0"));
    }
    Ok(c + r * (w + w.inv()) * 0.5)
}

/// Inverse Joukowski map onto `|w| > 1`.
///
/// With `zc = (z - c)/r`, `w = zc + s(zc) sqrt(zc^2 - 1)` where `s = +1` on the
/// open right half-plane and the positive imaginary axis, `-1` elsewhere, and
/// `sqrt` is the principal branch. Points on the closed slit have two
/// preimages and are rejected.
pub fn joukowski_inverse(c: Complex64, r: Complex64, z: Complex64) -> Result<Complex64> {
    let zc = (z - c) / r;
    if on_slit(zc) {
        return Err(domain(format!("point {z} lies on the slit {c} + {r}*[-1,1]")));
    }
    Ok(inverse_normalized(zc))
}

/// Whether `zc` is on `[-1, 1]` up to a few rounding errors of `(z - c)/r`.
#[inline]
pub(crate) fn on_slit(zc: Complex64) -> bool {
    zc.im.abs() <= ON_SLIT_TOL && zc.re.abs() <= 1.0 + ON_SLIT_TOL
}

const ON_SLIT_TOL: f64 = 4.0 * f64::EPSILON;

#[inline]
pub(crate) fn inverse_normalized(zc: Complex64) -> Complex64 {
    let s = if zc.re > 0.0 || (zc.re == 0.0 && zc.im > 0.0) {
        1.0
    } else {
        -1.0
    };
    let root = (zc * zc - 1.0).sqrt();
    let w = zc + s * root;
    // On the imaginary axis a signed zero in `zc^2 - 1` can flip the square
    // root; the other root is then the one outside the unit circle.
    if w.norm_sqr() < 1.0 {
        zc - s * root
    } else {
        w
    }
}

/// `npts` samples on a component at angles `2 pi (k + offset) / npts`.
pub(crate) fn sample_with_offset(
    component: &BoundaryComponent,
    component_index: usize,
    npts: usize,
    offset: f64,
) -> Result<Vec<BoundarySample>> {
    if npts == 0 {
        return Err(argument("at least one boundary sample is required"));
    }
    let samples = (0..npts)
        .map(|k| {
            let theta = 2.0 * PI * (k as f64 + offset) / npts as f64;
            let w = Complex64::from_polar(1.0, theta);
            let point = match component.kind {
                ComponentKind::Disk { radius } => component.center + radius * w,
                // |w| = 1 so 1/w = conj(w) and the forward map cannot fail.
                ComponentKind::Slit { halfspan } => {
                    component.center + halfspan * (w + w.conj()) * 0.5
                }
            };
            BoundarySample {
                point,
                component_index,
                preimage: w,
            }
        })
        .collect();
    Ok(samples)
}

/// The fit offset: disks start at angle zero; slits start half a step in so
/// that no sample sits on an endpoint `w = +-1` for even `npts`.
pub(crate) fn fit_offset(component: &BoundaryComponent) -> f64 {
    if component.is_slit() {
        0.5
    } else {
        0.0
    }
}

/// Boundary samples used for least-squares fitting.
///
/// Disks are sampled uniformly in angle, `c + r e^{2 pi i k / npts}`. Slits are
/// sampled as images of `w_k = e^{2 pi i (k + 1/2) / npts}`; the upper and lower
/// halves of the circle give the two sides of the slit.
pub fn sample_boundary(
    component: &BoundaryComponent,
    component_index: usize,
    npts: usize,
) -> Result<Vec<BoundarySample>> {
    sample_with_offset(component, component_index, npts, fit_offset(component))
}

pub(crate) fn point_segment_distance(z: Complex64, a: Complex64, b: Complex64) -> f64 {
    let ab = b - a;
    let len2 = ab.norm_sqr();
    if len2 == 0.0 {
        return (z - a).norm();
    }
    let t = ((z - a) * ab.conj()).re / len2;
    let t = t.clamp(0.0, 1.0);
    (z - (a + ab * t)).norm()
}

fn cross(a: Complex64, b: Complex64) -> f64 {
    a.re * b.im - a.im * b.re
}

/// Closed segments `[p1, p2]` and `[q1, q2]` share at least one point.
pub(crate) fn segments_touch(p1: Complex64, p2: Complex64, q1: Complex64, q2: Complex64) -> bool {
    let d1 = cross(q2 - q1, p1 - q1);
    let d2 = cross(q2 - q1, p2 - q1);
    let d3 = cross(p2 - p1, q1 - p1);
    let d4 = cross(p2 - p1, q2 - p1);
    if ((d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0))
        && ((d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0))
    {
        return true;
    }
    point_segment_distance(p1, q1, q2) == 0.0
        || point_segment_distance(p2, q1, q2) == 0.0
        || point_segment_distance(q1, p1, p2) == 0.0
        || point_segment_distance(q2, p1, p2) == 0.0
}
