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

//! Static SVG figures.

use std::fmt::Write as _;

use crate::field::{Polyline, PolylineKind, Window};
use crate::geometry::{BoundaryComponent, ComponentKind};

const WIDTH: f64 = 800.0;

fn num(x: f64) -> String {
    let s = format!("{x:.6}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" { "0".into() } else { s.into() }
}

/// Renders polylines and component outlines over `window`, y pointing up,
/// with equal scales on both axes. Identical input gives identical bytes.
pub fn emit_svg(polylines: &[Polyline], components: &[BoundaryComponent], window: Window) -> String {
    let (w, h) = (window.width(), window.height());
    let height = WIDTH * h / w;
    let stroke = 1.5 * w / WIDTH;
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{}" height="{}" viewBox="{} {} {} {}" preserveAspectRatio="xMidYMid meet">"#,
        num(WIDTH),
        num(height),
        num(window.x0),
        num(-window.y1),
        num(w),
        num(h)
    );
    let _ = writeln!(out, r#"<rect x="{}" y="{}" width="{}" height="{}" fill="white"/>"#, num(window.x0), num(-window.y1), num(w), num(h));
    let _ = writeln!(out, r#"<g fill="none" stroke-width="{}" stroke-linejoin="round">"#, num(stroke));
    for line in polylines {
        let color = match line.kind {
            PolylineKind::Equipotential { .. } => "#1f4e9c",
            PolylineKind::Streamline { .. } => "#c0392b",
        };
        let mut d = String::new();
        for (i, p) in line.points.iter().enumerate() {
            let _ = write!(d, "{}{} {}", if i == 0 { "M" } else { " L" }, num(p.re), num(-p.im));
        }
        let _ = writeln!(out, r#"<path stroke="{color}" d="{d}"/>"#);
    }
    out.push_str("</g>\n");
    let _ = writeln!(out, r##"<g fill="#555555" stroke="black" stroke-width="{}">"##, num(2.0 * stroke));
    for c in components {
        match c.kind {
            ComponentKind::Disk { radius } => {
                let _ = writeln!(
                    out,
                    r#"<circle cx="{}" cy="{}" r="{}"{}/>"#,
                    num(c.center.re),
                    num(-c.center.im),
                    num(radius),
                    if c.role == crate::geometry::Role::Outer { r#" fill="none""# } else { "" }
                );
            }
            ComponentKind::Slit { .. } => {
                let (a, b) = c.endpoints().expect("slit endpoints");
                let _ = writeln!(out, r#"<line x1="{}" y1="{}" x2="{}" y2="{}"/>"#, num(a.re), num(-a.im), num(b.re), num(-b.im));
            }
        }
    }
    out.push_str("</g>\n</svg>\n");
    out
}
