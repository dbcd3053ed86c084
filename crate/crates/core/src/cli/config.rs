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

//! JSON problem configurations.

use std::path::Path;

use num_complex::Complex64;
use serde::{Deserialize, Deserializer, Serialize};

use crate::basis::ExpansionSpec;
use crate::error::{Error, Result};
use crate::field::Window;
use crate::geometry::BoundaryComponent;
use crate::solver::{BoundaryData, DomainKind, Problem};

/// Series degree used when a config gives none.
pub const DEFAULT_DEGREE: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DomainName {
    #[default]
    Exterior,
    Bounded,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum KindName {
    Disk,
    Slit,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RoleName {
    #[default]
    Inner,
    Outer,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComponentConfig {
    pub kind: KindName,
    pub center: [f64; 2],
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub radius: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub halfspan: Option<[f64; 2]>,
    /// Boundary value of `u`.
    #[serde(default)]
    pub value: f64,
    #[serde(default)]
    pub role: RoleName,
}

/// A single value for every component or one per component.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PerComponent {
    All(usize),
    Each(Vec<usize>),
}

impl PerComponent {
    fn expand(&self, n: usize, field: &str) -> Result<Vec<usize>> {
        match self {
            Self::All(v) => Ok(vec![*v; n]),
            Self::Each(v) if v.len() == n => Ok(v.clone()),
            Self::Each(v) => Err(Error::Config(format!(
                "`{field}` lists {} values for {n} components",
                v.len()
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StreamlineConfig {
    pub count: usize,
    pub eps: f64,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputConfig {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub report: Option<String>,
    /// Equipotentials; streamlines go to `<stem>.streamlines.csv` beside it.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub csv: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub svg: Option<String>,
}

/// The on-disk problem description.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemConfig {
    #[serde(default)]
    pub domain: DomainName,
    /// Absent: the origin for exterior problems, none for bounded ones.
    /// `null`: no source.
    #[serde(default, deserialize_with = "present", skip_serializing_if = "Option::is_none")]
    pub source: Option<Option<[f64; 2]>>,
    pub components: Vec<ComponentConfig>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<PerComponent>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub npts: Option<PerComponent>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub scaled: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub window: Option<[f64; 4]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub levels: Option<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub streamlines: Option<StreamlineConfig>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub outputs: Option<OutputConfig>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eval: Option<Vec<[f64; 2]>>,
}

fn present<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Option<Option<[f64; 2]>>, D::Error> {
    Option::<[f64; 2]>::deserialize(d).map(Some)
}

fn cplx(p: [f64; 2]) -> Complex64 {
    Complex64::new(p[0], p[1])
}

/// A validated configuration ready to solve.
#[derive(Debug, Clone)]
pub struct Parsed {
    pub problem: Problem,
    pub spec: ExpansionSpec,
    /// `None` means the library default per component.
    pub npts: Option<Vec<usize>>,
    pub config: ProblemConfig,
}

impl Parsed {
    pub fn window(&self) -> Result<Window> {
        match self.config.window {
            Some([x0, x1, y0, y1]) => {
                Window::new(x0, x1, y0, y1).map_err(|e| Error::Config(format!("`window`: {e}")))
            }
            None => Ok(Window::around(&self.problem)),
        }
    }

    pub fn eval_points(&self) -> Vec<Complex64> {
        self.config.eval.iter().flatten().copied().map(cplx).collect()
    }
}

impl ProblemConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Config(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("config serializes")
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
            path: path.to_path_buf(),
            source,
        })?;
        Self::from_json(&text).map_err(|e| match e {
            Error::Config(msg) => Error::Config(format!("{}: {msg}", path.display())),
            other => other,
        })
    }

    fn component(&self, j: usize) -> Result<BoundaryComponent> {
        let c = &self.components[j];
        let field = |name: &str| format!("components[{j}].{name}");
        let center = cplx(c.center);
        let comp = match c.kind {
            KindName::Disk => {
                if c.halfspan.is_some() {
                    return Err(Error::Config(format!("{}: a disk takes `radius`", field("halfspan"))));
                }
                let r = c.radius.ok_or_else(|| Error::Config(format!("{} is required", field("radius"))))?;
                BoundaryComponent::disk(center, r)
            }
            KindName::Slit => {
                if c.radius.is_some() {
                    return Err(Error::Config(format!("{}: a slit takes `halfspan`", field("radius"))));
                }
                let r = c.halfspan.ok_or_else(|| Error::Config(format!("{} is required", field("halfspan"))))?;
                BoundaryComponent::slit(center, cplx(r))
            }
        }
        .map_err(|e| Error::Config(format!("components[{j}]: {e}")))?;
        match c.role {
            RoleName::Inner => Ok(comp),
            RoleName::Outer => comp
                .into_outer()
                .map_err(|e| Error::Config(format!("{}: {e}", field("role")))),
        }
    }

    /// Validates the configuration and applies defaults.
    pub fn build(&self) -> Result<Parsed> {
        let components = (0..self.components.len())
            .map(|j| self.component(j))
            .collect::<Result<Vec<_>>>()?;
        let data = self.components.iter().map(|c| BoundaryData::Constant(c.value)).collect();
        let (domain, source) = match self.domain {
            DomainName::Exterior => (DomainKind::ExteriorUnbounded, self.source.unwrap_or(Some([0.0, 0.0]))),
            DomainName::Bounded => (DomainKind::Bounded, self.source.flatten()),
        };
        let problem = Problem::new(domain, components, data, source.map(cplx))?;

        let n = self.components.len();
        let degrees = match &self.degree {
            Some(d) => d.expand(n, "degree")?,
            None => vec![DEFAULT_DEGREE; n],
        };
        let mut spec = ExpansionSpec::uniform(&problem, 0);
        spec.outer_degree = problem
            .components()
            .iter()
            .position(|c| c.role == crate::geometry::Role::Outer)
            .map_or(0, |j| degrees[j]);
        spec.degrees = degrees;
        spec.scaled = self.scaled.unwrap_or(true);
        let npts = self.npts.as_ref().map(|p| p.expand(n, "npts")).transpose()?;
        let parsed = Parsed {
            problem,
            spec,
            npts,
            config: self.clone(),
        };
        parsed.window()?;
        if let Some(s) = &self.streamlines {
            if s.count == 0 || !(s.eps > 0.0) {
                return Err(Error::Config("`streamlines` needs count >= 1 and eps > 0".into()));
            }
        }
        Ok(parsed)
    }
}

/// Parses and validates a JSON configuration.
pub fn parse_problem_config(text: &str) -> Result<Parsed> {
    ProblemConfig::from_json(text)?.build()
}

#[cfg(test)]
mod tests {
    use super::*;

    const DISK1: &str = r#"{ "components": [ { "kind": "disk", "center": [3, 1], "radius": 1 } ] }"#;

    #[test]
    fn minimal_green_config() {
        let p = parse_problem_config(DISK1).unwrap();
        assert_eq!(p.problem.components().len(), 1);
        assert_eq!(p.spec.degrees, vec![10]);
        assert!(p.spec.scaled);
        assert_eq!(p.problem.source(), Some(Complex64::new(0.0, 0.0)));
        assert!(p.problem.is_green());
        assert_eq!(p.problem.default_npts(&p.spec), vec![80]);
    }

    #[test]
    fn unknown_key_is_named() {
        let text = r#"{ "components": [ { "kind": "disk", "center": [3, 1], "radiusss": 1 } ] }"#;
        let err = parse_problem_config(text).unwrap_err().to_string();
        assert!(err.contains("radiusss"), "{err}");
        assert!(err.contains("line 1"), "{err}");
    }

    #[test]
    fn overlapping_disks_name_both() {
        let text = r#"{ "components": [
            { "kind": "disk", "center": [0, 3], "radius": 1 },
            { "kind": "disk", "center": [1, 3], "radius": 1 } ] }"#;
        let err = parse_problem_config(text).unwrap_err();
        assert!(matches!(err, Error::Geometry(_)));
        let msg = err.to_string();
        assert!(msg.contains('0') && msg.contains('1'), "{msg}");
    }

    #[test]
    fn missing_radius_is_named() {
        let text = r#"{ "components": [ { "kind": "disk", "center": [3, 1] } ] }"#;
        let err = parse_problem_config(text).unwrap_err().to_string();
        assert!(err.contains("components[0].radius"), "{err}");
        let text = r#"{ "components": [ { "kind": "disk", "center": [3, 1], "radius": 1 } ], "degree": [1, 2] }"#;
        assert!(parse_problem_config(text).unwrap_err().to_string().contains("degree"));
    }

    #[test]
    fn bounded_annulus() {
        let text = r#"{ "domain": "bounded", "components": [
            { "kind": "disk", "center": [0, 0], "radius": 2, "role": "outer" },
            { "kind": "disk", "center": [0, 0], "radius": 1, "value": 1 } ], "degree": [6, 4] }"#;
        let p = parse_problem_config(text).unwrap();
        assert_eq!(p.problem.source(), None);
        assert_eq!(p.spec.outer_degree, 6);
        assert_eq!(p.spec.degree_of(p.problem.components(), 1), 4);
    }

    #[test]
    fn explicit_null_source() {
        let text = r#"{ "source": null, "components": [ { "kind": "slit", "center": [0, 0], "halfspan": [1, 0], "value": 1 } ] }"#;
        let p = parse_problem_config(text).unwrap();
        assert_eq!(p.problem.source(), None);
        let back = ProblemConfig::from_json(&p.config.to_json()).unwrap();
        assert_eq!(back, p.config);
    }

    #[test]
    fn round_trip() {
        let text = r#"{ "domain": "exterior", "source": [0.5, 0], "scaled": false,
            "components": [ { "kind": "slit", "center": [3, 0], "halfspan": [1, -0.5] },
                            { "kind": "disk", "center": [-3, 0], "radius": 0.5, "value": -1 } ],
            "degree": [8, 6], "npts": 64, "window": [-5, 5, -4, 4], "levels": [-0.5, -0.25],
            "streamlines": { "count": 16, "eps": 0.01 },
            "outputs": { "report": "r.json", "csv": "f.csv", "svg": "f.svg" }, "eval": [[2, 0]] }"#;
        let cfg = ProblemConfig::from_json(text).unwrap();
        let again = ProblemConfig::from_json(&cfg.to_json()).unwrap();
        assert_eq!(cfg, again);
        let (a, b) = (cfg.build().unwrap(), again.build().unwrap());
        assert_eq!(a.spec, b.spec);
        assert_eq!(a.npts, Some(vec![64, 64]));
        assert_eq!(a.problem.components(), b.problem.components());
    }
}
