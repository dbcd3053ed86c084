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

use std::path::PathBuf;

/// Errors produced while building, solving, or post-processing a problem.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A point lies where a map or expansion cannot be evaluated.
    #[error("domain error: {0}")]
    Domain(String),
    /// An argument is out of range or malformed.
    #[error("argument error: {0}")]
    Argument(String),
    /// Boundary components are inconsistent with each other or the source.
    #[error("geometry error: {0}")]
    Geometry(String),
    /// A configuration document could not be parsed or validated.
    #[error("config error: {0}")]
    Config(String),
    #[error("i/o error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}

pub(crate) fn argument(msg: impl Into<String>) -> Error {
    Error::Argument(msg.into())
}

pub(crate) fn geometry(msg: impl Into<String>) -> Error {
    Error::Geometry(msg.into())
}
