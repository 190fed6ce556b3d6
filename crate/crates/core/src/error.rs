use std::path::PathBuf;

use num_complex::Complex64;

/// Errors produced by evaluation, analysis and export.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("{what} = {value} outside admissible range {range}")]
    Domain {
        what: &'static str,
        value: f64,
        range: String,
    },

    #[error("u = {u} lies within {radius:e} of a pole at {pole}")]
    PoleProximity {
        u: Complex64,
        pole: Complex64,
        radius: f64,
    },

    #[error("degenerate point u = {u}: {reason}")]
    Degenerate { u: Complex64, reason: &'static str },

    #[error("sampling too coarse: consecutive normals differ by {angle:.3} rad")]
    SamplingTooCoarse { angle: f64 },

    #[error("invalid patch specification: {0}")]
    InvalidPatch(String),

    #[error("mesh is empty after end exclusion")]
    EmptyMesh,

    #[error("failed to write {path}: {source}")]
    Write {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
