//! Grid sampling, mesh and table export, the verification runner and the
//! modulus sweep.

mod export;
mod patch;
mod sweep;
mod tables;
mod verify;

pub use export::{export_mesh, MeshFormat, CSV_HEADER};
pub use patch::{
    distance_to_ends, sample_patch, Field, FigurePreset, MeshMetadata, PatchSpec, SurfaceMesh, Units,
};
pub use sweep::{
    mesh_file_name, sweep, sweep_with, SweepOptions, SweepPreset, SweepRow, SUMMARY_HEADER,
    TOTAL_CURVATURE,
};
pub use tables::{
    curvature_map, spectral_line_samples, write_curvature_map, write_spectral_lines,
    SpectralSample,
};
pub use verify::{
    run_verification, run_verification_with, spread_points, CheckRecord, Tolerances,
    VerificationReport,
};
