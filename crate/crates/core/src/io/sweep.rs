use std::f64::consts::PI;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::Serialize;

use crate::analysis::{branch_points, gamma_graph, quarter_point_densities, total_curvature};
use crate::error::{Error, Result};
use crate::moduli::MonopoleModuli;
use crate::vec3;

use super::export::{export_mesh, num, write_with, MeshFormat};
use super::patch::{sample_patch, PatchSpec, Units};

/// Which part of the surface a sweep meshes, in period units.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepPreset {
    /// A band around `H_{1/4}`: `x ∈ [0, 1]`, `y ∈ [0.2, 0.3]`.
    Star,
    /// A band around `V_{1/4}`: `x ∈ [0.2, 0.3]`, `y ∈ [0, 0.5]`.
    Higgs,
    /// The whole period rectangle.
    Full,
}

impl SweepPreset {
    pub fn patch(self, k: f64, nx: usize, ny: usize) -> PatchSpec {
        let (x, y) = match self {
            SweepPreset::Star => ((0.0, 1.0), (0.2, 0.3)),
            SweepPreset::Higgs => ((0.2, 0.3), (0.0, 0.5)),
            SweepPreset::Full => ((0.0, 1.0), (0.0, 1.0)),
        };
        PatchSpec::new(k, x, y, nx, ny, Units::Period)
    }
}

impl FromStr for SweepPreset {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "star" => Ok(SweepPreset::Star),
            "higgs" => Ok(SweepPreset::Higgs),
            "full" => Ok(SweepPreset::Full),
            other => Err(format!("unknown preset `{other}` (expected star, higgs or full)")),
        }
    }
}

/// Mesh format and resolution used by [`sweep_with`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepOptions {
    pub format: MeshFormat,
    pub nx: usize,
    pub ny: usize,
    pub curvature_grid: usize,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions {
            format: MeshFormat::Obj,
            nx: 96,
            ny: 48,
            curvature_grid: 128,
        }
    }
}

/// One line of `summary.csv`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepRow {
    pub k: f64,
    /// Higgs coordinate of `β1`, third coordinate of `β2`, Higgs coordinate
    /// of `β3`.
    pub beta: [f64; 3],
    /// `G` at `ω1/4`, `ω2/4`, `ω3/4`.
    pub g_quarter: [f64; 3],
    pub total_curvature: f64,
    /// Largest distance from the origin along the sampled star polyline.
    pub star_extent: f64,
    pub mesh_file: PathBuf,
}

pub const SUMMARY_HEADER: &str =
    "k,beta1,beta2,beta3,G_q1,G_q2,G_q3,total_curvature,star_extent,mesh_file";

/// File name used for the mesh of modulus `k`.
pub fn mesh_file_name(k: f64, format: MeshFormat) -> String {
    format!("surface_k{k}.{}", format.extension())
}

/// [`sweep_with`] with default options (OBJ meshes).
pub fn sweep(k_values: &[f64], preset: SweepPreset, out_dir: impl AsRef<Path>) -> Result<Vec<SweepRow>> {
    sweep_with(k_values, preset, out_dir, &SweepOptions::default())
}

/// Meshes `preset` for each `k`, writing `surface_k{k}.{ext}` into
/// `out_dir`, and summarises branch points, quarter-period densities and
/// total curvature in `summary.csv`.
pub fn sweep_with(
    k_values: &[f64],
    preset: SweepPreset,
    out_dir: impl AsRef<Path>,
    options: &SweepOptions,
) -> Result<Vec<SweepRow>> {
    let out_dir = out_dir.as_ref();
    let moduli = k_values
        .iter()
        .map(|&k| MonopoleModuli::new(k))
        .collect::<Result<Vec<_>>>()?;
    std::fs::create_dir_all(out_dir).map_err(|source| Error::Write {
        path: out_dir.to_path_buf(),
        source,
    })?;

    let mut rows = Vec::with_capacity(moduli.len());
    for m in &moduli {
        let spec = preset.patch(m.k, options.nx, options.ny);
        let mesh = sample_patch(&spec, m)?;
        let file = out_dir.join(mesh_file_name(m.k, options.format));
        export_mesh(&mesh, options.format, &file)?;

        let b = branch_points(m);
        let star = gamma_graph(m, 16)?;
        let star_extent = star
            .star_polyline
            .iter()
            .map(|s| vec3::norm(s.pos))
            .fold(0.0, f64::max);
        rows.push(SweepRow {
            k: m.k,
            beta: [b[0][1], b[1][2], b[2][1]],
            g_quarter: quarter_point_densities(m)?,
            total_curvature: total_curvature(m, options.curvature_grid)?,
            star_extent,
            mesh_file: file,
        });
    }

    let summary = out_dir.join("summary.csv");
    write_with(&summary, |w| {
        writeln!(w, "{SUMMARY_HEADER}")?;
        for r in &rows {
            let name = r.mesh_file.file_name().map(|n| n.to_string_lossy()).unwrap_or_default();
            let nums: Vec<String> = [r.k]
                .into_iter()
                .chain(r.beta)
                .chain(r.g_quarter)
                .chain([r.total_curvature, r.star_extent])
                .map(num)
                .collect();
            writeln!(w, "{},{name}", nums.join(","))?;
        }
        Ok(())
    })?;
    Ok(rows)
}

/// `8π`, the total curvature density over a period rectangle.
pub const TOTAL_CURVATURE: f64 = 8.0 * PI;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_moduli_three_meshes() {
        let dir = tempfile::tempdir().unwrap();
        let opts = SweepOptions {
            nx: 24,
            ny: 8,
            curvature_grid: 32,
            ..SweepOptions::default()
        };
        let rows = sweep_with(&[0.2, 0.4, 0.6], SweepPreset::Star, dir.path(), &opts).unwrap();
        for k in ["0.2", "0.4", "0.6"] {
            assert!(dir.path().join(format!("surface_k{k}.obj")).is_file());
        }
        let text = std::fs::read_to_string(dir.path().join("summary.csv")).unwrap();
        assert_eq!(text.lines().count(), 4);
        // the star shrinks as k decreases
        assert!(rows[0].star_extent < rows[1].star_extent);
        assert!(rows[1].star_extent < rows[2].star_extent);
        for r in &rows {
            assert!((r.total_curvature / TOTAL_CURVATURE - 1.0).abs() < 1e-6);
        }
    }

    #[test]
    fn invalid_modulus_writes_nothing() {
        let dir = tempfile::tempdir().unwrap();
        let out = dir.path().join("sub");
        assert!(sweep(&[0.3, 1.5], SweepPreset::Full, &out).is_err());
        assert!(!out.exists());
    }
}
