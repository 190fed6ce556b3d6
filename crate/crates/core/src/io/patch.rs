use std::collections::BTreeSet;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::moduli::MonopoleModuli;
use crate::nullcurve::{immerse, SurfaceSample};

/// How the ranges of a [`PatchSpec`] are read.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Units {
    /// Multiples of `ω1` (real part) and `|ω2|` (imaginary part).
    Period,
    /// Raw `u`-plane coordinates.
    Absolute,
}

/// Per-vertex quantities a mesh should carry into its export.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Field {
    Position,
    Normal,
    G,
    K,
    Lambda,
}

impl Field {
    pub const ALL: [Field; 5] = [Field::Position, Field::Normal, Field::G, Field::K, Field::Lambda];
}

/// A rectangular patch of the `u`-plane to be sampled on a regular grid.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PatchSpec {
    pub k: f64,
    pub x_min: f64,
    pub x_max: f64,
    pub y_min: f64,
    pub y_max: f64,
    pub nx: usize,
    pub ny: usize,
    /// Absolute radius around the ends `(ω1/2)Z + (ω2/2)Z` inside which
    /// vertices are dropped. `None` means `0.02 ω1`.
    pub exclusion_radius: Option<f64>,
    pub fields: BTreeSet<Field>,
    pub units: Units,
}

/// Named figure domains.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FigurePreset {
    /// `k = 0.01`, `0 ≤ x ≤ ω1`, `|ω2|/4 − 0.05 ≤ y ≤ |ω2|/4 + 0.05`: the
    /// surface near the star polyline.
    Fig1,
    /// `k = 0.999`, `ω1/4 − 0.025 ≤ x ≤ ω1/4 + 0.025`, `0 ≤ y ≤ |ω2|/2`:
    /// the surface near the Higgs axis.
    Fig2,
}

impl FigurePreset {
    pub fn k(self) -> f64 {
        match self {
            FigurePreset::Fig1 => 0.01,
            FigurePreset::Fig2 => 0.999,
        }
    }

    /// The preset domain in absolute units at resolution `nx × ny`.
    pub fn spec(self, nx: usize, ny: usize) -> Result<PatchSpec> {
        let m = MonopoleModuli::new(self.k())?;
        let (w1, w2) = (m.omega1(), m.lattice.omega2_mag);
        let (x, y) = match self {
            FigurePreset::Fig1 => ((0.0, w1), (w2 / 4.0 - 0.05, w2 / 4.0 + 0.05)),
            FigurePreset::Fig2 => ((w1 / 4.0 - 0.025, w1 / 4.0 + 0.025), (0.0, w2 / 2.0)),
        };
        Ok(PatchSpec {
            k: self.k(),
            x_min: x.0,
            x_max: x.1,
            y_min: y.0,
            y_max: y.1,
            nx,
            ny,
            exclusion_radius: None,
            fields: Field::ALL.into_iter().collect(),
            units: Units::Absolute,
        })
    }
}

impl PatchSpec {
    /// A patch with every field requested and the default exclusion.
    pub fn new(k: f64, x: (f64, f64), y: (f64, f64), nx: usize, ny: usize, units: Units) -> Self {
        PatchSpec {
            k,
            x_min: x.0,
            x_max: x.1,
            y_min: y.0,
            y_max: y.1,
            nx,
            ny,
            exclusion_radius: None,
            fields: Field::ALL.into_iter().collect(),
            units,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidPatch(msg));
        if self.nx < 2 || self.ny < 2 {
            return bad(format!("resolution {}x{} below 2x2", self.nx, self.ny));
        }
        let finite = [self.x_min, self.x_max, self.y_min, self.y_max]
            .iter()
            .all(|v| v.is_finite());
        if !finite || self.x_min >= self.x_max || self.y_min >= self.y_max {
            return bad(format!(
                "empty or non-finite domain [{}, {}] x [{}, {}]",
                self.x_min, self.x_max, self.y_min, self.y_max
            ));
        }
        if let Some(r) = self.exclusion_radius {
            if !r.is_finite() || r < 0.0 {
                return bad(format!("exclusion radius {r} must be finite and >= 0"));
            }
        }
        Ok(())
    }

    /// `[x_min, x_max, y_min, y_max]` in raw `u`-plane units.
    pub fn absolute_domain(&self, moduli: &MonopoleModuli) -> [f64; 4] {
        let (sx, sy) = match self.units {
            Units::Period => (moduli.omega1(), moduli.lattice.omega2_mag),
            Units::Absolute => (1.0, 1.0),
        };
        [self.x_min * sx, self.x_max * sx, self.y_min * sy, self.y_max * sy]
    }

    pub fn exclusion(&self, moduli: &MonopoleModuli) -> f64 {
        self.exclusion_radius.unwrap_or(0.02 * moduli.omega1())
    }
}

/// Provenance of a sampled mesh.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MeshMetadata {
    pub k: f64,
    /// Absolute `[x_min, x_max, y_min, y_max]`.
    pub domain: [f64; 4],
    pub nx: usize,
    pub ny: usize,
    pub exclusion_radius: f64,
    pub excluded: usize,
    pub fields: BTreeSet<Field>,
}

/// A triangulated grid of surface samples with holes around the ends.
#[derive(Debug, Clone, Serialize)]
pub struct SurfaceMesh {
    pub vertices: Vec<SurfaceSample>,
    pub faces: Vec<[usize; 3]>,
    pub metadata: MeshMetadata,
}

/// Distance from `u` to the nearest end `(ω1/2)m + (ω2/2)n`.
pub fn distance_to_ends(u: Complex64, moduli: &MonopoleModuli) -> f64 {
    let hx = moduli.omega1() / 2.0;
    let hy = moduli.lattice.omega2_mag / 2.0;
    let dx = u.re - (u.re / hx).round() * hx;
    let dy = u.im - (u.im / hy).round() * hy;
    dx.hypot(dy)
}

fn finite_sample(s: &SurfaceSample) -> bool {
    s.pos.iter().chain(s.normal.iter()).all(|v| v.is_finite())
        && s.lambda.is_finite()
        && s.g_density.is_finite()
        && s.gauss_curv.is_finite()
}

/// Samples `spec` on its regular grid and triangulates the surviving
/// vertices.
///
/// Vertices closer than the exclusion radius to an end, and vertices whose
/// evaluation fails or is not finite, are dropped along with every face
/// that touches them. Each grid cell contributes the triangles
/// `(00, 10, 11)` and `(00, 11, 01)`.
pub fn sample_patch(spec: &PatchSpec, moduli: &MonopoleModuli) -> Result<SurfaceMesh> {
    spec.validate()?;
    if (spec.k - moduli.k).abs() > 1e-15 * spec.k.abs().max(1.0) {
        return Err(Error::InvalidPatch(format!(
            "patch k = {} does not match moduli k = {}",
            spec.k, moduli.k
        )));
    }
    let domain = spec.absolute_domain(moduli);
    let radius = spec.exclusion(moduli);
    let (nx, ny) = (spec.nx, spec.ny);
    let hx = (domain[1] - domain[0]) / (nx - 1) as f64;
    let hy = (domain[3] - domain[2]) / (ny - 1) as f64;

    let grid: Vec<Option<SurfaceSample>> = (0..ny)
        .into_par_iter()
        .flat_map_iter(|j| {
            let y = domain[2] + j as f64 * hy;
            (0..nx).map(move |i| {
                let u = Complex64::new(domain[0] + i as f64 * hx, y);
                if distance_to_ends(u, moduli) <= radius {
                    return None;
                }
                immerse(u, moduli).ok().filter(finite_sample)
            })
        })
        .collect();

    let mut index = vec![usize::MAX; grid.len()];
    let mut vertices = Vec::with_capacity(grid.len());
    for (slot, s) in grid.iter().enumerate() {
        if let Some(s) = s {
            index[slot] = vertices.len();
            vertices.push(*s);
        }
    }
    if vertices.is_empty() {
        return Err(Error::EmptyMesh);
    }

    let at = |i: usize, j: usize| index[j * nx + i];
    let mut faces = Vec::with_capacity(2 * (nx - 1) * (ny - 1));
    for j in 0..ny - 1 {
        for i in 0..nx - 1 {
            let (a, b, c, d) = (at(i, j), at(i + 1, j), at(i + 1, j + 1), at(i, j + 1));
            for tri in [[a, b, c], [a, c, d]] {
                if tri.iter().all(|&v| v != usize::MAX) {
                    faces.push(tri);
                }
            }
        }
    }

    Ok(SurfaceMesh {
        metadata: MeshMetadata {
            k: moduli.k,
            domain,
            nx,
            ny,
            exclusion_radius: radius,
            excluded: grid.len() - vertices.len(),
            fields: spec.fields.clone(),
        },
        vertices,
        faces,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_by_two_is_two_triangles() {
        let m = MonopoleModuli::new(0.5).unwrap();
        let spec = PatchSpec::new(0.5, (0.2, 0.3), (0.2, 0.3), 2, 2, Units::Period);
        let mesh = sample_patch(&spec, &m).unwrap();
        assert_eq!(mesh.vertices.len(), 4);
        assert_eq!(mesh.faces, vec![[0, 1, 3], [0, 3, 2]]);
    }

    #[test]
    fn ends_are_cut_out() {
        let m = MonopoleModuli::new(0.5).unwrap();
        let spec = PatchSpec::new(0.5, (0.0, 1.0), (0.0, 1.0), 21, 21, Units::Period);
        let mesh = sample_patch(&spec, &m).unwrap();
        // the grid hits the nine ends of the closed rectangle exactly
        assert_eq!(mesh.metadata.excluded, 9);
        assert_eq!(mesh.vertices.len(), 21 * 21 - 9);
        assert!(mesh.faces.iter().flatten().all(|&v| v < mesh.vertices.len()));
        for v in &mesh.vertices {
            assert!(distance_to_ends(v.u, &m) > mesh.metadata.exclusion_radius);
        }
    }

    #[test]
    fn everything_excluded_is_an_error() {
        let m = MonopoleModuli::new(0.5).unwrap();
        let mut spec = PatchSpec::new(0.5, (0.0, 0.01), (0.0, 0.01), 3, 3, Units::Period);
        spec.exclusion_radius = Some(1.0);
        assert!(matches!(sample_patch(&spec, &m), Err(Error::EmptyMesh)));
    }

    #[test]
    fn rejects_bad_specs() {
        let m = MonopoleModuli::new(0.5).unwrap();
        let spec = PatchSpec::new(0.5, (0.3, 0.2), (0.2, 0.3), 4, 4, Units::Period);
        assert!(matches!(sample_patch(&spec, &m), Err(Error::InvalidPatch(_))));
        let spec = PatchSpec::new(0.5, (0.2, 0.3), (0.2, 0.3), 1, 4, Units::Period);
        assert!(matches!(sample_patch(&spec, &m), Err(Error::InvalidPatch(_))));
        let spec = PatchSpec::new(0.4, (0.2, 0.3), (0.2, 0.3), 4, 4, Units::Period);
        assert!(matches!(sample_patch(&spec, &m), Err(Error::InvalidPatch(_))));
    }
}
