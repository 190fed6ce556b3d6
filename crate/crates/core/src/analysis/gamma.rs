use num_complex::Complex64;
use serde::Serialize;

use crate::elliptic::wp_jet;
use crate::error::{Error, Result};
use crate::moduli::MonopoleModuli;
use crate::nullcurve::{immerse, phi_null, SurfaceSample};
use crate::vec3::{scale, Vec3};

use super::branch::branch_points;

/// The pointed star `Γ = φ(H_{1/4} ∪ V_{1/4} ∪ V_{3/4})` joining the six
/// branch points.
#[derive(Debug, Clone, Serialize)]
pub struct GammaGraph {
    /// `φ(H_{1/4})`, `u = x + ω2/4` for `x ∈ [0, ω1]`; `4n + 1` samples.
    pub star_polyline: Vec<SurfaceSample>,
    /// `φ(V_{1/4})` and `φ(V_{3/4})`, `u = aω1 + iy` for `y ∈ [0, |ω2|]`.
    pub higgs_polylines: [Vec<SurfaceSample>; 2],
    /// `[β1, −β1, β2, −β2, β3, −β3]`.
    pub branch_pts: [Vec3; 6],
    pub samples_per_segment: usize,
}

impl GammaGraph {
    /// Star samples at `x = 0, ω1/4, ω1/2, 3ω1/4`, the images of the
    /// quarter-period points on `H_{1/4}`.
    pub fn star_vertices(&self) -> [Vec3; 4] {
        let n = self.samples_per_segment;
        [0, n, 2 * n, 3 * n].map(|i| self.star_polyline[i].pos)
    }

    /// `φ(V1)`, the first quarter of `V_{1/4}` (from `ω1/4` to `ω3/4`).
    pub fn higgs_first_quarter(&self) -> &[SurfaceSample] {
        &self.higgs_polylines[0][..=self.samples_per_segment]
    }
}

/// Samples `Γ` with `samples_per_segment` steps per quarter period.
pub fn gamma_graph(moduli: &MonopoleModuli, samples_per_segment: usize) -> Result<GammaGraph> {
    if samples_per_segment < 16 {
        return Err(Error::Domain {
            what: "samples_per_segment",
            value: samples_per_segment as f64,
            range: ">= 16".into(),
        });
    }
    let n = samples_per_segment;
    let w1 = moduli.omega1();
    let w2 = moduli.lattice.omega2_mag;
    let steps = 4 * n;

    let star = (0..=steps)
        .map(|j| {
            let x = w1 * j as f64 / steps as f64;
            immerse(Complex64::new(x, w2 / 4.0), moduli)
        })
        .collect::<Result<Vec<_>>>()?;
    let vertical = |a: f64| {
        (0..=steps)
            .map(|j| {
                let y = w2 * j as f64 / steps as f64;
                immerse(Complex64::new(a * w1, y), moduli)
            })
            .collect::<Result<Vec<_>>>()
    };
    let higgs = [vertical(0.25)?, vertical(0.75)?];

    let [b1, b2, b3] = branch_points(moduli);
    Ok(GammaGraph {
        star_polyline: star,
        higgs_polylines: higgs,
        branch_pts: [b1, scale(b1, -1.0), b2, scale(b2, -1.0), b3, scale(b3, -1.0)],
        samples_per_segment,
    })
}

/// `dφ3/dφ2 = Re Φ3'(u) / Re Φ2'(u)` along `H_{1/4}`.
pub fn star_slope(u: Complex64, moduli: &MonopoleModuli) -> Result<f64> {
    let d = phi_null(u, moduli)?.dphi;
    Ok(d[2].re / d[1].re)
}

/// `−(1/k') √((e3 − ℘(2u)) / (℘(2u) − e2))`, valid for `u` on the first
/// quarter of `H_{1/4}`.
pub fn star_slope_closed_form(u: Complex64, moduli: &MonopoleModuli) -> Result<f64> {
    let l = &moduli.lattice;
    let p = wp_jet(2.0 * u, l)?.p.re;
    Ok(-((l.e3 - p) / (p - l.e2)).sqrt() / moduli.k_prime)
}
