use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::moduli::{spectral_eta, uniformize, MonopoleModuli};
use crate::nullcurve::{
    frame_transform_real, immerse, inverse_stereographic, Extended, FrameDirection,
};
use crate::vec3::{self, Vec3};

/// An oriented line in ℝ³.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OrientedLine {
    /// Anchor point; for spectral lines the point closest to the origin.
    pub point: Vec3,
    /// Unit direction.
    pub direction: Vec3,
}

fn det3(a: [Vec3; 3]) -> f64 {
    vec3::dot(a[0], vec3::cross(a[1], a[2]))
}

/// The line of all `x ∈ ℝ³` (standard coordinates) with
/// `(x1 + i x2) − 2 x3 ζ − (x1 − i x2) ζ² = η`, oriented by the inverse
/// stereographic image of `ζ`.
pub fn spectral_line(zeta: Complex64, eta: Complex64) -> OrientedLine {
    let direction = inverse_stereographic(Extended::Finite(zeta));
    // σ_x(ζ) = h(ζ)·x with h = (1 − ζ², i(1 + ζ²), −2ζ)
    let h = [1.0 - zeta * zeta, Complex64::i() * (1.0 + zeta * zeta), -2.0 * zeta];
    let rows = [
        [h[0].re, h[1].re, h[2].re],
        [h[0].im, h[1].im, h[2].im],
        direction,
    ];
    let rhs = [eta.re, eta.im, 0.0];
    let det = det3(rows);
    // Cramer's rule on the columns
    let col = |c: usize| -> f64 {
        let mut m = rows;
        for r in 0..3 {
            m[r][c] = rhs[r];
        }
        det3(m) / det
    };
    OrientedLine {
        point: [col(0), col(1), col(2)],
        direction,
    }
}

/// Shortest distance between two lines; perpendicular offset when parallel.
pub fn line_distance(a: &OrientedLine, b: &OrientedLine) -> f64 {
    let offset = vec3::sub(b.point, a.point);
    let n = vec3::cross(a.direction, b.direction);
    let nn = vec3::norm(n);
    if nn < 1e-12 {
        vec3::norm(vec3::cross(offset, a.direction))
    } else {
        vec3::dot(offset, n).abs() / nn
    }
}

/// The normal line of the surface at `u`, in standard coordinates.
pub fn normal_line(u: Complex64, moduli: &MonopoleModuli) -> Result<OrientedLine> {
    let s = immerse(u, moduli)?;
    Ok(OrientedLine {
        point: frame_transform_real(s.pos, moduli, FrameDirection::ToStandard),
        direction: frame_transform_real(s.normal, moduli, FrameDirection::ToStandard),
    })
}

/// Spectral lines over `n_circle` points of `|ζ| = 1` (both sheets) and
/// over the finite branch values `0, −a, a⁻¹`.
pub fn spectral_line_family(moduli: &MonopoleModuli, n_circle: usize) -> Vec<OrientedLine> {
    let mut out = Vec::with_capacity(2 * n_circle + 3);
    for j in 0..n_circle {
        let t = 2.0 * std::f64::consts::PI * j as f64 / n_circle as f64;
        let zeta = Complex64::from_polar(1.0, t);
        let (a, b) = spectral_eta(zeta, moduli);
        out.push(spectral_line(zeta, a));
        out.push(spectral_line(zeta, b));
    }
    let (neg_a, inv_a) = moduli.finite_branch_values();
    for z in [0.0, neg_a, inv_a] {
        out.push(spectral_line(Complex64::new(z, 0.0), Complex64::new(0.0, 0.0)));
    }
    out
}

/// For each `u`, the distance from the normal line at `u` to the nearest
/// spectral line, divided by `K(k)`.
///
/// Candidates are the spectral line of the curve point `u` itself, i.e.
/// `(ζ, η) = (℘(u) − e3, (ω1/4)℘'(u))`, and the sampled family of
/// [`spectral_line_family`].
pub fn normal_line_distances(
    moduli: &MonopoleModuli,
    us: &[Complex64],
    n_circle: usize,
) -> Result<Vec<f64>> {
    let family = spectral_line_family(moduli, n_circle);
    us.iter()
        .map(|&u| {
            let normal = normal_line(u, moduli)?;
            let (zeta, eta) = uniformize(u, moduli)?;
            let paired = spectral_line(zeta, eta);
            let best = family
                .iter()
                .chain(std::iter::once(&paired))
                .map(|l| line_distance(&normal, l))
                .fold(f64::INFINITY, f64::min);
            Ok(best / moduli.big_k)
        })
        .collect()
}

/// Normalised normal-line / spectral-line distances along `V_{1/4}`.
pub fn higgs_normal_diagnostic(moduli: &MonopoleModuli, samples: usize) -> Result<Vec<f64>> {
    if samples < 32 {
        return Err(Error::Domain {
            what: "samples",
            value: samples as f64,
            range: ">= 32".into(),
        });
    }
    let w1 = moduli.omega1();
    let h = moduli.lattice.omega2_mag / samples as f64;
    let us: Vec<Complex64> = (0..samples)
        .map(|j| Complex64::new(w1 / 4.0, j as f64 * h))
        .collect();
    normal_line_distances(moduli, &us, 720)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::moduli::moduli_from_k;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn incidence(line: &OrientedLine, zeta: Complex64) -> Complex64 {
        let x = line.point;
        c(x[0], x[1]) - 2.0 * x[2] * zeta - c(x[0], -x[1]) * zeta * zeta
    }

    #[test]
    fn lines_through_origin_for_zero_section() {
        let l = spectral_line(c(0.0, 0.0), c(0.0, 0.0));
        assert_eq!(l.direction, [0.0, 0.0, 1.0]);
        assert!(vec3::norm(l.point) < 1e-15);
    }

    #[test]
    fn anchor_is_incident_and_perpendicular() {
        for &(z, e) in &[(c(0.3, -1.2), c(2.0, 0.5)), (c(-4.0, 0.1), c(-1.0, 3.0))] {
            let l = spectral_line(z, e);
            assert!((incidence(&l, z) - e).norm() < 1e-10 * e.norm().max(1.0));
            assert!(vec3::dot(l.point, l.direction).abs() < 1e-12);
            // every point of the line is incident
            let far = OrientedLine {
                point: vec3::add(l.point, vec3::scale(l.direction, 7.5)),
                ..l
            };
            assert!((incidence(&far, z) - e).norm() < 1e-9 * e.norm().max(1.0));
        }
    }

    #[test]
    fn branch_lines_pass_through_centre() {
        let m = moduli_from_k(0.4).unwrap();
        let (a, b) = m.finite_branch_values();
        let la = spectral_line(c(a, 0.0), c(0.0, 0.0));
        let lb = spectral_line(c(b, 0.0), c(0.0, 0.0));
        assert!(vec3::norm(la.point) < 1e-14 && vec3::norm(lb.point) < 1e-14);
        // product −1 makes the two directions antipodal
        assert!(vec3::norm(vec3::add(la.direction, lb.direction)) < 1e-12);
    }

    #[test]
    fn distance_of_parallel_and_skew_lines() {
        let a = OrientedLine { point: [0.0; 3], direction: [1.0, 0.0, 0.0] };
        let b = OrientedLine { point: [0.0, 2.0, 0.0], direction: [-1.0, 0.0, 0.0] };
        assert!((line_distance(&a, &b) - 2.0).abs() < 1e-15);
        let c = OrientedLine { point: [0.0, 0.0, 3.0], direction: [0.0, 1.0, 0.0] };
        assert!((line_distance(&a, &c) - 3.0).abs() < 1e-15);
    }

    #[test]
    fn normal_direction_matches_curve_point() {
        // the normal at u points along the spectral lines over ζ = ℘(u) − e3
        let m = moduli_from_k(0.55).unwrap();
        for &u in &[c(0.2, 0.3), c(0.7, 0.1), c(1.1, 0.8)] {
            let n = normal_line(u, &m).unwrap().direction;
            let (zeta, _) = uniformize(u, &m).unwrap();
            let d = inverse_stereographic(Extended::Finite(zeta));
            let cr = vec3::norm(vec3::cross(n, d));
            assert!(cr < 1e-9, "u={u}: n={n:?} d={d:?}");
        }
    }
}
