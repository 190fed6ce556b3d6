//! The null curve `Φ` in k-monopole coordinates, the minimal immersion
//! `φ = Re Φ`, its Gauss map and curvature density.
//!
//! With `f_j = f_j(2u)` and `℘' = ℘'(2u)`:
//!
//! ```text
//! Φ  = (ω1/4) · (−k f1³,  k' f2³,  −i f3³)
//! Φ' = (3ω1/4) ℘' · (−k f1, k' f2, −i f3)
//! g_Φ = −(k' f2 + i k f1) / f3
//! D  = k²|f1|² + k'²|f2|² + |f3|²,   G = 8/D
//! ```
//!
//! The generic Weierstrass representation with `g = ℘ − e3`,
//! `f = (ω1/4)℘'` is provided separately as an independent route.

use num_complex::Complex64;
use serde::Serialize;

use crate::elliptic::{wp_jet, RectLattice};
use crate::error::{Error, Result};
use crate::moduli::MonopoleModuli;
use crate::vec3::Vec3;

pub type CVec3 = [Complex64; 3];

const I: Complex64 = Complex64 { re: 0.0, im: 1.0 };

/// Φ(u) and Φ'(u).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct NullPoint {
    pub u: Complex64,
    pub phi: CVec3,
    pub dphi: CVec3,
}

impl NullPoint {
    /// `Σ Φ_j'²`, zero for a null curve.
    pub fn nullity(&self) -> Complex64 {
        self.dphi.iter().map(|d| d * d).sum()
    }

    pub fn position(&self) -> Vec3 {
        [self.phi[0].re, self.phi[1].re, self.phi[2].re]
    }
}

/// One evaluated point of the minimal surface.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SurfaceSample {
    pub u: Complex64,
    /// φ(u) in k-monopole coordinates.
    pub pos: Vec3,
    /// Unit normal γ_φ(u).
    pub normal: Vec3,
    /// Metric density, `ds² = λ |du|²`.
    pub lambda: f64,
    /// Area density of the Gauss map, `G = 4|g'|²/(1+|g|²)²`.
    pub g_density: f64,
    /// Gaussian curvature 𝒦 = −G/λ.
    pub gauss_curv: f64,
}

/// A point of the Riemann sphere.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum Extended {
    Finite(Complex64),
    Infinity,
}

impl Extended {
    pub fn finite(self) -> Option<Complex64> {
        match self {
            Extended::Finite(z) => Some(z),
            Extended::Infinity => None,
        }
    }

    fn from_ratio(num: Complex64, den: Complex64) -> Self {
        if den == Complex64::new(0.0, 0.0) {
            Extended::Infinity
        } else {
            Extended::Finite(num / den)
        }
    }
}

/// Which way [`frame_transform`] maps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FrameDirection {
    /// Standard coordinates → k-monopole coordinates (`Φ = A_k Ω`).
    ToMonopole,
    /// k-monopole coordinates → standard coordinates (`Ω = A_kᵀ Φ`).
    ToStandard,
}

/// The rotation `A_k` with rows `(−k, 0, k')`, `(k', 0, k)`, `(0, 1, 0)`.
pub fn frame_matrix(moduli: &MonopoleModuli) -> [[f64; 3]; 3] {
    let (k, kp) = (moduli.k, moduli.k_prime);
    [[-k, 0.0, kp], [kp, 0.0, k], [0.0, 1.0, 0.0]]
}

fn apply<T>(a: &[[f64; 3]; 3], v: [T; 3], transpose: bool) -> [T; 3]
where
    T: Copy + std::ops::Mul<f64, Output = T> + std::ops::Add<Output = T>,
{
    let e = |i: usize, j: usize| if transpose { a[j][i] } else { a[i][j] };
    [
        v[0] * e(0, 0) + v[1] * e(0, 1) + v[2] * e(0, 2),
        v[0] * e(1, 0) + v[1] * e(1, 1) + v[2] * e(1, 2),
        v[0] * e(2, 0) + v[1] * e(2, 1) + v[2] * e(2, 2),
    ]
}

/// Applies `A_k` or its inverse to a complex triple.
pub fn frame_transform(v: CVec3, moduli: &MonopoleModuli, direction: FrameDirection) -> CVec3 {
    let a = frame_matrix(moduli);
    apply(&a, v, direction == FrameDirection::ToStandard)
}

/// Real-vector version of [`frame_transform`].
pub fn frame_transform_real(v: Vec3, moduli: &MonopoleModuli, direction: FrameDirection) -> Vec3 {
    let a = frame_matrix(moduli);
    apply(&a, v, direction == FrameDirection::ToStandard)
}

/// `[f1(2u), f2(2u), f3(2u)]`, reporting proximity to an end of the surface.
pub fn doubled_roots(u: Complex64, lattice: &RectLattice) -> Result<[Complex64; 3]> {
    lattice.f_roots(2.0 * u).map_err(|e| match e {
        Error::PoleProximity { pole, radius, .. } => Error::PoleProximity {
            u,
            pole: 0.5 * pole,
            radius: 0.5 * radius,
        },
        other => other,
    })
}

fn null_point_from_roots(u: Complex64, f: &[Complex64; 3], moduli: &MonopoleModuli) -> NullPoint {
    let (k, kp) = (moduli.k, moduli.k_prime);
    let w = 0.25 * moduli.omega1();
    let [f1, f2, f3] = *f;
    let wp1 = -2.0 * f1 * f2 * f3;
    let s = 3.0 * w * wp1;
    NullPoint {
        u,
        phi: [
            -k * w * f1 * f1 * f1,
            kp * w * f2 * f2 * f2,
            -I * w * f3 * f3 * f3,
        ],
        dphi: [-k * s * f1, kp * s * f2, -I * s * f3],
    }
}

/// Φ(u) and Φ'(u) in k-monopole coordinates.
pub fn phi_null(u: Complex64, moduli: &MonopoleModuli) -> Result<NullPoint> {
    let f = doubled_roots(u, &moduli.lattice)?;
    Ok(null_point_from_roots(u, &f, moduli))
}

/// Ω(u) in standard coordinates from the generic Weierstrass formulae with
/// `g = ℘ − e3`, `f = (ω1/4)℘'`, using analytic chain rules.
pub fn weierstrass_rep_oracle(u: Complex64, moduli: &MonopoleModuli) -> Result<CVec3> {
    let jet = wp_jet(u, &moduli.lattice)?;
    let scale = jet.p.norm().max(1.0).powf(1.5);
    if jet.p1.norm() < 1e-12 * scale {
        return Err(Error::Degenerate {
            u,
            reason: "℘'(u) vanishes; the chain rule in the Gauss-map variable breaks down",
        });
    }
    let w = 0.25 * moduli.omega1();
    let g = jet.p - moduli.lattice.e3;
    let f = w * jet.p1;
    // df/dg = f'/g', d²f/dg² = (df/dg)'/g'
    let df = w * jet.p2 / jet.p1;
    let d2f = w * (jet.p3 * jet.p1 - jet.p2 * jet.p2) / (jet.p1 * jet.p1 * jet.p1);
    let g2 = g * g;
    Ok([
        0.5 * (-0.5 * (1.0 - g2) * d2f - g * df + f),
        0.5 * I * (-0.5 * (1.0 + g2) * d2f + g * df - f),
        0.5 * (g * d2f - df),
    ])
}

/// `d³f/dg³` for `g = ℘ − e3`, `f = (ω1/4)℘'`, computed from the ℘ jet.
pub fn third_derivative_f_in_g(u: Complex64, moduli: &MonopoleModuli) -> Result<Complex64> {
    let jet = wp_jet(u, &moduli.lattice)?;
    if jet.p1.norm() == 0.0 {
        return Err(Error::Degenerate {
            u,
            reason: "℘'(u) vanishes",
        });
    }
    let w = 0.25 * moduli.omega1();
    let (p1, p2, p3, p4) = (jet.p1, jet.p2, jet.p3, jet.p4());
    // d/du [(p3 p1 − p2²)/p1³] / p1
    let num = p4 * p1 - p3 * p2;
    let d2 = (p3 * p1 - p2 * p2) / (p1 * p1 * p1);
    let dd2 = num / (p1 * p1 * p1) - 3.0 * d2 * p2 / p1;
    Ok(w * dd2 / p1)
}

fn density_terms(f: &[Complex64; 3], moduli: &MonopoleModuli) -> f64 {
    let (k, kp) = (moduli.k, moduli.k_prime);
    k * k * f[0].norm_sqr() + kp * kp * f[1].norm_sqr() + f[2].norm_sqr()
}

/// `g_Φ` and `g_Φ'` from the doubled roots.
///
/// With `A = k'f2 + ikf1`, `B = k'f2 − ikf1` and `f3² = AB`, the Gauss map
/// is `−A/f3 = −f3/B`. The form with the larger of `|A|`, `|B|` is used so
/// that a zero of `f3` never turns into 0/0. Its derivative `2i g/f3`
/// simplifies to `−2i/B`.
fn gauss_from_roots(f: &[Complex64; 3], moduli: &MonopoleModuli) -> (Extended, Extended) {
    let (k, kp) = (moduli.k, moduli.k_prime);
    let plus = kp * f[1] + I * k * f[0];
    let minus = kp * f[1] - I * k * f[0];
    let g = if plus.norm() >= minus.norm() {
        Extended::from_ratio(-plus, f[2])
    } else {
        Extended::from_ratio(-f[2], minus)
    };
    (g, Extended::from_ratio(Complex64::new(0.0, -2.0), minus))
}

/// The Gauss map `g_Φ(u)` in k-monopole coordinates.
pub fn gauss_map(u: Complex64, moduli: &MonopoleModuli) -> Result<Extended> {
    let f = doubled_roots(u, &moduli.lattice)?;
    Ok(gauss_from_roots(&f, moduli).0)
}

/// `g_Φ'(u) = 2i g_Φ(u) / f3(2u)`.
pub fn gauss_map_derivative(u: Complex64, moduli: &MonopoleModuli) -> Result<Extended> {
    let f = doubled_roots(u, &moduli.lattice)?;
    Ok(gauss_from_roots(&f, moduli).1)
}

/// Inverse of the stereographic projection `P(x) = (x1 + i x2)/(1 + x3)`
/// from `−ē3`; `0 ↦ +ē3`, `∞ ↦ −ē3`.
pub fn inverse_stereographic(z: Extended) -> Vec3 {
    match z {
        Extended::Infinity => [0.0, 0.0, -1.0],
        Extended::Finite(g) if g.norm() <= 1.0 => {
            let n2 = g.norm_sqr();
            let d = 1.0 + n2;
            [2.0 * g.re / d, 2.0 * g.im / d, (1.0 - n2) / d]
        }
        Extended::Finite(g) => {
            let w = 1.0 / g;
            let n2 = w.norm_sqr();
            let d = 1.0 + n2;
            [2.0 * w.re / d, -2.0 * w.im / d, (n2 - 1.0) / d]
        }
    }
}

/// Stereographic projection from `−ē3`.
pub fn stereographic(x: Vec3) -> Extended {
    Extended::from_ratio(Complex64::new(x[0], x[1]), Complex64::new(1.0 + x[2], 0.0))
}

/// Unit normal `γ_φ(u)` in k-monopole coordinates.
pub fn gauss_sphere(u: Complex64, moduli: &MonopoleModuli) -> Result<Vec3> {
    Ok(inverse_stereographic(gauss_map(u, moduli)?))
}

fn sample_from_roots(u: Complex64, f: &[Complex64; 3], moduli: &MonopoleModuli) -> SurfaceSample {
    let np = null_point_from_roots(u, f, moduli);
    let d = density_terms(f, moduli);
    let wp1 = (2.0 * f[0] * f[1] * f[2]).norm_sqr();
    let omega1 = moduli.omega1();
    let lambda = 9.0 / 32.0 * omega1 * omega1 * wp1 * d;
    let g_density = 8.0 / d;
    let gauss_curv = if lambda > 0.0 {
        -g_density / lambda
    } else {
        f64::NEG_INFINITY
    };
    SurfaceSample {
        u,
        pos: np.position(),
        normal: inverse_stereographic(gauss_from_roots(f, moduli).0),
        lambda,
        g_density,
        gauss_curv,
    }
}

/// Position, normal, metric, curvature density and Gaussian curvature at `u`.
///
/// The metric is the one induced by `φ`, `λ = |Φ'|²/2
/// = (9/32) ω1² |℘'(2u)|² D`, so that `𝒦 = −G/λ`.
pub fn immerse(u: Complex64, moduli: &MonopoleModuli) -> Result<SurfaceSample> {
    let f = doubled_roots(u, &moduli.lattice)?;
    Ok(sample_from_roots(u, &f, moduli))
}

/// Curvature density `G(u) = 8/D` alone.
pub fn curvature_density(u: Complex64, moduli: &MonopoleModuli) -> Result<f64> {
    let f = doubled_roots(u, &moduli.lattice)?;
    Ok(8.0 / density_terms(&f, moduli))
}
