//! Test-side oracles, written independently of the library internals.
//!
//! `K(k)` comes from trapezoidal quadrature of a periodic integrand, and
//! `℘` from its Laurent series at a small argument followed by repeated
//! doubling on the cubic. Nothing here touches theta functions or the AGM.

#![allow(dead_code)]

use num_complex::Complex64;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub type C = Complex64;

pub fn c(re: f64, im: f64) -> C {
    C::new(re, im)
}

/// `∫_0^{π/2} dψ / √(1 − k² sin² ψ)` by the trapezoid rule, which is
/// spectrally accurate for this even periodic integrand.
pub fn quad_k(k: f64) -> f64 {
    let n = 20_000;
    let h = std::f64::consts::FRAC_PI_2 / n as f64;
    let f = |t: f64| 1.0 / (1.0 - k * k * t.sin().powi(2)).sqrt();
    let inner: f64 = (1..n).map(|j| f(j as f64 * h)).sum();
    h * (inner + 0.5 * (f(0.0) + f(std::f64::consts::FRAC_PI_2)))
}

pub fn quad_e(k: f64) -> f64 {
    let n = 20_000;
    let h = std::f64::consts::FRAC_PI_2 / n as f64;
    let f = |t: f64| (1.0 - k * k * t.sin().powi(2)).sqrt();
    let inner: f64 = (1..n).map(|j| f(j as f64 * h)).sum();
    h * (inner + 0.5 * (f(0.0) + f(std::f64::consts::FRAC_PI_2)))
}

pub fn kp(k: f64) -> f64 {
    (1.0 - k * k).sqrt()
}

/// The rectangular lattice of modulus `k` built from quadrature.
/// Laurent coefficients kept; enough for `|z| ≤ 0.4 · min(ω1, |ω2|)`.
const NC: usize = 48;

#[derive(Debug, Clone, Copy)]
pub struct Oracle {
    pub k: f64,
    pub kp: f64,
    pub big_k: f64,
    pub big_kp: f64,
    pub w1: f64,
    pub w2: f64,
    pub e: [f64; 3],
    pub g2: f64,
    pub g3: f64,
    coeffs: [f64; NC],
}

impl Oracle {
    pub fn new(k: f64) -> Self {
        let kp = kp(k);
        let s = (k * kp).sqrt();
        let big_k = quad_k(k);
        let big_kp = quad_k(kp);
        let d = 3.0 * k * kp;
        let e = [(2.0 - k * k) / d, -(1.0 + k * k) / d, (2.0 * k * k - 1.0) / d];
        let g2 = 2.0 * (e[0] * e[0] + e[1] * e[1] + e[2] * e[2]);
        let g3 = 4.0 * e[0] * e[1] * e[2];
        // ℘(z) = z⁻² + Σ_{n≥2} c_n z^{2n−2}
        let mut coeffs = [0.0; NC];
        coeffs[2] = g2 / 20.0;
        coeffs[3] = g3 / 28.0;
        for n in 4..NC {
            let sum: f64 = (2..=n - 2).map(|m| coeffs[m] * coeffs[n - m]).sum();
            coeffs[n] = 3.0 * sum / ((2 * n + 1) as f64 * (n - 3) as f64);
        }
        Oracle {
            k,
            kp,
            big_k,
            big_kp,
            w1: 2.0 * s * big_k,
            w2: 2.0 * s * big_kp,
            e,
            g2,
            g3,
            coeffs,
        }
    }

    pub fn omega2(&self) -> C {
        c(0.0, self.w2)
    }

    pub fn quarters(&self) -> [C; 3] {
        [c(self.w1 / 4.0, 0.0), c(0.0, self.w2 / 4.0), c(self.w1 / 4.0, self.w2 / 4.0)]
    }

    fn laurent(&self, z: C) -> (C, C) {
        let z2 = z * z;
        let mut p = z2.inv();
        let mut dp = -2.0 * z2.inv() / z;
        let mut pow = C::new(1.0, 0.0); // z^{2n−4}
        for n in 2..NC {
            let cn = self.coeffs[n];
            // d/dz z^{2n−2} = (2n−2) z^{2n−3}
            dp += cn * (2 * n - 2) as f64 * pow * z;
            pow *= z2;
            p += cn * pow;
        }
        (p, dp)
    }

    /// `(℘(u), ℘'(u))`.
    pub fn wp(&self, u: C) -> (C, C) {
        let m = (u.re / self.w1).round();
        let n = (u.im / self.w2).round();
        let z0 = u - c(m * self.w1, n * self.w2);
        // each doubling cancels about one digit, so start as far out as the
        // series allows
        let limit = 0.4 * self.w1.min(self.w2);
        let mut doublings = 0;
        let mut z = z0;
        while z.norm() > limit {
            z /= 2.0;
            doublings += 1;
        }
        let (mut x, mut y) = self.laurent(z);
        for _ in 0..doublings {
            let slope = (6.0 * x * x - self.g2 / 2.0) / y;
            let x2 = slope * slope / 4.0 - 2.0 * x;
            let y2 = -y - slope * (x2 - x);
            x = x2;
            y = y2;
        }
        (x, y)
    }

    /// `[℘, ℘', ℘'', ℘''']`.
    pub fn jet(&self, u: C) -> [C; 4] {
        let (p, p1) = self.wp(u);
        let p2 = 6.0 * p * p - self.g2 / 2.0;
        [p, p1, p2, 12.0 * p * p1]
    }

    /// Ω from the generic Weierstrass formulae with `g = ℘ − e3` and
    /// `f = (ω1/4)℘'`, in standard coordinates.
    pub fn omega_null(&self, u: C) -> [C; 3] {
        let [p, p1, p2, p3] = self.jet(u);
        let w = self.w1 / 4.0;
        let g = p - self.e[2];
        let f = w * p1;
        let dg = p1;
        let df_dg = w * p2 / dg;
        // (df/dg)' = w (p3 p1 − p2²)/p1², then divide by g'
        let d2f_dg2 = w * (p3 * p1 - p2 * p2) / (p1 * p1) / dg;
        let i = c(0.0, 1.0);
        [
            0.5 * (-0.5 * (1.0 - g * g) * d2f_dg2 - g * df_dg + f),
            0.5 * i * (-0.5 * (1.0 + g * g) * d2f_dg2 + g * df_dg - f),
            0.5 * (g * d2f_dg2 - df_dg),
        ]
    }

    /// The rotation into k-monopole coordinates.
    pub fn a_k(&self) -> [[f64; 3]; 3] {
        [[-self.k, 0.0, self.kp], [self.kp, 0.0, self.k], [0.0, 1.0, 0.0]]
    }

    /// `A_k Ω`.
    pub fn phi_null(&self, u: C) -> [C; 3] {
        let o = self.omega_null(u);
        let a = self.a_k();
        [0, 1, 2].map(|r| a[r][0] * o[0] + a[r][1] * o[1] + a[r][2] * o[2])
    }

    /// Closed-form `[℘, ℘', ℘'', ℘''']` at `ω1/4`, `ω2/4`, `ω3/4`.
    pub fn quarter_table(&self) -> [[C; 4]; 3] {
        let (k, kp) = (self.k, self.kp);
        let s = (k * kp).sqrt();
        let (k2, kp2) = (k * k, kp * kp);
        [
            [
                c((1.0 + 3.0 * kp + kp2) / (3.0 * k * kp), 0.0),
                c(-2.0 * (1.0 + kp) / (k * s), 0.0),
                c(4.0 * (1.0 + kp) / (kp * (1.0 - kp)), 0.0),
                c(-8.0 * (1.0 + 3.0 * kp + kp2) / (kp * (1.0 - kp) * s), 0.0),
            ],
            [
                c(-(1.0 + 3.0 * k + k2) / (3.0 * k * kp), 0.0),
                c(0.0, -2.0 * (1.0 + k) / (kp * s)),
                c(4.0 * (1.0 + k) / (k * (1.0 - k)), 0.0),
                c(0.0, 8.0 * (1.0 + 3.0 * k + k2) / (k * (1.0 - k) * s)),
            ],
            [
                c((k2 - kp2) / (3.0 * k * kp), -1.0),
                c(2.0 * kp / s, 2.0 * k / s),
                c(-8.0, 4.0 * (kp2 - k2) / (k * kp)),
                c(8.0 * (5.0 * k2 - 1.0) / (k * s), -8.0 * (5.0 * kp2 - 1.0) / (kp * s)),
            ],
        ]
    }

    /// Closed-form `Φ(ω1/4)`, `Φ(ω2/4)`, `Φ(ω3/4)`.
    pub fn quarter_phi(&self) -> [[C; 3]; 3] {
        let (k, kp, bk) = (self.k, self.kp, self.big_k);
        let a = bk / (2.0 * k);
        let b = bk / (2.0 * kp);
        let h = bk / 2.0;
        [
            [c(0.0, 0.0), c(a, 0.0), c(0.0, -a * kp * kp)],
            [c(0.0, -b), c(0.0, 0.0), c(b * k * k, 0.0)],
            [c(0.0, -h * kp * kp), c(h * k * k, 0.0), c(0.0, 0.0)],
        ]
    }

    /// `β1, β2, β3`.
    pub fn branch_points(&self) -> [[f64; 3]; 3] {
        let (k, kp, bk) = (self.k, self.kp, self.big_k);
        [
            [0.0, bk / (2.0 * k), 0.0],
            [0.0, 0.0, k * k * bk / (2.0 * kp)],
            [0.0, k * k * bk / 2.0, 0.0],
        ]
    }

    /// Distance from `u` to the half lattice `(ω1/2)Z + (ω2/2)Z`.
    pub fn distance_to_half_lattice(&self, u: C) -> f64 {
        let (hx, hy) = (self.w1 / 2.0, self.w2 / 2.0);
        let dx = u.re - (u.re / hx).round() * hx;
        let dy = u.im - (u.im / hy).round() * hy;
        dx.hypot(dy)
    }
}

/// Uniform points of the period rectangle at least `margin · ω1` from the
/// half lattice, from a fixed seed.
pub fn random_points(o: &Oracle, n: usize, margin: f64, seed: u64) -> Vec<C> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let u = c(rng.gen_range(0.0..o.w1), rng.gen_range(0.0..o.w2));
        if o.distance_to_half_lattice(u) > margin * o.w1 {
            out.push(u);
        }
    }
    out
}

pub fn rel(a: C, b: C) -> f64 {
    (a - b).norm() / b.norm().max(1.0)
}

pub fn max_rel3(a: &[C; 3], b: &[C; 3]) -> f64 {
    let scale = b.iter().map(|z| z.norm()).fold(1.0, f64::max);
    (0..3).map(|j| (a[j] - b[j]).norm()).fold(0.0, f64::max) / scale
}
