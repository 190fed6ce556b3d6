//! Complete elliptic integrals, the Weierstrass ℘-function and the
//! single-valued roots `f_j = √(℘ − e_j)` on the rectangular lattice
//! determined by a modulus `k`.
//!
//! The lattice has real period `ω1 = 2√(kk')K(k)` and imaginary period
//! `ω2 = 2i√(kk')K'(k)`. With `v = πu/ω1` and nome `q = exp(−π|ω2|/ω1)`
//! the roots are theta quotients
//!
//! ```text
//! f1 = θ2(v) / (√k  θ1(v))
//! f2 = θ4(v) / (√k' θ1(v))
//! f3 = θ3(v) /       θ1(v)
//! ```
//!
//! which are meromorphic on all of ℂ with residue 1 at the origin.
//! ℘ and its derivatives follow from `℘ = (f1² + f2² + f3²)/3` and
//! `℘' = −2 f1 f2 f3`.

mod complete;
mod quarter;
mod theta;

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};

pub use complete::{
    agm, complementary_modulus, complete_elliptic_e, complete_elliptic_k,
    complete_elliptic_k_complementary, dk_dk,
};
pub use quarter::quarter_period_table;

/// Default pole-exclusion radius in units of `ω1`.
pub const DEFAULT_POLE_EPS: f64 = 1e-8;

/// The rectangular period lattice attached to a modulus `k ∈ (0,1)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RectLattice {
    /// Real period ω1.
    pub omega1: f64,
    /// |ω2|, with ω2 = i·|ω2|.
    pub omega2_mag: f64,
    pub g2: f64,
    pub g3: f64,
    pub e1: f64,
    pub e2: f64,
    pub e3: f64,
    /// q = exp(−π|ω2|/ω1).
    pub nome_q: f64,
    /// Pole-exclusion radius (absolute).
    pub pole_eps: f64,
    sqrt_k: f64,
    sqrt_kp: f64,
    log_q: f64,
}

impl RectLattice {
    /// Builds the lattice from the modulus and its complete integrals.
    ///
    /// `k` must lie strictly inside (0,1).
    pub fn from_modulus(k: f64) -> Result<Self> {
        if !(k > 0.0 && k < 1.0) {
            return Err(Error::Domain {
                what: "k",
                value: k,
                range: "(0, 1)".into(),
            });
        }
        let kp = complementary_modulus(k);
        let big_k = complete::k_from_complement(kp);
        let big_kp = complete::k_from_complement(k);
        let kkp = k * kp;
        let root = kkp.sqrt();
        let k2 = k * k;
        let kp2 = kp * kp;

        let omega1 = 2.0 * root * big_k;
        let omega2_mag = 2.0 * root * big_kp;
        let log_q = -PI * big_kp / big_k;

        Ok(Self {
            omega1,
            omega2_mag,
            g2: 4.0 * (1.0 - k2 + k2 * k2) / (3.0 * k2 * kp2),
            g3: 4.0 * (k2 - 2.0) * (k2 + 1.0) * (2.0 * k2 - 1.0) / (27.0 * kkp * kkp * kkp),
            e1: (2.0 - k2) / (3.0 * kkp),
            e2: -(1.0 + k2) / (3.0 * kkp),
            e3: (2.0 * k2 - 1.0) / (3.0 * kkp),
            nome_q: log_q.exp(),
            pole_eps: DEFAULT_POLE_EPS * omega1,
            sqrt_k: k.sqrt(),
            sqrt_kp: kp.sqrt(),
            log_q,
        })
    }

    /// Same lattice with a different absolute pole-exclusion radius.
    pub fn with_pole_eps(mut self, eps: f64) -> Self {
        self.pole_eps = eps.max(0.0);
        self
    }

    pub fn omega2(&self) -> Complex64 {
        Complex64::new(0.0, self.omega2_mag)
    }

    /// ω3 = ω1 + ω2.
    pub fn omega3(&self) -> Complex64 {
        Complex64::new(self.omega1, self.omega2_mag)
    }

    /// Half-period value `e_j`, `j ∈ {1,2,3}`.
    pub fn e(&self, j: usize) -> f64 {
        match j {
            1 => self.e1,
            2 => self.e2,
            3 => self.e3,
            _ => panic!("half-period index {j} not in 1..=3"),
        }
    }

    /// Splits `u = m·ω1 + n·ω2 + u0` with `u0` in the centred period rectangle.
    pub fn reduce(&self, u: Complex64) -> (i64, i64, Complex64) {
        let m = (u.re / self.omega1).round();
        let n = (u.im / self.omega2_mag).round();
        let u0 = Complex64::new(u.re - m * self.omega1, u.im - n * self.omega2_mag);
        (m as i64, n as i64, u0)
    }

    /// Nearest lattice point to `u` and the distance to it.
    pub fn nearest_lattice_point(&self, u: Complex64) -> (Complex64, f64) {
        let (m, n, u0) = self.reduce(u);
        let p = Complex64::new(m as f64 * self.omega1, n as f64 * self.omega2_mag);
        (p, u0.norm())
    }

    fn check_pole(&self, u: Complex64) -> Result<(i64, i64, Complex64)> {
        let (m, n, u0) = self.reduce(u);
        if u0.norm() < self.pole_eps {
            return Err(Error::PoleProximity {
                u,
                pole: Complex64::new(m as f64 * self.omega1, n as f64 * self.omega2_mag),
                radius: self.pole_eps,
            });
        }
        Ok((m, n, u0))
    }

    /// All three roots `[f1(u), f2(u), f3(u)]`.
    pub fn f_roots(&self, u: Complex64) -> Result<[Complex64; 3]> {
        let (m, n, u0) = self.check_pole(u)?;
        let v = u0 * (PI / self.omega1);
        let [t1, t2, t3, t4] = theta::thetas(v, self.log_q);
        let mut f1 = t2 / (self.sqrt_k * t1);
        let mut f2 = t4 / (self.sqrt_kp * t1);
        let mut f3 = t3 / t1;
        // f1: period ω1, antiperiod ω2; f2: antiperiod ω1, period ω2;
        // f3: antiperiod in both.
        if n.rem_euclid(2) == 1 {
            f1 = -f1;
        }
        if m.rem_euclid(2) == 1 {
            f2 = -f2;
        }
        if (m + n).rem_euclid(2) == 1 {
            f3 = -f3;
        }
        Ok([f1, f2, f3])
    }
}

/// ℘ and its first three derivatives at a point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct WpJet {
    pub p: Complex64,
    pub p1: Complex64,
    pub p2: Complex64,
    pub p3: Complex64,
}

impl WpJet {
    fn from_value(p: Complex64, p1: Complex64, g2: f64) -> Self {
        Self {
            p,
            p1,
            p2: 6.0 * p * p - 0.5 * g2,
            p3: 12.0 * p * p1,
        }
    }

    /// ℘'''' = 12(℘'² + ℘℘'').
    pub fn p4(&self) -> Complex64 {
        12.0 * (self.p1 * self.p1 + self.p * self.p2)
    }
}

/// ℘, ℘', ℘'', ℘''' at `u`.
pub fn wp_jet(u: Complex64, lattice: &RectLattice) -> Result<WpJet> {
    let roots = lattice.f_roots(u)?;
    Ok(jet_from_roots(&roots, lattice))
}

/// Builds the ℘ jet from already evaluated roots.
pub fn jet_from_roots(roots: &[Complex64; 3], lattice: &RectLattice) -> WpJet {
    let [f1, f2, f3] = *roots;
    let p = (f1 * f1 + f2 * f2 + f3 * f3) / 3.0;
    let p1 = -2.0 * f1 * f2 * f3;
    WpJet::from_value(p, p1, lattice.g2)
}

/// The single-valued root `f_j(u)` of `℘(u) − e_j` with residue 1 at 0.
pub fn f_root(j: usize, u: Complex64, lattice: &RectLattice) -> Result<Complex64> {
    if !(1..=3).contains(&j) {
        return Err(Error::Domain {
            what: "root index",
            value: j as f64,
            range: "{1, 2, 3}".into(),
        });
    }
    Ok(lattice.f_roots(u)?[j - 1])
}
