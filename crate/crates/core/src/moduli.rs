//! k-derived constants of the spectral curve
//! `η² = K(k)² ζ (kk'(ζ² − 1) + (k² − k'²) ζ)` and its uniformisation
//! `ζ = ℘(u) − e3`, `η = (ω1/4) ℘'(u)`.

use num_complex::Complex64;
use serde::Serialize;

use crate::elliptic::{
    complementary_modulus, complete_elliptic_k, complete_elliptic_k_complementary, wp_jet,
    RectLattice,
};
use crate::error::{Error, Result};

/// Smallest admissible modulus by default.
pub const K_MIN: f64 = 1e-6;
/// Largest admissible modulus by default.
pub const K_MAX: f64 = 1.0 - 1e-6;

/// All constants attached to the reduced, centred charge-2 spectral curve
/// with modulus `k`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MonopoleModuli {
    pub k: f64,
    pub k_prime: f64,
    /// θ = arcsin k; 2θ is the angle between the two spectral lines through the centre.
    pub theta: f64,
    pub big_k: f64,
    pub big_k_prime: f64,
    pub lattice: RectLattice,
    pub r1: f64,
    pub r2: f64,
    pub k1: f64,
    pub k2: f64,
}

impl MonopoleModuli {
    /// Moduli for `k ∈ [K_MIN, K_MAX]`.
    pub fn new(k: f64) -> Result<Self> {
        Self::with_bounds(k, K_MIN, K_MAX)
    }

    /// Moduli for `k ∈ [k_min, k_max]` (which must itself lie inside (0,1)).
    pub fn with_bounds(k: f64, k_min: f64, k_max: f64) -> Result<Self> {
        if !(k >= k_min && k <= k_max) || !(k > 0.0 && k < 1.0) {
            return Err(Error::Domain {
                what: "k",
                value: k,
                range: format!("[{k_min}, {k_max}]"),
            });
        }
        let k_prime = complementary_modulus(k);
        let big_k = complete_elliptic_k(k)?;
        let big_k_prime = complete_elliptic_k_complementary(k)?;
        let lattice = RectLattice::from_modulus(k)?;
        let kkp = k * k_prime;
        let r1 = kkp * big_k * big_k;
        Ok(Self {
            k,
            k_prime,
            theta: k.asin(),
            big_k,
            big_k_prime,
            lattice,
            r1,
            r2: (k_prime - k) * (k_prime + k) * big_k * big_k,
            k1: 0.5 * r1.sqrt(),
            k2: (1.0 - 2.0 * k * k) / (3.0 * kkp),
        })
    }

    pub fn omega1(&self) -> f64 {
        self.lattice.omega1
    }

    pub fn omega2(&self) -> Complex64 {
        self.lattice.omega2()
    }

    pub fn omega3(&self) -> Complex64 {
        self.lattice.omega3()
    }

    /// The quarter periods `[ω1/4, ω2/4, ω3/4]`.
    pub fn quarter_periods(&self) -> [Complex64; 3] {
        [
            Complex64::new(self.omega1() / 4.0, 0.0),
            self.omega2() / 4.0,
            self.omega3() / 4.0,
        ]
    }

    /// Right-hand side of the curve equation at `ζ`.
    pub fn curve_rhs(&self, zeta: Complex64) -> Complex64 {
        let kkp = self.k * self.k_prime;
        let lin = (self.k - self.k_prime) * (self.k + self.k_prime);
        self.big_k * self.big_k * zeta * (kkp * (zeta * zeta - 1.0) + lin * zeta)
    }

    /// The finite nonzero branch values `(−a, a⁻¹)` of the projection
    /// `S_k → P¹`, the real roots of `kk'(ζ² − 1) + (k² − k'²) ζ = 0`.
    /// Their product is −1.
    pub fn finite_branch_values(&self) -> (f64, f64) {
        let b = (self.k - self.k_prime) * (self.k + self.k_prime) / (self.k * self.k_prime);
        // ζ² + bζ − 1 = 0, evaluated without cancellation
        let disc = (b * b + 4.0).sqrt();
        let big = if b >= 0.0 { -0.5 * (b + disc) } else { 0.5 * (disc - b) };
        let small = -1.0 / big;
        if big < 0.0 {
            (big, small)
        } else {
            (small, big)
        }
    }
}

/// Builds the moduli record for `k` on the default admissible interval.
pub fn moduli_from_k(k: f64) -> Result<MonopoleModuli> {
    MonopoleModuli::new(k)
}

/// The two square roots `±η` of the curve equation over `ζ`.
pub fn spectral_eta(zeta: Complex64, moduli: &MonopoleModuli) -> (Complex64, Complex64) {
    let eta = moduli.curve_rhs(zeta).sqrt();
    (eta, -eta)
}

/// The point `(ζ, η) = (℘(u) − e3, (ω1/4)℘'(u))` of the spectral curve.
pub fn uniformize(u: Complex64, moduli: &MonopoleModuli) -> Result<(Complex64, Complex64)> {
    let jet = wp_jet(u, &moduli.lattice)?;
    let zeta = jet.p - moduli.lattice.e3;
    let eta = 0.25 * moduli.omega1() * jet.p1;
    Ok((zeta, eta))
}
