//! Complete elliptic integrals of the first and second kind via the
//! arithmetic-geometric mean.
//!
//! Everything here takes the modulus `k` (not the parameter `m = k²`).

use std::f64::consts::FRAC_PI_2;

use crate::error::{Error, Result};

const AGM_TOL: f64 = 1e-16;

/// Arithmetic-geometric mean of two nonnegative reals.
pub fn agm(mut a: f64, mut b: f64) -> f64 {
    if a == 0.0 || b == 0.0 {
        return 0.0;
    }
    for _ in 0..64 {
        let an = 0.5 * (a + b);
        let bn = (a * b).sqrt();
        if (an - bn).abs() <= AGM_TOL * an {
            return 0.5 * (an + bn);
        }
        a = an;
        b = bn;
    }
    a
}

/// `k' = √(1 − k²)` evaluated as `√((1−k)(1+k))` to keep precision near `k = 1`.
#[inline]
pub fn complementary_modulus(k: f64) -> f64 {
    ((1.0 - k) * (1.0 + k)).sqrt()
}

/// K from the complementary modulus alone: `K = π / (2·agm(1, k'))`.
pub(crate) fn k_from_complement(kp: f64) -> f64 {
    FRAC_PI_2 / agm(1.0, kp)
}

/// E from the (modulus, complement) pair using the AGM sequence with the
/// accumulated sum `Σ 2^(n−1) c_n²`.
pub(crate) fn e_from_pair(k: f64, kp: f64) -> f64 {
    if kp == 0.0 {
        return 1.0;
    }
    let mut a = 1.0_f64;
    let mut b = kp;
    let mut c = k;
    let mut weight = 0.5;
    let mut sum = weight * c * c;
    for _ in 0..64 {
        let an = 0.5 * (a + b);
        let bn = (a * b).sqrt();
        c = 0.5 * (a - b);
        weight *= 2.0;
        sum += weight * c * c;
        a = an;
        b = bn;
        if c.abs() <= AGM_TOL * a {
            break;
        }
    }
    FRAC_PI_2 / a * (1.0 - sum)
}

/// Complete elliptic integral of the first kind,
/// `K(k) = ∫₀^{π/2} dψ / √(1 − k² sin²ψ)`, for `0 ≤ k < 1`.
pub fn complete_elliptic_k(k: f64) -> Result<f64> {
    if !(0.0..1.0).contains(&k) {
        return Err(Error::Domain {
            what: "k",
            value: k,
            range: "[0, 1)".into(),
        });
    }
    Ok(k_from_complement(complementary_modulus(k)))
}

/// `K'(k) = K(k')`, computed without forming `√(1 − k'²)` so small `k`
/// keeps full precision.
pub fn complete_elliptic_k_complementary(k: f64) -> Result<f64> {
    if !(0.0 < k && k <= 1.0) {
        return Err(Error::Domain {
            what: "k",
            value: k,
            range: "(0, 1]".into(),
        });
    }
    Ok(k_from_complement(k))
}

/// Complete elliptic integral of the second kind,
/// `E(k) = ∫₀^{π/2} √(1 − k² sin²ψ) dψ`, for `0 ≤ k ≤ 1`.
pub fn complete_elliptic_e(k: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&k) {
        return Err(Error::Domain {
            what: "k",
            value: k,
            range: "[0, 1]".into(),
        });
    }
    Ok(e_from_pair(k, complementary_modulus(k)))
}

/// `dK/dk = E / (k k'²) − K / k`.
pub fn dk_dk(k: f64) -> Result<f64> {
    if !(0.0 < k && k < 1.0) {
        return Err(Error::Domain {
            what: "k",
            value: k,
            range: "(0, 1)".into(),
        });
    }
    let kp2 = (1.0 - k) * (1.0 + k);
    let big_k = complete_elliptic_k(k)?;
    let big_e = complete_elliptic_e(k)?;
    Ok(big_e / (k * kp2) - big_k / k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    /// Trapezoid rule over a full period of the even, π-periodic integrand;
    /// converges geometrically for k < 1.
    fn periodic_quadrature(k: f64, second_kind: bool, n: usize) -> f64 {
        let h = PI / n as f64;
        let sum: f64 = (0..n)
            .map(|i| {
                let s = (i as f64 * h).sin();
                let w = 1.0 - k * k * s * s;
                if second_kind {
                    w.sqrt()
                } else {
                    1.0 / w.sqrt()
                }
            })
            .sum();
        0.5 * h * sum
    }

    #[test]
    fn k_at_zero_is_half_pi() {
        assert_eq!(complete_elliptic_k(0.0).unwrap(), FRAC_PI_2);
        assert!((complete_elliptic_e(0.0).unwrap() - FRAC_PI_2).abs() < 1e-15);
    }

    #[test]
    fn e_at_one_is_one() {
        assert_eq!(complete_elliptic_e(1.0).unwrap(), 1.0);
    }

    #[test]
    fn lemniscatic_values() {
        let k = std::f64::consts::FRAC_1_SQRT_2;
        let big_k = complete_elliptic_k(k).unwrap();
        let big_e = complete_elliptic_e(k).unwrap();
        assert!((big_k - 1.8540746773013719).abs() < 1e-14);
        assert!((big_e - 1.3506438810476755).abs() < 1e-14);
    }

    #[test]
    fn agrees_with_quadrature() {
        for &k in &[0.0, 0.05, 0.3, 0.5, 0.8, 0.95, 0.99] {
            let kq = periodic_quadrature(k, false, 4000);
            let eq = periodic_quadrature(k, true, 4000);
            let kk = complete_elliptic_k(k).unwrap();
            let ee = complete_elliptic_e(k).unwrap();
            assert!((kk - kq).abs() < 1e-12 * kq, "K({k}): {kk} vs {kq}");
            assert!((ee - eq).abs() < 1e-12 * eq, "E({k}): {ee} vs {eq}");
        }
    }

    #[test]
    fn logarithmic_growth_near_one() {
        let k = 0.999;
        let big_k = complete_elliptic_k(k).unwrap();
        let kp = complementary_modulus(k);
        assert!(big_k > 4.0);
        // K ~ ln(4/k') as k -> 1
        assert!((big_k - (4.0 / kp).ln()).abs() < 1e-2);
    }

    #[test]
    fn complementary_matches_direct() {
        for &k in &[0.2, 0.6, 0.9] {
            let direct = complete_elliptic_k(complementary_modulus(k)).unwrap();
            let comp = complete_elliptic_k_complementary(k).unwrap();
            assert!((direct - comp).abs() < 1e-13);
        }
    }

    #[test]
    fn domain_errors() {
        assert!(complete_elliptic_k(1.0).is_err());
        assert!(complete_elliptic_k(-0.1).is_err());
        assert!(complete_elliptic_e(1.5).is_err());
        assert!(complete_elliptic_e(-1e-3).is_err());
    }

    #[test]
    fn derivative_matches_finite_difference() {
        for &k in &[0.2, 0.5, 0.9] {
            let h = 1e-5;
            let fd = (complete_elliptic_k(k + h).unwrap() - complete_elliptic_k(k - h).unwrap())
                / (2.0 * h);
            assert!((dk_dk(k).unwrap() - fd).abs() < 1e-7 * fd.abs().max(1.0));
        }
    }
}
