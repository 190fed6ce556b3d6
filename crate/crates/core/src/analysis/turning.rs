use serde::Serialize;

use crate::elliptic::{complementary_modulus, complete_elliptic_e, complete_elliptic_k, dk_dk};
use crate::error::Result;

const BRACKET: (f64, f64) = (0.1, 0.99);

/// The modulus at which `|β1| = K/(2k)` is stationary.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TurningModulus {
    pub k0: f64,
    /// `k0·K'(k0) − K(k0)` at the returned root (K' = dK/dk here).
    pub residual: f64,
    pub big_k: f64,
}

/// `k·dK/dk − K = E/k'² − 2K`.
pub fn turning_residual(k: f64) -> Result<f64> {
    let kp = complementary_modulus(k);
    Ok(complete_elliptic_e(k)? / (kp * kp) - 2.0 * complete_elliptic_k(k)?)
}

/// Solves `k·dK/dk = K` by bisection on `(0.1, 0.99)`.
pub fn turning_modulus() -> Result<TurningModulus> {
    let (mut lo, mut hi) = BRACKET;
    let mut f_lo = turning_residual(lo)?;
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let f_mid = turning_residual(mid)?;
        if f_mid == 0.0 {
            lo = mid;
            hi = mid;
            break;
        }
        if (f_mid < 0.0) == (f_lo < 0.0) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    let k0 = 0.5 * (lo + hi);
    let big_k = complete_elliptic_k(k0)?;
    Ok(TurningModulus {
        k0,
        residual: k0 * dk_dk(k0)? - big_k,
        big_k,
    })
}
