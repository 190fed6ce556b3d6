use num_complex::Complex64;

use crate::elliptic::complete::complementary_modulus;

/// Closed-form `[℘, ℘', ℘'', ℘''']` at `ω1/4`, `ω2/4` and `ω3/4` for the
/// lattice of modulus `k`, in that order.
pub fn quarter_period_table(k: f64) -> [[Complex64; 4]; 3] {
    let kp = complementary_modulus(k);
    let c = Complex64::new;
    let s = (k * kp).sqrt();
    let (k2, kp2) = (k * k, kp * kp);
    let a = 1.0 + 3.0 * kp + kp2;
    let b = 1.0 + 3.0 * k + k2;
    [
        [
            c(a / (3.0 * k * kp), 0.0),
            c(-2.0 * (1.0 + kp) / (k * s), 0.0),
            c(4.0 * (1.0 + kp) / (kp * (1.0 - kp)), 0.0),
            c(-8.0 * a / (kp * (1.0 - kp) * s), 0.0),
        ],
        [
            c(-b / (3.0 * k * kp), 0.0),
            c(0.0, -2.0 * (1.0 + k) / (kp * s)),
            c(4.0 * (1.0 + k) / (k * (1.0 - k)), 0.0),
            c(0.0, 8.0 * b / (k * (1.0 - k) * s)),
        ],
        [
            c((k2 - kp2) / (3.0 * k * kp), -1.0),
            c(2.0 * kp / s, 2.0 * k / s),
            c(-8.0, 4.0 * (kp2 - k2) / (k * kp)),
            c(
                8.0 * (5.0 * k2 - 1.0) / (k * s),
                -8.0 * (5.0 * kp2 - 1.0) / (kp * s),
            ),
        ],
    ]
}
