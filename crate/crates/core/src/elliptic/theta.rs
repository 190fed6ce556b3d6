//! Jacobi theta series for a real nome.
//!
//! Arguments are expected to lie in the reduced strip
//! `|Im v| ≤ −ln(q)/2`, where every series converges like `q^(n²−n)`.

use num_complex::Complex64;

const TERM_TOL: f64 = 1e-18;
const MAX_TERMS: usize = 200;

/// `[θ1(v), θ2(v), θ3(v), θ4(v)]` for nome `q = exp(log_q)`.
pub(crate) fn thetas(v: Complex64, log_q: f64) -> [Complex64; 4] {
    let i = Complex64::i();
    let e1 = (i * v).exp(); // e^{iv}
    let e1_inv = 1.0 / e1;
    let w = e1 * e1; // e^{2iv}
    let w_inv = e1_inv * e1_inv;

    let mut t1 = Complex64::new(0.0, 0.0);
    let mut t2 = Complex64::new(0.0, 0.0);
    let mut t3 = Complex64::new(1.0, 0.0);
    let mut t4 = Complex64::new(1.0, 0.0);

    // odd multiples (2n+1)v
    let mut pos = e1;
    let mut neg = e1_inv;
    for n in 0..MAX_TERMS {
        let nf = n as f64 + 0.5;
        let weight = (log_q * nf * nf).exp();
        let sin = (pos - neg) / (2.0 * i);
        let cos = 0.5 * (pos + neg);
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        t1 += 2.0 * sign * weight * sin;
        t2 += 2.0 * weight * cos;
        let growth = pos.norm().max(neg.norm());
        if weight * growth < TERM_TOL {
            break;
        }
        pos *= w;
        neg *= w_inv;
    }

    // even multiples 2n v
    let mut pos = w;
    let mut neg = w_inv;
    for n in 1..MAX_TERMS {
        let nf = n as f64;
        let weight = (log_q * nf * nf).exp();
        let cos = 0.5 * (pos + neg);
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        t3 += 2.0 * weight * cos;
        t4 += 2.0 * sign * weight * cos;
        let growth = pos.norm().max(neg.norm());
        if weight * growth < TERM_TOL {
            break;
        }
        pos *= w;
        neg *= w_inv;
    }

    [t1, t2, t3, t4]
}
