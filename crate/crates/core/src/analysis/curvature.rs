use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::Result;
use crate::moduli::MonopoleModuli;
use crate::nullcurve::curvature_density;

/// Midpoint-rule integral of the curvature density `G` over the period
/// rectangle `[0, ω1) × [0, |ω2|)` on a `grid_n × grid_n` grid.
///
/// The integral is the area swept by the Gauss map, `4π · deg = 8π`.
/// Rows are summed in parallel and combined in a fixed order, so the result
/// does not depend on the thread count.
pub fn total_curvature(moduli: &MonopoleModuli, grid_n: usize) -> Result<f64> {
    let n = grid_n.max(1);
    let hx = moduli.omega1() / n as f64;
    let hy = moduli.lattice.omega2_mag / n as f64;
    let rows: Vec<f64> = (0..n)
        .into_par_iter()
        .map(|j| {
            let y = (j as f64 + 0.5) * hy;
            (0..n)
                .map(|i| {
                    let u = Complex64::new((i as f64 + 0.5) * hx, y);
                    curvature_density(u, moduli)
                })
                .sum::<Result<f64>>()
        })
        .collect::<Result<Vec<f64>>>()?;
    Ok(rows.iter().sum::<f64>() * hx * hy)
}

/// `G` at the quarter periods `[ω1/4, ω2/4, ω3/4]`.
pub fn quarter_point_densities(moduli: &MonopoleModuli) -> Result<[f64; 3]> {
    let q = moduli.quarter_periods();
    Ok([
        curvature_density(q[0], moduli)?,
        curvature_density(q[1], moduli)?,
        curvature_density(q[2], moduli)?,
    ])
}

/// `G1 = ω1² G(u)` sampled along `V_{1/4}` at `samples` points.
pub fn scaled_density_on_v_quarter(moduli: &MonopoleModuli, samples: usize) -> Result<Vec<f64>> {
    let w1 = moduli.omega1();
    let h = moduli.lattice.omega2_mag / samples as f64;
    (0..samples)
        .map(|j| {
            let u = Complex64::new(w1 / 4.0, j as f64 * h);
            Ok(w1 * w1 * curvature_density(u, moduli)?)
        })
        .collect()
}

/// `ω1²/(k'²(℘(2u) − e2))` along `V_{1/4}`; lies in `[4k²K², 4K²]`.
pub fn v_quarter_bracket(moduli: &MonopoleModuli, samples: usize) -> Result<Vec<f64>> {
    // on V_{1/4}, G = 4/(k'²(℘(2u) − e2)), so the bracket is G1/4
    Ok(scaled_density_on_v_quarter(moduli, samples)?
        .into_iter()
        .map(|g1| g1 / 4.0)
        .collect())
}

/// `G2 = |ω2|² G(u)` on the horizontal lines `H_0` and `H_{1/2}`, which stay
/// a quarter period away from `H_{1/4} ∪ H_{3/4}`.
pub fn scaled_density_off_h_quarter(moduli: &MonopoleModuli, samples: usize) -> Result<Vec<f64>> {
    let w1 = moduli.omega1();
    let w2 = moduli.lattice.omega2_mag;
    let h = w1 / samples as f64;
    let mut out = Vec::with_capacity(2 * samples);
    for y in [0.0, w2 / 2.0] {
        for j in 0..samples {
            let u = Complex64::new((j as f64 + 0.5) * h, y);
            out.push(w2 * w2 * curvature_density(u, moduli)?);
        }
    }
    Ok(out)
}

/// Pairs `(G(a), G(b))` for the four reflections of `G` across
/// `V_{1/4}`, `V_{3/4}`, `H_{1/4}` and `H_{3/4}`:
/// `G(ω1/4 − ū) = G(ω1/4 + u)`, `G(3ω1/4 − ū) = G(3ω1/4 + u)`,
/// `G(ω2/4 + ū) = G(ω2/4 + u)`, `G(3ω2/4 + ū) = G(3ω2/4 + u)`.
pub fn reflection_pairs(u: Complex64, moduli: &MonopoleModuli) -> Result<[(f64, f64); 4]> {
    let w1 = Complex64::new(moduli.omega1(), 0.0);
    let w2 = moduli.omega2();
    let g = |z: Complex64| curvature_density(z, moduli);
    let ub = u.conj();
    Ok([
        (g(w1 / 4.0 - ub)?, g(w1 / 4.0 + u)?),
        (g(w1 * 0.75 - ub)?, g(w1 * 0.75 + u)?),
        (g(w2 / 4.0 + ub)?, g(w2 / 4.0 + u)?),
        (g(w2 * 0.75 + ub)?, g(w2 * 0.75 + u)?),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::moduli::moduli_from_k;
    use std::f64::consts::PI;

    #[test]
    fn total_is_eight_pi() {
        let m = moduli_from_k(0.5).unwrap();
        let t = total_curvature(&m, 128).unwrap();
        assert!((t - 8.0 * PI).abs() < 1e-3 * 8.0 * PI, "{t}");
    }

    #[test]
    fn quarter_values() {
        for &k in &[0.15, 0.5, 0.9] {
            let m = moduli_from_k(k).unwrap();
            let kp = m.k_prime;
            let [g1, g2, g3] = quarter_point_densities(&m).unwrap();
            assert!((g1 - 4.0 * k / kp).abs() < 1e-9 * g1);
            assert!((g2 - 4.0 * kp / k).abs() < 1e-9 * g2);
            assert!((g3 - 4.0 / (k * kp)).abs() < 1e-9 * g3);
            assert!(g3 >= g1 && g3 >= g2);
        }
    }

    #[test]
    fn bracket_on_v_quarter() {
        for &k in &[0.3, 0.8] {
            let m = moduli_from_k(k).unwrap();
            let lo = 4.0 * k * k * m.big_k * m.big_k;
            let hi = 4.0 * m.big_k * m.big_k;
            for b in v_quarter_bracket(&m, 64).unwrap() {
                assert!(b >= lo * (1.0 - 1e-12) && b <= hi * (1.0 + 1e-12), "{lo} {b} {hi}");
            }
        }
    }
}
