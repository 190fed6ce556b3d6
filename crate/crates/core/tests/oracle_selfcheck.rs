//! The oracles must be right before anything is compared against them.

mod common;

use common::*;

#[test]
fn quadrature_matches_known_values() {
    // lemniscatic case, K(1/√2) = Γ(1/4)² / (4√π)
    let gamma_quarter: f64 = 3.625_609_908_221_908;
    let want = gamma_quarter * gamma_quarter / (4.0 * std::f64::consts::PI.sqrt());
    assert!((quad_k(std::f64::consts::FRAC_1_SQRT_2) - want).abs() < 1e-14);
    assert!((quad_k(0.0) - std::f64::consts::FRAC_PI_2).abs() < 1e-15);
    // Legendre relation E K' + E' K − K K' = π/2
    let k = 0.37;
    let (a, b) = (quad_k(k), quad_k(kp(k)));
    let (ea, eb) = (quad_e(k), quad_e(kp(k)));
    assert!((ea * b + eb * a - a * b - std::f64::consts::FRAC_PI_2).abs() < 1e-13);
}

#[test]
fn laurent_oracle_is_consistent() {
    for k in [0.1, 0.5, 0.9, 0.99] {
        let o = Oracle::new(k);
        // half periods
        for (j, u) in [c(o.w1 / 2.0, 0.0), c(0.0, o.w2 / 2.0), c(o.w1 / 2.0, o.w2 / 2.0)]
            .into_iter()
            .enumerate()
        {
            let (p, dp) = o.wp(u);
            assert!((p - o.e[j]).norm() < 1e-10 * o.e[j].abs().max(1.0), "k={k} j={j} {p}");
            assert!(dp.norm() < 1e-8 * o.e[j].abs().max(1.0).powf(1.5), "k={k} j={j} {dp}");
        }
        // the cubic, at generic points
        for u in random_points(&o, 50, 0.01, 7) {
            let (p, dp) = o.wp(u);
            let rhs = 4.0 * p * p * p - o.g2 * p - o.g3;
            assert!((dp * dp - rhs).norm() < 1e-10 * rhs.norm().max(1.0));
        }
        // quarter periods agree with the tabulated closed forms
        for (u, row) in o.quarters().into_iter().zip(o.quarter_table()) {
            let jet = o.jet(u);
            for (a, b) in jet.into_iter().zip(row) {
                assert!(rel(a, b) < 1e-11, "k={k} u={u}: {a} vs {b}");
            }
        }
    }
}

#[test]
fn derivative_is_consistent_with_finite_difference() {
    let o = Oracle::new(0.42);
    let u = c(0.37, 0.61);
    let h = 1e-5;
    let fd = (o.wp(u + h).0 - o.wp(u - h).0) / (2.0 * h);
    assert!(rel(fd, o.wp(u).1) < 1e-8);
}
