use num_complex::Complex64;

use crate::moduli::MonopoleModuli;
use crate::nullcurve::CVec3;
use crate::vec3::Vec3;

/// The Higgs and third-axis branch points `[β1, β2, β3]` in k-monopole
/// coordinates.
pub fn branch_points(moduli: &MonopoleModuli) -> [Vec3; 3] {
    let (k, kp, big_k) = (moduli.k, moduli.k_prime, moduli.big_k);
    [
        [0.0, big_k / (2.0 * k), 0.0],
        [0.0, 0.0, k * k * big_k / (2.0 * kp)],
        [0.0, k * k * big_k / 2.0, 0.0],
    ]
}

/// Closed forms of `Φ(ω1/4)`, `Φ(ω2/4)`, `Φ(ω3/4)`.
pub fn quarter_period_phi(moduli: &MonopoleModuli) -> [CVec3; 3] {
    let (k, kp, big_k) = (moduli.k, moduli.k_prime, moduli.big_k);
    let c = Complex64::new;
    let (k2, kp2) = (k * k, kp * kp);
    let a = big_k / (2.0 * k);
    let b = big_k / (2.0 * kp);
    let h = big_k / 2.0;
    [
        [c(0.0, 0.0), c(a, 0.0), c(0.0, -a * kp2)],
        [c(0.0, -b), c(0.0, 0.0), c(b * k2, 0.0)],
        [c(0.0, -h * kp2), c(h * k2, 0.0), c(0.0, 0.0)],
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::moduli::moduli_from_k;
    use crate::nullcurve::phi_null;

    #[test]
    fn branch_points_are_real_parts_of_quarter_values() {
        for i in 1..=10 {
            let m = moduli_from_k(i as f64 / 11.0).unwrap();
            let beta = branch_points(&m);
            let q = quarter_period_phi(&m);
            for (j, u) in m.quarter_periods().iter().enumerate() {
                let p = phi_null(*u, &m).unwrap().position();
                for c in 0..3 {
                    assert!((beta[j][c] - q[j][c].re).abs() < 1e-12);
                    assert!((beta[j][c] - p[c]).abs() < 1e-9 * beta[j][c].abs().max(1.0));
                }
            }
        }
    }

    #[test]
    fn square_lattice_beta1() {
        let m = moduli_from_k(std::f64::consts::FRAC_1_SQRT_2).unwrap();
        let b1 = branch_points(&m)[0];
        assert!((b1[1] - 1.3110287771461).abs() < 1e-12);
        assert_eq!(b1[0], 0.0);
        assert_eq!(b1[2], 0.0);
    }

    #[test]
    fn third_component_at_omega1_quarter() {
        let m = moduli_from_k(std::f64::consts::FRAC_1_SQRT_2).unwrap();
        let q = quarter_period_phi(&m);
        // e1 − e3 = 1, so f3(ω1/2)³ = 1 and Φ3 = −i ω1/4
        assert!((q[0][2] - Complex64::new(0.0, -m.omega1() / 4.0)).norm() < 1e-14);
        assert_eq!(q[2][2].norm(), 0.0);
    }

    #[test]
    fn higgs_pairs_merge_as_k_grows() {
        let gaps: Vec<f64> = [0.9, 0.99, 0.999]
            .iter()
            .map(|&k| {
                let m = moduli_from_k(k).unwrap();
                let b = branch_points(&m);
                (b[0][1] - b[2][1]).abs()
            })
            .collect();
        assert!(gaps[0] > gaps[1] && gaps[1] > gaps[2]);
        let b2: Vec<f64> = [0.9, 0.99, 0.999]
            .iter()
            .map(|&k| branch_points(&moduli_from_k(k).unwrap())[1][2])
            .collect();
        assert!(b2[0] < b2[1] && b2[1] < b2[2]);
    }
}
