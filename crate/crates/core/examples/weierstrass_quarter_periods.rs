//! ℘ and its derivatives at the quarter periods against the closed forms,
//! plus the complete elliptic integrals behind the lattice.

use monosurf::elliptic::{
    complete_elliptic_e, complete_elliptic_k, quarter_period_table, wp_jet, RectLattice,
};
use num_complex::Complex64;

fn main() -> monosurf::Result<()> {
    for k in [0.1, 0.3, std::f64::consts::FRAC_1_SQRT_2, 0.9, 0.99] {
        let lat = RectLattice::from_modulus(k)?;
        println!(
            "k = {k:.6}  K = {:.12}  E = {:.12}  e = ({:.6}, {:.6}, {:.6})",
            complete_elliptic_k(k)?,
            complete_elliptic_e(k)?,
            lat.e1,
            lat.e2,
            lat.e3
        );
        let quarters = [Complex64::new(lat.omega1 / 4.0, 0.0), lat.omega2() / 4.0, lat.omega3() / 4.0];
        let mut worst = 0.0f64;
        for (u, row) in quarters.iter().zip(quarter_period_table(k)) {
            let j = wp_jet(*u, &lat)?;
            for (got, want) in [j.p, j.p1, j.p2, j.p3].into_iter().zip(row) {
                worst = worst.max((got - want).norm() / want.norm().max(1.0));
            }
        }
        println!("    worst relative deviation over 12 quarter values: {worst:.2e}");
    }
    Ok(())
}
