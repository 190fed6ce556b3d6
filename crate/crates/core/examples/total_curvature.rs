//! Midpoint-rule integral of the curvature density over a period rectangle;
//! it converges to 8π very quickly because the integrand is periodic.

use monosurf::analysis::{quarter_point_densities, total_curvature};
use monosurf::moduli::MonopoleModuli;

fn main() -> monosurf::Result<()> {
    let target = 8.0 * std::f64::consts::PI;
    for k in [0.1, 0.3, 0.5, 0.7, 0.9] {
        let m = MonopoleModuli::new(k)?;
        print!("k = {k}:");
        for n in [16, 32, 64, 128] {
            let t = total_curvature(&m, n)?;
            print!("  n={n}: {:+.2e}", t / target - 1.0);
        }
        let [g1, g2, g3] = quarter_point_densities(&m)?;
        println!("\n    G at quarter periods: {g1:.9} {g2:.9} {g3:.9}");
    }
    Ok(())
}
