//! The six metric branch points ±β1, ±β2, ±β3 as k varies, and the turning
//! modulus where |β1| = K/2k stops decreasing.

use monosurf::analysis::{branch_points, turning_modulus};
use monosurf::moduli::MonopoleModuli;

fn main() -> monosurf::Result<()> {
    println!("{:>8} {:>14} {:>14} {:>14} {:>14}", "k", "|β1|", "|β2|", "|β3|", "|β1-β3|/K");
    for k in [0.05, 0.1, 0.3, 0.5, std::f64::consts::FRAC_1_SQRT_2, 0.9, 0.99, 0.999] {
        let m = MonopoleModuli::new(k)?;
        let [b1, b2, b3] = branch_points(&m);
        println!(
            "{k:>8.4} {:>14.9} {:>14.9} {:>14.9} {:>14.9}",
            b1[1],
            b2[2],
            b3[1],
            (b1[1] - b3[1]).abs() / m.big_k
        );
    }
    let t = turning_modulus()?;
    println!("turning modulus k0 = {:.15}, K(k0) = {:.12}, min |β1| = {:.12}", t.k0, t.big_k, t.big_k / (2.0 * t.k0));
    Ok(())
}
