//! The Gauss map winds once around a great circle along V_{1/4} and H_{1/4}.

use monosurf::analysis::{winding_along_quarter_line, QuarterLine};
use monosurf::moduli::MonopoleModuli;

fn main() -> monosurf::Result<()> {
    for k in [0.05, 0.3, 0.5, 0.8, 0.95] {
        let m = MonopoleModuli::new(k)?;
        let v = winding_along_quarter_line(&m, QuarterLine::VQuarter, 2048)?;
        let h = winding_along_quarter_line(&m, QuarterLine::HQuarter, 2048)?;
        println!("k = {k}: V turns {:.12} · 2π, H turns {:.12} · 2π", v / std::f64::consts::TAU, h / std::f64::consts::TAU);
    }
    Ok(())
}
