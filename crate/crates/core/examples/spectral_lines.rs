//! Spectral lines of the curve and how close the surface normals along the
//! Higgs axis come to them as k approaches 1.

use monosurf::analysis::higgs_normal_diagnostic;
use monosurf::io::spectral_line_samples;
use monosurf::moduli::MonopoleModuli;

fn main() -> monosurf::Result<()> {
    let m = MonopoleModuli::new(0.5)?;
    for s in spectral_line_samples(&m, 4) {
        println!(
            "ζ = {:.4}  η = {:.4}  point {:?}  direction {:?}",
            s.zeta, s.eta, s.line.point, s.line.direction
        );
    }
    for k in [0.9, 0.99, 0.999] {
        let m = MonopoleModuli::new(k)?;
        let d = higgs_normal_diagnostic(&m, 64)?;
        let worst = d.iter().copied().fold(0.0, f64::max);
        println!("k = {k}: max normal-to-spectral-line distance / K = {worst:.3e}");
    }
    Ok(())
}
