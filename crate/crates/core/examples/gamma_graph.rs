//! Sample the pointed-star graph Γ: the star polyline through ±β2, ±β3 and
//! the two Higgs-axis polylines.

use monosurf::analysis::{gamma_graph, star_slope};
use monosurf::moduli::MonopoleModuli;
use num_complex::Complex64;

fn main() -> monosurf::Result<()> {
    let m = MonopoleModuli::new(0.5)?;
    let g = gamma_graph(&m, 64)?;
    println!("star vertices:");
    for v in g.star_vertices() {
        println!("  {v:?}");
    }
    let off_axis = g
        .higgs_polylines
        .iter()
        .flatten()
        .map(|s| s.pos[0].abs().max(s.pos[2].abs()))
        .fold(0.0, f64::max);
    println!("largest off-axis component along the Higgs polylines: {off_axis:.2e}");

    let quarter = g.higgs_first_quarter();
    println!(
        "Higgs coordinate along V1: {:.9} -> {:.9} over {} samples",
        quarter[0].pos[1],
        quarter[quarter.len() - 1].pos[1],
        quarter.len()
    );

    let w1 = m.omega1();
    let y = m.lattice.omega2_mag / 4.0;
    for t in [0.05, 0.1, 0.15, 0.2, 0.24] {
        let u = Complex64::new(t * w1, y);
        println!("  slope dφ3/dφ2 at x = {t:.2}ω1: {:.6}", star_slope(u, &m)?);
    }
    Ok(())
}
