//! Mesh the star region for several moduli and tabulate the invariants.
//!
//!     cargo run --release --example sweep -- sweep_out/

use monosurf::io::{sweep, SweepPreset};

fn main() -> monosurf::Result<()> {
    let dir = std::env::args().nth(1).unwrap_or_else(|| "sweep_out".into());
    let rows = sweep(&[0.1, 0.3, 0.5, 0.7, 0.9], SweepPreset::Star, &dir)?;
    for r in rows {
        println!(
            "k = {:.1}: β = {:?}, total curvature / 8π = {:.12}, star extent = {:.6}",
            r.k,
            r.beta,
            r.total_curvature / (8.0 * std::f64::consts::PI),
            r.star_extent
        );
    }
    println!("summary written to {dir}/summary.csv");
    Ok(())
}
