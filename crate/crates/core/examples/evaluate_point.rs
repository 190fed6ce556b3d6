//! Evaluate the null curve, immersion, Gauss map and curvature at one point.
//!
//!     cargo run --example evaluate_point -- 0.6 0.31 0.17

use monosurf::moduli::MonopoleModuli;
use monosurf::nullcurve::{gauss_map, immerse, phi_null};
use num_complex::Complex64;

fn main() -> monosurf::Result<()> {
    let args: Vec<f64> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let k = args.first().copied().unwrap_or(0.6);
    let u = Complex64::new(args.get(1).copied().unwrap_or(0.31), args.get(2).copied().unwrap_or(0.17));

    let m = MonopoleModuli::new(k)?;
    println!("k = {k}, k' = {:.6}, K = {:.12}, K' = {:.12}", m.k_prime, m.big_k, m.big_k_prime);
    println!("ω1 = {:.12}, ω2 = {:.12}i", m.omega1(), m.lattice.omega2_mag);

    let p = phi_null(u, &m)?;
    let s = immerse(u, &m)?;
    println!("u = {u}");
    for j in 0..3 {
        println!("  Φ{} = {:.12}   Φ'{} = {:.12}", j + 1, p.phi[j], j + 1, p.dphi[j]);
    }
    println!("  Φ'·Φ' = {:.3e}", p.nullity().norm());
    println!("  φ = {:?}", s.pos);
    println!("  g = {:?}", gauss_map(u, &m)?);
    println!("  normal = {:?}", s.normal);
    println!("  λ = {:.9}, G = {:.9}, 𝒦 = {:.9}", s.lambda, s.g_density, s.gauss_curv);
    Ok(())
}
