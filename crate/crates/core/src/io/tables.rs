use std::f64::consts::PI;
use std::io::Write;
use std::path::Path;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::analysis::{spectral_line, OrientedLine};
use crate::error::{Error, Result};
use crate::moduli::{spectral_eta, MonopoleModuli};
use crate::nullcurve::immerse;

use super::export::{num, write_with};

/// `(u, G, 𝒦)` at the cell midpoints of an `n × n` grid over the period
/// rectangle.
pub fn curvature_map(moduli: &MonopoleModuli, n: usize) -> Result<Vec<(Complex64, f64, f64)>> {
    if n == 0 {
        return Err(Error::Domain {
            what: "resolution",
            value: 0.0,
            range: ">= 1".into(),
        });
    }
    let hx = moduli.omega1() / n as f64;
    let hy = moduli.lattice.omega2_mag / n as f64;
    let rows = (0..n)
        .into_par_iter()
        .map(|j| {
            (0..n)
                .map(|i| {
                    let u = Complex64::new((i as f64 + 0.5) * hx, (j as f64 + 0.5) * hy);
                    let s = immerse(u, moduli)?;
                    Ok((u, s.g_density, s.gauss_curv))
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(rows.into_iter().flatten().collect())
}

pub fn write_curvature_map(moduli: &MonopoleModuli, n: usize, path: impl AsRef<Path>) -> Result<()> {
    let map = curvature_map(moduli, n)?;
    write_with(path.as_ref(), |w| {
        writeln!(w, "x_re,y_im,G,K")?;
        for (u, g, kk) in &map {
            writeln!(w, "{},{},{},{}", num(u.re), num(u.im), num(*g), num(*kk))?;
        }
        Ok(())
    })
}

/// A point `(ζ, η)` of the spectral curve with its line in `R³`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralSample {
    pub zeta: Complex64,
    pub eta: Complex64,
    pub line: OrientedLine,
}

/// `n` points of `|ζ| = 1` on both sheets of the spectral curve, `2n`
/// samples in all.
pub fn spectral_line_samples(moduli: &MonopoleModuli, n: usize) -> Vec<SpectralSample> {
    let mut out = Vec::with_capacity(2 * n);
    for j in 0..n {
        let zeta = Complex64::from_polar(1.0, 2.0 * PI * j as f64 / n as f64);
        let (a, b) = spectral_eta(zeta, moduli);
        for eta in [a, b] {
            out.push(SpectralSample {
                zeta,
                eta,
                line: spectral_line(zeta, eta),
            });
        }
    }
    out
}

pub fn write_spectral_lines(moduli: &MonopoleModuli, n: usize, path: impl AsRef<Path>) -> Result<()> {
    let samples = spectral_line_samples(moduli, n);
    write_with(path.as_ref(), |w| {
        writeln!(w, "zeta_re,zeta_im,eta_re,eta_im,px,py,pz,dx,dy,dz")?;
        for s in &samples {
            let row = [
                s.zeta.re,
                s.zeta.im,
                s.eta.re,
                s.eta.im,
                s.line.point[0],
                s.line.point[1],
                s.line.point[2],
                s.line.direction[0],
                s.line.direction[1],
                s.line.direction[2],
            ];
            let cells: Vec<String> = row.into_iter().map(num).collect();
            writeln!(w, "{}", cells.join(","))?;
        }
        Ok(())
    })
}
