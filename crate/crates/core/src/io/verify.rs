use std::f64::consts::{FRAC_1_SQRT_2, PI};

use num_complex::Complex64;
use serde::Serialize;

use crate::analysis::{
    branch_points, quarter_period_phi, quarter_point_densities, reflection_pairs, total_curvature,
    turning_modulus, winding_along_quarter_line, QuarterLine,
};
use crate::elliptic::{quarter_period_table, wp_jet};
use crate::error::Result;
use crate::moduli::MonopoleModuli;
use crate::nullcurve::{
    frame_transform, immerse, phi_null, weierstrass_rep_oracle, FrameDirection,
};
use crate::vec3;

use super::patch::distance_to_ends;

/// One executed check.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckRecord {
    pub name: String,
    pub k: f64,
    pub residual: f64,
    pub tolerance: f64,
    pub pass: bool,
    /// Reported but never counted as a failure.
    pub informational: bool,
}

/// Everything [`run_verification`] checked.
#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct VerificationReport {
    pub records: Vec<CheckRecord>,
}

impl VerificationReport {
    /// True when every non-informational check passed.
    pub fn all_passed(&self) -> bool {
        self.records.iter().all(|r| r.pass || r.informational)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.records.iter().filter(|r| !r.pass && !r.informational)
    }

    pub fn get(&self, name: &str, k: f64) -> Option<&CheckRecord> {
        self.records.iter().find(|r| r.name == name && r.k == k)
    }
}

/// Tolerance policy. Each check has its own default; `global` replaces all
/// of them at once.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct Tolerances {
    pub global: Option<f64>,
}

impl Tolerances {
    pub fn uniform(tol: f64) -> Self {
        Tolerances { global: Some(tol) }
    }

    fn pick(&self, default: f64) -> f64 {
        self.global.unwrap_or(default)
    }
}

/// Deterministic, well-spread points of the period rectangle, kept a
/// little away from the ends and half periods.
pub fn spread_points(moduli: &MonopoleModuli, n: usize) -> Vec<Complex64> {
    let (w1, w2) = (moduli.omega1(), moduli.lattice.omega2_mag);
    let a1 = (5f64.sqrt() - 1.0) / 2.0;
    let a2 = 2f64.sqrt() - 1.0;
    let mut out = Vec::with_capacity(n);
    let mut j = 0usize;
    while out.len() < n {
        j += 1;
        let x = (0.5 + j as f64 * a1).fract();
        let y = (0.5 + j as f64 * a2).fract();
        let u = Complex64::new(x * w1, y * w2);
        if distance_to_ends(u, moduli) > 1e-3 * w1 {
            out.push(u);
        }
    }
    out
}

fn rel(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / b.norm().max(1.0)
}

struct Runner<'a> {
    records: &'a mut Vec<CheckRecord>,
    k: f64,
}

impl Runner<'_> {
    fn check(&mut self, name: &str, tolerance: f64, residual: Result<f64>) {
        // an evaluation error counts as an infinitely bad residual
        let residual = residual.unwrap_or(f64::INFINITY);
        self.records.push(CheckRecord {
            name: name.to_string(),
            k: self.k,
            residual,
            tolerance,
            pass: residual <= tolerance,
            informational: false,
        });
    }
}

fn max_of(it: impl IntoIterator<Item = Result<f64>>) -> Result<f64> {
    it.into_iter().try_fold(0.0f64, |acc, r| Ok(acc.max(r?)))
}

fn checks_for(m: &MonopoleModuli, tol: &Tolerances, records: &mut Vec<CheckRecord>) {
    let mut run = Runner { records, k: m.k };
    let q = m.quarter_periods();
    let pts = spread_points(m, 128);

    run.check(
        "appendix_table",
        tol.pick(1e-10),
        (|| {
            let table = quarter_period_table(m.k);
            let mut worst = 0.0f64;
            for (u, row) in q.iter().zip(table) {
                let jet = wp_jet(*u, &m.lattice)?;
                for (got, want) in [jet.p, jet.p1, jet.p2, jet.p3].into_iter().zip(row) {
                    worst = worst.max(rel(got, want));
                }
            }
            Ok(worst)
        })(),
    );

    run.check(
        "null_curve_quarter_values",
        tol.pick(1e-9),
        max_of(q.iter().zip(quarter_period_phi(m)).map(|(u, want)| {
            let got = phi_null(*u, m)?.phi;
            Ok((0..3).map(|j| rel(got[j], want[j])).fold(0.0, f64::max))
        })),
    );

    run.check(
        "branch_points",
        tol.pick(1e-9),
        (|| {
            let b = branch_points(m);
            let mut worst = 0.0f64;
            for (u, beta) in q.iter().zip(b) {
                let p = immerse(*u, m)?.pos;
                worst = worst.max(vec3::dist(p, beta) / vec3::norm(beta).max(1.0));
            }
            Ok(worst)
        })(),
    );

    run.check(
        "weierstrass_oracle",
        tol.pick(1e-8),
        max_of(pts.iter().take(64).map(|&u| {
            let omega = weierstrass_rep_oracle(u, m)?;
            let phi = frame_transform(phi_null(u, m)?.phi, m, FrameDirection::ToStandard);
            let scale = phi.iter().map(|z| z.norm()).fold(1.0, f64::max);
            Ok((0..3).map(|j| (omega[j] - phi[j]).norm()).fold(0.0, f64::max) / scale)
        })),
    );

    run.check(
        "nullity",
        tol.pick(1e-9),
        max_of(pts.iter().map(|&u| {
            let p = phi_null(u, m)?;
            let size: f64 = p.dphi.iter().map(|z| z.norm_sqr()).sum();
            Ok(p.nullity().norm() / size.max(f64::MIN_POSITIVE))
        })),
    );

    run.check(
        "quadratic_identity",
        tol.pick(1e-9),
        max_of(pts.iter().map(|&u| {
            let j = wp_jet(u, &m.lattice)?;
            let rhs = 4.0 * j.p * j.p * j.p - m.lattice.g2 * j.p - m.lattice.g3;
            let lhs = j.p1 * j.p1;
            Ok((lhs - rhs).norm() / lhs.norm().max(rhs.norm()).max(1.0))
        })),
    );

    run.check(
        "total_curvature",
        tol.pick(1e-3),
        total_curvature(m, 256).map(|t| (t / (8.0 * PI) - 1.0).abs()),
    );

    run.check(
        "quarter_period_density",
        tol.pick(1e-9),
        quarter_point_densities(m).map(|g| {
            let (k, kp) = (m.k, m.k_prime);
            let want = [4.0 * k / kp, 4.0 * kp / k, 4.0 / (k * kp)];
            g.iter()
                .zip(want)
                .map(|(a, b)| (a - b).abs() / b)
                .fold(0.0, f64::max)
        }),
    );

    run.check(
        "density_reflections",
        tol.pick(1e-9),
        max_of(pts.iter().take(64).map(|&u| {
            let pairs = reflection_pairs(u, m)?;
            Ok(pairs
                .iter()
                .map(|(a, b)| (a - b).abs() / b.abs().max(1.0))
                .fold(0.0, f64::max))
        })),
    );

    run.check(
        "higgs_axis",
        tol.pick(1e-8),
        max_of((0..64).map(|j| {
            let y = m.lattice.omega2_mag * (j as f64 + 0.5) / 64.0;
            let p = immerse(Complex64::new(m.omega1() / 4.0, y), m)?.pos;
            Ok(p[0].abs().max(p[2].abs()))
        })),
    );

    for (name, line) in [
        ("winding_v_quarter", QuarterLine::VQuarter),
        ("winding_h_quarter", QuarterLine::HQuarter),
    ] {
        run.check(
            name,
            tol.pick(1e-6),
            winding_along_quarter_line(m, line, 1024).map(|w| (w - 2.0 * PI).abs()),
        );
    }
}

/// Runs the invariant suite for every `k` in `k_list`, then the turning
/// modulus checks once.
///
/// Every `k` is validated before anything runs; an inadmissible value is a
/// domain error. An empty list yields an empty report. The turning modulus
/// record stores `k0` in its `k` field; whether `k0 < 1/√2` is reported as
/// informational.
pub fn run_verification(k_list: &[f64]) -> Result<VerificationReport> {
    run_verification_with(k_list, &Tolerances::default())
}

/// [`run_verification`] with an explicit tolerance policy.
pub fn run_verification_with(k_list: &[f64], tol: &Tolerances) -> Result<VerificationReport> {
    let moduli = k_list
        .iter()
        .map(|&k| MonopoleModuli::new(k))
        .collect::<Result<Vec<_>>>()?;
    let mut records = Vec::new();
    if moduli.is_empty() {
        return Ok(VerificationReport { records });
    }
    for m in &moduli {
        checks_for(m, tol, &mut records);
    }

    match turning_modulus() {
        Ok(t) => {
            let tolerance = tol.pick(1e-8);
            let residual = t.residual.abs() / t.big_k;
            records.push(CheckRecord {
                name: "turning_modulus".into(),
                k: t.k0,
                residual,
                tolerance,
                pass: residual <= tolerance,
                informational: false,
            });
            records.push(CheckRecord {
                name: "turning_modulus_below_inv_sqrt2".into(),
                k: t.k0,
                residual: t.k0 - FRAC_1_SQRT_2,
                tolerance: 0.0,
                pass: t.k0 < FRAC_1_SQRT_2,
                informational: true,
            });
        }
        Err(_) => records.push(CheckRecord {
            name: "turning_modulus".into(),
            k: f64::NAN,
            residual: f64::INFINITY,
            tolerance: tol.pick(1e-8),
            pass: false,
            informational: false,
        }),
    }
    Ok(VerificationReport { records })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Error;

    #[test]
    fn empty_list_is_empty_success() {
        let r = run_verification(&[]).unwrap();
        assert!(r.records.is_empty());
        assert!(r.all_passed());
    }

    #[test]
    fn bad_modulus_is_domain_error() {
        assert!(matches!(run_verification(&[2.0]), Err(Error::Domain { .. })));
        assert!(matches!(run_verification(&[0.5, 0.0]), Err(Error::Domain { .. })));
    }

    #[test]
    fn half_passes_everything() {
        let r = run_verification(&[0.5]).unwrap();
        for name in ["nullity", "appendix_table", "total_curvature"] {
            assert!(r.get(name, 0.5).is_some_and(|c| c.pass), "{name}");
        }
        let fails: Vec<_> = r.failures().collect();
        assert!(fails.is_empty(), "{fails:?}");
    }

    #[test]
    fn impossible_tolerance_fails() {
        let r = run_verification_with(&[0.5], &Tolerances::uniform(0.0)).unwrap();
        assert!(!r.all_passed());
    }
}
