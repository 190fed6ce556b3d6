use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::moduli::MonopoleModuli;
use crate::nullcurve::gauss_sphere;
use crate::vec3::Vec3;

/// The closed quarter-period loops along which the normal winds once.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuarterLine {
    /// `V_{1/4}`: `u` from `ω1/4` to `ω1/4 + ω2`. The normal stays in the
    /// `(ē1, ē3)` plane.
    VQuarter,
    /// `H_{1/4}`: `u` from `ω2/4` to `ω2/4 + ω1`. The normal stays in the
    /// `(ē2, ē3)` plane.
    HQuarter,
}

/// Angle of the normal inside the great-circle plane of `which`, measured
/// from `ē1` (resp. `ē2`) towards `ē3`. With this orientation a single
/// positive turn is `+2π`.
pub fn normal_angle(normal: Vec3, which: QuarterLine) -> f64 {
    match which {
        QuarterLine::VQuarter => normal[2].atan2(normal[0]),
        QuarterLine::HQuarter => normal[2].atan2(normal[1]),
    }
}

/// Net rotation of `γ_φ` around the closed loop, from `samples` steps.
pub fn winding_along_quarter_line(
    moduli: &MonopoleModuli,
    which: QuarterLine,
    samples: usize,
) -> Result<f64> {
    if samples < 256 {
        return Err(Error::Domain {
            what: "samples",
            value: samples as f64,
            range: ">= 256".into(),
        });
    }
    let w1 = moduli.omega1();
    let w2 = moduli.omega2();
    let (start, period) = match which {
        QuarterLine::VQuarter => (Complex64::new(w1 / 4.0, 0.0), w2),
        QuarterLine::HQuarter => (w2 / 4.0, Complex64::new(w1, 0.0)),
    };
    let mut prev = normal_angle(gauss_sphere(start, moduli)?, which);
    let mut total = 0.0;
    for j in 1..=samples {
        let u = start + period * (j as f64 / samples as f64);
        let angle = normal_angle(gauss_sphere(u, moduli)?, which);
        let mut step = angle - prev;
        if step > PI {
            step -= 2.0 * PI;
        } else if step <= -PI {
            step += 2.0 * PI;
        }
        if step.abs() > PI / 2.0 {
            return Err(Error::SamplingTooCoarse { angle: step.abs() });
        }
        total += step;
        prev = angle;
    }
    Ok(total)
}
