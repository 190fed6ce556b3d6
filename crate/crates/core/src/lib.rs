//! Minimal surfaces generated by osculation of the spectral curves of
//! centred charge-2 monopoles.
//!
//! The family is parameterised by the elliptic modulus `k ∈ (0,1)`. The
//! crate evaluates the null curve `Φ` in closed form through Weierstrass
//! and theta functions, derives the minimal immersion `φ = Re Φ`, its Gauss
//! map and curvature density, and provides geometric diagnostics and mesh
//! export on top.

pub mod analysis;
pub mod elliptic;
pub mod error;
pub mod io;
pub mod moduli;
pub mod nullcurve;
pub mod vec3;

pub use error::{Error, Result};
