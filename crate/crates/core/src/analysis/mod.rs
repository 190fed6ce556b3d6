//! Geometric diagnostics of the minimal surfaces: branch points, the
//! Γ graph, curvature quadrature, Gauss-map winding, spectral lines and
//! the turning modulus.

mod branch;
mod curvature;
mod gamma;
mod lines;
mod turning;
mod winding;

pub use branch::{branch_points, quarter_period_phi};
pub use curvature::{
    quarter_point_densities, reflection_pairs, scaled_density_off_h_quarter,
    scaled_density_on_v_quarter,
    total_curvature, v_quarter_bracket,
};
pub use gamma::{gamma_graph, star_slope, star_slope_closed_form, GammaGraph};
pub use lines::{
    higgs_normal_diagnostic, line_distance, normal_line, normal_line_distances, spectral_line,
    spectral_line_family, OrientedLine,
};
pub use turning::{turning_modulus, turning_residual, TurningModulus};
pub use winding::{normal_angle, winding_along_quarter_line, QuarterLine};
