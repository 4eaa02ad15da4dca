//! Numeric checks for `SU(1,1) ≅ SL(2,ℝ)`: matrix coefficients of the
//! holomorphic discrete series, formal degrees, elliptic orbital integrals and
//! Gaussian envelope integrals.
//!
//! The Lie algebra carries `⟨X, Y⟩ = ½ Re tr(X Y†)`, so `log a_t` has length
//! `t` and `K = {diag(e^{iφ}, e^{−iφ})}` is a circle of length `2π`.

mod coefficient;
mod fgoi;
mod group;
mod orbital;
mod quadrature;

pub use coefficient::{bergman_inner_product, matrix_coefficient};
pub use fgoi::{fgoi_envelope_check, EnvelopeMode, EnvelopeReport};
pub use group::{Su11, GROUP_TOL};
pub use orbital::{
    formal_degree, orbital_integral_character, quotient_measure_check, FormalDegreeReport,
    MeasureCheck, OrbitalReport, FORMAL_DEGREE_TAIL_TOL, REFINEMENT_TOL,
};
pub use quadrature::{CompositeRule, QuadratureGrid, PANEL_NODES};

/// Diameter of `K` for the invariant metric above.
pub const DIAM_K: f64 = std::f64::consts::PI;
