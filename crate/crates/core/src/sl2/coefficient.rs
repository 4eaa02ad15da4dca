use num_complex::Complex64;
use std::f64::consts::PI;

use super::{QuadratureGrid, Su11};
use crate::error::{Error, Result};

/// Exponent `m = n + 1` of the automorphy factor for the holomorphic discrete
/// series with Harish-Chandra parameter `nω`. Its lowest `K`-type has weight
/// `n + 1`.
pub(crate) fn bergman_exponent(n: i64) -> Result<i32> {
    if n < 1 {
        return Err(Error::NotDiscreteSeries(n));
    }
    i32::try_from(n + 1).map_err(|_| Error::NotDiscreteSeries(n))
}

/// `m_ξ(g) = (π(g)ξ, ξ)` for the lowest-weight unit vector `ξ`.
///
/// The representation lives on holomorphic functions on the disc with norm
/// `‖f‖² = (m−1)/π ∫ |f|² (1 − |z|²)^{m−2} dA` and
/// `π(g)f(z) = (ā − b z)^{−m} f((a z − b̄)/(ā − b z))`, where `ξ = 1`.
/// Averaging the holomorphic factor over circles leaves `ā^{−m}`.
pub fn matrix_coefficient(n: i64, g: &Su11) -> Result<Complex64> {
    let m = bergman_exponent(n)?;
    Ok(g.a().conj().powi(-m))
}

/// `(π(g)ξ, ξ)` by direct quadrature over the disc; an oracle for
/// [`matrix_coefficient`].
pub fn bergman_inner_product(n: i64, g: &Su11, grid: &QuadratureGrid) -> Result<Complex64> {
    let m = bergman_exponent(n)?;
    grid.validate()?;
    let (abar, b) = (g.a().conj(), g.b());
    let rule = grid.radial_rule(0.0, 1.0);
    let norm = f64::from(m - 1) / PI;
    let mut total = Complex64::new(0.0, 0.0);
    for &(r, wr) in rule.nodes() {
        let radial = norm * (1.0 - r * r).powi(m - 2) * r * wr;
        for (phi, wp) in grid.circle() {
            let z = Complex64::from_polar(r, phi);
            // 2π from the circle average
            total += (abar - b * z).powi(-m) * (radial * 2.0 * PI * wp);
        }
    }
    Ok(total)
}
