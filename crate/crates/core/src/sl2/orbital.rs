use num_complex::Complex64;
use serde::Serialize;

use super::coefficient::bergman_exponent;
use super::{matrix_coefficient, QuadratureGrid, Su11, DIAM_K};
use crate::characters::REGULARITY_TOL;
use crate::error::{Error, Result};
use crate::json::ComplexValue;

/// Largest accepted change under grid refinement, relative for the formal
/// degree and absolute for orbital integrals.
pub const REFINEMENT_TOL: f64 = 1e-4;
/// Largest accepted truncation tail of `‖m_ξ‖²`, relative to its value.
pub const FORMAL_DEGREE_TAIL_TOL: f64 = 1e-6;

/// Radial Haar density: `dg = c · 2 sinh(2t) dt dk dk'` on `g = k a_t k'`,
/// with `dk` of unit volume.
pub(crate) fn kak_density(t: f64, haar_scale: f64) -> f64 {
    haar_scale * 2.0 * (2.0 * t).sinh()
}

/// Invariant measure on the disc model of `G/T` in polar coordinates,
/// `d(xT) = c · 4r / (1 − r²)² dr dψ/2π`, so that `dg = d(xT) dy` with `T` of
/// unit volume.
pub(crate) fn disc_density(r: f64, haar_scale: f64) -> f64 {
    let w = 1.0 - r * r;
    haar_scale * 4.0 * r / (w * w)
}

fn check_scale(haar_scale: f64) -> Result<()> {
    if haar_scale > 0.0 && haar_scale.is_finite() {
        Ok(())
    } else {
        Err(Error::Parse(format!(
            "Haar scale must be positive, got {haar_scale}"
        )))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct FormalDegreeReport {
    pub n: i64,
    /// `d_π = ‖m_ξ‖⁻²`.
    pub value: f64,
    pub norm_squared: f64,
    /// Bound on the part of `‖m_ξ‖²` beyond `t_max`.
    pub tail_bound: f64,
    pub refinement_delta: f64,
    pub grid: QuadratureGrid,
    pub haar_scale: f64,
    #[serde(rename = "diam_K")]
    pub diam_k: f64,
}

fn norm_squared(n: i64, grid: &QuadratureGrid, haar_scale: f64) -> Result<f64> {
    let rule = grid.radial_rule(0.0, grid.t_max);
    let mut total = 0.0;
    for &(t, w) in rule.nodes() {
        // |m_ξ| is K-biinvariant
        total +=
            w * matrix_coefficient(n, &Su11::boost(t))?.norm_sqr() * kak_density(t, haar_scale);
    }
    Ok(total)
}

/// `d_π = ‖m_ξ‖⁻²` by radial quadrature, with a truncation bound and a check
/// against the refined grid.
pub fn formal_degree(n: i64, grid: &QuadratureGrid, haar_scale: f64) -> Result<FormalDegreeReport> {
    let m = bergman_exponent(n)?;
    grid.validate()?;
    check_scale(haar_scale)?;
    let coarse = norm_squared(n, grid, haar_scale)?;
    let fine = norm_squared(n, &grid.refined(), haar_scale)?;
    // ∫_T^∞ cosh^{−2m} · 2 sinh 2t dt = 2 cosh(T)^{2−2m} / (m − 1)
    let tail_bound = haar_scale * 2.0 * grid.t_max.cosh().powi(2 - 2 * m) / f64::from(m - 1);
    let refinement_delta = (coarse - fine).abs() / fine;
    if refinement_delta > REFINEMENT_TOL {
        return Err(Error::NotConverged(format!(
            "formal degree changed by {refinement_delta:e} under refinement"
        )));
    }
    if tail_bound > FORMAL_DEGREE_TAIL_TOL * fine {
        return Err(Error::NotConverged(format!(
            "formal degree tail bound {tail_bound:e} at t_max = {}",
            grid.t_max
        )));
    }
    Ok(FormalDegreeReport {
        n,
        value: 1.0 / fine,
        norm_squared: fine,
        tail_bound,
        refinement_delta,
        grid: *grid,
        haar_scale,
        diam_k: DIAM_K,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct OrbitalReport {
    pub n: i64,
    pub theta: f64,
    /// `d_π ∫_{G/T} m_ξ(x g_θ x⁻¹) d(xT)`.
    pub value: ComplexValue,
    /// Bound on the contribution from outside `|z| ≤ disc_r_max`.
    pub tail_bound: f64,
    pub refinement_delta: f64,
    pub formal_degree: f64,
    pub grid: QuadratureGrid,
    pub haar_scale: f64,
    #[serde(rename = "diam_K")]
    pub diam_k: f64,
}

fn disc_integral(n: i64, g: &Su11, grid: &QuadratureGrid, haar_scale: f64) -> Result<Complex64> {
    let rule = grid.radial_rule(0.0, grid.disc_r_max);
    let mut total = Complex64::new(0.0, 0.0);
    for &(r, wr) in rule.nodes() {
        let weight = wr * disc_density(r, haar_scale);
        for (psi, wp) in grid.circle() {
            let x = Su11::disc_point(Complex64::from_polar(r, psi))?;
            total += matrix_coefficient(n, &g.conjugate_by(&x))? * (weight * wp);
        }
    }
    Ok(total)
}

/// Orbital integral of `d_π m_ξ` at the rotation `g_θ = diag(e^{iθ}, e^{−iθ})`
/// over the disc model of `G/T`.
pub fn orbital_integral_character(
    n: i64,
    theta: f64,
    grid: &QuadratureGrid,
    haar_scale: f64,
) -> Result<OrbitalReport> {
    let m = bergman_exponent(n)?;
    grid.validate()?;
    check_scale(haar_scale)?;
    // root value e^{2iθ} must stay away from 1
    let modulus = 2.0 * theta.sin().abs();
    if modulus <= REGULARITY_TOL {
        return Err(Error::SingularElement { modulus });
    }
    let g = Su11::rotation(theta);
    let fine_grid = grid.refined();
    let d_coarse = formal_degree(n, grid, haar_scale)?.value;
    let d_fine = formal_degree(n, &fine_grid, haar_scale)?.value;
    let coarse = d_coarse * disc_integral(n, &g, grid, haar_scale)?;
    let fine = d_fine * disc_integral(n, &g, &fine_grid, haar_scale)?;
    let refinement_delta = (coarse - fine).norm();

    // |m_ξ(x g x⁻¹)| ≤ (|sin θ| cosh 2s)^{−m} on the geodesic circle of radius s
    let r2 = grid.disc_r_max * grid.disc_r_max;
    let cosh_2s = (1.0 + r2) / (1.0 - r2);
    let tail_bound =
        d_fine * haar_scale * theta.sin().abs().powi(-m) * cosh_2s.powi(1 - m) / f64::from(m - 1);
    if refinement_delta > REFINEMENT_TOL || tail_bound > REFINEMENT_TOL {
        return Err(Error::NotConverged(format!(
            "orbital integral: refinement delta {refinement_delta:e}, tail bound {tail_bound:e}"
        )));
    }
    Ok(OrbitalReport {
        n,
        theta,
        value: fine.into(),
        tail_bound,
        refinement_delta,
        formal_degree: d_fine,
        grid: *grid,
        haar_scale,
        diam_k: DIAM_K,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct MeasureCheck {
    /// `∫_G f dg` in `KAK` coordinates.
    pub kak: f64,
    /// `∫_{G/T} ∫_T f(xy) dy d(xT)` in disc coordinates.
    pub quotient: f64,
    pub deviation: f64,
}

/// Smooth test function supported in `t < 2`, neither left nor right
/// `K`-invariant.
fn test_function(g: &Su11) -> f64 {
    let cutoff = 2f64.sinh().powi(2);
    let u = g.b().norm_sqr() / cutoff;
    if u >= 1.0 {
        return 0.0;
    }
    let a = g.a();
    (-1.0 / (1.0 - u)).exp() * (2.0 + (a * a).re / a.norm_sqr() + g.b().re)
}

/// Integrates a compactly supported test function over `G` with the `KAK`
/// Haar measure and again through `G/T × T`; the two agree exactly when the
/// disc density carries the right constant.
pub fn quotient_measure_check(grid: &QuadratureGrid, haar_scale: f64) -> Result<MeasureCheck> {
    grid.validate()?;
    check_scale(haar_scale)?;
    let t_cut = 2.0;
    let mut kak = 0.0;
    for &(t, wt) in grid.radial_rule(0.0, t_cut).nodes() {
        let a = Su11::boost(t);
        let mut avg = 0.0;
        for (p, wp) in grid.circle() {
            for (q, wq) in grid.circle() {
                avg += wp * wq * test_function(&(Su11::rotation(p) * a * Su11::rotation(q)));
            }
        }
        kak += wt * kak_density(t, haar_scale) * avg;
    }
    let mut quotient = 0.0;
    for &(r, wr) in grid.radial_rule(0.0, t_cut.tanh()).nodes() {
        let mut avg = 0.0;
        for (psi, wp) in grid.circle() {
            let x = Su11::disc_point(Complex64::from_polar(r, psi))?;
            for (phi, wq) in grid.circle() {
                avg += wp * wq * test_function(&(x * Su11::rotation(phi)));
            }
        }
        quotient += wr * disc_density(r, haar_scale) * avg;
    }
    Ok(MeasureCheck {
        kak,
        quotient,
        deviation: (kak - quotient).abs(),
    })
}
