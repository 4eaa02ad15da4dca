use num_complex::Complex64;
use serde::Serialize;
use statrs::function::erf::erfc;
use std::f64::consts::PI;

use super::orbital::{disc_density, kak_density};
use super::{CompositeRule, QuadratureGrid, Su11, DIAM_K};
use crate::characters::REGULARITY_TOL;
use crate::error::{Error, Result};

/// Bound on the envelope integral beyond a truncation radius.
type TailBound = Box<dyn Fn(f64) -> f64>;

/// Largest accepted tail bound at the final truncation.
pub const ENVELOPE_TAIL_TOL: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EnvelopeMode {
    /// `∫_G ψ̂ dg` in `KAK` coordinates.
    GaussianL1,
    /// `∫_{G/T} ψ̂(x g_θ x⁻¹) d(xT)` over growing discs.
    EllipticFgoi,
}

#[derive(Clone, Debug, Serialize)]
pub struct EnvelopeReport {
    pub mode: EnvelopeMode,
    pub theta: Option<f64>,
    /// Truncation radii: `t` for the `KAK` integral, geodesic radius `s` of
    /// the disc (`r = tanh s`) for the orbital one.
    pub truncations: Vec<f64>,
    pub partial_sums: Vec<f64>,
    pub tail_bounds: Vec<f64>,
    pub monotone_sums: bool,
    pub converged: bool,
    pub grid: QuadratureGrid,
    pub haar_scale: f64,
    #[serde(rename = "diam_K")]
    pub diam_k: f64,
}

/// `exp(−max(0, t − 2 diam K)²)`, an upper bound for `e^{−d(e,x)²}` when `x`
/// has radial coordinate `t`.
pub fn envelope(t: f64) -> f64 {
    let u = (t - 2.0 * DIAM_K).max(0.0);
    (-u * u).exp()
}

/// Panel breaks on `[0, end]`, with `kink` added when it falls inside.
fn breaks_with(end: f64, panels: usize, kink: Option<f64>) -> Vec<f64> {
    let mut b: Vec<f64> = (0..=panels)
        .map(|k| end * k as f64 / panels as f64)
        .collect();
    if let Some(x) = kink.filter(|x| *x > 0.0 && *x < end) {
        b.push(x);
        b.sort_by(f64::total_cmp);
        b.dedup_by(|p, q| (*p - *q).abs() < 1e-12);
    }
    b
}

/// Integrates the envelope over increasing truncations and bounds what lies
/// beyond each one.
pub fn fgoi_envelope_check(
    mode: EnvelopeMode,
    theta: f64,
    grid: &QuadratureGrid,
    haar_scale: f64,
) -> Result<EnvelopeReport> {
    grid.validate()?;
    if !(haar_scale > 0.0 && haar_scale.is_finite()) {
        return Err(Error::Parse(format!(
            "Haar scale must be positive, got {haar_scale}"
        )));
    }
    let c = haar_scale;
    let d = 2.0 * DIAM_K;
    let sqrt_pi_2 = PI.sqrt() / 2.0;
    let (rule, panel_sums, tail): (CompositeRule, Vec<f64>, TailBound) = match mode {
        EnvelopeMode::GaussianL1 => {
            let rule = CompositeRule::with_breaks(breaks_with(grid.t_max, grid.panels(), Some(d)));
            let sums = rule.panel_sums(|t| envelope(t) * kak_density(t, c));
            // ∫_T^∞ ψ̂ · 2 sinh 2t dt ≤ [cosh 2T' − cosh 2T] + e^{2D+1} ∫_{T'−D}^∞ e^{−(u−1)²} du
            let tail = move |t: f64| {
                let tp = t.max(d);
                c * ((2.0 * tp).cosh() - (2.0 * t).cosh())
                    + c * (2.0 * d + 1.0).exp() * sqrt_pi_2 * erfc(tp - d - 1.0)
            };
            (rule, sums, Box::new(tail))
        }
        EnvelopeMode::EllipticFgoi => {
            let sin = theta.sin().abs();
            if 2.0 * sin <= REGULARITY_TOL {
                return Err(Error::SingularElement { modulus: 2.0 * sin });
            }
            let g = Su11::rotation(theta);
            let s_max = grid.disc_r_max.atanh();
            // cosh t(y)² = cos²θ + sin²θ cosh² 2s, so the envelope starts to
            // decay where t(y) = D
            let cosh_2s = ((d.cosh().powi(2) - theta.cos().powi(2)) / (sin * sin)).sqrt();
            let kink = (cosh_2s >= 1.0).then(|| 0.5 * cosh_2s.acosh());
            let rule = CompositeRule::with_breaks(breaks_with(s_max, grid.panels(), kink));
            let sums = rule.panel_sums(|s| {
                let r = s.tanh();
                let mut avg = 0.0;
                for (psi, w) in grid.circle() {
                    let x =
                        Su11::disc_point(Complex64::from_polar(r, psi)).expect("inside the disc");
                    avg += w * envelope(g.conjugate_by(&x).radial());
                }
                // dr = (1 − r²) ds
                avg * disc_density(r, c) * (1.0 - r * r)
            });
            // t(y) ≥ 2s + L with L = ln(|sin θ|/2), so ψ̂ ≤ e^{−(2s − E)²} past s* = E/2
            let e = d - (sin / 2.0).ln();
            let s_star = e / 2.0;
            let tail = move |s: f64| {
                let sp = s.max(s_star);
                c * ((2.0 * sp).cosh() - (2.0 * s).cosh())
                    + 0.5 * c * (e + 0.25).exp() * sqrt_pi_2 * erfc(2.0 * sp - e - 0.5)
            };
            (rule, sums, Box::new(tail))
        }
    };

    let truncations: Vec<f64> = rule.breaks()[1..].to_vec();
    let partial_sums: Vec<f64> = panel_sums
        .iter()
        .scan(0.0, |acc, x| {
            *acc += x;
            Some(*acc)
        })
        .collect();
    let tail_bounds: Vec<f64> = truncations.iter().map(|&x| tail(x)).collect();
    if tail_bounds.windows(2).any(|w| w[1] >= w[0] && w[0] > 0.0) {
        return Err(Error::NotConverged(
            "envelope tail bounds do not decrease with the truncation".into(),
        ));
    }
    let monotone_sums = partial_sums.windows(2).all(|w| w[1] >= w[0]);
    let converged = monotone_sums && tail_bounds.last().is_some_and(|&b| b < ENVELOPE_TAIL_TOL);
    Ok(EnvelopeReport {
        mode,
        theta: (mode == EnvelopeMode::EllipticFgoi).then_some(theta),
        truncations,
        partial_sums,
        tail_bounds,
        monotone_sums,
        converged,
        grid: *grid,
        haar_scale,
        diam_k: DIAM_K,
    })
}
