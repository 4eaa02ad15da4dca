//! Harish-Chandra parameters and discrete series character values on the
//! compact Cartan subgroup.

use num_complex::Complex64;
use num_rational::Rational64;
use num_traits::Zero;
use serde::Serialize;

use crate::characters::{TorusElement, REGULARITY_TOL};
use crate::error::{Error, Result};
use crate::json::ComplexValue;
use crate::lie::{weyl_group, RootDatum, Weight, WeylElement, WhichGroup};

/// A validated Harish-Chandra parameter: `λ` strictly dominant for the
/// datum's positive system with `λ + ρ` integral.
#[derive(Clone, Debug)]
pub struct HcParameter {
    datum: RootDatum,
    lambda: Weight,
    q: usize,
    sign: i8,
    compact_group: Vec<WeylElement>,
}

pub fn make_hc_parameter(datum: &RootDatum, lambda: Weight) -> Result<HcParameter> {
    datum.check_rank(&lambda)?;
    for root in datum.positive_roots() {
        if datum.pairing(&lambda, &root.weight)? <= Rational64::zero() {
            return Err(Error::NotRegular(lambda));
        }
    }
    if !(&lambda + datum.rho()).is_integral() {
        return Err(Error::NotIntegral(lambda));
    }
    let q = datum.q();
    Ok(HcParameter {
        datum: datum.clone(),
        lambda,
        q,
        sign: if q.is_multiple_of(2) { 1 } else { -1 },
        compact_group: weyl_group(datum, WhichGroup::Compact),
    })
}

impl HcParameter {
    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    pub fn lambda(&self) -> &Weight {
        &self.lambda
    }

    pub fn q(&self) -> usize {
        self.q
    }

    /// `(−1)^q`.
    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn compact_group(&self) -> &[WeylElement] {
        &self.compact_group
    }
}

/// `e^ρ(t) ∏_{α>0} (1 − e^{−α}(t))`, rejecting values too close to zero.
pub(crate) fn weyl_denominator_value(datum: &RootDatum, t: &TorusElement) -> Result<Complex64> {
    if t.rank() != datum.rank() {
        return Err(Error::RankMismatch {
            expected: datum.rank(),
            found: t.rank(),
        });
    }
    let den = datum
        .positive_roots()
        .iter()
        .fold(t.exp_weight(datum.rho()), |acc, r| {
            acc * (1.0 - t.exp_weight(&-&r.weight))
        });
    if den.norm() < REGULARITY_TOL {
        return Err(Error::SingularElement {
            modulus: den.norm(),
        });
    }
    Ok(den)
}

/// `Θ_λ(t) = (−1)^q Σ_{w∈W_c} sign(w) e^{wλ}(t) / Δ(t)`.
pub fn ds_character_value(hcp: &HcParameter, t: &TorusElement) -> Result<Complex64> {
    let den = weyl_denominator_value(&hcp.datum, t)?;
    let mut num = Complex64::zero();
    for w in &hcp.compact_group {
        num += f64::from(w.sign) * t.exp_weight(&w.act(&hcp.lambda)?);
    }
    Ok(f64::from(hcp.sign) * num / den)
}

/// Highest weight `λ + ρ − 2ρ_c` of the lowest `K`-type.
pub fn lowest_k_type(hcp: &HcParameter) -> Weight {
    &(&hcp.lambda + hcp.datum.rho()) - &hcp.datum.rho_c().scale(2)
}

#[derive(Clone, Debug, Serialize)]
pub struct DsValueRecord {
    pub lambda_coords2: Vec<i64>,
    pub theta: Vec<f64>,
    pub value: ComplexValue,
    pub q: usize,
}

impl DsValueRecord {
    pub fn evaluate(hcp: &HcParameter, t: &TorusElement) -> Result<Self> {
        Ok(Self {
            lambda_coords2: hcp.lambda.coords2().to_vec(),
            theta: t.angles().to_vec(),
            value: ds_character_value(hcp, t)?.into(),
            q: hcp.q,
        })
    }
}
