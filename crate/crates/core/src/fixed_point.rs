//! Lefschetz sums over the isolated fixed points `wT` of a regular torus
//! element acting on `G/T`.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::characters::{
    denominator_product, freudenthal_character, weyl_character, FormalCharacter, TorusElement,
    REGULARITY_TOL,
};
use crate::dschar::{ds_character_value, HcParameter};
use crate::error::{Error, Result};
use crate::json::ComplexValue;
use crate::lie::{weyl_group, RootDatum, Weight, WeylElement, WhichGroup};

/// Contribution `e^{wμ}(t) / ∏_{α>0} (1 − e^{−wα}(t))` of the fixed point `wT`
/// for the line bundle of weight `μ`.
fn local_term(
    datum: &RootDatum,
    bundle: &Weight,
    w: &WeylElement,
    t: &TorusElement,
) -> Result<Complex64> {
    datum.check_rank(bundle)?;
    if t.rank() != datum.rank() {
        return Err(Error::RankMismatch {
            expected: datum.rank(),
            found: t.rank(),
        });
    }
    let mut den = Complex64::one();
    for r in datum.positive_roots() {
        den *= 1.0 - t.exp_weight(&-&w.act(&r.weight)?);
    }
    if den.norm() < REGULARITY_TOL {
        return Err(Error::SingularElement {
            modulus: den.norm(),
        });
    }
    Ok(t.exp_weight(&w.act(bundle)?) / den)
}

/// Local term at `wT` with bundle weight `λ − ρ`.
pub fn lefschetz_local_term(
    hcp: &HcParameter,
    w: &WeylElement,
    t: &TorusElement,
) -> Result<Complex64> {
    let datum = hcp.datum();
    local_term(datum, &(hcp.lambda() - datum.rho()), w, t)
}

/// Sum of the local terms over `W_c`.
pub fn fixed_point_index(hcp: &HcParameter, t: &TorusElement) -> Result<Complex64> {
    let mut sum = Complex64::zero();
    for w in hcp.compact_group() {
        sum += lefschetz_local_term(hcp, w, t)?;
    }
    Ok(sum)
}

/// Cleared form of the per-point identity
/// `e^{w(λ−ρ)} / ∏(1 − e^{−wα}) = sign(w) e^{wλ} / Δ`, namely
/// `e^{w(λ−ρ)} Δ = sign(w) e^{wλ} ∏(1 − e^{−wα})`, checked exactly.
pub fn local_term_identity_holds(hcp: &HcParameter, w: &WeylElement) -> Result<bool> {
    let datum = hcp.datum();
    let rank = datum.rank();
    let positive: Vec<Weight> = datum
        .positive_roots()
        .iter()
        .map(|r| r.weight.clone())
        .collect();
    let delta = denominator_product(rank, &positive, datum.rho());
    let lhs = &FormalCharacter::exp(w.act(&(hcp.lambda() - datum.rho()))?) * &delta;
    let one = FormalCharacter::one(rank);
    let mut rhs = FormalCharacter::monomial(w.act(hcp.lambda())?, BigInt::from(w.sign));
    for a in &positive {
        rhs = &rhs * &(&one - &FormalCharacter::exp(-&w.act(a)?));
    }
    Ok(lhs == rhs)
}

#[derive(Clone, Debug, Serialize)]
pub struct FixedPointTerm {
    pub w_word: Vec<usize>,
    pub value: ComplexValue,
}

#[derive(Clone, Debug, Serialize)]
pub struct FixedPointReport {
    pub terms: Vec<FixedPointTerm>,
    pub sum: ComplexValue,
    pub ds_value: ComplexValue,
    /// `|(−1)^q · sum − Θ_λ(t)|`.
    pub max_dev: f64,
    /// Whether every cleared local identity holds in the character ring.
    pub ring_identity: bool,
}

pub fn fixed_point_report(hcp: &HcParameter, t: &TorusElement) -> Result<FixedPointReport> {
    let mut terms = Vec::new();
    let mut sum = Complex64::zero();
    let mut ring_identity = true;
    for w in hcp.compact_group() {
        let v = lefschetz_local_term(hcp, w, t)?;
        sum += v;
        ring_identity &= local_term_identity_holds(hcp, w)?;
        terms.push(FixedPointTerm {
            w_word: w.word_one_based(),
            value: v.into(),
        });
    }
    let ds = ds_character_value(hcp, t)?;
    Ok(FixedPointReport {
        terms,
        sum: sum.into(),
        ds_value: ds.into(),
        max_dev: (f64::from(hcp.sign()) * sum - ds).norm(),
        ring_identity,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct AssemblyReport {
    pub highest_weight: Weight,
    pub theta: Vec<f64>,
    pub lefschetz: ComplexValue,
    pub weyl: ComplexValue,
    pub freudenthal: ComplexValue,
    pub fixed_points: usize,
    pub max_dev: f64,
}

/// Three-way comparison at `t` of the full-`W` Lefschetz sum for the bundle of
/// weight `Λ`, the Weyl-quotient character and the Freudenthal character.
pub fn compact_assembly_check(
    datum: &RootDatum,
    highest: &Weight,
    t: &TorusElement,
) -> Result<AssemblyReport> {
    let weyl = weyl_character(datum, highest)?.evaluate(t)?;
    let freudenthal = freudenthal_character(datum, highest)?.evaluate(t)?;
    let group = weyl_group(datum, WhichGroup::Full);
    let mut lefschetz = Complex64::zero();
    for w in &group {
        lefschetz += local_term(datum, highest, w, t)?;
    }
    let max_dev = [
        (lefschetz - weyl).norm(),
        (lefschetz - freudenthal).norm(),
        (weyl - freudenthal).norm(),
    ]
    .into_iter()
    .fold(0.0, f64::max);
    Ok(AssemblyReport {
        highest_weight: highest.clone(),
        theta: t.angles().to_vec(),
        lefschetz: lefschetz.into(),
        weyl: weyl.into(),
        freudenthal: freudenthal.into(),
        fixed_points: group.len(),
        max_dev,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dschar::make_hc_parameter;
    use crate::lie::{catalog, EQUAL_RANK_DATA};
    use crate::sampling::{random_hc_lambda, random_regular};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use std::f64::consts::PI;

    #[test]
    fn sl2_values() {
        let d = catalog("sl2R").unwrap();
        let h = make_hc_parameter(&d, Weight::from_fundamental(&[2])).unwrap();
        let t = TorusElement::new(vec![PI / 2.0]);
        let e = lefschetz_local_term(&h, &h.compact_group()[0], &t).unwrap();
        assert!((e - Complex64::new(0.0, 0.5)).norm() < 1e-12, "{e}");
        let r = fixed_point_report(&h, &t).unwrap();
        assert!(r.max_dev < 1e-12 && r.ring_identity);
        assert!(
            (Complex64::new(r.ds_value.re, r.ds_value.im) - Complex64::new(0.0, -0.5)).norm()
                < 1e-12
        );
    }

    #[test]
    fn compact_a1_two_terms() {
        let d = catalog("su2").unwrap();
        let h = make_hc_parameter(&d, Weight::from_fundamental(&[2])).unwrap();
        let t = TorusElement::new(vec![PI / 3.0]);
        let full = weyl_group(&d, WhichGroup::Full);
        let s: Complex64 = full
            .iter()
            .map(|w| lefschetz_local_term(&h, w, &t).unwrap())
            .sum();
        assert!((s - 1.0).norm() < 1e-12);
        assert!((fixed_point_index(&h, &t).unwrap() - 1.0).norm() < 1e-12);
    }

    #[test]
    fn translated_term() {
        // the term at w equals the identity term for wλ and the w-translated
        // positive system
        let d = catalog("su21").unwrap();
        let h = make_hc_parameter(&d, d.rho().clone()).unwrap();
        let t = TorusElement::new(vec![0.7, 1.9]);
        let w = &h.compact_group()[1];
        let bundle = w.act(&(h.lambda() - d.rho())).unwrap();
        let mut den = Complex64::one();
        for r in d.positive_roots() {
            den *= 1.0 - t.exp_weight(&-&w.act(&r.weight).unwrap());
        }
        let direct = t.exp_weight(&bundle) / den;
        assert!((direct - lefschetz_local_term(&h, w, &t).unwrap()).norm() < 1e-12);
    }

    #[test]
    fn random_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(19);
        for name in EQUAL_RANK_DATA {
            let d = catalog(name).unwrap();
            for _ in 0..5 {
                let h = make_hc_parameter(&d, random_hc_lambda(&d, 4, &mut rng)).unwrap();
                for _ in 0..5 {
                    let t = random_regular(&d, 0.1, &mut rng);
                    let r = fixed_point_report(&h, &t).unwrap();
                    assert!(r.max_dev <= 1e-9, "{name}: {}", r.max_dev);
                    assert!(r.ring_identity);
                }
            }
        }
    }

    #[test]
    fn assembly_examples() {
        let su2 = catalog("su2").unwrap();
        let t = TorusElement::new(vec![PI / 3.0]);
        let r = compact_assembly_check(&su2, &Weight::from_fundamental(&[1]), &t).unwrap();
        assert!(r.max_dev < 1e-9 && (r.weyl.re - 1.0).abs() < 1e-9);
        // 1 + 2cos(2π/3)
        let r = compact_assembly_check(&su2, &Weight::from_fundamental(&[2]), &t).unwrap();
        assert!(r.max_dev < 1e-9 && r.weyl.re.abs() < 1e-9);
        let su3 = catalog("su3").unwrap();
        let t = TorusElement::new(vec![2.0 * PI / 7.0, 2.0 * PI / 11.0]);
        assert!(compact_assembly_check(&su3, su3.rho(), &t).unwrap().max_dev < 1e-9);
        let so5 = catalog("so5").unwrap();
        let r =
            compact_assembly_check(&so5, so5.rho(), &TorusElement::new(vec![0.4, 1.3])).unwrap();
        assert_eq!(r.fixed_points, 8);
        assert!(r.max_dev < 1e-9);
    }

    #[test]
    fn singular_and_non_dominant() {
        let d = catalog("su2").unwrap();
        assert!(matches!(
            compact_assembly_check(
                &d,
                &Weight::from_fundamental(&[1]),
                &TorusElement::new(vec![0.0])
            ),
            Err(Error::SingularElement { .. })
        ));
        assert!(matches!(
            compact_assembly_check(
                &d,
                &Weight::from_fundamental(&[-1]),
                &TorusElement::new(vec![1.0])
            ),
            Err(Error::NotDominant(_))
        ));
    }
}
