//! The catalog invariant suite behind `verify --catalog`.

use std::collections::HashMap;
use std::f64::consts::PI;

use num_bigint::BigInt;
use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::characters::{freudenthal_character, weyl_character, TorusElement};
use crate::dschar::{ds_character_value, lowest_k_type, make_hc_parameter};
use crate::error::Result;
use crate::fixed_point::{compact_assembly_check, fixed_point_report};
use crate::lie::{
    catalog, weyl_group, RootDatum, RootSubsystem, Weight, WhichGroup, CATALOG_NAMES, COMPACT_DATA,
    EQUAL_RANK_DATA,
};
use crate::sampling::{random_dominant, random_hc_lambda, random_regular};
use crate::sl2::{
    bergman_inner_product, matrix_coefficient, orbital_integral_character, quotient_measure_check,
    QuadratureGrid, Su11,
};
use crate::spin::{dirac_induction_ktype_check, graded_identity_holds, verify_spin_exterior_lemma};

/// Tolerance for floating comparisons of character values.
pub const VALUE_TOL: f64 = 1e-9;
/// Root margin of sampled torus elements.
pub const SAMPLE_MARGIN: f64 = 0.1;

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub suite: &'static str,
    pub datum: String,
    pub passed: bool,
    /// Present on failure.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub passed: bool,
    pub results: Vec<CheckResult>,
}

type Outcome = Result<Option<Value>>;

fn record(results: &mut Vec<CheckResult>, suite: &'static str, datum: &str, outcome: Outcome) {
    let witness = match outcome {
        Ok(w) => w,
        Err(e) => Some(json!({ "error": e.to_string() })),
    };
    results.push(CheckResult {
        suite,
        datum: datum.to_string(),
        passed: witness.is_none(),
        witness,
    });
}

fn expected_orders(name: &str) -> (usize, usize) {
    match name {
        "sl2R" => (2, 1),
        "su2" => (2, 2),
        "su21" => (6, 2),
        "su3" => (6, 6),
        "sp4R" => (8, 2),
        "so5" => (8, 8),
        _ => unreachable!("catalog names are fixed"),
    }
}

/// Root-system bookkeeping: simple roots, `ρ = ρ_c + ρ_n`, `q`, the grading
/// parity rule, Weyl group orders, root permutation and sign multiplicativity.
pub fn check_structure(name: &str, d: &RootDatum) -> Outcome {
    for i in 0..d.rank() {
        let row: Vec<i64> = d.cartan()[i].iter().map(|x| 2 * x).collect();
        if d.simple_root(i).coords2() != row.as_slice() {
            return Ok(Some(json!({ "simple_root": i + 1 })));
        }
    }
    if &(d.rho_c() + d.rho_n()) != d.rho()
        || d.rho() != &Weight::from_fundamental(&vec![1; d.rank()])
    {
        return Ok(Some(
            json!({ "rho": d.rho(), "rho_c": d.rho_c(), "rho_n": d.rho_n() }),
        ));
    }
    if d.q() != d.noncompact_positive_roots().count() {
        return Ok(Some(json!({ "q": d.q() })));
    }
    let mut signed: Vec<(Weight, bool)> = Vec::new();
    for r in d.positive_roots() {
        signed.push((r.weight.clone(), r.noncompact));
        signed.push((-&r.weight, r.noncompact));
    }
    for (a, ea) in &signed {
        for (b, eb) in &signed {
            let sum = a + b;
            if let Some((r, _)) = d.find_root(&sum) {
                if r.noncompact != (ea ^ eb) {
                    return Ok(Some(json!({ "parity": [a, b] })));
                }
            }
        }
    }
    let full = weyl_group(d, WhichGroup::Full);
    let compact = weyl_group(d, WhichGroup::Compact);
    if (full.len(), compact.len()) != expected_orders(name) {
        return Ok(Some(json!({ "orders": [full.len(), compact.len()] })));
    }
    let signs: HashMap<_, i8> = full.iter().map(|w| (w.matrix.clone(), w.sign)).collect();
    for w in &full {
        for r in d.positive_roots() {
            if d.find_root(&w.act(&r.weight)?).is_none() {
                return Ok(Some(
                    json!({ "w_word": w.word_one_based(), "root": r.weight }),
                ));
            }
        }
        for v in &full {
            let wv = w.compose(v);
            if signs.get(&wv.matrix) != Some(&(w.sign * v.sign)) {
                return Ok(Some(
                    json!({ "sign": [w.word_one_based(), v.word_one_based()] }),
                ));
            }
        }
    }
    Ok(None)
}

/// `w(Δ) = sign(w) Δ` in the character ring, for every `w ∈ W`.
pub fn check_denominator_antisymmetry(d: &RootDatum) -> Outcome {
    let sub = RootSubsystem::full(d);
    let delta = sub.denominator();
    for w in sub.group() {
        if delta.apply(w)? != delta.scale(&BigInt::from(w.sign)) {
            return Ok(Some(json!({ "w_word": w.word_one_based() })));
        }
    }
    Ok(None)
}

/// Weyl quotient = Freudenthal, and each irreducible decomposes to itself,
/// for all dominant `Λ` with doubled coordinates at most 8.
pub fn check_oracle_equivalence(d: &RootDatum) -> Outcome {
    let sub = RootSubsystem::full(d);
    let mut coords = vec![0i64; d.rank()];
    loop {
        let hw = Weight::from_fundamental(&coords);
        let w = weyl_character(d, &hw)?;
        if w != freudenthal_character(d, &hw)? {
            return Ok(Some(json!({ "highest_weight": hw, "weyl": w })));
        }
        if sub.decompose(&w)?.constituents != vec![(hw.clone(), BigInt::from(1))] {
            return Ok(Some(json!({ "decompose": hw })));
        }
        // odometer over 0..=4 in each fundamental coordinate
        match coords.iter().position(|&c| c < 4) {
            Some(i) => {
                coords[i] += 1;
                coords[..i].iter_mut().for_each(|c| *c = 0);
            }
            None => return Ok(None),
        }
    }
}

/// `Θ_λ(w·t) = Θ_λ(t)` for `w ∈ W_c`, random `λ` and 20 random regular `t`.
pub fn check_compact_invariance(d: &RootDatum, rng: &mut ChaCha8Rng) -> Outcome {
    let h = make_hc_parameter(d, random_hc_lambda(d, 4, rng))?;
    for _ in 0..20 {
        let t = random_regular(d, SAMPLE_MARGIN, rng);
        let base = ds_character_value(&h, &t)?;
        for w in h.compact_group() {
            let v = ds_character_value(&h, &t.act(w))?;
            if (v - base).norm() > VALUE_TOL {
                return Ok(Some(
                    json!({ "lambda": h.lambda(), "theta": t.angles(), "w_word": w.word_one_based() }),
                ));
            }
        }
    }
    Ok(None)
}

pub fn check_spin(d: &RootDatum) -> Outcome {
    let r = verify_spin_exterior_lemma(d);
    if !r.passed || !graded_identity_holds(d) {
        return Ok(Some(serde_json::to_value(&r).expect("serializable")));
    }
    Ok(None)
}

pub fn check_ktype(d: &RootDatum, rng: &mut ChaCha8Rng) -> Outcome {
    let k = RootSubsystem::compact(d);
    let mut lambdas = vec![d.rho().clone()];
    lambdas.extend((0..3).map(|_| random_hc_lambda(d, 3, rng)));
    for lambda in lambdas {
        let h = make_hc_parameter(d, lambda)?;
        let r = dirac_induction_ktype_check(&h)?;
        let lowest = lowest_k_type(&h);
        if !r.passed || !lowest.is_integral() || k.check_dominant_integral(&lowest).is_err() {
            return Ok(Some(serde_json::to_value(&r).expect("serializable")));
        }
    }
    Ok(None)
}

pub fn check_fixed_point(d: &RootDatum, rng: &mut ChaCha8Rng) -> Outcome {
    for _ in 0..3 {
        let h = make_hc_parameter(d, random_hc_lambda(d, 4, rng))?;
        for _ in 0..3 {
            let r = fixed_point_report(&h, &random_regular(d, SAMPLE_MARGIN, rng))?;
            if r.max_dev > VALUE_TOL || !r.ring_identity {
                return Ok(Some(serde_json::to_value(&r).expect("serializable")));
            }
        }
    }
    Ok(None)
}

pub fn check_assembly(d: &RootDatum, rng: &mut ChaCha8Rng) -> Outcome {
    for _ in 0..5 {
        let hw = random_dominant(d.rank(), 4, rng);
        let r = compact_assembly_check(d, &hw, &random_regular(d, SAMPLE_MARGIN, rng))?;
        if r.max_dev > VALUE_TOL {
            return Ok(Some(serde_json::to_value(&r).expect("serializable")));
        }
    }
    Ok(None)
}

/// Quick `SU(1,1)` checks: the closed-form matrix coefficient against the disc
/// oracle, the quotient measure constant, and one orbital integral.
pub fn check_sl2(grid: &QuadratureGrid) -> Outcome {
    let g = Su11::boost(1.0) * Su11::rotation(0.4);
    let closed = matrix_coefficient(2, &g)?;
    let oracle = bergman_inner_product(2, &g, grid)?;
    if (closed - oracle).norm() > 1e-6 {
        return Ok(Some(
            json!({ "matrix_coefficient": [closed.re, closed.im], "oracle": [oracle.re, oracle.im] }),
        ));
    }
    let m = quotient_measure_check(grid, 1.0)?;
    if m.deviation > 1e-6 {
        return Ok(Some(serde_json::to_value(&m).expect("serializable")));
    }
    let r = orbital_integral_character(2, PI / 2.0, grid, 1.0)?;
    let v = Complex64::new(r.value.re, r.value.im);
    if (v - Complex64::new(0.0, -0.5)).norm() > 1e-3 {
        return Ok(Some(serde_json::to_value(&r).expect("serializable")));
    }
    let d = catalog("sl2R")?;
    let h = make_hc_parameter(&d, Weight::from_fundamental(&[2]))?;
    let ds = ds_character_value(&h, &TorusElement::new(vec![PI / 2.0]))?;
    if (ds - Complex64::new(0.0, -0.5)).norm() > 1e-12 {
        return Ok(Some(json!({ "ds_value": [ds.re, ds.im] })));
    }
    Ok(None)
}

/// Runs every suite over the built-in catalog. Sampling is seeded, so the
/// report is reproducible.
pub fn verify_catalog(seed: u64, grid: &QuadratureGrid) -> VerifyReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut results = Vec::new();
    for name in CATALOG_NAMES {
        let d = match catalog(name) {
            Ok(d) => d,
            Err(e) => {
                record(&mut results, "datum", name, Err(e));
                continue;
            }
        };
        record(&mut results, "structure", name, check_structure(name, &d));
        record(
            &mut results,
            "denominator_antisymmetry",
            name,
            check_denominator_antisymmetry(&d),
        );
        record(
            &mut results,
            "oracle_equivalence",
            name,
            check_oracle_equivalence(&d),
        );
        record(&mut results, "spin_exterior", name, check_spin(&d));
        if EQUAL_RANK_DATA.contains(&name) {
            record(
                &mut results,
                "compact_invariance",
                name,
                check_compact_invariance(&d, &mut rng),
            );
            record(&mut results, "ktype", name, check_ktype(&d, &mut rng));
            record(
                &mut results,
                "fixed_point",
                name,
                check_fixed_point(&d, &mut rng),
            );
        }
        if COMPACT_DATA.contains(&name) {
            record(
                &mut results,
                "compact_invariance",
                name,
                check_compact_invariance(&d, &mut rng),
            );
            record(&mut results, "assembly", name, check_assembly(&d, &mut rng));
        }
    }
    record(&mut results, "sl2", "sl2R", check_sl2(grid));
    VerifyReport {
        passed: results.iter().all(|r| r.passed),
        results,
    }
}
