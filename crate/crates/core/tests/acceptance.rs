//! Acceptance suite: one line per criterion, nonzero exit if any fails.

use std::f64::consts::PI;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

use dseries::characters::{freudenthal_character, weyl_character, TorusElement};
use dseries::dschar::{ds_character_value, lowest_k_type, make_hc_parameter};
use dseries::fixed_point::{compact_assembly_check, fixed_point_index, local_term_identity_holds};
use dseries::lie::{catalog, Weight, COMPACT_DATA, EQUAL_RANK_DATA};
use dseries::sampling::{random_dominant, random_hc_lambda, random_regular};
use dseries::sl2::{fgoi_envelope_check, orbital_integral_character, EnvelopeMode, QuadratureGrid};
use dseries::spin::{dirac_induction_ktype_check, verify_spin_exterior_lemma};

const MARGIN: f64 = 0.1;

type Check = Result<String, String>;

fn criterion(id: u32, title: &str, limit: Duration, f: impl FnOnce() -> Check) -> bool {
    let start = Instant::now();
    let outcome = f();
    let elapsed = start.elapsed();
    let (ok, detail) = match outcome {
        Ok(d) if elapsed <= limit => (true, d),
        Ok(d) => (false, format!("{d}; took {elapsed:.2?}, limit {limit:?}")),
        Err(e) => (false, e),
    };
    let tag = if ok { "PASS" } else { "FAIL" };
    println!("[{tag}] {id}. {title} ({elapsed:.2?}): {detail}");
    ok
}

fn c(v: dseries::json::ComplexValue) -> Complex64 {
    Complex64::new(v.re, v.im)
}

/// Weyl quotient, Freudenthal and the full-W Lefschetz sum on compact data.
fn triple_agreement() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut worst = 0.0f64;
    for name in COMPACT_DATA {
        let d = catalog(name).map_err(|e| e.to_string())?;
        for _ in 0..20 {
            let hw = random_dominant(d.rank(), 6, &mut rng);
            let w = weyl_character(&d, &hw).map_err(|e| e.to_string())?;
            let f = freudenthal_character(&d, &hw).map_err(|e| e.to_string())?;
            if w != f {
                return Err(format!("{name}: characters differ at {hw}"));
            }
            for _ in 0..10 {
                let t = random_regular(&d, MARGIN, &mut rng);
                let r = compact_assembly_check(&d, &hw, &t).map_err(|e| e.to_string())?;
                worst = worst.max(r.max_dev);
                if r.max_dev > 1e-9 {
                    return Err(format!(
                        "{name}: {hw} at {:?} deviates by {:e}",
                        t.angles(),
                        r.max_dev
                    ));
                }
            }
        }
    }
    Ok(format!("600 samples, max deviation {worst:.1e}"))
}

/// `(−1)^q · fixed_point_index = Θ_λ` and the cleared local identities.
fn fixed_point_identity() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut worst = 0.0f64;
    for name in EQUAL_RANK_DATA {
        let d = catalog(name).map_err(|e| e.to_string())?;
        for _ in 0..10 {
            let h = make_hc_parameter(&d, random_hc_lambda(&d, 5, &mut rng))
                .map_err(|e| e.to_string())?;
            for w in h.compact_group() {
                if !local_term_identity_holds(&h, w).map_err(|e| e.to_string())? {
                    return Err(format!("{name}: ring identity fails at λ = {}", h.lambda()));
                }
            }
            for _ in 0..10 {
                let t = random_regular(&d, MARGIN, &mut rng);
                let fp = fixed_point_index(&h, &t).map_err(|e| e.to_string())?;
                let ds = ds_character_value(&h, &t).map_err(|e| e.to_string())?;
                let dev = (f64::from(h.sign()) * fp - ds).norm();
                worst = worst.max(dev);
                if dev > 1e-9 {
                    return Err(format!("{name}: λ = {} deviates by {dev:e}", h.lambda()));
                }
            }
        }
    }
    Ok(format!(
        "300 samples, max deviation {worst:.1e}, ring identities exact"
    ))
}

fn spin_lemma() -> Check {
    let mut seen = Vec::new();
    for name in EQUAL_RANK_DATA {
        let d = catalog(name).map_err(|e| e.to_string())?;
        let r = verify_spin_exterior_lemma(&d);
        let expected = if d.q() % 2 == 0 {
            "straight"
        } else {
            "reversed"
        };
        if !r.passed || r.orientation != expected {
            return Err(format!("{name}: {} match failed", r.orientation));
        }
        seen.push(format!("{name} q={} {}", r.q, r.orientation));
    }
    Ok(seen.join(", "))
}

fn multiplicity_one() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for name in EQUAL_RANK_DATA {
        let d = catalog(name).map_err(|e| e.to_string())?;
        for _ in 0..10 {
            let h = make_hc_parameter(&d, random_hc_lambda(&d, 5, &mut rng))
                .map_err(|e| e.to_string())?;
            let r = dirac_induction_ktype_check(&h).map_err(|e| e.to_string())?;
            if !r.passed {
                return Err(format!(
                    "{name}: λ = {}, m+ = {}, m- = {}, offending {:?}",
                    h.lambda(),
                    r.plus_multiplicity,
                    r.minus_multiplicity,
                    r.offending
                ));
            }
        }
    }
    Ok("30 parameters, m+ = 1, m- = 0, other constituents strictly lower".into())
}

fn sl2_values() -> Check {
    let d = catalog("sl2R").map_err(|e| e.to_string())?;
    let h = make_hc_parameter(&d, Weight::from_fundamental(&[2])).map_err(|e| e.to_string())?;
    let v =
        ds_character_value(&h, &TorusElement::new(vec![PI / 2.0])).map_err(|e| e.to_string())?;
    if (v - Complex64::new(0.0, -0.5)).norm() > 1e-12 {
        return Err(format!("Θ(π/2) = {v}"));
    }
    for n in 2..=6 {
        let h = make_hc_parameter(&d, Weight::from_fundamental(&[n])).map_err(|e| e.to_string())?;
        let k = lowest_k_type(&h);
        if k != Weight::from_fundamental(&[n + 1]) {
            return Err(format!("n = {n}: lowest K-type {k}"));
        }
        let r = dirac_induction_ktype_check(&h).map_err(|e| e.to_string())?;
        if r.target != k || r.plus_multiplicity != "1" {
            return Err(format!("n = {n}: Dirac target {}", r.target));
        }
    }
    Ok(format!(
        "Θ(π/2) = {:.3}{:+.3}i, lowest K-types V_(n+1) for n = 2..6",
        v.re, v.im
    ))
}

fn orbital_closure() -> Check {
    let grid = QuadratureGrid::default();
    let d = catalog("sl2R").map_err(|e| e.to_string())?;
    let mut worst = 0.0f64;
    let mut worst_delta = 0.0f64;
    for n in 2..=4 {
        let h = make_hc_parameter(&d, Weight::from_fundamental(&[n])).map_err(|e| e.to_string())?;
        for theta in [PI / 3.0, PI / 2.0] {
            let r = orbital_integral_character(n, theta, &grid, 1.0).map_err(|e| e.to_string())?;
            let ds = ds_character_value(&h, &TorusElement::new(vec![theta]))
                .map_err(|e| e.to_string())?;
            let dev = (c(r.value) - ds).norm();
            worst = worst.max(dev);
            worst_delta = worst_delta.max(r.refinement_delta);
            if dev > 1e-3 || r.refinement_delta >= 1e-4 {
                return Err(format!(
                    "n = {n}, θ = {theta}: deviation {dev:e}, refinement {:e}",
                    r.refinement_delta
                ));
            }
        }
    }
    let a = orbital_integral_character(3, PI / 3.0, &grid, 1.0).map_err(|e| e.to_string())?;
    let b = orbital_integral_character(3, PI / 3.0, &grid, 4.25).map_err(|e| e.to_string())?;
    let scale_dev = (c(a.value) - c(b.value)).norm();
    if scale_dev > 1e-9 {
        return Err(format!("Haar scale changes the value by {scale_dev:e}"));
    }
    Ok(format!(
        "max deviation {worst:.1e}, max refinement delta {worst_delta:.1e}, scale dependence {scale_dev:.1e}"
    ))
}

fn envelopes() -> Check {
    let grid = QuadratureGrid::default();
    let mut parts = Vec::new();
    for (mode, theta) in [
        (EnvelopeMode::GaussianL1, 0.0),
        (EnvelopeMode::EllipticFgoi, PI / 2.0),
    ] {
        let r = fgoi_envelope_check(mode, theta, &grid, 1.0).map_err(|e| e.to_string())?;
        let tail = *r.tail_bounds.last().ok_or("no truncations")?;
        let decreasing = r.tail_bounds.windows(2).all(|w| w[1] < w[0]);
        if !r.monotone_sums || !decreasing || tail >= 1e-6 {
            return Err(format!(
                "{mode:?}: monotone {}, final tail {tail:e}",
                r.monotone_sums
            ));
        }
        parts.push(format!("{mode:?} final tail {tail:.1e}"));
    }
    Ok(parts.join(", "))
}

fn structural_suite() -> Check {
    let out = Command::new(env!("CARGO_BIN_EXE_dseries"))
        .args(["verify", "--catalog"])
        .output()
        .map_err(|e| e.to_string())?;
    let report: Value = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
    let results = report["results"].as_array().ok_or("no results")?;
    let failed: Vec<&Value> = results.iter().filter(|r| r["passed"] != true).collect();
    if out.status.code() != Some(0) || !failed.is_empty() {
        return Err(format!("exit {:?}, failures {failed:?}", out.status.code()));
    }
    for suite in [
        "structure",
        "denominator_antisymmetry",
        "compact_invariance",
    ] {
        if !results.iter().any(|r| r["suite"] == suite) {
            return Err(format!("suite {suite} missing"));
        }
    }
    Ok(format!("{} checks passed", results.len()))
}

fn main() -> ExitCode {
    let s = Duration::from_secs;
    let results = [
        criterion(
            1,
            "Weyl / Freudenthal / Lefschetz agreement",
            s(30),
            triple_agreement,
        ),
        criterion(
            2,
            "fixed-point sum equals the discrete series character",
            s(30),
            fixed_point_identity,
        ),
        criterion(
            3,
            "spinor and exterior weights with graded orientation",
            s(5),
            spin_lemma,
        ),
        criterion(
            4,
            "Dirac induction multiplicity one",
            s(60),
            multiplicity_one,
        ),
        criterion(
            5,
            "SL(2,R) character value and lowest K-types",
            s(1),
            sl2_values,
        ),
        criterion(
            6,
            "orbital integral closes on the character",
            s(120),
            orbital_closure,
        ),
        criterion(7, "Gaussian envelope integrals converge", s(30), envelopes),
        criterion(
            8,
            "structural invariants via verify --catalog",
            s(10),
            structural_suite,
        ),
    ];
    let passed = results.iter().filter(|&&ok| ok).count();
    println!("acceptance: {passed}/{} criteria passed", results.len());
    if passed == results.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
