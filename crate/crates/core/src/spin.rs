//! Weights of the spinor module of `𝔭` and of `Λ𝔭_ℂ`, and the Dirac induction
//! multiplicity check over the compact subsystem.

use num_bigint::BigInt;
use num_rational::Rational64;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::characters::{Decomposition, FormalCharacter};
use crate::dschar::HcParameter;
use crate::error::{Error, Result};
use crate::lie::{RootDatum, RootSubsystem, Weight};

/// A `ℤ/2`-graded character.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradedCharacter {
    pub even: FormalCharacter,
    pub odd: FormalCharacter,
}

impl GradedCharacter {
    /// `even − odd`.
    pub fn supertrace(&self) -> FormalCharacter {
        &self.even - &self.odd
    }

    pub fn dimension(&self) -> BigInt {
        self.even.dimension() + self.odd.dimension()
    }

    pub fn swapped(&self) -> Self {
        Self {
            even: self.odd.clone(),
            odd: self.even.clone(),
        }
    }

    pub fn shift(&self, mu: &Weight) -> Self {
        Self {
            even: self.even.shift(mu),
            odd: self.odd.shift(mu),
        }
    }
}

fn noncompact_roots(datum: &RootDatum) -> Vec<&Weight> {
    datum
        .noncompact_positive_roots()
        .map(|r| &r.weight)
        .collect()
}

/// Weights `½ Σ_{α∈R_n⁺} ε_α α`, graded by the parity of the number of
/// minus signs.
pub fn spin_module(datum: &RootDatum) -> GradedCharacter {
    let roots = noncompact_roots(datum);
    let rank = datum.rank();
    let mut out = GradedCharacter {
        even: FormalCharacter::zero(rank),
        odd: FormalCharacter::zero(rank),
    };
    for mask in 0u64..(1 << roots.len()) {
        let mut coords2 = vec![0i64; rank];
        for (k, a) in roots.iter().enumerate() {
            let s = if mask >> k & 1 == 1 { -1 } else { 1 };
            // roots are integral, so halving their doubled coordinates is exact
            for (c, x) in coords2.iter_mut().zip(a.coords2()) {
                *c += s * x / 2;
            }
        }
        let part = if mask.count_ones() % 2 == 0 {
            &mut out.even
        } else {
            &mut out.odd
        };
        part.add_term(Weight::from_doubled(coords2), BigInt::one());
    }
    out
}

/// Subset sums of `R_n⁺`, graded by subset size.
pub fn exterior_p(datum: &RootDatum) -> GradedCharacter {
    let roots = noncompact_roots(datum);
    let rank = datum.rank();
    let mut out = GradedCharacter {
        even: FormalCharacter::zero(rank),
        odd: FormalCharacter::zero(rank),
    };
    for mask in 0u64..(1 << roots.len()) {
        let w = roots
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .fold(Weight::zero(rank), |acc, (_, a)| &acc + *a);
        let part = if mask.count_ones() % 2 == 0 {
            &mut out.even
        } else {
            &mut out.odd
        };
        part.add_term(w, BigInt::one());
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct SpinLemmaReport {
    pub q: usize,
    /// `"straight"` when `q` is even, `"reversed"` otherwise.
    pub orientation: &'static str,
    pub passed: bool,
    /// `S_𝔭^± · e^{ρ_n}`.
    pub shifted_spin: GradedCharacter,
    pub exterior: GradedCharacter,
}

/// Compares `S_𝔭 ⊗ ℂ_{ρ_n}` with `Λ𝔭_ℂ`, with the grading reversed when `q` is
/// odd.
pub fn verify_spin_exterior_lemma(datum: &RootDatum) -> SpinLemmaReport {
    let shifted_spin = spin_module(datum).shift(datum.rho_n());
    let exterior = exterior_p(datum);
    let q = datum.q();
    let (orientation, expected) = if q.is_multiple_of(2) {
        ("straight", exterior.clone())
    } else {
        ("reversed", exterior.swapped())
    };
    SpinLemmaReport {
        q,
        orientation,
        passed: shifted_spin == expected,
        shifted_spin,
        exterior,
    }
}

/// `(S⁺ − S⁻) e^{ρ_n} = (−1)^q Σ_A (−1)^{|A|} e^{Σ_A α}`.
pub fn graded_identity_holds(datum: &RootDatum) -> bool {
    let lhs = spin_module(datum).supertrace().shift(datum.rho_n());
    let sign = if datum.q().is_multiple_of(2) { 1 } else { -1 };
    lhs == exterior_p(datum).supertrace().scale(&BigInt::from(sign))
}

#[derive(Clone, Debug, Serialize)]
pub struct DiracInductionReport {
    pub lambda: Weight,
    /// Highest weight `λ − ρ_c` of the `K`-type being induced.
    pub k_type: Weight,
    /// `λ − ρ_c + ρ_n`.
    pub target: Weight,
    pub plus: Decomposition,
    pub minus: Decomposition,
    pub plus_multiplicity: String,
    pub minus_multiplicity: String,
    /// First constituent not strictly below the target, if any.
    pub offending: Option<Weight>,
    pub passed: bool,
}

/// Decomposes `S_𝔭^± ⊗ V_{λ−ρ_c}` over `K` and checks that `λ − ρ_c + ρ_n`
/// occurs once in the even part, not at all in the odd part, and lies strictly
/// above every other constituent.
pub fn dirac_induction_ktype_check(hcp: &HcParameter) -> Result<DiracInductionReport> {
    let datum = hcp.datum();
    let k = RootSubsystem::compact(datum);
    let k_type = hcp.lambda() - datum.rho_c();
    k.check_dominant_integral(&k_type)
        .map_err(|_| Error::NotDominantForK(k_type.clone()))?;
    let v = k.character(&k_type)?;
    let spin = spin_module(datum);
    let plus = k.decompose(&(&spin.even * &v))?;
    let minus = k.decompose(&(&spin.odd * &v))?;
    let target = &k_type + datum.rho_n();
    let m_plus = plus.multiplicity(&target);
    let m_minus = minus.multiplicity(&target);

    let mut offending = None;
    for (mu, m) in plus.constituents.iter().chain(&minus.constituents) {
        if mu == &target || m.is_zero() {
            continue;
        }
        if !strictly_below(datum, mu, &target)? {
            offending = Some(mu.clone());
            break;
        }
    }
    let passed = m_plus.is_one() && m_minus.is_zero() && offending.is_none();
    Ok(DiracInductionReport {
        lambda: hcp.lambda().clone(),
        k_type,
        target,
        plus_multiplicity: m_plus.to_string(),
        minus_multiplicity: m_minus.to_string(),
        plus,
        minus,
        offending,
        passed,
    })
}

/// `top − μ` is a nonzero nonnegative combination of positive roots. The
/// positive cone is spanned by the simple roots, so this is a sign test on
/// simple-root coordinates.
fn strictly_below(datum: &RootDatum, mu: &Weight, top: &Weight) -> Result<bool> {
    let c = datum.simple_coords(&(top - mu))?;
    Ok(c.iter().all(|x| *x >= Rational64::zero()) && c.iter().any(|x| !x.is_zero()))
}
