use num_bigint::BigInt;

use super::FormalCharacter;
use crate::error::Result;
use crate::lie::{RootDatum, RootSubsystem, Weight};

/// `e^ρ ∏_{α>0} (1 − e^{−α})` over the given positive roots.
pub fn denominator_product(rank: usize, positive: &[Weight], rho: &Weight) -> FormalCharacter {
    let one = FormalCharacter::one(rank);
    positive
        .iter()
        .fold(FormalCharacter::exp(rho.clone()), |acc, a| {
            &acc * &(&one - &FormalCharacter::exp(-a))
        })
}

impl RootSubsystem<'_> {
    /// Alternating sum `Σ_w sign(w) e^{wμ}`.
    pub fn alternating_sum(&self, mu: &Weight) -> Result<FormalCharacter> {
        let mut out = FormalCharacter::zero(mu.rank());
        for w in self.group() {
            out.add_term(w.act(mu)?, BigInt::from(w.sign));
        }
        Ok(out)
    }

    /// The Weyl denominator as the alternating sum over the group.
    pub fn denominator(&self) -> FormalCharacter {
        self.alternating_sum(self.rho())
            .expect("ρ has the datum's rank")
    }

    /// Character of the irreducible representation with highest weight `Λ`,
    /// as the exact quotient of alternating sums.
    pub fn character(&self, highest: &Weight) -> Result<FormalCharacter> {
        self.check_dominant_integral(highest)?;
        let num = self.alternating_sum(&(highest + self.rho()))?;
        num.exact_divide(&self.denominator())
    }
}

/// Weyl's character formula for the full root system of `datum`.
pub fn weyl_character(datum: &RootDatum, highest: &Weight) -> Result<FormalCharacter> {
    RootSubsystem::full(datum).character(highest)
}
