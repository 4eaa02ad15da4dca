use num_rational::Rational64;
use num_traits::Zero;

use super::weyl::reflection_matrix;
use super::{weyl_group, RootDatum, Weight, WeylElement, WhichGroup};
use crate::error::{Error, Result};

/// A reflection subsystem of a root datum sharing its weight lattice: either
/// the full system or the compact roots (the root system of `K`).
#[derive(Clone, Debug)]
pub struct RootSubsystem<'a> {
    datum: &'a RootDatum,
    which: WhichGroup,
    positive: Vec<Weight>,
    rho: Weight,
    group: Vec<WeylElement>,
}

impl<'a> RootSubsystem<'a> {
    pub fn new(datum: &'a RootDatum, which: WhichGroup) -> Self {
        let (positive, rho) = match which {
            WhichGroup::Full => (
                datum
                    .positive_roots()
                    .iter()
                    .map(|r| r.weight.clone())
                    .collect(),
                datum.rho().clone(),
            ),
            WhichGroup::Compact => (
                datum
                    .compact_positive_roots()
                    .map(|r| r.weight.clone())
                    .collect(),
                datum.rho_c().clone(),
            ),
        };
        Self {
            datum,
            which,
            positive,
            rho,
            group: weyl_group(datum, which),
        }
    }

    pub fn full(datum: &'a RootDatum) -> Self {
        Self::new(datum, WhichGroup::Full)
    }

    pub fn compact(datum: &'a RootDatum) -> Self {
        Self::new(datum, WhichGroup::Compact)
    }

    pub fn datum(&self) -> &'a RootDatum {
        self.datum
    }

    pub fn which(&self) -> WhichGroup {
        self.which
    }

    pub fn positive_roots(&self) -> &[Weight] {
        &self.positive
    }

    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    pub fn group(&self) -> &[WeylElement] {
        &self.group
    }

    /// Reflections in the positive roots of the subsystem, as group elements
    /// (words are left empty).
    pub fn reflections(&self) -> Vec<WeylElement> {
        self.positive
            .iter()
            .map(|b| WeylElement {
                word: Vec::new(),
                matrix: reflection_matrix(self.datum, b),
                sign: -1,
            })
            .collect()
    }

    /// Checks that `⟨μ, β^∨⟩` is a nonnegative integer for every positive root
    /// `β` of the subsystem.
    pub fn check_dominant_integral(&self, mu: &Weight) -> Result<()> {
        self.datum.check_rank(mu)?;
        for beta in &self.positive {
            let c = self.datum.coroot_pairing(mu, beta)?;
            if !c.is_integer() {
                return Err(Error::NotIntegral(mu.clone()));
            }
            if c < Rational64::zero() {
                return Err(Error::NotDominant(mu.clone()));
            }
        }
        Ok(())
    }

    /// Height `(μ, ρ_sub)`; among the weights of a Weyl-invariant set the
    /// maximal ones are dominant.
    pub fn height(&self, mu: &Weight) -> Rational64 {
        self.datum.pairing(mu, &self.rho).expect("ranks agree")
    }
}
