use num_bigint::BigInt;
use num_traits::Signed;
use serde::{Serialize, Serializer};

use super::FormalCharacter;
use crate::error::{Error, Result};
use crate::lie::{RootDatum, RootSubsystem, Weight};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    /// `(highest weight, multiplicity)` in the order they were stripped.
    pub constituents: Vec<(Weight, BigInt)>,
    /// Set when some multiplicity is negative.
    pub is_virtual: bool,
}

impl Decomposition {
    pub fn multiplicity(&self, highest: &Weight) -> BigInt {
        self.constituents
            .iter()
            .filter(|(w, _)| w == highest)
            .map(|(_, m)| m.clone())
            .sum()
    }
}

#[derive(Serialize)]
struct ConstituentRecord<'a> {
    coords2: &'a [i64],
    multiplicity: String,
}

impl Serialize for Decomposition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Record<'a> {
            constituents: Vec<ConstituentRecord<'a>>,
            is_virtual: bool,
        }
        Record {
            constituents: self
                .constituents
                .iter()
                .map(|(w, m)| ConstituentRecord {
                    coords2: w.coords2(),
                    multiplicity: m.to_string(),
                })
                .collect(),
            is_virtual: self.is_virtual,
        }
        .serialize(serializer)
    }
}

impl RootSubsystem<'_> {
    /// Writes a Weyl-invariant character as a (possibly virtual) sum of
    /// irreducible characters by repeatedly stripping the highest term.
    ///
    /// "Highest" means largest `(μ, ρ)`, ties broken lexicographically; the
    /// maximum of an invariant set under that key is always dominant.
    pub fn decompose(&self, a: &FormalCharacter) -> Result<Decomposition> {
        for r in self.reflections() {
            if &a.apply(&r)? != a {
                return Err(Error::NotInvariant);
            }
        }
        let mut rem = a.clone();
        let mut constituents = Vec::new();
        while !rem.is_zero() {
            let (top, coeff) = rem
                .terms()
                .max_by(|(x, _), (y, _)| (self.height(x), *x).cmp(&(self.height(y), *y)))
                .map(|(w, c)| (w.clone(), c.clone()))
                .expect("nonzero character");
            if self.check_dominant_integral(&top).is_err() {
                return Err(Error::NonDominantLeadingTerm(top));
            }
            let chi = self.character(&top)?;
            rem = &rem - &chi.scale(&coeff);
            constituents.push((top, coeff));
        }
        let is_virtual = constituents.iter().any(|(_, m)| m.is_negative());
        Ok(Decomposition {
            constituents,
            is_virtual,
        })
    }
}

/// Decomposition over the full root system of `datum`.
pub fn decompose(datum: &RootDatum, a: &FormalCharacter) -> Result<Decomposition> {
    RootSubsystem::full(datum).decompose(a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::weyl_character;
    use crate::lie::catalog;

    #[test]
    fn a1_tensor_square() {
        let d = catalog("su2").unwrap();
        let chi = weyl_character(&d, &Weight::from_fundamental(&[1])).unwrap();
        let dec = decompose(&d, &(&chi * &chi)).unwrap();
        assert_eq!(
            dec.constituents,
            vec![
                (Weight::from_fundamental(&[2]), BigInt::from(1)),
                (Weight::from_fundamental(&[0]), BigInt::from(1))
            ]
        );
        assert!(!dec.is_virtual);
    }

    #[test]
    fn unit_and_virtual() {
        let d = catalog("su3").unwrap();
        let dec = decompose(&d, &FormalCharacter::one(2)).unwrap();
        assert_eq!(dec.constituents, vec![(Weight::zero(2), BigInt::from(1))]);
        let adj = weyl_character(&d, d.rho()).unwrap();
        let v = &FormalCharacter::one(2) - &adj;
        let dec = decompose(&d, &v).unwrap();
        assert!(dec.is_virtual);
        assert_eq!(dec.multiplicity(d.rho()), BigInt::from(-1));
    }

    #[test]
    fn a2_adjoint_square() {
        let d = catalog("su3").unwrap();
        let adj = weyl_character(&d, d.rho()).unwrap();
        let dec = decompose(&d, &(&adj * &adj)).unwrap();
        let total: BigInt = dec
            .constituents
            .iter()
            .map(|(w, m)| m * weyl_character(&d, w).unwrap().dimension())
            .sum();
        assert_eq!(total, BigInt::from(64));
        // 8 ⊗ 8 = 27 + 10 + 10̄ + 8 + 8 + 1
        assert_eq!(dec.multiplicity(d.rho()), BigInt::from(2));
        assert_eq!(
            dec.multiplicity(&Weight::from_fundamental(&[2, 2])),
            BigInt::from(1)
        );
        assert_eq!(dec.multiplicity(&Weight::zero(2)), BigInt::from(1));
    }

    #[test]
    fn rejects_non_invariant() {
        let d = catalog("su2").unwrap();
        let a = FormalCharacter::exp(Weight::from_fundamental(&[1]));
        assert_eq!(decompose(&d, &a), Err(Error::NotInvariant));
    }
}
