use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use super::TorusElement;
use crate::error::{Error, Result};
use crate::lie::{Weight, WeylElement};

/// A finite integer combination `Σ c_μ e^μ` of formal exponentials.
///
/// Zero coefficients are never stored. Terms are kept in lexicographic order
/// of the doubled coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormalCharacter {
    rank: usize,
    terms: BTreeMap<Weight, BigInt>,
}

/// JSON record for one term; the coefficient is an exact decimal string.
#[derive(Serialize)]
pub struct CharacterTerm<'a> {
    pub coords2: &'a [i64],
    pub coefficient: String,
}

impl FormalCharacter {
    pub fn zero(rank: usize) -> Self {
        Self {
            rank,
            terms: BTreeMap::new(),
        }
    }

    /// The unit `e^0`.
    pub fn one(rank: usize) -> Self {
        Self::exp(Weight::zero(rank))
    }

    pub fn exp(weight: Weight) -> Self {
        Self::monomial(weight, BigInt::one())
    }

    pub fn monomial(weight: Weight, coefficient: BigInt) -> Self {
        let mut c = Self::zero(weight.rank());
        c.add_term(weight, coefficient);
        c
    }

    pub fn from_terms(rank: usize, terms: impl IntoIterator<Item = (Weight, BigInt)>) -> Self {
        let mut c = Self::zero(rank);
        for (w, k) in terms {
            c.add_term(w, k);
        }
        c
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn add_term(&mut self, weight: Weight, coefficient: BigInt) {
        assert_eq!(weight.rank(), self.rank, "weight rank mismatch");
        if coefficient.is_zero() {
            return;
        }
        let entry = self.terms.entry(weight);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coefficient);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coefficient;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Weight, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, weight: &Weight) -> BigInt {
        self.terms.get(weight).cloned().unwrap_or_default()
    }

    /// Lexicographically largest term.
    pub fn leading_term(&self) -> Option<(&Weight, &BigInt)> {
        self.terms.iter().next_back()
    }

    /// Lexicographically smallest term.
    pub fn trailing_term(&self) -> Option<(&Weight, &BigInt)> {
        self.terms.iter().next()
    }

    /// Multiplication by `e^μ`.
    pub fn shift(&self, mu: &Weight) -> Self {
        Self {
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w + mu, c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero(self.rank);
        }
        Self {
            rank: self.rank,
            terms: self.terms.iter().map(|(w, c)| (w.clone(), c * k)).collect(),
        }
    }

    /// `w · Σ c_μ e^μ = Σ c_μ e^{wμ}`.
    pub fn apply(&self, w: &WeylElement) -> Result<Self> {
        let mut out = Self::zero(self.rank);
        for (mu, c) in &self.terms {
            out.add_term(w.act(mu)?, c.clone());
        }
        Ok(out)
    }

    /// Sum of the coefficients, i.e. the value at the identity.
    pub fn dimension(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn evaluate(&self, t: &TorusElement) -> Result<Complex64> {
        if t.rank() != self.rank {
            return Err(Error::RankMismatch {
                expected: self.rank,
                found: t.rank(),
            });
        }
        Ok(self
            .terms
            .iter()
            .map(|(mu, c)| t.exp_weight(mu) * c.to_f64().expect("finite coefficient"))
            .sum())
    }

    /// Exact quotient `self / den` by Laurent division in lexicographic order.
    ///
    /// Any quotient term `μ` must satisfy `μ ≥ min(self) − min(den)`; once the
    /// remainder's leading term would need a quotient term below that bound
    /// the division cannot be exact.
    pub fn exact_divide(&self, den: &FormalCharacter) -> Result<Self> {
        let (lead_w, lead_c) = den.leading_term().ok_or(Error::NotDivisible)?;
        if den.rank != self.rank {
            return Err(Error::RankMismatch {
                expected: self.rank,
                found: den.rank,
            });
        }
        let Some((num_min, _)) = self.trailing_term() else {
            return Ok(Self::zero(self.rank));
        };
        let bound = num_min - den.trailing_term().unwrap().0;
        let mut rem = self.clone();
        let mut quotient = Self::zero(self.rank);
        while let Some((w, c)) = rem.leading_term() {
            let t = w - lead_w;
            if t < bound {
                return Err(Error::NotDivisible);
            }
            let (k, r) = c.div_rem(lead_c);
            if !r.is_zero() {
                return Err(Error::NotDivisible);
            }
            rem = &rem - &den.shift(&t).scale(&k);
            quotient.add_term(t, k);
        }
        Ok(quotient)
    }

    pub fn records(&self) -> Vec<CharacterTerm<'_>> {
        self.terms
            .iter()
            .map(|(w, c)| CharacterTerm {
                coords2: w.coords2(),
                coefficient: c.to_string(),
            })
            .collect()
    }
}

impl Serialize for FormalCharacter {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.records().serialize(serializer)
    }
}

impl Add for &FormalCharacter {
    type Output = FormalCharacter;
    fn add(self, rhs: &FormalCharacter) -> FormalCharacter {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl Sub for &FormalCharacter {
    type Output = FormalCharacter;
    fn sub(self, rhs: &FormalCharacter) -> FormalCharacter {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), -c);
        }
        out
    }
}

impl Neg for &FormalCharacter {
    type Output = FormalCharacter;
    fn neg(self) -> FormalCharacter {
        self.scale(&BigInt::from(-1))
    }
}

impl Mul for &FormalCharacter {
    type Output = FormalCharacter;
    fn mul(self, rhs: &FormalCharacter) -> FormalCharacter {
        assert_eq!(self.rank, rhs.rank, "character rank mismatch");
        let mut out = FormalCharacter::zero(self.rank);
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                out.add_term(a + b, ca * cb);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr for FormalCharacter {
            type Output = FormalCharacter;
            fn $m(self, rhs: FormalCharacter) -> FormalCharacter {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);
