use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Serialize, Serializer};

/// A weight stored as doubled coordinates in the fundamental-weight basis:
/// the weight itself is `coords2 / 2`.
///
/// The derived `Ord` is lexicographic on `coords2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    coords2: Vec<i64>,
}

impl Weight {
    pub fn from_doubled(coords2: Vec<i64>) -> Self {
        Self { coords2 }
    }

    /// Weight with the given (undoubled, integral) fundamental-weight coordinates.
    pub fn from_fundamental(coords: &[i64]) -> Self {
        Self {
            coords2: coords.iter().map(|c| 2 * c).collect(),
        }
    }

    pub fn zero(rank: usize) -> Self {
        Self {
            coords2: vec![0; rank],
        }
    }

    pub fn rank(&self) -> usize {
        self.coords2.len()
    }

    pub fn coords2(&self) -> &[i64] {
        &self.coords2
    }

    pub fn is_zero(&self) -> bool {
        self.coords2.iter().all(|&c| c == 0)
    }

    pub fn is_integral(&self) -> bool {
        self.coords2.iter().all(|c| c % 2 == 0)
    }

    /// Dominant for the full positive system (all fundamental coordinates >= 0).
    pub fn is_dominant(&self) -> bool {
        self.coords2.iter().all(|&c| c >= 0)
    }

    pub fn scale(&self, k: i64) -> Self {
        Self {
            coords2: self.coords2.iter().map(|c| c * k).collect(),
        }
    }

    /// Half of this weight, if it stays in the doubled lattice.
    pub fn halve(&self) -> Option<Self> {
        if self.coords2.iter().all(|c| c % 2 == 0) {
            Some(Self {
                coords2: self.coords2.iter().map(|c| c / 2).collect(),
            })
        } else {
            None
        }
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        assert_eq!(self.rank(), rhs.rank(), "weight rank mismatch");
        Weight {
            coords2: self
                .coords2
                .iter()
                .zip(&rhs.coords2)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        assert_eq!(self.rank(), rhs.rank(), "weight rank mismatch");
        Weight {
            coords2: self
                .coords2
                .iter()
                .zip(&rhs.coords2)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(self, rhs: Weight) -> Weight {
        &self + &rhs
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(self, rhs: Weight) -> Weight {
        &self - &rhs
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        self.scale(-1)
    }
}

impl Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        self.scale(-1)
    }
}

impl fmt::Display for Weight {
    /// Integral weights print in fundamental coordinates, others as `[..]/2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (coords, suffix): (Vec<i64>, &str) = match self.halve() {
            Some(h) => (h.coords2, ""),
            None => (self.coords2.clone(), "/2"),
        };
        write!(f, "(")?;
        for (i, c) in coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "){suffix}")
    }
}

impl Serialize for Weight {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.coords2.serialize(serializer)
    }
}
