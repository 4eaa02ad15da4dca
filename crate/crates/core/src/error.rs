use crate::lie::Weight;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(thiserror::Error, Debug, Clone, PartialEq)]
pub enum Error {
    #[error("Cartan matrix is not of finite type: {0}")]
    NotFiniteType(String),
    #[error("noncompact index {index} is out of range for rank {rank}")]
    InvalidNoncompactSet { index: usize, rank: usize },
    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("character is not divisible by the given denominator")]
    NotDivisible,
    #[error("weight {0} is not dominant")]
    NotDominant(Weight),
    #[error("weight {0} is not integral")]
    NotIntegral(Weight),
    #[error("character is not Weyl-invariant")]
    NotInvariant,
    #[error("leading term {0} of the remainder is not dominant")]
    NonDominantLeadingTerm(Weight),
    #[error("parameter {0} is not regular dominant for the positive system")]
    NotRegular(Weight),
    #[error("torus element is singular (denominator modulus {modulus:e})")]
    SingularElement { modulus: f64 },
    #[error("weight {0} is not dominant integral for the compact subsystem")]
    NotDominantForK(Weight),
    #[error("n = {0} does not index a discrete series representation (need n >= 1)")]
    NotDiscreteSeries(i64),
    #[error("quadrature did not converge: {0}")]
    NotConverged(String),
    #[error("not an element of SU(1,1) (defect {0:e})")]
    NotInGroup(f64),
    #[error("unknown catalog datum {0:?}")]
    UnknownDatum(String),
    #[error("invalid input: {0}")]
    Parse(String),
}
