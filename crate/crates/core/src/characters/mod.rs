//! The formal character ring `ℤ[weights]`, torus evaluation, Weyl's
//! character formula as an exact quotient, Freudenthal's recursion as an
//! independent multiplicity oracle, and decomposition into irreducibles.

mod decompose;
mod formal;
mod freudenthal;
mod torus;
mod weyl_formula;

pub use decompose::{decompose, Decomposition};
pub use formal::{CharacterTerm, FormalCharacter};
pub use freudenthal::freudenthal_character;
pub use torus::{TorusElement, REGULARITY_TOL};
pub use weyl_formula::{denominator_product, weyl_character};
