//! Exact computations around discrete series characters of equal-rank real
//! Lie groups.
//!
//! * [`lie`]: root data with a compact/noncompact grading and Weyl groups.
//! * [`characters`]: the formal character ring, Weyl's character formula and
//!   a Freudenthal oracle.
//! * [`dschar`]: Harish-Chandra parameters and discrete series character
//!   values on the compact Cartan subgroup.
//! * [`spin`]: spinor and exterior-algebra weights of 𝔭 and the Dirac
//!   induction multiplicity check.
//! * [`fixed_point`]: Lefschetz sums over the isolated fixed points on `G/T`.
//! * [`sl2`]: numeric matrix coefficients, formal degree and orbital
//!   integrals for `SU(1,1)`.

pub mod characters;
pub mod cli;
pub mod dschar;
pub mod error;
pub mod fixed_point;
pub mod json;
pub mod lie;
pub mod sampling;
pub mod sl2;
pub mod spin;
pub mod verify;

pub use error::{Error, Result};
