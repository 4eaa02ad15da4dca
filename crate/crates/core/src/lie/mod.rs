//! Root systems with a compact/noncompact grading, weights in doubled
//! fundamental-weight coordinates, and Weyl groups.

mod catalog;
mod datum;
mod linalg;
mod subsystem;
mod weight;
mod weyl;

pub use catalog::{catalog, CATALOG_NAMES, COMPACT_DATA, EQUAL_RANK_DATA};
pub use datum::{Root, RootDatum};
pub use subsystem::RootSubsystem;
pub use weight::Weight;
pub use weyl::{weyl_act, weyl_group, WeylElement, WhichGroup};

pub(crate) use linalg::invert;
