use super::RootDatum;
use crate::error::{Error, Result};

pub const CATALOG_NAMES: [&str; 6] = ["sl2R", "su21", "sp4R", "su2", "su3", "so5"];
pub const EQUAL_RANK_DATA: [&str; 3] = ["sl2R", "su21", "sp4R"];
pub const COMPACT_DATA: [&str; 3] = ["su2", "su3", "so5"];

/// Built-in data. The C2 Cartan matrix has `α_1` short and `α_2` long, so
/// `sp4R` paints the long simple root.
pub fn catalog(name: &str) -> Result<RootDatum> {
    let a1 = || vec![vec![2]];
    let a2 = || vec![vec![2, -1], vec![-1, 2]];
    let c2 = || vec![vec![2, -1], vec![-2, 2]];
    match name {
        "sl2R" => RootDatum::new(a1(), &[0]),
        "su2" => RootDatum::new(a1(), &[]),
        "su21" => RootDatum::new(a2(), &[1]),
        "su3" => RootDatum::new(a2(), &[]),
        "sp4R" => RootDatum::new(c2(), &[1]),
        "so5" => RootDatum::new(c2(), &[]),
        other => Err(Error::UnknownDatum(other.to_string())),
    }
}
