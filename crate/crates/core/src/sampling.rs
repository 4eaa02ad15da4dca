//! Seeded random inputs for property checks.

use rand::Rng;
use std::f64::consts::TAU;

use crate::characters::TorusElement;
use crate::lie::{RootDatum, Weight};

/// Dominant integral weight with fundamental coordinates in `0..=max_entry`.
pub fn random_dominant<R: Rng + ?Sized>(rank: usize, max_entry: i64, rng: &mut R) -> Weight {
    let coords: Vec<i64> = (0..rank).map(|_| rng.random_range(0..=max_entry)).collect();
    Weight::from_fundamental(&coords)
}

/// A valid Harish-Chandra parameter `ρ + μ` with `μ` random dominant integral.
pub fn random_hc_lambda<R: Rng + ?Sized>(datum: &RootDatum, max_entry: i64, rng: &mut R) -> Weight {
    &random_dominant(datum.rank(), max_entry, rng) + datum.rho()
}

/// Uniform torus element whose root values all stay `margin` away from 1.
pub fn random_regular<R: Rng + ?Sized>(
    datum: &RootDatum,
    margin: f64,
    rng: &mut R,
) -> TorusElement {
    loop {
        let t = TorusElement::new(
            (0..datum.rank())
                .map(|_| rng.random_range(0.0..TAU))
                .collect(),
        );
        if t.root_margin(datum) >= margin {
            return t;
        }
    }
}
