use num_complex::Complex64;
use num_rational::Rational64;

use crate::lie::{invert, RootDatum, Weight, WeylElement};

/// Elements whose root values all stay this far from 1 count as regular.
pub const REGULARITY_TOL: f64 = 1e-9;

/// A point of the compact torus, given by angles `θ_j` so that
/// `e^μ(t) = exp(i · ½ · Σ_j coords2(μ)_j θ_j)`.
#[derive(Clone, Debug, PartialEq)]
pub struct TorusElement {
    angles: Vec<f64>,
}

impl TorusElement {
    pub fn new(angles: Vec<f64>) -> Self {
        Self { angles }
    }

    pub fn identity(rank: usize) -> Self {
        Self::new(vec![0.0; rank])
    }

    pub fn rank(&self) -> usize {
        self.angles.len()
    }

    pub fn angles(&self) -> &[f64] {
        &self.angles
    }

    pub fn exp_weight(&self, mu: &Weight) -> Complex64 {
        assert_eq!(mu.rank(), self.rank(), "weight rank mismatch");
        let phase: f64 = mu
            .coords2()
            .iter()
            .zip(&self.angles)
            .map(|(&c, th)| c as f64 * th)
            .sum::<f64>()
            * 0.5;
        Complex64::from_polar(1.0, phase)
    }

    /// `min_α |e^α(t) − 1|` over the positive roots.
    pub fn root_margin(&self, datum: &RootDatum) -> f64 {
        datum
            .positive_roots()
            .iter()
            .map(|r| (self.exp_weight(&r.weight) - 1.0).norm())
            .fold(f64::INFINITY, f64::min)
    }

    pub fn is_regular(&self, datum: &RootDatum) -> bool {
        self.root_margin(datum) > REGULARITY_TOL
    }

    /// `w · t`, defined by `e^μ(w·t) = e^{w⁻¹μ}(t)`: angles transform by the
    /// contragredient matrix `(M⁻¹)ᵀ`.
    pub fn act(&self, w: &WeylElement) -> TorusElement {
        let m: Vec<Vec<Rational64>> = w
            .matrix
            .iter()
            .map(|row| row.iter().map(|&x| Rational64::from_integer(x)).collect())
            .collect();
        let inv = invert(&m).expect("Weyl elements are invertible");
        let n = self.rank();
        TorusElement::new(
            (0..n)
                .map(|j| {
                    (0..n)
                        .map(|i| inv[i][j].to_integer() as f64 * self.angles[i])
                        .sum()
                })
                .collect(),
        )
    }
}
