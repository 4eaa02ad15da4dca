use num_complex::Complex64;
use std::ops::Mul;

use crate::error::{Error, Result};

/// Tolerance on `|a|² − |b|² = 1`.
pub const GROUP_TOL: f64 = 1e-12;

/// An element `[[a, b], [b̄, ā]]` of `SU(1,1)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Su11 {
    a: Complex64,
    b: Complex64,
}

impl Su11 {
    pub fn new(a: Complex64, b: Complex64) -> Result<Self> {
        let dev = (a.norm_sqr() - b.norm_sqr() - 1.0).abs();
        if dev > GROUP_TOL * a.norm_sqr().max(1.0) {
            return Err(Error::NotInGroup(dev));
        }
        Ok(Self { a, b })
    }

    pub fn identity() -> Self {
        Self {
            a: Complex64::new(1.0, 0.0),
            b: Complex64::new(0.0, 0.0),
        }
    }

    /// `diag(e^{iθ}, e^{−iθ})`, the compact Cartan subgroup.
    pub fn rotation(theta: f64) -> Self {
        Self {
            a: Complex64::from_polar(1.0, theta),
            b: Complex64::new(0.0, 0.0),
        }
    }

    /// `[[cosh t, sinh t], [sinh t, cosh t]]`.
    pub fn boost(t: f64) -> Self {
        Self {
            a: Complex64::new(t.cosh(), 0.0),
            b: Complex64::new(t.sinh(), 0.0),
        }
    }

    /// The coset representative of `z` in the unit disc model of `G/T`,
    /// `(1 − |z|²)^{−1/2} [[1, z], [z̄, 1]]`; it maps `0` to `z`.
    pub fn disc_point(z: Complex64) -> Result<Self> {
        let r2 = z.norm_sqr();
        if r2 >= 1.0 {
            return Err(Error::NotInGroup(r2));
        }
        let s = 1.0 / (1.0 - r2).sqrt();
        Ok(Self {
            a: Complex64::new(s, 0.0),
            b: z * s,
        })
    }

    pub fn a(&self) -> Complex64 {
        self.a
    }

    pub fn b(&self) -> Complex64 {
        self.b
    }

    pub fn inverse(&self) -> Self {
        Self {
            a: self.a.conj(),
            b: -self.b,
        }
    }

    /// `x g x⁻¹`.
    pub fn conjugate_by(&self, x: &Su11) -> Self {
        *x * *self * x.inverse()
    }

    /// Radial coordinate `t ≥ 0` in `g = k a_t k'`.
    pub fn radial(&self) -> f64 {
        self.a.norm().max(1.0).acosh()
    }
}

impl Mul for Su11 {
    type Output = Su11;

    fn mul(self, rhs: Su11) -> Su11 {
        Su11 {
            a: self.a * rhs.a + self.b * rhs.b.conj(),
            b: self.a * rhs.b + self.b * rhs.a.conj(),
        }
    }
}
