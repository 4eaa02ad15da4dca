//! Small serialization helpers shared by reports and the CLI.

use num_complex::Complex64;
use serde::Serialize;

/// A complex number as `{re, im}`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ComplexValue {
    pub re: f64,
    pub im: f64,
}

impl From<Complex64> for ComplexValue {
    fn from(z: Complex64) -> Self {
        Self { re: z.re, im: z.im }
    }
}
