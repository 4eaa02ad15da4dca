use num_rational::Rational64;
use num_traits::{One, Zero};

pub(crate) type IntMatrix = Vec<Vec<i64>>;

/// Exact inverse of a square rational matrix, or `None` if singular.
pub(crate) fn invert(m: &[Vec<Rational64>]) -> Option<Vec<Vec<Rational64>>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational64>> = m.to_vec();
    let mut inv: Vec<Vec<Rational64>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        Rational64::one()
                    } else {
                        Rational64::zero()
                    }
                })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col];
        for j in 0..n {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col];
                for j in 0..n {
                    let (ac, ic) = (a[col][j], inv[col][j]);
                    a[r][j] -= f * ac;
                    inv[r][j] -= f * ic;
                }
            }
        }
    }
    Some(inv)
}

/// Exact determinant by fraction-free elimination.
pub(crate) fn determinant(m: &[Vec<Rational64>]) -> Rational64 {
    let n = m.len();
    let mut a = m.to_vec();
    let mut det = Rational64::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Rational64::zero();
        };
        if pivot != col {
            a.swap(col, pivot);
            det = -det;
        }
        let p = a[col][col];
        det *= p;
        for r in col + 1..n {
            let f = a[r][col] / p;
            let pivot_row = a[col].clone();
            for (x, v) in a[r].iter_mut().zip(pivot_row).skip(col) {
                *x -= f * v;
            }
        }
    }
    det
}

pub(crate) fn to_rational(m: &IntMatrix) -> Vec<Vec<Rational64>> {
    m.iter()
        .map(|row| row.iter().map(|&x| Rational64::from_integer(x)).collect())
        .collect()
}

pub(crate) fn mat_mul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let n = a.len();
    let k = b.len();
    let m = if k == 0 { 0 } else { b[0].len() };
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| (0..k).map(|l| a[i][l] * b[l][j]).sum())
                .collect()
        })
        .collect()
}

pub(crate) fn identity(n: usize) -> IntMatrix {
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect()
}
