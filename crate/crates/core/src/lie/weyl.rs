use std::collections::{HashMap, VecDeque};

use num_rational::Rational64;
use serde::{Serialize, Serializer};

use super::linalg::{identity, invert, mat_mul, to_rational, IntMatrix};
use super::{RootDatum, Weight};
use crate::error::{Error, Result};

/// An element of a Weyl group acting on doubled weight coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylElement {
    /// Simple-reflection indices (0-based); `[i, j]` means `s_i s_j`.
    pub word: Vec<usize>,
    pub matrix: IntMatrix,
    pub sign: i8,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WhichGroup {
    Full,
    /// Generated by reflections in all compact roots.
    Compact,
}

impl WeylElement {
    pub fn identity(rank: usize) -> Self {
        Self {
            word: Vec::new(),
            matrix: identity(rank),
            sign: 1,
        }
    }

    pub fn rank(&self) -> usize {
        self.matrix.len()
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        let mut word = self.word.clone();
        word.extend_from_slice(&other.word);
        WeylElement {
            word,
            matrix: mat_mul(&self.matrix, &other.matrix),
            sign: self.sign * other.sign,
        }
    }

    pub fn inverse(&self) -> WeylElement {
        let inv = invert(&to_rational(&self.matrix)).expect("Weyl elements are invertible");
        WeylElement {
            word: self.word.iter().rev().copied().collect(),
            matrix: inv
                .iter()
                .map(|row| row.iter().map(|x| x.to_integer()).collect())
                .collect(),
            sign: self.sign,
        }
    }

    pub fn act(&self, mu: &Weight) -> Result<Weight> {
        weyl_act(self, mu)
    }

    /// The word with 1-based indices, as used in records and JSON.
    pub fn word_one_based(&self) -> Vec<usize> {
        self.word.iter().map(|i| i + 1).collect()
    }
}

impl Serialize for WeylElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Record<'a> {
            word: Vec<usize>,
            matrix: &'a IntMatrix,
            sign: i8,
        }
        Record {
            word: self.word_one_based(),
            matrix: &self.matrix,
            sign: self.sign,
        }
        .serialize(serializer)
    }
}

pub fn weyl_act(w: &WeylElement, mu: &Weight) -> Result<Weight> {
    if w.rank() != mu.rank() {
        return Err(Error::RankMismatch {
            expected: w.rank(),
            found: mu.rank(),
        });
    }
    let c = mu.coords2();
    Ok(Weight::from_doubled(
        w.matrix
            .iter()
            .map(|row| row.iter().zip(c).map(|(m, x)| m * x).sum())
            .collect(),
    ))
}

/// Matrix of the reflection `μ ↦ μ − ⟨μ, β^∨⟩ β` on fundamental-weight coordinates.
pub(crate) fn reflection_matrix(datum: &RootDatum, beta: &Weight) -> IntMatrix {
    let n = datum.rank();
    let b: Vec<i64> = beta.halve().expect("roots are integral").coords2().to_vec();
    // ⟨ω_k, β^∨⟩ for each fundamental weight ω_k.
    let coroot: Vec<i64> = (0..n)
        .map(|k| {
            let mut e = vec![0; n];
            e[k] = 2;
            let v: Rational64 = datum
                .coroot_pairing(&Weight::from_doubled(e), beta)
                .expect("ranks agree");
            assert!(
                v.is_integer(),
                "coroot pairing of a fundamental weight is integral"
            );
            v.to_integer()
        })
        .collect();
    (0..n)
        .map(|j| {
            (0..n)
                .map(|k| i64::from(j == k) - b[j] * coroot[k])
                .collect()
        })
        .collect()
}

/// Enumerates a Weyl group breadth-first from the identity.
///
/// For `Full`, words are reduced and generators are tried in index order.
/// `Compact` elements carry the reduced word of the same matrix in the full
/// group.
pub fn weyl_group(datum: &RootDatum, which: WhichGroup) -> Vec<WeylElement> {
    let n = datum.rank();
    let simple: Vec<IntMatrix> = (0..n)
        .map(|i| reflection_matrix(datum, datum.simple_root(i)))
        .collect();
    let full = closure(n, &simple, |w, i| {
        let mut word = w.word.clone();
        word.push(i);
        word
    });
    match which {
        WhichGroup::Full => full,
        WhichGroup::Compact => {
            let words: HashMap<&IntMatrix, &Vec<usize>> =
                full.iter().map(|w| (&w.matrix, &w.word)).collect();
            let gens: Vec<IntMatrix> = datum
                .compact_positive_roots()
                .map(|r| reflection_matrix(datum, &r.weight))
                .collect();
            let mut group = closure(n, &gens, |_, _| Vec::new());
            for w in &mut group {
                w.word = words[&w.matrix].clone();
                debug_assert_eq!(w.sign, if w.word.len() % 2 == 0 { 1 } else { -1 });
            }
            group
        }
    }
}

fn closure(
    rank: usize,
    gens: &[IntMatrix],
    next_word: impl Fn(&WeylElement, usize) -> Vec<usize>,
) -> Vec<WeylElement> {
    let mut seen: HashMap<IntMatrix, usize> = HashMap::new();
    let mut out = vec![WeylElement::identity(rank)];
    seen.insert(out[0].matrix.clone(), 0);
    let mut queue = VecDeque::from([0usize]);
    while let Some(idx) = queue.pop_front() {
        for (i, g) in gens.iter().enumerate() {
            let matrix = mat_mul(&out[idx].matrix, g);
            if seen.contains_key(&matrix) {
                continue;
            }
            let elem = WeylElement {
                word: next_word(&out[idx], i),
                matrix: matrix.clone(),
                sign: -out[idx].sign,
            };
            seen.insert(matrix, out.len());
            queue.push_back(out.len());
            out.push(elem);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::catalog;

    #[test]
    fn group_orders() {
        let order = |name: &str, which| weyl_group(&catalog(name).unwrap(), which).len();
        assert_eq!(order("su2", WhichGroup::Full), 2);
        assert_eq!(order("su3", WhichGroup::Full), 6);
        assert_eq!(order("so5", WhichGroup::Full), 8);
        assert_eq!(order("sl2R", WhichGroup::Compact), 1);
        assert_eq!(order("su21", WhichGroup::Compact), 2);
        assert_eq!(order("sp4R", WhichGroup::Compact), 2);
        assert_eq!(order("so5", WhichGroup::Compact), 8);
        let g2 = RootDatum::new(vec![vec![2, -1], vec![-3, 2]], &[]).unwrap();
        assert_eq!(weyl_group(&g2, WhichGroup::Full).len(), 12);
    }

    #[test]
    fn simple_reflection_of_rho() {
        for name in ["su3", "so5", "sp4R"] {
            let d = catalog(name).unwrap();
            let w = weyl_group(&d, WhichGroup::Full);
            for i in 0..d.rank() {
                let s = w.iter().find(|e| e.word == [i]).unwrap();
                assert_eq!(s.act(d.rho()).unwrap(), d.rho() - d.simple_root(i));
            }
        }
    }

    #[test]
    fn a1_reflection_negates() {
        let d = catalog("su2").unwrap();
        let s = &weyl_group(&d, WhichGroup::Full)[1];
        for n in -3..=3 {
            let w = Weight::from_fundamental(&[n]);
            assert_eq!(s.act(&w).unwrap(), -&w);
        }
    }

    #[test]
    fn longest_element_of_a2() {
        let d = catalog("su3").unwrap();
        let w = weyl_group(&d, WhichGroup::Full);
        let longest = w.iter().max_by_key(|e| e.word.len()).unwrap();
        assert_eq!(longest.word.len(), 3);
        assert_eq!(longest.act(d.rho()).unwrap(), -d.rho());
    }

    #[test]
    fn identity_first_and_inverse() {
        let d = catalog("so5").unwrap();
        let w = weyl_group(&d, WhichGroup::Full);
        assert_eq!(w[0], WeylElement::identity(2));
        for e in &w {
            assert_eq!(e.compose(&e.inverse()).matrix, identity(2));
        }
        assert!(matches!(
            w[1].act(&Weight::zero(3)),
            Err(Error::RankMismatch { .. })
        ));
    }
}
