use std::collections::{BTreeSet, VecDeque};

use num_integer::Integer;
use num_rational::Rational64;
use num_traits::Signed;
use serde::Serialize;

use super::linalg::{determinant, invert, to_rational, IntMatrix};
use super::Weight;
use crate::error::{Error, Result};

/// A positive root together with its simple-root expansion and grading.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Root {
    pub weight: Weight,
    pub simple_coeffs: Vec<i64>,
    /// `true` when the root space lies in 𝔭.
    pub noncompact: bool,
}

/// A finite root system with a Vogan-diagram grading of its roots into
/// compact and noncompact ones.
///
/// Row `i` of the Cartan matrix holds the fundamental-weight coordinates of
/// the simple root `α_i`, i.e. `cartan[i][j] = ⟨α_i, α_j^∨⟩`.
#[derive(Clone, Debug, Serialize)]
pub struct RootDatum {
    rank: usize,
    cartan: IntMatrix,
    symmetrizer: Vec<i64>,
    noncompact_simple: Vec<usize>,
    positive_roots: Vec<Root>,
    rho: Weight,
    rho_c: Weight,
    rho_n: Weight,
    q: usize,
    #[serde(skip)]
    cartan_inv: Vec<Vec<Rational64>>,
}

impl PartialEq for RootDatum {
    fn eq(&self, other: &Self) -> bool {
        self.cartan == other.cartan && self.noncompact_simple == other.noncompact_simple
    }
}

impl RootDatum {
    /// Builds the datum from a Cartan matrix and the (0-based) indices of the
    /// painted, noncompact simple roots.
    pub fn new(cartan: IntMatrix, noncompact: &[usize]) -> Result<Self> {
        let rank = cartan.len();
        if rank == 0 {
            return Err(Error::NotFiniteType("empty Cartan matrix".into()));
        }
        check_shape(&cartan)?;
        for &i in noncompact {
            if i >= rank {
                return Err(Error::InvalidNoncompactSet { index: i, rank });
            }
        }
        let noncompact_simple: Vec<usize> = noncompact
            .iter()
            .copied()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();

        let symmetrizer = symmetrize(&cartan)?;
        let sym: IntMatrix = (0..rank)
            .map(|i| (0..rank).map(|j| cartan[i][j] * symmetrizer[j]).collect())
            .collect();
        let sym_q = to_rational(&sym);
        for k in 1..=rank {
            let minor: Vec<Vec<Rational64>> =
                sym_q[..k].iter().map(|row| row[..k].to_vec()).collect();
            if !determinant(&minor).is_positive() {
                return Err(Error::NotFiniteType(format!(
                    "symmetrized form is not positive definite (leading minor {k})"
                )));
            }
        }
        let cartan_inv = invert(&to_rational(&cartan))
            .ok_or_else(|| Error::NotFiniteType("singular Cartan matrix".into()))?;

        let positive_roots = enumerate_positive_roots(&cartan, &noncompact_simple);
        let half_sum = |pred: &dyn Fn(&Root) -> bool| {
            let mut sum = Weight::zero(rank);
            for r in positive_roots.iter().filter(|r| pred(r)) {
                sum = &sum + &r.weight;
            }
            sum.halve().expect("root coordinates are even")
        };
        let rho = half_sum(&|_| true);
        let rho_c = half_sum(&|r| !r.noncompact);
        let rho_n = half_sum(&|r| r.noncompact);
        let q = positive_roots.iter().filter(|r| r.noncompact).count();

        Ok(Self {
            rank,
            cartan,
            symmetrizer,
            noncompact_simple,
            positive_roots,
            rho,
            rho_c,
            rho_n,
            q,
            cartan_inv,
        })
    }

    /// Parses a text record:
    ///
    /// ```text
    /// rank 2
    /// cartan 2 -1
    /// cartan -1 2
    /// noncompact 2
    /// ```
    ///
    /// Noncompact indices are 1-based, as on a Dynkin diagram. Blank lines
    /// and `#` comments are ignored; a missing `noncompact` line means the
    /// compact form.
    pub fn from_record(text: &str) -> Result<Self> {
        let mut rank: Option<usize> = None;
        let mut rows: IntMatrix = Vec::new();
        let mut noncompact = Vec::new();
        for raw in text.lines() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let mut parts = line.split_whitespace();
            let key = parts.next().unwrap_or_default();
            let values: Vec<i64> = parts
                .map(|p| {
                    p.trim_matches(',')
                        .parse::<i64>()
                        .map_err(|e| Error::Parse(format!("{p:?}: {e}")))
                })
                .collect::<Result<_>>()?;
            match key {
                "rank" => match values.as_slice() {
                    [r] if *r > 0 => rank = Some(*r as usize),
                    _ => return Err(Error::Parse("rank needs one positive integer".into())),
                },
                "cartan" => rows.push(values),
                "noncompact" => {
                    for v in values {
                        if v < 1 {
                            return Err(Error::Parse(format!(
                                "noncompact indices are 1-based, got {v}"
                            )));
                        }
                        noncompact.push(v as usize - 1);
                    }
                }
                other => return Err(Error::Parse(format!("unknown key {other:?}"))),
            }
        }
        let rank = rank.ok_or_else(|| Error::Parse("missing rank".into()))?;
        if rows.len() != rank || rows.iter().any(|r| r.len() != rank) {
            return Err(Error::Parse(format!(
                "expected {rank} cartan rows of length {rank}"
            )));
        }
        Self::new(rows, &noncompact)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan(&self) -> &IntMatrix {
        &self.cartan
    }

    /// Smallest positive integers `d_i` proportional to `(α_i, α_i)`.
    pub fn symmetrizer(&self) -> &[i64] {
        &self.symmetrizer
    }

    /// 0-based indices of the noncompact simple roots.
    pub fn noncompact_simple(&self) -> &[usize] {
        &self.noncompact_simple
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    pub fn compact_positive_roots(&self) -> impl Iterator<Item = &Root> {
        self.positive_roots.iter().filter(|r| !r.noncompact)
    }

    pub fn noncompact_positive_roots(&self) -> impl Iterator<Item = &Root> {
        self.positive_roots.iter().filter(|r| r.noncompact)
    }

    pub fn simple_root(&self, i: usize) -> &Weight {
        &self.positive_roots[i].weight
    }

    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    pub fn rho_c(&self) -> &Weight {
        &self.rho_c
    }

    pub fn rho_n(&self) -> &Weight {
        &self.rho_n
    }

    /// Number of noncompact positive roots, `dim(G/K) / 2`.
    pub fn q(&self) -> usize {
        self.q
    }

    pub fn is_compact(&self) -> bool {
        self.q == 0
    }

    /// Finds a root (positive or negative) with the given coordinates; the
    /// flag is `true` for positive roots.
    pub fn find_root(&self, w: &Weight) -> Option<(&Root, bool)> {
        let neg = -w;
        self.positive_roots.iter().find_map(|r| {
            if &r.weight == w {
                Some((r, true))
            } else if r.weight == neg {
                Some((r, false))
            } else {
                None
            }
        })
    }

    pub(crate) fn check_rank(&self, w: &Weight) -> Result<()> {
        if w.rank() != self.rank {
            return Err(Error::RankMismatch {
                expected: self.rank,
                found: w.rank(),
            });
        }
        Ok(())
    }

    /// Coefficients of `w` in the basis of simple roots.
    pub fn simple_coords(&self, w: &Weight) -> Result<Vec<Rational64>> {
        self.check_rank(w)?;
        let c2 = w.coords2();
        Ok((0..self.rank)
            .map(|i| {
                let s: Rational64 = (0..self.rank)
                    .map(|j| Rational64::from_integer(c2[j]) * self.cartan_inv[j][i])
                    .sum();
                s / 2
            })
            .collect())
    }

    /// Invariant bilinear form normalized by `(α_i, α_i) = 2 d_i`. Only its
    /// sign and zero pattern carry meaning; the overall scale is a convention.
    pub fn pairing(&self, mu: &Weight, nu: &Weight) -> Result<Rational64> {
        self.check_rank(nu)?;
        let c = self.simple_coords(mu)?;
        Ok((0..self.rank)
            .map(|i| c[i] * self.symmetrizer[i] * Rational64::new(nu.coords2()[i], 2))
            .sum())
    }

    /// `⟨μ, β^∨⟩ = 2(μ, β) / (β, β)`.
    pub fn coroot_pairing(&self, mu: &Weight, beta: &Weight) -> Result<Rational64> {
        let bb = self.pairing(beta, beta)?;
        Ok(self.pairing(mu, beta)? * 2 / bb)
    }
}

fn check_shape(cartan: &IntMatrix) -> Result<()> {
    let n = cartan.len();
    for (i, row) in cartan.iter().enumerate() {
        if row.len() != n {
            return Err(Error::NotFiniteType("Cartan matrix is not square".into()));
        }
        if row[i] != 2 {
            return Err(Error::NotFiniteType(format!("diagonal entry {i} is not 2")));
        }
        for j in 0..n {
            if i == j {
                continue;
            }
            if row[j] > 0 {
                return Err(Error::NotFiniteType(format!(
                    "positive off-diagonal entry at ({i}, {j})"
                )));
            }
            if (row[j] == 0) != (cartan[j][i] == 0) {
                return Err(Error::NotFiniteType(format!(
                    "zero pattern is not symmetric at ({i}, {j})"
                )));
            }
        }
    }
    Ok(())
}

/// Solves `A_ji e_i = A_ij e_j` component by component and clears denominators.
fn symmetrize(cartan: &IntMatrix) -> Result<Vec<i64>> {
    let n = cartan.len();
    let mut e: Vec<Option<Rational64>> = vec![None; n];
    for start in 0..n {
        if e[start].is_some() {
            continue;
        }
        e[start] = Some(Rational64::from_integer(1));
        let mut queue = VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            let ei = e[i].unwrap();
            for j in 0..n {
                if i == j || cartan[i][j] == 0 {
                    continue;
                }
                let ej = ei * cartan[j][i] / cartan[i][j];
                match e[j] {
                    None => {
                        e[j] = Some(ej);
                        queue.push_back(j);
                    }
                    Some(prev) if prev != ej => {
                        return Err(Error::NotFiniteType("matrix is not symmetrizable".into()))
                    }
                    Some(_) => {}
                }
            }
        }
    }
    let e: Vec<Rational64> = e.into_iter().map(Option::unwrap).collect();
    let lcm = e.iter().fold(1i64, |acc, x| acc.lcm(x.denom()));
    let ints: Vec<i64> = e.iter().map(|x| (x * lcm).to_integer()).collect();
    let gcd = ints.iter().fold(0i64, |acc, &x| acc.gcd(&x));
    Ok(ints.into_iter().map(|x| x / gcd).collect())
}

/// Positive roots by height, using root strings through simple roots.
fn enumerate_positive_roots(cartan: &IntMatrix, noncompact: &[usize]) -> Vec<Root> {
    let n = cartan.len();
    let fundamental = |c: &[i64]| -> Vec<i64> {
        (0..n)
            .map(|j| (0..n).map(|i| c[i] * cartan[i][j]).sum())
            .collect()
    };
    let unit = |i: usize| -> Vec<i64> { (0..n).map(|k| i64::from(k == i)).collect() };

    let mut found: BTreeSet<Vec<i64>> = (0..n).map(unit).collect();
    let mut ordered: Vec<Vec<i64>> = (0..n).map(unit).collect();
    let mut layer: Vec<Vec<i64>> = ordered.clone();
    while !layer.is_empty() {
        let mut next = BTreeSet::new();
        for beta in &layer {
            let fund = fundamental(beta);
            for i in 0..n {
                // p = length of the string below β in direction α_i.
                let mut p = 0;
                loop {
                    let mut down = beta.clone();
                    down[i] -= p + 1;
                    if down.iter().all(|&c| c >= 0) && found.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                if p - fund[i] > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if !found.contains(&up) {
                        next.insert(up);
                    }
                }
            }
        }
        layer = next.into_iter().collect();
        for r in &layer {
            found.insert(r.clone());
            ordered.push(r.clone());
        }
    }

    ordered
        .into_iter()
        .map(|c| {
            let parity: i64 = noncompact.iter().map(|&i| c[i]).sum();
            let weight = Weight::from_fundamental(&fundamental(&c));
            Root {
                weight,
                simple_coeffs: c,
                noncompact: parity % 2 != 0,
            }
        })
        .collect()
}
