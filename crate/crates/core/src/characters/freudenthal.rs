use std::collections::{BTreeMap, BTreeSet, VecDeque};

use num_bigint::BigInt;
use num_rational::Rational64;
use num_traits::Zero;

use super::FormalCharacter;
use crate::error::{Error, Result};
use crate::lie::{RootDatum, Weight};

/// Weight multiplicities by Freudenthal's recursion.
///
/// Works only with simple reflections on coordinates and the invariant form,
/// so it shares no code path with the Weyl-quotient route.
pub fn freudenthal_character(datum: &RootDatum, highest: &Weight) -> Result<FormalCharacter> {
    datum.check_rank(highest)?;
    if !highest.is_dominant() {
        return Err(Error::NotDominant(highest.clone()));
    }
    if !highest.is_integral() {
        return Err(Error::NotIntegral(highest.clone()));
    }
    let rank = datum.rank();
    let positive: Vec<&Weight> = datum.positive_roots().iter().map(|r| &r.weight).collect();
    let norm = |x: &Weight| datum.pairing(x, x).expect("ranks agree");
    let depth = |mu: &Weight| -> i64 {
        let c = datum.simple_coords(&(highest - mu)).expect("ranks agree");
        c.iter().sum::<Rational64>().to_integer()
    };

    // Dominant weights below Λ are connected to Λ by subtracting positive roots.
    let mut dominant: BTreeSet<Weight> = BTreeSet::from([highest.clone()]);
    let mut queue = VecDeque::from([highest.clone()]);
    while let Some(mu) = queue.pop_front() {
        for a in &positive {
            let nu = &mu - a;
            if nu.is_dominant() && !dominant.contains(&nu) {
                dominant.insert(nu.clone());
                queue.push_back(nu);
            }
        }
    }
    let mut order: Vec<Weight> = dominant.into_iter().collect();
    order.sort_by_key(|mu| (depth(mu), mu.clone()));

    let top = norm(&(highest + datum.rho()));
    let mut mult: BTreeMap<Weight, i64> = BTreeMap::new();
    mult.insert(highest.clone(), 1);
    for mu in order.iter().skip(1) {
        let mut sum = Rational64::zero();
        for a in &positive {
            let mut nu = mu + *a;
            while let Some(&m) = mult.get(&dominant_representative(datum, &nu)) {
                sum += Rational64::from_integer(m) * datum.pairing(&nu, a).expect("ranks agree");
                nu = &nu + *a;
            }
        }
        let gap = top - norm(&(mu + datum.rho()));
        let m = sum * 2 / gap;
        assert!(
            m.is_integer(),
            "Freudenthal multiplicity must be an integer"
        );
        mult.insert(mu.clone(), m.to_integer());
    }

    let mut out = FormalCharacter::zero(rank);
    for (mu, m) in mult.into_iter().filter(|(_, m)| *m != 0) {
        for nu in orbit(datum, &mu) {
            out.add_term(nu, BigInt::from(m));
        }
    }
    Ok(out)
}

fn simple_reflect(datum: &RootDatum, mu: &Weight, i: usize) -> Weight {
    let k = mu.coords2()[i];
    let alpha = datum.cartan()[i].iter().map(|a| a * k).collect::<Vec<_>>();
    mu - &Weight::from_doubled(alpha)
}

fn dominant_representative(datum: &RootDatum, mu: &Weight) -> Weight {
    let mut nu = mu.clone();
    while let Some(i) = nu.coords2().iter().position(|&c| c < 0) {
        nu = simple_reflect(datum, &nu, i);
    }
    nu
}

fn orbit(datum: &RootDatum, mu: &Weight) -> BTreeSet<Weight> {
    let mut seen = BTreeSet::from([mu.clone()]);
    let mut queue = VecDeque::from([mu.clone()]);
    while let Some(nu) = queue.pop_front() {
        for i in 0..datum.rank() {
            let r = simple_reflect(datum, &nu, i);
            if seen.insert(r.clone()) {
                queue.push_back(r);
            }
        }
    }
    seen
}
