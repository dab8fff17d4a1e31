//! Irreducible and primary decomposition of monomial ideals.
//!
//! Irreducible components come from the binary splitting
//! `I = (I + <x_i^a>) ∩ (I + <g / x_i^a>)` applied to a generator
//! `g = x_i^a * rest` that is not a pure power. Components that share a
//! radical are intersected to give one primary component per associated
//! prime.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::{minimalize, ExponentVector, MonomialIdeal};

/// The monomial prime `P_tau = <x_i : i not in tau>`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MonomialPrime {
    vars: usize,
    tau: BTreeSet<usize>,
}

impl MonomialPrime {
    pub fn new(vars: usize, tau: impl IntoIterator<Item = usize>) -> Result<Self> {
        let tau: BTreeSet<usize> = tau.into_iter().collect();
        if let Some(&bad) = tau.iter().find(|&&i| i >= vars) {
            return Err(Error::InvalidArgument(format!(
                "variable index {bad} out of range for {vars} variables"
            )));
        }
        Ok(MonomialPrime { vars, tau })
    }

    /// The prime generated by exactly the variables in `support`.
    pub fn generated_by(vars: usize, support: &[usize]) -> Self {
        let tau = (0..vars).filter(|i| !support.contains(i)).collect();
        MonomialPrime { vars, tau }
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn tau(&self) -> &BTreeSet<usize> {
        &self.tau
    }

    /// Variables generating the prime (the complement of tau).
    pub fn generators(&self) -> Vec<usize> {
        (0..self.vars).filter(|i| !self.tau.contains(i)).collect()
    }

    pub fn to_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::variables(self.vars, &self.generators())
    }
}

/// A `P_tau`-primary monomial ideal together with its prime.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct PrimaryComponent {
    pub prime: MonomialPrime,
    pub component: MonomialIdeal,
}

impl PrimaryComponent {
    /// Generators use only variables outside tau, and each such variable
    /// appears as a pure power.
    pub fn is_valid(&self) -> bool {
        let outside = self.prime.generators();
        let support_ok = self
            .component
            .gens()
            .iter()
            .all(|g| g.support().iter().all(|i| outside.contains(i)));
        support_ok
            && outside
                .iter()
                .all(|&i| self.component.pure_power_of(i).is_some())
    }

    /// The component viewed in the smaller ring on the variables outside tau.
    pub fn restricted(&self) -> MonomialIdeal {
        let outside = self.prime.generators();
        let gens = self.component.gens().iter().map(|g| {
            ExponentVector::new(outside.iter().map(|&i| g[i]).collect())
        });
        minimalize(outside.len(), gens).expect("restricted lengths agree")
    }
}

fn check_proper(ideal: &MonomialIdeal) -> Result<()> {
    if ideal.is_zero() {
        Err(Error::DegenerateIdeal("zero"))
    } else if ideal.is_unit() {
        Err(Error::DegenerateIdeal("unit"))
    } else {
        Ok(())
    }
}

fn is_irreducible(ideal: &MonomialIdeal) -> bool {
    ideal.gens().iter().all(|g| g.as_pure_power().is_some())
}

fn split(
    ideal: &MonomialIdeal,
    memo: &mut HashMap<MonomialIdeal, Vec<MonomialIdeal>>,
) -> Vec<MonomialIdeal> {
    if let Some(hit) = memo.get(ideal) {
        return hit.clone();
    }
    let result = match ideal.gens().iter().find(|g| g.as_pure_power().is_none()) {
        None => vec![ideal.clone()],
        Some(g) => {
            let n = ideal.vars();
            let i = g.support()[0];
            let power = ExponentVector::pure_power(n, i, g[i]);
            let rest = g.saturating_sub(&power).expect("same length");
            let left = ideal
                .sum(&MonomialIdeal::new(n, [power]).expect("same length"))
                .expect("same length");
            let right = ideal
                .sum(&MonomialIdeal::new(n, [rest]).expect("same length"))
                .expect("same length");
            let mut out = split(&left, memo);
            out.extend(split(&right, memo));
            out
        }
    };
    memo.insert(ideal.clone(), result.clone());
    result
}

/// Removes duplicates and any component containing another component.
fn prune(mut comps: Vec<MonomialIdeal>) -> Vec<MonomialIdeal> {
    comps.sort();
    comps.dedup();
    let keep: Vec<bool> = comps
        .iter()
        .enumerate()
        .map(|(a, ca)| {
            !comps
                .iter()
                .enumerate()
                .any(|(b, cb)| a != b && ca.contains(cb).expect("same ring"))
        })
        .collect();
    comps
        .into_iter()
        .zip(keep)
        .filter_map(|(c, k)| k.then_some(c))
        .collect()
}

/// Irredundant decomposition into ideals generated by pure powers,
/// sorted canonically.
pub fn irreducible_decomposition(ideal: &MonomialIdeal) -> Result<Vec<MonomialIdeal>> {
    check_proper(ideal)?;
    if is_irreducible(ideal) {
        return Ok(vec![ideal.clone()]);
    }
    let mut memo = HashMap::new();
    Ok(prune(split(ideal, &mut memo)))
}

fn radical_of_irreducible(component: &MonomialIdeal) -> MonomialPrime {
    let support: Vec<usize> = component
        .gens()
        .iter()
        .filter_map(|g| g.as_pure_power())
        .map(|(i, _)| i)
        .collect();
    MonomialPrime::generated_by(component.vars(), &support)
}

pub fn associated_primes(ideal: &MonomialIdeal) -> Result<BTreeSet<MonomialPrime>> {
    Ok(irreducible_decomposition(ideal)?
        .iter()
        .map(radical_of_irreducible)
        .collect())
}

/// One primary component per associated prime, obtained by intersecting
/// the irreducible components that share a radical.
pub fn primary_decomposition(ideal: &MonomialIdeal) -> Result<Vec<PrimaryComponent>> {
    let mut groups: BTreeMap<MonomialPrime, MonomialIdeal> = BTreeMap::new();
    for comp in irreducible_decomposition(ideal)? {
        let prime = radical_of_irreducible(&comp);
        let merged = match groups.remove(&prime) {
            Some(acc) => acc.intersect(&comp)?,
            None => comp,
        };
        groups.insert(prime, merged);
    }
    Ok(groups
        .into_iter()
        .map(|(prime, component)| PrimaryComponent { prime, component })
        .collect())
}
