//! Containment structure of finite families of monomial ideals:
//! comparable pairs, longest strict chains, and the two refinements
//! (standard-monomial traces, associated primes) that drive the finiteness
//! argument for antichains.

use std::collections::{BTreeMap, BTreeSet};

use crate::decomposition::{associated_primes, MonomialPrime};
use crate::error::{check_dim, Error, Result};
use crate::monomial::MonomialIdeal;

/// A deduplicated family of ideals in a common ring, in insertion order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealFamily {
    vars: usize,
    members: Vec<MonomialIdeal>,
}

impl IdealFamily {
    /// Keeps the first occurrence of each distinct ideal.
    pub fn new(vars: usize, ideals: impl IntoIterator<Item = MonomialIdeal>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        let mut members = Vec::new();
        for ideal in ideals {
            check_dim(vars, ideal.vars())?;
            if seen.insert(ideal.clone()) {
                members.push(ideal);
            }
        }
        Ok(IdealFamily { vars, members })
    }

    /// Infers the ring from the first member; an empty list gives an empty
    /// family over zero variables.
    pub fn from_ideals(ideals: Vec<MonomialIdeal>) -> Result<Self> {
        let vars = ideals.first().map_or(0, MonomialIdeal::vars);
        IdealFamily::new(vars, ideals)
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn members(&self) -> &[MonomialIdeal] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// `subset[i][j]` holds when member `i` ⊆ member `j`.
    fn containment(&self) -> Vec<Vec<bool>> {
        let n = self.members.len();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        i != j
                            && self.members[j]
                                .contains(&self.members[i])
                                .expect("family shares a ring")
                    })
                    .collect()
            })
            .collect()
    }
}

/// First pair `(i, j)`, `i != j`, in row-major index order with member `i`
/// contained in member `j`.
pub fn find_comparable_pair(family: &IdealFamily) -> Option<(usize, usize)> {
    let m = family.members();
    for i in 0..m.len() {
        for j in 0..m.len() {
            if i != j && m[j].contains(&m[i]).expect("family shares a ring") {
                return Some((i, j));
            }
        }
    }
    None
}

pub fn is_antichain(family: &IdealFamily) -> bool {
    find_comparable_pair(family).is_none()
}

/// A longest strictly descending chain `I_{k1} ⊋ I_{k2} ⊋ ...`, as member
/// indices. Ties go to the lexicographically smallest index sequence.
pub fn extract_descending_chain(family: &IdealFamily) -> Vec<usize> {
    let n = family.len();
    if n == 0 {
        return Vec::new();
    }
    let subset = family.containment();
    // longest[i]: length of the longest chain starting at i and descending
    let mut longest: Vec<Option<usize>> = vec![None; n];
    fn depth(i: usize, subset: &[Vec<bool>], longest: &mut Vec<Option<usize>>) -> usize {
        if let Some(d) = longest[i] {
            return d;
        }
        let mut best = 1;
        for j in 0..subset.len() {
            // j ⊊ i
            if subset[j][i] {
                best = best.max(1 + depth(j, subset, longest));
            }
        }
        longest[i] = Some(best);
        best
    }
    for i in 0..n {
        depth(i, &subset, &mut longest);
    }
    let lengths: Vec<usize> = longest.into_iter().map(|d| d.expect("filled")).collect();
    let top = *lengths.iter().max().expect("nonempty");
    let mut cur = (0..n).find(|&i| lengths[i] == top).expect("max attained");
    let mut chain = vec![cur];
    while lengths[cur] > 1 {
        cur = (0..n)
            .find(|&j| subset[j][cur] && lengths[j] == lengths[cur] - 1)
            .expect("chain continues");
        chain.push(cur);
    }
    chain
}

/// Groups member indices into blocks, ordered by smallest member.
fn blocks_by_key<K: Ord>(keys: Vec<K>) -> Vec<Vec<usize>> {
    let mut groups: BTreeMap<K, Vec<usize>> = BTreeMap::new();
    for (i, k) in keys.into_iter().enumerate() {
        groups.entry(k).or_default().push(i);
    }
    let mut blocks: Vec<Vec<usize>> = groups.into_values().collect();
    blocks.sort_by_key(|b| b[0]);
    blocks
}

/// Partitions the family by which standard monomials of the artinian
/// `pivot` each member contains.
pub fn refine_by_standard_trace(
    family: &IdealFamily,
    pivot: &MonomialIdeal,
) -> Result<Vec<Vec<usize>>> {
    let standard = pivot.standard_monomials()?;
    if family.is_empty() {
        return Ok(Vec::new());
    }
    check_dim(family.vars(), pivot.vars())?;
    let traces: Vec<Vec<bool>> = family
        .members()
        .iter()
        .map(|m| standard.iter().map(|s| m.member_unchecked(s)).collect())
        .collect();
    Ok(blocks_by_key(traces))
}

/// The standard monomials of `pivot` that `ideal` contains.
pub fn standard_trace(ideal: &MonomialIdeal, pivot: &MonomialIdeal) -> Result<Vec<crate::ExponentVector>> {
    check_dim(ideal.vars(), pivot.vars())?;
    Ok(pivot
        .standard_monomials()?
        .into_iter()
        .filter(|s| ideal.member_unchecked(s))
        .collect())
}

/// Partitions the family by equal sets of associated primes.
pub fn group_by_associated_primes(family: &IdealFamily) -> Result<Vec<Vec<usize>>> {
    let keys = family
        .members()
        .iter()
        .map(associated_primes)
        .collect::<Result<Vec<BTreeSet<MonomialPrime>>>>()?;
    Ok(blocks_by_key(keys))
}

/// `{<x^a, y^b> : a + b = k, a, b >= 1}` in two variables.
pub fn staircase_antichain(k: u64) -> Result<IdealFamily> {
    if k < 2 {
        return Err(Error::InvalidArgument("need k >= 2".into()));
    }
    let ideals = (1..k)
        .map(|a| MonomialIdeal::new(2, [[a, 0], [0, k - a]]))
        .collect::<Result<Vec<_>>>()?;
    IdealFamily::new(2, ideals)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(vars: usize, gens: &[&[u64]]) -> MonomialIdeal {
        MonomialIdeal::new(vars, gens.iter().map(|g| g.to_vec())).unwrap()
    }

    fn family(ideals: Vec<MonomialIdeal>) -> IdealFamily {
        IdealFamily::from_ideals(ideals).unwrap()
    }

    #[test]
    fn comparable_pair_examples() {
        let f = family(vec![ideal(2, &[&[1, 0]]), ideal(2, &[&[1, 0], &[0, 1]])]);
        assert_eq!(find_comparable_pair(&f), Some((0, 1)));
        let f = family(vec![ideal(2, &[&[1, 0]]), ideal(2, &[&[0, 1]])]);
        assert_eq!(find_comparable_pair(&f), None);
        assert!(is_antichain(&staircase_antichain(6).unwrap()));
    }

    #[test]
    fn antichain_examples() {
        let f = family(vec![ideal(2, &[&[1, 0]]), ideal(2, &[&[2, 0]])]);
        assert!(!is_antichain(&f));
        assert!(is_antichain(&family(vec![ideal(2, &[&[1, 1]])])));
    }

    #[test]
    fn duplicates_are_dropped() {
        let f = family(vec![ideal(2, &[&[1, 0]]), ideal(2, &[&[1, 0], &[2, 0]])]);
        assert_eq!(f.len(), 1);
        assert!(IdealFamily::from_ideals(vec![ideal(2, &[]), ideal(3, &[])]).is_err());
    }

    #[test]
    fn chain_examples() {
        let f = family(vec![
            ideal(2, &[&[1, 0], &[0, 1]]),
            ideal(2, &[&[2, 0], &[0, 1]]),
            ideal(2, &[&[2, 0], &[0, 2]]),
            ideal(2, &[&[1, 0], &[0, 2]]),
        ]);
        let chain = extract_descending_chain(&f);
        assert_eq!(chain, vec![0, 1, 2]);

        let anti = staircase_antichain(5).unwrap();
        assert_eq!(extract_descending_chain(&anti).len(), 1);

        let i = ideal(2, &[&[1, 0]]);
        let j = ideal(2, &[&[0, 1]]);
        let f = family(vec![i.clone(), i.intersect(&j).unwrap(), j]);
        assert_eq!(extract_descending_chain(&f), vec![0, 1]);
        assert!(extract_descending_chain(&family(vec![])).is_empty());
    }

    #[test]
    fn trace_examples() {
        let pivot = ideal(2, &[&[2, 0], &[0, 1]]);
        let f = family(vec![
            ideal(2, &[&[1, 0], &[0, 1]]),
            ideal(2, &[&[1, 0], &[0, 2]]),
            ideal(2, &[&[2, 0], &[0, 2]]),
        ]);
        assert_eq!(refine_by_standard_trace(&f, &pivot).unwrap(), vec![vec![0, 1], vec![2]]);
        // every member meets {1, x} in exactly {x}
        let f = family(vec![
            ideal(2, &[&[1, 0]]),
            ideal(2, &[&[1, 0], &[0, 2]]),
            ideal(2, &[&[1, 0], &[0, 1]]),
        ]);
        assert_eq!(refine_by_standard_trace(&f, &pivot).unwrap(), vec![vec![0, 1, 2]]);
        let f = family(vec![ideal(2, &[&[0, 1]]), ideal(2, &[&[1, 0]])]);
        assert_eq!(refine_by_standard_trace(&f, &pivot).unwrap(), vec![vec![0], vec![1]]);
        assert!(refine_by_standard_trace(&family(vec![]), &pivot).unwrap().is_empty());
        assert_eq!(
            refine_by_standard_trace(&f, &ideal(2, &[&[1, 0]])),
            Err(Error::NotArtinian)
        );
    }

    #[test]
    fn prime_grouping_examples() {
        let f = family(vec![
            ideal(2, &[&[2, 0], &[1, 1]]),
            ideal(2, &[&[3, 0], &[1, 1]]),
            ideal(2, &[&[1, 0], &[0, 1]]),
        ]);
        assert_eq!(group_by_associated_primes(&f).unwrap(), vec![vec![0, 1], vec![2]]);
        let f = family(vec![ideal(2, &[&[1, 1]])]);
        assert_eq!(group_by_associated_primes(&f).unwrap(), vec![vec![0]]);
        let f = family(vec![
            ideal(2, &[&[2, 0], &[0, 2]]),
            ideal(2, &[&[1, 0], &[0, 5]]),
            ideal(2, &[&[3, 0], &[1, 1], &[0, 3]]),
        ]);
        assert_eq!(group_by_associated_primes(&f).unwrap(), vec![vec![0, 1, 2]]);
        let f = family(vec![MonomialIdeal::zero(2)]);
        assert!(group_by_associated_primes(&f).is_err());
    }
}
