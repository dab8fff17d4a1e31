//! A poset without infinite antichains or descending chains whose dual
//! order ideals nonetheless contain an infinite antichain, plus the
//! complement bijection between finite order ideals of `N^n` and artinian
//! monomial ideals.
//!
//! The ground set is `X = {(i, j) : i < j}` with `(i, j) ≺ (i', j')` iff
//! `j < j'` and either `i = i'` or `j < i'`.

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::{minimalize, ExponentVector, MonomialIdeal};

/// Default largest `j` for exhaustive checks over a truncated ground set.
pub const DEFAULT_TRUNCATION: u64 = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct XElem {
    i: u64,
    j: u64,
}

impl XElem {
    pub fn new(i: u64, j: u64) -> Result<Self> {
        if i < j {
            Ok(XElem { i, j })
        } else {
            Err(Error::InvalidElement(i, j))
        }
    }

    pub fn i(&self) -> u64 {
        self.i
    }

    pub fn j(&self) -> u64 {
        self.j
    }
}

/// The strict order `p ≺ q`.
pub fn x_less(p: XElem, q: XElem) -> bool {
    p.j < q.j && (p.i == q.i || p.j < q.i)
}

fn x_leq(p: XElem, q: XElem) -> bool {
    p == q || x_less(p, q)
}

/// All elements with `j <= max_j`, ordered by `(j, i)`.
pub fn ground_set(max_j: u64) -> Vec<XElem> {
    (1..=max_j)
        .flat_map(|j| (0..j).map(move |i| XElem { i, j }))
        .collect()
}

/// A dual order ideal of `X`, stored as its finite antichain of minimal
/// elements.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct XDualOrderIdeal {
    minimal: Vec<XElem>,
}

impl XDualOrderIdeal {
    pub fn new(elems: impl IntoIterator<Item = XElem>) -> Result<Self> {
        let minimal: Vec<XElem> = elems.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        for &p in &minimal {
            for &q in &minimal {
                if x_less(p, q) {
                    return Err(Error::NotAntichain((p.i, p.j), (q.i, q.j)));
                }
            }
        }
        Ok(XDualOrderIdeal { minimal })
    }

    pub fn minimal(&self) -> &[XElem] {
        &self.minimal
    }

    pub fn contains_elem(&self, q: XElem) -> bool {
        self.minimal.iter().any(|&p| x_leq(p, q))
    }
}

/// `D1 ⊆ D2`: every minimal element of `D1` lies above some minimal
/// element of `D2`.
pub fn x_doi_contains(d1: &XDualOrderIdeal, d2: &XDualOrderIdeal) -> bool {
    d1.minimal.iter().all(|&p| d2.contains_elem(p))
}

/// The dual order ideal generated by `S_l = {(k, l) : k < l}`.
pub fn s_family(l: u64) -> Result<XDualOrderIdeal> {
    if l < 1 {
        return Err(Error::InvalidArgument("S_l needs l >= 1".into()));
    }
    XDualOrderIdeal::new((0..l).map(|k| XElem { i: k, j: l }))
}

/// Whether the given dual order ideals are pairwise incomparable.
pub fn verify_doi_antichain(family: &[XDualOrderIdeal]) -> bool {
    for (a, d1) in family.iter().enumerate() {
        for d2 in &family[a + 1..] {
            if x_doi_contains(d1, d2) || x_doi_contains(d2, d1) {
                return false;
            }
        }
    }
    true
}

/// Whether `S_1, ..., S_L` are pairwise incomparable.
pub fn verify_s_antichain(max_l: u64) -> bool {
    let family: Vec<XDualOrderIdeal> = (1..=max_l)
        .map(|l| s_family(l).expect("l >= 1"))
        .collect();
    verify_doi_antichain(&family)
}

/// Length of the longest chain lying strictly below `p`.
pub fn descending_chain_max(p: XElem) -> u64 {
    fn height(q: XElem, memo: &mut HashMap<XElem, u64>) -> u64 {
        if let Some(&h) = memo.get(&q) {
            return h;
        }
        // anything below q has j' < q.j, so the ground set up to q.j - 1 suffices
        let h = ground_set(q.j.saturating_sub(1))
            .into_iter()
            .filter(|&r| x_less(r, q))
            .map(|r| 1 + height(r, memo))
            .max()
            .unwrap_or(0);
        memo.insert(q, h);
        h
    }
    height(p, &mut HashMap::new())
}

/// A violated order axiom found by [`check_partial_order`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum OrderViolation {
    Reflexive(XElem),
    Asymmetric(XElem, XElem),
    Intransitive(XElem, XElem, XElem),
}

/// Exhaustively checks irreflexivity, antisymmetry and transitivity of `≺`
/// on the ground set truncated at `max_j`.
pub fn check_partial_order(max_j: u64) -> Option<OrderViolation> {
    let xs = ground_set(max_j);
    for &p in &xs {
        if x_less(p, p) {
            return Some(OrderViolation::Reflexive(p));
        }
    }
    for &p in &xs {
        for &q in &xs {
            if x_less(p, q) && x_less(q, p) {
                return Some(OrderViolation::Asymmetric(p, q));
            }
            if !x_less(p, q) {
                continue;
            }
            for &r in &xs {
                if x_less(q, r) && !x_less(p, r) {
                    return Some(OrderViolation::Intransitive(p, q, r));
                }
            }
        }
    }
    None
}

/// Every nonempty antichain of the ground set truncated at `max_j`.
pub fn antichains(max_j: u64) -> Vec<Vec<XElem>> {
    fn extend(xs: &[XElem], start: usize, cur: &mut Vec<XElem>, out: &mut Vec<Vec<XElem>>) {
        for k in start..xs.len() {
            let q = xs[k];
            if cur.iter().all(|&p| !x_less(p, q) && !x_less(q, p)) {
                cur.push(q);
                out.push(cur.clone());
                extend(xs, k + 1, cur, out);
                cur.pop();
            }
        }
    }
    let xs = ground_set(max_j);
    let mut out = Vec::new();
    extend(&xs, 0, &mut Vec::new(), &mut out);
    out
}

/// A finite downward-closed subset of `N^n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiniteOrderIdeal {
    vars: usize,
    points: BTreeSet<ExponentVector>,
}

impl FiniteOrderIdeal {
    pub fn new(vars: usize, points: impl IntoIterator<Item = ExponentVector>) -> Result<Self> {
        let points: BTreeSet<ExponentVector> = points.into_iter().collect();
        for p in &points {
            crate::error::check_dim(vars, p.len())?;
            for i in 0..vars {
                if p[i] > 0 {
                    let mut down = p.clone().into_vec();
                    down[i] -= 1;
                    let down = ExponentVector::new(down);
                    if !points.contains(&down) {
                        return Err(Error::NotDownwardClosed(down.into_vec()));
                    }
                }
            }
        }
        Ok(FiniteOrderIdeal { vars, points })
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn points(&self) -> &BTreeSet<ExponentVector> {
        &self.points
    }

    pub fn is_subset(&self, other: &FiniteOrderIdeal) -> bool {
        self.points.is_subset(&other.points)
    }
}

/// The monomial ideal spanned by the complement of `O`.
pub fn young_complement(order: &FiniteOrderIdeal) -> MonomialIdeal {
    let n = order.vars;
    if order.points.is_empty() {
        return MonomialIdeal::unit(n);
    }
    // minimal elements of the complement are one step above O
    let mut candidates = Vec::new();
    for p in &order.points {
        for i in 0..n {
            let mut up = p.clone().into_vec();
            up[i] += 1;
            let up = ExponentVector::new(up);
            if !order.points.contains(&up) {
                candidates.push(up);
            }
        }
    }
    minimalize(n, candidates).expect("lengths agree")
}

/// The order ideal of standard monomials of an artinian ideal.
pub fn young_cocomplement(ideal: &MonomialIdeal) -> Result<FiniteOrderIdeal> {
    let points = ideal.standard_monomials()?;
    FiniteOrderIdeal::new(ideal.vars(), points)
}

/// JSON wire form of a finite point set: `{"vars": n, "points": [[...], ...]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PointListJson {
    pub vars: usize,
    pub points: Vec<Vec<u64>>,
}

impl From<&FiniteOrderIdeal> for PointListJson {
    fn from(o: &FiniteOrderIdeal) -> Self {
        PointListJson {
            vars: o.vars,
            points: o.points.iter().map(|p| p.as_slice().to_vec()).collect(),
        }
    }
}

impl TryFrom<PointListJson> for FiniteOrderIdeal {
    type Error = Error;
    fn try_from(raw: PointListJson) -> Result<Self> {
        FiniteOrderIdeal::new(raw.vars, raw.points.into_iter().map(ExponentVector::new))
    }
}
