//! Exact convex-hull membership for lattice point sets.
//!
//! `q in conv(P)` is decided as feasibility of
//! `sum_j l_j p_j = q, sum_j l_j = 1, l >= 0`, solved by a phase-one simplex
//! with Bland's rule over an exact field. The field is a type parameter;
//! the crate-level [`Rational`](crate::Rational) alias is the default choice.

use std::fmt::Debug;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Num, Signed};

use crate::error::{check_dim, Error, Result};
use crate::monomial::ExponentVector;

/// An exact ordered field usable by the hull routines.
pub trait ExactScalar: Clone + PartialOrd + Num + Signed + Debug {
    /// Embeds a nonnegative integer, `None` if it does not fit.
    fn from_count(v: u64) -> Option<Self>;
}

impl<T> ExactScalar for Ratio<T>
where
    T: Clone + Integer + Signed + FromPrimitive + Debug,
{
    fn from_count(v: u64) -> Option<Self> {
        T::from_u64(v).map(Ratio::from_integer)
    }
}

/// Converts an exponent vector into field coordinates.
pub fn embed<T: ExactScalar>(u: &ExponentVector) -> Result<Vec<T>> {
    u.as_slice()
        .iter()
        .map(|&e| T::from_count(e).ok_or(Error::Overflow))
        .collect()
}

/// Weights `l >= 0` with `sum l = 1` and `sum l_j p_j = q`, if any exist.
pub fn convex_weights<T: ExactScalar>(
    q: &[T],
    points: &[ExponentVector],
) -> Result<Option<Vec<T>>> {
    for p in points {
        check_dim(q.len(), p.len())?;
    }
    if points.is_empty() {
        return Ok(None);
    }
    let cols = points
        .iter()
        .map(embed::<T>)
        .collect::<Result<Vec<_>>>()?;
    // rows: one per coordinate, plus the affine row sum l = 1
    let mut a: Vec<Vec<T>> = Vec::with_capacity(q.len() + 1);
    let mut rhs: Vec<T> = Vec::with_capacity(q.len() + 1);
    for (r, qr) in q.iter().enumerate() {
        a.push(cols.iter().map(|c| c[r].clone()).collect());
        rhs.push(qr.clone());
    }
    a.push(vec![T::one(); cols.len()]);
    rhs.push(T::one());
    Ok(phase_one(a, rhs))
}

/// Finds `x >= 0` with `Ax = rhs`, or `None` when infeasible.
fn phase_one<T: ExactScalar>(mut a: Vec<Vec<T>>, mut rhs: Vec<T>) -> Option<Vec<T>> {
    let m = a.len();
    let k = a[0].len();
    for r in 0..m {
        if rhs[r].is_negative() {
            rhs[r] = -rhs[r].clone();
            for v in a[r].iter_mut() {
                *v = -v.clone();
            }
        }
    }
    // tableau columns: k structural, then m artificial
    let width = k + m;
    let mut tab: Vec<Vec<T>> = a
        .into_iter()
        .enumerate()
        .map(|(r, mut row)| {
            row.extend((0..m).map(|j| if j == r { T::one() } else { T::zero() }));
            row
        })
        .collect();
    let mut basis: Vec<usize> = (k..width).collect();
    // reduced costs of the phase-one objective (sum of artificials)
    let mut cost: Vec<T> = (0..width)
        .map(|j| {
            if j >= k {
                T::zero()
            } else {
                tab.iter().fold(T::zero(), |acc, row| acc - row[j].clone())
            }
        })
        .collect();
    let mut value: T = rhs.iter().fold(T::zero(), |acc, v| acc + v.clone());

    while let Some(enter) = (0..width).find(|&j| cost[j].is_negative()) {
        let mut leave: Option<(usize, T)> = None;
        for r in 0..m {
            if tab[r][enter].is_positive() {
                let ratio = rhs[r].clone() / tab[r][enter].clone();
                let better = match &leave {
                    None => true,
                    Some((lr, best)) => {
                        ratio < *best || (ratio == *best && basis[r] < basis[*lr])
                    }
                };
                if better {
                    leave = Some((r, ratio));
                }
            }
        }
        // phase one is bounded below by zero, so a leaving row always exists
        let (pr, _) = leave.expect("phase-one objective is bounded");
        let pivot = tab[pr][enter].clone();
        for v in tab[pr].iter_mut() {
            *v = v.clone() / pivot.clone();
        }
        rhs[pr] = rhs[pr].clone() / pivot;
        for r in 0..m {
            if r != pr && !tab[r][enter].is_zero() {
                let f = tab[r][enter].clone();
                for j in 0..width {
                    let delta = f.clone() * tab[pr][j].clone();
                    tab[r][j] = tab[r][j].clone() - delta;
                }
                rhs[r] = rhs[r].clone() - f * rhs[pr].clone();
            }
        }
        let f = cost[enter].clone();
        for j in 0..width {
            cost[j] = cost[j].clone() - f.clone() * tab[pr][j].clone();
        }
        value = value + f * rhs[pr].clone();
        basis[pr] = enter;
    }

    if !value.is_zero() {
        return None;
    }
    let mut x = vec![T::zero(); k];
    for (r, &j) in basis.iter().enumerate() {
        if j < k {
            x[j] = rhs[r].clone();
        }
    }
    Some(x)
}

/// Whether `q` is a convex combination of `points`.
pub fn in_hull<T: ExactScalar>(q: &[T], points: &[ExponentVector]) -> Result<bool> {
    Ok(convex_weights(q, points)?.is_some())
}

/// Whether `u` is the midpoint of two other points of the sorted set `pts`.
fn is_midpoint(u: &ExponentVector, pts: &[ExponentVector]) -> bool {
    pts.iter().any(|p| {
        p != u
            && u.as_slice()
                .iter()
                .zip(p.as_slice())
                .map(|(&x, &y)| x.checked_mul(2)?.checked_sub(y))
                .collect::<Option<Vec<u64>>>()
                .is_some_and(|q| pts.binary_search(&ExponentVector::new(q)).is_ok())
    })
}

/// The points of `points` that are vertices of their convex hull, over the
/// exact field `T`. Duplicate inputs are merged first.
pub fn hull_vertices_in<T: ExactScalar>(points: &[ExponentVector]) -> Result<Vec<ExponentVector>> {
    let mut pts = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    let n = pts[0].len();
    for p in &pts {
        check_dim(n, p.len())?;
    }
    let last = pts.len() - 1;
    // non-vertices never help express another point, so drop them as found
    let mut interior = vec![false; pts.len()];
    for (idx, u) in pts.iter().enumerate() {
        // lexicographic extremes are always vertices
        if idx == 0 || idx == last {
            continue;
        }
        if is_midpoint(u, &pts) {
            interior[idx] = true;
            continue;
        }
        let others: Vec<ExponentVector> = pts
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != idx && !interior[j])
            .map(|(_, p)| p.clone())
            .collect();
        interior[idx] = in_hull(&embed::<T>(u)?, &others)?;
    }
    Ok(pts
        .into_iter()
        .zip(interior)
        .filter(|(_, skip)| !skip)
        .map(|(p, _)| p)
        .collect())
}

/// [`hull_vertices_in`] over arbitrary-precision rationals.
pub fn hull_vertices(points: &[ExponentVector]) -> Result<Vec<ExponentVector>> {
    hull_vertices_in::<crate::Rational>(points)
}
