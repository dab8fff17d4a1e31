//! Brute-force oracles and seeded generators shared by the integration tests.
//! Nothing here calls into the library's own algorithms beyond constructors.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use staircase::{ExponentVector, FiberMatrix, MonomialIdeal};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn divides(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// `m` is a multiple of one of `gens` (raw, possibly redundant).
pub fn member(gens: &[Vec<u64>], m: &[u64]) -> bool {
    gens.iter().any(|g| divides(g, m))
}

/// All exponent vectors in `n` variables of total degree at most `bound`.
pub fn all_monomials(n: usize, bound: u64) -> Vec<Vec<u64>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        let mut next = Vec::new();
        for v in &out {
            let used: u64 = v.iter().sum();
            for e in 0..=bound - used {
                let mut w = v.clone();
                w.push(e);
                next.push(w);
            }
        }
        out = next;
    }
    out
}

/// Every vector `u` with `0 <= u <= corner`.
pub fn box_points(corner: &[u64]) -> Vec<Vec<u64>> {
    let mut out = vec![vec![]];
    for &c in corner {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..=c).map(move |e| {
                    let mut w = v.clone();
                    w.push(e);
                    w
                })
            })
            .collect();
    }
    out
}

pub fn raw_gens(ideal: &MonomialIdeal) -> Vec<Vec<u64>> {
    ideal.gens().iter().map(|g| g.as_slice().to_vec()).collect()
}

pub fn ev(v: &[u64]) -> ExponentVector {
    ExponentVector::new(v.to_vec())
}

/// Random generator list: up to `max_gens` vectors with entries at most
/// `max_exp`.
pub fn random_gens(r: &mut ChaCha8Rng, vars: usize, max_gens: usize, max_exp: u64) -> Vec<Vec<u64>> {
    let k = r.gen_range(1..=max_gens);
    (0..k)
        .map(|_| (0..vars).map(|_| r.gen_range(0..=max_exp)).collect())
        .collect()
}

/// Random generators whose total degree is between 1 and `max_deg`.
pub fn random_gens_by_degree(
    r: &mut ChaCha8Rng,
    vars: usize,
    max_gens: usize,
    max_deg: u64,
) -> Vec<Vec<u64>> {
    let k = r.gen_range(1..=max_gens);
    (0..k)
        .map(|_| {
            let d = r.gen_range(1..=max_deg);
            let mut g = vec![0; vars];
            for _ in 0..d {
                g[r.gen_range(0..vars)] += 1;
            }
            g
        })
        .collect()
}

pub fn random_matrix(r: &mut ChaCha8Rng, max_rows: usize, max_cols: usize, max_entry: u64) -> FiberMatrix {
    let d = r.gen_range(1..=max_rows);
    let n = r.gen_range(1..=max_cols);
    let mut entries: Vec<Vec<u64>> = (0..d)
        .map(|_| (0..n).map(|_| r.gen_range(0..=max_entry)).collect())
        .collect();
    for c in 0..n {
        if (0..d).all(|row| entries[row][c] == 0) {
            let row = r.gen_range(0..d);
            entries[row][c] = r.gen_range(1..=max_entry.max(1));
        }
    }
    FiberMatrix::new(entries).unwrap()
}

pub fn apply(a: &FiberMatrix, u: &[u64]) -> Vec<u64> {
    a.entries()
        .iter()
        .map(|row| row.iter().zip(u).map(|(x, y)| x * y).sum())
        .collect()
}

/// `{u : Au = b}` by scanning the box `u_i <= min_r b_r / A[r][i]`.
pub fn fiber_by_box(a: &FiberMatrix, b: &[u64]) -> Vec<Vec<u64>> {
    let corner: Vec<u64> = (0..a.cols())
        .map(|c| {
            (0..a.rows())
                .filter(|&r| a.get(r, c) > 0)
                .map(|r| b[r] / a.get(r, c))
                .min()
                .expect("nonzero column")
        })
        .collect();
    let mut pts: Vec<Vec<u64>> = box_points(&corner)
        .into_iter()
        .filter(|u| apply(a, u) == b)
        .collect();
    pts.sort();
    pts
}

fn rat(x: u64) -> BigRational {
    BigRational::from_integer(x.into())
}

/// Solves `M x = rhs` exactly; `None` if inconsistent or not uniquely
/// determined.
fn solve_unique(mut m: Vec<Vec<BigRational>>, mut rhs: Vec<BigRational>) -> Option<Vec<BigRational>> {
    let rows = m.len();
    let cols = m[0].len();
    let mut pivot_row = 0;
    let mut pivots = Vec::new();
    for c in 0..cols {
        let p = (pivot_row..rows).find(|&r| !m[r][c].is_zero())?;
        m.swap(pivot_row, p);
        rhs.swap(pivot_row, p);
        let inv = BigRational::one() / m[pivot_row][c].clone();
        for k in 0..cols {
            m[pivot_row][k] = &m[pivot_row][k] * &inv;
        }
        rhs[pivot_row] = &rhs[pivot_row] * &inv;
        for r in 0..rows {
            if r != pivot_row && !m[r][c].is_zero() {
                let f = m[r][c].clone();
                for k in 0..cols {
                    let v = &m[pivot_row][k] * &f;
                    m[r][k] = &m[r][k] - v;
                }
                let v = &rhs[pivot_row] * &f;
                rhs[r] = &rhs[r] - v;
            }
        }
        pivots.push(c);
        pivot_row += 1;
    }
    if (pivot_row..rows).any(|r| !rhs[r].is_zero()) {
        return None;
    }
    Some(rhs[..cols].to_vec())
}

fn affinely_independent(pts: &[Vec<u64>], chosen: &[usize]) -> bool {
    let base = &pts[chosen[0]];
    let mut rows: Vec<Vec<BigRational>> = chosen[1..]
        .iter()
        .map(|&k| {
            pts[k]
                .iter()
                .zip(base)
                .map(|(&x, &y)| BigRational::from_integer(BigInt::from(x) - BigInt::from(y)))
                .collect()
        })
        .collect();
    // row-reduce the difference vectors and look for a zero row
    let cols = base.len();
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        for r in rank + 1..rows.len() {
            if !rows[r][c].is_zero() {
                let f = &rows[r][c] / &rows[rank][c];
                for k in 0..cols {
                    let v = &rows[rank][k] * &f;
                    rows[r][k] = &rows[r][k] - v;
                }
            }
        }
        rank += 1;
    }
    rank == rows.len()
}

/// Convex-hull membership by Caratheodory: `q` is in the hull of `pts` iff
/// it is a nonnegative barycentric combination of some affinely
/// independent subset of at most `dim + 1` points.
pub fn in_hull_bruteforce(q: &[u64], pts: &[Vec<u64>]) -> bool {
    let n = q.len();
    let limit = (n + 1).min(pts.len());
    let mut chosen = Vec::new();
    fn search(
        q: &[u64],
        pts: &[Vec<u64>],
        start: usize,
        limit: usize,
        chosen: &mut Vec<usize>,
    ) -> bool {
        if !chosen.is_empty() {
            let n = q.len();
            let mut m: Vec<Vec<BigRational>> = (0..n)
                .map(|r| chosen.iter().map(|&k| rat(pts[k][r])).collect())
                .collect();
            m.push(vec![BigRational::one(); chosen.len()]);
            let mut rhs: Vec<BigRational> = q.iter().map(|&x| rat(x)).collect();
            rhs.push(BigRational::one());
            if let Some(w) = solve_unique(m, rhs) {
                if w.iter().all(|x| *x >= BigRational::zero()) {
                    return true;
                }
            }
        }
        if chosen.len() == limit {
            return false;
        }
        for k in start..pts.len() {
            chosen.push(k);
            // supersets of an affinely dependent set are dependent too
            if affinely_independent(pts, chosen) && search(q, pts, k + 1, limit, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    search(q, pts, 0, limit, &mut chosen)
}

/// Points of a finite set that are not in the hull of the others.
pub fn vertices_by_definition(pts: &[Vec<u64>]) -> Vec<Vec<u64>> {
    let mut out: Vec<Vec<u64>> = pts
        .iter()
        .enumerate()
        .filter(|(i, p)| {
            let rest: Vec<Vec<u64>> = pts
                .iter()
                .enumerate()
                .filter(|(j, _)| j != i)
                .map(|(_, v)| v.clone())
                .collect();
            !in_hull_bruteforce(p, &rest)
        })
        .map(|(_, p)| p.clone())
        .collect();
    out.sort();
    out
}
