//! Fibers of nonnegative integer matrices and their atomicity.
//!
//! For `A in N^{d x n}` and `b in NA` the fiber over `b` is the finite set
//! `{u : Au = b}` and `P_b` is its convex hull. Two notions of
//! decomposition are provided:
//!
//! * polytope (vertex) sense: `P_b = P_{b1} + P_{b2}` as a Minkowski sum;
//! * lattice sense relative to a monomial ideal `M`: every `u` in the fiber
//!   over `b` with `x^u` outside `M` is `u1 + u2` with `u1`, `u2` in the
//!   corresponding fibers over `b1`, `b2`, also outside `M`.
//!
//! A degree is atomic when no split `b = b1 + b2` with `b1, b2` nonzero and
//! in `NA` decomposes. On top of this sit vertex ideals, strong SAGBI
//! generators with integer coefficients and the monoid-algebra lift.

use std::collections::{BTreeSet, HashMap};
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{check_dim, Error, Result};
use crate::hull::{embed, hull_vertices, in_hull};
use crate::lattice::FiberMatrix;
use crate::monomial::{box_below, minimalize, monomials_up_to, ExponentVector, MonomialIdeal};
use crate::Rational;

/// A fiber together with the hull vertices of its polytope.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Fiber {
    pub degree: ExponentVector,
    pub points: Vec<ExponentVector>,
    pub vertices: Vec<ExponentVector>,
}

impl Fiber {
    pub fn compute(a: &FiberMatrix, b: &ExponentVector) -> Result<Self> {
        let points = a.fiber(b)?;
        let vertices = if points.is_empty() {
            Vec::new()
        } else {
            hull_vertices(&points)?
        };
        Ok(Fiber {
            degree: b.clone(),
            points,
            vertices,
        })
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// `{u : Au = b}` in lexicographic order.
pub fn fiber_points(a: &FiberMatrix, b: &ExponentVector) -> Result<Vec<ExponentVector>> {
    a.fiber(b)
}

/// A shared cache of fibers of one matrix.
///
/// Entries are pure functions of the degree, so concurrent inserts of the
/// same key always store equal values.
pub struct FiberAtlas<'a> {
    matrix: &'a FiberMatrix,
    cache: RwLock<HashMap<ExponentVector, Arc<Fiber>>>,
}

impl<'a> FiberAtlas<'a> {
    pub fn new(matrix: &'a FiberMatrix) -> Self {
        FiberAtlas {
            matrix,
            cache: RwLock::new(HashMap::new()),
        }
    }

    pub fn matrix(&self) -> &FiberMatrix {
        self.matrix
    }

    pub fn fiber(&self, b: &ExponentVector) -> Result<Arc<Fiber>> {
        if let Some(hit) = self.cache.read().expect("cache poisoned").get(b) {
            return Ok(hit.clone());
        }
        let f = Arc::new(Fiber::compute(self.matrix, b)?);
        self.cache
            .write()
            .expect("cache poisoned")
            .insert(b.clone(), f.clone());
        Ok(f)
    }

    fn nonempty(&self, b: &ExponentVector) -> Result<Arc<Fiber>> {
        let f = self.fiber(b)?;
        if f.is_empty() {
            Err(Error::EmptyFiber(b.as_slice().to_vec()))
        } else {
            Ok(f)
        }
    }

    /// Candidate splits `b = b1 + b2` with `b1, b2` nonzero, both in `NA`,
    /// each unordered pair once (`b1 <= b2` lexicographically).
    ///
    /// Every such `b1` is `Av` for some `v <= u` with `u` in the fiber over
    /// `b`, so enumerating the boxes below fiber points is exhaustive.
    pub fn splits(&self, b: &ExponentVector) -> Result<Vec<(ExponentVector, ExponentVector)>> {
        let fiber = self.fiber(b)?;
        let mut seen = BTreeSet::new();
        for u in &fiber.points {
            for v in box_below(u) {
                let b1 = self.matrix.apply(&v)?;
                if b1.is_one() || &b1 == b {
                    continue;
                }
                let b2 = b.checked_sub(&b1).expect("Av <= Au");
                if b1 <= b2 {
                    seen.insert((b1, b2));
                }
            }
        }
        Ok(seen.into_iter().collect())
    }

    /// Whether `P_b` equals the Minkowski sum `P_{b1} + P_{b2}`.
    pub fn minkowski_decomposes(
        &self,
        b: &ExponentVector,
        b1: &ExponentVector,
        b2: &ExponentVector,
    ) -> Result<bool> {
        check_split(b, b1, b2)?;
        let whole = self.nonempty(b)?;
        let left = self.nonempty(b1)?;
        let right = self.nonempty(b2)?;
        let mut sums = BTreeSet::new();
        for v1 in &left.vertices {
            for v2 in &right.vertices {
                sums.insert(v1.checked_add(v2)?);
            }
        }
        // conv(sums) ⊆ P_b: each sum lies in the fiber over b
        for s in &sums {
            if whole.points.binary_search(s).is_err() {
                return Ok(false);
            }
        }
        // P_b ⊆ conv(sums): each vertex of P_b is a convex combination of sums
        let sums: Vec<ExponentVector> = sums.into_iter().collect();
        for v in &whole.vertices {
            if sums.binary_search(v).is_ok() {
                continue;
            }
            if !in_hull(&embed::<Rational>(v)?, &sums)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// No nonzero split of `b` decomposes `P_b` as a Minkowski sum.
    pub fn is_atomic(&self, b: &ExponentVector) -> Result<bool> {
        self.nonempty(b)?;
        for (b1, b2) in self.splits(b)? {
            if self.minkowski_decomposes(b, &b1, &b2)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The `(M, A)` fiber: points over `b` whose monomial lies outside `M`.
    pub fn ma_fiber(&self, m: &MonomialIdeal, b: &ExponentVector) -> Result<Vec<ExponentVector>> {
        check_dim(self.matrix.cols(), m.vars())?;
        Ok(self
            .fiber(b)?
            .points
            .iter()
            .filter(|u| !m.member_unchecked(u))
            .cloned()
            .collect())
    }

    /// Whether every point of the `(M, A)` fiber over `b` is a sum of points
    /// of the `(M, A)` fibers over `b1` and `b2`.
    pub fn ma_decomposes(
        &self,
        m: &MonomialIdeal,
        b: &ExponentVector,
        b1: &ExponentVector,
        b2: &ExponentVector,
    ) -> Result<MaDecomposition> {
        check_split(b, b1, b2)?;
        check_dim(self.matrix.cols(), m.vars())?;
        self.nonempty(b1)?;
        self.nonempty(b2)?;
        let whole = self.ma_fiber(m, b)?;
        let left = self.ma_fiber(m, b1)?;
        let right: BTreeSet<ExponentVector> = self.ma_fiber(m, b2)?.into_iter().collect();
        for u in &whole {
            let splits = left
                .iter()
                .filter_map(|u1| u.checked_sub(u1))
                .any(|u2| right.contains(&u2));
            if !splits {
                return Ok(MaDecomposition {
                    decomposes: false,
                    witness: Some(u.clone()),
                });
            }
        }
        Ok(MaDecomposition {
            decomposes: true,
            witness: None,
        })
    }

    /// No nonzero split of `b` with both parts in `NA` decomposes the
    /// `(M, A)` fiber over `b`.
    pub fn is_ma_atomic(&self, m: &MonomialIdeal, b: &ExponentVector) -> Result<bool> {
        if self.ma_fiber(m, b)?.is_empty() {
            return Err(Error::EmptyFiber(b.as_slice().to_vec()));
        }
        for (b1, b2) in self.splits(b)? {
            if self.ma_decomposes(m, b, &b1, &b2)?.decomposes {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The ideal generated by the vertices of `P_b`.
    pub fn atomicity_ideal(&self, b: &ExponentVector) -> Result<MonomialIdeal> {
        let f = self.nonempty(b)?;
        minimalize(self.matrix.cols(), f.vertices.iter().cloned())
    }

    /// Whether `u` is a vertex of `P_{Au}`.
    pub fn is_vertex(&self, u: &ExponentVector) -> Result<bool> {
        let f = self.fiber(&self.matrix.apply(u)?)?;
        Ok(f.vertices.binary_search(u).is_ok())
    }
}

fn check_split(b: &ExponentVector, b1: &ExponentVector, b2: &ExponentVector) -> Result<()> {
    check_dim(b.len(), b1.len())?;
    check_dim(b.len(), b2.len())?;
    if b1.checked_add(b2)? != *b {
        return Err(Error::DegreeMismatch {
            b: b.as_slice().to_vec(),
            b1: b1.as_slice().to_vec(),
            b2: b2.as_slice().to_vec(),
        });
    }
    Ok(())
}

/// Outcome of a lattice-sense decomposition test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MaDecomposition {
    pub decomposes: bool,
    /// A point of the fiber over `b` that is not a sum, when `decomposes` is false.
    pub witness: Option<ExponentVector>,
}

pub fn hull_vertex_points(points: &[ExponentVector]) -> Result<Vec<ExponentVector>> {
    hull_vertices(points)
}

pub fn minkowski_decomposes(
    a: &FiberMatrix,
    b: &ExponentVector,
    b1: &ExponentVector,
    b2: &ExponentVector,
) -> Result<bool> {
    FiberAtlas::new(a).minkowski_decomposes(b, b1, b2)
}

pub fn is_atomic(a: &FiberMatrix, b: &ExponentVector) -> Result<bool> {
    FiberAtlas::new(a).is_atomic(b)
}

pub fn ma_fiber(m: &MonomialIdeal, a: &FiberMatrix, b: &ExponentVector) -> Result<Vec<ExponentVector>> {
    FiberAtlas::new(a).ma_fiber(m, b)
}

pub fn ma_decomposes(
    m: &MonomialIdeal,
    a: &FiberMatrix,
    b: &ExponentVector,
    b1: &ExponentVector,
    b2: &ExponentVector,
) -> Result<MaDecomposition> {
    FiberAtlas::new(a).ma_decomposes(m, b, b1, b2)
}

pub fn is_ma_atomic(m: &MonomialIdeal, a: &FiberMatrix, b: &ExponentVector) -> Result<bool> {
    FiberAtlas::new(a).is_ma_atomic(m, b)
}

pub fn atomicity_ideal(a: &FiberMatrix, b: &ExponentVector) -> Result<MonomialIdeal> {
    FiberAtlas::new(a).atomicity_ideal(b)
}

/// Which atomicity notion a scan applies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AtomicMode {
    /// Minkowski decomposition of fiber polytopes.
    Vertex,
    /// Lattice-point decomposition of `(M, A)` fibers.
    Lattice(MonomialIdeal),
}

/// The distinct nonzero degrees `Au` with `|u| <= bound`, sorted.
pub fn degrees_up_to(a: &FiberMatrix, bound: u64) -> Result<Vec<ExponentVector>> {
    let set = monomials_up_to(a.cols(), bound)
        .iter()
        .map(|u| a.apply(u))
        .collect::<Result<BTreeSet<_>>>()?;
    Ok(set.into_iter().filter(|b| !b.is_one()).collect())
}

/// All atomic degrees among `{Au : 0 < |u| <= bound}`, sorted
/// lexicographically. In lattice mode, degrees with an empty `(M, A)`
/// fiber are skipped.
pub fn atomic_scan(a: &FiberMatrix, bound: u64, mode: &AtomicMode) -> Result<Vec<ExponentVector>> {
    atomic_scan_with_workers(a, bound, mode, 1)
}

/// [`atomic_scan`] spread over `workers` threads; the output does not
/// depend on the worker count.
pub fn atomic_scan_with_workers(
    a: &FiberMatrix,
    bound: u64,
    mode: &AtomicMode,
    workers: usize,
) -> Result<Vec<ExponentVector>> {
    if bound < 1 {
        return Err(Error::InvalidArgument("scan bound must be at least 1".into()));
    }
    if let AtomicMode::Lattice(m) = mode {
        check_dim(a.cols(), m.vars())?;
    }
    let degrees = degrees_up_to(a, bound)?;
    let atlas = FiberAtlas::new(a);
    let test = |b: &ExponentVector| -> Result<Option<ExponentVector>> {
        let atomic = match mode {
            AtomicMode::Vertex => atlas.is_atomic(b)?,
            AtomicMode::Lattice(m) => {
                if atlas.ma_fiber(m, b)?.is_empty() {
                    return Ok(None);
                }
                atlas.is_ma_atomic(m, b)?
            }
        };
        Ok(atomic.then(|| b.clone()))
    };
    let found: Vec<Option<ExponentVector>> = if workers <= 1 {
        degrees.iter().map(test).collect::<Result<_>>()?
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .map_err(|e| Error::InvalidArgument(format!("thread pool: {e}")))?;
        pool.install(|| degrees.par_iter().map(test).collect::<Result<_>>())?
    };
    Ok(found.into_iter().flatten().collect())
}

/// Exponents `u` with `|u| <= bound` that are vertices of `P_{Au}`.
pub fn vertex_ideal_standard(a: &FiberMatrix, bound: u64) -> Result<Vec<ExponentVector>> {
    let atlas = FiberAtlas::new(a);
    let mut out = Vec::new();
    for u in monomials_up_to(a.cols(), bound) {
        if atlas.is_vertex(&u)? {
            out.push(u);
        }
    }
    Ok(out)
}

/// Minimal generators of the vertex ideal among exponents of total degree
/// at most `bound`: the divisibility-minimal non-vertices.
pub fn vertex_ideal_gens_truncated(a: &FiberMatrix, bound: u64) -> Result<MonomialIdeal> {
    let atlas = FiberAtlas::new(a);
    let mut non_vertices = Vec::new();
    for u in monomials_up_to(a.cols(), bound) {
        if !atlas.is_vertex(&u)? {
            non_vertices.push(u);
        }
    }
    minimalize(a.cols(), non_vertices)
}

/// One element `k x^b` of a strong SAGBI basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SagbiGenerator {
    #[serde(serialize_with = "big_integer")]
    pub coefficient: BigInt,
    pub degree: ExponentVector,
}

/// JSON number when it fits in 64 bits, decimal string otherwise.
fn big_integer<S: serde::Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    match i64::try_from(v) {
        Ok(small) => s.serialize_i64(small),
        Err(_) => s.serialize_str(&v.to_string()),
    }
}

/// `c^u = prod c_i^{u_i}`.
pub fn coefficient_power(c: &[i64], u: &ExponentVector) -> Result<BigInt> {
    check_dim(c.len(), u.len())?;
    let mut acc = BigInt::one();
    for (&ci, &ui) in c.iter().zip(u.as_slice()) {
        let e = u32::try_from(ui).map_err(|_| Error::Overflow)?;
        acc *= BigInt::from(ci).pow(e);
    }
    Ok(acc)
}

/// `k_b x^b` for every vertex-atomic degree found within `bound`, with
/// `k_b = gcd{c^u : Au = b}`; sorted by degree.
pub fn sagbi_generators(a: &FiberMatrix, c: &[i64], bound: u64) -> Result<Vec<SagbiGenerator>> {
    check_dim(a.cols(), c.len())?;
    if let Some(i) = c.iter().position(|&ci| ci == 0) {
        return Err(Error::ZeroCoefficient(i));
    }
    let atomic = atomic_scan(a, bound, &AtomicMode::Vertex)?;
    atomic
        .into_iter()
        .map(|b| {
            let mut k = BigInt::zero();
            for u in a.fiber(&b)? {
                k = k.gcd(&coefficient_power(c, &u)?);
            }
            Ok(SagbiGenerator {
                coefficient: k,
                degree: b,
            })
        })
        .collect()
}

/// A factorization `c^u x^{Au} = r * prod (k_b x^b)^{phi_b}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SagbiFactorization {
    #[serde(serialize_with = "big_integer")]
    pub remainder: BigInt,
    pub exponents: Vec<u64>,
}

/// Searches the decompositions of `Au` into basis degrees for one whose
/// coefficient product divides `c^u`. Returns the first in lexicographic
/// order of exponent vectors.
pub fn sagbi_factor(
    a: &FiberMatrix,
    c: &[i64],
    basis: &[SagbiGenerator],
    u: &ExponentVector,
) -> Result<Option<SagbiFactorization>> {
    if basis.is_empty() {
        return Ok(None);
    }
    let target = a.apply(u)?;
    let value = coefficient_power(c, u)?;
    let cols: Vec<Vec<u64>> = (0..a.rows())
        .map(|r| basis.iter().map(|g| g.degree[r]).collect())
        .collect();
    let degree_matrix = FiberMatrix::new(cols)?;
    for phi in degree_matrix.fiber(&target)? {
        let mut product = BigInt::one();
        for (g, &p) in basis.iter().zip(phi.as_slice()) {
            let e = u32::try_from(p).map_err(|_| Error::Overflow)?;
            product *= g.coefficient.pow(e);
        }
        if (&value % &product).is_zero() {
            return Ok(Some(SagbiFactorization {
                remainder: value / product,
                exponents: phi.into_vec(),
            }));
        }
    }
    Ok(None)
}

/// The monomial ideal `<x^a : t^{Ga} in I>` for the monoid ideal `I`
/// generated by `t^{b_j}` in `k[NG]`, truncated to `|a| <= bound`.
///
/// `t^v` lies in `I` exactly when `v - b_j` is in `NG` for some `j`.
pub fn monoid_lift(
    g: &FiberMatrix,
    ideal_degrees: &[ExponentVector],
    bound: u64,
) -> Result<MonomialIdeal> {
    for b in ideal_degrees {
        check_dim(g.rows(), b.len())?;
    }
    let mut members = Vec::new();
    for a in monomials_up_to(g.cols(), bound) {
        let v = g.apply(&a)?;
        let mut hit = false;
        for b in ideal_degrees {
            if let Some(rest) = v.checked_sub(b) {
                if g.in_monoid(&rest)? {
                    hit = true;
                    break;
                }
            }
        }
        if hit {
            members.push(a);
        }
    }
    minimalize(g.cols(), members)
}

/// The 4x6 matrix whose fiber over `(6,13,15,8)` decomposes as a polytope
/// but not as a set of lattice points.
pub mod demo {
    use super::*;

    pub fn matrix() -> FiberMatrix {
        FiberMatrix::new(vec![
            vec![1, 1, 1, 0, 0, 0],
            vec![0, 3, 2, 1, 0, 0],
            vec![5, 0, 2, 0, 1, 0],
            vec![0, 2, 1, 0, 0, 1],
        ])
        .expect("no zero column")
    }

    pub fn b1() -> ExponentVector {
        ExponentVector::from([1, 3, 5, 2])
    }

    pub fn b2() -> ExponentVector {
        ExponentVector::from([5, 10, 10, 6])
    }

    pub fn expected_b1_points() -> Vec<ExponentVector> {
        let mut v: Vec<ExponentVector> = vec![
            [1, 0, 0, 3, 0, 2].into(),
            [0, 1, 0, 0, 5, 0].into(),
            [0, 0, 1, 1, 3, 1].into(),
        ];
        v.sort();
        v
    }

    pub fn expected_b2_points() -> Vec<ExponentVector> {
        let mut v: Vec<ExponentVector> = vec![
            [0, 0, 5, 0, 0, 1].into(),
            [1, 2, 2, 0, 1, 0].into(),
            [2, 3, 0, 1, 0, 0].into(),
        ];
        v.sort();
        v
    }

    pub fn expected_witness() -> ExponentVector {
        [1, 1, 4, 2, 2, 2].into()
    }

    #[derive(Clone, Debug, Serialize)]
    pub struct DemoCheck {
        pub name: &'static str,
        pub passed: bool,
    }

    #[derive(Clone, Debug, Serialize)]
    pub struct DemoReport {
        pub b1: Fiber,
        pub b2: Fiber,
        pub sum: Fiber,
        pub minkowski_decomposes: bool,
        pub lattice_split: MaDecomposition,
        pub vertex_atomic: bool,
        /// Exhaustive check over every split, not just `b1 + b2`.
        pub lattice_atomic: bool,
        pub checks: Vec<DemoCheck>,
    }

    impl DemoReport {
        pub fn passed(&self) -> bool {
            self.checks.iter().all(|c| c.passed)
        }
    }

    pub fn run() -> Result<DemoReport> {
        let a = matrix();
        let atlas = FiberAtlas::new(&a);
        let (b1, b2) = (b1(), b2());
        let b = b1.checked_add(&b2)?;
        let f1 = (*atlas.fiber(&b1)?).clone();
        let f2 = (*atlas.fiber(&b2)?).clone();
        let fs = (*atlas.fiber(&b)?).clone();
        let minkowski = atlas.minkowski_decomposes(&b, &b1, &b2)?;
        let zero = MonomialIdeal::zero(a.cols());
        let lattice_split = atlas.ma_decomposes(&zero, &b, &b1, &b2)?;
        let vertex_atomic = atlas.is_atomic(&b)?;
        let lattice_atomic = atlas.is_ma_atomic(&zero, &b)?;
        let witness = expected_witness();
        let checks = vec![
            DemoCheck {
                name: "fiber over b1 has the three listed points",
                passed: f1.points == expected_b1_points(),
            },
            DemoCheck {
                name: "fiber over b2 has the three listed points",
                passed: f2.points == expected_b2_points(),
            },
            DemoCheck {
                name: "P(b1+b2) = P(b1) + P(b2)",
                passed: minkowski,
            },
            DemoCheck {
                name: "lattice split over (b1, b2) fails",
                passed: !lattice_split.decomposes,
            },
            DemoCheck {
                name: "witness (1,1,4,2,2,2) lies in the fiber and does not split",
                passed: fs.points.contains(&witness)
                    && !lattice_sum_exists(&f1.points, &f2.points, &witness),
            },
            DemoCheck {
                name: "b1+b2 is not atomic in the polytope sense",
                passed: !vertex_atomic,
            },
        ];
        Ok(DemoReport {
            b1: f1,
            b2: f2,
            sum: fs,
            minkowski_decomposes: minkowski,
            lattice_split,
            vertex_atomic,
            lattice_atomic,
            checks,
        })
    }

    fn lattice_sum_exists(
        left: &[ExponentVector],
        right: &[ExponentVector],
        u: &ExponentVector,
    ) -> bool {
        left.iter()
            .any(|u1| right.iter().any(|u2| u1.checked_add(u2).ok().as_ref() == Some(u)))
    }
}
