//! Monomials as exponent vectors and monomial ideals as antichains of
//! minimal generators.
//!
//! A monomial ideal is completely determined by its upward-closed set of
//! exponent vectors in `N^n`, so everything here is combinatorics on
//! componentwise order. No coefficient field is ever represented.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{check_dim, Error, Result};

/// The exponent vector `u` of a monomial `x^u`.
///
/// Ordering is lexicographic on the exponent tuple.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExponentVector(Vec<u64>);

impl ExponentVector {
    pub fn new(exponents: Vec<u64>) -> Self {
        ExponentVector(exponents)
    }

    /// The constant monomial `1` in `n` variables.
    pub fn zero(n: usize) -> Self {
        ExponentVector(vec![0; n])
    }

    /// `x_i^e` in `n` variables.
    pub fn pure_power(n: usize, i: usize, e: u64) -> Self {
        let mut v = vec![0; n];
        v[i] = e;
        ExponentVector(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<u64> {
        self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Total degree `|u|`, or an overflow error.
    pub fn total_degree(&self) -> Result<u64> {
        self.0
            .iter()
            .try_fold(0u64, |acc, &e| acc.checked_add(e))
            .ok_or(Error::Overflow)
    }

    /// If this is a pure power `x_i^e` with `e > 0`, returns `(i, e)`.
    pub fn as_pure_power(&self) -> Option<(usize, u64)> {
        let mut found = None;
        for (i, &e) in self.0.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some((i, e));
            }
        }
        found
    }

    /// Indices of variables with a positive exponent.
    pub fn support(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
            .collect()
    }

    /// Componentwise sum (monomial product).
    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        check_dim(self.len(), other.len())?;
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()
            .map(ExponentVector)
    }

    /// Componentwise difference, `None` when some entry would go negative.
    pub fn checked_sub(&self, other: &Self) -> Option<Self> {
        if self.len() != other.len() {
            return None;
        }
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(ExponentVector)
    }

    /// Componentwise maximum (lcm of monomials).
    pub fn lcm(&self, other: &Self) -> Result<Self> {
        check_dim(self.len(), other.len())?;
        Ok(ExponentVector(
            self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect(),
        ))
    }

    /// Componentwise `max(self - other, 0)`: the generator of `(x^self : x^other)`.
    pub fn saturating_sub(&self, other: &Self) -> Result<Self> {
        check_dim(self.len(), other.len())?;
        Ok(ExponentVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.saturating_sub(*b))
                .collect(),
        ))
    }

    /// Applies a variable relabeling: entry `i` moves to position `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        let mut out = vec![0; self.len()];
        for (i, &e) in self.0.iter().enumerate() {
            out[perm[i]] = e;
        }
        ExponentVector(out)
    }
}

impl From<Vec<u64>> for ExponentVector {
    fn from(v: Vec<u64>) -> Self {
        ExponentVector(v)
    }
}

impl<const N: usize> From<[u64; N]> for ExponentVector {
    fn from(v: [u64; N]) -> Self {
        ExponentVector(v.to_vec())
    }
}

impl std::ops::Index<usize> for ExponentVector {
    type Output = u64;
    fn index(&self, i: usize) -> &u64 {
        &self.0[i]
    }
}

impl fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// `a` divides `b`, i.e. `a <= b` componentwise.
pub fn divides(a: &ExponentVector, b: &ExponentVector) -> Result<bool> {
    check_dim(a.len(), b.len())?;
    Ok(divides_unchecked(a, b))
}

pub(crate) fn divides_unchecked(a: &ExponentVector, b: &ExponentVector) -> bool {
    a.0.iter().zip(&b.0).all(|(x, y)| x <= y)
}

/// All exponent vectors in `n` variables with total degree at most `bound`,
/// in lexicographic order.
pub fn monomials_up_to(n: usize, bound: u64) -> Vec<ExponentVector> {
    fn rec(n: usize, left: u64, cur: &mut Vec<u64>, out: &mut Vec<ExponentVector>) {
        if cur.len() == n {
            out.push(ExponentVector(cur.clone()));
            return;
        }
        for e in 0..=left {
            cur.push(e);
            rec(n, left - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, bound, &mut Vec::with_capacity(n), &mut out);
    out
}

/// All exponent vectors `u` with `u <= corner` componentwise, in lexicographic order.
pub fn box_below(corner: &ExponentVector) -> Vec<ExponentVector> {
    fn rec(corner: &[u64], cur: &mut Vec<u64>, out: &mut Vec<ExponentVector>) {
        let i = cur.len();
        if i == corner.len() {
            out.push(ExponentVector(cur.clone()));
            return;
        }
        for e in 0..=corner[i] {
            cur.push(e);
            rec(corner, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(corner.as_slice(), &mut Vec::with_capacity(corner.len()), &mut out);
    out
}

/// A monomial ideal in `n` variables, stored as its minimal generators in
/// lexicographic order.
///
/// No generators means the zero ideal; the single generator `0` is the unit
/// ideal. Because the generator list is canonical, `==` is ideal equality.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonomialIdeal {
    vars: usize,
    gens: Vec<ExponentVector>,
}

impl MonomialIdeal {
    pub fn zero(vars: usize) -> Self {
        MonomialIdeal { vars, gens: Vec::new() }
    }

    pub fn unit(vars: usize) -> Self {
        MonomialIdeal {
            vars,
            gens: vec![ExponentVector::zero(vars)],
        }
    }

    /// Builds the ideal generated by `gens`, reducing to minimal generators.
    pub fn new<I>(vars: usize, gens: I) -> Result<Self>
    where
        I: IntoIterator,
        I::Item: Into<ExponentVector>,
    {
        minimalize(vars, gens.into_iter().map(Into::into))
    }

    /// The monomial prime generated by the given variables.
    pub fn variables(vars: usize, indices: &[usize]) -> Self {
        let gens: Vec<_> = indices
            .iter()
            .map(|&i| ExponentVector::pure_power(vars, i, 1))
            .collect();
        minimalize(vars, gens).expect("pure variables have matching length")
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn gens(&self) -> &[ExponentVector] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    /// Whether `x^m` lies in the ideal.
    pub fn member(&self, m: &ExponentVector) -> Result<bool> {
        check_dim(self.vars, m.len())?;
        Ok(self.gens.iter().any(|g| divides_unchecked(g, m)))
    }

    pub(crate) fn member_unchecked(&self, m: &ExponentVector) -> bool {
        self.gens.iter().any(|g| divides_unchecked(g, m))
    }

    /// `J ⊆ self`.
    pub fn contains(&self, other: &MonomialIdeal) -> Result<bool> {
        check_dim(self.vars, other.vars)?;
        Ok(other.gens.iter().all(|g| self.member_unchecked(g)))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        check_dim(self.vars, other.vars)?;
        minimalize(self.vars, self.gens.iter().chain(&other.gens).cloned())
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        check_dim(self.vars, other.vars)?;
        let mut lcms = Vec::with_capacity(self.gens.len() * other.gens.len());
        for g in &self.gens {
            for h in &other.gens {
                lcms.push(g.lcm(h)?);
            }
        }
        minimalize(self.vars, lcms)
    }

    /// The colon ideal `(self : x^m)`.
    pub fn quotient(&self, m: &ExponentVector) -> Result<MonomialIdeal> {
        check_dim(self.vars, m.len())?;
        let gens = self
            .gens
            .iter()
            .map(|g| g.saturating_sub(m))
            .collect::<Result<Vec<_>>>()?;
        minimalize(self.vars, gens)
    }

    /// Every variable has a pure power among the generators.
    pub fn is_artinian(&self) -> bool {
        let mut seen = vec![false; self.vars];
        for g in &self.gens {
            if g.is_one() {
                return true;
            }
            if let Some((i, _)) = g.as_pure_power() {
                seen[i] = true;
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Exponent of the pure power of `x_i` among the generators, if any.
    pub fn pure_power_of(&self, i: usize) -> Option<u64> {
        self.gens
            .iter()
            .filter_map(|g| g.as_pure_power())
            .find(|&(j, _)| j == i)
            .map(|(_, e)| e)
    }

    /// All monomials outside an artinian ideal, in lexicographic order.
    pub fn standard_monomials(&self) -> Result<Vec<ExponentVector>> {
        if !self.is_artinian() {
            return Err(Error::NotArtinian);
        }
        if self.is_unit() {
            return Ok(Vec::new());
        }
        let corner: Vec<u64> = (0..self.vars)
            .map(|i| self.pure_power_of(i).expect("artinian") - 1)
            .collect();
        Ok(box_below(&ExponentVector(corner))
            .into_iter()
            .filter(|u| !self.member_unchecked(u))
            .collect())
    }

    /// Monomials outside the ideal with total degree at most `bound`.
    pub fn standard_monomials_up_to(&self, bound: u64) -> Vec<ExponentVector> {
        monomials_up_to(self.vars, bound)
            .into_iter()
            .filter(|u| !self.member_unchecked(u))
            .collect()
    }

    /// Relabels variables: `x_i` becomes `x_{perm[i]}`.
    pub fn permute(&self, perm: &[usize]) -> Result<MonomialIdeal> {
        check_dim(self.vars, perm.len())?;
        minimalize(self.vars, self.gens.iter().map(|g| g.permute(perm)))
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{:?}", g)?;
        }
        write!(f, ">")
    }
}

/// Reduces a generating set to the antichain of divisibility-minimal
/// elements, sorted lexicographically.
pub fn minimalize<I>(vars: usize, gens: I) -> Result<MonomialIdeal>
where
    I: IntoIterator<Item = ExponentVector>,
{
    let mut all: Vec<ExponentVector> = gens.into_iter().collect();
    for g in &all {
        check_dim(vars, g.len())?;
    }
    // After sorting by total degree, a divisor always precedes its multiples.
    all.sort_by(|a, b| {
        let da: u128 = a.0.iter().map(|&e| e as u128).sum();
        let db: u128 = b.0.iter().map(|&e| e as u128).sum();
        da.cmp(&db).then_with(|| a.cmp(b))
    });
    all.dedup();
    let mut kept: Vec<ExponentVector> = Vec::new();
    for g in all {
        if !kept.iter().any(|k| divides_unchecked(k, &g)) {
            kept.push(g);
        }
    }
    kept.sort();
    Ok(MonomialIdeal { vars, gens: kept })
}

/// JSON wire form `{"vars": n, "gens": [[e1, ..., en], ...]}`.
#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct IdealJson {
    vars: usize,
    gens: Vec<Vec<i64>>,
}

impl Serialize for MonomialIdeal {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Out<'a> {
            vars: usize,
            gens: &'a [ExponentVector],
        }
        Out {
            vars: self.vars,
            gens: &self.gens,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for MonomialIdeal {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = IdealJson::deserialize(d)?;
        ideal_from_rows(raw.vars, &raw.gens).map_err(serde::de::Error::custom)
    }
}

fn ideal_from_rows(vars: usize, rows: &[Vec<i64>]) -> std::result::Result<MonomialIdeal, String> {
    let mut gens = Vec::with_capacity(rows.len());
    for (k, row) in rows.iter().enumerate() {
        if row.len() != vars {
            return Err(format!(
                "gens[{k}]: expected {vars} exponents, found {}",
                row.len()
            ));
        }
        let mut v = Vec::with_capacity(vars);
        for (i, &e) in row.iter().enumerate() {
            if e < 0 {
                return Err(format!("gens[{k}][{i}]: negative exponent {e}"));
            }
            v.push(e as u64);
        }
        gens.push(ExponentVector(v));
    }
    minimalize(vars, gens).map_err(|e| e.to_string())
}
