//! Nonnegative integer matrices and enumeration of their fibers
//! `{u in N^n : Au = b}`.

use serde::{Deserialize, Serialize};

use crate::error::{check_dim, Error, Result};
use crate::monomial::ExponentVector;

/// A `d x n` matrix of nonnegative integers with no zero column, so that
/// every fiber of `u -> Au` is finite.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiberMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<u64>>,
}

impl FiberMatrix {
    pub fn new(entries: Vec<Vec<u64>>) -> Result<Self> {
        let rows = entries.len();
        if rows == 0 {
            return Err(Error::MalformedMatrix("matrix has no rows".into()));
        }
        let cols = entries[0].len();
        for (r, row) in entries.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::MalformedMatrix(format!(
                    "entries[{r}]: expected {cols} columns, found {}",
                    row.len()
                )));
            }
        }
        if let Some(c) = (0..cols).find(|&c| entries.iter().all(|row| row[c] == 0)) {
            return Err(Error::ZeroColumn(c));
        }
        Ok(FiberMatrix { rows, cols, entries })
    }

    pub fn identity(n: usize) -> Self {
        let entries = (0..n)
            .map(|r| (0..n).map(|c| u64::from(r == c)).collect())
            .collect();
        FiberMatrix::new(entries).expect("identity has no zero column")
    }

    /// The `1 x n` all-ones matrix (standard total-degree grading).
    pub fn ones(n: usize) -> Self {
        FiberMatrix::new(vec![vec![1; n]]).expect("ones has no zero column")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Vec<u64>] {
        &self.entries
    }

    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.entries[r][c]
    }

    pub fn column(&self, c: usize) -> ExponentVector {
        ExponentVector::new(self.entries.iter().map(|row| row[c]).collect())
    }

    /// `Au`, with checked arithmetic.
    pub fn apply(&self, u: &ExponentVector) -> Result<ExponentVector> {
        check_dim(self.cols, u.len())?;
        self.entries
            .iter()
            .map(|row| {
                row.iter().zip(u.as_slice()).try_fold(0u64, |acc, (&a, &x)| {
                    a.checked_mul(x)
                        .and_then(|p| acc.checked_add(p))
                        .ok_or(Error::Overflow)
                })
            })
            .collect::<Result<Vec<_>>>()
            .map(ExponentVector::new)
    }

    /// Same matrix with columns relabeled: column `i` moves to `perm[i]`.
    pub fn permute_columns(&self, perm: &[usize]) -> Result<Self> {
        check_dim(self.cols, perm.len())?;
        let entries = self
            .entries
            .iter()
            .map(|row| {
                let mut out = vec![0; self.cols];
                for (i, &a) in row.iter().enumerate() {
                    out[perm[i]] = a;
                }
                out
            })
            .collect();
        FiberMatrix::new(entries)
    }

    /// All `u` with `Au = b`, in lexicographic order. Empty exactly when
    /// `b` is not in the monoid `NA`.
    pub fn fiber(&self, b: &ExponentVector) -> Result<Vec<ExponentVector>> {
        check_dim(self.rows, b.len())?;
        // rows_ahead[i][r]: some column >= i has a positive entry in row r
        let mut rows_ahead = vec![vec![false; self.rows]; self.cols + 1];
        for i in (0..self.cols).rev() {
            for r in 0..self.rows {
                rows_ahead[i][r] = rows_ahead[i + 1][r] || self.entries[r][i] > 0;
            }
        }
        let mut out = Vec::new();
        let mut residual = b.as_slice().to_vec();
        let mut cur = Vec::with_capacity(self.cols);
        self.descend(&rows_ahead, &mut residual, &mut cur, &mut out);
        Ok(out)
    }

    fn descend(
        &self,
        rows_ahead: &[Vec<bool>],
        residual: &mut [u64],
        cur: &mut Vec<u64>,
        out: &mut Vec<ExponentVector>,
    ) {
        let i = cur.len();
        if (0..self.rows).any(|r| residual[r] > 0 && !rows_ahead[i][r]) {
            return;
        }
        if i == self.cols {
            out.push(ExponentVector::new(cur.clone()));
            return;
        }
        let cap = (0..self.rows)
            .filter(|&r| self.entries[r][i] > 0)
            .map(|r| residual[r] / self.entries[r][i])
            .min()
            .expect("no zero columns");
        for k in 0..=cap {
            for r in 0..self.rows {
                residual[r] -= self.entries[r][i] * k;
            }
            cur.push(k);
            self.descend(rows_ahead, residual, cur, out);
            cur.pop();
            for r in 0..self.rows {
                residual[r] += self.entries[r][i] * k;
            }
        }
    }

    /// Whether the fiber over `b` is nonempty, stopping at the first point.
    pub fn in_monoid(&self, b: &ExponentVector) -> Result<bool> {
        // fibers at desk scale are small; full enumeration is fine
        Ok(!self.fiber(b)?.is_empty())
    }
}

/// JSON wire form `{"rows": d, "cols": n, "entries": [[...], ...]}`.
#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MatrixJson {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<i64>>,
}

impl Serialize for FiberMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Out<'a> {
            rows: usize,
            cols: usize,
            entries: &'a [Vec<u64>],
        }
        Out {
            rows: self.rows,
            cols: self.cols,
            entries: &self.entries,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for FiberMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = MatrixJson::deserialize(d)?;
        if raw.entries.len() != raw.rows {
            return Err(D::Error::custom(format!(
                "entries: expected {} rows, found {}",
                raw.rows,
                raw.entries.len()
            )));
        }
        let mut entries = Vec::with_capacity(raw.rows);
        for (r, row) in raw.entries.iter().enumerate() {
            if row.len() != raw.cols {
                return Err(D::Error::custom(format!(
                    "entries[{r}]: expected {} columns, found {}",
                    raw.cols,
                    row.len()
                )));
            }
            let mut out = Vec::with_capacity(raw.cols);
            for (c, &a) in row.iter().enumerate() {
                if a < 0 {
                    return Err(D::Error::custom(format!("entries[{r}][{c}]: negative entry {a}")));
                }
                out.push(a as u64);
            }
            entries.push(out);
        }
        FiberMatrix::new(entries).map_err(|e| D::Error::custom(format!("entries: {e}")))
    }
}
