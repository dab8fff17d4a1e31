//! Multigraded Hilbert functions of monomial quotients `S/I`.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{check_dim, Error, Result};
use crate::lattice::FiberMatrix;
use crate::monomial::{monomials_up_to, ExponentVector, MonomialIdeal};

/// Largest generator count accepted by inclusion-exclusion.
pub const MAX_NUMERATOR_GENERATORS: usize = 20;

/// An `N^d` grading of `k[x_1..x_n]`: column `i` is `deg x_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grading(FiberMatrix);

impl Grading {
    pub fn new(matrix: FiberMatrix) -> Self {
        Grading(matrix)
    }

    /// Total degree.
    pub fn standard(n: usize) -> Self {
        Grading(FiberMatrix::ones(n))
    }

    /// `deg x_i = e_i`.
    pub fn fine(n: usize) -> Self {
        Grading(FiberMatrix::identity(n))
    }

    pub fn matrix(&self) -> &FiberMatrix {
        &self.0
    }

    pub fn dims(&self) -> usize {
        self.0.rows()
    }
}

/// Number of monomials `x^u` outside `I` with `Du = b`.
pub fn hilbert_function(ideal: &MonomialIdeal, grading: &Grading, b: &ExponentVector) -> Result<u64> {
    check_dim(grading.matrix().cols(), ideal.vars())?;
    Ok(grading
        .matrix()
        .fiber(b)?
        .iter()
        .filter(|u| !ideal.member_unchecked(u))
        .count() as u64)
}

/// A finitely supported polynomial in `t_1..t_d` with integer coefficients;
/// zero coefficients are never stored.
///
/// Serializes as a sorted list of `[exponent, coefficient]` pairs.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LaurentFreeNumerator {
    terms: BTreeMap<ExponentVector, i64>,
}

impl LaurentFreeNumerator {
    pub fn one(d: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(ExponentVector::zero(d), 1);
        LaurentFreeNumerator { terms }
    }

    pub fn add_term(&mut self, exponent: ExponentVector, coefficient: i64) {
        match self.terms.entry(exponent) {
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += coefficient;
                if *slot.get() == 0 {
                    slot.remove();
                }
            }
            Entry::Vacant(slot) => {
                if coefficient != 0 {
                    slot.insert(coefficient);
                }
            }
        }
    }

    pub fn coefficient(&self, exponent: &ExponentVector) -> i64 {
        self.terms.get(exponent).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, i64)> {
        self.terms.iter().map(|(e, &c)| (e, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `t^b` in `self / prod_i (1 - t_i)`, i.e. the sum of
    /// coefficients at exponents `<= b`.
    pub fn series_coefficient(&self, b: &ExponentVector) -> i64 {
        self.terms
            .iter()
            .filter(|(e, _)| e.as_slice().iter().zip(b.as_slice()).all(|(x, y)| x <= y))
            .map(|(_, &c)| c)
            .sum()
    }

    /// Substitutes `t_i -> t^{D e_i}` for a coarser grading `D`.
    pub fn coarsen(&self, grading: &Grading) -> Result<LaurentFreeNumerator> {
        let mut out = LaurentFreeNumerator::default();
        for (e, &c) in &self.terms {
            out.add_term(grading.matrix().apply(e)?, c);
        }
        Ok(out)
    }

    /// `self - t^m * other`.
    pub fn sub_shifted(&self, m: &ExponentVector, other: &LaurentFreeNumerator) -> Result<Self> {
        let mut out = self.clone();
        for (e, &c) in &other.terms {
            out.add_term(e.checked_add(m)?, -c);
        }
        Ok(out)
    }
}

impl Serialize for LaurentFreeNumerator {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.terms.iter())
    }
}

/// Numerator of the fine-graded Hilbert series of `S/I` over
/// `prod (1 - t_i)`, by inclusion-exclusion over subsets of the minimal
/// generators.
pub fn hilbert_numerator(ideal: &MonomialIdeal) -> Result<LaurentFreeNumerator> {
    if ideal.is_unit() {
        return Err(Error::DegenerateIdeal("unit"));
    }
    let gens = ideal.gens();
    if gens.len() > MAX_NUMERATOR_GENERATORS {
        return Err(Error::TooManyGenerators {
            count: gens.len(),
            limit: MAX_NUMERATOR_GENERATORS,
        });
    }
    let n = ideal.vars();
    let mut out = LaurentFreeNumerator::one(n);
    // depth-first over subsets, carrying the running lcm
    fn visit(
        gens: &[ExponentVector],
        start: usize,
        lcm: &ExponentVector,
        sign: i64,
        out: &mut LaurentFreeNumerator,
    ) -> Result<()> {
        for k in start..gens.len() {
            let next = lcm.lcm(&gens[k])?;
            out.add_term(next.clone(), -sign);
            visit(gens, k + 1, &next, -sign, out)?;
        }
        Ok(())
    }
    visit(gens, 0, &ExponentVector::zero(n), 1, &mut out)?;
    Ok(out)
}

/// Whether `I` and `J` have equal Hilbert functions in every degree `b`
/// with `|b| <= bound`.
pub fn same_hilbert_up_to(
    i: &MonomialIdeal,
    j: &MonomialIdeal,
    grading: &Grading,
    bound: u64,
) -> Result<bool> {
    check_dim(i.vars(), j.vars())?;
    check_dim(grading.matrix().cols(), i.vars())?;
    for b in monomials_up_to(grading.dims(), bound) {
        if hilbert_function(i, grading, &b)? != hilbert_function(j, grading, &b)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Per-degree table of `H_{S/I}(b)` for `|b| <= bound`.
pub fn hilbert_table(
    ideal: &MonomialIdeal,
    grading: &Grading,
    bound: u64,
) -> Result<Vec<(ExponentVector, u64)>> {
    monomials_up_to(grading.dims(), bound)
        .into_iter()
        .map(|b| {
            let h = hilbert_function(ideal, grading, &b)?;
            Ok((b, h))
        })
        .collect()
}
