//! Exact combinatorics of monomial ideals and of fibers of nonnegative
//! integer matrices.
//!
//! Everything is computed in exact arithmetic: exponents are checked
//! 64-bit integers, hull tests run over an exact field chosen by type
//! parameter (see [`hull::ExactScalar`]), and SAGBI coefficients use
//! arbitrary-precision integers.

pub mod chains;
pub mod cli;
pub mod decomposition;
pub mod error;
pub mod fibers;
pub mod hilbert;
pub mod hull;
pub mod lattice;
pub mod monomial;
pub mod posetlab;

/// Arbitrary-precision rationals, the default field for hull tests.
pub type Rational = num_rational::BigRational;
/// Machine-word rationals; faster, but only safe for small coordinates.
pub type SmallRational = num_rational::Rational64;
/// A point with exact rational coordinates.
pub type RationalPoint = Vec<Rational>;

pub use chains::IdealFamily;
pub use decomposition::{MonomialPrime, PrimaryComponent};
pub use error::{Error, Result};
pub use fibers::{AtomicMode, Fiber, FiberAtlas};
pub use hilbert::{Grading, LaurentFreeNumerator};
pub use lattice::FiberMatrix;
pub use monomial::{ExponentVector, MonomialIdeal};
pub use posetlab::{FiniteOrderIdeal, XDualOrderIdeal, XElem};
