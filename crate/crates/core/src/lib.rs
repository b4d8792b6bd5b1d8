//! Double covers of complements of complexified real line arrangements:
//! mod 2 Aomoto ranks, twisted homology and 2-torsion.

pub mod analysis;
pub mod aomoto;
pub mod arith;
pub mod error;
pub mod geometry;
pub mod homology;
pub mod salvetti;

pub use analysis::{Analyzer, InvariantReport};
pub use aomoto::OmegaClass;
pub use error::{Error, Result};

pub type Rational = num_rational::BigRational;
pub type FieldElement = arith::QSqrt5<Rational>;
/// Arrangements with coordinates in `ℚ(√5)`, used by the built-in catalog.
pub type FieldArrangement = geometry::Arrangement<FieldElement>;
pub type RationalArrangement = geometry::Arrangement<Rational>;
