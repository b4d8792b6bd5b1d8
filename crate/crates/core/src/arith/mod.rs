//! Exact arithmetic and linear algebra over ℤ, F₂ and ℚ(√5).

pub mod f2;
pub mod matrix;
pub mod quadratic;
pub mod scalar;
pub mod smith;
pub mod sparse;

pub use f2::{rank_mod2, rank_mod2_sparse, BitMatrix};
pub use matrix::{determinant, IntMatrix, Matrix};
pub use quadratic::{parse_field_element, ParseFieldError, QSqrt5};
pub use scalar::{ExactInt, OrderedField, Sign};
pub use sparse::SparseMatrix;
pub use smith::{
    invariant_factors, invariant_factors_sparse, smith_normal_form, smith_normal_form_certified, SmithCertificate, SmithForm,
};
