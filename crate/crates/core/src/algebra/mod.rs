//! Exact arithmetic: coefficient fields, Laurent polynomials, matrices and
//! Smith normal forms.

pub mod field;
pub mod laurent;
pub mod matrix;
pub mod snf;

use thiserror::Error;

pub use field::{
    cyclotomic_polynomial, CyclotomicField, Cyc, Field, FieldSpec, FiniteField, GaloisField, Gf,
};
pub use laurent::LaurentPoly;
pub use matrix::{matrix_rank, FittingIdeal, Mat, PolyMatrix};
pub use snf::{smith_normal_form, EuclideanDomain, Integers, Laurent1, LaurentRing, SnfResult};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("unknown or unsupported field `{0}`")]
    BadField(String),
    #[error("field of order {0} is too large for table arithmetic")]
    FieldTooLarge(u64),
    #[error("{field} has no primitive root of unity of order {order}")]
    NoRootsOfUnity { field: String, order: u64 },
    #[error("point has {got} coordinates, polynomial ring has {expected} variables")]
    VariableCount { expected: usize, got: usize },
    #[error("characters have nonzero coordinates")]
    ZeroCoordinate,
    #[error("minor order {order} out of range for a {rows}x{cols} matrix")]
    MinorOrder { order: usize, rows: usize, cols: usize },
}
