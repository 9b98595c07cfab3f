//! Exact arithmetic in prime fields and sparse column-major matrices.

pub mod dense;
mod field;
mod reduce;
mod sparse;

pub use field::{FieldError, PrimeField};
pub use reduce::{
    kernel, rank, reduce, reduce_with, solve_in_span, EchelonBasis, PivotMap, ReduceOptions,
    Reduction, SpanSolver,
};
pub use sparse::{SparseColumn, SparseMatrix};
