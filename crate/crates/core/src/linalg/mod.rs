//! Exact dense linear algebra over any [`Field`](crate::field::Field).

mod closure;
mod eigen;
mod matrix;
mod subspace;

use thiserror::Error;

pub use closure::{algebra_closure_dim, ClosureResult, ClosureStatus};
pub use eigen::{charpoly, eigenvalues_in_field, gen_eigenspace_dims};
pub use matrix::{Matrix, Rref};
pub use subspace::Subspace;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("ambient dimensions differ: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },
    #[error("row {row} has {found} entries, expected {expected}")]
    Ragged { row: usize, expected: usize, found: usize },
}
