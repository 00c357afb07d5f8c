//! Exact linear algebra over Q and Z: dense LU solves over the tower
//! field, Hermite normal form, lattice membership, lattice duals and
//! fixed-point sublattices.

mod fieldmat;
mod lattice;
mod qmatrix;

use thiserror::Error;

pub use fieldmat::{solve_in_basis, FieldMatrix, LuFactors};
pub use lattice::{fixed_sublattice, IntLattice};
pub use qmatrix::QMatrix;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("singular matrix")]
    SingularMatrix,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix does not stabilize the lattice")]
    NotStable,
    #[error("lattice is not of full rank")]
    NotFullRank,
}
