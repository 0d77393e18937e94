//! Exact-arithmetic computations on finite-dimensional Leibniz n-algebras
//! given by structure constants: validation, Lie-center and Lie-commutator
//! invariants, multiplier bounds, central extensions and covers, and
//! Lie-isoclinism witness checking and search.

pub mod algebra;
pub mod catalog;
pub mod error;
pub mod extensions;
pub mod invariants;
pub mod io;
pub mod isoclinism;
pub mod linalg;
pub mod scalar;

pub use algebra::{Algebra, Homomorphism};
pub use error::Error;
pub use linalg::{Matrix, Subspace, Vector};
pub use scalar::{FieldSpec, Scalar};
