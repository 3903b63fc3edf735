//! Exact classification of weighted star matrices `B(k; r_1, ..., r_m)`.
//!
//! A weighted star is a tree made of `m` type-A chains of lengths `r_i`
//! joined at a central vertex whose diagonal weight is `k`. The sign of the
//! scalar Schur complement `S = k - m + sum 1/(r_i + 1)` decides whether the
//! matrix is finite type, affine type, or has one negative eigenvalue. Affine
//! stars are exactly the unit-fraction solutions of `sum 1/N_i = m - k`, which
//! [`egyptian`] enumerates.
//!
//! Everything is computed in exact integer or rational arithmetic. The dense
//! linear algebra in [`exact`] exists as an independent oracle for the closed
//! forms in [`star`].

pub mod cli;
pub mod egyptian;
mod error;
pub mod exact;
pub mod graph;
pub mod star;
pub mod table;

pub use error::{Error, Result};
pub use exact::{BigInt, BigRat, ExactMatrix, Inertia};
pub use graph::WeightedGraph;
pub use star::{AffineSolution, ArmLabels, CoxeterLabels, MatrixClass, StarShape};
