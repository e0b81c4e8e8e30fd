//! Decision procedures for join-orthogonalisability of graph pairs given
//! only the sizes of their connected components.
//!
//! A pair of size tuples `(m, n)` is always join-orthogonalisable when every
//! pair of graphs with those component sizes has a join with exactly two
//! distinct eigenvalues. That property is equivalent to the existence of
//! compatible 0-1 matrices, which [`compat`] decides exactly by search and
//! [`suitability`] brackets with closed-form conditions. [`classifier`]
//! combines both into a single verdict.

pub mod bmatrix;
pub mod classifier;
pub mod cli;
pub mod compat;
pub mod suitability;
pub mod tuples;

pub use bmatrix::{gale_ryser_construct, gale_ryser_feasible, product_positive, BinaryMatrix};
pub use classifier::{AjoRule, AjoStatus, Classifier, Verdict};
pub use compat::{d_exact, dtilde_exact, validate_witness, OracleOutcome, OracleStatus, WitnessPair};
pub use suitability::SuitabilityReport;
pub use tuples::IntTuple;
