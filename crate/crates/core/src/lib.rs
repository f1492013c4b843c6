//! Exact-arithmetic toolkit for a family of two-target linear Diophantine
//! problems on coprime pairs.
//!
//! For coprime positive integers (a, b) and T = (a-1)(b-1)/2, exactly one
//! of the equations a x + b y = T and a x + b y = T - 1 has a nonnegative
//! integral solution, and that solution is unique; the classifier gamma
//! records which one. This crate solves and classifies such pairs exactly
//! at any magnitude, provides closed-form solutions when (a, b) are
//! consecutive Fibonacci numbers raised to the first, second, or third
//! power, and scans general Fibonacci-power pairs for periodicity and
//! difference structure in the resulting gamma sequences.
//!
//! Everything is integer-exact: no floating point, no modular shortcuts
//! without a verified inverse, and every derived solution is
//! re-substituted into its defining equation where cheap to do so.

pub mod closed_forms;
pub mod error;
pub mod explorer;
pub mod fibonacci;
pub mod solver;

pub use error::{Error, Result};
pub use solver::{CoprimePair, Gamma, PairSolution, PositivePairSolution};
