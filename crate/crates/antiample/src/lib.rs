//! Exact-arithmetic calculators for positivity questions around the
//! Frobenius in characteristic p.
//!
//! Everything here is integer combinatorics with no rounding anywhere:
//!
//! - [`trunc_sym`]: dimensions and monomial bases of truncated symmetric
//!   powers, and the graded ranks of the filtration on I/I^[p];
//! - [`cartier`]: rank tables for the complex of closed and exact forms
//!   inside F_* of the de Rham complex;
//! - [`toric`]: smooth complete fans, nef/ample divisor tests, residue
//!   decompositions of Frobenius pushforwards of line bundles, and the
//!   decision procedure for (anti)ampleness of the Frobenius cokernel;
//! - [`projective`]: the same pushforwards on projective space by
//!   monomial counting, with nef/ample threshold scans in the twist;
//! - [`bott`]: cohomology of twisted differential forms on projective
//!   space, regularity certificates, and positivity ranges for exterior
//!   powers of tangent bundles;
//! - [`obstruction`]: theorem-shaped verdict rules on witness data
//!   (rational curves, linear subspaces, complete intersections, the
//!   Fano threefold classification), with derivation traces;
//! - [`selftest`]: the oracle suite that cross-checks every fast path
//!   against an independent derivation;
//! - [`cli`]: the JSON command-line frontend over all of the above.
//!
//! The `examples/` directory has one runnable walk-through per
//! capability; start with `cargo run --example ample_cokernel_survey`.

pub mod bigjson;
pub mod bott;
pub mod cartier;
pub mod cli;
pub mod combinatorics;
pub mod obstruction;
pub mod projective;
pub mod selftest;
pub mod toric;
pub mod trunc_sym;
pub mod verdict;

pub use toric::{Fan, ToricDivisor};
pub use verdict::{Ampleness, Positivity, TraceStep, Verdict};
