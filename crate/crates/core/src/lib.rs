//! Long-cycle saturated graphs.
//!
//! A graph `G` is C≥r-saturated when it has no cycle of length at least `r`
//! but adding any missing edge creates one. This crate builds the known
//! extremal families, decides saturation exactly, enumerates small graphs to
//! recover saturation numbers, and evaluates the structural predicates and
//! closed-form bounds that go with them.
//!
//! Module map:
//!
//! * [`graph`], [`blocks`], [`canon`], [`graph6`]: the graph core.
//! * [`cycles`]: exact longest-cycle / longest-path decisions.
//! * [`saturation`] and [`enumerate`]: the saturation predicate and the
//!   exhaustive saturation-number oracle.
//! * [`constructions`]: deterministic builders for every graph family.
//! * [`structure`]: executable structural characterizations.
//! * [`bounds`]: exact evaluators for the closed-form bounds, generic over
//!   the scalar type.

pub mod blocks;
pub mod bounds;
pub mod canon;
pub mod constructions;
pub mod cycles;
pub mod enumerate;
mod error;
pub mod graph;
pub mod graph6;
pub mod saturation;
pub mod structure;

pub use error::{Error, Result};
pub use graph::Graph;

/// Exact rational used by the bound evaluators.
pub type Rational = num_rational::Ratio<i64>;
/// Arbitrary-precision rational, for evaluating bounds at very large `n`.
pub type BigRational = num_rational::BigRational;

/// Version stamped into every JSON document this crate emits.
pub const SCHEMA_VERSION: u32 = 1;
