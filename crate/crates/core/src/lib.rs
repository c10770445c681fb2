//! Exact combinatorics of intervals in the Dyck pattern poset.
//!
//! Dyck words are ordered by subsequence containment and ranked by
//! semilength. This crate provides:
//!
//! - [`word`]: bit-packed Dyck words, statistics, containment, generation;
//! - [`poset`]: brute-force intervals, Hasse diagrams, chain counts, Δ and μ;
//! - [`formulas`]: closed forms for sizes, rank counts, covers and μ;
//! - [`bijection`]: peak-less Motzkin words and grid-square encodings;
//! - [`conjecture`]: exhaustive scans over small comparable pairs;
//! - [`verify`]: suites recomputing every closed form by brute force;
//! - [`export`]: DOT and JSON output.

pub mod bijection;
pub mod conjecture;
pub mod error;
pub mod export;
pub mod formulas;
pub mod poset;
pub mod verify;
pub mod word;

pub use error::{Error, Result};
pub use poset::{covered_by, covers_of, mobius, Interval, MobiusTable};
pub use word::{contains, generate_all, make, DyckWord, Limits, RunForm, Shape, Step, WordStats};
