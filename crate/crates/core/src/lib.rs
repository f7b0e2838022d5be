//! Finite, truncated models for the combinatorics of higher categories:
//! truncated simplicial and bisimplicial sets, simplicial categories, finite
//! group actions with fixed-point functors, and exhaustive instance checkers
//! for the adjunctions and cellularity conditions relating them.
//!
//! Everything is stored extensionally (total face/degeneracy tables, explicit
//! multiplication tables, point maps), so every check in the crate is an
//! exact finite computation.

pub mod error;
pub mod util;

pub mod fingroup;

pub mod cat;
pub mod sset;

pub mod bisimp;

pub mod scat;

pub mod equivariant;

pub mod gen;
pub mod report;
pub mod suite;

pub use error::{Error, Result};
