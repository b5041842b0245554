//! Invariant transversals in finite groups, right conjugacy closed loops and their
//! envelopes.

pub mod abelian;
pub mod catalog;
pub mod conjecture;
pub mod error;
pub mod folder;
pub mod frobenius;
pub mod group;
pub mod loops;
pub mod search;

pub use error::{Error, Result};
