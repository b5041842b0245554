//! Loops as Latin squares: right translations, right multiplication groups, the RCC
//! property, envelopes and loop isomorphism.

pub mod io;
pub mod table;

pub use table::{loop_isomorphic, LoopTable, RightMultiplicationGroup};

/// The envelope `(RM(L), Stab(1), R_L)` of a loop.
pub use crate::folder::envelope;
