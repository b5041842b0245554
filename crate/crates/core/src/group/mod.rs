//! Finite groups as Cayley tables, and the subgroup machinery built on them.

pub mod hom;
pub mod io;
pub mod iso;
pub mod lattice;
pub mod ops;
pub mod perm;
pub mod product;
pub mod rank;
pub mod set;
pub mod sylow;
pub mod table;

pub use hom::GroupHomomorphism;
pub use iso::{find_isomorphism, find_monomorphism};
pub use ops::{
    center, centralizer, conjugacy_classes, core, derived_subgroup, generated_subgroup, is_normal, is_subgroup,
    normalizer, right_cosets,
};
pub use perm::{build_from_generators, Perm, PermGroup};
pub use product::{direct_product, quotient, semidirect_product, Action, Product};
pub use rank::rank;
pub use set::ElementSet;
pub use sylow::sylow_subgroup;
pub use table::{Elem, GroupTable, DEFAULT_ASSOCIATIVITY_BOUND, DEFAULT_MAX_ORDER};
