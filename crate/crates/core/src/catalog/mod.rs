//! Named groups, finite fields, affine groups, the Suzuki point stabiliser, and the
//! small-group catalog used by the sweeps.

pub mod affine;
pub mod extension;
pub mod field;
pub mod named;
pub mod small;
pub mod suzuki;

pub use affine::{affine_group, AffineGroup};
pub use field::FiniteField;
pub use named::{abelian, alternating, cyclic, cyclic_semidirect, dicyclic, dihedral, heisenberg, symmetric, wreath_cyclic_c2};
pub use extension::{automorphisms, cyclic_extension, extension_data};
pub use small::{entries_of_order, small_group_catalog, CatalogEntry, Provenance};
pub use suzuki::{suzuki_point_stabilizer, SuzukiStabilizer};
