//! Finite abelian groups: invariant factors, rank, and generating transversals.

pub mod decomposition;
pub mod transversal;

pub use decomposition::{abelian_rank, decompose_subgroup, invariant_factor_decomposition, AbelianDecomposition};
pub use transversal::{
    centralizer_in_h_trivial, generating_transversal_abelian, generating_transversal_cyclic,
    generating_transversal_p_group, lift_generating_transversal_from_quotient, lift_generating_transversal_over_derived,
    minimal_transversal_p_group,
};
