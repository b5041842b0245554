use thiserror::Error;

use crate::group::Elem;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("table is not a Latin square (row or column {0} repeats an entry)")]
    NotLatinSquare(usize),
    #[error("table has an entry out of range at ({row}, {col})")]
    EntryOutOfRange { row: usize, col: usize },
    #[error("multiplication is not associative: ({0}*{1})*{2} != {0}*({1}*{2})")]
    NotAssociative(Elem, Elem, Elem),
    #[error("table has no two-sided identity")]
    NoIdentity,
    #[error("element {0} has no two-sided inverse")]
    NoInverse(Elem),
    #[error("group order exceeds the configured bound of {0}")]
    OrderBoundExceeded(usize),
    #[error("{0} is not a permutation of 0..{1}")]
    NotAPermutation(String, usize),
    #[error("element set is not a subgroup")]
    NotSubgroup,
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("map is not an action by automorphisms: {0}")]
    NotAnAction(String),
    #[error("map is not a homomorphism: {0}")]
    NotAHomomorphism(String),
    #[error("not a transversal for the right cosets of the conjugate by element {0}")]
    NotTransversal(Elem),
    #[error("subgroup meets the derived subgroup nontrivially")]
    DerivedIntersectsH,
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("group is not abelian")]
    NotAbelian,
    #[error("subgroup is not proper")]
    NotProper,
    #[error("not a p-group")]
    NotPGroup,
    #[error("index {index} does not exceed rank {rank}")]
    IndexTooSmall { index: usize, rank: usize },
    #[error("index {index} exceeds rank {rank}")]
    IndexTooLarge { index: usize, rank: usize },
    #[error("largest Sylow index {max_index} does not exceed rank {rank}")]
    ConditionFails { max_index: usize, rank: usize },
    #[error("transversal family does not generate the group")]
    FamilyDoesNotGenerate,
    #[error("abelian factor of order {q} is smaller than the family size {family}")]
    QTooSmall { q: usize, family: usize },
    #[error("U is not contained in H")]
    ChainViolated,
    #[error("subgroup is not a Hall subgroup")]
    NotHall,
    #[error("no H-invariant transversal exists")]
    NoInvariantSystem,
    #[error("theorem violated: {0}")]
    InternalTheoremViolation(String),
    #[error("transversal does not have the predicted Frobenius shape: {0}")]
    ShapeViolation(String),
    #[error("no intermediate subgroup between H and G")]
    NoIntermediateSubgroup,
    #[error("no built-in irreducible modulus for GF({p}^{k})")]
    NoBuiltinModulus { p: u32, k: u32 },
    #[error("modulus is not irreducible over GF({0})")]
    ReducibleModulus(u32),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
