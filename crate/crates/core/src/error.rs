use thiserror::Error;

use crate::set::ElementSet;

/// Errors raised by the library. Every variant is a domain error: the input
/// was well formed but violates a mathematical precondition.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty basis list")]
    EmptyBasisList,
    #[error("element {element} out of range for a ground set of size {n}")]
    ElementOutOfRange { element: usize, n: usize },
    #[error("ground set of size {0} exceeds the supported maximum of 64")]
    GroundSetTooLarge(usize),
    #[error("unequal basis sizes: {first:?} has {} elements but {other:?} has {}", first.len(), other.len())]
    UnequalBasisSizes { first: ElementSet, other: ElementSet },
    #[error("basis exchange fails for B1={b1:?}, B2={b2:?}, e={e}")]
    ExchangeViolation { b1: ElementSet, b2: ElementSet, e: usize },
    #[error("{0:?} is not a flat")]
    NotAFlat(ElementSet),
    #[error("corank {d} out of range 0..={r}")]
    CorankOutOfRange { d: usize, r: usize },
    #[error("contraction set {0:?} is dependent")]
    DependentContraction(ElementSet),
    #[error("deletion set {0:?} is not coindependent")]
    NotCoindependent(ElementSet),
    #[error("contraction set {contract:?} and deletion set {delete:?} overlap")]
    OverlappingMinor { contract: ElementSet, delete: ElementSet },
    #[error("modular cut violation: {0}")]
    InvalidCut(String),
    #[error("not a linear subclass: {0}")]
    NotLinearSubclass(String),
    #[error("the empty modular cut corresponds to adding a coloop and is not supported")]
    EmptyCut,
    #[error("element {0} is a coloop")]
    Coloop(usize),
    #[error("invalid marks: {0}")]
    InvalidMarks(String),
    #[error("{0:?} is not a hyperplane")]
    NotAHyperplane(ElementSet),
    #[error("endpoint in cut: {0:?}")]
    EndpointInCut(ElementSet),
    #[error("flat {0:?} is decomposable")]
    DecomposableFlat(ElementSet),
    #[error("the path must live on a proper flat")]
    FlatIsGroundSet,
    #[error("hyperplane {hyperplane:?} does not contain {flat:?}")]
    NotOnFlat { hyperplane: ElementSet, flat: ElementSet },
    #[error("no Tutte path found from {from:?} to {to:?}; this contradicts the path theorem")]
    PathTheoremViolated { from: ElementSet, to: ElementSet },
    #[error("not a closed Tutte path off the cut: {0}")]
    InvalidPath(String),
    #[error("homology degree {k} out of range for a complex of dimension {dim}")]
    DegreeOutOfRange { k: usize, dim: isize },
    #[error("search_l3 is limited to at most 5 atoms, got {0}")]
    TooManyAtoms(usize),
    #[error("malformed relation: {0}")]
    MalformedRelation(String),
    #[error("additive relation with a single nonzero term: {0}")]
    IllegalAdditiveRelation(String),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("element does not belong to this pasture")]
    ForeignElement,
    #[error("target pasture has an infinite unit group")]
    InfiniteTarget,
    #[error("integer overflow in exact arithmetic: {0}")]
    Overflow(String),
    #[error("hyperplane function support does not match the matroid at row {row}, column {col}")]
    SupportMismatch { row: usize, col: usize },
    #[error("cross-ratio index is not in the admissible set: {0}")]
    NotACrossRatio(String),
    #[error("consistency check failed: {0}")]
    Inconsistent(String),
    #[error("unknown catalog name `{0}`")]
    UnknownName(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
