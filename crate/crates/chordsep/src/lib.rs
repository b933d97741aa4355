//! Chord separation of subsets of `[n]`, plabic tilings and their dual plabic
//! graphs, and fine zonotopal tilings of the three-dimensional cyclic zonotope
//! `Z(n,3)`.
//!
//! The crate is organized bottom-up:
//!
//! - [`subset`]: the ground set `[n] = {1,…,n}` and bitmask subsets;
//! - [`separation`]: the surrounds / strong / weak / chord separation
//!   predicates and cyclic-interval utilities;
//! - [`collection`]: collections of pairwise separated subsets, greedy
//!   completion to maximal-by-inclusion, and purity reports;
//! - [`geometry`]: the exact integer embedding on the moment curve;
//! - [`plabic_tiling`]: plabic tilings of a level slice and their
//!   triangulations;
//! - [`plabic_graph`]: planar bicolored graphs, strands, reducedness,
//!   face labels, and the local moves (M1)–(M3);
//! - [`zonotope`]: fine zonotopal tilings of `Z(n,3)`, sections, assembly,
//!   mutations, and the map to subsets of quadruples;
//! - [`oracle`]: exhaustive enumerations and cross-checks;
//! - [`json`]: the JSON interchange documents used by the CLI.
//!
//! With the default `parallel` feature the heavier sweeps (enumeration,
//! geometric validation, purity stress) expose `par_*` variants backed by
//! rayon; the sequential entry points are always available.

pub mod collection;
pub mod geometry;
pub mod json;
pub mod oracle;
pub mod plabic_graph;
pub mod plabic_tiling;
pub mod separation;
pub mod subset;
pub mod zonotope;

pub use collection::{CompletionOrder, PurityReport, SeparatedCollection, SeparationKind};
pub use plabic_graph::{DualGraph, PlabicGraph, ReducednessReport, Strand};
pub use plabic_tiling::{Color, PlabicTiling, TriangulatedPlabicTiling};
pub use separation::CrossingWitness;
pub use subset::{GroundSet, Subset};
pub use zonotope::{CyclicConfig, SignedSubset, Tile, ValidationReport, ZonotopalTiling};

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("ground set size {0} out of range (need 1 ≤ n ≤ 62)")]
    GroundSize(u64),
    #[error("subset {0:?} does not fit in ground set [{1}]")]
    SubsetOutOfRange(Vec<u8>, u8),
    #[error("operation requires n ≤ {limit}, got n = {n}")]
    ExhaustiveBound { n: u8, limit: u8 },
    #[error("maxgap requires a nonempty subset")]
    EmptySubset,
    #[error("collection is not pairwise separated: {0:?} vs {1:?}")]
    NotPairwiseSeparated(Vec<u8>, Vec<u8>),
    #[error("collection is not maximal by inclusion (can add {0:?})")]
    NotMaximal(Vec<u8>),
    #[error("level {level} out of range 0..={n}")]
    LevelOutOfRange { level: u8, n: u8 },
    #[error("expected consecutive levels, got {0} and {1}")]
    LevelMismatch(u8, u8),
    #[error("level {0} is degenerate here (need 1 ≤ k ≤ n−1)")]
    DegenerateLevel(u8),
    #[error("invalid tiling: {0}")]
    InvalidTiling(String),
    #[error("cannot triangulate face of {0:?}: diagonals do not split it into triangles")]
    NotATriangulation(Vec<Vec<u8>>),
    #[error("invalid plabic graph: {0}")]
    InvalidGraph(String),
    #[error("move rejected: {0}")]
    MoveRejected(String),
    #[error("plabic graph is not reduced")]
    NotReduced,
    #[error("strand permutation is not sigma(k,n)")]
    WrongStrandPermutation,
    #[error("family is not admissible: levels {0} and {1} are incompatible")]
    IncompatibleLevels(u8, u8),
    #[error("quadruple {0:?} has conflicting witnesses")]
    ConflictingWitnesses([u8; 4]),
    #[error("quadruple {0:?} has no witness")]
    MissingWitness([u8; 4]),
    #[error("(S, Q) = ({0:?}, {1:?}) is not a mutable quadruple of this tiling")]
    NotMutable(Vec<u8>, [u8; 4]),
    #[error("invalid document: {0}")]
    InvalidDocument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
