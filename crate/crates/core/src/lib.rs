//! Pipe dreams for permutations, involutions and fixed-point-free involutions,
//! together with the Schubert polynomials they compute.
//!
//! Everything is 1-based externally: permutation images, grid cells and
//! generator indices all start at 1.

pub mod invdream;
pub mod invwords;
pub mod partition;
pub mod pipedream;
pub mod poly;
pub mod render;
pub mod rpp;
pub mod schubert;
pub mod symgroup;
pub mod verify;

pub use invdream::{FpfPipeDream, InvPipeDream};
pub use invwords::{FpfInvolution, Involution};
pub use partition::{Partition, StrictPartition};
pub use pipedream::{PipeDream, ReadingOrder};
pub use poly::{Monomial, Polynomial};
pub use symgroup::{Cell, Diagram, Permutation, Word};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse {what}: {input:?}")]
    Parse { what: &'static str, input: String },
    #[error("not a permutation: {0:?}")]
    NotPermutation(Vec<usize>),
    #[error("{0} is not an involution")]
    NotInvolution(String),
    #[error("{0} is not a fixed-point-free involution")]
    NotFpf(String),
    #[error("fixed-point-free window must be even, got {0}")]
    OddWindow(usize),
    #[error("partition {0:?} does not fit inside the staircase of size {1}")]
    NotInStaircase(Vec<usize>, usize),
    #[error("invalid partition {0:?}")]
    BadPartition(Vec<usize>),
    #[error("ranking is not a reading order: {0}")]
    BadReadingOrder(String),
    #[error("polynomial has non-integral coefficient {0}")]
    NonIntegral(String),
    #[error("cell ({0},{1}) is not a valid grid position")]
    BadCell(usize, usize),
}

pub type Result<T> = std::result::Result<T, Error>;
