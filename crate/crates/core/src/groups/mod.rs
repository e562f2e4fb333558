//! Concrete finite groups: permutations, presentations, coset enumeration
//! and the group catalog.

mod catalog;
mod group;
mod perm;
pub mod presentation;
mod todd_coxeter;

use thiserror::Error;

pub use catalog::{binary_polyhedral, catalog, cyclic, dicyclic, ORDER_32_PRESENTATION};
pub use group::FiniteGroup;
pub use perm::Permutation;
pub use presentation::{parse_presentation, parse_word, ParseError, Presentation, Word};
pub use todd_coxeter::{todd_coxeter, DEFAULT_MAX_COSETS};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("image list is not a permutation")]
    NotAPermutation,
    #[error("empty generator list")]
    NoGenerators,
    #[error("generator names do not match generators")]
    GeneratorNameMismatch,
    #[error("generators act on different degrees")]
    DegreeMismatch,
    #[error("group exceeds the order limit {limit}")]
    TooLarge { limit: usize },
    #[error("coset enumeration exceeded {limit} cosets (group too large or infinite)")]
    CosetLimit { limit: usize },
    #[error("coset enumeration produced an inconsistent table")]
    EnumerationFailed,
    #[error("unknown group spec `{0}`")]
    UnknownSpec(String),
    #[error("parameter out of range in `{0}`")]
    ParameterOutOfRange(String),
}
