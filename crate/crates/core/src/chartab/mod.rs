//! Exact character tables over cyclotomic fields, Frobenius-Schur
//! indicators and Galois orbits of irreducible characters.

mod classes;
pub mod cyclotomic;
mod modular;
mod table;

use thiserror::Error;

pub use classes::{conjugacy_classes, ClassData};
pub use cyclotomic::Cyclotomic;
pub use table::{character_table, CharacterTable, ClassFunction, TableExport, MAX_TABLE_ORDER};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChartabError {
    #[error("group of order {order} is beyond the supported table size")]
    TooLarge { order: usize },
    #[error("class function has {got} values, expected {expected}")]
    LengthMismatch { expected: usize, got: usize },
    /// Signals an arithmetic bug; never expected for valid input.
    #[error("internal inconsistency in character computation: {0}")]
    Inconsistent(String),
}

#[cfg(test)]
mod tests;
