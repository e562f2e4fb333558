//! Galois covers of punctured surfaces given by monodromy data: validity,
//! genus, and the equivariant multiplicity profile of the cover.

mod chevalley;
mod datum;
mod file;

use thiserror::Error;

pub use chevalley::{
    chevalley_weil, eigenvalue_multiplicities, prym_profile, IrrepMultiplicities,
    IsotypicProfile, LocalConvention,
};
pub use datum::{Base, CoverDatum};
pub use file::{CoverFile, CoverFileError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoverError {
    #[error("hyperbolicity violated: 2g - 2 + n must be positive for (g, n) = ({genus}, {punctures})")]
    NotHyperbolic { genus: usize, punctures: usize },
    #[error("surface relation violated: prod [a_j, b_j] * prod c_i is element {product}, not the identity")]
    SurfaceRelation { product: usize },
    #[error("connectedness violated: monodromy generates a subgroup of order {generated} in a group of order {order}")]
    Disconnected { generated: usize, order: usize },
    #[error("element index {index} out of range for a group of order {order}")]
    InvalidElement { index: usize, order: usize },
    /// Signals a convention or arithmetic bug.
    #[error("{what} is not a non-negative integer: {value}")]
    NonIntegral { what: &'static str, value: String },
}

#[cfg(test)]
mod tests;
