use thiserror::Error;

use crate::groups::{Family, GroupSpec};
use crate::spectra::MatrixKind;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameters for {family}: {reason}")]
    InvalidParams { family: Family, reason: String },

    #[error("({a}, {b}) is not a canonical element of {spec}")]
    NonCanonical { spec: GroupSpec, a: u32, b: u32 },

    #[error("{0} is abelian, so its commuting conjugacy class graph has no vertices")]
    AbelianGroup(GroupSpec),

    #[error("component {component:?} is not a complete graph")]
    NotUnionOfCliques { component: Vec<usize> },

    #[error("mean degree is undefined for a graph with no vertices")]
    ZeroVertices,

    #[error(
        "{which} eigenvalue mismatch: exact {exact}, numeric {numeric} (deviation {deviation:e})"
    )]
    MismatchBeyondTolerance {
        which: MatrixKind,
        exact: f64,
        numeric: f64,
        deviation: f64,
    },

    #[error("graph has {vertices} vertices, above the numeric oracle cap of {cap}")]
    VertexCapExceeded { vertices: usize, cap: usize },

    #[error("no closed form covers {spec}: {reason}")]
    UnsupportedParams { spec: GroupSpec, reason: String },
}
