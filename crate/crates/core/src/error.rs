use std::fmt;

use thiserror::Error;

/// Named enumeration caps. Each maps to a CLI flag and an environment variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Cap {
    Faces,
    Flats,
    Bases,
}

impl Cap {
    pub fn name(self) -> &'static str {
        match self {
            Cap::Faces => "max-faces",
            Cap::Flats => "max-flats",
            Cap::Bases => "max-bases",
        }
    }
}

impl fmt::Display for Cap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("element {element} is outside the ground set 1..={n}")]
    ElementOutOfRange { element: usize, n: usize },

    #[error("invalid matroid: {0}")]
    InvalidMatroid(String),

    #[error("basis exchange fails: B1 = {first:?}, B2 = {second:?}, e = {element}")]
    BasisExchange {
        first: Vec<usize>,
        second: Vec<usize>,
        element: usize,
    },

    #[error("{cap} exceeded (limit {limit})")]
    CapExceeded { cap: Cap, limit: usize },

    #[error("{0:?} is not a flat")]
    NotAFlat(Vec<usize>),

    #[error("{0:?} is not a basis")]
    NotABasis(Vec<usize>),

    #[error("chain is not a maximal flag of flats: {0}")]
    NotMaximalChain(String),

    #[error("polynomial degree {degree} exceeds {bound}")]
    DegreeExceeds { degree: usize, bound: usize },

    #[error("complex is not pure")]
    Impure,

    #[error("complex has the wrong dimension: expected facets of size {expected}, found {found}")]
    WrongDimension { expected: usize, found: usize },

    #[error("face is not in the complex")]
    FaceNotInComplex,

    #[error("order is not a permutation of the facets")]
    NotAPermutation,

    #[error("not a pseudomanifold: a ridge lies in {degree} facets")]
    NotPseudomanifold { degree: usize },

    #[error("shelling fails at position {position}")]
    InvalidShelling { position: usize },

    #[error("certificate failure: {0}")]
    Certificate(String),

    #[error("negative coefficient at degree {0}")]
    NegativeCoefficient(usize),

    #[error("order {order} is smaller than the degree {degree}")]
    OrderTooSmall { order: usize, degree: usize },

    #[error("index {index} out of range 1..={len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
