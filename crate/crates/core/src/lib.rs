//! Augmented Bergman complexes of matroids.
//!
//! Builds independence, Bergman and augmented Bergman complexes, counts their faces
//! directly and through convolution formulas, constructs and checks a convex ear
//! decomposition of the augmented Bergman complex, computes Chow and augmented Chow
//! Hilbert series, and tests coefficient sequences for unimodality, log-concavity,
//! real-rootedness and the top-heavy inequalities.

pub mod analysis;
pub mod chow;
pub mod cli;
pub mod combinatorics;
pub mod complex;
pub mod complexes;
pub mod corpus;
pub mod ear;
pub mod enumeration;
pub mod error;
pub mod limits;
pub mod matroid;
pub mod poly;

pub use complex::{Face, SimplicialComplex, Vertex};
pub use error::{Cap, Error, Result};
pub use limits::Limits;
pub use matroid::{Flat, FlatLattice, Matroid, Minor};
pub use poly::Polynomial;
