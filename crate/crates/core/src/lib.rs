//! Exact computations on the lattice of subspaces of F_q^n under the
//! subspace distance `dim(U + W) - dim(U ∩ W)`: field arithmetic, canonical
//! subspaces, Gaussian binomial formulas, enumeration, the extremal family
//! constructions, and a brute-force oracle for small parameters.

pub mod cli;
pub mod error;
pub mod families;
pub mod gfq;
pub mod grassmann;
pub mod oracle;
pub mod qcount;
pub mod selftest;
pub mod subspace;

pub use error::{Error, Result};
pub use families::SubspaceFamily;
pub use gfq::Field;
pub use subspace::Subspace;
