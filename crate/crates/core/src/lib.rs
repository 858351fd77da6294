//! Determinant characters of the irreducible representations of the
//! generalized symmetric group `G(n, r) = Z_r ≀ S_n`, and counts of
//! irreducibles by determinant, by degree parity and by degree coprime to `p`.
//!
//! Everything is exact integer arithmetic. Closed formulas are always paired
//! with a brute-force enumeration that serves as the reference.

pub mod arith;
pub mod classify;
pub mod composition;
pub mod counting;
pub mod det;
pub mod eigen;
pub mod error;
pub mod multipartition;
pub mod partition;
pub mod reference;
pub mod series;
pub mod verify;

pub use composition::Composition;
pub use det::{det_irrep, DetCharacter};
pub use error::{Error, Result};
pub use multipartition::{Multipartition, WreathParams};
pub use partition::Partition;
