//! Self-dual codes over prime fields built from orthogonal matrices.
//!
//! Finite-field linear algebra, orthogonal group tools, code construction and
//! extension, minimum-distance engines, and a search harness with a
//! verifiable on-disk archive.

pub mod code;
pub mod construct;
pub mod error;
pub mod extend;
pub mod field;
pub mod group;
pub mod harness;
pub mod matrix;

pub use code::{LinearCode, WeightEnumerator};
pub use error::{Error, Result};
pub use field::{Elem, PrimeField};
pub use matrix::{BinaryVector4, FqMatrix};
