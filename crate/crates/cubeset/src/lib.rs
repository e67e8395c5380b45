//! Cube categories, finite cubical sets and open-box filling certificates.
//!
//! The crate computes with the cube categories `◻_A` generated by faces,
//! projections and a chosen set of structure maps (connections, symmetries,
//! reversals, diagonals), with dimension-truncated presheaves on them, with
//! the left Kan extension along an inclusion `◻_A ⊆ ◻_B`, with geometric and
//! cartesian products, and with certificates that an inclusion of
//! decomposition-closed subcomplexes is built by (inner) open-box fillings.

pub mod cube_theory;
pub mod anodyne;
pub mod checks;
pub mod comparison;
pub mod cubical_set;
pub mod decomposition;
pub mod error;

pub use error::{Error, Result};
