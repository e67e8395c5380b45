//! Cube categories `◻_A` as concrete functions between powers of `{0,1}`.
//!
//! Vertices of `{0,1}^n` are indexed lexicographically with coordinate 1
//! most significant, so the vertex `(a_1, …, a_n)` has code
//! `a_1 2^{n-1} + … + a_n`. Maps are stored extensionally and compared by
//! their tables.

mod factor;
mod hom;
mod map;
mod theory;

pub use factor::{active_face_factor, ez_factor, fixed_coordinates, is_active, is_degeneracy, FaceList};
pub use hom::{enumerate_hom, enumerate_hom_closure, hom_cap, is_member, set_hom_cap, HomSet, MAX_HOM_SIZE};
pub use map::{
    compose, connection, coord, decode, diagonal, elementary_degeneracies, encode, face, generator, generators_from,
    projection, reversal, tensor, transposition, CubeMap, GeneratorKind, Vertex, MAX_DIM,
};
pub use theory::{Symbol, Theory};
