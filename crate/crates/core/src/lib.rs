//! Exact generating functions for arrowed monotone triangles with bottom row
//! `0, 2, ..., 2n-2` and the models that share them: three lattice path
//! families, pairs of plane partitions, and a collection of determinant and
//! antisymmetrizer formulas.
//!
//! Everything is computed over [`poly::LaurentPoly`], a sparse Laurent
//! polynomial ring with arbitrary precision integer coefficients.

pub mod amt;
pub mod cli;
pub mod error;
pub mod identities;
pub mod involutions;
pub mod lattice;
pub mod matrix;
pub mod pp;
pub mod poly;
pub mod util;

pub use error::{Error, Result};
pub use matrix::{DetMethod, PolyMatrix};
pub use poly::{Alphabet, LaurentPoly};
