//! Circuit-hyperplane relaxations of GF(4)-representable matroids.
//!
//! The crate decides whether relaxing a circuit-hyperplane of a quaternary
//! matroid yields another quaternary matroid, using a forbidden-submatrix
//! scanner on the interior of a bordered reduced representation, and checks
//! that decision against two exhaustive representability searches. Around
//! that core it provides explicit matroids over small ground sets, minor and
//! fragility tests, the generalized Δ-Y exchange, wheel gluing, path
//! sequences, and an isomorph-free catalog of fragile quaternary matroids.

pub mod catalog;
pub mod constructions;
pub mod error;
pub mod gf4;
pub mod matroid;
pub mod minors;
pub mod relaxation;
pub mod scanner;

pub use error::{Error, Result};
pub use gf4::{Gf4, Gf4Matrix};
pub use matroid::{Matroid, Subset};
