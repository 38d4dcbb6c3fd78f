//! Exact representation-theoretic combinatorics for classical Lie groups:
//! root systems of types A and B, weight multiplicities, tensor-product
//! decompositions with two independent engines, Littlewood-Richardson and
//! Kostka numbers, and scanners for root-lattice convexity, saturation,
//! log-concavity, and PRV components of tensor supports.
//!
//! All arithmetic is exact: weight coordinates and multiplicities in checked
//! 64-bit integers, dimensions in arbitrary precision, basis changes in exact
//! rationals.

pub mod charmult;
pub mod convexity;
pub mod error;
pub mod lrcomb;
pub mod rootdata;

pub use error::{Error, Result};
