//! Singular loci of hyperplane arrangements.
//!
//! Polynomial arithmetic, Groebner bases and ideal operations, minimal free
//! resolutions with Betti and Hilbert data, arrangement combinatorics, and
//! liaison constructions.

pub mod arrangement;
pub mod error;
pub mod groebner;
pub mod homology;
pub mod liaison;
pub mod polyring;

pub use error::{Error, Result};
