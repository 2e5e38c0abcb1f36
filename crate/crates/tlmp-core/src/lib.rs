//! Exact-arithmetic toolkit for matched pairs of 3-Lie algebras.
//!
//! The crate verifies matched pairs and their representations, computes the
//! low-degree cohomology governing abelian extensions and infinitesimal
//! deformations, builds and compares abelian extensions, and decides the
//! extensibility of automorphism pairs through the Wells obstruction.
//! Everything is computed over ℚ with arbitrary-precision rationals, so
//! every verdict is exact.
//!
//! The crate is `no_std` (with `alloc`); file formats and the command line
//! live in a companion crate.

#![no_std]

extern crate alloc;

pub mod cohomology;
pub mod error;
pub mod exactlinalg;
pub mod extension;
pub mod fixtures;
pub mod matched;
pub mod random;
pub mod report;
pub mod representation;
pub mod structure;
pub mod wells;

pub use error::{Error, Result};
pub use exactlinalg::{Rational, RationalMatrix, Vector};
