//! Exact intersection products of algebraic cycles in projective space.
//!
//! Cycles are carried by unmixed homogeneous ideals over ℚ with positive
//! integer coefficients. The •-product of `r` cycles is computed by running
//! the Stückrad–Vogel procedure on their ruled join along the join diagonal
//! and pulling the pieces that land on the diagonal back to ℙⁿ.
//!
//! The crate is `no_std` and only needs `alloc`; file formats, reports and
//! the command-line front end live in the `vogel` crate.

#![no_std]

extern crate alloc;

pub mod cycles;
pub mod error;
pub mod ideals;
pub mod intersect;
pub mod kernel;

pub use error::{Error, Result};
