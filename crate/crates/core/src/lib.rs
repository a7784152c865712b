//! Exact computations for Iwahori–Hecke algebras `H_q(S_n)` at a primitive
//! `e`-th root of unity: partition combinatorics, blocks, Grothendieck-group
//! induction and restriction, the LLT algorithm, and module-level vertex
//! computations over `ℚ(ζ_e)`.
//!
//! The crate is `no_std` and needs only `alloc`.

#![no_std]
extern crate alloc;

pub mod blocks;
pub mod error;
pub mod fock;
pub mod hecke;
pub mod kgroup;
pub mod partition;

pub use error::{Error, Result};
pub use partition::{Cell, Partition};
