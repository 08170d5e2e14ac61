//! Exact simulation of lossless variable-length quantum compression.
//!
//! Messages from a memoryless qubit (or qudit) source are rewritten in the
//! eigenbasis of the source density matrix, ranked by probability, and mapped
//! onto photon-number Fock states in which the `i`-th most likely sequence
//! occupies `⌈log₂(i/2 + 1)⌉` frequency modes. The map is an isometry, so a
//! receiver who knows the total message length recovers the input exactly.
//!
//! * [`fock`]: sparse states over kets with at most one photon per mode
//! * [`source`]: letter ensembles, density matrices, eigenbasis, entropies
//! * [`message`]: dense n-letter input states
//! * [`coder`]: codebooks, encode/decode, length bounds
//! * [`schumacher`]: finite-n typical-subspace baseline
//! * [`thermo`]: energy ratios and Landauer audits
//! * [`circuit`]: the two-mode photonic compression network
//! * [`experiments`]: table and sweep generators behind the `fock-compress` binary

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod circuit;
pub mod coder;
pub mod error;
pub mod experiments;
pub mod fock;
pub mod message;
pub mod schumacher;
pub mod source;
pub mod thermo;

pub use error::{Error, Result};
