//! Executable well-quasi-order kernels.
//!
//! Everything in this crate is pure and allocation-only (`alloc`, no `std`):
//!
//! - [`orders`]: explicit finite quasi-orders, their constructions, and
//!   Higman's subsequence order `≤*`.
//! - [`trees`]: finite ordered labelled trees and Kruskal's embedding.
//! - [`algebra`]: ordered algebras presented as graded-tree term algebras and
//!   the evaluation map from graded terms into an interpretation.
//! - [`hl_dl`]: the block-length bijection between binary strings and tuples
//!   of positive integers, and good-pair transport in both directions.
//! - [`ordinals`]: Cantor normal forms below ε₀, fundamental sequences and the
//!   slow-growing hierarchy.
//! - [`exp_terms`]: exponential terms `x^a + b` and the slow well-ordering
//!   verifier/search.
//! - [`ack_terms`]: Ackermannian terms, the `≤_k` relation and `W(f)` checks.
#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod ack_terms;
pub mod algebra;
pub mod budget;
pub mod error;
pub mod exp_terms;
pub mod hl_dl;
pub mod orders;
pub mod ordinals;
pub mod search;
pub mod trees;

pub use budget::Budget;
pub use error::{Error, Result};
pub use search::SearchOutcome;
