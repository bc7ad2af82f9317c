//! Unified generalized information, inaccuracy and certainty measures.
//!
//! Every measure in the catalog is an instance of one two-parameter mean
//! `G(U; P) = h(X)` over a weight vector `U` and a distribution `P`, with `h`
//! drawn from a small set of generators.

pub mod cli;
pub mod composition;
pub mod distribution;
pub mod duality;
pub mod engine;
mod error;
pub mod io;
pub mod numeric;
pub mod registry;

pub use error::{Error, Result};
