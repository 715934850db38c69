//! Maximum-weight stable matchings through maximum-weight ideal cuts.
//!
//! The pipeline: build the rotation poset of a stable marriage instance,
//! turn it into an edge-weighted DAG whose ideal cuts correspond to stable
//! matchings, and solve the cut problem with a minimum flow under lower
//! bounds. Condensing the final residual graph exposes every optimum at once.

pub mod closure;
pub mod cut;
pub mod decimal;
pub mod error;
pub mod generate;
pub mod matching;
pub mod oracle;
pub mod reduction;
pub mod rotation;
pub mod sublattice;

pub use error::{Error, Result};
