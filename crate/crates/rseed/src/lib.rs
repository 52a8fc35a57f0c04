//! Initial seeds for the cluster structure on the categories `C_{v,w}`
//! attached to open Richardson varieties, in simply-laced types.
//!
//! The pipeline is: build the standard seed of a reduced word `w̄`
//! ([`quiver::build_gamma`] and the Δ-vectors of [`deltavec`]), then run the
//! mutation sequence of [`mutalg`] driven by the rightmost embedding of `v`
//! in `w̄`. Summands are identified only by their Δ-vectors.

pub mod cli;
pub mod deltavec;
pub mod error;
pub mod golden;
pub mod mutalg;
pub mod quiver;
pub mod rootsys;
pub mod sample;
pub mod words;

pub use error::{Error, Result};
