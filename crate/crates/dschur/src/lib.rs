//! Exact computation of the Homfly-Pt polynomial of braid closures, with its
//! Alexander (beta = 0) and sl_m (beta = m) specializations, through a
//! rewriting realization of the doubled Schur algebra. Independent classical
//! oracles (Hecke/Ocneanu trace, reduced Burau) cross-validate the pipeline.

pub mod braid;
pub mod coeff;
pub mod engine;
mod error;
pub mod invariants;
pub mod oracle;
mod params;
pub mod schur;
pub mod selftest;

pub use error::{Error, Result};
pub use params::Params;
