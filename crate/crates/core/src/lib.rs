//! Simulation and verification toolkit for two-party correlation models in
//! the local, quantum and superquantum regimes.
//!
//! The crate is organised by model:
//!
//! - [`correlation`]: binary-input/binary-output probability tables, CHSH
//!   combination, nonlocality classification, and the no-signaling,
//!   parameter-independence and outcome-independence checkers.
//! - [`pr_box`]: the Popescu-Rohrlich box and its deterministic
//!   hidden-bit realization.
//! - [`singlet_sim`]: Monte Carlo reproduction of singlet correlations from
//!   one PR box plus two hidden unit vectors.
//! - [`crypto`]: a crypto-nonlocal variant of Bell's hidden-variable model,
//!   with exact great-circle averages, closed forms, and region scans.
//! - [`entangled`]: maximally entangled states of two `N`-level systems, the
//!   state-adapted operator basis, observable decompositions and the curve
//!   construction used to bound the local part of crypto-nonlocal models.
//! - [`cli`]: the command-line front end backing the `nonlocality-lab` binary.
//!
//! All randomness flows from explicit 64-bit seeds; see [`sampling`].

pub mod cli;
pub mod correlation;
pub mod crypto;
pub mod entangled;
pub mod error;
pub mod geometry;
pub mod pr_box;
pub mod quadrature;
pub mod sampling;
pub mod singlet_sim;

pub use correlation::{BoxTable, ChshReport, CorrelationSet, NonlocalityClass, SignOutcome};
pub use error::{Error, Result};
pub use geometry::UnitVec3;
