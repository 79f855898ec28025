//! Window-shift autoequivalences of the standard Grassmannian flop, computed exactly on
//! window generators.
//!
//! The crate builds explicit staircase resolutions of pushforwards from the
//! correspondence locus, applies twist and cotwist functors to the generators of
//! `𝕊^δ S^∨(k)`-windows, and checks the results against independent oracles
//! (Littlewood–Richardson, Borel–Weil–Bott, equivariant localization, characters).

pub mod autoequiv;
pub mod bundle;
pub mod bwb;
pub mod characters;
pub mod cli;
pub mod error;
pub mod partition;
pub mod resolution;
pub mod schur;
pub mod window;

pub use bundle::{BundleLabel, GradedComplex, Side, StackParams};
pub use error::{Error, Result};
pub use partition::{staircase, Partition, Staircase, Strip};
