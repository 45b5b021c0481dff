//! Minimal reverse-mode differentiation used by the training harness.
//!
//! A [`tape::Tape`] records one forward pass; every op stores a closure that
//! turns the output gradient into parent gradients. Parameters live outside
//! the tape in a [`params::ParamStore`] and are bound as leaves each step.

pub mod layers;
pub mod optim;
pub mod params;
pub mod tape;

pub use params::{ParamId, ParamStore};
pub use tape::{Tape, Var};
