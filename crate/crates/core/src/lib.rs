//! Commutator calculus for finite precrossed modules over a fixed base.

pub mod ambient;
pub mod enumerate;
pub mod error;
pub mod galois;
pub mod pxmod;

pub use error::{Error, Result};
