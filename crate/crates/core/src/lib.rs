//! Exact engine for Temperley-Lieb-Jones and walled Brauer diagram categories.

pub mod brauer;
pub mod braid;
pub mod cli;
pub mod diagrams;
pub mod error;
pub mod lab;
pub mod linalg;
pub mod scalars;
pub mod tl;
pub mod verify;

pub use error::{Error, Result};
pub use scalars::{Ring, Scalar};
