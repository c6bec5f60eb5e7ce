//! Exact linear algebra over scalar rings.

mod algebra;
mod matrix;
pub mod modp;
mod spoly;

pub use algebra::{FinDimAlgebra, Products};
pub use matrix::Matrix;
pub use spoly::{charpoly, SPoly};
