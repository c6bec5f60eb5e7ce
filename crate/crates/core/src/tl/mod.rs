//! Temperley–Lieb engine: projectors, braiding, traces and filtrations.

mod filtration;
mod jw;
mod kauffman;
mod trace;
mod zigzag;

pub use filtration::{catalan, cup_filtration_report, lopsided_filtration_report, FiltrationReport, Layer};
pub(crate) use filtration::{layer_algebra, product_table};
pub use jw::{check_projector, jones_wenzl, jones_wenzl_closed_form_infinity, recursion_numbers, JwCheck};
pub use kauffman::{braid_image, crossing, kauffman_delta, kauffman_engine, kauffman_resolve, kauffman_ring};
pub use trace::{end_algebra_with_trace, quantum_trace, trace_vector, Closure};
pub use zigzag::{zigzag_scalars, ZigzagReport};
