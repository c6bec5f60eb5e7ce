//! Diagram types, the composition kernel and basis enumeration.

mod compose;
mod diagram;
mod engine;
mod enumerate;
mod json;
mod params;
mod vector;

pub use compose::{compose_diagrams, Composite};
pub use diagram::{parse_word, plain_word, word_string, ArcKind, Diagram, Flavor, Letter, Sign, Word};
pub use engine::Engine;
pub use enumerate::{enumerate_brauer_basis, enumerate_matchings, enumerate_otl_basis, enumerate_tl_basis, hom_basis, is_balanced};
pub use json::{diagram_from_json, diagram_to_json, vector_from_json, vector_to_json};
pub use params::EvalParams;
pub use vector::{DiagramVector, Shape};
