//! Braid words, the canonical lift of permutations, and an exact equality
//! test through a faithful linear representation.

mod factor;
mod perm;
mod rep;
mod word;

pub use factor::{canonical_factors, factor_lemma, permutation_to_braid, top_difference, Factorization};
pub use perm::Permutation;
pub use rep::{braid_equal, lk_generator, lk_matrix, lk_ring};
pub use word::{BraidWord, CrossingData, PairCrossings};
