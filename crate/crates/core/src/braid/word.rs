use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::perm::Permutation;
use crate::error::{Error, Result};

/// A word in the Artin generators of the braid group on `n` strands.
///
/// Entry `+i` is σ_i and `-i` is σ_i⁻¹ (1-based). The word `[g1, .., gk]`
/// denotes the product g1·g2·…·gk, which acts bottom to top with `gk`
/// applied first.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct BraidWord {
    pub n: usize,
    pub gens: Vec<i64>,
}

impl BraidWord {
    pub fn new(n: usize, gens: Vec<i64>) -> Result<BraidWord> {
        for &g in &gens {
            let i = g.unsigned_abs() as usize;
            if g == 0 || i >= n {
                return Err(Error::IndexOutOfRange { index: i, limit: n.saturating_sub(1) });
            }
        }
        Ok(BraidWord { n, gens })
    }

    pub fn empty(n: usize) -> BraidWord {
        BraidWord { n, gens: vec![] }
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    /// Product `self · other`.
    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.n != other.n {
            return Err(Error::SizeMismatch(format!("braids on {} and {} strands", self.n, other.n)));
        }
        let mut gens = self.gens.clone();
        gens.extend(&other.gens);
        Ok(BraidWord { n: self.n, gens })
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord { n: self.n, gens: self.gens.iter().rev().map(|g| -g).collect() }
    }

    /// Same word viewed on `n` strands.
    pub fn widen(&self, n: usize) -> Result<BraidWord> {
        BraidWord::new(n, self.gens.clone())
    }

    /// Largest generator index used, 0 for the empty word.
    pub fn support(&self) -> usize {
        self.gens.iter().map(|g| g.unsigned_abs() as usize).max().unwrap_or(0)
    }

    pub fn permutation(&self) -> Permutation {
        self.gens
            .iter()
            .fold(Permutation::identity(self.n), |acc, &g| acc.compose(&Permutation::adjacent(self.n, g.unsigned_abs() as usize)))
    }

    /// Follows the strands bottom to top and records every crossing.
    pub fn crossing_data(&self) -> CrossingData {
        // at[p] = bottom position of the strand currently at position p
        let mut at: Vec<usize> = (0..self.n).collect();
        let mut pairs: BTreeMap<(usize, usize), PairCrossings> = BTreeMap::new();
        for &g in self.gens.iter().rev() {
            let i = g.unsigned_abs() as usize;
            let (left, right) = (at[i - 1], at[i]);
            // σ_i⁺ carries the left strand over the right one.
            let over = if g > 0 { left } else { right };
            let key = (left.min(right), left.max(right));
            let e = pairs.entry(key).or_default();
            e.count += 1;
            e.lower_over += usize::from(over == key.0);
            at.swap(i - 1, i);
        }
        let mut img = vec![0; self.n];
        for (p, &s) in at.iter().enumerate() {
            img[s] = p;
        }
        let permutation = Permutation::new(img).expect("strand tracking yields a bijection");
        debug_assert_eq!(permutation, self.permutation());
        CrossingData { permutation, pairs }
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return write!(f, "ε");
        }
        let parts: Vec<String> = self
            .gens
            .iter()
            .map(|&g| if g > 0 { format!("s{g}") } else { format!("s{}^-1", -g) })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Crossings between one pair of strands, labelled by bottom position.
#[derive(Clone, Copy, Default, PartialEq, Eq, Debug, Serialize)]
pub struct PairCrossings {
    pub count: usize,
    /// How many of those crossings have the lower-numbered strand on top.
    pub lower_over: usize,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CrossingData {
    pub permutation: Permutation,
    /// Keyed by 0-based bottom positions `(a, b)` with `a < b`.
    pub pairs: BTreeMap<(usize, usize), PairCrossings>,
}

impl CrossingData {
    pub fn total(&self) -> usize {
        self.pairs.values().map(|p| p.count).sum()
    }
}
