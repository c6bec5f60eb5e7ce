//! Canonical positive lifts of permutations and the s⁻¹t factorization.

use serde::Serialize;

use super::perm::Permutation;
use super::word::BraidWord;
use crate::error::{Error, Result};

/// Positive word σ_a σ_{a+1} … σ_b (empty when `a > b`).
fn ascending(a: usize, b: usize) -> Vec<i64> {
    (a..=b).map(|i| i as i64).collect()
}

/// Negative word σ_b⁻¹ σ_{b-1}⁻¹ … σ_a⁻¹ (empty when `a > b`).
fn descending_inverse(a: usize, b: usize) -> Vec<i64> {
    (a..=b).rev().map(|i| -(i as i64)).collect()
}

/// The factors w_{n-1}, …, w_1 of the unique decomposition
/// `w = w_{n-1} ⋯ w_1`, listed top factor first. `w_j` is recorded as
/// `Some(i)` for σ_i σ_{i+1} ⋯ σ_j and `None` for the trivial factor.
pub fn canonical_factors(w: &Permutation) -> Vec<Option<usize>> {
    let mut cur = w.clone();
    let mut out = Vec::new();
    for m in (2..=w.len()).rev() {
        let i = cur.apply(m - 1) + 1;
        if i == m {
            out.push(None);
        } else {
            out.push(Some(i));
            let f = (i..m).fold(Permutation::identity(m), |acc, k| acc.compose(&Permutation::adjacent(m, k)));
            cur = f.inverse().compose(&cur);
        }
        cur = cur.restrict().expect("top factor accounts for the last strand");
    }
    out
}

/// The positive braid word `w_{n-1} ⋯ w_1` lifting `w`.
pub fn permutation_to_braid(w: &Permutation) -> BraidWord {
    let n = w.len();
    let mut gens = Vec::new();
    for (idx, f) in canonical_factors(w).into_iter().enumerate() {
        let j = n - 1 - idx;
        if let Some(i) = f {
            gens.extend(ascending(i, j));
        }
    }
    BraidWord { n, gens }
}

/// `(u, j, v)` with `s⁻¹t = u σ_{n-1}^j v` and `u`, `v` on the first
/// `n - 1` strands.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Factorization {
    pub u: BraidWord,
    pub exponent: i64,
    pub v: BraidWord,
}

impl Factorization {
    pub fn product(&self) -> BraidWord {
        let mid = if self.exponent == 0 {
            BraidWord::empty(self.u.n)
        } else {
            BraidWord { n: self.u.n, gens: vec![self.exponent * (self.u.n as i64 - 1)] }
        };
        BraidWord { n: self.u.n, gens: [&self.u.gens[..], &mid.gens[..], &self.v.gens[..]].concat() }
    }
}

/// Splits off the top factor: returns `(i, remainder)` with
/// `w = (σ_i ⋯ σ_{n-1}) · remainder` and the remainder fixing strand `n`.
fn split_top(w: &Permutation) -> (usize, BraidWord) {
    let n = w.len();
    let i = w.apply(n - 1) + 1;
    let f = (i..n).fold(Permutation::identity(n), |acc, k| acc.compose(&Permutation::adjacent(n, k)));
    let rest = f.inverse().compose(w);
    let word = permutation_to_braid(&rest.restrict().expect("fixes the last strand"));
    (i, BraidWord { n, gens: word.gens })
}

pub fn factor_lemma(s: &Permutation, t: &Permutation) -> Result<Factorization> {
    let n = s.len();
    if t.len() != n {
        return Err(Error::SizeMismatch(format!("permutations of {} and {} points", n, t.len())));
    }
    if s == t || n < 2 {
        return Ok(Factorization { u: BraidWord::empty(n), exponent: 0, v: BraidWord::empty(n) });
    }
    let (i, s_rest) = split_top(s);
    let (j, t_rest) = split_top(t);
    let s_inv = s_rest.inverse().gens;
    let (u, exponent, v) = if i == j {
        ([&s_inv[..], &t_rest.gens[..]].concat(), 0, vec![])
    } else if i < j {
        let u = [&s_inv[..], &ascending(j - 1, n - 2)[..]].concat();
        let v = [&descending_inverse(i, n - 2)[..], &t_rest.gens[..]].concat();
        (u, -1, v)
    } else {
        let u = [&s_inv[..], &ascending(j, n - 2)[..]].concat();
        let v = [&descending_inverse(i - 1, n - 2)[..], &t_rest.gens[..]].concat();
        (u, 1, v)
    };
    Ok(Factorization { u: BraidWord { n, gens: u }, exponent, v: BraidWord { n, gens: v } })
}

/// For distinct `s`, `t`: the largest factor index `k` at which the
/// canonical factorizations differ, together with `s⁻¹t`. The quotient
/// fixes every point above `k + 1` and moves point `k + 1`.
pub fn top_difference(s: &Permutation, t: &Permutation) -> Option<(usize, Permutation)> {
    let n = s.len();
    let fs = canonical_factors(s);
    let ft = canonical_factors(t);
    let idx = fs.iter().zip(&ft).position(|(a, b)| a != b)?;
    Some((n - 1 - idx, s.inverse().compose(t)))
}
