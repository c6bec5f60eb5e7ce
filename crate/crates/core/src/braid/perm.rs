use std::fmt;

use crate::error::{Error, Result};

/// A permutation of `{0..n}` stored as its image array. `img[p]` is the top
/// position reached by the strand that starts at bottom position `p`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Permutation {
    img: Vec<usize>,
}

impl Permutation {
    pub fn new(img: Vec<usize>) -> Result<Permutation> {
        let mut seen = vec![false; img.len()];
        for &x in &img {
            if x >= img.len() || seen[x] {
                return Err(Error::InvalidArgument(format!("{img:?} is not a permutation")));
            }
            seen[x] = true;
        }
        Ok(Permutation { img })
    }

    /// From 1-based images, as written in the CLI.
    pub fn from_one_based(img: &[usize]) -> Result<Permutation> {
        if img.contains(&0) {
            return Err(Error::InvalidArgument("permutation images are 1-based".into()));
        }
        Permutation::new(img.iter().map(|x| x - 1).collect())
    }

    pub fn identity(n: usize) -> Permutation {
        Permutation { img: (0..n).collect() }
    }

    /// Swap of positions `i-1` and `i` (the image of σ_i), 1-based `i`.
    pub fn adjacent(n: usize, i: usize) -> Permutation {
        let mut img: Vec<usize> = (0..n).collect();
        img.swap(i - 1, i);
        Permutation { img }
    }

    pub fn len(&self) -> usize {
        self.img.len()
    }

    pub fn is_empty(&self) -> bool {
        self.img.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.img
    }

    pub fn apply(&self, p: usize) -> usize {
        self.img[p]
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation { img: other.img.iter().map(|&p| self.img[p]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.img.len()];
        for (p, &q) in self.img.iter().enumerate() {
            inv[q] = p;
        }
        Permutation { img: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(p, &q)| p == q)
    }

    /// Number of cycles, fixed points included.
    pub fn cycles(&self) -> usize {
        let mut seen = vec![false; self.img.len()];
        let mut count = 0;
        for s in 0..self.img.len() {
            if seen[s] {
                continue;
            }
            count += 1;
            let mut p = s;
            while !seen[p] {
                seen[p] = true;
                p = self.img[p];
            }
        }
        count
    }

    /// All permutations of `n` in lexicographic order of image arrays.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut cur: Vec<usize> = (0..n).collect();
        let mut out = vec![Permutation { img: cur.clone() }];
        loop {
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else { break };
            let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
            cur.swap(i, j);
            cur[i + 1..].reverse();
            out.push(Permutation { img: cur.clone() });
        }
        out
    }

    /// Drops the last point, which must be fixed.
    pub fn restrict(&self) -> Option<Permutation> {
        let n = self.img.len();
        (n > 0 && self.img[n - 1] == n - 1).then(|| Permutation { img: self.img[..n - 1].to_vec() })
    }

    pub fn extend(&self, n: usize) -> Permutation {
        let mut img = self.img.clone();
        img.extend(self.img.len()..n);
        Permutation { img }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.img.iter().map(|x| (x + 1).to_string()).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_and_inverses() {
        let all = Permutation::all(4);
        assert_eq!(all.len(), 24);
        for p in &all {
            assert!(p.compose(&p.inverse()).is_identity());
        }
        assert_eq!(Permutation::identity(4).cycles(), 4);
        assert_eq!(Permutation::new(vec![1, 2, 0]).unwrap().cycles(), 1);
        assert!(Permutation::new(vec![0, 0]).is_err());
    }
}
