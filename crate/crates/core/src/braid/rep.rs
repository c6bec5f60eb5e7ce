//! Lawrence–Krammer representation over laurent(q,t), used as an exact
//! equality test for braid words. It is faithful (Bigelow, Krammer), so
//! two words are equal in the braid group iff their matrices agree.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use super::word::BraidWord;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalars::{Ring, Scalar};

pub fn lk_ring() -> Ring {
    Ring::laurent(&["q", "t"])
}

/// Index of the basis vector x_{j,k}, `1 <= j < k <= n`.
fn pair_index(n: usize, j: usize, k: usize) -> usize {
    debug_assert!(1 <= j && j < k && k <= n);
    (j - 1) * (2 * n - j) / 2 + (k - j - 1)
}

/// Matrix of σ_i (1-based) on the basis x_{j,k}; column (j,k) holds the
/// image of x_{j,k}.
pub fn lk_generator(n: usize, i: usize) -> Result<Matrix> {
    if i == 0 || i >= n {
        return Err(Error::IndexOutOfRange { index: i, limit: n.saturating_sub(1) });
    }
    let r = lk_ring();
    let q = r.var("q")?;
    let t = r.var("t")?;
    let one = r.one();
    let q2_q = q.try_mul(&q)?.try_sub(&q)?;
    let one_q = one.try_sub(&q)?;
    let dim = n * (n - 1) / 2;
    let mut m = Matrix::zeros(&r, dim, dim);
    let put = |m: &mut Matrix, row: (usize, usize), col: usize, v: Scalar| -> Result<()> {
        let idx = pair_index(n, row.0, row.1);
        let cur = m.get(idx, col).try_add(&v)?;
        m.set(idx, col, cur);
        Ok(())
    };
    for j in 1..n {
        for k in j + 1..=n {
            let col = pair_index(n, j, k);
            if i != j - 1 && i != j && i != k - 1 && i != k {
                put(&mut m, (j, k), col, one.clone())?;
            } else if i == j - 1 {
                put(&mut m, (i, k), col, q.clone())?;
                put(&mut m, (i, j), col, q2_q.clone())?;
                put(&mut m, (j, k), col, one_q.clone())?;
            } else if i == j && i != k - 1 {
                put(&mut m, (j + 1, k), col, one.clone())?;
            } else if i == k - 1 && i != j {
                put(&mut m, (j, i), col, q.clone())?;
                put(&mut m, (j, k), col, one_q.clone())?;
                put(&mut m, (i, k), col, q2_q.try_mul(&t)?.neg())?;
            } else if i == k {
                put(&mut m, (j, k + 1), col, one.clone())?;
            } else {
                // i == j == k - 1
                put(&mut m, (j, k), col, t.try_mul(&q)?.try_mul(&q)?.neg())?;
            }
        }
    }
    Ok(m)
}

struct Generators {
    pos: Vec<Matrix>,
    neg: Vec<Matrix>,
}

fn generators(n: usize) -> Result<Arc<Generators>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Generators>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(g) = cache.lock().unwrap().get(&n) {
        return Ok(g.clone());
    }
    let mut pos = Vec::new();
    let mut neg = Vec::new();
    for i in 1..n {
        let m = lk_generator(n, i)?;
        let inv = m.inverse()?;
        debug_assert!(m.mul(&inv)?.is_identity());
        pos.push(m);
        neg.push(inv);
    }
    let g = Arc::new(Generators { pos, neg });
    cache.lock().unwrap().insert(n, g.clone());
    Ok(g)
}

/// Image of a braid word: the product of generator matrices in word order.
pub fn lk_matrix(w: &BraidWord) -> Result<Matrix> {
    let dim = w.n * w.n.saturating_sub(1) / 2;
    let mut acc = Matrix::identity(&lk_ring(), dim);
    if w.n < 2 {
        return Ok(acc);
    }
    let g = generators(w.n)?;
    for &x in &w.gens {
        let i = x.unsigned_abs() as usize - 1;
        let m = if x > 0 { &g.pos[i] } else { &g.neg[i] };
        acc = acc.mul(m)?;
    }
    Ok(acc)
}

pub fn braid_equal(a: &BraidWord, b: &BraidWord) -> Result<bool> {
    if a.n != b.n {
        return Err(Error::SizeMismatch(format!("braids on {} and {} strands", a.n, b.n)));
    }
    if a.permutation() != b.permutation() {
        return Ok(false);
    }
    Ok(lk_matrix(a)? == lk_matrix(b)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, g: &[i64]) -> BraidWord {
        BraidWord::new(n, g.to_vec()).unwrap()
    }

    #[test]
    fn pair_indices_are_dense() {
        let n = 5;
        let mut seen = vec![];
        for j in 1..n {
            for k in j + 1..=n {
                seen.push(pair_index(n, j, k));
            }
        }
        assert_eq!(seen, (0..10).collect::<Vec<_>>());
    }

    #[test]
    fn relations_hold() {
        for n in 2..=5 {
            for i in 1..n {
                assert!(braid_equal(&w(n, &[i as i64, -(i as i64)]), &BraidWord::empty(n)).unwrap());
                if i + 1 < n {
                    let (a, b) = (i as i64, i as i64 + 1);
                    assert!(braid_equal(&w(n, &[a, b, a]), &w(n, &[b, a, b])).unwrap());
                }
                for k in i + 2..n {
                    let (a, b) = (i as i64, k as i64);
                    assert!(braid_equal(&w(n, &[a, b]), &w(n, &[b, a])).unwrap());
                }
            }
        }
    }

    #[test]
    fn distinguishes_inverse() {
        assert!(!braid_equal(&w(2, &[1]), &w(2, &[-1])).unwrap());
        assert!(!braid_equal(&w(3, &[1, 1]), &BraidWord::empty(3)).unwrap());
        assert!(!lk_matrix(&w(3, &[1, 1])).unwrap().is_identity());
    }
}
