use num_integer::Roots;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::matrix::Matrix;
use super::modp;
use super::spoly::charpoly;
use crate::error::{Error, Result};
use crate::scalars::{Ring, Scalar};

/// Sparse structure constants: `products[i][j]` lists `(k, c)` with
/// `b_i b_j = Σ c b_k`.
pub type Products = Vec<Vec<Vec<(usize, Scalar)>>>;

/// Exhaustive associativity check up to this dimension; sampled above.
const EXHAUSTIVE_LIMIT: usize = 64;
const SAMPLES: usize = 2000;

/// A finite-dimensional associative algebra given by structure constants.
#[derive(Clone, Debug)]
pub struct FinDimAlgebra {
    ring: Ring,
    labels: Vec<String>,
    products: Products,
    unit: Option<Vec<Scalar>>,
    trace: Option<Vec<Scalar>>,
}

impl FinDimAlgebra {
    /// Validates shapes and rings, then checks associativity and the unit
    /// laws.
    pub fn new(ring: Ring, labels: Vec<String>, products: Products, unit: Option<Vec<Scalar>>) -> Result<FinDimAlgebra> {
        let d = labels.len();
        if products.len() != d || products.iter().any(|r| r.len() != d) {
            return Err(Error::SizeMismatch(format!("structure constants for dimension {d}")));
        }
        for (k, c) in products.iter().flatten().flatten() {
            if *k >= d {
                return Err(Error::IndexOutOfRange { index: *k, limit: d });
            }
            if c.ring() != ring {
                return Err(Error::RingMismatch(ring.to_string(), c.ring().to_string()));
            }
        }
        let a = FinDimAlgebra { ring, labels, products, unit, trace: None };
        a.check_associative()?;
        if let Some(u) = &a.unit {
            if u.len() != d {
                return Err(Error::SizeMismatch("unit vector".into()));
            }
            for i in 0..d {
                let b = a.basis_vector(i);
                if a.mul(u, &b)? != b || a.mul(&b, u)? != b {
                    return Err(Error::InvalidArgument(format!("unit law fails on {}", a.labels[i])));
                }
            }
        }
        Ok(a)
    }

    /// Like [`FinDimAlgebra::new`] with the unit given as a basis index.
    pub fn from_sparse(ring: Ring, labels: Vec<String>, products: Products, unit_index: Option<usize>) -> Result<FinDimAlgebra> {
        let d = labels.len();
        let unit = unit_index.map(|u| (0..d).map(|i| if i == u { ring.one() } else { ring.zero() }).collect());
        FinDimAlgebra::new(ring, labels, products, unit)
    }

    pub fn with_trace(mut self, trace: Vec<Scalar>) -> Result<FinDimAlgebra> {
        if trace.len() != self.dim() {
            return Err(Error::SizeMismatch("trace functional".into()));
        }
        self.trace = Some(trace);
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unit(&self) -> Option<&[Scalar]> {
        self.unit.as_deref()
    }

    pub fn trace(&self) -> Option<&[Scalar]> {
        self.trace.as_deref()
    }

    pub fn product(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.products[i][j]
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        (0..self.dim()).map(|k| if k == i { self.ring.one() } else { self.ring.zero() }).collect()
    }

    pub fn zero_vector(&self) -> Vec<Scalar> {
        vec![self.ring.zero(); self.dim()]
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vec<Scalar>> {
        let mut out = self.zero_vector();
        for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in y.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                let ab = a.try_mul(b)?;
                for (k, c) in &self.products[i][j] {
                    out[*k] = out[*k].try_add(&ab.try_mul(c)?)?;
                }
            }
        }
        Ok(out)
    }

    fn check_triple(&self, i: usize, j: usize, k: usize) -> Result<()> {
        let (bi, bj, bk) = (self.basis_vector(i), self.basis_vector(j), self.basis_vector(k));
        let left = self.mul(&self.mul(&bi, &bj)?, &bk)?;
        let right = self.mul(&bi, &self.mul(&bj, &bk)?)?;
        if left != right {
            return Err(Error::InvalidArgument(format!(
                "associativity fails on ({}, {}, {})",
                self.labels[i], self.labels[j], self.labels[k]
            )));
        }
        Ok(())
    }

    fn check_associative(&self) -> Result<()> {
        let d = self.dim();
        if d <= EXHAUSTIVE_LIMIT {
            for i in 0..d {
                for j in 0..d {
                    for k in 0..d {
                        self.check_triple(i, j, k)?;
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(d as u64);
            for _ in 0..SAMPLES {
                self.check_triple(rng.gen_range(0..d), rng.gen_range(0..d), rng.gen_range(0..d))?;
            }
        }
        Ok(())
    }

    /// Matrix of `y ↦ x y` in the basis.
    pub fn left_matrix(&self, x: &[Scalar]) -> Result<Matrix> {
        let d = self.dim();
        let mut m = Matrix::zeros(&self.ring, d, d);
        for j in 0..d {
            let col = self.mul(x, &self.basis_vector(j))?;
            for (i, v) in col.into_iter().enumerate() {
                m.set(i, j, v);
            }
        }
        Ok(m)
    }

    /// τ_reg(b_i) = trace of left multiplication by b_i.
    pub fn regular_trace(&self) -> Result<Vec<Scalar>> {
        (0..self.dim())
            .map(|i| {
                let mut acc = self.ring.zero();
                for k in 0..self.dim() {
                    for (l, c) in &self.products[i][k] {
                        if *l == k {
                            acc = acc.try_add(c)?;
                        }
                    }
                }
                Ok(acc)
            })
            .collect()
    }

    /// Gram matrix `G[i][j] = τ(b_i b_j)`.
    pub fn gram(&self, tau: &[Scalar]) -> Result<Matrix> {
        let d = self.dim();
        let mut g = Matrix::zeros(&self.ring, d, d);
        for i in 0..d {
            for j in 0..d {
                let mut acc = self.ring.zero();
                for (k, c) in &self.products[i][j] {
                    if !tau[*k].is_zero() {
                        acc = acc.try_add(&c.try_mul(&tau[*k])?)?;
                    }
                }
                g.set(i, j, acc);
            }
        }
        Ok(g)
    }

    /// `{x : τ(x y) = 0 for all y}` for a given functional.
    pub fn trace_form_kernel(&self, tau: &[Scalar]) -> Result<Vec<Vec<Scalar>>> {
        if !self.ring.is_field() {
            return Err(Error::NotAField(self.ring.to_string()));
        }
        self.gram(tau)?.transpose().kernel()
    }

    /// Jacobson radical, computed as the kernel of the regular trace form.
    /// This characterization needs characteristic zero.
    pub fn radical(&self) -> Result<Vec<Vec<Scalar>>> {
        if !self.ring.is_field() {
            return Err(Error::NotAField(self.ring.to_string()));
        }
        if self.ring.characteristic() != 0 {
            return Err(Error::Unsupported(self.ring.to_string(), "trace-form radical needs characteristic zero".into()));
        }
        self.trace_form_kernel(&self.regular_trace()?)
    }

    /// Kernel of the attached trace pairing.
    pub fn trace_radical(&self) -> Result<Vec<Vec<Scalar>>> {
        let tau = self.trace.clone().ok_or(Error::TraceMissing)?;
        self.trace_form_kernel(&tau)
    }

    pub fn commutator(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vec<Scalar>> {
        let a = self.mul(x, y)?;
        let b = self.mul(y, x)?;
        a.iter().zip(&b).map(|(p, q)| p.try_sub(q)).collect()
    }

    /// Basis of the center, by intersecting centralizers of basis elements.
    pub fn center(&self) -> Result<Vec<Vec<Scalar>>> {
        let d = self.dim();
        let mut k: Vec<Vec<Scalar>> = (0..d).map(|i| self.basis_vector(i)).collect();
        for j in 0..d {
            if k.is_empty() {
                break;
            }
            let bj = self.basis_vector(j);
            let cols: Vec<Vec<Scalar>> = k.iter().map(|x| self.commutator(x, &bj)).collect::<Result<_>>()?;
            if cols.iter().all(|c| c.iter().all(|x| x.is_zero())) {
                continue;
            }
            let m = Matrix::from_fn(&self.ring, d, k.len(), |r, c| cols[c][r].clone());
            let ker = m.kernel()?;
            k = ker
                .iter()
                .map(|coef| {
                    let mut v = self.zero_vector();
                    for (c, x) in coef.iter().zip(&k) {
                        if c.is_zero() {
                            continue;
                        }
                        for (vi, xi) in v.iter_mut().zip(x) {
                            *vi = vi.try_add(&c.try_mul(xi)?)?;
                        }
                    }
                    Ok(v)
                })
                .collect::<Result<_>>()?;
        }
        Ok(k)
    }

    /// Upper bound on the center dimension from arithmetic mod a large
    /// prime; `None` outside the rationals.
    fn center_dim_bound(&self) -> Option<usize> {
        if self.ring != Ring::Rational {
            return None;
        }
        let d = self.dim();
        let mut e = modp::Echelon::new(d);
        for j in 0..d {
            // row l of the map x ↦ [x, b_j], as a functional in x
            let mut rows = vec![vec![0u64; d]; d];
            for i in 0..d {
                for (l, c) in &self.products[i][j] {
                    let v = modp::reduce(&c.to_rational()?)?;
                    rows[*l][i] = (rows[*l][i] + v) % modp::P;
                }
                for (l, c) in &self.products[j][i] {
                    let v = modp::reduce(&c.to_rational()?)?;
                    rows[*l][i] = (rows[*l][i] + modp::P - v) % modp::P;
                }
            }
            for r in rows {
                if r.iter().any(|&x| x != 0) {
                    e.insert(r);
                }
            }
            if e.rank() + 1 >= d {
                break;
            }
        }
        Some(d - e.rank())
    }

    /// Whether `x^k = 0` for some `k ≤ dim + 1`.
    pub fn is_nilpotent(&self, x: &[Scalar]) -> Result<bool> {
        let mut p = x.to_vec();
        for _ in 0..=self.dim() {
            if p.iter().all(|v| v.is_zero()) {
                return Ok(true);
            }
            p = self.mul(&p, x)?;
        }
        Ok(p.iter().all(|v| v.is_zero()))
    }

    /// Sizes of the simple matrix blocks of a semisimple algebra over a
    /// field of characteristic zero, sorted ascending.
    ///
    /// A generic central element acts on the block `Mat_s` by a scalar with
    /// multiplicity `s²`, so the square-free decomposition of the
    /// characteristic polynomial of its left multiplication reads off the
    /// block sizes. Sizes are those over the algebraic closure; a central
    /// simple block is accepted when its dimension is a perfect square.
    pub fn block_dimensions(&self, seed: u64) -> Result<Vec<usize>> {
        if !self.ring.is_field() {
            return Err(Error::NotAField(self.ring.to_string()));
        }
        let rad = self.radical()?;
        if !rad.is_empty() {
            return Err(Error::NonzeroRadical(rad.len()));
        }
        let d = self.dim();
        if d == 0 {
            return Ok(vec![]);
        }
        // A semisimple algebra is unital, so its center is at least 1-dim.
        let center = if self.center_dim_bound() == Some(1) { None } else { Some(self.center()?) };
        let r = center.as_ref().map_or(1, |c| c.len());
        if r == 1 {
            let s = d.sqrt();
            if s * s != d {
                return Err(Error::NonSplitBlock(format!("central simple algebra of dimension {d}")));
            }
            return Ok(vec![s]);
        }
        let center = center.unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..20 {
            let mut c = self.zero_vector();
            for z in &center {
                let w = self.ring.from_int(rng.gen_range(1..=97));
                for (ci, zi) in c.iter_mut().zip(z) {
                    *ci = ci.try_add(&w.try_mul(zi)?)?;
                }
            }
            let chi = charpoly(&self.left_matrix(&c)?)?;
            let parts = chi.squarefree()?;
            if parts.iter().map(|(g, _)| g.degree().unwrap()).sum::<usize>() != r {
                continue;
            }
            let mut sizes = Vec::new();
            for (g, m) in &parts {
                let s = m.sqrt();
                if s * s != *m {
                    return Err(Error::NonSplitBlock(format!("eigenvalue multiplicity {m} is not a square")));
                }
                sizes.extend(std::iter::repeat_n(s, g.degree().unwrap()));
            }
            sizes.sort_unstable();
            debug_assert_eq!(sizes.iter().map(|s| s * s).sum::<usize>(), d);
            return Ok(sizes);
        }
        Err(Error::NonSplitBlock("no separating central element found".into()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Q ⊕ Mat_2(Q) on the basis (f, E11, E12, E21, E22).
    pub(crate) fn q_plus_mat2() -> FinDimAlgebra {
        let q = Ring::Rational;
        let mut p: Products = vec![vec![vec![]; 5]; 5];
        p[0][0] = vec![(0, q.one())];
        for a in 0..2 {
            for b in 0..2 {
                for c in 0..2 {
                    for e in 0..2 {
                        if b == c {
                            p[1 + 2 * a + b][1 + 2 * c + e] = vec![(1 + 2 * a + e, q.one())];
                        }
                    }
                }
            }
        }
        let unit = vec![q.one(), q.one(), q.zero(), q.zero(), q.one()];
        FinDimAlgebra::new(q, ["f", "E11", "E12", "E21", "E22"].map(String::from).to_vec(), p, Some(unit)).unwrap()
    }

    #[test]
    fn blocks_of_q_plus_mat2() {
        let a = q_plus_mat2();
        assert!(a.radical().unwrap().is_empty());
        assert_eq!(a.center().unwrap().len(), 2);
        assert_eq!(a.block_dimensions(1).unwrap(), vec![1, 2]);
    }

    #[test]
    fn group_algebra_of_s2() {
        let q = Ring::Rational;
        let p: Products = vec![vec![vec![(0, q.one())], vec![(1, q.one())]], vec![vec![(1, q.one())], vec![(0, q.one())]]];
        let a = FinDimAlgebra::from_sparse(q, vec!["e".into(), "s".into()], p, Some(0)).unwrap();
        assert!(a.radical().unwrap().is_empty());
        assert_eq!(a.block_dimensions(7).unwrap(), vec![1, 1]);
    }

    #[test]
    fn dual_numbers_have_radical() {
        let q = Ring::Rational;
        let p: Products = vec![vec![vec![(0, q.one())], vec![(1, q.one())]], vec![vec![(1, q.one())], vec![]]];
        let a = FinDimAlgebra::from_sparse(q, vec!["1".into(), "e".into()], p, Some(0)).unwrap();
        let rad = a.radical().unwrap();
        assert_eq!(rad.len(), 1);
        assert!(a.is_nilpotent(&rad[0]).unwrap());
        assert!(matches!(a.block_dimensions(0), Err(Error::NonzeroRadical(1))));
    }

    #[test]
    fn nonassociative_rejected() {
        let q = Ring::Rational;
        // b0 b0 = b1, everything else zero except b1 b0 = b0
        let mut p: Products = vec![vec![vec![]; 2]; 2];
        p[0][0] = vec![(1, q.one())];
        p[1][0] = vec![(0, q.one())];
        assert!(FinDimAlgebra::from_sparse(q, vec!["a".into(), "b".into()], p, None).is_err());
    }
}
