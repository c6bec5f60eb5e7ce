use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use sha2::{Digest, Sha256};

use super::modp;
use crate::error::{Error, Result};
use crate::scalars::{Ring, Scalar};

/// Dense matrix with entries in one ring.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    ring: Ring,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(ring: &Ring, rows: usize, cols: usize) -> Matrix {
        Matrix { rows, cols, ring: ring.clone(), data: vec![ring.zero(); rows * cols] }
    }

    pub fn identity(ring: &Ring, n: usize) -> Matrix {
        let mut m = Matrix::zeros(ring, n, n);
        for i in 0..n {
            m.data[i * n + i] = ring.one();
        }
        m
    }

    pub fn from_rows(ring: &Ring, rows: Vec<Vec<Scalar>>) -> Result<Matrix> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(Error::SizeMismatch("ragged rows".into()));
            }
            for x in row {
                if x.ring() != *ring {
                    return Err(Error::RingMismatch(ring.to_string(), x.ring().to_string()));
                }
                data.push(x);
            }
        }
        Ok(Matrix { rows: r, cols: c, ring: ring.clone(), data })
    }

    pub fn from_fn(ring: &Ring, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Matrix {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, ring: ring.clone(), data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        debug_assert_eq!(v.ring(), self.ring);
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(&self.ring, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::SizeMismatch(format!("{}x{} times {}x{}", self.rows, self.cols, other.rows, other.cols)));
        }
        let mut out = Matrix::zeros(&self.ring, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j).try_add(&a.try_mul(b)?)?;
                        out.set(i, j, v);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.cols {
            return Err(Error::SizeMismatch(format!("{} columns, vector of {}", self.cols, v.len())));
        }
        (0..self.rows)
            .map(|i| {
                let mut acc = self.ring.zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc.try_add(&a.try_mul(b)?)?;
                    }
                }
                Ok(acc)
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..self.cols).all(|j| if i == j { self.get(i, j).is_one() } else { self.get(i, j).is_zero() }))
    }

    pub fn map(&self, f: impl Fn(&Scalar) -> Result<Scalar>) -> Result<Matrix> {
        let data: Vec<Scalar> = self.data.iter().map(f).collect::<Result<_>>()?;
        let ring = data.first().map_or_else(|| self.ring.clone(), |x| x.ring());
        Ok(Matrix { rows: self.rows, cols: self.cols, ring, data })
    }

    /// Substitutes values for the ring variables in every entry.
    pub fn evaluate(&self, assignment: &BTreeMap<String, Scalar>) -> Result<Matrix> {
        let target = assignment.values().next().map_or(Ring::Rational, |v| v.ring());
        let mut m = self.map(|x| x.evaluate(assignment))?;
        m.ring = target;
        Ok(m)
    }

    pub fn permuted(&self, row_perm: &[usize], col_perm: &[usize]) -> Matrix {
        Matrix::from_fn(&self.ring, self.rows, self.cols, |i, j| self.get(row_perm[i], col_perm[j]).clone())
    }

    fn rational_rows(&self) -> Option<Vec<Vec<BigRational>>> {
        if self.ring != Ring::Rational {
            return None;
        }
        Some((0..self.rows).map(|i| self.row(i).iter().map(|x| x.to_rational().unwrap()).collect()).collect())
    }

    pub fn rank(&self) -> Result<usize> {
        if let Some(rows) = self.rational_rows() {
            let full = self.rows.min(self.cols);
            if modp::rank_mod_p(&rows, self.cols) == Some(full) {
                return Ok(full);
            }
            return Ok(rational_rank(&rows, self.cols));
        }
        let (_, pivots) = echelon(self)?;
        Ok(pivots.len())
    }

    /// Basis of `{v : M v = 0}`. Over a domain that is not a field the
    /// vectors have entries in the ring (scaled by a common pivot).
    pub fn kernel(&self) -> Result<Vec<Vec<Scalar>>> {
        if let Some(rows) = self.rational_rows() {
            if modp::rank_mod_p(&rows, self.cols) == Some(self.cols) {
                return Ok(vec![]);
            }
            return Ok(rational_kernel(&rows, self.cols)
                .into_iter()
                .map(|v| v.into_iter().map(Scalar::Rational).collect())
                .collect());
        }
        let (red, pivots) = gauss_jordan(self)?;
        let ring = &self.ring;
        let mut out = Vec::new();
        let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
        for f in (0..self.cols).filter(|c| !pivot_cols.contains(c)) {
            let mut v = vec![ring.zero(); self.cols];
            let d = pivots.last().map_or_else(|| ring.one(), |&(r, c)| red.get(r, c).clone());
            v[f] = d;
            for &(r, c) in &pivots {
                v[c] = red.get(r, f).neg();
            }
            out.push(v);
        }
        Ok(out)
    }

    /// Determinant by fraction-free elimination.
    pub fn det(&self) -> Result<Scalar> {
        if self.rows != self.cols {
            return Err(Error::SizeMismatch("determinant of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut prev = self.ring.one();
        let mut sign = false;
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| !a.get(i, k).is_zero()) else {
                return Ok(self.ring.zero());
            };
            if p != k {
                a.swap_rows(p, k);
                sign = !sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = a.get(k, k).try_mul(a.get(i, j))?.try_sub(&a.get(i, k).try_mul(a.get(k, j))?)?.try_div(&prev)?;
                    a.set(i, j, v);
                }
                a.set(i, k, self.ring.zero());
            }
            prev = a.get(k, k).clone();
        }
        let d = if n == 0 { self.ring.one() } else { a.get(n - 1, n - 1).clone() };
        Ok(if sign { d.neg() } else { d })
    }

    /// Two-sided inverse with entries in the ring itself; errors when the
    /// determinant is not a unit.
    pub fn inverse(&self) -> Result<Matrix> {
        let n = self.rows;
        if n != self.cols {
            return Err(Error::SizeMismatch("inverse of a non-square matrix".into()));
        }
        let aug = Matrix::from_fn(&self.ring, n, 2 * n, |i, j| {
            if j < n {
                self.get(i, j).clone()
            } else if j - n == i {
                self.ring.one()
            } else {
                self.ring.zero()
            }
        });
        let (red, pivots) = gauss_jordan(&aug)?;
        if pivots.len() < n || pivots.iter().any(|&(r, c)| r != c) {
            return Err(Error::NotInvertible(self.ring.to_string()));
        }
        let d = red.get(n - 1, n - 1).clone();
        let mut out = Matrix::zeros(&self.ring, n, n);
        for i in 0..n {
            for j in 0..n {
                let v = red.get(i, n + j).try_div(&d).map_err(|_| Error::NotInvertible(self.ring.to_string()))?;
                out.set(i, j, v);
            }
        }
        Ok(out)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Row-major entry strings.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "ring": self.ring.to_string(),
            "rows": self.rows,
            "cols": self.cols,
            "entries": (0..self.rows).map(|i| self.row(i).iter().map(|x| x.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>(),
        })
    }

    /// Hex SHA-256 of the canonical entry strings, for compact printing.
    pub fn digest(&self) -> String {
        let mut h = Sha256::new();
        h.update(format!("{}x{}:{}", self.rows, self.cols, self.ring).as_bytes());
        for x in &self.data {
            h.update(x.to_string().as_bytes());
            h.update(b";");
        }
        h.finalize().iter().map(|b| format!("{b:02x}")).collect()
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = (0..self.rows).map(|i| self.row(i).iter().map(|x| x.to_string()).collect()).collect();
        let width = cells.iter().flatten().map(|s| s.chars().count()).max().unwrap_or(1);
        for row in &cells {
            let line: Vec<String> = row.iter().map(|s| format!("{s:>width$}")).collect();
            writeln!(f, "[ {} ]", line.join("  "))?;
        }
        Ok(())
    }
}

/// Fraction-free row echelon form with column skipping; returns the reduced
/// matrix and pivot positions.
fn echelon(m: &Matrix) -> Result<(Matrix, Vec<(usize, usize)>)> {
    let mut a = m.clone();
    let field = m.ring.is_field();
    let mut prev = m.ring.one();
    let mut r = 0;
    let mut pivots = Vec::new();
    for c in 0..m.cols {
        if r == m.rows {
            break;
        }
        let Some(p) = (r..m.rows).find(|&i| !a.get(i, c).is_zero()) else { continue };
        a.swap_rows(p, r);
        for i in r + 1..m.rows {
            if a.get(i, c).is_zero() && field {
                continue;
            }
            for j in c + 1..m.cols {
                let v = if field {
                    a.get(i, j).try_sub(&a.get(i, c).try_mul(a.get(r, j))?.try_div(a.get(r, c))?)?
                } else {
                    a.get(r, c).try_mul(a.get(i, j))?.try_sub(&a.get(i, c).try_mul(a.get(r, j))?)?.try_div(&prev)?
                };
                a.set(i, j, v);
            }
            a.set(i, c, m.ring.zero());
        }
        if !field {
            prev = a.get(r, c).clone();
        }
        pivots.push((r, c));
        r += 1;
    }
    Ok((a, pivots))
}

/// Reduced echelon form. Over a field pivots are 1; over a domain every
/// pivot equals the last one and the rows are a common multiple of the
/// field RREF.
fn gauss_jordan(m: &Matrix) -> Result<(Matrix, Vec<(usize, usize)>)> {
    let mut a = m.clone();
    let field = m.ring.is_field();
    let zero = m.ring.zero();
    let mut prev = m.ring.one();
    let mut r = 0;
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    for c in 0..m.cols {
        if r == m.rows {
            break;
        }
        let Some(p) = (r..m.rows).find(|&i| !a.get(i, c).is_zero()) else { continue };
        a.swap_rows(p, r);
        if field {
            let inv = a.get(r, c).try_inv()?;
            for j in c..m.cols {
                let v = a.get(r, j).try_mul(&inv)?;
                a.set(r, j, v);
            }
            for i in (0..m.rows).filter(|&i| i != r) {
                let f = a.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let v = a.get(i, j).try_sub(&f.try_mul(a.get(r, j))?)?;
                    a.set(i, j, v);
                }
            }
        } else {
            let piv = a.get(r, c).clone();
            for i in (0..m.rows).filter(|&i| i != r) {
                let f = a.get(i, c).clone();
                for j in 0..m.cols {
                    if j == c {
                        continue;
                    }
                    let v = piv.try_mul(a.get(i, j))?.try_sub(&f.try_mul(a.get(r, j))?)?.try_div(&prev)?;
                    a.set(i, j, v);
                }
                a.set(i, c, zero.clone());
            }
            prev = piv;
        }
        pivots.push((r, c));
        r += 1;
    }
    Ok((a, pivots))
}

fn integer_rows(rows: &[Vec<BigRational>]) -> Vec<Vec<BigInt>> {
    rows.iter()
        .map(|r| {
            let l = r.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            r.iter().map(|x| (x * BigRational::from_integer(l.clone())).to_integer()).collect()
        })
        .collect()
}

/// Exact rank by Bareiss elimination over the integers.
fn rational_rank(rows: &[Vec<BigRational>], cols: usize) -> usize {
    let mut a = integer_rows(rows);
    let nrows = a.len();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(p, r);
        let (head, tail) = a.split_at_mut(r + 1);
        let pivot_row = &head[r];
        for row in tail.iter_mut() {
            for j in c + 1..cols {
                row[j] = (&pivot_row[c] * &row[j] - &row[c] * &pivot_row[j]) / &prev;
            }
            row[c] = BigInt::zero();
        }
        prev = pivot_row[c].clone();
        r += 1;
    }
    r
}

/// Exact kernel over Q by Gauss-Jordan elimination.
fn rational_kernel(rows: &[Vec<BigRational>], cols: usize) -> Vec<Vec<BigRational>> {
    let mut a = rows.to_vec();
    let nrows = a.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(p, r);
        let inv = a[r][c].recip();
        for x in a[r].iter_mut().skip(c) {
            *x = &*x * &inv;
        }
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for j in c..cols {
                if !pivot_row[j].is_zero() {
                    row[j] -= &f * &pivot_row[j];
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let mut out = Vec::new();
    for f in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![BigRational::zero(); cols];
        v[f] = BigRational::one();
        for (i, &c) in pivots.iter().enumerate() {
            v[c] = -a[i][f].clone();
        }
        out.push(v);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(s: &str) -> Ring {
        s.parse().unwrap()
    }

    fn mat(r: &Ring, rows: &[&[&str]]) -> Matrix {
        Matrix::from_rows(r, rows.iter().map(|row| row.iter().map(|x| r.parse(x).unwrap()).collect()).collect()).unwrap()
    }

    fn check_kernel(m: &Matrix) {
        let k = m.kernel().unwrap();
        assert_eq!(m.rank().unwrap() + k.len(), m.cols());
        for v in &k {
            assert!(m.mul_vec(v).unwrap().iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn basic_ranks() {
        let q = Ring::Rational;
        assert_eq!(Matrix::identity(&q, 3).rank().unwrap(), 3);
        assert_eq!(Matrix::zeros(&q, 2, 2).kernel().unwrap().len(), 2);
        let l = ring("laurent:z,zs");
        let m = mat(&l, &[&["1", "z"], &["zs", "1"]]);
        assert_eq!(m.rank().unwrap(), 2);
        assert_eq!(m.det().unwrap(), l.parse("1 - z*zs").unwrap());
    }

    #[test]
    fn kernels_in_several_rings() {
        let q = Ring::Rational;
        check_kernel(&mat(&q, &[&["1", "2", "3"], &["2", "4", "6"], &["1", "0", "1"]]));
        let l = ring("laurent:d");
        check_kernel(&mat(&l, &[&["d", "1", "0"], &["1", "d^-1", "0"], &["0", "0", "0"]]));
        let f = ring("fp:2[t]");
        check_kernel(&mat(&f, &[&["t", "t^2", "1"], &["1", "t", "t"]]));
        let a = ring("algebraic:x^2-x-1");
        check_kernel(&mat(&a, &[&["x", "1"], &["x + 1", "x - 1"]]));
    }

    #[test]
    fn determinant_sign() {
        let q = Ring::Rational;
        assert_eq!(mat(&q, &[&["0", "1"], &["1", "0"]]).det().unwrap(), q.from_int(-1));
        assert_eq!(mat(&q, &[&["2", "3"], &["1", "4"]]).det().unwrap(), q.from_int(5));
    }
}
