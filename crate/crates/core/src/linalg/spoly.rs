//! Dense univariate polynomials whose coefficients lie in a field ring.

use super::matrix::Matrix;
use crate::error::{Error, Result};
use crate::scalars::{Ring, Scalar};

/// Coefficients low degree first, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SPoly {
    ring: Ring,
    coeffs: Vec<Scalar>,
}

impl SPoly {
    pub fn new(ring: &Ring, mut coeffs: Vec<Scalar>) -> SPoly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        SPoly { ring: ring.clone(), coeffs }
    }

    pub fn constant(c: Scalar) -> SPoly {
        let ring = c.ring();
        SPoly::new(&ring, vec![c])
    }

    /// x - c
    pub fn linear(c: &Scalar) -> SPoly {
        SPoly::new(&c.ring(), vec![c.neg(), c.one_like()])
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, o: &SPoly) -> Result<SPoly> {
        let n = self.coeffs.len().max(o.coeffs.len());
        let z = self.ring.zero();
        let v = (0..n)
            .map(|i| self.coeffs.get(i).unwrap_or(&z).try_add(o.coeffs.get(i).unwrap_or(&z)))
            .collect::<Result<_>>()?;
        Ok(SPoly::new(&self.ring, v))
    }

    pub fn sub(&self, o: &SPoly) -> Result<SPoly> {
        self.add(&o.scale(&self.ring.from_int(-1))?)
    }

    pub fn scale(&self, c: &Scalar) -> Result<SPoly> {
        Ok(SPoly::new(&self.ring, self.coeffs.iter().map(|x| x.try_mul(c)).collect::<Result<_>>()?))
    }

    pub fn mul(&self, o: &SPoly) -> Result<SPoly> {
        if self.is_zero() || o.is_zero() {
            return Ok(SPoly::new(&self.ring, vec![]));
        }
        let mut v = vec![self.ring.zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                v[i + j] = v[i + j].try_add(&a.try_mul(b)?)?;
            }
        }
        Ok(SPoly::new(&self.ring, v))
    }

    pub fn derivative(&self) -> SPoly {
        let v = self.coeffs.iter().enumerate().skip(1).map(|(k, c)| c.try_mul(&self.ring.from_int(k as i64)).unwrap()).collect();
        SPoly::new(&self.ring, v)
    }

    pub fn divrem(&self, d: &SPoly) -> Result<(SPoly, SPoly)> {
        let dd = d.degree().ok_or_else(|| Error::NotDivisible("division by the zero polynomial".into()))?;
        let lc_inv = d.coeffs[dd].try_inv()?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((SPoly::new(&self.ring, vec![]), self.clone()));
        }
        let mut quot = vec![self.ring.zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = rem[k + dd].try_mul(&lc_inv)?;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    rem[k + j] = rem[k + j].try_sub(&c.try_mul(dc)?)?;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((SPoly::new(&self.ring, quot), SPoly::new(&self.ring, rem)))
    }

    pub fn monic(&self) -> Result<SPoly> {
        match self.coeffs.last() {
            Some(l) => self.scale(&l.try_inv()?),
            None => Ok(self.clone()),
        }
    }

    pub fn gcd(&self, o: &SPoly) -> Result<SPoly> {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.divrem(&b)?.1;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn exact_div(&self, d: &SPoly) -> Result<SPoly> {
        let (q, r) = self.divrem(d)?;
        if !r.is_zero() {
            return Err(Error::NotDivisible("polynomial division left a remainder".into()));
        }
        Ok(q)
    }

    /// Yun's square-free decomposition of a monic polynomial in
    /// characteristic zero: pairs `(g_i, i)` with `f = ∏ g_i^i`, each `g_i`
    /// square-free and pairwise coprime; trivial factors are omitted.
    pub fn squarefree(&self) -> Result<Vec<(SPoly, usize)>> {
        if self.ring.characteristic() != 0 {
            return Err(Error::Unsupported(self.ring.to_string(), "square-free decomposition".into()));
        }
        let a = self.monic()?;
        let mut out = Vec::new();
        if a.degree().unwrap_or(0) == 0 {
            return Ok(out);
        }
        let b = a.derivative();
        let c = a.gcd(&b)?;
        let mut w = a.exact_div(&c)?;
        let y = b.exact_div(&c)?;
        let mut z = y.sub(&w.derivative())?;
        let mut i = 1;
        while w.degree().unwrap_or(0) > 0 {
            let g = w.gcd(&z)?;
            w = w.exact_div(&g)?;
            let y = z.exact_div(&g)?;
            z = y.sub(&w.derivative())?;
            if g.degree().unwrap_or(0) > 0 {
                out.push((g, i));
            }
            i += 1;
        }
        Ok(out)
    }
}

/// Characteristic polynomial det(xI - M) of a square matrix over a field,
/// via reduction to Hessenberg form.
pub fn charpoly(m: &Matrix) -> Result<SPoly> {
    let ring = m.ring().clone();
    if !ring.is_field() {
        return Err(Error::NotAField(ring.to_string()));
    }
    let n = m.rows();
    if n != m.cols() {
        return Err(Error::SizeMismatch("characteristic polynomial of a non-square matrix".into()));
    }
    let mut h = m.to_rows();
    for j in 0..n.saturating_sub(2) {
        let Some(i) = (j + 1..n).find(|&i| !h[i][j].is_zero()) else { continue };
        if i != j + 1 {
            h.swap(i, j + 1);
            for row in h.iter_mut() {
                row.swap(i, j + 1);
            }
        }
        let piv_inv = h[j + 1][j].try_inv()?;
        for k in j + 2..n {
            if h[k][j].is_zero() {
                continue;
            }
            let u = h[k][j].try_mul(&piv_inv)?;
            for c in 0..n {
                let v = h[k][c].try_sub(&u.try_mul(&h[j + 1][c])?)?;
                h[k][c] = v;
            }
            for row in h.iter_mut() {
                let v = row[j + 1].try_add(&u.try_mul(&row[k])?)?;
                row[j + 1] = v;
            }
        }
    }
    // p_m = (x - h_mm) p_{m-1} - sum_i h_im (prod_{k=i+1..m} h_{k,k-1}) p_{i-1}
    let mut p: Vec<SPoly> = vec![SPoly::constant(ring.one())];
    for mm in 0..n {
        let mut next = SPoly::linear(&h[mm][mm]).mul(&p[mm])?;
        let mut prod = ring.one();
        for i in (0..mm).rev() {
            prod = prod.try_mul(&h[i + 1][i])?;
            if prod.is_zero() {
                break;
            }
            let t = h[i][mm].try_mul(&prod)?;
            next = next.sub(&p[i].scale(&t)?)?;
        }
        p.push(next);
    }
    Ok(p.pop().unwrap())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn charpoly_matches_determinant_expansion() {
        let q = Ring::Rational;
        let m = Matrix::from_rows(
            &q,
            vec![
                vec![q.from_int(2), q.from_int(1), q.from_int(0)],
                vec![q.from_int(1), q.from_int(3), q.from_int(1)],
                vec![q.from_int(0), q.from_int(1), q.from_int(4)],
            ],
        )
        .unwrap();
        let p = charpoly(&m).unwrap();
        // x^3 - 9x^2 + 24x - 18
        let want: Vec<Scalar> = [-18, 24, -9, 1].iter().map(|&c| q.from_int(c)).collect();
        assert_eq!(p.coeffs(), &want[..]);
    }

    #[test]
    fn squarefree_parts() {
        let q = Ring::Rational;
        // (x-1)^4 (x-2) (x-3)
        let l = |c| SPoly::linear(&q.from_int(c));
        let mut f = l(2).mul(&l(3)).unwrap();
        for _ in 0..4 {
            f = f.mul(&l(1)).unwrap();
        }
        let parts = f.squarefree().unwrap();
        let summary: Vec<(usize, usize)> = parts.iter().map(|(g, i)| (g.degree().unwrap(), *i)).collect();
        assert_eq!(summary, [(2, 1), (1, 4)]);
    }
}
