//! Sparse multivariate polynomials with signed exponents.
//!
//! Terms live in a `BTreeMap` keyed by exponent vectors, so the map order is
//! lexicographic and the leading term under lex order is the last entry.
//! Zero coefficients are never stored, which makes the representation
//! canonical.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Coefficient domain of a [`MPoly`]. Every implementor is a field.
pub trait Coeff: Clone + PartialEq + Eq + std::fmt::Debug {
    fn is_zero(&self) -> bool;
    fn one_like(&self) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Option<Self>;
}

impl Coeff for BigRational {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn one_like(&self) -> Self {
        BigRational::one()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}

/// Residue modulo a prime `p`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash, PartialOrd, Ord)]
pub struct Fp {
    pub value: u64,
    pub p: u64,
}

impl Fp {
    pub fn new(value: i128, p: u64) -> Self {
        let m = p as i128;
        Fp { value: (((value % m) + m) % m) as u64, p }
    }

    pub fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Fp { value: 1 % self.p, p: self.p };
        while e > 0 {
            if e & 1 == 1 {
                acc = Coeff::mul(&acc, &base);
            }
            base = Coeff::mul(&base, &base);
            e >>= 1;
        }
        acc
    }
}

impl Coeff for Fp {
    fn is_zero(&self) -> bool {
        self.value == 0
    }
    fn one_like(&self) -> Self {
        Fp { value: 1 % self.p, p: self.p }
    }
    fn add(&self, other: &Self) -> Self {
        Fp { value: ((self.value as u128 + other.value as u128) % self.p as u128) as u64, p: self.p }
    }
    fn mul(&self, other: &Self) -> Self {
        Fp { value: ((self.value as u128 * other.value as u128) % self.p as u128) as u64, p: self.p }
    }
    fn neg(&self) -> Self {
        Fp { value: (self.p - self.value) % self.p, p: self.p }
    }
    fn inv(&self) -> Option<Self> {
        if self.value == 0 {
            None
        } else {
            // Fermat; p is prime.
            Some(self.pow(self.p - 2))
        }
    }
}

pub type Monomial = Vec<i64>;

#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct MPoly<C: Coeff> {
    nvars: usize,
    terms: BTreeMap<Monomial, C>,
}

impl<C: Coeff> MPoly<C> {
    pub fn zero(nvars: usize) -> Self {
        MPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: C) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn monomial(exps: Monomial, c: C) -> Self {
        let mut p = Self::zero(exps.len());
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, C)>) -> Self {
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            debug_assert_eq!(m.len(), nvars);
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, C> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Returns the coefficient if the polynomial is a constant (possibly zero).
    pub fn as_constant(&self) -> Option<Option<&C>> {
        match self.terms.len() {
            0 => Some(None),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.iter().all(|&e| e == 0).then_some(Some(c))
            }
            _ => None,
        }
    }

    fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let s = existing.add(&c);
                if s.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = s;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        MPoly { nvars: self.nvars, terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        MPoly { nvars: self.nvars, terms: self.terms.iter().map(|(m, x)| (m.clone(), x.mul(c))).collect() }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        let mut out = Self::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(add_exps(m1, m2)?, c1.mul(c2));
            }
        }
        Ok(out)
    }

    pub fn shift(&self, by: &[i64]) -> Result<Self> {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            terms.insert(add_exps(m, by)?, c.clone());
        }
        Ok(MPoly { nvars: self.nvars, terms })
    }

    /// Per-variable minimum exponent (zeros for the zero polynomial).
    pub fn min_exps(&self) -> Monomial {
        let mut mins = vec![0i64; self.nvars];
        for (k, m) in self.terms.keys().enumerate() {
            for (i, &e) in m.iter().enumerate() {
                if k == 0 || e < mins[i] {
                    mins[i] = e;
                }
            }
        }
        mins
    }

    pub fn has_negative_exponent(&self) -> bool {
        self.terms.keys().any(|m| m.iter().any(|&e| e < 0))
    }

    /// Exact quotient `self / divisor` treating both as Laurent polynomials.
    /// Returns `None` when the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Self) -> Result<Option<Self>> {
        if divisor.is_zero() {
            return Ok(None);
        }
        if self.is_zero() {
            return Ok(Some(Self::zero(self.nvars)));
        }
        let a_shift: Vec<i64> = self.min_exps().iter().map(|e| -e).collect();
        let b_shift: Vec<i64> = divisor.min_exps().iter().map(|e| -e).collect();
        let mut rem = self.shift(&a_shift)?;
        let b = divisor.shift(&b_shift)?;
        let (lm, lc) = b.terms.iter().next_back().map(|(m, c)| (m.clone(), c.clone())).unwrap();
        let lc_inv = lc.inv().expect("nonzero coefficient in a field");
        let mut quot = Self::zero(self.nvars);
        while let Some((m, c)) = rem.terms.iter().next_back().map(|(m, c)| (m.clone(), c.clone())) {
            let qm: Monomial = m.iter().zip(&lm).map(|(a, b)| a - b).collect();
            if qm.iter().any(|&e| e < 0) {
                return Ok(None);
            }
            let qc = c.mul(&lc_inv);
            let t = Self::monomial(qm.clone(), qc.clone());
            rem = rem.sub(&t.mul(&b)?);
            quot.add_term(qm, qc);
        }
        // quot * b = a_shifted, so a / divisor = quot * x^(b_shift - a_shift)
        let back: Vec<i64> = b_shift.iter().zip(&a_shift).map(|(b, a)| b - a).collect();
        Ok(Some(quot.shift(&back)?))
    }
}

pub fn add_exps(a: &[i64], b: &[i64]) -> Result<Monomial> {
    a.iter().zip(b).map(|(x, y)| x.checked_add(*y).ok_or(Error::ExponentOverflow)).collect()
}
