//! Based rings with nonnegative integer structure constants, the sl2
//! Clebsch–Gordan rings, growth dimension and the moderate-growth test.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// A based ring on labels `0..len`. `constants[i][j]` maps k to N_{ij}^k.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BasedRing {
    pub labels: Vec<String>,
    pub constants: Vec<Vec<BTreeMap<usize, u64>>>,
    pub unit: usize,
    pub dual: Vec<usize>,
    /// Pairs whose true product leaves the label range. Products through
    /// these pairs are refused.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub truncated: Vec<(usize, usize)>,
}

impl BasedRing {
    /// Checks the unit laws, that `dual` is an involution fixing the unit,
    /// the duality N_{ij}^k = N_{j*i*}^{k*} and associativity.
    pub fn new(labels: Vec<String>, constants: Vec<Vec<BTreeMap<usize, u64>>>, unit: usize, dual: Vec<usize>) -> Result<BasedRing> {
        let ring = BasedRing { labels, constants, unit, dual, truncated: vec![] };
        ring.validate()?;
        ring.check_associative()?;
        Ok(ring)
    }

    fn validate(&self) -> Result<()> {
        let d = self.labels.len();
        let bad = |m: String| Err(Error::InvalidArgument(m));
        if self.constants.len() != d || self.constants.iter().any(|r| r.len() != d) || self.dual.len() != d || self.unit >= d {
            return bad("based ring shapes".into());
        }
        if self.constants.iter().flatten().flat_map(|m| m.keys()).any(|&k| k >= d) {
            return bad("label out of range".into());
        }
        let single = |k: usize| BTreeMap::from([(k, 1u64)]);
        for i in 0..d {
            if self.is_truncated(self.unit, i) || self.is_truncated(i, self.unit) {
                continue;
            }
            if self.constants[self.unit][i] != single(i) || self.constants[i][self.unit] != single(i) {
                return bad(format!("unit law fails on {}", self.labels[i]));
            }
        }
        if self.dual[self.unit] != self.unit || (0..d).any(|i| self.dual[i] >= d || self.dual[self.dual[i]] != i) {
            return bad("duality is not an involution fixing the unit".into());
        }
        for i in 0..d {
            for j in 0..d {
                let (a, b) = (self.dual[j], self.dual[i]);
                if self.is_truncated(i, j) || self.is_truncated(a, b) {
                    continue;
                }
                let mirrored: BTreeMap<usize, u64> = self.constants[a][b].iter().map(|(&k, &c)| (self.dual[k], c)).collect();
                if mirrored != self.constants[i][j] {
                    return bad(format!("duality fails on ({}, {})", self.labels[i], self.labels[j]));
                }
            }
        }
        Ok(())
    }

    fn check_associative(&self) -> Result<()> {
        let d = self.len();
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let (bi, bj, bk) = (self.basis(i), self.basis(j), self.basis(k));
                    let left = self.mul(&self.mul(&bi, &bj)?, &bk);
                    let right = self.mul(&bi, &self.mul(&bj, &bk)?);
                    match (left, right) {
                        (Ok(l), Ok(r)) if l != r => {
                            return Err(Error::InvalidArgument(format!(
                                "associativity fails on ({}, {}, {})",
                                self.labels[i], self.labels[j], self.labels[k]
                            )))
                        }
                        _ => {}
                    }
                }
            }
        }
        Ok(())
    }

    fn is_truncated(&self, i: usize, j: usize) -> bool {
        self.truncated.contains(&(i, j))
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn index(&self, label: &str) -> Result<usize> {
        self.labels.iter().position(|l| l == label).ok_or_else(|| Error::InvalidArgument(format!("unknown label `{label}`")))
    }

    pub fn basis(&self, i: usize) -> Vec<BigUint> {
        (0..self.len()).map(|k| if k == i { BigUint::one() } else { BigUint::zero() }).collect()
    }

    pub fn mul(&self, x: &[BigUint], y: &[BigUint]) -> Result<Vec<BigUint>> {
        let mut out = vec![BigUint::zero(); self.len()];
        for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in y.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                if self.is_truncated(i, j) {
                    return Err(Error::InvalidArgument(format!("product {} · {} leaves the computed range", self.labels[i], self.labels[j])));
                }
                let ab = a * b;
                for (&k, &c) in &self.constants[i][j] {
                    out[k] += &ab * c;
                }
            }
        }
        Ok(out)
    }

    /// N_{ij}^k.
    pub fn coefficient(&self, i: usize, j: usize, k: usize) -> u64 {
        self.constants[i][j].get(&k).copied().unwrap_or(0)
    }

    /// The sl2 ring: labels are highest weights, V_i V_j = Σ V_k over
    /// |i−j| ≤ k ≤ i+j of the same parity. With `level = Some(l)` only
    /// weights ≤ l survive and k ≤ 2l − i − j. Without a level the ring is
    /// cut at `max` and products leaving the range are refused.
    ///
    /// Constants are built by the Chebyshev recursion
    /// V_{i+1} = V_1 V_i − V_{i−1} from the action of V_1 alone.
    pub fn clebsch_gordan(max: usize, level: Option<usize>) -> BasedRing {
        let top = level.map_or(max, |l| l.min(max));
        let d = top + 1;
        // fund[j] = V_1 · V_j
        let fund = |j: usize| -> Vec<i64> {
            let mut v = vec![0i64; d + 1];
            if j > 0 {
                v[j - 1] += 1;
            }
            let allowed = match level {
                Some(l) => j < l,
                None => true,
            };
            if allowed {
                v[j + 1] += 1;
            }
            v
        };
        // mats[i][j][k] = N_{ij}^k, with k ranging to d (one past the top
        // when uncut)
        let mut mats: Vec<Vec<Vec<i64>>> = Vec::with_capacity(d);
        mats.push((0..d).map(|j| (0..=d).map(|k| i64::from(k == j)).collect()).collect());
        if d > 1 {
            mats.push((0..d).map(fund).collect());
        }
        for i in 1..top {
            let next: Vec<Vec<i64>> = (0..d)
                .map(|j| {
                    let mut v = vec![0i64; d + 1];
                    for (k, &c) in mats[i][j].iter().enumerate() {
                        if c == 0 {
                            continue;
                        }
                        if k > top {
                            // beyond the cut: V_1 acting there is unknown
                            return vec![-1; d + 1];
                        }
                        for (m, f) in fund(k).iter().enumerate() {
                            v[m] += c * f;
                        }
                    }
                    for (m, c) in mats[i - 1][j].iter().enumerate() {
                        v[m] -= c;
                    }
                    v
                })
                .collect();
            mats.push(next);
        }
        let mut truncated = vec![];
        let constants = (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| {
                        let row = &mats[i][j];
                        if level.is_none() && (i + j > top || row.iter().any(|&c| c < 0)) {
                            truncated.push((i, j));
                            return BTreeMap::new();
                        }
                        row.iter().enumerate().take(d).filter(|(_, &c)| c > 0).map(|(k, &c)| (k, c as u64)).collect()
                    })
                    .collect()
            })
            .collect();
        BasedRing { labels: (0..d).map(|i| i.to_string()).collect(), constants, unit: 0, dual: (0..d).collect(), truncated }
    }

    /// Accepts a label or the alias `fund` for weight 1.
    pub fn resolve(&self, label: &str) -> Result<usize> {
        match label {
            "fund" => self.index("1"),
            "unit" => Ok(self.unit),
            _ => self.index(label),
        }
    }
}

pub fn length(x: &[BigUint]) -> BigUint {
    x.iter().sum()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GrowthReport {
    pub label: String,
    /// d_1, …, d_N.
    pub lengths: Vec<String>,
    pub supermultiplicative: bool,
    /// (d_n, n) maximizing d_n^{1/n}; the least such n.
    pub best_lower_bound: (String, usize),
    pub pass: bool,
}

/// d_n = length(xⁿ) for n ≤ `n_max`, with the super-multiplicativity check.
pub fn growth_dimension(ring: &BasedRing, x: usize, n_max: usize) -> Result<GrowthReport> {
    if n_max == 0 {
        return Err(Error::InvalidArgument("growth needs N >= 1".into()));
    }
    let xv = ring.basis(x);
    let mut p = xv.clone();
    let mut d = vec![length(&p)];
    for _ in 1..n_max {
        p = ring.mul(&p, &xv)?;
        d.push(length(&p));
    }
    let mut supermultiplicative = true;
    for a in 1..=n_max {
        for b in 1..=n_max - a {
            supermultiplicative &= d[a + b - 1] >= &d[a - 1] * &d[b - 1];
        }
    }
    // d_a^{1/a} < d_b^{1/b} iff d_a^b < d_b^a
    let mut best = 1;
    for n in 2..=n_max {
        if d[best - 1].pow(n as u32) < d[n - 1].pow(best as u32) {
            best = n;
        }
    }
    Ok(GrowthReport {
        label: ring.labels[x].clone(),
        lengths: d.iter().map(|v| v.to_string()).collect(),
        supermultiplicative,
        best_lower_bound: (d[best - 1].to_string(), best),
        pass: supermultiplicative,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModerateGrowthReport {
    /// (n, dim End(X^n), n!).
    pub table: Vec<(usize, String, String)>,
    pub first_below_factorial: Option<usize>,
}

/// First n ≥ 1 with dims[n−1] < n!.
pub fn moderate_growth_test(dims: &[BigUint]) -> ModerateGrowthReport {
    let mut fact = BigUint::one();
    let mut table = vec![];
    let mut first = None;
    for (i, dim) in dims.iter().enumerate() {
        let n = i + 1;
        fact *= n;
        if first.is_none() && dim < &fact {
            first = Some(n);
        }
        table.push((n, dim.to_string(), fact.to_string()));
    }
    ModerateGrowthReport { table, first_below_factorial: first }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sl2_lengths() {
        let r = BasedRing::clebsch_gordan(8, None);
        let g = growth_dimension(&r, r.resolve("fund").unwrap(), 8).unwrap();
        assert_eq!(g.lengths[1], "2");
        assert_eq!(g.lengths[3], "6");
        assert!(g.supermultiplicative);
        let x4 = (0..3).try_fold(r.basis(1), |p, _| r.mul(&p, &r.basis(1))).unwrap();
        assert_eq!(x4[0], BigUint::from(2u8));
        assert_eq!(x4[2], BigUint::from(3u8));
        assert_eq!(x4[4], BigUint::one());
        assert!(r.mul(&r.basis(5), &r.basis(5)).is_err());
    }

    #[test]
    fn unit_growth() {
        let r = BasedRing::clebsch_gordan(3, None);
        let g = growth_dimension(&r, 0, 5).unwrap();
        assert!(g.lengths.iter().all(|l| l == "1"));
    }

    #[test]
    fn truncated_ring_is_a_based_ring() {
        let r = BasedRing::clebsch_gordan(10, Some(3));
        assert_eq!(r.len(), 4);
        let r = BasedRing::new(r.labels, r.constants, r.unit, r.dual).unwrap();
        assert_eq!(r.constants[1][1], BTreeMap::from([(0, 1), (2, 1)]));
        assert_eq!(r.constants[3][3], BTreeMap::from([(0, 1)]));
        assert_eq!(r.constants[2][2], BTreeMap::from([(0, 1), (2, 1)]));
    }

    #[test]
    fn moderate_growth_examples() {
        let big = |v: &[u64]| v.iter().map(|&x| BigUint::from(x)).collect::<Vec<_>>();
        assert_eq!(moderate_growth_test(&big(&[1, 2, 5, 14])).first_below_factorial, Some(3));
        assert_eq!(moderate_growth_test(&big(&[1, 2, 6, 24, 120])).first_below_factorial, None);
        assert_eq!(moderate_growth_test(&big(&[1, 1, 1])).first_below_factorial, Some(2));
    }

    #[test]
    fn rejects_bad_unit() {
        let r = BasedRing::clebsch_gordan(2, Some(2));
        let mut c = r.constants.clone();
        c[0][1] = BTreeMap::from([(1, 2)]);
        assert!(BasedRing::new(r.labels, c, 0, r.dual).is_err());
    }
}
