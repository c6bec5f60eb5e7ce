//! Closure pairings: the permutation pairing in OB(∞) and the matching
//! pairing in two-parameter oriented TL.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::braid::{permutation_to_braid, Permutation};
use crate::diagrams::{compose_diagrams, enumerate_matchings, parse_word, Diagram, DiagramVector, Engine, EvalParams, Flavor, Letter, Word};
use crate::error::Result;
use crate::linalg::Matrix;
use crate::scalars::{Ring, Scalar};

/// Image of a braid word under the symmetric braiding of OB, on `X^n`.
pub fn symmetric_image(engine: &Engine, perm_word: &[i64], n: usize) -> Result<DiagramVector> {
    let word: Word = vec![Letter::X; n];
    let mut acc = engine.identity(&word)?;
    for &g in perm_word.iter().rev() {
        let s = engine.vector(Diagram::swap(&word, g.unsigned_abs() as usize - 1)?)?;
        acc = engine.compose(&s, &acc)?;
    }
    Ok(acc)
}

/// Φ(x, y): stack x over y on X^n and close strand i with the i-th
/// innermost cap/cup on the right.
pub fn phi_pairing(engine: &Engine, x: &DiagramVector, y: &DiagramVector) -> Result<Scalar> {
    let n = x.bottom().len();
    let w: Word = x.bottom().to_vec();
    let back: Word = w.iter().rev().map(|l| if *l == Letter::X { Letter::Y } else { Letter::X }).collect();
    let full = [w.as_slice(), back.as_slice()].concat();
    let cup = engine.vector(Diagram::new(engine.flavor, vec![], full.clone(), (0..n).map(|i| (i, 2 * n - 1 - i)))?)?;
    let cap = engine.vector(Diagram::new(engine.flavor, full, vec![], (0..n).map(|i| (i, 2 * n - 1 - i)))?)?;
    let xy = engine.compose(x, y)?;
    let middle = xy.tensor(&engine.identity(&back)?)?;
    let closed = engine.compose_all(&[&cap, &middle, &cup])?;
    Ok(closed.as_scalar().expect("closed diagram"))
}

#[derive(Clone, Debug, Serialize)]
pub struct PhiReport {
    pub n: usize,
    pub labels: Vec<String>,
    #[serde(serialize_with = "matrix_json")]
    pub matrix: Matrix,
    pub is_identity: bool,
    pub pass: bool,
}

fn matrix_json<S: serde::Serializer>(m: &Matrix, s: S) -> std::result::Result<S::Ok, S::Error> {
    m.to_json().serialize(s)
}

/// The matrix [Φ(f_s⁻¹, f_t)] over s, t ∈ S_n in OB(∞), f_t the image of
/// the canonical positive lift of t.
pub fn phi_matrix_theorem1(n: usize) -> Result<PhiReport> {
    let ring = Ring::Rational;
    let engine = Engine::new(Flavor::Brauer, EvalParams::infinity(&ring))?;
    let perms = Permutation::all(n);
    let lifts: Vec<Vec<i64>> = perms.iter().map(|p| permutation_to_braid(p).gens).collect();
    let f: Vec<DiagramVector> = lifts.iter().map(|w| symmetric_image(&engine, w, n)).collect::<Result<_>>()?;
    let f_inv: Vec<DiagramVector> = lifts
        .iter()
        .map(|w| {
            let inv: Vec<i64> = w.iter().rev().map(|g| -g).collect();
            symmetric_image(&engine, &inv, n)
        })
        .collect::<Result<_>>()?;
    let rows: Vec<Vec<Scalar>> = f_inv
        .par_iter()
        .map(|x| f.iter().map(|y| phi_pairing(&engine, x, y)).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;
    let matrix = Matrix::from_rows(&ring, rows)?;
    let is_identity = matrix.is_identity();
    Ok(PhiReport { n, labels: perms.iter().map(|p| p.to_string()).collect(), matrix, is_identity, pass: is_identity })
}

/// (YX)^n.
pub fn alternating_word(n: usize) -> Word {
    parse_word(&"YX".repeat(n)).expect("valid letters")
}

#[derive(Clone, Debug, Serialize)]
pub struct MatchingPhiReport {
    pub n: usize,
    pub count: usize,
    pub d_values: Vec<usize>,
    /// (a, b) exponents of z and z★ per (u, v).
    pub exponents: Vec<Vec<(usize, usize)>>,
    #[serde(serialize_with = "matrix_json")]
    pub matrix: Matrix,
    pub monomials: bool,
    pub exponent_law: bool,
    pub off_diagonal_positive: bool,
    pub diagonal_one: bool,
    pub det_at_z0: Scalar,
    pub det_at_zstar0: Scalar,
    pub det_units: bool,
    pub pass: bool,
}

pub fn matchings_ring() -> Ring {
    Ring::laurent(&["z", "zs"])
}

/// [Φ(f_u, g_v)] = [f_u ∘ g_v] over non-crossing matchings of (YX)^n, in
/// the oriented kernel with circles 1 and formal turn-back scalars z, z★.
pub fn phi_matrix_matchings(n: usize) -> Result<MatchingPhiReport> {
    let ring = matchings_ring();
    let (z, zs) = (ring.var("z")?, ring.var("zs")?);
    let params = EvalParams::oriented(ring.one(), ring.one(), z.clone(), zs.clone())?;
    let engine = Engine::new(Flavor::Otl, params)?;
    let word = alternating_word(n);
    let matchings = enumerate_matchings(&word)?;
    let d_values: Vec<usize> = matchings.iter().map(|(_, d)| *d).collect();
    let caps: Vec<&Diagram> = matchings.iter().map(|(u, _)| u).collect();
    let cups: Vec<Diagram> = matchings.iter().map(|(v, _)| v.flip()).collect();
    let cells: Vec<Vec<(Scalar, (usize, usize))>> = caps
        .par_iter()
        .map(|u| {
            cups.iter()
                .map(|v| {
                    let c = compose_diagrams(u, v)?;
                    let [_, _, a, b] = c.oriented_exponents();
                    Ok((c.scalar(engine_params(&engine))?, (a, b)))
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    let count = matchings.len();
    let mut monomials = true;
    let mut exponent_law = true;
    let mut off_diagonal_positive = true;
    let mut diagonal_one = true;
    for (i, row) in cells.iter().enumerate() {
        for (j, (s, (a, b))) in row.iter().enumerate() {
            let mono = z.pow(*a as i64)?.try_mul(&zs.pow(*b as i64)?)?;
            monomials &= *s == mono;
            exponent_law &= *a as i64 - *b as i64 == d_values[i] as i64 - d_values[j] as i64;
            if i == j {
                diagonal_one &= s.is_one();
            } else {
                off_diagonal_positive &= a + b > 0;
            }
        }
    }
    let matrix = Matrix::from_rows(&ring, cells.iter().map(|r| r.iter().map(|(s, _)| s.clone()).collect()).collect())?;
    let at = |var: &str| -> Result<Scalar> {
        let mut m = BTreeMap::new();
        m.insert("z".to_string(), if var == "z" { ring.zero() } else { z.clone() });
        m.insert("zs".to_string(), if var == "zs" { ring.zero() } else { zs.clone() });
        matrix.evaluate(&m)?.det()
    };
    let det_at_z0 = at("z")?;
    let det_at_zstar0 = at("zs")?;
    let unit = |d: &Scalar| d.is_one() || d.neg().is_one();
    let det_units = unit(&det_at_z0) && unit(&det_at_zstar0);
    let exponents = cells.iter().map(|r| r.iter().map(|(_, e)| *e).collect()).collect();
    let pass = monomials && exponent_law && off_diagonal_positive && diagonal_one && det_units && count == crate::tl::catalan(n);
    Ok(MatchingPhiReport {
        n,
        count,
        d_values,
        exponents,
        matrix,
        monomials,
        exponent_law,
        off_diagonal_positive,
        diagonal_one,
        det_at_z0,
        det_at_zstar0,
        det_units,
        pass,
    })
}

fn engine_params(e: &Engine) -> &EvalParams {
    &e.params
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theorem1_small() {
        for n in 1..=3 {
            let r = phi_matrix_theorem1(n).unwrap();
            assert!(r.pass, "n = {n}");
        }
    }

    #[test]
    fn matchings_small() {
        for n in 1..=3 {
            let r = phi_matrix_matchings(n).unwrap();
            assert!(r.pass, "n = {n}: {:?}", (r.monomials, r.exponent_law, r.off_diagonal_positive, r.diagonal_one, r.det_units));
        }
    }
}
