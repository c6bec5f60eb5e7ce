//! Retractions Z → 𝟙 that kill a nilpotent subspace of End(Z) composed
//! with every map 𝟙 → Z.

use serde::Serialize;

use crate::diagrams::{word_string, Diagram, DiagramVector, Engine, Letter};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalars::Scalar;

#[derive(Clone, Debug, Serialize)]
pub struct RetractionReport {
    pub word: String,
    pub hom_out_dim: usize,
    pub hom_in_dim: usize,
    pub n_dim: usize,
    /// Least d with N^d = 0.
    pub nilpotency_index: usize,
    /// Number of replacements r ↦ r∘x performed.
    pub steps: usize,
    pub r: String,
    pub s: String,
    pub r_s_is_one: bool,
    pub kills_n: bool,
    pub pass: bool,
    #[serde(skip)]
    pub retraction: Option<DiagramVector>,
    #[serde(skip)]
    pub section: Option<DiagramVector>,
}

/// Greedy basis of the span of `vectors`, in coordinates over `basis`.
pub(crate) fn span_basis(engine: &Engine, basis: &[Diagram], vectors: &[DiagramVector]) -> Result<Vec<DiagramVector>> {
    let ring = engine.ring();
    let mut kept: Vec<DiagramVector> = Vec::new();
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for v in vectors {
        if v.is_zero() {
            continue;
        }
        let c = v.coordinates(basis)?;
        rows.push(c);
        if Matrix::from_rows(&ring, rows.clone())?.rank()? == rows.len() {
            kept.push(v.clone());
        } else {
            rows.pop();
        }
    }
    Ok(kept)
}

/// Bases of N, N², …, up to the last nonzero power.
pub(crate) fn powers(engine: &Engine, end_basis: &[Diagram], n: &[DiagramVector]) -> Result<Vec<Vec<DiagramVector>>> {
    let first = span_basis(engine, end_basis, n)?;
    let mut out = vec![];
    let mut current = first.clone();
    while !current.is_empty() {
        if out.len() > end_basis.len() {
            return Err(Error::NotNilpotent);
        }
        out.push(current.clone());
        let mut products = Vec::new();
        for x in &first {
            for y in &current {
                products.push(engine.compose(x, y)?);
            }
        }
        current = span_basis(engine, end_basis, &products)?;
    }
    Ok(out)
}

/// Finds r: Z → 𝟙 and s: 𝟙 → Z with r∘s = 1 and r∘x∘a = 0 for x ∈ N and
/// every a: 𝟙 → Z.
///
/// Starting from any retraction r, let m be largest with r N^m Hom(𝟙,Z) ≠ 0
/// and pick w ∈ N^m, a with r w a = c invertible. Then r' = c⁻¹ r w splits a
/// and r' N ⊆ c⁻¹ r N^{m+1} vanishes on Hom(𝟙,Z).
pub fn good_retraction(engine: &Engine, z: &[Letter], n: &[DiagramVector]) -> Result<RetractionReport> {
    let end_basis = engine.hom_basis(z, z)?;
    for x in n {
        if x.bottom() != z || x.top() != z {
            return Err(Error::BoundaryMismatch(format!("N must lie in End({})", word_string(z))));
        }
    }
    let pw = powers(engine, &end_basis, n)?;
    let outs: Vec<DiagramVector> = engine.hom_basis(z, &[])?.into_iter().map(|d| engine.vector(d)).collect::<Result<_>>()?;
    let ins: Vec<DiagramVector> = engine.hom_basis(&[], z)?.into_iter().map(|d| engine.vector(d)).collect::<Result<_>>()?;
    let not_summand = || Error::NotASummand(word_string(z));

    let closed = |a: &DiagramVector, b: &DiagramVector| -> Result<Scalar> { Ok(engine.compose(a, b)?.as_scalar().expect("closed")) };
    let mut start = None;
    'outer: for r in &outs {
        for a in &ins {
            let c = closed(r, a)?;
            if let Ok(ci) = c.try_inv() {
                start = Some((r.scale(&ci)?, a.clone()));
                break 'outer;
            }
        }
    }
    let (mut r, mut s) = start.ok_or_else(not_summand)?;

    let mut steps = 0;
    for level in pw.iter().rev() {
        let mut hit = None;
        let mut nonzero = false;
        for w in level {
            let rw = engine.compose(&r, w)?;
            for a in &ins {
                let c = closed(&rw, a)?;
                if c.is_zero() {
                    continue;
                }
                nonzero = true;
                if let Ok(ci) = c.try_inv() {
                    hit = Some((rw.scale(&ci)?, a.clone()));
                    break;
                }
            }
            if hit.is_some() {
                break;
            }
        }
        if let Some((r2, s2)) = hit {
            r = r2;
            s = s2;
            steps += 1;
            break;
        }
        if nonzero {
            return Err(Error::Unsupported(engine.ring().to_string(), "no invertible value of r∘w∘a".into()));
        }
    }

    let r_s_is_one = closed(&r, &s)?.is_one();
    let mut kills_n = true;
    for x in pw.first().map(|v| v.as_slice()).unwrap_or(&[]) {
        let rx = engine.compose(&r, x)?;
        for a in &ins {
            kills_n &= closed(&rx, a)?.is_zero();
        }
    }
    Ok(RetractionReport {
        word: word_string(z),
        hom_out_dim: outs.len(),
        hom_in_dim: ins.len(),
        n_dim: pw.first().map_or(0, |v| v.len()),
        nilpotency_index: pw.len() + 1,
        steps,
        r: r.to_string(),
        s: s.to_string(),
        r_s_is_one,
        kills_n,
        pass: r_s_is_one && kills_n,
        retraction: Some(r),
        section: Some(s),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagrams::{parse_word, plain_word, EvalParams, Flavor};
    use crate::scalars::Ring;

    #[test]
    fn zero_subspace_in_ob_infinity() {
        let e = Engine::new(Flavor::Brauer, EvalParams::infinity(&Ring::Rational)).unwrap();
        let r = good_retraction(&e, &parse_word("XY").unwrap(), &[]).unwrap();
        assert!(r.pass && r.steps == 0);
    }

    #[test]
    fn radical_at_delta_one() {
        let ring = Ring::Rational;
        let e = Engine::new(Flavor::Tl, EvalParams::standard(ring.one())).unwrap();
        let z = plain_word(4);
        let (alg, basis) = e.end_algebra(&z).unwrap();
        let shape = e.identity(&z).unwrap().shape().clone();
        let n: Vec<DiagramVector> = alg
            .radical()
            .unwrap()
            .iter()
            .map(|c| DiagramVector::from_coordinates(shape.clone(), &ring, &basis, c).unwrap())
            .collect();
        assert!(!n.is_empty());
        let r = good_retraction(&e, &z, &n).unwrap();
        assert!(r.pass, "{r:?}");
    }

    #[test]
    fn rank_one_nilpotents_force_a_step() {
        let e = Engine::new(Flavor::Brauer, EvalParams::infinity(&Ring::Rational)).unwrap();
        let z = parse_word("XYXY").unwrap();
        let outs = e.hom_basis(&z, &[]).unwrap();
        let ins = e.hom_basis(&[], &z).unwrap();
        let mut stepped = 0;
        for r in &outs {
            for a in &ins {
                let (c, _) = e.compose_basis(r, a).unwrap();
                if !c.is_zero() {
                    continue;
                }
                let x = e.compose(&e.vector(a.clone()).unwrap(), &e.vector(r.clone()).unwrap()).unwrap();
                let rep = good_retraction(&e, &z, &[x]).unwrap();
                assert!(rep.pass, "{rep:?}");
                stepped += rep.steps;
            }
        }
        assert!(stepped > 0);
    }

    #[test]
    fn errors() {
        let ring = Ring::Rational;
        let e = Engine::new(Flavor::Tl, EvalParams::standard(ring.zero())).unwrap();
        assert!(matches!(good_retraction(&e, &plain_word(2), &[]), Err(Error::NotASummand(_))));
        let e = Engine::new(Flavor::Tl, EvalParams::standard(ring.one())).unwrap();
        let id = e.identity(&plain_word(2)).unwrap();
        assert!(matches!(good_retraction(&e, &plain_word(2), &[id]), Err(Error::NotNilpotent)));
    }
}
