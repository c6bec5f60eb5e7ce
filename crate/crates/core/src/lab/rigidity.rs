//! Searching small Hom spaces for duality data.

use serde::Serialize;

use crate::diagrams::{word_string, DiagramVector, Engine, Letter};
use crate::error::{Error, Result};
use crate::scalars::Scalar;

#[derive(Clone, Debug, Serialize)]
pub struct ZigzagPair {
    pub ev: String,
    pub coev: String,
    /// (1_X ⊗ ev)(coev ⊗ 1_X)
    pub left: String,
    /// (ev ⊗ 1_Y)(1_Y ⊗ coev)
    pub right: String,
    pub left_nilpotent: bool,
    pub right_nilpotent: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Certificate {
    pub ev: String,
    pub coev: String,
    pub scale: Scalar,
    pub left_is_identity: bool,
    pub right_is_identity: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Certificate,
    Refutation,
    Inconclusive,
}

#[derive(Clone, Debug, Serialize)]
pub struct RigidityReport {
    pub x: String,
    pub y: String,
    pub pairs: Vec<ZigzagPair>,
    pub certificate: Option<Certificate>,
    pub all_composites_zero: bool,
    pub all_composites_nilpotent: bool,
    /// A value r∘s ≠ 0 with r: X⊗Y → 𝟙, s: 𝟙 → X⊗Y, when one exists.
    pub non_negligibility_witness: Option<Scalar>,
    pub verdict: Verdict,
    pub pass: bool,
}

fn nilpotent(engine: &Engine, f: &DiagramVector, bound: usize) -> Result<bool> {
    let mut p = f.clone();
    for _ in 0..=bound {
        if p.is_zero() {
            return Ok(true);
        }
        p = engine.compose(&p, f)?;
    }
    Ok(p.is_zero())
}

/// c with f = c·id, if f is a multiple of the identity.
fn scalar_part(engine: &Engine, f: &DiagramVector, word: &[Letter]) -> Result<Option<Scalar>> {
    let id = engine.identity(word)?;
    let d = id.terms().keys().next().expect("identity term").clone();
    let c = f.coeff(&d);
    Ok((id.scale(&c)? == *f).then_some(c))
}

/// Tries every basis pair ev: Y⊗X → 𝟙, coev: 𝟙 → X⊗Y. A pair whose
/// zig-zags are invertible multiples of the identities is rescaled into a
/// certificate; if every zig-zag is nilpotent the report is a refutation.
pub fn rigidity_certificate(engine: &Engine, x: &[Letter], y: &[Letter]) -> Result<RigidityReport> {
    let xy = [x, y].concat();
    let yx = [y, x].concat();
    let coevs: Vec<DiagramVector> = engine.hom_basis(&[], &xy)?.into_iter().map(|d| engine.vector(d)).collect::<Result<_>>()?;
    let evs: Vec<DiagramVector> = engine.hom_basis(&yx, &[])?.into_iter().map(|d| engine.vector(d)).collect::<Result<_>>()?;
    if coevs.is_empty() || evs.is_empty() {
        return Err(Error::EmptyHom(format!("Hom(𝟙, {}) or Hom({}, 𝟙)", word_string(&xy), word_string(&yx))));
    }
    let (idx, idy) = (engine.identity(x)?, engine.identity(y)?);
    let bound = engine.hom_basis(x, x)?.len().max(engine.hom_basis(y, y)?.len());
    let mut pairs = vec![];
    let mut certificate = None;
    let mut all_zero = true;
    let mut all_nil = true;
    for ev in &evs {
        for coev in &coevs {
            let left = engine.compose(&idx.tensor(ev)?, &coev.tensor(&idx)?)?;
            let right = engine.compose(&ev.tensor(&idy)?, &idy.tensor(coev)?)?;
            let (ln, rn) = (nilpotent(engine, &left, bound)?, nilpotent(engine, &right, bound)?);
            all_zero &= left.is_zero() && right.is_zero();
            all_nil &= ln && rn;
            if certificate.is_none() {
                if let (Some(l), Some(r)) = (scalar_part(engine, &left, x)?, scalar_part(engine, &right, y)?) {
                    if let Ok(li) = l.try_inv() {
                        let ev2 = ev.scale(&li)?;
                        let l2 = engine.compose(&idx.tensor(&ev2)?, &coev.tensor(&idx)?)?;
                        let r2 = engine.compose(&ev2.tensor(&idy)?, &idy.tensor(coev)?)?;
                        let (li_ok, ri_ok) = (l2 == idx, r2 == idy);
                        if li_ok && ri_ok && !r.is_zero() {
                            certificate = Some(Certificate {
                                ev: ev2.to_string(),
                                coev: coev.to_string(),
                                scale: li,
                                left_is_identity: li_ok,
                                right_is_identity: ri_ok,
                            });
                        }
                    }
                }
            }
            pairs.push(ZigzagPair {
                ev: ev.to_string(),
                coev: coev.to_string(),
                left: left.to_string(),
                right: right.to_string(),
                left_nilpotent: ln,
                right_nilpotent: rn,
            });
        }
    }
    let mut witness = None;
    'search: for r in engine.hom_basis(&xy, &[])? {
        let r = engine.vector(r)?;
        for s in &coevs {
            let v = engine.compose(&r, s)?.as_scalar().expect("closed");
            if !v.is_zero() {
                witness = Some(v);
                break 'search;
            }
        }
    }
    let verdict = if certificate.is_some() {
        Verdict::Certificate
    } else if all_nil {
        Verdict::Refutation
    } else {
        Verdict::Inconclusive
    };
    Ok(RigidityReport {
        x: word_string(x),
        y: word_string(y),
        pairs,
        certificate,
        all_composites_zero: all_zero,
        all_composites_nilpotent: all_nil,
        non_negligibility_witness: witness,
        pass: verdict != Verdict::Inconclusive,
        verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagrams::{parse_word, plain_word, EvalParams, Flavor};
    use crate::scalars::Ring;

    #[test]
    fn generic_strand_is_rigid() {
        let r = Ring::laurent(&["d"]);
        let e = Engine::new(Flavor::Tl, EvalParams::standard(r.var("d").unwrap())).unwrap();
        let rep = rigidity_certificate(&e, &plain_word(1), &plain_word(1)).unwrap();
        assert_eq!(rep.verdict, Verdict::Certificate);
        let e = Engine::new(Flavor::Tl, EvalParams::renormalized(&r.var("d").unwrap()).unwrap()).unwrap();
        let rep = rigidity_certificate(&e, &plain_word(1), &plain_word(1)).unwrap();
        assert_eq!(rep.verdict, Verdict::Certificate);
    }

    #[test]
    fn asymptotic_strands_are_not() {
        let q = Ring::Rational;
        let e = Engine::new(Flavor::Tl, EvalParams::infinity(&q)).unwrap();
        let rep = rigidity_certificate(&e, &plain_word(1), &plain_word(1)).unwrap();
        assert_eq!(rep.verdict, Verdict::Refutation);
        assert!(rep.all_composites_zero);
        let e = Engine::new(Flavor::Brauer, EvalParams::infinity(&q)).unwrap();
        let rep = rigidity_certificate(&e, &parse_word("X").unwrap(), &parse_word("Y").unwrap()).unwrap();
        assert_eq!(rep.verdict, Verdict::Refutation);
        assert!(rep.all_composites_zero);
        assert!(rep.non_negligibility_witness.unwrap().is_one());
    }

    #[test]
    fn empty_hom() {
        let e = Engine::new(Flavor::Brauer, EvalParams::infinity(&Ring::Rational)).unwrap();
        let x = parse_word("X").unwrap();
        assert!(matches!(rigidity_certificate(&e, &x, &x), Err(Error::EmptyHom(_))));
    }
}
