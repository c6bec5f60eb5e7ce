//! Negligible morphisms: fusion rules of the semisimplified TL category,
//! the closure pairing in OB(∞), and trace vanishing on radicals.

use std::collections::BTreeMap;

use serde::Serialize;

use super::based::BasedRing;
use super::phi::phi_pairing;
use super::retraction::{powers, span_basis};
use crate::brauer::{symmetric_braiding, walled_word};
use crate::diagrams::{plain_word, word_string, DiagramVector, Engine, EvalParams, Flavor, Letter};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalars::{Ring, Scalar};
use crate::tl::{jones_wenzl, quantum_trace, trace_vector, Closure};

fn jw(engine: &Engine, j: usize) -> Result<DiagramVector> {
    if j == 0 {
        engine.identity(&[])
    } else {
        jones_wenzl(j, &engine.params)
    }
}

/// Rank of (f, g) ↦ Tr(f∘g) over f ∈ `left`, g ∈ `right`.
fn pairing_rank(engine: &Engine, closure: &Closure, left: &[DiagramVector], right: &[DiagramVector]) -> Result<usize> {
    let ring = engine.ring();
    let rows = left
        .iter()
        .map(|f| right.iter().map(|g| quantum_trace(engine, &engine.compose(f, g)?, closure)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    if rows.is_empty() || rows[0].is_empty() {
        return Ok(0);
    }
    Matrix::from_rows(&ring, rows)?.rank()
}

#[derive(Clone, Debug, Serialize)]
pub struct PowerCheck {
    pub power: usize,
    pub end_dim: usize,
    /// Rank of the trace pairing on End(X^m), the dimension of the quotient.
    pub quotient_dim: usize,
    /// Σ mult² over simples, multiplicities read off the fusion ring.
    pub sum_of_squares: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct NegligibleReport {
    pub ring: String,
    pub max_power: usize,
    /// Traces of JW_0, JW_1, … up to the first vanishing one or the cap.
    pub jw_traces: Vec<Scalar>,
    /// The first negligible JW_j, if one was reached.
    pub first_negligible: Option<usize>,
    pub fusion: BasedRing,
    pub power_checks: Vec<PowerCheck>,
    pub complete: bool,
    pub matches_clebsch_gordan: bool,
    pub pass: bool,
}

/// Semisimplification of TL on the strand X = [1], using the planar trace.
///
/// The simples are X_j = (X^j, JW_j) for the non-negligible JW_j, j ≤ N.
/// N_{ij}^k is the rank of the trace pairing between
/// JW_k Hom(X^{i+j}, X^k) (JW_i ⊗ JW_j) and Hom(X^k, X^{i+j}). When a
/// negligible JW_j occurs the ring is closed; otherwise pairs with
/// i + j > N are left truncated.
pub fn negligible_quotient(engine: &Engine, max_power: usize) -> Result<NegligibleReport> {
    if engine.flavor != Flavor::Tl {
        return Err(Error::FlavorMismatch(engine.flavor.name().into(), "tl".into()));
    }
    let closure = Closure::Planar;
    let ring = engine.ring();
    let mut projectors = vec![];
    let mut jw_traces = vec![];
    let mut first_negligible = None;
    for j in 0..=max_power {
        let p = jw(engine, j)?;
        let t = quantum_trace(engine, &p, &closure)?;
        jw_traces.push(t.clone());
        if t.is_zero() {
            first_negligible = Some(j);
            break;
        }
        projectors.push(p);
    }
    let top = projectors.len() - 1;
    let closed = first_negligible.is_some();
    let d = top + 1;
    let mut constants = vec![vec![BTreeMap::new(); d]; d];
    let mut truncated = vec![];
    for i in 0..d {
        for j in 0..d {
            if !closed && i + j > top {
                truncated.push((i, j));
                continue;
            }
            let pij = projectors[i].tensor(&projectors[j])?;
            let m = i + j;
            for k in (0..d).filter(|k| *k <= m && (m - k) % 2 == 0) {
                let fs: Vec<DiagramVector> = engine
                    .hom_basis(&plain_word(m), &plain_word(k))?
                    .into_iter()
                    .map(|f| engine.compose_all(&[&projectors[k], &engine.vector(f)?, &pij]))
                    .collect::<Result<_>>()?;
                let gs: Vec<DiagramVector> =
                    engine.hom_basis(&plain_word(k), &plain_word(m))?.into_iter().map(|g| engine.vector(g)).collect::<Result<_>>()?;
                let r = pairing_rank(engine, &closure, &fs, &gs)?;
                if r > 0 {
                    constants[i][j].insert(k, r as u64);
                }
            }
        }
    }
    let labels: Vec<String> = (0..d).map(|i| i.to_string()).collect();
    let dual: Vec<usize> = (0..d).collect();
    let fusion = if closed {
        BasedRing::new(labels, constants, 0, dual)?
    } else {
        BasedRing { labels, constants, unit: 0, dual, truncated }
    };

    let mut power_checks = vec![];
    let mut complete = true;
    let mut mult = fusion.basis(0);
    for m in 1..=max_power {
        mult = match fusion.mul(&mult, &fusion.basis(1.min(top))) {
            Ok(v) => v,
            Err(_) => break,
        };
        let basis = engine.hom_basis(&plain_word(m), &plain_word(m))?;
        let (alg, _) = engine.end_algebra(&plain_word(m))?;
        let tau = trace_vector(engine, &basis, &closure)?;
        let quotient_dim = alg.gram(&tau)?.rank()?;
        let sum_of_squares: u64 = mult.iter().map(|c| u64::try_from(c * c).unwrap_or(u64::MAX)).sum();
        complete &= quotient_dim as u64 == sum_of_squares;
        power_checks.push(PowerCheck { power: m, end_dim: basis.len(), quotient_dim, sum_of_squares });
    }
    let oracle = BasedRing::clebsch_gordan(top, closed.then_some(top));
    let matches_clebsch_gordan = oracle.constants == fusion.constants;
    Ok(NegligibleReport {
        ring: ring.to_string(),
        max_power,
        jw_traces,
        first_negligible,
        fusion,
        power_checks,
        complete,
        matches_clebsch_gordan,
        pass: complete && matches_clebsch_gordan,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct ClosurePairingReport {
    /// (k, dim End(X^k), rank of Φ on End(X^k), dim Hom(𝟙, X^k)).
    pub powers: Vec<(usize, usize, usize, usize)>,
    pub pass: bool,
}

/// OB(∞) on X: End(X^k) is spanned by permutations, the closure pairing
/// Φ is nondegenerate on it, and 𝟙 maps to no positive power.
pub fn closure_pairing_ob_infinity(max_power: usize) -> Result<ClosurePairingReport> {
    let ring = Ring::Rational;
    let engine = Engine::new(Flavor::Brauer, EvalParams::infinity(&ring))?;
    let mut rows = vec![];
    let mut pass = true;
    for k in 1..=max_power {
        let w = walled_word(k, 0);
        let basis: Vec<DiagramVector> = engine.hom_basis(&w, &w)?.into_iter().map(|d| engine.vector(d)).collect::<Result<_>>()?;
        let gram = basis
            .iter()
            .map(|x| basis.iter().map(|y| phi_pairing(&engine, x, y)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let rank = Matrix::from_rows(&ring, gram)?.rank()?;
        let cups = engine.hom_basis(&[], &w)?.len();
        pass &= rank == basis.len() && cups == 0;
        rows.push((k, basis.len(), rank, cups));
    }
    Ok(ClosurePairingReport { powers: rows, pass })
}

#[derive(Clone, Debug, Serialize)]
pub struct TraceRadicalReport {
    pub word: String,
    pub ring: String,
    pub dim: usize,
    pub radical_dim: usize,
    /// No trace exists in the regime and the radical is zero.
    pub vacuous: bool,
    pub trace_zero_on_radical: bool,
    pub trace_nonzero_somewhere: bool,
    pub pass: bool,
}

/// Computes radical(End(word)) and checks that the trace kills it.
pub fn trace_radical_check(engine: &Engine, word: &[Letter], closure: &Closure) -> Result<TraceRadicalReport> {
    let (alg, basis) = engine.end_algebra(word)?;
    let radical = alg.radical()?;
    let tau = match trace_vector(engine, &basis, closure) {
        Ok(t) => Some(t),
        Err(Error::RegimeNotRigid) => None,
        Err(e) => return Err(e),
    };
    let ring = engine.ring();
    let (vacuous, zero_on_rad, nonzero) = match &tau {
        None if radical.is_empty() => (true, true, false),
        None => return Err(Error::RegimeNotRigid),
        Some(t) => {
            let mut ok = true;
            for v in &radical {
                let mut acc = ring.zero();
                for (c, tc) in v.iter().zip(t) {
                    acc = acc.try_add(&c.try_mul(tc)?)?;
                }
                ok &= acc.is_zero();
            }
            (false, ok, t.iter().any(|x| !x.is_zero()))
        }
    };
    Ok(TraceRadicalReport {
        word: word_string(word),
        ring: ring.to_string(),
        dim: basis.len(),
        radical_dim: radical.len(),
        vacuous,
        trace_zero_on_radical: zero_on_rad,
        trace_nonzero_somewhere: nonzero,
        pass: zero_on_rad,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct TraceMismatchReport {
    pub ring: String,
    pub element: String,
    /// The two-sided ideal generated by the element is nilpotent.
    pub in_radical: bool,
    pub ideal_dim: usize,
    pub trace: Scalar,
    pub mismatch: bool,
    pub pass: bool,
}

/// In OB(t) over fp:2[t], z = 1 − s on X⊗X generates a nilpotent ideal,
/// so it lies in the radical, yet Tr(z) = t² − t. Here the radical is
/// certified by nilpotency, since the trace-form criterion needs
/// characteristic zero.
pub fn char2_trace_radical_report() -> Result<TraceMismatchReport> {
    let ring = Ring::fp(2, &["t"]);
    let t = ring.var("t")?;
    let engine = Engine::new(Flavor::Brauer, EvalParams::standard(t))?;
    let xx = walled_word(2, 0);
    let z = engine.identity(&xx)?.try_sub(&engine.vector(symmetric_braiding(&xx, 1)?)?)?;
    let basis = engine.hom_basis(&xx, &xx)?;
    let vb: Vec<DiagramVector> = basis.iter().map(|d| engine.vector(d.clone())).collect::<Result<_>>()?;
    let mut gens = vec![];
    for a in &vb {
        for b in &vb {
            gens.push(engine.compose_all(&[a, &z, b])?);
        }
    }
    let ideal = span_basis(&engine, &basis, &gens)?;
    let in_radical = powers(&engine, &basis, &ideal).is_ok();
    let trace = quantum_trace(&engine, &z, &Closure::Symmetric)?;
    let mismatch = in_radical && !trace.is_zero();
    Ok(TraceMismatchReport {
        ring: ring.to_string(),
        element: z.to_string(),
        in_radical,
        ideal_dim: ideal.len(),
        trace,
        mismatch,
        pass: mismatch,
    })
}
