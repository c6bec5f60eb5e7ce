//! Closures of endomorphisms: the braided quantum trace and the planar
//! (Markov) trace.

use super::kauffman::crossing;
use crate::braid::{permutation_to_braid, Permutation};
use crate::diagrams::{Diagram, DiagramVector, Engine, Flavor, Letter, Word};
use crate::error::{Error, Result};
use crate::linalg::FinDimAlgebra;
use crate::scalars::Scalar;

/// How the closure strand passes the endomorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Closure {
    /// Positive Kauffman crossing with the given value of A (TL only).
    Kauffman(Scalar),
    /// Symmetric swap (Brauer only).
    Symmetric,
    /// No crossing: cup, f on the left block, cap.
    Planar,
}

fn dual(w: &[Letter]) -> Word {
    w.iter()
        .rev()
        .map(|l| match l {
            Letter::X => Letter::Y,
            Letter::Y => Letter::X,
            Letter::Plain => Letter::Plain,
        })
        .collect()
}

/// Nested cup 𝟙 → left ⊗ right, with point i of `left` joined to the
/// mirror point of `right`.
fn nested_cup(flavor: Flavor, left: &[Letter], right: &[Letter]) -> Result<Diagram> {
    let n = left.len();
    let top = [left, right].concat();
    Diagram::new(flavor, vec![], top, (0..n).map(|i| (i, 2 * n - 1 - i)))
}

fn nested_cap(flavor: Flavor, left: &[Letter], right: &[Letter]) -> Result<Diagram> {
    let n = left.len();
    let bottom = [left, right].concat();
    Diagram::new(flavor, bottom, vec![], (0..n).map(|i| (i, 2 * n - 1 - i)))
}

/// Block exchange w ⊗ v → v ⊗ w in which the right block passes in front.
fn block_crossing(engine: &Engine, closure: &Closure, w: &[Letter], v: &[Letter]) -> Result<DiagramVector> {
    let (n, m) = (w.len(), v.len());
    let perm: Vec<usize> = (0..n + m).map(|k| if k < n { m + k } else { k - n }).collect();
    match closure {
        Closure::Symmetric => {
            if engine.flavor != Flavor::Brauer {
                return Err(Error::FlavorMismatch(engine.flavor.name().into(), "brauer".into()));
            }
            engine.vector(Diagram::permutation(&[w, v].concat(), &perm)?)
        }
        Closure::Kauffman(a) => {
            let word = permutation_to_braid(&Permutation::new(perm)?);
            let mut acc = engine.identity(&[w, v].concat())?;
            for &g in word.gens.iter().rev() {
                acc = engine.compose(&crossing(engine, a, n + m, g)?, &acc)?;
            }
            Ok(acc)
        }
        Closure::Planar => Err(Error::InvalidArgument("planar closure has no crossing".into())),
    }
}

/// Tr(f) = ζ⁻ⁿ · cap ∘ (id ⊗ f) ∘ β ∘ cup for f ∈ End(w), n = |w|; the
/// factor ζ⁻ⁿ normalizes the duality so that the zig-zag is the identity.
pub fn quantum_trace(engine: &Engine, f: &DiagramVector, closure: &Closure) -> Result<Scalar> {
    let w = f.bottom().to_vec();
    if f.top() != w.as_slice() {
        return Err(Error::BoundaryMismatch("trace of a non-endomorphism".into()));
    }
    if engine.flavor == Flavor::Otl {
        return Err(Error::Unsupported(engine.ring().to_string(), "trace in the planar oriented flavor".into()));
    }
    if f.shape().flavor != engine.flavor {
        return Err(Error::FlavorMismatch(f.shape().flavor.name().into(), engine.flavor.name().into()));
    }
    let zinv = engine.params.straighten_z.try_inv().map_err(|_| Error::RegimeNotRigid)?;
    let n = w.len();
    let wd = dual(&w);
    let closed = match closure {
        Closure::Planar => {
            let cup = engine.vector(nested_cup(engine.flavor, &w, &wd)?)?;
            let cap = engine.vector(nested_cap(engine.flavor, &w, &wd)?)?;
            let middle = f.tensor(&engine.identity(&wd)?)?;
            engine.compose_all(&[&cap, &middle, &cup])?
        }
        _ => {
            let cup = engine.vector(nested_cup(engine.flavor, &w, &wd)?)?;
            let beta = block_crossing(engine, closure, &w, &wd)?;
            let middle = engine.identity(&wd)?.tensor(f)?;
            let cap = engine.vector(nested_cap(engine.flavor, &wd, &w)?)?;
            engine.compose_all(&[&cap, &middle, &beta, &cup])?
        }
    };
    let value = closed.as_scalar().expect("closure has empty boundary");
    value.try_mul(&zinv.pow(n as i64)?)
}

/// Traces of the basis diagrams, in basis order.
pub fn trace_vector(engine: &Engine, basis: &[Diagram], closure: &Closure) -> Result<Vec<Scalar>> {
    let ring = engine.ring();
    basis.iter().map(|d| quantum_trace(engine, &DiagramVector::basis(d.clone(), &ring), closure)).collect()
}

/// End(word) with the chosen trace attached.
pub fn end_algebra_with_trace(engine: &Engine, word: &[Letter], closure: &Closure) -> Result<(FinDimAlgebra, Vec<Diagram>)> {
    let (alg, basis) = engine.end_algebra(word)?;
    let tr = trace_vector(engine, &basis, closure)?;
    Ok((alg.with_trace(tr)?, basis))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagrams::{plain_word, EvalParams};
    use crate::tl::kauffman::{kauffman_engine, kauffman_ring};

    #[test]
    fn kink_value() {
        let e = kauffman_engine();
        let a = kauffman_ring().var("A").unwrap();
        let id = e.identity(&plain_word(1)).unwrap();
        let t = quantum_trace(&e, &id, &Closure::Kauffman(a.clone())).unwrap();
        assert_eq!(t, a.pow(-1).unwrap().try_add(&a.pow(-5).unwrap()).unwrap());
        let zero = e.zero(&plain_word(2), &plain_word(2));
        assert!(quantum_trace(&e, &zero, &Closure::Kauffman(a)).unwrap().is_zero());
    }

    #[test]
    fn markov_trace_counts_loops() {
        let r = crate::scalars::Ring::laurent(&["d"]);
        let d = r.var("d").unwrap();
        let e = Engine::new(Flavor::Tl, EvalParams::renormalized(&d).unwrap()).unwrap();
        let id = e.identity(&plain_word(3)).unwrap();
        assert_eq!(quantum_trace(&e, &id, &Closure::Planar).unwrap(), d.pow(3).unwrap());
        let e1 = e.vector(Diagram::tl_generator(3, 1).unwrap()).unwrap();
        // renormalized e1 is δ⁻¹ times the classical one
        assert_eq!(quantum_trace(&e, &e1, &Closure::Planar).unwrap(), d);
    }

    #[test]
    fn brauer_trace_of_identity() {
        let r = crate::scalars::Ring::laurent(&["t"]);
        let t = r.var("t").unwrap();
        let e = Engine::new(Flavor::Brauer, EvalParams::standard(t.clone())).unwrap();
        let x = crate::diagrams::parse_word("X").unwrap();
        assert_eq!(quantum_trace(&e, &e.identity(&x).unwrap(), &Closure::Symmetric).unwrap(), t);
        let inf = Engine::new(Flavor::Brauer, EvalParams::infinity(&r)).unwrap();
        assert!(matches!(quantum_trace(&inf, &inf.identity(&x).unwrap(), &Closure::Symmetric), Err(Error::RegimeNotRigid)));
    }
}
