//! Kauffman bracket images of braids in Temperley–Lieb.

use crate::braid::BraidWord;
use crate::diagrams::{plain_word, Diagram, DiagramVector, Engine, EvalParams, Flavor};
use crate::error::{Error, Result};
use crate::scalars::{Ring, Scalar};

pub fn kauffman_ring() -> Ring {
    Ring::laurent(&["A"])
}

/// δ = −A² − A⁻².
pub fn kauffman_delta(a: &Scalar) -> Result<Scalar> {
    a.pow(2)?.try_add(&a.pow(-2)?).map(|x| x.neg())
}

/// The classical TL engine over laurent(A) with circle −A² − A⁻².
pub fn kauffman_engine() -> Engine {
    let a = kauffman_ring().var("A").expect("A is a variable of the ring");
    Engine::new(Flavor::Tl, EvalParams::standard(kauffman_delta(&a).expect("A is a unit"))).expect("unoriented kernel")
}

/// σ_i^{±1} on `n` strands in an arbitrary TL kernel (c, ζ) with ζ
/// invertible: σ ↦ A·id + A⁻¹ζ⁻¹·e_i and σ⁻¹ ↦ A⁻¹·id + Aζ⁻¹·e_i. The
/// rescaled generator e_i/ζ has circle value c/ζ, which must equal
/// −A² − A⁻².
pub fn crossing(engine: &Engine, a: &Scalar, n: usize, signed: i64) -> Result<DiagramVector> {
    if engine.flavor != Flavor::Tl {
        return Err(Error::FlavorMismatch(engine.flavor.name().into(), "tl".into()));
    }
    let p = &engine.params;
    let zinv = p.straighten_z.try_inv().map_err(|_| Error::RegimeNotRigid)?;
    let delta = p.circle_ccw.try_mul(&zinv)?;
    if delta != kauffman_delta(a)? {
        return Err(Error::InvalidArgument(format!("circle value {delta} is not -A^2 - A^-2 for A = {a}")));
    }
    let i = signed.unsigned_abs() as usize;
    let e = DiagramVector::basis(Diagram::tl_generator(n, i)?, &engine.ring());
    let id = engine.identity(&plain_word(n))?;
    let (x, y) = if signed > 0 { (a.clone(), a.try_inv()?) } else { (a.try_inv()?, a.clone()) };
    id.scale(&x)?.try_add(&e.scale(&y.try_mul(&zinv)?)?)
}

/// Image of a braid word; the last letter is applied first.
pub fn braid_image(engine: &Engine, a: &Scalar, w: &BraidWord) -> Result<DiagramVector> {
    let mut acc = engine.identity(&plain_word(w.n))?;
    for &g in w.gens.iter().rev() {
        acc = engine.compose(&crossing(engine, a, w.n, g)?, &acc)?;
    }
    Ok(acc)
}

/// Kauffman resolution in the classical kernel over laurent(A).
pub fn kauffman_resolve(w: &BraidWord) -> Result<DiagramVector> {
    let engine = kauffman_engine();
    let a = engine.ring().var("A")?;
    braid_image(&engine, &a, w)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_and_inverse() {
        let w = BraidWord::new(2, vec![1]).unwrap();
        let img = kauffman_resolve(&w).unwrap();
        let r = kauffman_ring();
        let a = r.var("A").unwrap();
        let e1 = Diagram::tl_generator(2, 1).unwrap();
        assert_eq!(img.coeff(&Diagram::identity(Flavor::Tl, plain_word(2)).unwrap()), a);
        assert_eq!(img.coeff(&e1), a.try_inv().unwrap());
        let id = kauffman_resolve(&BraidWord::new(2, vec![1, -1]).unwrap()).unwrap();
        assert!(id.terms().len() == 1 && id.terms().keys().next().unwrap().is_identity());
        assert!(kauffman_resolve(&BraidWord::empty(3)).unwrap().terms().keys().next().unwrap().is_identity());
    }

    #[test]
    fn braid_relations() {
        let w = |g: &[i64]| kauffman_resolve(&BraidWord::new(4, g.to_vec()).unwrap()).unwrap();
        assert_eq!(w(&[1, 2, 1]), w(&[2, 1, 2]));
        assert_eq!(w(&[2, 3, 2]), w(&[3, 2, 3]));
        assert_eq!(w(&[1, 3]), w(&[3, 1]));
        assert_eq!(w(&[-1, 2, 1]), w(&[2, 1, -2]));
    }
}
