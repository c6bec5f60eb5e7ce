//! Jones–Wenzl projectors.

use crate::diagrams::{enumerate_tl_basis, plain_word, Diagram, DiagramVector, Engine, EvalParams, Flavor};
use crate::error::{Error, Result};
use crate::scalars::{Ring, Scalar};

/// The sequence a_0 = 0, a_1 = 1, a_{k+1} = c·a_k − ζ²·a_{k−1}.
///
/// In the classical kernel (δ, 1) these are the quantum integers [k]; in
/// a kernel (c, ζ) the recursion coefficient at step k is a_k / a_{k+1}.
pub fn recursion_numbers(params: &EvalParams, upto: usize) -> Result<Vec<Scalar>> {
    let c = &params.circle_ccw;
    let z2 = params.straighten_z.try_mul(&params.straighten_z)?;
    let mut a = vec![c.zero_like(), c.one_like()];
    while a.len() <= upto {
        let k = a.len() - 1;
        a.push(c.try_mul(&a[k])?.try_sub(&z2.try_mul(&a[k - 1])?)?);
    }
    a.truncate(upto + 1);
    Ok(a)
}

/// JW_n by the recursion JW_{k+1} = P − (a_k/a_{k+1})·P e_k P with
/// P = JW_k ⊗ id.
pub fn jones_wenzl(n: usize, params: &EvalParams) -> Result<DiagramVector> {
    if n == 0 {
        return Err(Error::InvalidArgument("Jones-Wenzl projector needs n >= 1".into()));
    }
    let engine = Engine::new(Flavor::Tl, params.clone())?;
    let ring = engine.ring();
    let a = recursion_numbers(params, n)?;
    let id1 = engine.identity(&plain_word(1))?;
    let mut jw = id1.clone();
    for k in 1..n {
        if a[k + 1].is_zero() {
            return Err(Error::VanishingQuantumInteger(k + 1));
        }
        let mu = a[k].try_div(&a[k + 1])?;
        let p = jw.tensor(&id1)?;
        let e = DiagramVector::basis(Diagram::tl_generator(k + 1, k)?, &ring);
        let pep = engine.compose_all(&[&p, &e, &p])?;
        jw = p.try_sub(&pep.scale(&mu)?)?;
    }
    Ok(jw)
}

/// Caps on the bottom row are pairwise non-nested.
fn caps_unnested(d: &Diagram) -> bool {
    let n = d.n();
    let caps: Vec<(usize, usize)> = d.arcs().iter().copied().filter(|&(p, q)| p < n && q < n).collect();
    caps.iter().all(|&(a, b)| caps.iter().all(|&(c, e)| !(a < c && e < b)))
}

/// Signed sum of the self-flipped TL_n diagrams with non-nested caps.
pub fn jones_wenzl_closed_form_infinity(n: usize, ring: &Ring) -> Result<DiagramVector> {
    if n == 0 {
        return Err(Error::InvalidArgument("Jones-Wenzl projector needs n >= 1".into()));
    }
    let mut out = DiagramVector::zero(
        crate::diagrams::Shape { flavor: Flavor::Tl, bottom: plain_word(n), top: plain_word(n) },
        ring.clone(),
    );
    for d in enumerate_tl_basis(n, n) {
        if d.flip() == d && caps_unnested(&d) {
            let sign = if d.caps() % 2 == 0 { 1 } else { -1 };
            out.add_term(d, ring.from_int(sign))?;
        }
    }
    Ok(out)
}

/// Checks p² = p and e_i p = p e_i = 0 for every generator.
pub fn check_projector(engine: &Engine, p: &DiagramVector) -> Result<JwCheck> {
    let n = p.bottom().len();
    let ring = engine.ring();
    let idempotent = engine.compose(p, p)? == *p;
    let mut annihilated = true;
    for i in 1..n {
        let e = DiagramVector::basis(Diagram::tl_generator(n, i)?, &ring);
        annihilated &= engine.compose(&e, p)?.is_zero() && engine.compose(p, &e)?.is_zero();
    }
    let identity_coefficient_one = p.coeff(&Diagram::identity(Flavor::Tl, plain_word(n))?).is_one();
    Ok(JwCheck { idempotent, annihilated, identity_coefficient_one })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, serde::Serialize)]
pub struct JwCheck {
    pub idempotent: bool,
    pub annihilated: bool,
    pub identity_coefficient_one: bool,
}

impl JwCheck {
    pub fn pass(&self) -> bool {
        self.idempotent && self.annihilated && self.identity_coefficient_one
    }
}
