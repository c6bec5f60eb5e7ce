use rayon::prelude::*;

use super::compose::compose_diagrams;
use super::diagram::{plain_word, Diagram, Flavor, Letter, Word};
use super::enumerate::hom_basis;
use super::params::EvalParams;
use super::vector::{DiagramVector, Shape};
use crate::error::{Error, Result};
use crate::linalg::FinDimAlgebra;
use crate::scalars::{Ring, Scalar};

/// A linearized diagram category: a flavor plus a composition kernel.
#[derive(Clone, Debug)]
pub struct Engine {
    pub flavor: Flavor,
    pub params: EvalParams,
}

impl Engine {
    pub fn new(flavor: Flavor, params: EvalParams) -> Result<Engine> {
        if flavor != Flavor::Otl && params.oriented && !params.is_symmetric() {
            return Err(Error::InvalidArgument(format!("{} kernel needs symmetric parameters", flavor.name())));
        }
        Ok(Engine { flavor, params })
    }

    pub fn ring(&self) -> Ring {
        self.params.ring()
    }

    /// `n` unlabeled points, for the plain flavor.
    pub fn plain(&self, n: usize) -> Word {
        plain_word(n)
    }

    pub fn identity(&self, word: &[Letter]) -> Result<DiagramVector> {
        DiagramVector::identity(self.flavor, word.to_vec(), &self.ring())
    }

    pub fn vector(&self, d: Diagram) -> Result<DiagramVector> {
        if d.flavor() != self.flavor {
            return Err(Error::FlavorMismatch(d.flavor().name().into(), self.flavor.name().into()));
        }
        Ok(DiagramVector::basis(d, &self.ring()))
    }

    pub fn zero(&self, bottom: &[Letter], top: &[Letter]) -> DiagramVector {
        DiagramVector::zero(Shape { flavor: self.flavor, bottom: bottom.to_vec(), top: top.to_vec() }, self.ring())
    }

    pub fn hom_basis(&self, bottom: &[Letter], top: &[Letter]) -> Result<Vec<Diagram>> {
        hom_basis(self.flavor, bottom, top)
    }

    /// `u ∘ v` on basis diagrams: the structure constant and the result.
    pub fn compose_basis(&self, u: &Diagram, v: &Diagram) -> Result<(Scalar, Diagram)> {
        let c = compose_diagrams(u, v)?;
        let s = c.scalar(&self.params)?;
        Ok((s, c.diagram))
    }

    /// `u ∘ v`, with `v` applied first.
    pub fn compose(&self, u: &DiagramVector, v: &DiagramVector) -> Result<DiagramVector> {
        if v.top() != u.bottom() {
            return Err(Error::BoundaryMismatch(format!("{} points on top vs {} below", v.top().len(), u.bottom().len())));
        }
        let ring = self.ring();
        for x in [u, v] {
            if *x.ring() != ring {
                return Err(Error::RingMismatch(ring.to_string(), x.ring().to_string()));
            }
            if x.shape().flavor != self.flavor {
                return Err(Error::FlavorMismatch(x.shape().flavor.name().into(), self.flavor.name().into()));
            }
        }
        let shape = Shape { flavor: self.flavor, bottom: v.bottom().to_vec(), top: u.top().to_vec() };
        let mut out = DiagramVector::zero(shape, ring);
        for (a, x) in u.terms() {
            for (b, y) in v.terms() {
                let (s, w) = self.compose_basis(a, b)?;
                if s.is_zero() {
                    continue;
                }
                out.add_term(w, x.try_mul(y)?.try_mul(&s)?)?;
            }
        }
        Ok(out)
    }

    /// Composes a chain, rightmost applied first.
    pub fn compose_all(&self, chain: &[&DiagramVector]) -> Result<DiagramVector> {
        let (last, rest) = chain.split_last().ok_or_else(|| Error::InvalidArgument("empty composition".into()))?;
        let mut acc = (*last).clone();
        for f in rest.iter().rev() {
            acc = self.compose(f, &acc)?;
        }
        Ok(acc)
    }

    pub fn tensor(&self, a: &DiagramVector, b: &DiagramVector) -> Result<DiagramVector> {
        a.tensor(b)
    }

    /// End(word) as an algebra on its diagram basis, product `b_i ∘ b_j`.
    pub fn end_algebra(&self, word: &[Letter]) -> Result<(FinDimAlgebra, Vec<Diagram>)> {
        let basis = self.hom_basis(word, word)?;
        let index: std::collections::HashMap<&Diagram, usize> = basis.iter().enumerate().map(|(i, d)| (d, i)).collect();
        let rows: Vec<Vec<Vec<(usize, Scalar)>>> = basis
            .par_iter()
            .map(|a| {
                basis
                    .iter()
                    .map(|b| {
                        let (s, w) = self.compose_basis(a, b)?;
                        Ok(if s.is_zero() { vec![] } else { vec![(index[&w], s)] })
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<_>>()?;
        let unit = basis.iter().position(|d| d.is_identity());
        let labels = basis.iter().map(|d| d.to_string()).collect();
        let alg = FinDimAlgebra::from_sparse(self.ring(), labels, rows, unit)?;
        Ok((alg, basis))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagrams::diagram::parse_word;

    #[test]
    fn end_algebra_units() {
        let r = Ring::Rational;
        let e = Engine::new(Flavor::Tl, EvalParams::standard(r.from_int(2))).unwrap();
        let (a, basis) = e.end_algebra(&plain_word(3)).unwrap();
        assert_eq!(basis.len(), 5);
        assert!(a.unit().is_some());
        let xy = parse_word("XY").unwrap();
        let b = Engine::new(Flavor::Brauer, EvalParams::infinity(&r)).unwrap();
        assert_eq!(b.end_algebra(&xy).unwrap().1.len(), 2);
    }
}
