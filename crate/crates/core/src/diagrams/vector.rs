use std::collections::BTreeMap;
use std::fmt;

use super::diagram::{Diagram, Flavor, Letter, Word};
use crate::error::{Error, Result};
use crate::scalars::{Ring, Scalar};

/// Boundary data shared by every term of a [`DiagramVector`].
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Shape {
    pub flavor: Flavor,
    pub bottom: Word,
    pub top: Word,
}

impl Shape {
    pub fn of(d: &Diagram) -> Shape {
        Shape { flavor: d.flavor(), bottom: d.bottom().to_vec(), top: d.top().to_vec() }
    }

    pub fn matches(&self, d: &Diagram) -> bool {
        self.flavor == d.flavor() && self.bottom == d.bottom() && self.top == d.top()
    }
}

/// A finite linear combination of diagrams of one shape. Zero coefficients
/// are never stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DiagramVector {
    shape: Shape,
    ring: Ring,
    terms: BTreeMap<Diagram, Scalar>,
}

impl DiagramVector {
    pub fn zero(shape: Shape, ring: Ring) -> DiagramVector {
        DiagramVector { shape, ring, terms: BTreeMap::new() }
    }

    pub fn from_diagram(d: Diagram, coeff: Scalar) -> DiagramVector {
        let mut v = DiagramVector::zero(Shape::of(&d), coeff.ring());
        v.add_term(d, coeff).expect("shape and ring agree");
        v
    }

    pub fn basis(d: Diagram, ring: &Ring) -> DiagramVector {
        DiagramVector::from_diagram(d, ring.one())
    }

    pub fn identity(flavor: Flavor, word: Word, ring: &Ring) -> Result<DiagramVector> {
        Ok(DiagramVector::basis(Diagram::identity(flavor, word)?, ring))
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn bottom(&self) -> &[Letter] {
        &self.shape.bottom
    }

    pub fn top(&self) -> &[Letter] {
        &self.shape.top
    }

    pub fn terms(&self) -> &BTreeMap<Diagram, Scalar> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, d: &Diagram) -> Scalar {
        self.terms.get(d).cloned().unwrap_or_else(|| self.ring.zero())
    }

    pub fn add_term(&mut self, d: Diagram, c: Scalar) -> Result<()> {
        if !self.shape.matches(&d) {
            return Err(Error::BoundaryMismatch(format!("diagram {d} does not have the vector's shape")));
        }
        if c.ring() != self.ring {
            return Err(Error::RingMismatch(self.ring.to_string(), c.ring().to_string()));
        }
        if c.is_zero() {
            return Ok(());
        }
        match self.terms.get_mut(&d) {
            Some(x) => {
                let s = x.try_add(&c)?;
                if s.is_zero() {
                    self.terms.remove(&d);
                } else {
                    *x = s;
                }
            }
            None => {
                self.terms.insert(d, c);
            }
        }
        Ok(())
    }

    pub fn try_add(&self, other: &DiagramVector) -> Result<DiagramVector> {
        if self.shape != other.shape {
            return Err(Error::BoundaryMismatch("vectors of different shapes".into()));
        }
        let mut out = self.clone();
        for (d, c) in &other.terms {
            out.add_term(d.clone(), c.clone())?;
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &DiagramVector) -> Result<DiagramVector> {
        self.try_add(&other.scale(&other.ring.from_int(-1))?)
    }

    pub fn scale(&self, c: &Scalar) -> Result<DiagramVector> {
        let mut out = DiagramVector::zero(self.shape.clone(), self.ring.clone());
        for (d, x) in &self.terms {
            out.add_term(d.clone(), x.try_mul(c)?)?;
        }
        Ok(out)
    }

    /// Coefficients on an ordered basis of the shape.
    pub fn coordinates(&self, basis: &[Diagram]) -> Result<Vec<Scalar>> {
        let idx: BTreeMap<&Diagram, usize> = basis.iter().enumerate().map(|(i, d)| (d, i)).collect();
        let mut out = vec![self.ring.zero(); basis.len()];
        for (d, c) in &self.terms {
            let i = *idx.get(d).ok_or_else(|| Error::InvalidArgument(format!("{d} is not in the basis")))?;
            out[i] = c.clone();
        }
        Ok(out)
    }

    pub fn from_coordinates(shape: Shape, ring: &Ring, basis: &[Diagram], coords: &[Scalar]) -> Result<DiagramVector> {
        if basis.len() != coords.len() {
            return Err(Error::SizeMismatch(format!("{} coordinates for {} basis diagrams", coords.len(), basis.len())));
        }
        let mut out = DiagramVector::zero(shape, ring.clone());
        for (d, c) in basis.iter().zip(coords) {
            out.add_term(d.clone(), c.clone())?;
        }
        Ok(out)
    }

    pub fn flip(&self) -> DiagramVector {
        let shape = Shape { flavor: self.shape.flavor, bottom: self.shape.top.clone(), top: self.shape.bottom.clone() };
        DiagramVector { shape, ring: self.ring.clone(), terms: self.terms.iter().map(|(d, c)| (d.flip(), c.clone())).collect() }
    }

    pub fn tensor(&self, other: &DiagramVector) -> Result<DiagramVector> {
        let shape = Shape {
            flavor: self.shape.flavor,
            bottom: [self.shape.bottom.as_slice(), other.shape.bottom.as_slice()].concat(),
            top: [self.shape.top.as_slice(), other.shape.top.as_slice()].concat(),
        };
        if self.shape.flavor != other.shape.flavor {
            return Err(Error::FlavorMismatch(self.shape.flavor.name().into(), other.shape.flavor.name().into()));
        }
        let mut out = DiagramVector::zero(shape, self.ring.clone());
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.add_term(a.tensor(b)?, x.try_mul(y)?)?;
            }
        }
        Ok(out)
    }

    /// The only scalar coefficient when the vector is a multiple of the
    /// empty diagram.
    pub fn as_scalar(&self) -> Option<Scalar> {
        if self.shape.bottom.is_empty() && self.shape.top.is_empty() {
            Some(self.terms.values().next().cloned().unwrap_or_else(|| self.ring.zero()))
        } else {
            None
        }
    }
}

impl fmt::Display for DiagramVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in &self.terms {
            let text = c.to_string();
            let (neg, body) = match text.strip_prefix('-') {
                Some(rest) if !rest.contains(' ') => (true, rest.to_string()),
                _ => (false, text.clone()),
            };
            let body = if body.contains(' ') { format!("({body})") } else { body };
            let sep = match (first, neg) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            if body == "1" {
                write!(f, "{sep}{d}")?;
            } else {
                write!(f, "{sep}{body}*{d}")?;
            }
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagrams::diagram::plain_word;

    #[test]
    fn display_and_cancellation() {
        let r = Ring::Rational;
        let id = DiagramVector::identity(Flavor::Tl, plain_word(3), &r).unwrap();
        let e1 = DiagramVector::basis(Diagram::tl_generator(3, 1).unwrap(), &r);
        let e2 = DiagramVector::basis(Diagram::tl_generator(3, 2).unwrap(), &r);
        let v = id.try_sub(&e1).unwrap().try_sub(&e2).unwrap();
        let mut names: Vec<String> = v.terms().keys().map(|d| d.to_string()).collect();
        names.sort();
        assert_eq!(names, ["e1", "e2", "id3"]);
        assert!(v.try_sub(&v).unwrap().is_zero());
    }
}
