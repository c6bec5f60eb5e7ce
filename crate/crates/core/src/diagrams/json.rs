//! Canonical JSON for diagrams and diagram vectors.
//!
//! `{"flavor":"tl","bottom":3,"top":3,"arcs":[["B1","B2"],["B3","T3"],...]}`;
//! oriented flavors write boundaries as letter strings such as `"XY"`.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::diagram::{parse_word, plain_word, word_string, Diagram, Flavor, Word};
use super::vector::{DiagramVector, Shape};
use crate::error::{Error, Result};
use crate::scalars::Ring;

#[derive(Serialize, Deserialize)]
struct RawDiagram {
    flavor: String,
    bottom: Value,
    top: Value,
    arcs: Vec<[String; 2]>,
}

#[derive(Serialize, Deserialize)]
struct RawTerm {
    coeff: String,
    arcs: Vec<[String; 2]>,
}

#[derive(Serialize, Deserialize)]
struct RawVector {
    flavor: String,
    bottom: Value,
    top: Value,
    ring: String,
    terms: Vec<RawTerm>,
}

fn boundary_value(flavor: Flavor, w: &[super::diagram::Letter]) -> Value {
    if flavor == Flavor::Tl {
        Value::from(w.len())
    } else {
        Value::from(word_string(w))
    }
}

fn boundary_word(flavor: Flavor, v: &Value) -> Result<Word> {
    match (flavor, v) {
        (Flavor::Tl, Value::Number(n)) => {
            Ok(plain_word(n.as_u64().ok_or_else(|| Error::Parse("boundary count must be a natural number".into()))? as usize))
        }
        (Flavor::Otl | Flavor::Brauer, Value::String(s)) => parse_word(s),
        _ => Err(Error::Parse(format!("bad boundary {v} for flavor {}", flavor.name()))),
    }
}

fn arc_labels(d: &Diagram) -> Vec<[String; 2]> {
    d.arcs().iter().map(|&(p, q)| [d.point_label(p), d.point_label(q)]).collect()
}

fn label_index(label: &str, n: usize, m: usize) -> Result<usize> {
    let bad = || Error::Parse(format!("bad point label `{label}`"));
    let (side, num) = label.split_at(1);
    let k: usize = num.parse().map_err(|_| bad())?;
    match side {
        "B" if k >= 1 && k <= n => Ok(k - 1),
        "T" if k >= 1 && k <= m => Ok(n + k - 1),
        _ => Err(bad()),
    }
}

fn build(flavor: Flavor, bottom: Word, top: Word, arcs: &[[String; 2]]) -> Result<Diagram> {
    let (n, m) = (bottom.len(), top.len());
    let pairs = arcs.iter().map(|[a, b]| Ok((label_index(a, n, m)?, label_index(b, n, m)?))).collect::<Result<Vec<_>>>()?;
    Diagram::new(flavor, bottom, top, pairs)
}

pub fn diagram_to_json(d: &Diagram) -> Value {
    serde_json::to_value(RawDiagram {
        flavor: d.flavor().name().into(),
        bottom: boundary_value(d.flavor(), d.bottom()),
        top: boundary_value(d.flavor(), d.top()),
        arcs: arc_labels(d),
    })
    .expect("plain data serializes")
}

pub fn diagram_from_json(v: &Value) -> Result<Diagram> {
    let raw: RawDiagram = serde_json::from_value(v.clone())?;
    let flavor: Flavor = raw.flavor.parse()?;
    build(flavor, boundary_word(flavor, &raw.bottom)?, boundary_word(flavor, &raw.top)?, &raw.arcs)
}

pub fn vector_to_json(v: &DiagramVector) -> Value {
    let flavor = v.shape().flavor;
    serde_json::to_value(RawVector {
        flavor: flavor.name().into(),
        bottom: boundary_value(flavor, v.bottom()),
        top: boundary_value(flavor, v.top()),
        ring: v.ring().to_string(),
        terms: v.terms().iter().map(|(d, c)| RawTerm { coeff: c.to_string(), arcs: arc_labels(d) }).collect(),
    })
    .expect("plain data serializes")
}

pub fn vector_from_json(v: &Value) -> Result<DiagramVector> {
    let raw: RawVector = serde_json::from_value(v.clone())?;
    let flavor: Flavor = raw.flavor.parse()?;
    let ring: Ring = raw.ring.parse()?;
    let bottom = boundary_word(flavor, &raw.bottom)?;
    let top = boundary_word(flavor, &raw.top)?;
    let mut out = DiagramVector::zero(Shape { flavor, bottom: bottom.clone(), top: top.clone() }, ring.clone());
    for t in &raw.terms {
        let d = build(flavor, bottom.clone(), top.clone(), &t.arcs)?;
        out.add_term(d, ring.parse(&t.coeff)?)?;
    }
    Ok(out)
}

impl Serialize for Diagram {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        diagram_to_json(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Diagram {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        diagram_from_json(&Value::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

impl Serialize for DiagramVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        vector_to_json(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for DiagramVector {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        vector_from_json(&Value::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn e1_json_shape() {
        let e1 = Diagram::tl_generator(3, 1).unwrap();
        let j = serde_json::to_string(&e1).unwrap();
        assert_eq!(j, r#"{"flavor":"tl","bottom":3,"top":3,"arcs":[["B1","B2"],["B3","T3"],["T1","T2"]]}"#);
        let back: Diagram = serde_json::from_str(&j).unwrap();
        assert_eq!(back, e1);
    }

    #[test]
    fn rejects_bad_labels() {
        let v: Value = serde_json::from_str(r#"{"flavor":"tl","bottom":1,"top":1,"arcs":[["B1","T2"]]}"#).unwrap();
        assert!(diagram_from_json(&v).is_err());
    }

    #[test]
    fn vector_round_trip() {
        let r: Ring = "laurent:d".parse().unwrap();
        let e1 = Diagram::tl_generator(2, 1).unwrap();
        let v = DiagramVector::from_diagram(e1, r.parse("-d^-1").unwrap());
        let back = vector_from_json(&vector_to_json(&v)).unwrap();
        assert_eq!(back, v);
    }
}
