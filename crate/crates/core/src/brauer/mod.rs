//! Oriented and walled Brauer categories: symmetric braiding, End algebras,
//! the cup filtration and the characteristic-two nilpotent example.

use serde::Serialize;

use crate::diagrams::{word_string, Diagram, DiagramVector, Engine, EvalParams, Flavor, Letter, Word};
use crate::error::{Error, Result};
use crate::linalg::FinDimAlgebra;
use crate::scalars::{Ring, Scalar};
use crate::tl::{layer_algebra, product_table, quantum_trace, trace_vector, Closure, FiltrationReport, Layer};

/// `X^n Y^m`.
pub fn walled_word(n: usize, m: usize) -> Word {
    std::iter::repeat_n(Letter::X, n).chain(std::iter::repeat_n(Letter::Y, m)).collect()
}

/// Transposition of strands `i` and `i+1` (1-based) on `word`.
pub fn symmetric_braiding(word: &[Letter], i: usize) -> Result<Diagram> {
    if i == 0 || i >= word.len() {
        return Err(Error::IndexOutOfRange { index: i, limit: word.len().saturating_sub(1) });
    }
    Diagram::swap(word, i - 1)
}

pub fn brauer_engine(params: EvalParams) -> Result<Engine> {
    Engine::new(Flavor::Brauer, params)
}

/// End(word) on its diagram basis. The trace (symmetric closure) is
/// attached when the kernel is rigid.
pub fn end_algebra(engine: &Engine, word: &[Letter]) -> Result<(FinDimAlgebra, Vec<Diagram>)> {
    if engine.flavor != Flavor::Brauer {
        return Err(Error::FlavorMismatch(engine.flavor.name().into(), "brauer".into()));
    }
    let (alg, basis) = engine.end_algebra(word)?;
    if engine.params.is_rigid() {
        let tr = trace_vector(engine, &basis, &Closure::Symmetric)?;
        return Ok((alg.with_trace(tr)?, basis));
    }
    Ok((alg, basis))
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// (n−k)!(m−k)!·M_k² with M_k = n!m!/((n−k)!(m−k)!k!).
pub fn block_formula(n: usize, m: usize) -> Vec<usize> {
    (0..=n.min(m))
        .map(|k| {
            let mk = factorial(n) * factorial(m) / (factorial(n - k) * factorial(m - k) * factorial(k));
            factorial(n - k) * factorial(m - k) * mk * mk
        })
        .collect()
}

/// Cup filtration of the walled Brauer algebra W_{n,m}(∞).
pub fn brauer_block_report(n: usize, m: usize) -> Result<FiltrationReport> {
    let ring = Ring::Rational;
    let engine = brauer_engine(EvalParams::infinity(&ring))?;
    let word = walled_word(n, m);
    let basis = engine.hom_basis(&word, &word)?;
    let table = product_table(&engine, &basis)?;
    let deg: Vec<usize> = basis.iter().map(|d| d.cups()).collect();
    let mut filtration_ok = true;
    for (i, row) in table.iter().enumerate() {
        for (j, (s, w)) in row.iter().enumerate() {
            if !s.is_zero() && deg[*w] < deg[i].max(deg[j]) {
                filtration_ok = false;
            }
        }
    }
    let top = deg.iter().copied().max().unwrap_or(0);
    let layers: Vec<Layer> = (0..=top)
        .map(|k| Layer { degree: k as i64, dim: deg.iter().filter(|&&d| d == k).count(), blocks: None })
        .collect();
    let all: Vec<usize> = (0..basis.len()).collect();
    let radical = layer_algebra(&ring, &basis, &table, &all)?.radical()?.len();
    let expected = block_formula(n, m);
    let dims: Vec<usize> = layers.iter().map(|l| l.dim).collect();
    let pass = filtration_ok && radical == 0 && dims == expected && basis.len() == factorial(n + m);
    Ok(FiltrationReport {
        kind: "walled-brauer".into(),
        word: word_string(&word),
        dim: basis.len(),
        layers,
        filtration_ok,
        graded_matches: None,
        radical_dim: Some(radical),
        expected_layers: Some(expected),
        pass,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Char2Report {
    pub ring: String,
    pub z: String,
    pub z_squared_is_zero: bool,
    pub trace_of_z: Scalar,
    pub expected_trace: Scalar,
    pub trace_nonzero: bool,
    /// Over rational coefficients the same element satisfies z² = 2z ≠ 0.
    pub char0_z_squared_is_2z: bool,
    pub pass: bool,
}

fn one_minus_swap(engine: &Engine, word: &[Letter]) -> Result<DiagramVector> {
    let s = engine.vector(symmetric_braiding(word, 1)?)?;
    engine.identity(word)?.try_sub(&s)
}

/// z = id − swap on X⊗X in OB(t) over fp:2[t].
pub fn char2_nilpotent_trace_demo() -> Result<Char2Report> {
    let ring = Ring::fp(2, &["t"]);
    let t = ring.var("t")?;
    let engine = brauer_engine(EvalParams::standard(t.clone()))?;
    let xx = walled_word(2, 0);
    let z = one_minus_swap(&engine, &xx)?;
    let z_squared_is_zero = engine.compose(&z, &z)?.is_zero();
    let trace_of_z = quantum_trace(&engine, &z, &Closure::Symmetric)?;
    let expected_trace = t.try_mul(&t)?.try_sub(&t)?;

    let qring = Ring::laurent(&["t"]);
    let qt = qring.var("t")?;
    let qengine = brauer_engine(EvalParams::standard(qt))?;
    let qz = one_minus_swap(&qengine, &xx)?;
    let char0_z_squared_is_2z = qengine.compose(&qz, &qz)? == qz.scale(&qring.from_int(2))?;

    let trace_nonzero = !trace_of_z.is_zero();
    let pass = z_squared_is_zero && trace_of_z == expected_trace && trace_nonzero && char0_z_squared_is_2z;
    Ok(Char2Report {
        ring: ring.to_string(),
        z: z.to_string(),
        z_squared_is_zero,
        trace_of_z,
        expected_trace,
        trace_nonzero,
        char0_z_squared_is_2z,
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn block_formula_values() {
        assert_eq!(block_formula(1, 1), [1, 1]);
        assert_eq!(block_formula(2, 1), [2, 4]);
        assert_eq!(block_formula(2, 2), [4, 16, 4]);
    }

    #[test]
    fn small_block_reports() {
        for (n, m) in [(0, 0), (1, 0), (1, 1), (2, 1), (2, 2)] {
            let r = brauer_block_report(n, m).unwrap();
            assert!(r.pass, "{n},{m}: {r:?}");
        }
    }

    #[test]
    fn char2_demo() {
        let r = char2_nilpotent_trace_demo().unwrap();
        assert!(r.pass, "{r:?}");
    }

    #[test]
    fn swap_is_an_involution() {
        let r = Ring::Rational;
        let e = brauer_engine(EvalParams::infinity(&r)).unwrap();
        for w in ["XX", "XY", "YX"] {
            let word = crate::diagrams::parse_word(w).unwrap();
            let s = e.vector(symmetric_braiding(&word, 1).unwrap()).unwrap();
            let flipped = crate::diagrams::parse_word(&w.chars().rev().collect::<String>()).unwrap();
            let s2 = e.vector(symmetric_braiding(&flipped, 1).unwrap()).unwrap();
            assert_eq!(e.compose(&s2, &s).unwrap(), e.identity(&word).unwrap());
        }
    }

    #[test]
    fn end_algebra_dims() {
        let r = Ring::laurent(&["t"]);
        let t = r.var("t").unwrap();
        let e = brauer_engine(EvalParams::standard(t.clone())).unwrap();
        let (a, _) = end_algebra(&e, &walled_word(1, 0)).unwrap();
        assert_eq!(a.dim(), 1);
        assert_eq!(a.trace().unwrap(), [t]);
        let (a, _) = end_algebra(&e, &walled_word(3, 0)).unwrap();
        assert_eq!(a.dim(), 6);
        let inf = brauer_engine(EvalParams::infinity(&r)).unwrap();
        let (a, _) = end_algebra(&inf, &walled_word(1, 1)).unwrap();
        assert_eq!(a.dim(), 2);
        assert!(a.trace().is_none());
    }
}
