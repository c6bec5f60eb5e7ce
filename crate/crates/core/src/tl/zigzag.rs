use serde::Serialize;

use crate::diagrams::{Diagram, Engine, EvalParams, Flavor, Letter};
use crate::error::{Error, Result};
use crate::scalars::Scalar;

/// The four zig-zag composites of the oriented caps and cups.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZigzagReport {
    /// (r₊⊗1)(1⊗s₋) on Y
    pub z1: Scalar,
    /// (1⊗r₊)(s₋⊗1) on X
    pub z2: Scalar,
    /// (r₋⊗1)(1⊗s₊) on X
    pub z3: Scalar,
    /// (1⊗r₋)(s₊⊗1) on Y
    pub z4: Scalar,
    pub z: Scalar,
    pub zstar: Scalar,
    pub pass: bool,
}

fn zigzag(engine: &Engine, upper: &Diagram, lower: &Diagram) -> Result<Scalar> {
    let (s, d) = engine.compose_basis(upper, lower)?;
    if !d.is_identity() {
        return Err(Error::InvalidDiagram(format!("zig-zag composite reduced to {d}")));
    }
    Ok(s)
}

pub fn zigzag_scalars(params: &EvalParams) -> Result<ZigzagReport> {
    if !params.oriented {
        return Err(Error::RegimeNotOriented);
    }
    let engine = Engine::new(Flavor::Otl, params.clone())?;
    let (x, y) = (Letter::X, Letter::Y);
    let id = |l: Letter| Diagram::identity(Flavor::Otl, vec![l]);
    let r_plus = Diagram::cap(Flavor::Otl, y, x)?;
    let r_minus = Diagram::cap(Flavor::Otl, x, y)?;
    let s_plus = Diagram::cup(Flavor::Otl, y, x)?;
    let s_minus = Diagram::cup(Flavor::Otl, x, y)?;
    let z1 = zigzag(&engine, &r_plus.tensor(&id(y)?)?, &id(y)?.tensor(&s_minus)?)?;
    let z2 = zigzag(&engine, &id(x)?.tensor(&r_plus)?, &s_minus.tensor(&id(x)?)?)?;
    let z3 = zigzag(&engine, &r_minus.tensor(&id(x)?)?, &id(x)?.tensor(&s_plus)?)?;
    let z4 = zigzag(&engine, &id(y)?.tensor(&r_minus)?, &s_plus.tensor(&id(y)?)?)?;
    let pass = z1 == z2 && z3 == z4;
    Ok(ZigzagReport { z: z1.clone(), zstar: z3.clone(), z1, z2, z3, z4, pass })
}
