use crate::error::{Error, Result};
use crate::scalars::{Ring, Scalar};

/// Circle and straightening scalars of a composition kernel.
///
/// Unoriented kernels use `circle_ccw` and `straighten_z` only; the other
/// two fields mirror them. Oriented kernels distinguish counterclockwise
/// circles (r+ closing s+) from clockwise ones, and the r+/s- turn-back
/// (`straighten_z`) from the r-/s+ one (`straighten_zstar`).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EvalParams {
    pub circle_ccw: Scalar,
    pub circle_cw: Scalar,
    pub straighten_z: Scalar,
    pub straighten_zstar: Scalar,
    pub oriented: bool,
}

impl EvalParams {
    pub fn unoriented(circle: Scalar, straighten: Scalar) -> Result<EvalParams> {
        if !circle.same_ring(&straighten) {
            return Err(Error::RingMismatch(circle.ring().to_string(), straighten.ring().to_string()));
        }
        Ok(EvalParams {
            circle_ccw: circle.clone(),
            circle_cw: circle,
            straighten_z: straighten.clone(),
            straighten_zstar: straighten,
            oriented: false,
        })
    }

    pub fn oriented(ccw: Scalar, cw: Scalar, z: Scalar, zstar: Scalar) -> Result<EvalParams> {
        for s in [&cw, &z, &zstar] {
            if !ccw.same_ring(s) {
                return Err(Error::RingMismatch(ccw.ring().to_string(), s.ring().to_string()));
            }
        }
        Ok(EvalParams { circle_ccw: ccw, circle_cw: cw, straighten_z: z, straighten_zstar: zstar, oriented: true })
    }

    /// Classical kernel: circle `delta`, straightening 1.
    pub fn standard(delta: Scalar) -> EvalParams {
        let one = delta.one_like();
        EvalParams::unoriented(delta, one).unwrap()
    }

    /// Renormalized kernel: circle 1, straightening `delta^-1`.
    pub fn renormalized(delta: &Scalar) -> Result<EvalParams> {
        EvalParams::unoriented(delta.one_like(), delta.try_inv()?)
    }

    /// Asymptotic kernel: circle 1, straightening 0.
    pub fn infinity(ring: &Ring) -> EvalParams {
        EvalParams::unoriented(ring.one(), ring.zero()).unwrap()
    }

    /// Two-parameter renormalized kernel; `None` stands for the asymptotic
    /// value of that parameter.
    pub fn two_parameter(ring: &Ring, delta1: Option<&Scalar>, delta2: Option<&Scalar>) -> Result<EvalParams> {
        let inv = |d: Option<&Scalar>| d.map(|d| d.try_inv()).unwrap_or_else(|| Ok(ring.zero()));
        EvalParams::oriented(ring.one(), ring.one(), inv(delta1)?, inv(delta2)?)
    }

    pub fn ring(&self) -> Ring {
        self.circle_ccw.ring()
    }

    /// True when both straightening scalars are invertible.
    pub fn is_rigid(&self) -> bool {
        self.straighten_z.try_inv().is_ok() && self.straighten_zstar.try_inv().is_ok()
    }

    pub fn is_symmetric(&self) -> bool {
        self.circle_ccw == self.circle_cw && self.straighten_z == self.straighten_zstar
    }

    /// Kernel with the two straightening scalars exchanged, which is the
    /// kernel seen after a vertical flip.
    pub fn flipped(&self) -> EvalParams {
        EvalParams {
            straighten_z: self.straighten_zstar.clone(),
            straighten_zstar: self.straighten_z.clone(),
            ..self.clone()
        }
    }

    /// Parses `standard`, `renorm`, `infinity` or
    /// `oriented:c1,c2,z,zs`; scalars are read in `ring`, and `delta` is
    /// required by the first two.
    pub fn parse(text: &str, ring: &Ring, delta: Option<&Scalar>) -> Result<EvalParams> {
        let need = || delta.cloned().ok_or_else(|| Error::InvalidArgument(format!("regime `{text}` needs --delta")));
        match text {
            "standard" => Ok(EvalParams::standard(need()?)),
            "renorm" => EvalParams::renormalized(&need()?),
            "infinity" => Ok(EvalParams::infinity(ring)),
            _ => {
                let rest = text
                    .strip_prefix("oriented:")
                    .ok_or_else(|| Error::Parse(format!("unknown regime `{text}`")))?;
                let parts: Vec<&str> = rest.split(',').collect();
                if parts.len() != 4 {
                    return Err(Error::Parse("oriented regime takes four scalars".into()));
                }
                let v: Vec<Scalar> = parts.iter().map(|p| ring.parse(p)).collect::<Result<_>>()?;
                EvalParams::oriented(v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_regimes() {
        let r: Ring = "laurent:d".parse().unwrap();
        let d = r.var("d").unwrap();
        let p = EvalParams::parse("renorm", &r, Some(&d)).unwrap();
        assert_eq!(p.straighten_z, r.parse("d^-1").unwrap());
        assert!(EvalParams::parse("standard", &r, None).is_err());
        let o = EvalParams::parse("oriented:1,1,d^-1,0", &r, None).unwrap();
        assert!(o.oriented && !o.is_rigid());
        assert!(EvalParams::infinity(&r).is_symmetric());
    }
}
