//! Stacking two diagrams and counting what was removed at the interface.

use super::diagram::{Diagram, Flavor, Letter};
use super::params::EvalParams;
use crate::error::{Error, Result};
use crate::scalars::Scalar;

/// Result of stacking `u` on top of `v` before any scalar is applied.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Composite {
    pub diagram: Diagram,
    /// Closed loops whose leftmost interface point carries Y (or any loop
    /// in the unoriented flavor).
    pub loops_ccw: usize,
    pub loops_cw: usize,
    /// Removed arcs by type: r+, r-, s+, s-. Only tracked for the planar
    /// oriented flavor; crossings can change an arc's type, so the Brauer
    /// flavor leaves this zero.
    pub removed: [usize; 4],
    /// Number of straightenings, half the drop in caps plus cups.
    pub sigma: usize,
}

impl Composite {
    pub fn loops(&self) -> usize {
        self.loops_ccw + self.loops_cw
    }

    /// Exponents (circle ccw, circle cw, z, z*) applied by an oriented
    /// kernel.
    pub fn oriented_exponents(&self) -> [usize; 4] {
        let [rp, _, sp, _] = self.removed;
        [self.loops_ccw, self.loops_cw, rp - self.loops_ccw, sp - self.loops_ccw]
    }

    /// The structure constant of this composite under `params`.
    pub fn scalar(&self, params: &EvalParams) -> Result<Scalar> {
        let flavor = self.diagram.flavor();
        let (bases, exps): ([&Scalar; 4], [usize; 4]) = match flavor {
            Flavor::Otl => (
                [&params.circle_ccw, &params.circle_cw, &params.straighten_z, &params.straighten_zstar],
                self.oriented_exponents(),
            ),
            Flavor::Tl | Flavor::Brauer => {
                if params.oriented && !params.is_symmetric() {
                    return Err(Error::InvalidArgument(format!("{} kernel needs symmetric parameters", flavor.name())));
                }
                let l = self.loops();
                ([&params.circle_ccw, &params.circle_ccw, &params.straighten_z, &params.straighten_z], [l, 0, self.sigma - l, 0])
            }
        };
        let mut acc = params.circle_ccw.one_like();
        for (b, &e) in bases.iter().zip(&exps) {
            if e == 0 {
                continue;
            }
            if b.is_zero() {
                return Ok(b.zero_like());
            }
            acc = acc.try_mul(&b.pow(e as i64)?)?;
        }
        Ok(acc)
    }
}

/// Stacks `u` above `v`. The top boundary of `v` must equal the bottom
/// boundary of `u`.
pub fn compose_diagrams(u: &Diagram, v: &Diagram) -> Result<Composite> {
    if u.flavor() != v.flavor() {
        return Err(Error::FlavorMismatch(u.flavor().name().into(), v.flavor().name().into()));
    }
    if v.top() != u.bottom() {
        return Err(Error::BoundaryMismatch(format!("{} points on top vs {} below", v.m(), u.n())));
    }
    let (nv, k, mu) = (v.n(), v.m(), u.m());
    let vp = v.partners();
    let up = u.partners();
    // Global nodes: v bottom 0..nv, interface nv..nv+k, u top nv+k..nv+k+mu.
    // v's local numbering is already global; u's local index y sits at nv+y.
    let is_interface = |g: usize| g >= nv && g < nv + k;
    let mut visited = vec![false; k];
    let mut w_arcs = Vec::with_capacity((nv + mu) / 2);
    let mut done = vec![false; nv + mu];
    let to_w = |g: usize| if g < nv { g } else { g - k };

    for start in (0..nv).chain(nv + k..nv + k + mu) {
        if done[to_w(start)] {
            continue;
        }
        let (mut cur, mut via_u) = if start < nv { (vp[start], true) } else { (nv + up[start - nv], false) };
        while is_interface(cur) {
            visited[cur - nv] = true;
            cur = if via_u { nv + up[cur - nv] } else { vp[cur] };
            via_u = !via_u;
        }
        let (a, b) = (to_w(start), to_w(cur));
        done[a] = true;
        done[b] = true;
        w_arcs.push((a.min(b), a.max(b)));
    }

    let (mut loops_ccw, mut loops_cw) = (0, 0);
    for j in 0..k {
        if visited[j] {
            continue;
        }
        // j is the leftmost point of a fresh loop
        if u.bottom()[j] == Letter::X {
            loops_cw += 1;
        } else {
            loops_ccw += 1;
        }
        let mut cur = nv + j;
        let mut via_u = true;
        loop {
            visited[cur - nv] = true;
            cur = if via_u { nv + up[cur - nv] } else { vp[cur] };
            via_u = !via_u;
            if cur == nv + j {
                break;
            }
        }
    }

    w_arcs.sort_unstable();
    let w = Diagram::from_sorted_unchecked(u.flavor(), v.bottom().to_vec(), u.top().to_vec(), w_arcs);
    let (cu, cv, cw) = (u.signed_counts(), v.signed_counts(), w.signed_counts());
    let removed = if u.flavor() == Flavor::Otl { [0, 1, 2, 3].map(|i| cu[i] + cv[i] - cw[i]) } else { [0; 4] };
    let drop = u.turnbacks() + v.turnbacks() - w.turnbacks();
    assert!(drop.is_multiple_of(2), "odd turn-back drop");
    let c = Composite { diagram: w, loops_ccw, loops_cw, removed, sigma: drop / 2 };
    assert!(c.sigma >= c.loops(), "more loops than straightenings");
    if u.flavor() == Flavor::Otl {
        let [rp, rm, sp, sm] = removed;
        assert!(rp >= loops_ccw && sp >= loops_ccw && rm >= loops_cw && sm >= loops_cw);
        assert_eq!(rm - loops_cw, sp - loops_ccw, "r-/s+ straightening count mismatch");
        assert_eq!(sm - loops_cw, rp - loops_ccw, "s-/r+ straightening count mismatch");
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::super::diagram::plain_word;
    use super::*;
    use crate::scalars::Ring;

    fn ring() -> Ring {
        "laurent:d".parse().unwrap()
    }

    #[test]
    fn e1_squared_renormalized_is_e1() {
        let r = ring();
        let e1 = Diagram::tl_generator(2, 1).unwrap();
        let c = compose_diagrams(&e1, &e1).unwrap();
        assert_eq!(c.diagram, e1);
        let p = EvalParams::renormalized(&r.var("d").unwrap()).unwrap();
        assert!(c.scalar(&p).unwrap().is_one());
        let std = EvalParams::standard(r.var("d").unwrap());
        assert_eq!(c.scalar(&std).unwrap(), r.var("d").unwrap());
    }

    #[test]
    fn zigzag_scalars() {
        let r = ring();
        let id1 = Diagram::identity(Flavor::Tl, plain_word(1)).unwrap();
        let cap = Diagram::cap(Flavor::Tl, Letter::Plain, Letter::Plain).unwrap();
        let cup = Diagram::cup(Flavor::Tl, Letter::Plain, Letter::Plain).unwrap();
        let upper = cap.tensor(&id1).unwrap();
        let lower = id1.tensor(&cup).unwrap();
        let c = compose_diagrams(&upper, &lower).unwrap();
        assert_eq!(c.diagram, id1);
        let d = r.var("d").unwrap();
        assert_eq!(c.scalar(&EvalParams::renormalized(&d).unwrap()).unwrap(), r.parse("d^-1").unwrap());
        assert!(c.scalar(&EvalParams::infinity(&r)).unwrap().is_zero());
    }

    #[test]
    fn e1_e2_vanishes_at_infinity() {
        let r = ring();
        let e1 = Diagram::tl_generator(3, 1).unwrap();
        let e2 = Diagram::tl_generator(3, 2).unwrap();
        let c = compose_diagrams(&e1, &e2).unwrap();
        assert_eq!((c.sigma, c.loops()), (1, 0));
        assert!(c.scalar(&EvalParams::infinity(&r)).unwrap().is_zero());
    }

    #[test]
    fn oriented_circles_by_chirality() {
        let r: Ring = "laurent:a,b,z,w".parse().unwrap();
        let p = EvalParams::oriented(r.var("a").unwrap(), r.var("b").unwrap(), r.var("z").unwrap(), r.var("w").unwrap()).unwrap();
        let ccw = compose_diagrams(
            &Diagram::cap(Flavor::Otl, Letter::Y, Letter::X).unwrap(),
            &Diagram::cup(Flavor::Otl, Letter::Y, Letter::X).unwrap(),
        )
        .unwrap();
        assert_eq!(ccw.scalar(&p).unwrap(), r.var("a").unwrap());
        let cw = compose_diagrams(
            &Diagram::cap(Flavor::Otl, Letter::X, Letter::Y).unwrap(),
            &Diagram::cup(Flavor::Otl, Letter::X, Letter::Y).unwrap(),
        )
        .unwrap();
        assert_eq!(cw.scalar(&p).unwrap(), r.var("b").unwrap());
    }

    #[test]
    fn boundary_mismatch() {
        let e1 = Diagram::tl_generator(2, 1).unwrap();
        let e3 = Diagram::tl_generator(3, 1).unwrap();
        assert!(matches!(compose_diagrams(&e1, &e3), Err(Error::BoundaryMismatch(_))));
    }
}
