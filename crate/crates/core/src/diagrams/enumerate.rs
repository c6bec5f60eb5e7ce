//! Basis enumeration for hom spaces.

use super::diagram::{plain_word, word_string, Diagram, Flavor, Letter, Sign, ArcKind};
use crate::error::{Error, Result};

/// True when some perfect matching can respect the orientations.
pub fn is_balanced(bottom: &[Letter], top: &[Letter]) -> bool {
    let charge = |w: &[Letter]| w.iter().map(|l| if *l == Letter::X { 1i64 } else { -1 }).sum::<i64>();
    if bottom.iter().chain(top).any(|l| *l == Letter::Plain) {
        return (bottom.len() + top.len()).is_multiple_of(2);
    }
    charge(bottom) == charge(top)
}

/// Whether points `p` and `q` may be joined by an arc.
fn compatible(bottom: &[Letter], top: &[Letter], p: usize, q: usize) -> bool {
    let n = bottom.len();
    let letter = |x: usize| if x < n { bottom[x] } else { top[x - n] };
    let (a, b) = (letter(p), letter(q));
    if a == Letter::Plain {
        return true;
    }
    let through = (p < n) != (q < n);
    through == (a == b)
}

/// All non-crossing perfect matchings of `0..len` on a line whose pairs
/// satisfy `ok`.
fn noncrossing(len: usize, ok: &dyn Fn(usize, usize) -> bool) -> Vec<Vec<(usize, usize)>> {
    fn rec(lo: usize, hi: usize, ok: &dyn Fn(usize, usize) -> bool) -> Vec<Vec<(usize, usize)>> {
        if lo >= hi {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        let mut j = lo + 1;
        while j < hi {
            if ok(lo, j) {
                let inner = rec(lo + 1, j, ok);
                if !inner.is_empty() {
                    let outer = rec(j + 1, hi, ok);
                    for a in &inner {
                        for b in &outer {
                            let mut m = Vec::with_capacity(a.len() + b.len() + 1);
                            m.push((lo, j));
                            m.extend_from_slice(a);
                            m.extend_from_slice(b);
                            out.push(m);
                        }
                    }
                }
            }
            j += 2;
        }
        out
    }
    if len % 2 == 1 {
        return vec![];
    }
    rec(0, len, ok)
}

/// Planar basis of Hom(bottom, top), sorted.
fn planar_basis(flavor: Flavor, bottom: &[Letter], top: &[Letter]) -> Vec<Diagram> {
    let (n, m) = (bottom.len(), top.len());
    // cyclic position -> point index
    let point = |c: usize| if c < n { c } else { n + (m - 1 - (c - n)) };
    let ok = |a: usize, b: usize| compatible(bottom, top, point(a), point(b));
    let mut out: Vec<Diagram> = noncrossing(n + m, &ok)
        .into_iter()
        .map(|pairs| {
            let mut arcs: Vec<(usize, usize)> = pairs
                .into_iter()
                .map(|(a, b)| {
                    let (p, q) = (point(a), point(b));
                    (p.min(q), p.max(q))
                })
                .collect();
            arcs.sort_unstable();
            Diagram::from_sorted_unchecked(flavor, bottom.to_vec(), top.to_vec(), arcs)
        })
        .collect();
    out.sort();
    out
}

/// Planar perfect matchings between `n` bottom and `m` top points. Empty
/// when `n + m` is odd.
pub fn enumerate_tl_basis(n: usize, m: usize) -> Vec<Diagram> {
    planar_basis(Flavor::Tl, &plain_word(n), &plain_word(m))
}

/// Planar, orientation-compatible basis of Hom(bottom, top).
pub fn enumerate_otl_basis(bottom: &[Letter], top: &[Letter]) -> Result<Vec<Diagram>> {
    check_oriented(bottom, top)?;
    Ok(planar_basis(Flavor::Otl, bottom, top))
}

fn check_oriented(bottom: &[Letter], top: &[Letter]) -> Result<()> {
    if bottom.iter().chain(top).any(|l| *l == Letter::Plain) {
        return Err(Error::InvalidArgument("oriented words use X and Y only".into()));
    }
    if !is_balanced(bottom, top) {
        return Err(Error::UnbalancedWord(format!("{} -> {}", word_string(bottom), word_string(top))));
    }
    Ok(())
}

/// All orientation-compatible matchings, crossings allowed, sorted.
pub fn enumerate_brauer_basis(bottom: &[Letter], top: &[Letter]) -> Result<Vec<Diagram>> {
    check_oriented(bottom, top)?;
    let total = bottom.len() + top.len();
    let mut out = Vec::new();
    let mut used = vec![false; total];
    let mut arcs = Vec::with_capacity(total / 2);
    fn rec(
        bottom: &[Letter],
        top: &[Letter],
        used: &mut [bool],
        arcs: &mut Vec<(usize, usize)>,
        out: &mut Vec<Diagram>,
    ) {
        let Some(p) = used.iter().position(|u| !u) else {
            let mut sorted = arcs.clone();
            sorted.sort_unstable();
            out.push(Diagram::from_sorted_unchecked(Flavor::Brauer, bottom.to_vec(), top.to_vec(), sorted));
            return;
        };
        used[p] = true;
        for q in p + 1..used.len() {
            if !used[q] && compatible(bottom, top, p, q) {
                used[q] = true;
                arcs.push((p, q));
                rec(bottom, top, used, arcs, out);
                arcs.pop();
                used[q] = false;
            }
        }
        used[p] = false;
    }
    rec(bottom, top, &mut used, &mut arcs, &mut out);
    out.sort();
    Ok(out)
}

/// Planar orientation-compatible matchings of a single boundary word (as
/// caps), each paired with the number of its r+ caps (Y on the left).
pub fn enumerate_matchings(word: &[Letter]) -> Result<Vec<(Diagram, usize)>> {
    let basis = enumerate_otl_basis(word, &[])?;
    Ok(basis
        .into_iter()
        .map(|d| {
            let r_plus = d.arcs().iter().filter(|&&a| d.arc_kind(a) == ArcKind::Cap(Sign::Plus)).count();
            (d, r_plus)
        })
        .collect())
}

/// Basis of Hom(bottom, top) for any flavor; empty when unbalanced.
pub fn hom_basis(flavor: Flavor, bottom: &[Letter], top: &[Letter]) -> Result<Vec<Diagram>> {
    if !is_balanced(bottom, top) {
        return Ok(vec![]);
    }
    match flavor {
        Flavor::Tl => {
            if bottom.iter().chain(top).any(|l| *l != Letter::Plain) {
                return Err(Error::InvalidArgument("plain flavor uses unlabeled points".into()));
            }
            Ok(enumerate_tl_basis(bottom.len(), top.len()))
        }
        Flavor::Otl => enumerate_otl_basis(bottom, top),
        Flavor::Brauer => enumerate_brauer_basis(bottom, top),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagrams::diagram::parse_word;

    fn catalan(n: usize) -> usize {
        (0..n).fold(1usize, |c, k| c * 2 * (2 * k + 1) / (k + 2))
    }

    #[test]
    fn tl_counts() {
        assert_eq!(enumerate_tl_basis(1, 1).len(), 1);
        assert_eq!(enumerate_tl_basis(3, 3).len(), 5);
        assert_eq!(enumerate_tl_basis(2, 0).len(), 1);
        assert!(enumerate_tl_basis(2, 1).is_empty());
        for n in 0..=10 {
            assert_eq!(enumerate_tl_basis(n, n).len(), catalan(n), "n={n}");
        }
    }

    #[test]
    fn basis_sorted_and_distinct() {
        let b = enumerate_tl_basis(4, 4);
        assert!(b.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn matchings_of_yx_words() {
        let m1 = enumerate_matchings(&parse_word("YX").unwrap()).unwrap();
        assert_eq!(m1.iter().map(|x| x.1).collect::<Vec<_>>(), [1]);
        let m2 = enumerate_matchings(&parse_word("YXYX").unwrap()).unwrap();
        let mut ds: Vec<usize> = m2.iter().map(|x| x.1).collect();
        ds.sort();
        assert_eq!(ds, [1, 2]);
        assert_eq!(enumerate_matchings(&parse_word("YXYXYX").unwrap()).unwrap().len(), 5);
        assert!(matches!(enumerate_matchings(&parse_word("XX").unwrap()), Err(Error::UnbalancedWord(_))));
    }

    #[test]
    fn brauer_counts() {
        let xy = parse_word("XY").unwrap();
        assert_eq!(enumerate_brauer_basis(&xy, &xy).unwrap().len(), 2);
        let w = parse_word("XXYY").unwrap();
        assert_eq!(enumerate_brauer_basis(&w, &w).unwrap().len(), 24);
        let x = parse_word("X").unwrap();
        assert_eq!(enumerate_brauer_basis(&x, &x).unwrap().len(), 1);
        let w = parse_word("XXXYYY").unwrap();
        assert_eq!(enumerate_brauer_basis(&w, &w).unwrap().len(), 720);
    }
}
