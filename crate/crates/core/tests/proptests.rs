//! Algebraic invariants checked on random inputs.

use proptest::prelude::*;
use tlj_core::diagrams::{parse_word, plain_word, DiagramVector, Engine, EvalParams, Flavor, Letter};
use tlj_core::linalg::Matrix;
use tlj_core::scalars::{Ring, Scalar};

fn rings() -> Vec<Ring> {
    ["rational", "laurent:a,b", "fp:2[t]", "fp:5[t]", "algebraic:x^2-x-1", "frac:q"]
        .iter()
        .map(|s| s.parse().unwrap())
        .collect()
}

/// Sum of c·g^e over the terms, with g the ring's first variable (or 2
/// in the rationals, where e is also used as a divisor).
fn build(ring: &Ring, terms: &[(i64, i64)]) -> Scalar {
    let vars = ring.variables();
    let signed = matches!(vars.first().map(String::as_str), Some("a") | Some("q"));
    terms.iter().fold(ring.zero(), |acc, &(c, e)| {
        let t = match vars.first() {
            None => ring.from_int(c).try_div(&ring.from_int(e.abs() + 1)).unwrap(),
            Some(v) => {
                let e = if signed { e } else { e.abs() };
                ring.from_int(c).try_mul(&ring.var(v).unwrap().pow(e).unwrap()).unwrap()
            }
        };
        acc.try_add(&t).unwrap()
    })
}

fn terms() -> impl Strategy<Value = Vec<(i64, i64)>> {
    prop::collection::vec((-3i64..4, -3i64..4), 0..4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(ri in 0usize..6, x in terms(), y in terms(), z in terms()) {
        let ring = &rings()[ri];
        let (a, b, c) = (build(ring, &x), build(ring, &y), build(ring, &z));
        prop_assert_eq!(a.try_add(&b).unwrap(), b.try_add(&a).unwrap());
        prop_assert_eq!(a.try_mul(&b).unwrap(), b.try_mul(&a).unwrap());
        prop_assert_eq!(a.try_mul(&b).unwrap().try_mul(&c).unwrap(), a.try_mul(&b.try_mul(&c).unwrap()).unwrap());
        prop_assert_eq!(
            a.try_mul(&b.try_add(&c).unwrap()).unwrap(),
            a.try_mul(&b).unwrap().try_add(&a.try_mul(&c).unwrap()).unwrap()
        );
        prop_assert!(a.try_sub(&a).unwrap().is_zero());
        prop_assert_eq!(a.try_mul(&ring.one()).unwrap(), a.clone());
        if let Ok(inv) = a.try_inv() {
            prop_assert!(a.try_mul(&inv).unwrap().is_one());
        }
    }
}

fn otl_engine() -> Engine {
    let r = Ring::laurent(&["c", "d", "z", "w"]);
    let v = |s: &str| r.var(s).unwrap();
    Engine::new(Flavor::Otl, EvalParams::oriented(v("c"), v("d"), v("z"), v("w")).unwrap()).unwrap()
}

fn random_vector(engine: &Engine, bottom: &[Letter], top: &[Letter], picks: &[(usize, i64)]) -> DiagramVector {
    let basis = engine.hom_basis(bottom, top).unwrap();
    let ring = engine.ring();
    let mut v = engine.zero(bottom, top);
    for &(i, c) in picks {
        let d = engine.vector(basis[i % basis.len()].clone()).unwrap();
        v = v.try_add(&d.scale(&ring.from_int(c)).unwrap()).unwrap();
    }
    v
}

fn picks() -> impl Strategy<Value = Vec<(usize, i64)>> {
    prop::collection::vec((0usize..1000, -2i64..3), 1..4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn oriented_composition_is_associative(p in picks(), q in picks(), r in picks()) {
        let e = otl_engine();
        let (w1, w2) = (parse_word("XYXY").unwrap(), parse_word("XXYY").unwrap());
        let a = random_vector(&e, &w1, &w2, &p);
        let b = random_vector(&e, &w1, &w1, &q);
        let c = random_vector(&e, &w2, &w1, &r);
        let left = e.compose(&e.compose(&c, &a).unwrap(), &b).unwrap();
        let right = e.compose(&c, &e.compose(&a, &b).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn flip_reverses_composition(p in picks(), q in picks()) {
        let e = otl_engine();
        let f = Engine::new(Flavor::Otl, e.params.flipped()).unwrap();
        let (w1, w2) = (parse_word("XY").unwrap(), parse_word("XYYX").unwrap());
        let u = random_vector(&e, &w1, &w2, &p);
        let v = random_vector(&e, &w2, &w2, &q);
        let lhs = e.compose(&v, &u).unwrap().flip();
        let rhs = f.compose(&u.flip(), &v.flip()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn interchange_law(p in picks(), q in picks(), r in picks(), s in picks()) {
        let ring = Ring::laurent(&["d"]);
        let e = Engine::new(Flavor::Brauer, EvalParams::standard(ring.var("d").unwrap())).unwrap();
        let xy = parse_word("XY").unwrap();
        let yx = parse_word("YX").unwrap();
        let a = random_vector(&e, &xy, &xy, &p);
        let b = random_vector(&e, &xy, &xy, &q);
        let c = random_vector(&e, &yx, &yx, &r);
        let d = random_vector(&e, &yx, &yx, &s);
        let lhs = e.compose(&a.tensor(&c).unwrap(), &b.tensor(&d).unwrap()).unwrap();
        let rhs = e.compose(&a, &b).unwrap().tensor(&e.compose(&c, &d).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn tl_identity_is_neutral(p in picks(), n in 1usize..6) {
        let ring = Ring::laurent(&["d"]);
        let e = Engine::new(Flavor::Tl, EvalParams::renormalized(&ring.var("d").unwrap()).unwrap()).unwrap();
        let w = plain_word(n);
        let a = random_vector(&e, &w, &w, &p);
        let id = e.identity(&w).unwrap();
        prop_assert_eq!(e.compose(&id, &a).unwrap(), a.clone());
        prop_assert_eq!(e.compose(&a, &id).unwrap(), a);
    }
}

fn matrix_strategy() -> impl Strategy<Value = (usize, usize, Vec<i64>)> {
    (1usize..5, 1usize..5).prop_flat_map(|(r, c)| (Just(r), Just(c), prop::collection::vec(-2i64..3, r * c)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn rank_is_permutation_invariant((r, c, vals) in matrix_strategy(), rs in any::<u64>(), cs in any::<u64>()) {
        let ring = Ring::laurent(&["t"]);
        let t = ring.var("t").unwrap();
        let m = Matrix::from_fn(&ring, r, c, |i, j| {
            let v = vals[i * c + j];
            if (i + j) % 3 == 0 { ring.from_int(v).try_mul(&t).unwrap() } else { ring.from_int(v) }
        });
        let rot = |n: usize, s: u64| -> Vec<usize> { (0..n).map(|k| (k + s as usize % n) % n).collect() };
        let pm = m.permuted(&rot(r, rs), &rot(c, cs));
        prop_assert_eq!(m.rank().unwrap(), pm.rank().unwrap());
        prop_assert_eq!(m.rank().unwrap(), m.transpose().rank().unwrap());
    }

    #[test]
    fn square_det_detects_rank((n, _, vals) in (1usize..5).prop_flat_map(|n| (Just(n), Just(n), prop::collection::vec(-2i64..3, n * n)))) {
        let m = Matrix::from_fn(&Ring::Rational, n, n, |i, j| Ring::Rational.from_int(vals[i * n + j]));
        prop_assert_eq!(m.det().unwrap().is_zero(), m.rank().unwrap() < n);
    }
}
