//! The twelve acceptance criteria, each checked against an oracle that
//! does not share code with the pipeline under test. Prints one line per
//! criterion.

use std::collections::BTreeMap;
use std::io::Write;
use std::time::Instant;

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use tlj_core::brauer::{brauer_block_report, char2_nilpotent_trace_demo, walled_word};
use tlj_core::braid::{canonical_factors, factor_lemma, permutation_to_braid, BraidWord, Permutation};
use tlj_core::diagrams::{parse_word, plain_word, Diagram, DiagramVector, Engine, EvalParams, Flavor, Letter};
use tlj_core::lab::{
    alternating_word, good_retraction, matchings_ring, negligible_quotient, phi_matrix_theorem1, rigidity_certificate,
    Verdict,
};
use tlj_core::linalg::Matrix;
use tlj_core::scalars::Ring;
use tlj_core::tl::{cup_filtration_report, jones_wenzl, jones_wenzl_closed_form_infinity, quantum_trace, Closure};
use tlj_core::verify::{golden_engine, retraction_instances};

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    format!("error: {e}")
}

fn factorial(n: usize) -> BigUint {
    (1..=n).map(BigUint::from).product()
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// C(2n, n) / (n + 1).
fn catalan_oracle(n: usize) -> usize {
    binomial(2 * n, n) / (n + 1)
}

/// Dimension of the cell module of TL_n with n − 2k through strands.
fn cell_dim(n: usize, k: usize) -> usize {
    binomial(n, k) - if k == 0 { 0 } else { binomial(n, k - 1) }
}

fn id_vec(engine: &Engine, w: &[Letter]) -> Result<DiagramVector, String> {
    engine.identity(w).map_err(err)
}

fn compose(engine: &Engine, a: &DiagramVector, b: &DiagramVector) -> Result<DiagramVector, String> {
    engine.compose(a, b).map_err(err)
}

fn criterion_1() -> Check {
    for n in 1..=4 {
        let r = phi_matrix_theorem1(n).map_err(err)?;
        let size: usize = (1..=n).product();
        ensure(r.matrix.rows() == size && r.matrix.cols() == size, format!("n = {n}: wrong size"))?;
        for i in 0..size {
            for j in 0..size {
                let v = r.matrix.get(i, j);
                ensure(if i == j { v.is_one() } else { v.is_zero() }, format!("n = {n}: entry ({i}, {j}) = {v}"))?;
            }
        }
    }
    Ok("Φ = identity for n = 1..4 (24×24 at n = 4)".into())
}

fn criterion_2() -> Check {
    let ring = Ring::Rational;
    let params = EvalParams::infinity(&ring);
    let engine = Engine::new(Flavor::Tl, params.clone()).map_err(err)?;
    for n in 1..=8 {
        let p = jones_wenzl(n, &params).map_err(err)?;
        ensure(p == jones_wenzl_closed_form_infinity(n, &ring).map_err(err)?, format!("n = {n}: recursion ≠ closed form"))?;
        let id = Diagram::identity(Flavor::Tl, plain_word(n)).map_err(err)?;
        ensure(p.coeff(&id).is_one(), format!("n = {n}: identity coefficient"))?;
        ensure(compose(&engine, &p, &p)? == p, format!("n = {n}: not idempotent"))?;
        for i in 1..n {
            let e = engine.vector(Diagram::tl_generator(n, i).map_err(err)?).map_err(err)?;
            ensure(compose(&engine, &e, &p)?.is_zero(), format!("n = {n}: e_{i}·JW ≠ 0"))?;
            ensure(compose(&engine, &p, &e)?.is_zero(), format!("n = {n}: JW·e_{i} ≠ 0"))?;
        }
    }
    Ok("recursion = closed form, JW² = JW, e_i·JW = JW·e_i = 0 for n ≤ 8".into())
}

fn criterion_3() -> Check {
    for n in 1..=7 {
        let r = cup_filtration_report(n).map_err(err)?;
        ensure(r.dim == catalan_oracle(n), format!("n = {n}: dim {}", r.dim))?;
        ensure(r.radical_dim == Some(0), format!("n = {n}: radical {:?}", r.radical_dim))?;
        let mut sq = 0;
        for l in &r.layers {
            let blocks = l.blocks.clone().ok_or(format!("n = {n}: layer {} not split", l.degree))?;
            let expected = cell_dim(n, l.degree as usize);
            ensure(blocks == vec![expected], format!("n = {n}: layer {} blocks {blocks:?}, cell module {expected}", l.degree))?;
            sq += blocks.iter().map(|b| b * b).sum::<usize>();
        }
        ensure(sq == catalan_oracle(n), format!("n = {n}: Σd² = {sq}"))?;
    }
    Ok(format!("radical 0, Σd² = C_n through C_7 = {}", catalan_oracle(7)))
}

/// Caps joining a Y on the left to an X on the right.
fn yx_caps(d: &Diagram) -> usize {
    d.arcs().iter().filter(|&&(p, q)| d.letter(p.min(q)) == Letter::Y && d.letter(p.max(q)) == Letter::X).count()
}

fn criterion_4() -> Check {
    let ring = matchings_ring();
    let (z, zs) = (ring.var("z").map_err(err)?, ring.var("zs").map_err(err)?);
    let params = EvalParams::oriented(ring.one(), ring.one(), z.clone(), zs.clone()).map_err(err)?;
    let engine = Engine::new(Flavor::Otl, params).map_err(err)?;
    for n in 1..=5 {
        let word = alternating_word(n);
        let caps = engine.hom_basis(&word, &[]).map_err(err)?;
        ensure(caps.len() == catalan_oracle(n), format!("n = {n}: {} matchings", caps.len()))?;
        let mut rows = vec![];
        for u in &caps {
            let mut row = vec![];
            for v in &caps {
                let pair = compose(&engine, &engine.vector(u.clone()).map_err(err)?, &engine.vector(v.flip()).map_err(err)?)?;
                let s = pair.as_scalar().ok_or("closed composite expected")?;
                let found = (0..=n as i64)
                    .flat_map(|a| (0..=n as i64).map(move |b| (a, b)))
                    .find(|&(a, b)| z.pow(a).unwrap().try_mul(&zs.pow(b).unwrap()).unwrap() == s);
                let (a, b) = found.ok_or(format!("n = {n}: entry {s} is not a monomial"))?;
                ensure(a - b == yx_caps(u) as i64 - yx_caps(v) as i64, format!("n = {n}: exponent law fails at {s}"))?;
                ensure(if u == v { a + b == 0 } else { a + b > 0 }, format!("n = {n}: degree of {s}"))?;
                row.push(s);
            }
            rows.push(row);
        }
        let m = Matrix::from_rows(&ring, rows).map_err(err)?;
        for var in ["z", "zs"] {
            let mut at = BTreeMap::new();
            at.insert("z".to_string(), if var == "z" { ring.zero() } else { z.clone() });
            at.insert("zs".to_string(), if var == "zs" { ring.zero() } else { zs.clone() });
            let det = m.evaluate(&at).map_err(err)?.det().map_err(err)?;
            ensure(det.is_one() || det.neg().is_one(), format!("n = {n}: det at {var} = 0 is {det}"))?;
        }
    }
    Ok("monomial entries with a − b = D(u) − D(v), unit determinants, C_n matchings, n ≤ 5".into())
}

/// (n−k)!(m−k)!·(C(n,k)·C(m,k)·k!)² for k = 0..min(n, m).
fn walled_layers(n: usize, m: usize) -> Vec<BigUint> {
    (0..=n.min(m))
        .map(|k| {
            let mk = BigUint::from(binomial(n, k) * binomial(m, k)) * factorial(k);
            factorial(n - k) * factorial(m - k) * &mk * &mk
        })
        .collect()
}

fn criterion_5() -> Check {
    let engine = Engine::new(Flavor::Brauer, EvalParams::infinity(&Ring::Rational)).map_err(err)?;
    for n in 0..=3 {
        for m in 0..=3 {
            let r = brauer_block_report(n, m).map_err(err)?;
            let dims: Vec<BigUint> = r.layer_dims().into_iter().map(BigUint::from).collect();
            ensure(dims == walled_layers(n, m), format!("({n},{m}): layers {:?}", r.layer_dims()))?;
            ensure(BigUint::from(r.total()) == factorial(n + m), format!("({n},{m}): total {}", r.total()))?;
            let w = walled_word(n, m);
            let count = engine.hom_basis(&w, &w).map_err(err)?.len();
            ensure(count == r.total(), format!("({n},{m}): enumeration {count}"))?;
        }
    }
    let r = brauer_block_report(2, 2).map_err(err)?;
    ensure(r.layer_dims() == [4, 16, 4] && r.total() == 24, "(2,2) layers")?;
    Ok("layers (n−k)!(m−k)!·M_k², total (n+m)!, n, m ≤ 3; (2,2) = 4 + 16 + 4".into())
}

fn criterion_6() -> Check {
    let r = char2_nilpotent_trace_demo().map_err(err)?;
    let ring = Ring::fp(2, &["t"]);
    let t = ring.var("t").map_err(err)?;
    let expected = t.pow(2).map_err(err)?.try_sub(&t).map_err(err)?;
    ensure(r.z_squared_is_zero, "z² ≠ 0")?;
    ensure(r.trace_of_z == expected, format!("Tr(z) = {}", r.trace_of_z))?;
    ensure(!expected.is_zero(), "t² − t vanished")?;
    Ok(format!("z² = 0, Tr(z) = {} ≠ 0", r.trace_of_z))
}

/// Free-group words as signed 1-based letters.
fn reduce(w: Vec<i64>) -> Vec<i64> {
    let mut out: Vec<i64> = vec![];
    for x in w {
        if out.last() == Some(&-x) {
            out.pop();
        } else {
            out.push(x);
        }
    }
    out
}

fn artin_apply(g: i64, w: &[i64]) -> Vec<i64> {
    let i = g.abs();
    let image = |j: i64| -> Vec<i64> {
        match (g > 0, j) {
            (true, j) if j == i => vec![i, i + 1, -i],
            (true, j) if j == i + 1 => vec![i],
            (false, j) if j == i => vec![i + 1],
            (false, j) if j == i + 1 => vec![-(i + 1), i, i + 1],
            _ => vec![j],
        }
    };
    let mut out = vec![];
    for &x in w {
        let img = image(x.abs());
        if x > 0 {
            out.extend(img);
        } else {
            out.extend(img.iter().rev().map(|y| -y));
        }
    }
    reduce(out)
}

/// The automorphism of the free group F_n defined by a braid word.
fn artin(b: &BraidWord) -> Vec<Vec<i64>> {
    (1..=b.n as i64).map(|j| b.gens.iter().rev().fold(vec![j], |w, &g| artin_apply(g, &w))).collect()
}

fn criterion_7() -> Check {
    let perms = Permutation::all(4);
    let mut pairs = 0;
    for s in &perms {
        for t in &perms {
            if s == t {
                continue;
            }
            let f = factor_lemma(s, t).map_err(err)?;
            ensure(f.u.support() <= 2 && f.v.support() <= 2, format!("{s} {t}: factors leave B_3"))?;
            let target = permutation_to_braid(s).inverse().concat(&permutation_to_braid(t)).map_err(err)?;
            ensure(artin(&f.product()) == artin(&target), format!("{s} {t}: product ≠ s⁻¹t"))?;
            pairs += 1;
        }
    }
    ensure(pairs == 552, format!("{pairs} pairs"))?;
    let mut seen: Vec<Vec<Option<usize>>> = perms.iter().map(canonical_factors).collect();
    seen.sort();
    seen.dedup();
    ensure(seen.len() == 24, "canonical factorizations collide")?;
    ensure(perms.iter().all(|p| permutation_to_braid(p).permutation() == *p), "lift does not cover")?;
    Ok("552 pairs certified by the free-group action; canonical form bijective on S_4".into())
}

fn criterion_8() -> Check {
    let q = Ring::Rational;
    let tl = Engine::new(Flavor::Tl, EvalParams::infinity(&q)).map_err(err)?;
    let ob = Engine::new(Flavor::Brauer, EvalParams::infinity(&q)).map_err(err)?;
    for n in 1..=6 {
        let d = tl.hom_basis(&plain_word(n), &plain_word(n)).map_err(err)?.len();
        ensure(d == catalan_oracle(n), format!("TLJ n = {n}: {d}"))?;
        ensure((BigUint::from(d) < factorial(n)) == (n >= 3), format!("TLJ n = {n}: growth boundary"))?;
    }
    for n in 1..=5 {
        let w = walled_word(n, 0);
        let d = ob.hom_basis(&w, &w).map_err(err)?.len();
        ensure(BigUint::from(d) == factorial(n), format!("OB n = {n}: {d}"))?;
    }
    Ok("TLJ(∞) dims C_n with C_3 = 5 < 6; OB(∞) dims n! for n ≤ 5".into())
}

/// Every zig-zag composite over basis cups and caps.
fn zigzags(engine: &Engine, x: &[Letter], y: &[Letter]) -> Result<Vec<DiagramVector>, String> {
    let xy = [x, y].concat();
    let yx = [y, x].concat();
    let (idx, idy) = (id_vec(engine, x)?, id_vec(engine, y)?);
    let mut out = vec![];
    for ev in engine.hom_basis(&yx, &[]).map_err(err)? {
        let ev = engine.vector(ev).map_err(err)?;
        for coev in engine.hom_basis(&[], &xy).map_err(err)? {
            let coev = engine.vector(coev).map_err(err)?;
            out.push(compose(engine, &idx.tensor(&ev).map_err(err)?, &coev.tensor(&idx).map_err(err)?)?);
            out.push(compose(engine, &ev.tensor(&idy).map_err(err)?, &idy.tensor(&coev).map_err(err)?)?);
        }
    }
    Ok(out)
}

fn criterion_9() -> Check {
    let laurent = Ring::laurent(&["d"]);
    let generic = Engine::new(Flavor::Tl, EvalParams::standard(laurent.var("d").map_err(err)?)).map_err(err)?;
    let strand = plain_word(1);
    let a = rigidity_certificate(&generic, &strand, &strand).map_err(err)?;
    ensure(a.verdict == Verdict::Certificate, "generic strand not certified")?;
    let idw = id_vec(&generic, &strand)?;
    ensure(zigzags(&generic, &strand, &strand)?.iter().all(|z| *z == idw), "generic zig-zag ≠ id")?;
    let q = Ring::Rational;
    let tlj = Engine::new(Flavor::Tl, EvalParams::infinity(&q)).map_err(err)?;
    let ob = Engine::new(Flavor::Brauer, EvalParams::infinity(&q)).map_err(err)?;
    let (x, y) = (parse_word("X").map_err(err)?, parse_word("Y").map_err(err)?);
    for (engine, x, y, name) in [(&tlj, &strand, &strand, "TLJ(∞) strand"), (&ob, &x, &y, "OB(∞) X")] {
        let r = rigidity_certificate(engine, x, y).map_err(err)?;
        ensure(r.verdict == Verdict::Refutation, format!("{name}: {:?}", r.verdict))?;
        let zz = zigzags(engine, x, y)?;
        ensure(!zz.is_empty() && zz.iter().all(|z| z.is_zero()), format!("{name}: nonzero zig-zag"))?;
    }
    Ok("generic strand certified; TLJ(∞) strand and OB(∞) generator refuted, zig-zags 0".into())
}

/// N_ij^k at level 3: |i−j| ≤ k ≤ min(i+j, 6−i−j) with i+j+k even.
fn truncated_cg(i: usize, j: usize, k: usize) -> u64 {
    let top = (i + j).min(6usize.saturating_sub(i + j));
    u64::from(k >= i.abs_diff(j) && k <= top && i + j <= 6 && (i + j + k).is_multiple_of(2))
}

fn criterion_10() -> Check {
    let engine = golden_engine().map_err(err)?;
    let ring = engine.ring();
    for n in 1..=4 {
        let w = plain_word(n);
        let (alg, basis) = engine.end_algebra(&w).map_err(err)?;
        let shape = id_vec(&engine, &w)?.shape().clone();
        for c in alg.radical().map_err(err)? {
            let v = DiagramVector::from_coordinates(shape.clone(), &ring, &basis, &c).map_err(err)?;
            let tr = quantum_trace(&engine, &v, &Closure::Planar).map_err(err)?;
            ensure(tr.is_zero(), format!("n = {n}: trace {tr} on the radical"))?;
        }
    }
    let r = negligible_quotient(&engine, 4).map_err(err)?;
    let k = r.fusion.len();
    ensure(k == 4, format!("{k} simples"))?;
    for i in 0..k {
        for j in 0..k {
            for l in 0..k {
                let got = r.fusion.constants[i][j].get(&l).copied().unwrap_or(0);
                ensure(got == truncated_cg(i, j, l), format!("N_{i}{j}^{l} = {got}"))?;
            }
        }
    }
    Ok("Tr = 0 on the radical for n ≤ 4; fusion = truncated Clebsch–Gordan at level 3".into())
}

fn criterion_11() -> Check {
    let instances = retraction_instances().map_err(err)?;
    for (name, engine, z, n) in &instances {
        let r = good_retraction(engine, z, n).map_err(err)?;
        let (ret, sec) = (r.retraction.clone().ok_or("no retraction")?, r.section.clone().ok_or("no section")?);
        ensure(compose(engine, &ret, &sec)? == id_vec(engine, &[])?, format!("{name}: r∘s ≠ 1"))?;
        for x in n {
            for a in engine.hom_basis(&[], z).map_err(err)? {
                let a = engine.vector(a).map_err(err)?;
                let v = compose(engine, &ret, &compose(engine, x, &a)?)?;
                ensure(v.is_zero(), format!("{name}: r∘x∘a ≠ 0"))?;
            }
        }
    }
    Ok(format!("{} instances: r∘s = 1 and r∘N∘a = 0 on full bases", instances.len()))
}

fn criterion_12() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x7157);
    let ring = Ring::laurent(&["d"]);
    let d = ring.var("d").map_err(err)?;
    let regimes = [EvalParams::standard(d.clone()), EvalParams::renormalized(&d).map_err(err)?, EvalParams::infinity(&ring)];
    let mut total = 0;
    for params in regimes {
        let tl = Engine::new(Flavor::Tl, params.clone()).map_err(err)?;
        let br = Engine::new(Flavor::Brauer, params).map_err(err)?;
        for (engine, word, samples) in [(&tl, plain_word(3), None), (&tl, plain_word(4), Some(1000)), (&br, walled_word(2, 2), Some(1000))] {
            let basis: Vec<DiagramVector> =
                engine.hom_basis(&word, &word).map_err(err)?.into_iter().map(|b| engine.vector(b)).collect::<Result<_, _>>().map_err(err)?;
            let b = basis.len();
            let triples: Vec<(usize, usize, usize)> = match samples {
                None => (0..b * b * b).map(|t| (t / (b * b), t / b % b, t % b)).collect(),
                Some(s) => (0..s).map(|_| (rng.gen_range(0..b), rng.gen_range(0..b), rng.gen_range(0..b))).collect(),
            };
            let bad = triples.par_iter().find_any(|&&(i, j, k)| {
                let l = engine.compose(&engine.compose(&basis[i], &basis[j]).unwrap(), &basis[k]).unwrap();
                let r = engine.compose(&basis[i], &engine.compose(&basis[j], &basis[k]).unwrap()).unwrap();
                l != r
            });
            ensure(bad.is_none(), format!("non-associative triple {bad:?}"))?;
            total += triples.len();
        }
    }
    Ok(format!("{total} triples associative across three regimes"))
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 12] = [
        ("phi-identity", criterion_1),
        ("jones-wenzl-infinity", criterion_2),
        ("tlj-semisimple", criterion_3),
        ("matching-matrix", criterion_4),
        ("walled-brauer-blocks", criterion_5),
        ("char2-nilpotent-trace", criterion_6),
        ("braid-factorization", criterion_7),
        ("moderate-growth", criterion_8),
        ("rigidity", criterion_9),
        ("trace-negligible", criterion_10),
        ("good-retraction", criterion_11),
        ("associativity", criterion_12),
    ];
    let results: Vec<(Check, f64)> = criteria
        .par_iter()
        .map(|(_, f)| {
            let start = Instant::now();
            (f(), start.elapsed().as_secs_f64())
        })
        .collect();
    // written past the test harness capture so the table always shows
    let mut out = std::io::stdout().lock();
    writeln!(out).unwrap();
    let mut failed = vec![];
    for (i, ((name, _), (res, secs))) in criteria.iter().zip(&results).enumerate() {
        let (tag, detail) = match res {
            Ok(d) => ("pass", d.clone()),
            Err(d) => {
                failed.push(i + 1);
                ("FAIL", d.clone())
            }
        };
        writeln!(out, "[{tag}] {:>2} {name}: {detail} ({secs:.1}s)", i + 1).unwrap();
    }
    out.flush().unwrap();
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}

#[test]
fn oracle_sanity() {
    assert_eq!((1..=7).map(catalan_oracle).collect::<Vec<_>>(), [1, 2, 5, 14, 42, 132, 429]);
    assert_eq!(walled_layers(2, 2), [4u32, 16, 4].map(BigUint::from));
    assert_eq!((0..=2).map(|k| cell_dim(4, k)).collect::<Vec<_>>(), [1, 3, 2]);
    let x1x1: Vec<u64> = (0..4).map(|k| truncated_cg(1, 1, k)).collect();
    assert_eq!(x1x1, [1, 0, 1, 0]);
    let x3x3: Vec<u64> = (0..4).map(|k| truncated_cg(3, 3, k)).collect();
    assert_eq!(x3x3, [1, 0, 0, 0]);
    let b = |g: &[i64]| BraidWord::new(3, g.to_vec()).unwrap();
    assert_eq!(artin(&b(&[1, 2, 1])), artin(&b(&[2, 1, 2])));
    assert_ne!(artin(&b(&[1, 2])), artin(&b(&[2, 1])));
}
