//! The twelve acceptance checks, as a driver shared by the CLI.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::brauer::{brauer_block_report, char2_nilpotent_trace_demo, walled_word};
use crate::braid::{braid_equal, canonical_factors, factor_lemma, permutation_to_braid, Permutation};
use crate::diagrams::{parse_word, plain_word, Diagram, DiagramVector, Engine, EvalParams, Flavor, Letter};
use crate::error::Result;
use crate::lab::{
    good_retraction, moderate_growth_test, negligible_quotient, phi_matrix_matchings, phi_matrix_theorem1, rigidity_certificate,
    trace_radical_check, BasedRing, Verdict,
};
use crate::scalars::{Ring, Scalar};
use crate::tl::{catalan, check_projector, cup_filtration_report, jones_wenzl, jones_wenzl_closed_form_infinity, Closure};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub id: usize,
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

pub const CRITERIA: [&str; 12] = [
    "phi-identity",
    "jones-wenzl-infinity",
    "tlj-semisimple",
    "matching-matrix",
    "walled-brauer-blocks",
    "char2-nilpotent-trace",
    "braid-factorization",
    "moderate-growth",
    "rigidity",
    "trace-negligible",
    "good-retraction",
    "associativity",
];

/// Runs criterion `id` (1-based). Errors become failures with the message
/// as detail.
pub fn run_check(id: usize, seed: u64) -> CheckResult {
    let outcome = match id {
        1 => phi_identity(),
        2 => jones_wenzl_infinity(),
        3 => tlj_semisimple(),
        4 => matching_matrix(),
        5 => walled_brauer(),
        6 => char2(),
        7 => braid_factorization(),
        8 => moderate_growth(),
        9 => rigidity(),
        10 => trace_negligible(),
        11 => retraction(),
        12 => associativity(seed),
        _ => Ok((false, format!("no criterion {id}"))),
    };
    let (pass, detail) = outcome.unwrap_or_else(|e| (false, format!("error: {e}")));
    CheckResult { id, name: CRITERIA.get(id.wrapping_sub(1)).copied().unwrap_or("unknown"), pass, detail }
}

/// All criteria, run in parallel and reported in id order.
pub fn verify_all(seed: u64) -> Vec<CheckResult> {
    (1..=CRITERIA.len()).into_par_iter().map(|id| run_check(id, seed)).collect()
}

type Outcome = Result<(bool, String)>;

fn phi_identity() -> Outcome {
    let mut ok = true;
    let mut sizes = vec![];
    for n in 1..=4 {
        let r = phi_matrix_theorem1(n)?;
        ok &= r.is_identity && r.matrix.rows() == (1..=n).product::<usize>();
        sizes.push(r.matrix.rows().to_string());
    }
    Ok((ok, format!("identity of sizes {}", sizes.join(", "))))
}

fn jones_wenzl_infinity() -> Outcome {
    let ring = Ring::Rational;
    let params = EvalParams::infinity(&ring);
    let engine = Engine::new(Flavor::Tl, params.clone())?;
    let mut ok = true;
    for n in 1..=8 {
        let p = jones_wenzl(n, &params)?;
        ok &= p == jones_wenzl_closed_form_infinity(n, &ring)?;
        ok &= check_projector(&engine, &p)?.pass();
    }
    Ok((ok, "recursion = closed form, idempotent, killed by e_i, n <= 8".into()))
}

fn tlj_semisimple() -> Outcome {
    let mut ok = true;
    let mut dims = vec![];
    for n in 1..=7 {
        let r = cup_filtration_report(n)?;
        ok &= r.pass && r.radical_dim == Some(0) && r.dim == catalan(n);
        dims.push(r.dim.to_string());
    }
    Ok((ok, format!("radical 0, sum of squared blocks = dim in {}", dims.join(", "))))
}

fn matching_matrix() -> Outcome {
    let mut ok = true;
    for n in 1..=5 {
        let r = phi_matrix_matchings(n)?;
        ok &= r.pass && r.count == catalan(n);
    }
    Ok((ok, "monomial laws and unit determinants for n <= 5".into()))
}

fn walled_brauer() -> Outcome {
    let mut ok = true;
    for n in 0..=3 {
        for m in 0..=3 {
            let r = brauer_block_report(n, m)?;
            ok &= r.pass;
        }
    }
    let r = brauer_block_report(2, 2)?;
    ok &= r.layer_dims() == [4, 16, 4] && r.total() == 24;
    Ok((ok, "layer dims match the block formula for n, m <= 3".into()))
}

fn char2() -> Outcome {
    let r = char2_nilpotent_trace_demo()?;
    Ok((r.pass, format!("z^2 = 0, Tr(z) = {}", r.trace_of_z)))
}

fn braid_factorization() -> Outcome {
    let perms = Permutation::all(4);
    let mut ok = true;
    let mut pairs = 0;
    for s in &perms {
        for t in &perms {
            if s == t {
                continue;
            }
            let f = factor_lemma(s, t)?;
            let target = permutation_to_braid(s).inverse().concat(&permutation_to_braid(t))?;
            ok &= f.u.support() <= 2 && f.v.support() <= 2;
            ok &= braid_equal(&f.product(), &target)?;
            pairs += 1;
        }
    }
    let mut factors: Vec<Vec<Option<usize>>> = perms.iter().map(canonical_factors).collect();
    ok &= perms.iter().all(|p| permutation_to_braid(p).permutation() == *p);
    factors.sort();
    factors.dedup();
    ok &= factors.len() == perms.len() && pairs == 552;
    Ok((ok, format!("{pairs} pairs certified, {} distinct canonical factorizations", factors.len())))
}

fn moderate_growth() -> Outcome {
    let ring = Ring::Rational;
    let tl = Engine::new(Flavor::Tl, EvalParams::infinity(&ring))?;
    let ob = Engine::new(Flavor::Brauer, EvalParams::infinity(&ring))?;
    let tl_dims: Vec<usize> = (1..=6).map(|n| tl.hom_basis(&plain_word(n), &plain_word(n)).map(|b| b.len())).collect::<Result<_>>()?;
    let ob_dims: Vec<usize> =
        (1..=5).map(|n| ob.hom_basis(&walled_word(n, 0), &walled_word(n, 0)).map(|b| b.len())).collect::<Result<_>>()?;
    let big = |v: &[usize]| v.iter().map(|&x| num_bigint::BigUint::from(x)).collect::<Vec<_>>();
    let tl_rep = moderate_growth_test(&big(&tl_dims));
    let ob_rep = moderate_growth_test(&big(&ob_dims));
    let ok = tl_dims.iter().enumerate().all(|(i, &d)| d == catalan(i + 1))
        && ob_dims.iter().enumerate().all(|(i, &d)| d == (1..=i + 1).product::<usize>())
        && tl_rep.first_below_factorial == Some(3)
        && ob_rep.first_below_factorial.is_none();
    Ok((ok, format!("TLJ(inf) first n = {:?}, OB(inf) first n = {:?}", tl_rep.first_below_factorial, ob_rep.first_below_factorial)))
}

fn rigidity() -> Outcome {
    let laurent = Ring::laurent(&["d"]);
    let generic = Engine::new(Flavor::Tl, EvalParams::standard(laurent.var("d")?))?;
    let q = Ring::Rational;
    let tlj = Engine::new(Flavor::Tl, EvalParams::infinity(&q))?;
    let ob = Engine::new(Flavor::Brauer, EvalParams::infinity(&q))?;
    let a = rigidity_certificate(&generic, &plain_word(1), &plain_word(1))?;
    let b = rigidity_certificate(&tlj, &plain_word(1), &plain_word(1))?;
    let c = rigidity_certificate(&ob, &parse_word("X")?, &parse_word("Y")?)?;
    let ok = a.verdict == Verdict::Certificate
        && b.verdict == Verdict::Refutation
        && b.all_composites_zero
        && c.verdict == Verdict::Refutation
        && c.all_composites_zero;
    Ok((ok, "generic strand certified; TLJ(inf) and OB(inf) refuted".into()))
}

/// TL in the classical kernel at a root δ of x² − x − 1.
pub fn golden_engine() -> Result<Engine> {
    let ring: Ring = "algebraic:x^2-x-1".parse()?;
    Engine::new(Flavor::Tl, EvalParams::standard(ring.var("x")?))
}

fn trace_negligible() -> Outcome {
    let engine = golden_engine()?;
    let mut ok = true;
    for n in 1..=4 {
        ok &= trace_radical_check(&engine, &plain_word(n), &Closure::Planar)?.pass;
    }
    let r = negligible_quotient(&engine, 4)?;
    let oracle = BasedRing::clebsch_gordan(3, Some(3));
    ok &= r.pass && r.fusion.constants == oracle.constants;
    Ok((ok, format!("{} simples, first negligible JW at {:?}", r.fusion.len(), r.first_negligible)))
}

fn radical_vectors(engine: &Engine, word: &[Letter]) -> Result<Vec<DiagramVector>> {
    let (alg, basis) = engine.end_algebra(word)?;
    let shape = engine.identity(word)?.shape().clone();
    alg.radical()?.iter().map(|c| DiagramVector::from_coordinates(shape.clone(), &engine.ring(), &basis, c)).collect()
}

/// Basis diagrams of End(word) with zero square.
fn square_zero_diagrams(engine: &Engine, word: &[Letter]) -> Result<Vec<DiagramVector>> {
    let mut out = vec![];
    for d in engine.hom_basis(word, word)? {
        let v = engine.vector(d)?;
        if engine.compose(&v, &v)?.is_zero() {
            out.push(v);
        }
    }
    Ok(out)
}

/// Name, engine, object Z and generators of the nilpotent subspace N.
pub type RetractionInstance = (String, Engine, Vec<Letter>, Vec<DiagramVector>);

/// The (Z, N) instances exercised by the retraction check.
pub fn retraction_instances() -> Result<Vec<RetractionInstance>> {
    let q = Ring::Rational;
    let mut out = vec![];
    let ob = Engine::new(Flavor::Brauer, EvalParams::infinity(&q))?;
    out.push(("OB(inf) XY, N = 0".to_string(), ob.clone(), parse_word("XY")?, vec![]));
    let golden = golden_engine()?;
    for n in [2, 4] {
        let z = plain_word(n);
        let rad = radical_vectors(&golden, &z)?;
        out.push((format!("TL golden [{n}], N = radical"), golden.clone(), z, rad));
    }
    let one = Engine::new(Flavor::Tl, EvalParams::standard(q.one()))?;
    for n in [4, 6] {
        let z = plain_word(n);
        let rad = radical_vectors(&one, &z)?;
        out.push((format!("TL delta=1 [{n}], N = radical"), one.clone(), z, rad));
    }
    let laurent = Ring::laurent(&["d"]);
    let otl = Engine::new(Flavor::Otl, EvalParams::two_parameter(&laurent, Some(&laurent.var("d")?), None)?)?;
    for w in ["XY", "XYXY", "YXYX"] {
        let z = parse_word(w)?;
        for x in square_zero_diagrams(&otl, &z)?.into_iter().chain(std::iter::once(otl.zero(&z, &z))) {
            out.push((format!("OTL (d,inf) {w}, N = <{x}>"), otl.clone(), z.clone(), vec![x]));
        }
    }
    let z = parse_word("XYXY")?;
    for r in ob.hom_basis(&z, &[])? {
        for a in ob.hom_basis(&[], &z)? {
            if ob.compose_basis(&r, &a)?.0.is_zero() {
                let x = ob.compose(&ob.vector(a)?, &ob.vector(r.clone())?)?;
                out.push((format!("OB(inf) XYXY, N = <{x}>"), ob.clone(), z.clone(), vec![x]));
            }
        }
    }
    Ok(out)
}

fn retraction() -> Outcome {
    let instances = retraction_instances()?;
    let mut ok = true;
    let mut steps = 0;
    for (_, engine, z, n) in &instances {
        let r = good_retraction(engine, z, n)?;
        ok &= r.r_s_is_one && r.kills_n;
        steps += r.steps;
    }
    Ok((ok, format!("{} instances, {steps} replacement steps", instances.len())))
}

/// Checks (a∘b)∘c = a∘(b∘c) on basis triples of End(word): all of them,
/// or `samples` drawn with `rng`.
pub fn associativity_on(engine: &Engine, word: &[Letter], samples: Option<usize>, rng: &mut ChaCha8Rng) -> Result<(bool, usize)> {
    let basis: Vec<Diagram> = engine.hom_basis(word, word)?;
    let b = basis.len();
    let triples: Vec<(usize, usize, usize)> = match samples {
        None => (0..b).flat_map(|i| (0..b).flat_map(move |j| (0..b).map(move |k| (i, j, k)))).collect(),
        Some(s) => (0..s).map(|_| (rng.gen_range(0..b), rng.gen_range(0..b), rng.gen_range(0..b))).collect(),
    };
    let ok = triples.par_iter().try_fold(
        || true,
        |acc, &(i, j, k)| -> Result<bool> {
            let (x, y, z) = (engine.vector(basis[i].clone())?, engine.vector(basis[j].clone())?, engine.vector(basis[k].clone())?);
            let left = engine.compose(&engine.compose(&x, &y)?, &z)?;
            let right = engine.compose(&x, &engine.compose(&y, &z)?)?;
            Ok(acc && left == right)
        },
    );
    let all = ok.try_reduce(|| true, |a, b| Ok(a && b))?;
    Ok((all, triples.len()))
}

/// Three kernels over laurent:d: classical, renormalized and asymptotic.
pub fn three_regimes() -> Result<Vec<(&'static str, EvalParams)>> {
    let r = Ring::laurent(&["d"]);
    let d: Scalar = r.var("d")?;
    Ok(vec![
        ("standard", EvalParams::standard(d.clone())),
        ("renorm", EvalParams::renormalized(&d)?),
        ("infinity", EvalParams::infinity(&r)),
    ])
}

fn associativity(seed: u64) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut ok = true;
    let mut count = 0;
    for (_, params) in three_regimes()? {
        let tl = Engine::new(Flavor::Tl, params.clone())?;
        let br = Engine::new(Flavor::Brauer, params)?;
        for (engine, word, samples) in [(&tl, plain_word(3), None), (&tl, plain_word(4), Some(1000)), (&br, walled_word(2, 2), Some(1000))] {
            let (good, n) = associativity_on(engine, &word, samples, &mut rng)?;
            ok &= good;
            count += n;
        }
    }
    Ok((ok, format!("{count} triples")))
}
