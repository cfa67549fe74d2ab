//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.
//!
//! Run with `cargo test -p picard-core --test acceptance`.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::Signed;
use picard_core::{
    decompose, default_generators, stabilizer_word, translation_matrix, verify_membership, Ball, BoundaryPoint,
    Gaussian, Generator, GroupElement, Mat3, ReductionStep, ReductionTrace, StabilizerParams, Violation, Word,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type G = Gaussian<BigInt>;
type M = Mat3<BigInt>;
type Q = Ratio<BigInt>;

const SEED: u64 = 0x5eed_2009;

struct Outcome {
    id: usize,
    name: &'static str,
    limit: Option<Duration>,
    elapsed: Duration,
    result: Result<String, String>,
}

fn run(
    id: usize,
    name: &'static str,
    limit: Option<Duration>,
    f: impl FnOnce() -> Result<String, String>,
) -> Outcome {
    let start = Instant::now();
    let result = f();
    Outcome {
        id,
        name,
        limit,
        elapsed: start.elapsed(),
        result,
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn literal(rows: [[(i32, i32); 3]; 3]) -> M {
    M::from_ints(rows)
}

/// 1. Generators equal the printed matrices and are members.
fn generator_fidelity() -> Result<String, String> {
    let printed = [
        (Generator::T1, literal([[(1, 0), (0, 0), (0, 0)], [(0, 0), (1, 0), (0, 0)], [(0, 1), (0, 0), (1, 0)]])),
        (Generator::T2, literal([[(1, 0), (0, 0), (0, 0)], [(1, 1), (1, 0), (0, 0)], [(1, 0), (1, -1), (1, 0)]])),
        (Generator::R, literal([[(0, 1), (0, 0), (0, 0)], [(0, 0), (-1, 0), (0, 0)], [(0, 0), (0, 0), (0, 1)]])),
        (Generator::J, literal([[(0, 0), (0, 0), (-1, 0)], [(0, 0), (-1, 0), (0, 0)], [(-1, 0), (0, 0), (0, 0)]])),
    ];
    for (g, expected) in printed {
        let built = g.matrix::<BigInt>().into_matrix();
        ensure(built == expected, || format!("{g} differs from the printed matrix:\n{built}"))?;
        verify_membership(built).map_err(|v| format!("{g} rejected: {v}"))?;
    }
    Ok("T1, T2, R, J match entry-for-entry; all members".into())
}

fn random_picard_point(rng: &mut impl Rng, bound: i64) -> BoundaryPoint<BigInt> {
    let m = rng.gen_range(-bound..=bound);
    let mut n = rng.gen_range(-bound..=bound);
    if (m + n).rem_euclid(2) == 1 {
        n += if n < bound { 1 } else { -1 };
    }
    let r = rng.gen_range(-bound..=bound);
    BoundaryPoint::from_gamma(G::new(m.into(), n.into()), Q::from_integer(r.into()))
}

/// 2. Relations and the translation homomorphism.
fn relations() -> Result<String, String> {
    let gen = |g: Generator| g.matrix::<BigInt>();
    let (t1, t2, r, j) = (gen(Generator::T1), gen(Generator::T2), gen(Generator::R), gen(Generator::J));
    ensure((&j * &j).is_identity(), || "J^2 != I".into())?;
    let r2 = &r * &r;
    ensure((&r2 * &r2).is_identity(), || "R^4 != I".into())?;
    let t1_inv = translation_matrix(&BoundaryPoint::vertical().inverse()).map_err(|e| e.to_string())?;
    let t2_inv = translation_matrix(&BoundaryPoint::diagonal().inverse()).map_err(|e| e.to_string())?;
    ensure((&t1 * &t1_inv).is_identity(), || "T1 T1^-1 != I".into())?;
    ensure((&t2 * &t2_inv).is_identity(), || "T2 T2^-1 != I".into())?;

    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for i in 0..1000 {
        let a = random_picard_point(&mut rng, 1000);
        let b = random_picard_point(&mut rng, 1000);
        let ma = translation_matrix(&a).map_err(|e| e.to_string())?;
        let mb = translation_matrix(&b).map_err(|e| e.to_string())?;
        let mab = translation_matrix(&a.compose(&b)).map_err(|e| e.to_string())?;
        ensure(&ma * &mb == mab, || format!("homomorphism fails at pair {i}: a={a} b={b}"))?;
    }
    Ok("J^2 = R^4 = T1 T1^-1 = T2 T2^-1 = I; 1000 homomorphism pairs exact".into())
}

/// 3. Stabilizer words.
fn stabilizer_words() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 3);
    for i in 0..500 {
        let p = random_picard_point(&mut rng, 100);
        let mut params = StabilizerParams::from_translation(&p).ok_or("random point not Picard")?;
        params.beta_exp = rng.gen_range(0..4);
        let word = stabilizer_word(&params).map_err(|e| e.to_string())?;
        let rebuilt = params.rebuild().map_err(|e| e.to_string())?;
        ensure(word.evaluate() == rebuilt, || format!("sample {i}: {params:?} -> {word}"))?;
        ensure(word.count(Generator::J) == 0, || format!("sample {i}: J in {word}"))?;
    }
    Ok("500 random stabilizer elements reproduced exactly, no J".into())
}

/// Independent re-check of one contraction step from its recorded fields.
fn check_step(step: &ReductionStep<BigInt>) -> Result<(), String> {
    let half = Q::new(1.into(), 2.into());
    let dx = step.x.clone() - Q::from_integer(step.m.clone());
    let dy = step.y.clone() - Q::from_integer(step.n.clone());
    let i1 = dx.clone() * &dx + dy.clone() * &dy;
    ensure(i1 == step.i1, || format!("I1 mismatch at {step}"))?;
    ensure(i1 <= half, || format!("I1 > 1/2 at {step}"))?;
    ensure(step.i2.abs() <= half, || format!("|I2| > 1/2 at {step}"))?;
    let before = step.g13_before.norm();
    let after = step.g13_after.norm();
    let scale = i1.clone() * &i1 + step.i2.clone() * &step.i2;
    ensure(Q::from_integer(after.clone()) == Q::from_integer(before.clone()) * scale, || {
        format!("norm identity fails at {step}")
    })?;
    ensure(after * 2 <= before, || format!("no halving at {step}"))?;
    step.certificate().map_err(|e| e.to_string())
}

/// Decomposes `g`, checks the roundtrip, and returns the trace.
fn roundtrip(g: &GroupElement<BigInt>, label: &str) -> Result<ReductionTrace<BigInt>, String> {
    let d = decompose(g).map_err(|e| format!("{label}: {e}"))?;
    let back = d.word.evaluate();
    ensure(&back == g, || format!("{label}: roundtrip mismatch, word {}\n{}", d.word, d.trace))?;
    let bound = ReductionTrace::<BigInt>::step_bound(&g.g13().norm());
    ensure(d.trace.steps.len() as u64 <= bound, || {
        format!("{label}: {} steps > bound {bound}", d.trace.steps.len())
    })?;
    let has_j = d.word.count(Generator::J) > 0;
    ensure(has_j != g.g13().is_zero(), || format!("{label}: J usage inconsistent with g13"))?;
    Ok(d.trace)
}

/// 5. Random-word roundtrip.
fn random_roundtrip(steps: &mut Vec<ReductionStep<BigInt>>) -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 5);
    let mut max_bits = 0;
    for i in 0..1000 {
        let w = Word::<BigInt>::random(&mut rng, 64, 5);
        let g = w.evaluate();
        verify_membership(g.matrix().clone()).map_err(|v| format!("word {i} evaluates to a non-member: {v}"))?;
        max_bits = max_bits.max(g.g13().norm().bits());
        let trace = roundtrip(&g, &format!("word {i} `{w}`"))?;
        steps.extend(trace.steps);
    }
    Ok(format!("1000 words roundtrip exactly (largest |g13|^2 has {max_bits} bits)"))
}

/// 6. BFS ball of radius 5.
fn bfs_oracle(steps: &mut Vec<ReductionStep<BigInt>>) -> Result<String, String> {
    let ball = Ball::<BigInt>::enumerate(5, &default_generators());
    for (g, w) in ball.elements() {
        verify_membership(g.matrix().clone()).map_err(|v| format!("`{w}` not a member: {v}"))?;
        let trace = roundtrip(g, &format!("ball element `{w}`"))?;
        steps.extend(trace.steps);
    }
    Ok(format!("ball sizes by radius {:?}, all members, all roundtrip", ball.ball_sizes()))
}

/// Criterion 4: contraction certificate over every step collected by 5 and 6
/// plus a few hand-picked elements.
fn contraction(steps: &mut Vec<ReductionStep<BigInt>>) -> Result<String, String> {
    for s in ["J", "T2 J", "J T2^2 R^1 T1^-3", "T1^7 J T2^-3 J R^2 T1^11 J T2^4 J"] {
        let g = s.parse::<Word<BigInt>>().map_err(|e| e.to_string())?.evaluate();
        steps.extend(roundtrip(&g, s)?.steps);
    }
    ensure(!steps.is_empty(), || "no reduction steps were exercised".into())?;
    for step in steps.iter() {
        check_step(step)?;
    }
    Ok(format!("{} reduction steps certified exactly", steps.len()))
}

/// Naive `G*CG` and cofactor determinant, written independently of the
/// library's membership check.
fn oracle_violation(m: &M) -> Option<&'static str> {
    let c = [[0i32, 0, -1], [0, 1, 0], [-1, 0, 0]];
    for a in 0..3 {
        for b in 0..3 {
            let mut sum = G::zero();
            for p in 0..3 {
                for q in 0..3 {
                    if c[p][q] != 0 {
                        let term = &m[(p, a)].conj() * &m[(q, b)];
                        sum = sum + term.scale(&BigInt::from(c[p][q]));
                    }
                }
            }
            if sum != G::from_ints(c[a][b], 0) {
                return Some("form-violation");
            }
        }
    }
    let det = (0..3)
        .map(|p| {
            let (q, r) = ((p + 1) % 3, (p + 2) % 3);
            &m[(0, p)] * &(&(&m[(1, q)] * &m[(2, r)]) - &(&m[(1, r)] * &m[(2, q)]))
        })
        .fold(G::zero(), |acc, t| acc + t);
    (det != G::one()).then_some("determinant-violation")
}

/// 7. Perturbed members are rejected with the right class.
///
/// Bumping one entry by +1 occasionally lands on another member (for
/// example `R` with `g31 += 1` is `N(0,-i)·R`). Those draws are not
/// near-members; they are counted, must be accepted, and are replaced until
/// 100 genuine non-members have been checked.
fn negative_controls() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 7);
    let mut classes = [0usize; 2];
    let mut still_members = 0usize;
    let mut checked = 0usize;
    while checked < 100 {
        let w = Word::<BigInt>::random(&mut rng, 12, 3);
        let mut m = w.evaluate().into_matrix();
        let (r, c) = (rng.gen_range(0..3), rng.gen_range(0..3));
        let bumped = &m[(r, c)] + &G::one();
        m.set(r, c, bumped);
        let label = format!("`{w}` bumped at ({},{})", r + 1, c + 1);
        match (oracle_violation(&m), verify_membership(m)) {
            (None, Ok(_)) => still_members += 1,
            (None, Err(v)) => return Err(format!("{label}: oracle accepts, library says {v}")),
            (Some(_), Ok(_)) => return Err(format!("{label}: accepted")),
            (Some(expected), Err(v)) => {
                ensure(v.class() == expected, || format!("{label}: got {v}, oracle says {expected}"))?;
                classes[matches!(v, Violation::Determinant) as usize] += 1;
                checked += 1;
            }
        }
    }
    Ok(format!(
        "100 near-members rejected ({} form, {} determinant); {still_members} bumps stayed members",
        classes[0], classes[1]
    ))
}

fn main() -> ExitCode {
    let secs = Duration::from_secs;
    let mut steps = Vec::new();
    let mut outcomes = vec![
        run(1, "generator fidelity", Some(secs(1)), generator_fidelity),
        run(2, "relation suite", Some(secs(1)), relations),
        run(3, "stabilizer decomposition", Some(secs(5)), stabilizer_words),
        run(5, "full roundtrip", Some(secs(60)), || random_roundtrip(&mut steps)),
        run(6, "BFS oracle", Some(secs(60)), || bfs_oracle(&mut steps)),
    ];
    outcomes.push(run(4, "contraction certificate", None, || contraction(&mut steps)));
    outcomes.push(run(7, "negative controls", Some(secs(1)), negative_controls));
    outcomes.sort_by_key(|o| o.id);

    let mut failed = 0;
    for o in &outcomes {
        let timing = match o.limit {
            Some(l) if o.elapsed > l => Err(format!("took {:.2?}, limit {:.0?}", o.elapsed, l)),
            _ => Ok(()),
        };
        let verdict = match (&o.result, &timing) {
            (Ok(detail), Ok(())) => format!("PASS  {detail}"),
            (Err(e), _) => format!("FAIL  {e}"),
            (Ok(_), Err(t)) => format!("FAIL  {t}"),
        };
        if verdict.starts_with("FAIL") {
            failed += 1;
        }
        println!("[criterion {}] {:<26} {:>9.2?}  {verdict}", o.id, o.name, o.elapsed);
    }
    println!("{} of {} criteria passed", outcomes.len() - failed, outcomes.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
