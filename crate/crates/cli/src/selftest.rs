//! `picard selftest`: relation checks, property suites on seeded random
//! inputs, and the BFS ball oracle. Stops each suite at its first
//! counterexample and prints it in full.

use std::io::Write;

use num_bigint::BigInt;
use picard_core::{
    decompose, default_generators, stabilizer_word, translation_matrix, verify_membership, Ball, BoundaryPoint,
    GaussianInteger, Generator, GroupMatrix, Rational, ReductionTrace, StabilizerParams, Word,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::{Fault, EXIT_DOMAIN, EXIT_OK};

const SEED: u64 = 20090930;

type Suite = Result<String, String>;

fn random_point(rng: &mut ChaCha8Rng, bound: i64) -> BoundaryPoint<BigInt> {
    let m = rng.gen_range(-bound..=bound);
    let n = rng.gen_range(-bound..=bound);
    // m and n must share parity for |gamma|^2 to be even
    let n = if (m - n) % 2 == 0 { n } else { n - 1 };
    let r = rng.gen_range(-bound..=bound);
    BoundaryPoint::from_gamma(GaussianInteger::new(m.into(), n.into()), Rational::from_integer(r.into()))
}

fn relations(fault: Option<Fault>) -> Suite {
    let j = Generator::J.matrix::<BigInt>();
    let r = Generator::R.matrix::<BigInt>();
    let order = if fault == Some(Fault::R4) { 3 } else { 4 };
    let mut power = GroupMatrix::identity();
    for _ in 0..order {
        power = &power * &r;
    }
    if !power.is_identity() {
        return Err(format!("R^{order} != I:\n{power}"));
    }
    if !(&j * &j).is_identity() {
        return Err("J^2 != I".into());
    }
    for (name, p) in [("T1", BoundaryPoint::<BigInt>::vertical()), ("T2", BoundaryPoint::diagonal())] {
        let g = translation_matrix(&p).map_err(|e| e.to_string())?;
        let inv = translation_matrix(&p.inverse()).map_err(|e| e.to_string())?;
        if !(&g * &inv).is_identity() {
            return Err(format!("{name} {name}^-1 != I"));
        }
    }
    for g in Generator::ALL {
        verify_membership(g.matrix::<BigInt>().into_matrix()).map_err(|v| format!("generator {g}: {v}"))?;
    }
    Ok(format!("J^2 = R^{order} = I, translation inverses, generators are members"))
}

fn homomorphism(rng: &mut ChaCha8Rng) -> Suite {
    for _ in 0..500 {
        let (a, b) = (random_point(rng, 1000), random_point(rng, 1000));
        let lhs = &translation_matrix(&a).map_err(|e| e.to_string())? * &translation_matrix(&b).map_err(|e| e.to_string())?;
        let rhs = translation_matrix(&a.compose(&b)).map_err(|e| e.to_string())?;
        if lhs != rhs {
            return Err(format!("N(a)N(b) != N(a*b) for a = {a}, b = {b}"));
        }
    }
    Ok("500 random pairs".into())
}

fn stabilizers(rng: &mut ChaCha8Rng) -> Suite {
    for _ in 0..500 {
        let mut p = StabilizerParams::from_translation(&random_point(rng, 100)).ok_or("non-Picard sample")?;
        p.beta_exp = rng.gen_range(0..4);
        let word = stabilizer_word(&p).map_err(|e| e.to_string())?;
        let target = p.rebuild().map_err(|e| e.to_string())?;
        if word.evaluate() != target || word.count(Generator::J) != 0 {
            return Err(format!("params {p:?} gave word `{word}`"));
        }
        if target.classify_stabilizer().map_err(|e| e.to_string())? != Some(p.clone()) {
            return Err(format!("classification does not recover {p:?}"));
        }
    }
    Ok("500 random stabilizer elements".into())
}

fn roundtrip(g: &GroupMatrix, label: &str) -> Result<(), String> {
    let d = decompose(g).map_err(|e| format!("{label}\nmatrix:\n{g}\nerror: {e}"))?;
    let bound = ReductionTrace::<BigInt>::step_bound(&g.g13().norm());
    let back = d.word.evaluate();
    if &back != g || d.trace.steps.len() as u64 > bound {
        return Err(format!(
            "{label}\nmatrix:\n{g}\nword: {}\nevaluates to:\n{back}\ntrace:\n{}",
            d.word, d.trace
        ));
    }
    Ok(())
}

fn random_words(rng: &mut ChaCha8Rng) -> Suite {
    for i in 0..200 {
        let w = Word::<BigInt>::random(rng, 64, crate::RANDOM_MAX_EXP);
        roundtrip(&w.evaluate(), &format!("random word {i}: `{w}`"))?;
    }
    Ok("200 random words decompose and roundtrip".into())
}

fn ball(radius: usize) -> Suite {
    let ball = Ball::<BigInt>::enumerate(radius, &default_generators());
    for (g, w) in ball.elements() {
        verify_membership(g.matrix().clone()).map_err(|v| format!("ball element `{w}`: {v}"))?;
        roundtrip(g, &format!("ball element `{w}`"))?;
    }
    let sizes = ball
        .ball_sizes()
        .iter()
        .enumerate()
        .map(|(r, n)| format!("r{r}={n}"))
        .collect::<Vec<_>>()
        .join(" ");
    Ok(format!("ball sizes {sizes}"))
}

pub fn run(radius: usize, fault: Option<Fault>, out: &mut dyn Write) -> u8 {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let suites: Vec<(&str, Suite)> = vec![
        ("relations", relations(fault)),
        ("translation homomorphism", homomorphism(&mut rng)),
        ("stabilizer words", stabilizers(&mut rng)),
        ("random word roundtrip", random_words(&mut rng)),
        ("bfs ball", ball(radius)),
    ];
    let mut failed = false;
    for (name, result) in suites {
        match result {
            Ok(detail) => {
                let _ = writeln!(out, "ok    {name}: {detail}");
            }
            Err(counterexample) => {
                failed = true;
                let _ = writeln!(out, "FAIL  {name}: {counterexample}");
            }
        }
    }
    if failed {
        EXIT_DOMAIN
    } else {
        let _ = writeln!(out, "all suites passed");
        EXIT_OK
    }
}
