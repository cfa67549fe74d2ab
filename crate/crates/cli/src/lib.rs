//! Command implementations for the `picard` binary.
//!
//! Every command reads its input as a string and writes to caller-supplied
//! sinks, returning the process exit code: 0 success, 1 domain failure
//! (non-member, bad word), 2 usage or parse error.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use picard_core::{decompose, matrix_from_json, matrix_to_json, verify_membership, GroupMatrix, MatrixJson, Word};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub mod selftest;

pub const EXIT_OK: u8 = 0;
pub const EXIT_DOMAIN: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

/// Exponents of random words are drawn from `-RANDOM_MAX_EXP..=RANDOM_MAX_EXP`.
pub const RANDOM_MAX_EXP: i32 = 5;

#[derive(Parser, Debug)]
#[command(name = "picard", version, about = "Exact membership testing and generator decomposition for SU(2,1; Z[i])")]
pub struct Cli {
    /// Read input from PATH instead of standard input.
    #[arg(long, global = true, value_name = "PATH")]
    pub input: Option<std::path::PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check that a matrix (JSON) satisfies G*CG = C and det G = 1.
    Verify,
    /// Write a member matrix (JSON) as a word in T1, T2, R, J.
    Decompose {
        /// Print each contraction step (m, n, k, gamma, |g13|^2) to stderr.
        #[arg(long)]
        trace: bool,
    },
    /// Evaluate a word (text) to its matrix (JSON).
    Eval,
    /// Print a pseudo-random word and its matrix as one JSON object.
    ///
    /// Sampling is over words, not matrices: the group is infinite and has no
    /// uniform distribution. Word length is uniform in 0..=max-length, each
    /// token is uniform over T1, T2, R, J, and exponents are uniform in
    /// [-5, 5]. The output can be piped straight into `decompose`.
    RandomWord {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 64)]
        max_length: usize,
    },
    /// Run the built-in oracle suites (relations, properties, BFS ball).
    Selftest {
        /// Radius of the enumerated ball.
        #[arg(long, default_value_t = 5)]
        radius: usize,
        /// Deliberately break a check to confirm the suite can fail.
        #[arg(long, value_enum)]
        inject_fault: Option<Fault>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fault {
    /// Check R^3 = I in place of R^4 = I.
    R4,
}

fn parse_matrix(input: &str, err: &mut dyn Write) -> Result<picard_core::Mat3<BigInt>, u8> {
    matrix_from_json(input).map_err(|e| {
        let _ = writeln!(err, "parse-error: {e}");
        EXIT_USAGE
    })
}

fn parse_member(input: &str, out: &mut dyn Write, err: &mut dyn Write) -> Result<GroupMatrix, u8> {
    let m = parse_matrix(input, err)?;
    verify_membership(m).map_err(|v| {
        let _ = writeln!(out, "{v}");
        EXIT_DOMAIN
    })
}

pub fn cmd_verify(input: &str, out: &mut dyn Write, err: &mut dyn Write) -> u8 {
    match parse_member(input, out, err) {
        Ok(_) => {
            let _ = writeln!(out, "member");
            EXIT_OK
        }
        Err(code) => code,
    }
}

pub fn cmd_decompose(input: &str, trace: bool, out: &mut dyn Write, err: &mut dyn Write) -> u8 {
    let g = match parse_member(input, out, err) {
        Ok(g) => g,
        Err(code) => return code,
    };
    let d = match decompose(&g) {
        Ok(d) => d,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_DOMAIN;
        }
    };
    if d.word.evaluate() != g {
        let _ = writeln!(err, "error: word `{}` does not evaluate to the input", d.word);
        return EXIT_DOMAIN;
    }
    if trace {
        for (i, s) in d.trace.steps.iter().enumerate() {
            let _ = writeln!(
                err,
                "step {}: m={} n={} k={} gamma={} |g13|^2={} -> {}",
                i + 1,
                s.m,
                s.n,
                s.k,
                s.gamma,
                s.norm_before,
                s.norm_after
            );
        }
        let p = &d.remainder;
        let _ = writeln!(err, "stabilizer: beta=i^{} gamma={} r={}", p.beta_exp, p.gamma, p.r);
    }
    let _ = writeln!(out, "{}", d.word);
    EXIT_OK
}

pub fn cmd_eval(input: &str, out: &mut dyn Write, err: &mut dyn Write) -> u8 {
    match input.parse::<Word<BigInt>>() {
        Ok(w) => {
            let _ = writeln!(out, "{}", matrix_to_json(w.evaluate().matrix()));
            EXIT_OK
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_DOMAIN
        }
    }
}

#[derive(serde::Serialize)]
struct RandomOutput {
    word: String,
    #[serde(flatten)]
    matrix: MatrixJson,
}

pub fn random_word(seed: u64, max_length: usize) -> Word<BigInt> {
    Word::random(&mut ChaCha8Rng::seed_from_u64(seed), max_length, RANDOM_MAX_EXP)
}

pub fn cmd_random_word(seed: u64, max_length: usize, out: &mut dyn Write) -> u8 {
    let w = random_word(seed, max_length);
    let record = RandomOutput {
        word: w.to_string(),
        matrix: MatrixJson::from_matrix(w.evaluate().matrix()),
    };
    let _ = writeln!(out, "{}", serde_json::to_string(&record).expect("strings always serialize"));
    EXIT_OK
}

/// Dispatches a parsed command line. `input` is only called by commands that
/// consume input.
pub fn run(cli: &Cli, input: impl FnOnce() -> std::io::Result<String>, out: &mut dyn Write, err: &mut dyn Write) -> u8 {
    let needs_input = matches!(cli.command, Command::Verify | Command::Decompose { .. } | Command::Eval);
    let text = if needs_input {
        match input() {
            Ok(s) => s,
            Err(e) => {
                let _ = writeln!(err, "error: cannot read input: {e}");
                return EXIT_USAGE;
            }
        }
    } else {
        String::new()
    };
    match &cli.command {
        Command::Verify => cmd_verify(&text, out, err),
        Command::Decompose { trace } => cmd_decompose(&text, *trace, out, err),
        Command::Eval => cmd_eval(&text, out, err),
        Command::RandomWord { seed, max_length } => cmd_random_word(*seed, *max_length, out),
        Command::Selftest { radius, inject_fault } => selftest::run(*radius, *inject_fault, out),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn capture(f: impl FnOnce(&mut dyn Write, &mut dyn Write) -> u8) -> (u8, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = f(&mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    fn json_of(word: &str) -> String {
        capture(|o, e| cmd_eval(word, o, e)).1
    }

    #[test]
    fn verify_reports() {
        assert_eq!(capture(|o, e| cmd_verify(&json_of(""), o, e)).1, "member\n");
        assert_eq!(capture(|o, e| cmd_verify(&json_of("J"), o, e)).0, EXIT_OK);
        let bad = json_of("").replacen(r#"["0","0"]],["#, r#"["1","0"]],["#, 1);
        let (code, out, _) = capture(|o, e| cmd_verify(&bad, o, e));
        assert_eq!(code, EXIT_DOMAIN);
        assert!(out.starts_with("form-violation"), "{out}");
        let (code, _, err) = capture(|o, e| cmd_verify("{\"entries\":", o, e));
        assert_eq!(code, EXIT_USAGE);
        assert!(err.starts_with("parse-error") && err.contains("column"), "{err}");
    }

    #[test]
    fn decompose_simple() {
        assert_eq!(capture(|o, e| cmd_decompose(&json_of("T1"), false, o, e)).1, "T1^1\n");
        assert_eq!(capture(|o, e| cmd_decompose(&json_of("R R"), false, o, e)).1, "R^2\n");
        assert_eq!(capture(|o, e| cmd_decompose(&json_of(""), false, o, e)).1, "\n");
        let (code, _, err) = capture(|o, e| cmd_decompose(&json_of("J T2^2 R^1 T1^-3"), true, o, e));
        assert_eq!(code, EXIT_OK);
        assert!(err.contains("step 1: m="), "{err}");
    }

    #[test]
    fn eval_rejects_bad_words() {
        let (code, _, err) = capture(|o, e| cmd_eval("T1^1 X^2", o, e));
        assert_eq!(code, EXIT_DOMAIN);
        assert!(err.contains("X^2"));
        assert_eq!(capture(|o, e| cmd_eval("R^1.5", o, e)).0, EXIT_DOMAIN);
    }

    #[test]
    fn random_word_is_reproducible() {
        let a = capture(|o, _| cmd_random_word(42, 64, o)).1;
        let b = capture(|o, _| cmd_random_word(42, 64, o)).1;
        assert_eq!(a, b);
        let empty = capture(|o, _| cmd_random_word(1, 0, o)).1;
        assert!(empty.starts_with(r#"{"word":"","entries":[[["1","0"]"#), "{empty}");
    }
}
