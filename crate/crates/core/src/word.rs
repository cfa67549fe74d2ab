//! Words over the generators `T1`, `T2`, `R`, `J`.
//!
//! Text form: whitespace-separated tokens `T1^e`, `T2^e`, `R^e`, `J` with
//! decimal exponents. The empty string is the identity. A bare `T1`, `T2` or
//! `R` means exponent 1, and `J^e` is accepted on input.

use std::fmt;
use std::str::FromStr;

use rand::Rng;

use crate::error::{Error, Result};
use crate::group::{rotation_power, translation_matrix, GroupElement, Generator};
use crate::heisenberg::BoundaryPoint;
use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Token<T> {
    pub kind: Generator,
    pub exponent: T,
}

impl<T: Scalar> Token<T> {
    pub fn new(kind: Generator, exponent: T) -> Self {
        Token { kind, exponent }
    }

    pub fn single(kind: Generator) -> Self {
        Token::new(kind, T::one())
    }

    /// The matrix `kind^exponent`.
    pub fn evaluate(&self) -> GroupElement<T> {
        match self.kind {
            Generator::T1 => power_translation(BoundaryPoint::vertical(), &self.exponent),
            Generator::T2 => power_translation(BoundaryPoint::diagonal(), &self.exponent),
            Generator::R => rotation_power(reduce(&self.exponent, 4)),
            Generator::J => {
                if reduce(&self.exponent, 2) == 0 {
                    GroupElement::identity()
                } else {
                    Generator::J.matrix()
                }
            }
        }
    }
}

fn power_translation<T: Scalar>(base: BoundaryPoint<T>, k: &T) -> GroupElement<T> {
    translation_matrix(&base.power(k)).expect("powers of Picard translations are Picard")
}

/// `e mod m` in `0..m`.
fn reduce<T: Scalar>(e: &T, m: i32) -> i64 {
    e.mod_floor(&T::from(m))
        .to_i64()
        .expect("residue fits in i64")
}

impl<T: Scalar> fmt::Display for Token<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.kind == Generator::J && self.exponent.is_one() {
            f.write_str("J")
        } else {
            write!(f, "{}^{}", self.kind, self.exponent)
        }
    }
}

impl<T: Scalar> FromStr for Token<T> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = |reason| Error::WordParse {
            token: s.to_string(),
            reason,
        };
        let (name, exponent) = match s.split_once('^') {
            Some((name, e)) => (name, T::parse_decimal(e).ok_or_else(|| err("malformed exponent"))?),
            None => (s, T::one()),
        };
        let kind = match name {
            "T1" => Generator::T1,
            "T2" => Generator::T2,
            "R" => Generator::R,
            "J" => Generator::J,
            _ => return Err(err("unknown generator")),
        };
        Ok(Token::new(kind, exponent))
    }
}

/// A product of generator powers, leftmost token = leftmost matrix factor.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Word<T> {
    tokens: Vec<Token<T>>,
}

impl<T: Scalar> Word<T> {
    pub fn new(tokens: Vec<Token<T>>) -> Self {
        Word { tokens }
    }

    pub fn empty() -> Self {
        Word { tokens: Vec::new() }
    }

    pub fn tokens(&self) -> &[Token<T>] {
        &self.tokens
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    pub fn push(&mut self, token: Token<T>) {
        self.tokens.push(token);
    }

    pub fn extend(&mut self, other: Word<T>) {
        self.tokens.extend(other.tokens);
    }

    pub fn count(&self, kind: Generator) -> usize {
        self.tokens.iter().filter(|t| t.kind == kind).count()
    }

    pub fn evaluate(&self) -> GroupElement<T> {
        self.tokens
            .iter()
            .fold(GroupElement::identity(), |acc, t| &acc * &t.evaluate())
    }

    /// Drops zero exponents and merges neighbours of equal kind, using only
    /// `J² = 1` and `R⁴ = 1`. R exponents end up in `1..=3`, J exponents at 1.
    pub fn normalize(&self) -> Self {
        let mut out: Vec<Token<T>> = Vec::with_capacity(self.tokens.len());
        for t in &self.tokens {
            let mut t = canonical(t.clone());
            if let Some(top) = out.pop_if(|top| top.kind == t.kind) {
                t = canonical(Token::new(t.kind, top.exponent + t.exponent));
            }
            if !t.exponent.is_zero() {
                out.push(t);
            }
        }
        Word { tokens: out }
    }

    /// The inverse word, valid for any word (not necessarily normalized).
    pub fn inverse(&self) -> Self {
        let tokens = self
            .tokens
            .iter()
            .rev()
            .map(|t| Token::new(t.kind, -t.exponent.clone()))
            .collect();
        Word { tokens }
    }

    /// A random word: length uniform in `0..=max_len`, generators uniform,
    /// exponents uniform in `-max_exp..=max_exp` (J always exponent 1).
    pub fn random<R: Rng + ?Sized>(rng: &mut R, max_len: usize, max_exp: i32) -> Self {
        let len = rng.gen_range(0..=max_len);
        let tokens = (0..len)
            .map(|_| {
                let kind = Generator::ALL[rng.gen_range(0..4)];
                let e = if kind == Generator::J {
                    1
                } else {
                    rng.gen_range(-max_exp..=max_exp)
                };
                Token::new(kind, T::from(e))
            })
            .collect();
        Word { tokens }
    }
}

fn canonical<T: Scalar>(t: Token<T>) -> Token<T> {
    let modulus = match t.kind {
        Generator::R => 4,
        Generator::J => 2,
        _ => return t,
    };
    Token::new(t.kind, t.exponent.mod_floor(&T::from(modulus)))
}

impl<T: Scalar> fmt::Display for Word<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.tokens.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

impl<T: Scalar> FromStr for Word<T> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let tokens = s.split_whitespace().map(str::parse).collect::<Result<_>>()?;
        Ok(Word { tokens })
    }
}

impl<T: Scalar> FromIterator<Token<T>> for Word<T> {
    fn from_iter<I: IntoIterator<Item = Token<T>>>(iter: I) -> Self {
        Word {
            tokens: iter.into_iter().collect(),
        }
    }
}
