//! Constructive decomposition of group elements into generator words.
//!
//! An element `G` with `g13 != 0` is contracted by `G₁ = J·N·G`, where `N` is a
//! Picard translation close to the inverse of the translation taking the
//! origin to `G(∞) = (g23/g13, g33/g13)`. Each step at least halves `|g13|²`,
//! so after finitely many steps `g13 = 0` and the remainder lies in the
//! stabilizer of ∞, which is written out directly. Since `J⁻¹ = J`,
//! `G = N⁻¹·J·G₁`, so the word for `G` is the word of each `N⁻¹` followed by
//! `J`, ending with the word of the stabilizer element.

use std::fmt;

use num_rational::Ratio;
use num_traits::Signed;

use crate::arith::{nearest_integer, Gaussian, GaussianRational};
use crate::error::{Error, Result};
use crate::group::{translation_matrix, Generator, GroupElement, StabilizerParams};
use crate::heisenberg::BoundaryPoint;
use crate::scalar::Scalar;
use crate::word::{Token, Word};

/// The word `T1^(r-2kl) · T2^k · R · T2^l · R⁻¹ · R^beta_exp`, normalized,
/// where `γ = m + in`, `k = (m+n)/2`, `l = (n-m)/2`.
///
/// `γ = k(1+i) + l(-1+i)`, and conjugating `T2^l` by `R` turns the `(1+i)`
/// direction into `(-1+i)`. The vertical correction `-2kl` absorbs the cross
/// term of the group law.
pub fn stabilizer_word<T: Scalar>(p: &StabilizerParams<T>) -> Result<Word<T>> {
    let norm = p.gamma.norm();
    if norm.is_odd() {
        return Err(Error::ParityViolation(norm.to_string()));
    }
    let (m, n) = (&p.gamma.re, &p.gamma.im);
    let two = T::from(2);
    let k = (m.clone() + n) / &two;
    let l = (n.clone() - m) / &two;
    let vertical = p.r.clone() - two * &k * &l;
    let word: Word<T> = [
        Token::new(Generator::T1, vertical),
        Token::new(Generator::T2, k),
        Token::single(Generator::R),
        Token::new(Generator::T2, l),
        Token::new(Generator::R, -T::one()),
        Token::new(Generator::R, T::from(p.beta_exp as i32)),
    ]
    .into_iter()
    .collect();
    Ok(word.normalize())
}

/// Everything computed in one contraction step.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ReductionStep<T: Scalar> {
    /// Coordinates of `-g23/g13` in the basis `(1+i, -1+i)`.
    pub x: Ratio<T>,
    pub y: Ratio<T>,
    pub m: T,
    pub n: T,
    pub k: T,
    /// `(m - n) + i(m + n)`.
    pub gamma: Gaussian<T>,
    /// The translation `N = (γ, |γ|²/2 + ik)` applied in `J·N·G`.
    pub translation: BoundaryPoint<T>,
    /// `(x - m)² + (y - n)²`.
    pub i1: Ratio<T>,
    /// `|γ|²/2 + Re(conj(γ)·g23/g13) + Re(g33/g13)`, which must equal `i1`.
    pub i1_direct: Ratio<T>,
    /// `k + Im(conj(γ)·g23/g13) + Im(g33/g13)`.
    pub i2: Ratio<T>,
    pub g13_before: Gaussian<T>,
    pub g13_after: Gaussian<T>,
    pub norm_before: T,
    pub norm_after: T,
}

impl<T: Scalar> ReductionStep<T> {
    /// Re-checks the contraction certificate exactly:
    /// `g13' = -g13·(I₁ + iI₂)`, `|g13'|² = |g13|²·(I₁² + I₂²)`, `I₁ ≤ 1/2`,
    /// `|I₂| ≤ 1/2` and hence `2·|g13'|² ≤ |g13|²`.
    pub fn certificate(&self) -> Result<()> {
        let half = Ratio::new(T::one(), T::from(2));
        let fail = |what: &str| Err(Error::Inconsistent(format!("contraction certificate: {what} ({self})")));
        if self.i1 != self.i1_direct {
            return fail("two expressions for I1 disagree");
        }
        if self.i1.is_negative() || self.i1 > half {
            return fail("I1 outside [0, 1/2]");
        }
        if self.i2.abs() > half {
            return fail("|I2| > 1/2");
        }
        let factor = GaussianRational::new(self.i1.clone(), self.i2.clone());
        let predicted = -(&GaussianRational::from(self.g13_before.clone()) * &factor);
        if predicted != GaussianRational::from(self.g13_after.clone()) {
            return fail("g13' != -g13 (I1 + i I2)");
        }
        let scale = self.i1.clone() * &self.i1 + self.i2.clone() * &self.i2;
        if Ratio::from_integer(self.norm_after.clone()) != Ratio::from_integer(self.norm_before.clone()) * scale {
            return fail("|g13'|^2 != |g13|^2 (I1^2 + I2^2)");
        }
        if self.norm_after.clone() * T::from(2) > self.norm_before {
            return fail("|g13|^2 did not halve");
        }
        Ok(())
    }
}

impl<T: Scalar> fmt::Display for ReductionStep<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "m={} n={} k={} gamma={} |g13|^2: {} -> {}",
            self.m, self.n, self.k, self.gamma, self.norm_before, self.norm_after
        )
    }
}

/// One contraction `G ↦ J·N·G` for `g13 != 0`.
pub fn reduction_step<T: Scalar>(
    g: &GroupElement<T>,
) -> Result<(BoundaryPoint<T>, GroupElement<T>, ReductionStep<T>)> {
    let rows = g.matrix();
    let g13 = rows[(0, 2)].clone();
    if g13.is_zero() {
        return Err(Error::StabilizerInput);
    }
    let u = rows[(1, 2)].divide_exact(&g13)?;
    let v = rows[(2, 2)].divide_exact(&g13)?;

    let two = Ratio::from_integer(T::from(2));
    let w = -&u;
    let x = (w.re.clone() + &w.im) / &two;
    let y = (w.im.clone() - &w.re) / &two;
    let m = nearest_integer(&x);
    let n = nearest_integer(&y);
    let gamma = Gaussian::new(m.clone() - &n, m.clone() + &n);

    let t = &GaussianRational::from(gamma.conj()) * &u;
    let k = nearest_integer(&-(t.im.clone() + &v.im));

    let translation = BoundaryPoint::from_gamma(gamma.clone(), Ratio::from_integer(k.clone()));
    let n_mat = translation_matrix(&translation)?;
    let next = &(&Generator::J.matrix() * &n_mat) * g;

    let dx = x.clone() - Ratio::from_integer(m.clone());
    let dy = y.clone() - Ratio::from_integer(n.clone());
    let i1 = dx.clone() * &dx + dy.clone() * &dy;
    let i1_direct = Ratio::new(gamma.norm(), T::from(2)) + &t.re + &v.re;
    let i2 = Ratio::from_integer(k.clone()) + &t.im + &v.im;

    let step = ReductionStep {
        x,
        y,
        m,
        n,
        k,
        gamma,
        translation: translation.clone(),
        i1,
        i1_direct,
        i2,
        norm_before: g13.norm(),
        norm_after: next.g13().norm(),
        g13_after: next.g13().clone(),
        g13_before: g13,
    };
    Ok((translation, next, step))
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ReductionTrace<T: Scalar> {
    pub steps: Vec<ReductionStep<T>>,
}

impl<T: Scalar> ReductionTrace<T> {
    /// `floor(log2 |g13|²) + 1` for the starting element, 0 if it already
    /// fixes ∞.
    pub fn step_bound(initial_norm: &T) -> u64 {
        initial_norm.floor_log2().map_or(0, |b| b + 1)
    }
}

impl<T: Scalar> fmt::Display for ReductionTrace<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.steps.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "step {}: {s}", i + 1)?;
        }
        Ok(())
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Decomposition<T: Scalar> {
    pub word: Word<T>,
    pub trace: ReductionTrace<T>,
    /// Stabilizer parameters of the final element `G_s`.
    pub remainder: StabilizerParams<T>,
}

/// Writes `g` as a normalized word in `T1`, `T2`, `R`, `J`.
///
/// Every step's certificate and the overall step bound are checked as the
/// loop runs; a failure is reported as [`Error::Inconsistent`].
pub fn decompose<T: Scalar>(g: &GroupElement<T>) -> Result<Decomposition<T>> {
    let bound = ReductionTrace::<T>::step_bound(&g.g13().norm());
    let mut current = g.clone();
    let mut steps = Vec::new();
    let mut word = Word::empty();
    while !current.g13().is_zero() {
        if steps.len() as u64 >= bound {
            return Err(Error::Inconsistent(format!(
                "more than {bound} contraction steps for\n{g}"
            )));
        }
        let (translation, next, step) = reduction_step(&current)?;
        step.certificate()?;
        let inverse = StabilizerParams::from_translation(&translation.inverse())
            .ok_or_else(|| Error::NotPicard(translation.to_string()))?;
        word.extend(stabilizer_word(&inverse)?);
        word.push(Token::single(Generator::J));
        steps.push(step);
        current = next;
    }
    let remainder = current
        .classify_stabilizer()?
        .ok_or_else(|| Error::Inconsistent("g13 = 0 but not classified".into()))?;
    word.extend(stabilizer_word(&remainder)?);
    Ok(Decomposition {
        word: word.normalize(),
        trace: ReductionTrace { steps },
        remainder,
    })
}
