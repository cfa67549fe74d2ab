//! Gaussian integers, complex rationals and exact rounding.
//!
//! Everything here is exact. There is no floating point anywhere in the
//! crate; comparisons against `1/2` are rational comparisons.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// An element `re + i·im` of Z[i].
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Gaussian<T> {
    pub re: T,
    pub im: T,
}

impl<T: Scalar> Gaussian<T> {
    pub fn new(re: T, im: T) -> Self {
        Gaussian { re, im }
    }

    pub fn from_ints(re: i32, im: i32) -> Self {
        Gaussian::new(T::from(re), T::from(im))
    }

    pub fn real(re: T) -> Self {
        Gaussian::new(re, T::zero())
    }

    pub fn zero() -> Self {
        Gaussian::new(T::zero(), T::zero())
    }

    pub fn one() -> Self {
        Gaussian::new(T::one(), T::zero())
    }

    pub fn i() -> Self {
        Gaussian::new(T::zero(), T::one())
    }

    /// `i^k`, for any integer `k`.
    pub fn i_pow(k: i64) -> Self {
        match k.rem_euclid(4) {
            0 => Self::from_ints(1, 0),
            1 => Self::from_ints(0, 1),
            2 => Self::from_ints(-1, 0),
            _ => Self::from_ints(0, -1),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Gaussian::new(self.re.clone(), -self.im.clone())
    }

    /// `re² + im²`.
    pub fn norm(&self) -> T {
        self.re.clone() * &self.re + self.im.clone() * &self.im
    }

    pub fn scale(&self, k: &T) -> Self {
        Gaussian::new(self.re.clone() * k, self.im.clone() * k)
    }

    /// Which power of `i` this is, if it is a unit.
    pub fn unit_exponent(&self) -> Option<u8> {
        (0..4u8).find(|&k| *self == Self::i_pow(k as i64))
    }

    /// `p / q` as an exact element of Q(i).
    pub fn divide_exact(&self, q: &Self) -> Result<GaussianRational<T>> {
        GaussianRational::from(self.clone()).checked_div(q)
    }
}

impl<T: Scalar> Add<&Gaussian<T>> for &Gaussian<T> {
    type Output = Gaussian<T>;
    fn add(self, rhs: &Gaussian<T>) -> Gaussian<T> {
        Gaussian::new(self.re.clone() + &rhs.re, self.im.clone() + &rhs.im)
    }
}

impl<T: Scalar> Sub<&Gaussian<T>> for &Gaussian<T> {
    type Output = Gaussian<T>;
    fn sub(self, rhs: &Gaussian<T>) -> Gaussian<T> {
        Gaussian::new(self.re.clone() - &rhs.re, self.im.clone() - &rhs.im)
    }
}

impl<T: Scalar> Mul<&Gaussian<T>> for &Gaussian<T> {
    type Output = Gaussian<T>;
    fn mul(self, rhs: &Gaussian<T>) -> Gaussian<T> {
        Gaussian::new(
            self.re.clone() * &rhs.re - self.im.clone() * &rhs.im,
            self.re.clone() * &rhs.im + self.im.clone() * &rhs.re,
        )
    }
}

impl<T: Scalar> Neg for &Gaussian<T> {
    type Output = Gaussian<T>;
    fn neg(self) -> Gaussian<T> {
        Gaussian::new(-self.re.clone(), -self.im.clone())
    }
}

macro_rules! forward_owned {
    ($ty:ident, $($tr:ident $m:ident),*) => {$(
        impl<T: Scalar> $tr<$ty<T>> for $ty<T> {
            type Output = $ty<T>;
            fn $m(self, rhs: $ty<T>) -> $ty<T> {
                (&self).$m(&rhs)
            }
        }
        impl<T: Scalar> $tr<&$ty<T>> for $ty<T> {
            type Output = $ty<T>;
            fn $m(self, rhs: &$ty<T>) -> $ty<T> {
                (&self).$m(rhs)
            }
        }
    )*};
}

forward_owned!(Gaussian, Add add, Sub sub, Mul mul);

impl<T: Scalar> Neg for Gaussian<T> {
    type Output = Gaussian<T>;
    fn neg(self) -> Gaussian<T> {
        -&self
    }
}

impl<T: Scalar> fmt::Display for Gaussian<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.re.is_zero() {
            write!(f, "{}i", self.im)
        } else if self.im.is_negative() {
            write!(f, "{}-{}i", self.re, self.im.abs())
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

/// Nearest integer to `x`, ties to even.
///
/// The result `m` always satisfies `|x - m| <= 1/2`.
pub fn nearest_integer<T: Scalar>(x: &Ratio<T>) -> T {
    let floor = x.numer().div_floor(x.denom());
    let frac = x - Ratio::from_integer(floor.clone());
    let half = Ratio::new(T::one(), T::from(2));
    match frac.cmp(&half) {
        std::cmp::Ordering::Less => floor,
        std::cmp::Ordering::Greater => floor + T::one(),
        std::cmp::Ordering::Equal => {
            if floor.is_even() {
                floor
            } else {
                floor + T::one()
            }
        }
    }
}

/// An element of Q(i) with exact rational parts.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GaussianRational<T: Clone + Integer> {
    pub re: Ratio<T>,
    pub im: Ratio<T>,
}

impl<T: Scalar> GaussianRational<T> {
    pub fn new(re: Ratio<T>, im: Ratio<T>) -> Self {
        GaussianRational { re, im }
    }

    pub fn zero() -> Self {
        GaussianRational::new(Ratio::zero(), Ratio::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussianRational::new(self.re.clone(), -self.im.clone())
    }

    pub fn norm(&self) -> Ratio<T> {
        self.re.clone() * &self.re + self.im.clone() * &self.im
    }

    /// The Gaussian integer this equals, if both parts are integral.
    pub fn to_gaussian(&self) -> Option<Gaussian<T>> {
        (self.re.is_integer() && self.im.is_integer())
            .then(|| Gaussian::new(self.re.to_integer(), self.im.to_integer()))
    }

    /// `self / q`, computed as `self · conj(q) / norm(q)`.
    pub fn checked_div(&self, q: &Gaussian<T>) -> Result<Self> {
        if q.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = Ratio::from_integer(q.norm());
        let prod = self * &GaussianRational::from(q.conj());
        Ok(GaussianRational::new(prod.re / &n, prod.im / &n))
    }
}

impl<T: Scalar> From<Gaussian<T>> for GaussianRational<T> {
    fn from(z: Gaussian<T>) -> Self {
        GaussianRational::new(Ratio::from_integer(z.re), Ratio::from_integer(z.im))
    }
}

impl<T: Scalar> Add<&GaussianRational<T>> for &GaussianRational<T> {
    type Output = GaussianRational<T>;
    fn add(self, rhs: &GaussianRational<T>) -> GaussianRational<T> {
        GaussianRational::new(self.re.clone() + &rhs.re, self.im.clone() + &rhs.im)
    }
}

impl<T: Scalar> Sub<&GaussianRational<T>> for &GaussianRational<T> {
    type Output = GaussianRational<T>;
    fn sub(self, rhs: &GaussianRational<T>) -> GaussianRational<T> {
        GaussianRational::new(self.re.clone() - &rhs.re, self.im.clone() - &rhs.im)
    }
}

impl<T: Scalar> Mul<&GaussianRational<T>> for &GaussianRational<T> {
    type Output = GaussianRational<T>;
    fn mul(self, rhs: &GaussianRational<T>) -> GaussianRational<T> {
        GaussianRational::new(
            self.re.clone() * &rhs.re - self.im.clone() * &rhs.im,
            self.re.clone() * &rhs.im + self.im.clone() * &rhs.re,
        )
    }
}

impl<T: Scalar> Neg for &GaussianRational<T> {
    type Output = GaussianRational<T>;
    fn neg(self) -> GaussianRational<T> {
        GaussianRational::new(-self.re.clone(), -self.im.clone())
    }
}

forward_owned!(GaussianRational, Add add, Sub sub, Mul mul);

impl<T: Scalar> Neg for GaussianRational<T> {
    type Output = GaussianRational<T>;
    fn neg(self) -> GaussianRational<T> {
        -&self
    }
}

impl<T: Scalar> fmt::Display for GaussianRational<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})+({})i", self.re, self.im)
    }
}
