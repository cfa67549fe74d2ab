//! Boundary points of the Siegel domain and the Heisenberg group law on them.
//!
//! A point `(a1, a2)` with `Re(a2) = |a1|²/2` parametrizes the translation
//! `(z1, z2) ↦ (z1 + a1, z2 + a2 + z1·conj(a1))`. Composition and inversion are
//! computed on the parameters directly, without going through matrices.

use std::fmt;

use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::arith::{Gaussian, GaussianRational};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BoundaryPoint<T: Scalar> {
    a1: Gaussian<T>,
    a2: GaussianRational<T>,
}

impl<T: Scalar> BoundaryPoint<T> {
    /// Checks the boundary condition `Re(a2) = |a1|²/2` exactly.
    pub fn new(a1: Gaussian<T>, a2: GaussianRational<T>) -> Result<Self> {
        let p = BoundaryPoint { a1, a2 };
        if p.on_boundary() {
            Ok(p)
        } else {
            Err(Error::NotOnBoundary(p.to_string()))
        }
    }

    /// `(γ, |γ|²/2 + i·r)`; always on the boundary.
    pub fn from_gamma(gamma: Gaussian<T>, r: Ratio<T>) -> Self {
        let re = Ratio::new(gamma.norm(), T::from(2));
        BoundaryPoint {
            a1: gamma,
            a2: GaussianRational::new(re, r),
        }
    }

    pub fn identity() -> Self {
        BoundaryPoint {
            a1: Gaussian::zero(),
            a2: GaussianRational::zero(),
        }
    }

    /// The vertical generator `(0, i)`.
    pub fn vertical() -> Self {
        Self::from_gamma(Gaussian::zero(), Ratio::one())
    }

    /// The diagonal generator `(1+i, 1)`.
    pub fn diagonal() -> Self {
        Self::from_gamma(Gaussian::from_ints(1, 1), Ratio::zero())
    }

    pub fn a1(&self) -> &Gaussian<T> {
        &self.a1
    }

    pub fn a2(&self) -> &GaussianRational<T> {
        &self.a2
    }

    /// The vertical coordinate `r = Im(a2)`.
    pub fn height(&self) -> &Ratio<T> {
        &self.a2.im
    }

    pub fn is_identity(&self) -> bool {
        self.a1.is_zero() && self.a2.is_zero()
    }

    pub fn on_boundary(&self) -> bool {
        self.a2.re.clone() * Ratio::from_integer(T::from(2)) == Ratio::from_integer(self.a1.norm())
    }

    /// Whether the translation has Gaussian-integer matrix entries:
    /// `|a1|²` even and `a2 ∈ Z[i]`.
    pub fn is_picard(&self) -> bool {
        self.on_boundary() && self.a1.norm().is_even() && self.a2.to_gaussian().is_some()
    }

    /// Group law: `(a1 + b1, a2 + b2 + conj(a1)·b1)`.
    pub fn compose(&self, other: &Self) -> Self {
        let cross = GaussianRational::from(&self.a1.conj() * &other.a1);
        BoundaryPoint {
            a1: &self.a1 + &other.a1,
            a2: &(&self.a2 + &other.a2) + &cross,
        }
    }

    /// `(-a1, -a2 + |a1|²)`.
    pub fn inverse(&self) -> Self {
        let norm = GaussianRational::from(Gaussian::real(self.a1.norm()));
        BoundaryPoint {
            a1: -&self.a1,
            a2: &norm - &self.a2,
        }
    }

    /// `k`-fold composition by binary powering; negative `k` powers the inverse.
    pub fn power(&self, k: &T) -> Self {
        let mut base = if k.is_negative() {
            self.inverse()
        } else {
            self.clone()
        };
        let two = T::from(2);
        let mut e = k.abs();
        let mut acc = Self::identity();
        while !e.is_zero() {
            if e.is_odd() {
                acc = acc.compose(&base);
            }
            e = e / &two;
            if !e.is_zero() {
                base = base.compose(&base);
            }
        }
        acc
    }

    pub(crate) fn check(&self) -> Result<()> {
        if self.on_boundary() {
            Ok(())
        } else {
            Err(Error::NotOnBoundary(self.to_string()))
        }
    }
}

/// Checked composition, for points that did not come through a constructor.
pub fn h_compose<T: Scalar>(a: &BoundaryPoint<T>, b: &BoundaryPoint<T>) -> Result<BoundaryPoint<T>> {
    a.check()?;
    b.check()?;
    Ok(a.compose(b))
}

pub fn h_inverse<T: Scalar>(a: &BoundaryPoint<T>) -> Result<BoundaryPoint<T>> {
    a.check()?;
    Ok(a.inverse())
}

pub fn h_power<T: Scalar>(a: &BoundaryPoint<T>, k: &T) -> BoundaryPoint<T> {
    a.power(k)
}

impl<T: Scalar> fmt::Display for BoundaryPoint<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.a2.to_gaussian() {
            Some(a2) => write!(f, "({}, {})", self.a1, a2),
            None => write!(f, "({}, {})", self.a1, self.a2),
        }
    }
}
