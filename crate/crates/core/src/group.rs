//! Matrices of SU(2,1; Z[i]), the four generators, and the stabilizer of ∞.
//!
//! Matrices act on column vectors, so the matrix of `f ∘ g` is the product
//! `F·G` taken in the same left-to-right order.

use std::fmt;
use std::ops::{Index, Mul};

use num_rational::Ratio;

use crate::arith::Gaussian;
use crate::error::{Error, Result, Violation};
use crate::heisenberg::BoundaryPoint;
use crate::scalar::Scalar;

/// A raw 3×3 Gaussian-integer matrix, row-major, 0-based indices.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Mat3<T>(pub [[Gaussian<T>; 3]; 3]);

impl<T: Scalar> Mat3<T> {
    pub fn from_fn(mut f: impl FnMut(usize, usize) -> Gaussian<T>) -> Self {
        Mat3(std::array::from_fn(|r| std::array::from_fn(|c| f(r, c))))
    }

    pub fn from_ints(rows: [[(i32, i32); 3]; 3]) -> Self {
        Self::from_fn(|r, c| Gaussian::from_ints(rows[r][c].0, rows[r][c].1))
    }

    pub fn identity() -> Self {
        Self::from_fn(|r, c| if r == c { Gaussian::one() } else { Gaussian::zero() })
    }

    /// The Hermitian form `C` with `-1` on the antidiagonal corners and `1` in the centre.
    pub fn form() -> Self {
        Self::from_ints([
            [(0, 0), (0, 0), (-1, 0)],
            [(0, 0), (1, 0), (0, 0)],
            [(-1, 0), (0, 0), (0, 0)],
        ])
    }

    pub fn diagonal(d: [Gaussian<T>; 3]) -> Self {
        let [a, b, c] = d;
        let mut m = Self::from_fn(|_, _| Gaussian::zero());
        m.0[0][0] = a;
        m.0[1][1] = b;
        m.0[2][2] = c;
        m
    }

    pub fn rows(&self) -> &[[Gaussian<T>; 3]; 3] {
        &self.0
    }

    pub fn set(&mut self, row: usize, col: usize, value: Gaussian<T>) {
        self.0[row][col] = value;
    }

    pub fn conj_transpose(&self) -> Self {
        Self::from_fn(|r, c| self.0[c][r].conj())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Self::from_fn(|r, c| {
            (0..3).fold(Gaussian::zero(), |acc, k| acc + &self.0[r][k] * &rhs.0[k][c])
        })
    }

    /// Determinant by cofactor expansion along the first row.
    pub fn det(&self) -> Gaussian<T> {
        let m = &self.0;
        let minor = |c0: usize, c1: usize| &m[1][c0] * &m[2][c1] - &m[1][c1] * &m[2][c0];
        &m[0][0] * &minor(1, 2) - &m[0][1] * &minor(0, 2) + &m[0][2] * &minor(0, 1)
    }

    /// `G*CG`.
    pub fn form_image(&self) -> Self {
        self.conj_transpose().mul(&Self::form()).mul(self)
    }
}

impl<T> Index<(usize, usize)> for Mat3<T> {
    type Output = Gaussian<T>;
    fn index(&self, (r, c): (usize, usize)) -> &Gaussian<T> {
        &self.0[r][c]
    }
}

impl<T: Scalar> fmt::Display for Mat3<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.0.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "[{}, {}, {}]", row[0], row[1], row[2])?;
        }
        Ok(())
    }
}

/// A validated element of SU(2,1; Z[i]): `G*CG = C` and `det G = 1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GroupElement<T>(Mat3<T>);

/// The four generators.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Generator {
    /// Vertical Heisenberg translation `N(0, i)`.
    T1,
    /// Heisenberg translation `N(1+i, 1)`.
    T2,
    /// Rotation `M_i = diag(i, -1, i)`.
    R,
    /// Involution `J`, the negated antidiagonal.
    J,
}

impl Generator {
    pub const ALL: [Generator; 4] = [Generator::T1, Generator::T2, Generator::R, Generator::J];

    pub fn name(self) -> &'static str {
        match self {
            Generator::T1 => "T1",
            Generator::T2 => "T2",
            Generator::R => "R",
            Generator::J => "J",
        }
    }

    pub fn matrix<T: Scalar>(self) -> GroupElement<T> {
        let m = match self {
            Generator::T1 => Mat3::from_ints([
                [(1, 0), (0, 0), (0, 0)],
                [(0, 0), (1, 0), (0, 0)],
                [(0, 1), (0, 0), (1, 0)],
            ]),
            Generator::T2 => Mat3::from_ints([
                [(1, 0), (0, 0), (0, 0)],
                [(1, 1), (1, 0), (0, 0)],
                [(1, 0), (1, -1), (1, 0)],
            ]),
            Generator::R => Mat3::from_ints([
                [(0, 1), (0, 0), (0, 0)],
                [(0, 0), (-1, 0), (0, 0)],
                [(0, 0), (0, 0), (0, 1)],
            ]),
            Generator::J => Mat3::from_ints([
                [(0, 0), (0, 0), (-1, 0)],
                [(0, 0), (-1, 0), (0, 0)],
                [(-1, 0), (0, 0), (0, 0)],
            ]),
        };
        GroupElement(m)
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Checks `G*CG = C` entry by entry, then `det G = 1`.
pub fn verify_membership<T: Scalar>(m: Mat3<T>) -> Result<GroupElement<T>, Violation> {
    let image = m.form_image();
    let form = Mat3::<T>::form();
    for r in 0..3 {
        for c in 0..3 {
            if image.0[r][c] != form.0[r][c] {
                return Err(Violation::Form { row: r + 1, col: c + 1 });
            }
        }
    }
    if m.det() != Gaussian::one() {
        return Err(Violation::Determinant);
    }
    Ok(GroupElement(m))
}

/// The matrix of the Heisenberg translation by `a`.
///
/// Rejects points whose translation has non-integral entries.
pub fn translation_matrix<T: Scalar>(a: &BoundaryPoint<T>) -> Result<GroupElement<T>> {
    if !a.is_picard() {
        return Err(Error::NotPicard(a.to_string()));
    }
    let a2 = a.a2().to_gaussian().expect("picard points have integral a2");
    let mut m = Mat3::identity();
    m.set(1, 0, a.a1().clone());
    m.set(2, 0, a2);
    m.set(2, 1, a.a1().conj());
    Ok(GroupElement(m))
}

/// `M_i^e = diag(i^e, (-1)^e, i^e)`.
pub fn rotation_power<T: Scalar>(e: i64) -> GroupElement<T> {
    let beta = Gaussian::i_pow(e);
    GroupElement(Mat3::diagonal([beta.clone(), Gaussian::i_pow(2 * e), beta]))
}

impl<T: Scalar> GroupElement<T> {
    pub fn identity() -> Self {
        GroupElement(Mat3::identity())
    }

    pub fn matrix(&self) -> &Mat3<T> {
        &self.0
    }

    pub fn into_matrix(self) -> Mat3<T> {
        self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0 == Mat3::identity()
    }

    /// `g13`, the entry whose vanishing characterizes the stabilizer of ∞.
    pub fn g13(&self) -> &Gaussian<T> {
        &self.0 .0[0][2]
    }

    pub fn multiply(&self, rhs: &Self) -> Self {
        GroupElement(self.0.mul(&rhs.0))
    }

    /// Inverse via `G⁻¹ = C·G*·C`, which holds because `G*CG = C` and `C² = I`.
    pub fn inverse(&self) -> Self {
        let c = Mat3::form();
        GroupElement(c.mul(&self.0.conj_transpose()).mul(&c))
    }

    /// Classifies membership in the stabilizer of ∞.
    ///
    /// Returns `Ok(None)` when `g13 != 0`. When `g13 = 0` every constraint
    /// forced on a member is re-checked; a failure means an arithmetic bug
    /// upstream, since validated members always satisfy them.
    pub fn classify_stabilizer(&self) -> Result<Option<StabilizerParams<T>>> {
        let g = &self.0;
        if !g[(0, 2)].is_zero() {
            return Ok(None);
        }
        let fail = |what: &str| Err(Error::Inconsistent(format!("stabilizer element {what}:\n{g}")));
        if !g[(0, 1)].is_zero() || !g[(1, 2)].is_zero() {
            return fail("is not lower triangular");
        }
        let beta = &g[(0, 0)];
        let Some(beta_exp) = beta.unit_exponent() else {
            return fail("has g11 not a unit");
        };
        if g[(2, 2)] != *beta {
            return fail("has g33 != g11");
        }
        let beta_bar = beta.conj();
        if g[(1, 1)] != &beta_bar * &beta_bar {
            return fail("has g22 != conj(beta)^2");
        }
        let gamma = &beta_bar * &g[(1, 0)];
        let a2 = &beta_bar * &g[(2, 0)];
        if a2.re.clone() * T::from(2) != gamma.norm() {
            return fail("violates Re(conj(beta) g31) = |gamma|^2/2");
        }
        if gamma.norm().is_odd() {
            return fail("has |gamma|^2 odd");
        }
        if g[(2, 1)] != &gamma.conj() * &beta_bar * &beta_bar {
            return fail("has g32 != conj(gamma) conj(beta)^2");
        }
        Ok(Some(StabilizerParams {
            beta_exp,
            gamma,
            r: a2.im,
        }))
    }
}

impl<T: Scalar> Mul<&GroupElement<T>> for &GroupElement<T> {
    type Output = GroupElement<T>;
    fn mul(self, rhs: &GroupElement<T>) -> GroupElement<T> {
        self.multiply(rhs)
    }
}

impl<T: Scalar> Mul for GroupElement<T> {
    type Output = GroupElement<T>;
    fn mul(self, rhs: GroupElement<T>) -> GroupElement<T> {
        self.multiply(&rhs)
    }
}

impl<T: Scalar> fmt::Display for GroupElement<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Parameters of an element `N(γ, |γ|²/2 + i·r) · M_i^beta_exp` of the
/// stabilizer of ∞ in the Picard group.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct StabilizerParams<T> {
    /// `β = i^beta_exp`, in `0..4`.
    pub beta_exp: u8,
    pub gamma: Gaussian<T>,
    pub r: T,
}

impl<T: Scalar> StabilizerParams<T> {
    pub fn new(beta_exp: u8, gamma: Gaussian<T>, r: T) -> Result<Self> {
        if gamma.norm().is_odd() {
            return Err(Error::ParityViolation(gamma.norm().to_string()));
        }
        Ok(StabilizerParams {
            beta_exp: beta_exp % 4,
            gamma,
            r,
        })
    }

    pub fn translation(&self) -> BoundaryPoint<T> {
        BoundaryPoint::from_gamma(self.gamma.clone(), Ratio::from_integer(self.r.clone()))
    }

    /// Parameters of a pure Picard translation (`beta_exp = 0`).
    pub fn from_translation(p: &BoundaryPoint<T>) -> Option<Self> {
        p.is_picard().then(|| StabilizerParams {
            beta_exp: 0,
            gamma: p.a1().clone(),
            r: p.height().to_integer(),
        })
    }

    /// `translation_matrix((γ, |γ|²/2 + i·r)) · R^beta_exp`.
    pub fn rebuild(&self) -> Result<GroupElement<T>> {
        let n = translation_matrix(&self.translation())?;
        Ok(&n * &rotation_power(self.beta_exp as i64))
    }
}
