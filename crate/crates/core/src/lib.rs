//! Exact arithmetic for the Picard modular group SU(2,1; Z[i]).
//!
//! Elements are 3×3 Gaussian-integer matrices preserving the Hermitian form
//! `C` (antidiagonal `-1`, centre `1`) with determinant 1. The group is
//! generated by two Heisenberg translations `T1 = N(0,i)`, `T2 = N(1+i,1)`,
//! the rotation `R = diag(i,-1,i)` and the involution `J`; [`decompose`]
//! writes any element as a word in them.
//!
//! All types are generic over an exact integer carrier (see [`Scalar`]); the
//! aliases below fix it to [`BigInt`].

pub mod arith;
pub mod ball;
pub mod decompose;
pub mod error;
pub mod group;
pub mod heisenberg;
pub mod json;
pub mod scalar;
pub mod word;

pub use num_bigint::BigInt;

pub use arith::{nearest_integer, Gaussian, GaussianRational};
pub use ball::{default_generators, Ball};
pub use decompose::{decompose, reduction_step, stabilizer_word, Decomposition, ReductionStep, ReductionTrace};
pub use error::{Error, Result, Violation};
pub use group::{rotation_power, translation_matrix, verify_membership, Generator, GroupElement, Mat3, StabilizerParams};
pub use heisenberg::{h_compose, h_inverse, h_power, BoundaryPoint};
pub use json::{matrix_from_json, matrix_to_json, MatrixJson};
pub use scalar::Scalar;
pub use word::{Token, Word};

pub type GaussianInteger = Gaussian<BigInt>;
pub type Rational = num_rational::Ratio<BigInt>;
pub type ComplexRational = GaussianRational<BigInt>;
pub type HeisenbergParam = BoundaryPoint<BigInt>;
pub type GroupMatrix = GroupElement<BigInt>;
pub type GeneratorToken = Token<BigInt>;
pub type GeneratorWord = Word<BigInt>;
