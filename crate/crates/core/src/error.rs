use thiserror::Error;

/// Why a 3×3 Gaussian-integer matrix is not a member of SU(2,1; Z[i]).
///
/// Indices are 1-based `(row, col)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum Violation {
    #[error("form-violation: entry ({row},{col}) of G*CG differs from C")]
    Form { row: usize, col: usize },
    #[error("determinant-violation: det G != 1")]
    Determinant,
}

impl Violation {
    /// Short machine-readable class name.
    pub fn class(&self) -> &'static str {
        match self {
            Violation::Form { .. } => "form-violation",
            Violation::Determinant => "determinant-violation",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("boundary condition Re(a2) = |a1|^2/2 fails for {0}")]
    NotOnBoundary(String),
    #[error("translation {0} is not in the Picard group")]
    NotPicard(String),
    #[error(transparent)]
    NotMember(#[from] Violation),
    #[error("parity violation: |gamma|^2 = {0} is odd")]
    ParityViolation(String),
    #[error("precondition violation: g13 = 0")]
    StabilizerInput,
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
    #[error("cannot parse word token `{token}`: {reason}")]
    WordParse { token: String, reason: &'static str },
    #[error("matrix JSON: {0}")]
    Json(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
