use num_bigint::BigUint;
use thiserror::Error;

/// Errors produced by the toolkit.
///
/// Two classes exist. Domain errors describe invalid input and are ordinary,
/// recoverable conditions. Internal-contradiction errors guard statements
/// that are proven to hold; if one ever fires, the library has effectively
/// computed a counterexample to a proven identity (or its own arithmetic is
/// broken), so callers should treat it as a hard failure rather than bad input.
/// [`Error::is_internal_contradiction`] distinguishes the two.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A pair member was zero; both members must be positive.
    #[error("pair members must be positive")]
    ZeroOperand,

    /// The pair shares a factor, so the two-target dichotomy does not apply.
    #[error("{a} and {b} are not coprime (gcd {gcd})")]
    NotCoprime { a: BigUint, b: BigUint, gcd: BigUint },

    /// An index, exponent, or length argument fell below its minimum.
    #[error("{what} must be at least {min}, got {got}")]
    BelowMinimum {
        what: &'static str,
        min: u64,
        got: u64,
    },

    /// A range was empty or reversed.
    #[error("invalid range: from {from} to {to}")]
    InvalidRange { from: u64, to: u64 },

    /// The positive-solution pair requires an odd first member.
    #[error("a must be odd, got {a}")]
    EvenOperand { a: BigUint },

    /// Brute-force enumeration would exceed the test-scale bound of 10^8.
    #[error("enumeration refused: {what} exceeds the 10^8 test-scale bound")]
    EnumerationTooLarge { what: &'static str },

    /// Records handed to an analysis were not consecutive in n with equal exponents.
    #[error("records must be contiguous in n with identical exponents")]
    NonContiguousRecords,

    /// A recurrence step was applied to a result from a different family.
    #[error("recurrence step requires a cubed-family result")]
    WrongFamily,

    /// Exactly one of the two targets must be solvable; both or neither were.
    #[error("solution dichotomy violated for ({a}, {b}): {detail}")]
    DichotomyViolated {
        a: BigUint,
        b: BigUint,
        detail: &'static str,
    },

    /// A division that is provably exact left a remainder.
    #[error("exact division violated: {num} is not divisible by {den}")]
    InexactDivision { num: String, den: u32 },

    /// A proof-internal identity failed to hold on computed values.
    #[error("internal identity violated: {detail}")]
    IdentityViolated { detail: String },
}

impl Error {
    /// True for errors that contradict a proven statement rather than report
    /// bad input. Front ends map these to a distinct exit status.
    pub fn is_internal_contradiction(&self) -> bool {
        matches!(
            self,
            Error::DichotomyViolated { .. }
                | Error::InexactDivision { .. }
                | Error::IdentityViolated { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
