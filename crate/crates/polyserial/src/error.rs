//! Error type shared across the crate.
//!
//! Every variant names the precondition it reports, so callers (and the CLI
//! exit-code mapping) can distinguish configuration mistakes from genuine
//! mathematical obstructions.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Base characteristic of a chain ring must be prime.
    #[error("not prime: {0} cannot be the base characteristic of a chain ring")]
    NotPrime(u64),

    /// Chain-ring modulus parameters are out of range or reducible.
    #[error("bad modulus: {0}")]
    BadModulus(String),

    /// Inversion was requested for a non-unit.
    #[error("non-unit: {0}")]
    NonUnit(String),

    /// Polynomial division needs a divisor whose leading coefficient is a unit.
    #[error("non-unit leading coefficient: {0}")]
    NonUnitLeading(String),

    /// Polynomial division by the zero polynomial.
    #[error("division by zero polynomial")]
    DivByZero,

    /// A field-only operation was invoked over a ring with nilpotency e > 1.
    #[error("not a field: {0}")]
    NotAField(String),

    /// A modulus must be square-free over the residue field but is not.
    #[error("not square-free: {0}")]
    NotSquareFree(String),

    /// A modulus must be monic but is not.
    #[error("not monic: {0}")]
    NotMonic(String),

    /// An enumeration would exceed the configured budget.
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),

    /// Annihilator machinery requires the constant term of the modulus to be a unit.
    #[error("non-unit constant term: {0}")]
    NonUnitConstant(String),

    /// A claimed divisor does not divide the modulus.
    #[error("not a divisor: {0}")]
    NotDivisor(String),

    /// CSS construction requires the dual of one code to lie inside the other.
    #[error("not dual-containing: {0}")]
    NotDualContaining(String),

    /// CSS construction requires both codes to be free modules.
    #[error("not free: {0}")]
    NonFree(String),

    /// Code counting requires a basic irreducible modulus with scalar coefficients.
    #[error("not basic irreducible: {0}")]
    NotBasicIrreducible(String),

    /// A Gray map was applied to a ring it does not fit.
    #[error("map mismatch: {0}")]
    MapMismatch(String),

    /// The zero code has no nonzero codeword, so it has no minimum distance.
    #[error("zero code: {0}")]
    ZeroCode(String),

    /// Malformed configuration or arguments.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// An internal invariant failed; this is a bug, not a user error.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    /// Process exit code for the CLI: 2 validation, 3 budget, 4 math precondition.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidInput(_) | Error::NotPrime(_) | Error::BadModulus(_) => 2,
            Error::BudgetExceeded(_) => 3,
            Error::Internal(_) => 1,
            _ => 4,
        }
    }
}
