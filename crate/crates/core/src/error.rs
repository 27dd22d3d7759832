use thiserror::Error;

/// Errors raised by the workbench.
///
/// Variants split into two families: argument problems (the caller asked
/// for something ill-formed) and internal invariant violations (a
/// theorem-backed identity failed, which means the code is wrong).
/// [`Error::is_internal`] tells them apart.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("modulus {0} is out of the supported range (2 <= p < 2^31)")]
    ModulusOutOfRange(u64),
    #[error("operands live in different rings: {0}")]
    RingMismatch(String),
    #[error("invalid partition {0:?}: parts must be positive and weakly decreasing")]
    InvalidPartition(Vec<u32>),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("degree {degree} is out of range (limit {limit})")]
    DegreeOutOfRange { degree: u32, limit: u32 },
    #[error("no value satisfies the rank inequality below {0}")]
    Unsatisfiable(String),
    #[error("p = {0} is not congruent to 1 mod 4, so -1 has no square root")]
    NoSquareRootOfMinusOne(u64),
    #[error("enumeration of {points} points exceeds the cap of {cap}")]
    EnumerationCap { points: u64, cap: u64 },
    #[error("step limit {0} exhausted before the orbit closed")]
    StepLimit(u64),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
    #[error("observed Hilbert function {observed:?} is lexicographically smaller than the generic bound {expected:?}")]
    LexMinimalityBreach { observed: Vec<u64>, expected: Vec<u64> },
    #[error("apolarity mismatch: vanishing side {vanishing}, power-ideal side {power_ideal}")]
    ApolarityMismatch { vanishing: u64, power_ideal: u64 },
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    /// True when the error signals a broken theorem-backed identity rather
    /// than a bad request.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            Error::LexMinimalityBreach { .. }
                | Error::ApolarityMismatch { .. }
                | Error::Invariant(_)
                | Error::Overflow(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
