use thiserror::Error;

/// Errors raised by the kernel.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GarsideError {
    #[error("{family} requires rank at least {min}, got {got}")]
    InvalidRank {
        family: &'static str,
        min: usize,
        got: usize,
    },
    #[error("{family} supports rank at most {max}, got {got}")]
    RankTooLarge {
        family: &'static str,
        max: usize,
        got: usize,
    },
    #[error("atom index {index} out of range 1..={atom_count}")]
    AtomOutOfRange { index: i64, atom_count: usize },
    #[error("operands belong to different structures ({left} vs {right})")]
    StructureMismatch { left: String, right: String },
    #[error("structure has {count} simple elements, above the enumeration cap {cap}")]
    SimpleCapExceeded { count: u128, cap: u64 },
    #[error("iteration guard exceeded in {0}")]
    IterationGuard(&'static str),
    #[error("element is not in its ultra summit set")]
    NotInUltraSummitSet,
    #[error("conjugation check failed: {0}")]
    ConjugationMismatch(&'static str),
    #[error("operation needs canonical length greater than {min}, got {got}")]
    LengthTooShort { min: usize, got: usize },
    #[error("chain did not stabilize within the expected bound")]
    ChainNotStable,
    #[error("element is a power of Delta")]
    DeltaPower,
    #[error("cannot parse `{token}`: {reason}")]
    Parse { token: String, reason: String },
}

pub type Result<T, E = GarsideError> = std::result::Result<T, E>;
