use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("radices list is empty")]
    EmptyRadices,
    #[error("radix {0} is too small; every radix must be at least 2")]
    RadixTooSmall(u32),
    #[error("vertex count {needed} exceeds the cap of {cap}")]
    CapExceeded { needed: u128, cap: usize },
    #[error("vertex has {got} coordinates but the radices have {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("coordinate {index} is {value}, which is not below the radix {radix}")]
    CoordOutOfRange { index: usize, value: u32, radix: u32 },
    #[error("vertex index {index} is out of range; the graph has {count} vertices")]
    IndexOutOfRange { index: usize, count: usize },
    #[error("operation needs at least {needed} coordinates but the radices have {got}")]
    TooFewCoordinates { needed: usize, got: usize },
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("unsupported scope: {0}")]
    UnsupportedScope(String),
    #[error("not a subgroup: {0}")]
    NotASubgroup(String),
    #[error("matrix rows are linearly dependent: rank {rank} over {rows} rows")]
    RankDeficient { rank: usize, rows: usize },
    #[error("the graph has twin vertices, so no identifying code exists")]
    NotTwinFree,
    #[error("no subgroup of this group is an identifying code")]
    NoGroupIdentifyingCode,
    #[error("vertex {0} is not a codeword")]
    NotACodeword(String),
    #[error("code is not identifying")]
    NotIdentifying,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),
}
