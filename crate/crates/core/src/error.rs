use thiserror::Error;

/// Errors raised while building or manipulating blocks and elements.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NvError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("partition error: subblocks {first} and {second} overlap")]
    Partition { first: usize, second: usize },

    #[error("coverage error: measures sum to {total}, {kind} of {gap}")]
    Coverage {
        total: String,
        gap: String,
        kind: CoverageKind,
    },

    #[error("length mismatch: domain has {domain} subblocks, range has {range}")]
    LengthMismatch { domain: usize, range: usize },

    #[error("pairing is not a bijection on {0} indices")]
    NotBijective(usize),

    #[error("index {index} out of range (limit {limit})")]
    OutOfRange { index: usize, limit: usize },

    #[error("block is not admissible: subblock {0} is not contained in any domain piece")]
    NotAdmissible(String),

    #[error("power {0} of the element is not the identity")]
    InvalidOrder(u64),

    #[error("element does not fix its domain block: {0}")]
    NotInvariant(String),

    #[error("block size {size} exceeds the cap {cap}")]
    Resource { size: u128, cap: usize },

    #[error("internal consistency failure: {0}")]
    Inconsistent(String),

    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("empty period in point coordinate {0}")]
    EmptyPeriod(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoverageKind {
    Deficit,
    Excess,
}

impl std::fmt::Display for CoverageKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CoverageKind::Deficit => f.write_str("deficit"),
            CoverageKind::Excess => f.write_str("excess"),
        }
    }
}

pub type Result<T, E = NvError> = std::result::Result<T, E>;

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(NvError::DimensionMismatch { expected, found })
    }
}
