use crate::perm::CheckReport;
use crate::ungraded::Variant;

/// Errors for construction entry points. Dimension mismatches between
/// already-constructed values are contract violations and panic instead.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("k must be at least 1 (got {0})")]
    InvalidK(usize),

    #[error("k = {k} exceeds the configured cap {cap}")]
    CapExceeded { k: usize, cap: usize },

    #[error("seed construction is defined for k = 1..8 (got {0})")]
    SeedOutOfRange(usize),

    #[error("variant {variant} is only defined for k = 3 (mod 4), got k = {k}")]
    VariantNotApplicable { k: usize, variant: Variant },

    #[error("operation requires k = 3 (mod 4), got k = {0}")]
    WrongResidue(usize),

    #[error("{0}")]
    FailedCheck(CheckReport),

    #[error("no commutator witness for center generator {a}")]
    NoCommutatorWitness { a: usize },

    #[error("invalid record: {0}")]
    InvalidRecord(String),

    #[error("invalid dyadic literal {input:?}: {reason}")]
    BadDyadic { input: String, reason: &'static str },
}

pub type Result<T> = std::result::Result<T, Error>;
