//! Error type shared by all modules of the crate.

use thiserror::Error;

/// Errors surfaced by the library.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    /// Two scalars from different cyclotomic fields were combined.
    #[error("conductor mismatch: {0} vs {1}")]
    ConductorMismatch(u64, u64),

    /// Inversion of the zero scalar.
    #[error("division by zero in cyclotomic field")]
    DivisionByZero,

    /// `embed_complex` called with a root index not coprime to the conductor.
    #[error("root index {index} is not coprime to conductor {conductor}")]
    NonCoprimeRoot { index: i64, conductor: u64 },

    /// Parameters violate `m = a*N - b*K > 0` or `K, N >= 1`.
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    /// A weight is not weakly decreasing or leaves the fundamental alcove.
    #[error("invalid weight: {0}")]
    InvalidWeight(String),

    /// The lattice path of a weight is not below its `(a, b)`-shift, so the
    /// fundamental domain is undefined.
    #[error(
        "shift-order violation: lattice path of {lambda:?} is not dominated by its (a,b)-shift"
    )]
    ShiftOrder { lambda: Vec<i64> },

    /// A candidate filling is not a valid doubly periodic tableau encoding.
    #[error("invalid filling: {0}")]
    InvalidFilling(String),

    /// An affine permutation window has repeated residues.
    #[error("invalid affine permutation window: {0}")]
    InvalidWindow(String),

    /// A generator word is not reduced (length exceeds inversion count).
    #[error("word of length {length} is not reduced: inversion count is {inversions}")]
    UnreducedWord { length: usize, inversions: usize },

    /// A content function fails the validation conditions.
    #[error("invalid content function: {0}")]
    InvalidContent(String),

    /// A gcd hypothesis of a counting theorem fails.
    #[error("gcd violation: {0}")]
    GcdViolation(String),

    /// Parameters outside the regime of the hook-length count.
    #[error("regime violation: {0} (need a <= K and b >= N-1)")]
    RegimeViolation(String),

    /// Two routes that must agree disagreed. This indicates a bug and is
    /// surfaced loudly rather than papered over.
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
