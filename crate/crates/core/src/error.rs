use thiserror::Error;

/// Error type shared by every module in the crate.
///
/// Every failure a caller can act on gets its own variant; the CLI and the
/// HTTP service map these onto machine-readable error objects.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// The closed-form local formulas are proven only when e/(p-1) is not a
    /// power of p. Callers may fall back to the oracle module for desk-scale
    /// conjectural values.
    #[error("outside proven range: p = {p}, e = {e} (e/(p-1) is a power of p)")]
    OutsideProvenRange { p: u64, e: u64 },

    /// p divides the index `[O_K : Z[theta]]` and the Dedekind criterion could
    /// not certify the factorization; supply explicit splitting data.
    #[error("inconclusive splitting at p = {p}: supply explicit splitting data for this prime")]
    InconclusiveSplitting { p: u64 },

    #[error("Galois consistency violated at p = {p}: {detail}")]
    ConsistencyViolation { p: u64, detail: String },

    #[error("Euler product is not of Galois-Dedekind type: {0}")]
    NotGdType(String),

    #[error("Dedekind-type violation at p = {p}: {clause}")]
    DedekindTypeViolation { p: u64, clause: String },

    #[error("insufficient precision in truncated local ring: increase M to at least {required_m}")]
    InsufficientPrecision { required_m: u64 },

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    #[error("not applicable: {0}")]
    NotApplicable(String),

    #[error("unknown field: {0}")]
    UnknownField(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("ramification data incomplete: {0}")]
    IncompleteRamification(String),

    #[error("malformed document: {0}")]
    Malformed(String),

    /// Two routes that a proven theorem forces to agree disagreed; an
    /// implementation bug, never a mathematical outcome.
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// The prime a machine-readable error object should carry, when one is
    /// attached to the failure.
    pub fn prime(&self) -> Option<u64> {
        match self {
            Error::OutsideProvenRange { p, .. }
            | Error::InconclusiveSplitting { p }
            | Error::ConsistencyViolation { p, .. }
            | Error::DedekindTypeViolation { p, .. } => Some(*p),
            _ => None,
        }
    }

    /// Stable machine-readable kind tag.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidArgument(_) => "invalid-argument",
            Error::OutsideProvenRange { .. } => "outside-proven-range",
            Error::InconclusiveSplitting { .. } => "inconclusive-splitting",
            Error::ConsistencyViolation { .. } => "consistency-violation",
            Error::NotGdType(_) => "not-gd-type",
            Error::DedekindTypeViolation { .. } => "dedekind-type-violation",
            Error::InsufficientPrecision { .. } => "insufficient-precision",
            Error::ResourceLimit(_) => "resource-limit",
            Error::NotApplicable(_) => "not-applicable",
            Error::UnknownField(_) => "unknown-field",
            Error::Precondition(_) => "precondition-failed",
            Error::IncompleteRamification(_) => "incomplete-ramification",
            Error::Malformed(_) => "malformed",
            Error::Internal(_) => "internal",
        }
    }
}
