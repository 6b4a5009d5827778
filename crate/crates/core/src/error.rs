use thiserror::Error;

/// Errors raised by the algebra engine.
///
/// Every variant knows which part of the engine produced it so that reports
/// can name the originating module.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime below 2^16")]
    NotPrime(u64),

    #[error("S-pair step budget of {budget} exceeded")]
    Resource { budget: usize },

    #[error("variable index {index} out of range for a ring with {nvars} variables")]
    IndexOutOfRange { index: usize, nvars: usize },

    #[error("{module}: mismatched objects: {message}")]
    Mismatch {
        module: &'static str,
        message: String,
    },

    #[error("{module}: precondition failed: {message}")]
    Precondition {
        module: &'static str,
        message: String,
    },

    #[error("map is not well defined: relation {relation} does not map to zero")]
    NotWellDefined { relation: String },

    #[error("quotient is infinite-dimensional: variable {var} has no pure-power leading term")]
    InfiniteDimensional { var: String },

    #[error("dimension {dim} exceeds the enumeration cap of {cap}")]
    TooLarge { dim: usize, cap: usize },

    #[error("algebra is not module-finite over the base: variable {var} is not integral")]
    NotModuleFinite { var: String },

    #[error("exponent overflow while raising to the power {power}")]
    ExponentOverflow { power: u64 },

    #[error("no candidate p-basis: Omega is projective of rank {rank} but no {rank} variable differentials generate it")]
    NoCandidate { rank: usize },

    #[error("parse error at {line}:{column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

impl Error {
    /// Name of the engine module the error originates from.
    pub fn module(&self) -> &'static str {
        match self {
            Error::NotPrime(_) | Error::IndexOutOfRange { .. } | Error::ExponentOverflow { .. } => {
                "polyring"
            }
            Error::Resource { .. } => "groebner",
            Error::Mismatch { module, .. } | Error::Precondition { module, .. } => module,
            Error::NotWellDefined { .. } => "algebra",
            Error::NotModuleFinite { .. } => "homology",
            Error::InfiniteDimensional { .. } | Error::TooLarge { .. } => "oracle",
            Error::NoCandidate { .. } => "pipeline",
            Error::Parse { .. } => "workbench",
        }
    }

    /// Short machine-readable kind, used in reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::NotPrime(_) => "not-prime",
            Error::Resource { .. } => "resource",
            Error::IndexOutOfRange { .. } => "index-out-of-range",
            Error::Mismatch { .. } => "mismatch",
            Error::Precondition { .. } => "precondition",
            Error::NotWellDefined { .. } => "not-well-defined",
            Error::InfiniteDimensional { .. } => "infinite-dimensional",
            Error::TooLarge { .. } => "too-large",
            Error::NotModuleFinite { .. } => "not-module-finite",
            Error::ExponentOverflow { .. } => "exponent-overflow",
            Error::NoCandidate { .. } => "no-candidate",
            Error::Parse { .. } => "parse",
        }
    }

    pub(crate) fn precondition(module: &'static str, message: impl Into<String>) -> Self {
        Error::Precondition {
            module,
            message: message.into(),
        }
    }

    pub(crate) fn mismatch(module: &'static str, message: impl Into<String>) -> Self {
        Error::Mismatch {
            module,
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
