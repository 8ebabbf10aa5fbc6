use std::fmt;

use thiserror::Error;

use crate::signature::Signature;

pub type Result<T> = std::result::Result<T, Error>;

/// Which enumerated stream disagreed with its closed-form count.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckedField {
    Sigma,
    Trihexes,
    Delta,
    Mu,
    Nu,
    Gamma,
    MirrorSymmetricReps,
    DoublySymmetricReps,
    CoincidingAreReps,
    VertexCount,
}

impl fmt::Display for CheckedField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            CheckedField::Sigma => "sigma",
            CheckedField::Trihexes => "trihexes",
            CheckedField::Delta => "delta",
            CheckedField::Mu => "mu",
            CheckedField::Nu => "nu",
            CheckedField::Gamma => "gamma",
            CheckedField::MirrorSymmetricReps => "mirror_symmetric_reps",
            CheckedField::DoublySymmetricReps => "doubly_symmetric_reps",
            CheckedField::CoincidingAreReps => "coinciding_subset_of_reps",
            CheckedField::VertexCount => "vertex_count",
        };
        f.write_str(name)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("expected a positive integer, got 0")]
    ZeroModulus,

    #[error("vertex count {0} is not a trihex vertex count (must be a positive multiple of 4)")]
    InvalidVertexCount(u64),

    #[error("invalid signature ({s},{b},{f}): offset must satisfy f <= s")]
    InvalidSignature { s: u64, b: u64, f: u64 },

    #[error("malformed signature text {0:?}")]
    MalformedSignature(String),

    #[error("invalid lifting input: {0}")]
    InvalidLift(String),

    #[error("no p >= 1 with p*{a} = {target} (mod {modulus})")]
    NoSolution { a: u64, target: u64, modulus: u64 },

    #[error("malformed planar_code input: {0}")]
    MalformedPlanarCode(String),

    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),

    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),

    #[error("verification failed at V={v}: {field} expected {expected}, got {actual}")]
    VerificationFailure {
        v: u64,
        field: CheckedField,
        expected: u64,
        actual: u64,
    },
}

impl Error {
    pub(crate) fn inconsistent_at(sig: Signature, what: impl fmt::Display) -> Self {
        log::error!("inconsistency for signature {sig}: {what}");
        Error::InternalInconsistency(format!("{what} (signature {sig})"))
    }
}
