use thiserror::Error;

use crate::graph::Label;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex label {label} is outside 1..={n}")]
    LabelOutOfRange { label: Label, n: usize },

    #[error("loop edge ({0}, {0}) is not allowed in a simple graph")]
    LoopEdge(Label),

    #[error("unknown vertex label {0}")]
    UnknownVertex(Label),

    #[error("invalid family size: {0}")]
    InvalidFamilySize(String),

    #[error("ordering is not a permutation of the vertex set: {0}")]
    NotAPermutation(String),

    #[error("not a perfect elimination ordering: earlier neighbours {left} and {right} of vertex {vertex} are not adjacent")]
    InvalidPeo { vertex: Label, left: Label, right: Label },

    #[error("graph is not chordal, no perfect elimination ordering exists")]
    NotChordal,

    #[error("degree bounds differ ({left} vs {right})")]
    DegreeBoundMismatch { left: u32, right: u32 },

    #[error("series has zero constant term and cannot be inverted")]
    ZeroConstantTerm,

    #[error("insufficient truncation: requested total degree {degree} but the series is only known up to {bound}")]
    InsufficientTruncation { degree: u32, bound: u32 },

    #[error("{what}: estimated {estimate} steps exceeds the guard of {limit} (set CHORN_GUARD to raise it)")]
    GuardExceeded {
        what: &'static str,
        estimate: u128,
        limit: u64,
    },

    #[error("interpolation samples are inconsistent with a polynomial of degree {degree}")]
    InconsistentSamples { degree: usize },

    #[error("need at least {need} samples, got {got}")]
    NotEnoughSamples { got: usize, need: usize },

    #[error("{0} has no closed form here")]
    UnsupportedFamily(String),

    #[error("q = {0} lies in -Z+ where the inverse-power formula does not apply")]
    NonPositiveIntegerPower(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// Size and guard rejections, as opposed to malformed input.
    pub fn is_resource_limit(&self) -> bool {
        matches!(
            self,
            Error::GuardExceeded { .. } | Error::InsufficientTruncation { .. } | Error::NotEnoughSamples { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
