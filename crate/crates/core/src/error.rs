use thiserror::Error;

/// Errors produced anywhere in the crate.
///
/// Coordinates carried by variants are 1-based, matching the external
/// convention used by every file format and report.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("malformed Pauli string {0:?}")]
    MalformedPauli(String),
    #[error("qubit count mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("coordinate {0} out of range for {1} qubits")]
    InvalidCoordinate(usize, usize),
    #[error("unknown Clifford label {0:?}")]
    UnknownClifford(String),

    #[error("generators {0} and {1} do not commute")]
    NonCommuting(usize, usize),
    #[error("generator {0} is not Hermitian")]
    NonHermitian(usize),
    #[error("generator {0} is dependent on the preceding generators")]
    Dependent(usize),

    #[error("enumeration cap exceeded: {what} needs 2^{needed_bits}, cap is 2^{cap_bits}")]
    CapExceeded {
        what: &'static str,
        needed_bits: u32,
        cap_bits: u32,
    },
    #[error("distance search cap exceeded; distance is at least {lower_bound}")]
    DistanceCapExceeded { lower_bound: usize },
    #[error("the code encodes no logical qubits")]
    NoLogicalQubits,

    #[error("support {0:?} is not a minimal support")]
    NotAMinimalSupport(Vec<usize>),
    #[error("coordinate {0} is covered by a minimal support")]
    CoordinateIsCovered(usize),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("CSS containment C2^perp <= C1 violated")]
    ContainmentViolated,

    #[error("operators do not share a support")]
    SupportMismatch,
    #[error("coincident letters at coordinate {0}")]
    CoincidentLetters(usize),
    #[error("matrix is not unitary (deviation {0:e})")]
    NotUnitary(f64),
    #[error("no seed state has nonzero projection onto the code")]
    ZeroProjection,
    #[error("gate is not of the kind this check accepts: {0}")]
    UnsupportedGate(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
