use thiserror::Error;

/// Errors raised by the geometry, probe and classification layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TilingError {
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
    #[error("unsupported dimension {0}; only 2 and 3 are handled")]
    UnsupportedDimension(usize),
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("polytope is not centrally symmetric with centrally symmetric facets")]
    NotCentrallySymmetric,
    #[error("point {0} lies on the boundary of a translate")]
    NonGenericPoint(String),
    #[error("point {0} is not on the boundary of the designated translate")]
    PointNotOnBoundary(String),
    #[error("point {0} does not lie on a facet of the selected belt")]
    PointNotOnBelt(String),
    #[error("translate window around {0} does not cover a neighbourhood uniformly")]
    PrewindowTooSmall(String),
    #[error("polytope is not a translative tile")]
    NotATile,
    #[error("internal verification failure: {0}")]
    InternalVerificationFailure(String),
    #[error("no subfacet with index {0}")]
    NoSuchSubfacet(usize),
    #[error("malformed input: {0}")]
    Parse(String),
}

impl TilingError {
    /// Process exit status: 1 malformed input, 2 violated precondition, 3 internal failure.
    pub fn exit_code(&self) -> i32 {
        use TilingError::*;
        match self {
            DegenerateInput(_) | UnsupportedDimension(_) | DimensionMismatch { .. } | NoSuchSubfacet(_) | Parse(_) => 1,
            NotCentrallySymmetric
            | NonGenericPoint(_)
            | PointNotOnBoundary(_)
            | PointNotOnBelt(_)
            | PrewindowTooSmall(_)
            | NotATile => 2,
            InternalVerificationFailure(_) => 3,
        }
    }

    /// Variant name, used as a stable error tag in reports.
    pub fn kind(&self) -> &'static str {
        use TilingError::*;
        match self {
            DegenerateInput(_) => "DegenerateInput",
            UnsupportedDimension(_) => "UnsupportedDimension",
            DimensionMismatch { .. } => "DimensionMismatch",
            NotCentrallySymmetric => "NotCentrallySymmetric",
            NonGenericPoint(_) => "NonGenericPoint",
            PointNotOnBoundary(_) => "PointNotOnBoundary",
            PointNotOnBelt(_) => "PointNotOnBelt",
            PrewindowTooSmall(_) => "PrewindowTooSmall",
            NotATile => "NotATile",
            InternalVerificationFailure(_) => "InternalVerificationFailure",
            NoSuchSubfacet(_) => "NoSuchSubfacet",
            Parse(_) => "Parse",
        }
    }
}

pub type Result<T> = std::result::Result<T, TilingError>;
