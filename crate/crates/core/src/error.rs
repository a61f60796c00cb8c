use thiserror::Error;

/// Failures reported by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable count mismatch: {left} vs {right}")]
    VarCountMismatch { left: usize, right: usize },

    #[error("the zero polynomial has no socle degree")]
    ZeroPolynomial,

    #[error("polynomial is not homogeneous")]
    NotHomogeneous,

    #[error("catalecticant index {index} out of range for socle degree {degree}")]
    CatalecticantIndex { index: usize, degree: usize },

    #[error("the zero linear form cannot be used as a multiplication direction")]
    ZeroLinearForm,

    #[error("diagonal index {index} out of range for socle degree {degree}")]
    DiagonalIndex { index: usize, degree: usize },

    #[error("matrix is not square or is empty ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("not a rank matrix: Jordan degree type entry ({row},{col}) is {value}")]
    NegativeJdtEntry { row: usize, col: usize, value: i64 },

    #[error("inconsistent dimension sequence: second difference at {index} is {value}")]
    NegativeMultiplicity { index: usize, value: i64 },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("partition sum {partition} differs from Hilbert function sum {hilbert}")]
    SumMismatch { partition: usize, hilbert: usize },

    #[error("dimension {dim} is smaller than socle degree {socle} + 1")]
    DimensionTooSmall { dim: usize, socle: usize },

    #[error("no Gorenstein Hilbert function of codimension at most two has dimension {dim} and socle degree {socle}")]
    NotCodimTwo { dim: usize, socle: usize },

    #[error("{n} parts of maximal size {size}: the top algebra has a constant dual generator and dimension at most 1")]
    TopMultiplicity { n: usize, size: usize },

    #[error("part {part} exceeds socle degree {degree} + 1")]
    PartTooLarge { part: usize, degree: usize },

    #[error("dimension recursion gives a negative value at index {index}")]
    NegativeDimension { index: usize },

    #[error("diagonal {index}: {source}")]
    UnrealizableDiagonal {
        index: usize,
        #[source]
        source: Box<Error>,
    },

    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// A syntax or binding error in polynomial input, with the byte offset where it was detected.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{kind} at position {pos}")]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub pos: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("empty input")]
    Empty,
    #[error("unknown identifier `{0}`")]
    UnknownIdentifier(String),
    #[error("exponent must be a non-negative integer")]
    BadExponent,
    #[error("unexpected `{0}`")]
    Unexpected(String),
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("expression is not linear")]
    NotLinear,
    #[error("linear form is zero")]
    ZeroForm,
    #[error("invalid variable list: {0}")]
    BadVarTable(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
