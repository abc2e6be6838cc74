use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    #[error("not nilpotent: {0}")]
    NotNilpotent(String),

    #[error("matrices do not commute: {0}")]
    NotCommuting(String),

    #[error("vector is not cyclic: orbit spans {span} of {dim} dimensions")]
    NotCyclic { span: usize, dim: usize },

    #[error("representation is not effective: generator images are linearly dependent")]
    NotEffective,

    #[error("quotient is not finite-dimensional up to truncation degree {cap}")]
    NotFinite { cap: u32 },

    #[error("quotient is not local: {0}")]
    NotLocal(String),

    #[error("dim m^2 = {dim}, expected 1")]
    NotDimOneSquare { dim: usize },

    #[error("empty stratum: c = {c} but dim m = {dim_m}")]
    EmptyStratum { c: usize, dim_m: usize },

    #[error("dual space bound too small: found dimension {found}, expected {expected}")]
    BoundTooSmall { found: usize, expected: usize },

    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),

    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),

    #[error("no irreducible quadric contains the orbit closure: {0}")]
    NoQuadricClosure(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("unknown built-in: {0}")]
    UnknownBuiltin(String),
}

impl Error {
    pub fn parse(line: usize, col: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            col,
            msg: msg.into(),
        }
    }

    /// Shifts a single-line parse error onto `line`, offsetting the column.
    pub fn at_line(self, line: usize, col_offset: usize) -> Self {
        match self {
            Error::Parse { col, msg, .. } => Error::Parse {
                line,
                col: col + col_offset,
                msg,
            },
            other => other,
        }
    }
}
