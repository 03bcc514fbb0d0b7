use alloc::string::String;
use core::fmt;

use crate::displacement::Region;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// A row or a column of a matrix, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Line {
    Row(usize),
    Col(usize),
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Line::Row(i) => write!(f, "row {i}"),
            Line::Col(j) => write!(f, "column {j}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The input grid is empty or not square. `row` is the first offending row.
    NotSquare {
        rows: usize,
        row: usize,
        len: usize,
    },
    BadEntry {
        row: usize,
        col: usize,
        value: i64,
    },
    AlternationViolation {
        line: Line,
        detail: &'static str,
    },
    SumViolation {
        line: Line,
        sum: i64,
    },
    /// An operation defined only on matrices with exactly one `-1`.
    NotOneMinus {
        count: usize,
    },
    /// A cell statistic was requested on a negative matrix; reflect it first.
    NegativeClass,
    PreconditionFailed {
        reason: &'static str,
        region: Option<Region>,
    },
    InternalInvariantViolation(&'static str),
    InvalidTuple {
        condition: u8,
        detail: &'static str,
    },
    InvalidPair(&'static str),
    InvalidTable {
        condition: u8,
        detail: &'static str,
    },
    NotOneNStep {
        count: usize,
    },
    MalformedConfiguration(String),
    CapExceeded {
        n: usize,
        cap: usize,
    },
    DimensionMismatch {
        expected: usize,
        found: usize,
    },
}

impl Error {
    /// Stable variant name, used in CLI diagnostics.
    pub fn name(&self) -> &'static str {
        match self {
            Error::NotSquare { .. } => "NotSquare",
            Error::BadEntry { .. } => "BadEntry",
            Error::AlternationViolation { .. } => "AlternationViolation",
            Error::SumViolation { .. } => "SumViolation",
            Error::NotOneMinus { .. } => "NotOneMinus",
            Error::NegativeClass => "NegativeClass",
            Error::PreconditionFailed { .. } => "PreconditionFailed",
            Error::InternalInvariantViolation(_) => "InternalInvariantViolation",
            Error::InvalidTuple { .. } => "InvalidTuple",
            Error::InvalidPair(_) => "InvalidPair",
            Error::InvalidTable { .. } => "InvalidTable",
            Error::NotOneNStep { .. } => "NotOneNStep",
            Error::MalformedConfiguration(_) => "MalformedConfiguration",
            Error::CapExceeded { .. } => "CapExceeded",
            Error::DimensionMismatch { .. } => "DimensionMismatch",
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: ", self.name())?;
        match self {
            Error::NotSquare { rows, row, len } => {
                if *rows == 0 {
                    write!(f, "empty grid")
                } else {
                    write!(f, "row {row} has {len} entries, expected {rows}")
                }
            }
            Error::BadEntry { row, col, value } => {
                write!(f, "entry ({row},{col}) = {value} is not in {{-1,0,1}}")
            }
            Error::AlternationViolation { line, detail } => write!(f, "{line} {detail}"),
            Error::SumViolation { line, sum } => write!(f, "{line} sums to {sum}, expected 1"),
            Error::NotOneMinus { count } => {
                write!(f, "matrix has {count} entries equal to -1, expected 1")
            }
            Error::NegativeClass => write!(f, "matrix is negative; reflect it first"),
            Error::PreconditionFailed { reason, region } => match region {
                Some(r) => write!(f, "{reason} in {r}"),
                None => write!(f, "{reason}"),
            },
            Error::InternalInvariantViolation(what) => write!(f, "{what}"),
            Error::InvalidTuple { condition, detail } => {
                write!(f, "condition {condition}: {detail}")
            }
            Error::InvalidPair(detail) => write!(f, "{detail}"),
            Error::InvalidTable { condition, detail } => {
                write!(f, "condition {condition}: {detail}")
            }
            Error::NotOneNStep { count } => {
                write!(f, "configuration has {count} N-steps, expected 1")
            }
            Error::MalformedConfiguration(detail) => write!(f, "{detail}"),
            Error::CapExceeded { n, cap } => write!(f, "order {n} exceeds enumeration cap {cap}"),
            Error::DimensionMismatch { expected, found } => {
                write!(f, "expected order {expected}, found {found}")
            }
        }
    }
}

impl core::error::Error for Error {}
