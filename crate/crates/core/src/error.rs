use thiserror::Error;

use crate::plane::PlanePoint;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator list is empty")]
    Empty,
    #[error("generator {0} is not a positive integer")]
    NonPositive(i64),
    #[error("generator {0} appears more than once")]
    Duplicate(i64),
    #[error("generators have gcd {0}, expected 1")]
    GcdNotOne(i64),
    #[error("generator {generator} (index {index}) is a combination of the other generators")]
    NotMinimal { index: usize, generator: i64 },
    #[error("{0} is not an element of the semigroup")]
    NotMember(i64),
    #[error("no witness found up to search bound {0}")]
    SearchExhausted(i64),
    #[error("projective closure is not arithmetically Cohen-Macaulay: {0} lies in (Γ1×Γ2)∩L but not in the plane semigroup")]
    NotCohenMacaulay(PlanePoint),
    #[error("ideal point {0} is not in the plane semigroup")]
    PointOutsideSemigroup(PlanePoint),
    #[error("residue field series must start with 1, got {0}")]
    BadResidueField(u64),
    #[error("parameter out of range: {0}")]
    ParamOutOfRange(String),
    #[error("exponent vectors must match the weight count {weights}, got {left} and {right}")]
    DimensionMismatch {
        weights: usize,
        left: usize,
        right: usize,
    },
    #[error("invalid series: {0}")]
    InvalidSeries(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
}

impl Error {
    /// Stable machine-readable name, used in JSON reports and the C ABI.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Empty => "Empty",
            Error::NonPositive(_) => "NonPositive",
            Error::Duplicate(_) => "Duplicate",
            Error::GcdNotOne(_) => "GcdNotOne",
            Error::NotMinimal { .. } => "NotMinimal",
            Error::NotMember(_) => "NotMember",
            Error::SearchExhausted(_) => "SearchExhausted",
            Error::NotCohenMacaulay(_) => "NotCohenMacaulay",
            Error::PointOutsideSemigroup(_) => "PointOutsideSemigroup",
            Error::BadResidueField(_) => "BadResidueField",
            Error::ParamOutOfRange(_) => "ParamOutOfRange",
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::InvalidSeries(_) => "InvalidSeries",
            Error::Parse(_) => "Parse",
            Error::Overflow(_) => "Overflow",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
