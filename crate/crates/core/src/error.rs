use thiserror::Error;

use crate::coeff::ArithError;
use crate::poly::PolyError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("quotient is not Artinian (Krull dimension {0})")]
    NotArtinian(i32),
    #[error("the ideal is the unit ideal; the quotient is zero")]
    ZeroAlgebra,
    #[error("polynomial `{0}` is not homogeneous")]
    NotHomogeneous(String),
    #[error("expected a form of degree 2, got degree {0}")]
    NotDegreeTwo(u32),
    #[error("invalid complete intersection type: {0}")]
    InvalidType(String),
    #[error("entry ({row}, {col}) has degree {found}, expected {expected}")]
    DegreeMismatch {
        row: usize,
        col: usize,
        expected: i32,
        found: i32,
    },
    #[error("presentation does not define a finite length module (minor ideal codimension {0})")]
    NotFiniteLength(i32),
    #[error("presentation shape: {0}")]
    Shape(String),
    #[error("degree index {0} is outside the range {1}..={2}")]
    DegreeOutOfRange(i32, i32, i32),
    #[error("middle mode is not justified: {0}")]
    MiddleModeUnjustified(String),
    #[error("characteristic {p} must exceed the degree {e}")]
    CharacteristicTooSmall { p: u64, e: u32 },
    #[error("expected {expected} variables, found {found}")]
    WrongArity { expected: usize, found: usize },
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
