use thiserror::Error;

use crate::partitions::{Box, Partition};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("box ({}, {}) lies outside the diagram {}", .cell.r, .cell.s, .shape)]
    BoxOutsideDiagram { shape: Partition, cell: Box },
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("size {n} exceeds the supported bound {bound}")]
    SizeOverBound { n: usize, bound: usize },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("prime {p} must exceed n = {n}")]
    PrimeTooSmall { p: u64, n: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("pole at {0}")]
    Pole(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
