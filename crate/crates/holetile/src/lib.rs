//! Exact enumeration of lozenge tilings of hexagons with two opposing
//! side-2 triangular holes, cross-checked four ways: a transfer-matrix
//! oracle, Pfaffians/determinants of lattice-path matrices, closed-form LU
//! factorizations and closed-form sums. Also evaluates the hole-hole
//! correlation functions and their large-distance asymptotics.

pub mod closed_forms;
pub mod exactnum;
pub mod hyperasym;
pub mod oracle;
pub mod path_matrices;
pub mod regions;
pub mod skewlin;

pub use exactnum::{ExactMatrix, Int, Rat, SkewMatrix};
pub use regions::{Family, RegionSpec, ValidatedRegion};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("ParityViolation: {0}")]
    ParityViolation(String),
    #[error("HoleOutOfRange: {0}")]
    HoleOutOfRange(String),
    #[error("InvalidParams: {0}")]
    InvalidParams(String),
    #[error("DomainError: {0}")]
    DomainError(String),
    #[error("StructureViolation: {0}")]
    StructureViolation(String),
    #[error("InternalMismatch: {0}")]
    InternalMismatch(String),
    #[error("NotSquare: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("NotSkew: entry ({0},{1}) breaks skew symmetry")]
    NotSkew(usize, usize),
    #[error("OddSize: {0}")]
    OddSize(usize),
    #[error("TooLarge: {0}")]
    TooLarge(String),
    #[error("FrontierTooWide: scan window of {0} cells exceeds 63")]
    FrontierTooWide(usize),
    #[error("NonTerminating: no numerator parameter is a non-positive integer")]
    NonTerminating,
    #[error("DenominatorPole: denominator parameter {0} hits a pole before termination")]
    DenominatorPole(String),
    #[error("OutOfRadius: |z| = {0} is not below 1")]
    OutOfRadius(f64),
    #[error("KTooSmall: k = {0}, the limit forms need k >= 2")]
    KTooSmall(u32),
}

pub type Result<T> = std::result::Result<T, Error>;
