use thiserror::Error;

/// Errors produced by the core library.
///
/// Checkers never error on a *failing* axiom (that is a report verdict);
/// errors are reserved for malformed inputs and violated preconditions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("denominator must be nonzero")]
    ZeroDenominator,

    #[error("division by zero")]
    DivisionByZero,

    #[error("cannot parse rational {input:?}: {reason}")]
    BadRational { input: String, reason: &'static str },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is not square: {rows} rows, {cols} columns")]
    NotSquare { rows: usize, cols: usize },

    #[error("basis labels must be distinct and match the dimension")]
    BadBasis,

    #[error("{context} requires a {table} table")]
    MissingTable {
        context: &'static str,
        table: &'static str,
    },

    #[error("unknown suite {0:?}")]
    UnknownSuite(String),

    #[error("map is not an endomorphism: {axiom} fails first at {tuple:?}")]
    NotEndomorphism { axiom: String, tuple: Vec<usize> },

    #[error("twist map does not commute with the algebra's twisting map")]
    NonCommutingTwist,

    #[error("input algebra fails suite {suite}: {axiom} fails first at {tuple:?}")]
    InputFailsSuite {
        suite: String,
        axiom: String,
        tuple: Vec<usize>,
    },

    #[error("candidate family has {count} maps, exceeding the cap of {cap}")]
    TooManyCandidates { count: u128, cap: u128 },
}
