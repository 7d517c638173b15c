use alloc::string::String;

use crate::ribbon::{DecompositionDefect, TableauDefect};

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },
    #[error("permutation is not in BSP for this word")]
    NotBspMember,
    #[error("unknown strip id {0}")]
    UnknownStrip(usize),
    #[error("invalid decomposition: {0}")]
    Decomposition(DecompositionDefect),
    #[error("invalid tableau: {0}")]
    Tableau(TableauDefect),
    #[error("budget exceeded: {what} needs {requested}, limit is {limit}")]
    Budget {
        what: &'static str,
        requested: usize,
        limit: usize,
    },
    #[error("outside supported range: {0}")]
    UnsupportedRange(String),
    #[error("expected an integer, got {0}")]
    NonIntegral(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal consistency error: {0}")]
    Internal(String),
}
