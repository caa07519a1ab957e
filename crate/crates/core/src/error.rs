//! Crate-wide error type.

/// Errors reported by the library.
///
/// `InstanceTooLarge` corresponds to the CLI's resource-limit exit code;
/// the remaining variants are usage or input errors.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("symbol {symbol} out of range for alphabet size {n}")]
    SymbolOutOfRange { symbol: u64, n: u64 },

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("instance too large: {0}")]
    InstanceTooLarge(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("block entries must be distinct, {0} repeats")]
    DuplicateBlockEntry(u64),
}

pub type Result<T> = std::result::Result<T, Error>;
