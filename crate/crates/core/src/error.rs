use thiserror::Error;

/// Errors reported by every fallible operation in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Argument tuples, tables or maps of the wrong size.
    #[error("input shape: {0}")]
    Shape(String),
    /// Text that could not be parsed (truth tables, class expressions, labels).
    #[error("parse error: {0}")]
    Parse(String),
    /// A computation would exceed a configured arity or size limit.
    #[error("resource limit: {0}")]
    Resource(String),
    /// An operation was called outside its documented preconditions.
    #[error("contract violation: {0}")]
    Contract(String),
    /// A clone, class or suite name that is not in the registry.
    #[error("unknown name `{name}`; valid names: {valid}")]
    UnknownName { name: String, valid: String },
    /// The requested source/target pair has no known classification.
    #[error("pair ({source_clone}, {target}) is not covered; nearest covered pair: {nearest}")]
    NotCovered {
        source_clone: String,
        target: String,
        nearest: String,
    },
    /// Stability search found no unique maximal clone at the given cap.
    #[error("ambiguous maximum: {0}")]
    Ambiguous(String),
}

pub type Result<T> = std::result::Result<T, Error>;
