use thiserror::Error;

/// Errors raised while building or composing cells.
///
/// Law *failures* are not errors: they are recorded in a
/// [`CheckReport`](crate::report::CheckReport). These variants cover inputs
/// that cannot be evaluated at all.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatError {
    #[error("malformed presentation: {0}")]
    Malformed(String),
    #[error("not composable: {0}")]
    NotComposable(String),
    #[error("bound overflow: {0}")]
    BoundOverflow(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("enumeration limit exceeded: {0}")]
    LimitExceeded(String),
    #[error("untileable pasting diagram: {0}")]
    Untileable(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, CatError>;

pub(crate) fn malformed<T>(msg: impl Into<String>) -> Result<T> {
    Err(CatError::Malformed(msg.into()))
}

pub(crate) fn not_composable<T>(msg: impl Into<String>) -> Result<T> {
    Err(CatError::NotComposable(msg.into()))
}
