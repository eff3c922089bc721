use crate::order::OrderViolation;

/// Errors surfaced by library entry points.
///
/// `Input` covers malformed data and violated preconditions; `OracleLimit`
/// is a refusal, not a failure. The two order variants carry the witness
/// that disqualified the order.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("input error: {0}")]
    Input(String),
    #[error("oracle limit exceeded: n = {n} exceeds limit {limit}")]
    OracleLimit { n: usize, limit: usize },
    #[error("not an MPT-order: {0}")]
    NotMptOrder(OrderViolation),
    #[error("not an I-order: {0}")]
    NotIOrder(OrderViolation),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn input_err<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Input(msg.into()))
}
