use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("truncation order must be at least 1")]
    ZeroOrder,

    #[error("truncation orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("coefficient of q^{exponent} is not known; series is truncated at order {order}")]
    BeyondPrecision { exponent: usize, order: usize },

    #[error("1/(1 - c*q^0) has no power-series expansion")]
    DivergentExpansion,

    #[error("constant term {0} is not a unit (+1 or -1)")]
    NonUnit(String),

    #[error("sigma_k(n) is undefined for n = 0")]
    Domain,

    #[error("unknown identifier `{0}`")]
    UnknownId(String),

    #[error("configuration error: {0}")]
    Config(String),
}

impl Error {
    /// True for the errors that come from truncation bookkeeping.
    pub fn is_precision(&self) -> bool {
        matches!(
            self,
            Error::ZeroOrder | Error::OrderMismatch { .. } | Error::BeyondPrecision { .. }
        )
    }
}
