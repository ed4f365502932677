use thiserror::Error;

/// Errors surfaced by the numeric and symbolic layers.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument fell outside an operation's stated domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// The configured precision cannot support the requested computation
    /// (e.g. alternating binomial sums whose cancellation exceeds D digits).
    #[error("insufficient precision: {0}")]
    Precision(String),

    /// A series or limit process failed to meet its own error bound.
    #[error("did not converge: {0}")]
    NonConvergence(String),

    /// A symbolic request exceeded the configured weight cap.
    #[error("weight cap exceeded: requested weight {requested}, cap {cap}")]
    WeightCap { requested: u32, cap: u32 },

    /// Monte Carlo sampling accepted no points within the attempt cap.
    #[error("rejection sampling accepted no points after {attempts} attempts")]
    ZeroAcceptance { attempts: u64 },

    /// A serialized polynomial could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
