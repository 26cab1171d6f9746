use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A parameter lies outside the range its model requires.
    #[error("{name} = {value} is out of range: {constraint}")]
    Range {
        name: &'static str,
        value: f64,
        constraint: &'static str,
    },

    #[error(
        "invalid bias parameters: epsilon = {epsilon}, chi = {chi} (need epsilon, chi >= 0 and epsilon + chi < 1)"
    )]
    InvalidBias { epsilon: f64, chi: f64 },

    /// Conditioning on an event the prior gives (numerically) no mass.
    #[error("degenerate prior: P({event}) = {probability:e} is below {threshold:e}")]
    DegenerateCondition {
        event: String,
        probability: f64,
        threshold: f64,
    },

    #[error("operation requires a full Beta prior; explicit statistics carry no density")]
    DistributionRequired,

    #[error("special function evaluation failed: {0}")]
    SpecialFunction(String),
}

impl Error {
    pub(crate) fn range(name: &'static str, value: f64, constraint: &'static str) -> Self {
        Error::Range {
            name,
            value,
            constraint,
        }
    }

    /// True for errors caused by a prior too concentrated to condition on.
    pub fn is_degenerate(&self) -> bool {
        matches!(self, Error::DegenerateCondition { .. })
    }
}
