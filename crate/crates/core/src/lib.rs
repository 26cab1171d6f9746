//! Evolutionary and collaboration-failure models of authorship-order norms.
//!
//! Two populations (juniors and seniors) each choose between a
//! contribution-sensitive norm (C-norm: the larger contributor is listed
//! first) and a contribution-insensitive norm (I-norm: junior is always listed
//! first). A Bayesian community assigns credit from the observed author order,
//! possibly distorted by first-author and Matthew-effect biases.
//!
//! - [`priors`]: Beta prior over the junior's contribution share and the
//!   statistics (`w_j`, `b_j`, `b_s`, `mu_j`) derived from it.
//! - [`credit`]: community credit attribution and expected payoffs.
//! - [`dynamics`]: two-population replicator dynamics, equilibria and basins.
//! - [`collaboration`]: refusal regions and failure probabilities once a norm
//!   is established.

pub mod collaboration;
pub mod credit;
pub mod dynamics;
mod error;
pub mod priors;
pub mod quadrature;

pub use collaboration::{FailureReport, Interval, IntervalSet, Norm, Party};
pub use credit::{BiasParams, GameParams, PayoffMode, PopulationState};
pub use dynamics::{BasinReport, IntegratorConfig, Outcome, OutcomeLabel};
pub use error::{Error, Result};
pub use priors::{BetaPrior, ContributionStats, WjMode};
