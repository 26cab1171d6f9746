//! Community credit attribution in the norm-bargaining game.
//!
//! Junior and Senior each propose a norm. (I, C) is the only incompatible
//! pair; (C, I) is settled by a coin flip. A successful collaboration yields a
//! paper worth `1 + c_hat`; a failed one leaves each author with a solo paper
//! worth their own share, credited exactly.
//!
//! The community credits a joint paper by one of three rules:
//! the Bayesian "correct" estimate, everything to the first-listed author
//! (probability tied to `epsilon`), or everything to Senior (tied to `chi`).

use serde::Serialize;

use crate::error::{Error, Result};
use crate::priors::ContributionStats;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BiasParams {
    epsilon: f64,
    chi: f64,
}

impl BiasParams {
    pub const NONE: BiasParams = BiasParams { epsilon: 0.0, chi: 0.0 };

    pub fn new(epsilon: f64, chi: f64) -> Result<Self> {
        let ok = epsilon.is_finite() && chi.is_finite() && epsilon >= 0.0 && chi >= 0.0 && epsilon + chi < 1.0;
        if !ok {
            return Err(Error::InvalidBias { epsilon, chi });
        }
        Ok(Self { epsilon, chi })
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    pub fn chi(&self) -> f64 {
        self.chi
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GameParams {
    pub stats: ContributionStats,
    pub bias: BiasParams,
    c_hat: f64,
}

impl GameParams {
    pub fn new(stats: ContributionStats, bias: BiasParams, c_hat: f64) -> Result<Self> {
        if !(c_hat.is_finite() && c_hat >= 0.0) {
            return Err(Error::range("c_hat", c_hat, "must be non-negative"));
        }
        Ok(Self { stats, bias, c_hat })
    }

    pub fn c_hat(&self) -> f64 {
        self.c_hat
    }
}

/// Frequencies of I-norm play among juniors (`p_j`) and seniors (`p_s`).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PopulationState {
    pub p_j: f64,
    pub p_s: f64,
}

impl PopulationState {
    pub const ALL_C: PopulationState = PopulationState { p_j: 0.0, p_s: 0.0 };
    pub const ALL_I: PopulationState = PopulationState { p_j: 1.0, p_s: 1.0 };
    pub const NO_COLLABORATION: PopulationState = PopulationState { p_j: 1.0, p_s: 0.0 };

    pub fn new(p_j: f64, p_s: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&p_j) {
            return Err(Error::range("p_j", p_j, "must lie in [0, 1]"));
        }
        if !(0.0..=1.0).contains(&p_s) {
            return Err(Error::range("p_s", p_s, "must lie in [0, 1]"));
        }
        Ok(Self { p_j, p_s })
    }

    /// Projects onto the unit square.
    pub fn clamped(p_j: f64, p_s: f64) -> Self {
        Self {
            p_j: p_j.clamp(0.0, 1.0),
            p_s: p_s.clamp(0.0, 1.0),
        }
    }
}

/// Probabilities of the three attribution rules.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CreditMixture {
    pub p_correct: f64,
    pub p_first: f64,
    pub p_matthew: f64,
}

/// `P(C) = 1 - p_j (1 - p_s)`.
pub fn collaboration_probability(state: PopulationState) -> f64 {
    1.0 - state.p_j * (1.0 - state.p_s)
}

/// Community posterior that Junior contributed more, given a joint paper with
/// Junior listed first. Defined as 0 at the measure-zero state (1, 0).
pub fn posterior_junior_greater(state: PopulationState, w_j: f64) -> f64 {
    let PopulationState { p_j, p_s } = state;
    let junior_more = collaboration_probability(state) * w_j;
    let junior_first_anyway = (p_j * p_s + 0.5 * (1.0 - p_j) * p_s) * (1.0 - w_j);
    let denom = junior_more + junior_first_anyway;
    if denom == 0.0 {
        0.0
    } else {
        junior_more / denom
    }
}

/// Ex-ante probabilities `(f_j, f_s)` of a joint paper with Junior (resp.
/// Senior) listed first.
pub fn listing_probabilities(state: PopulationState, w_j: f64) -> (f64, f64) {
    let PopulationState { p_j, p_s } = state;
    let f_j = w_j * collaboration_probability(state) + (1.0 - w_j) * (p_j * p_s + (1.0 - p_j) * p_s / 2.0);
    let f_s = (1.0 - w_j) * ((1.0 - p_j) * (1.0 - p_s) + (1.0 - p_j) * p_s / 2.0);
    (f_j, f_s)
}

pub fn bias_mixture(bias: &BiasParams) -> CreditMixture {
    let (e, x) = (bias.epsilon, bias.chi);
    let norm = 1.0 - e * x;
    CreditMixture {
        p_correct: (1.0 - e) * (1.0 - x) / norm,
        p_first: e * (1.0 - x) / norm,
        p_matthew: (1.0 - e) * x / norm,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Payoffs {
    pub junior: f64,
    pub senior: f64,
}

/// Expected credit of each author at `state`, with the community's belief
/// `m_j` evaluated at `belief_state`.
fn payoffs_with_belief(state: PopulationState, belief_state: PopulationState, params: &GameParams) -> Payoffs {
    let stats = &params.stats;
    let (w_j, b_j, b_s) = (stats.w_j(), stats.b_j(), stats.b_s());
    let m_j = posterior_junior_greater(belief_state, w_j);
    let (f_j, f_s) = listing_probabilities(state, w_j);
    let mix = bias_mixture(&params.bias);
    let value = 1.0 + params.c_hat;
    let solo = state.p_j * (1.0 - state.p_s);

    let junior_when_first = mix.p_correct * (m_j * b_j + (1.0 - m_j) * (1.0 - b_s)) + mix.p_first;
    let junior_when_second = mix.p_correct * (1.0 - b_s);
    let senior_when_second = mix.p_correct * (m_j * (1.0 - b_j) + (1.0 - m_j) * b_s) + mix.p_matthew;
    let senior_when_first = mix.p_correct * b_s + mix.p_first + mix.p_matthew;

    Payoffs {
        junior: f_j * value * junior_when_first + f_s * value * junior_when_second + solo * stats.mu_j(),
        senior: f_j * value * senior_when_second + f_s * value * senior_when_first + solo * stats.mu_s(),
    }
}

/// Expected credit `(pi_j, pi_s)` when the populations play `state` and the
/// community knows it.
pub fn expected_payoffs(state: PopulationState, params: &GameParams) -> Payoffs {
    payoffs_with_belief(state, state, params)
}

/// How community beliefs respond when a pure strategy is substituted into the
/// payoff function.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PayoffMode {
    /// Beliefs move with the substituted strategy.
    #[default]
    Substitution,
    /// Beliefs stay at the population state.
    FixedBelief,
}

impl std::str::FromStr for PayoffMode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "substitution" => Ok(Self::Substitution),
            "fixed-belief" => Ok(Self::FixedBelief),
            other => Err(format!(
                "unknown payoff_mode `{other}` (expected `substitution` or `fixed-belief`)"
            )),
        }
    }
}

impl std::fmt::Display for PayoffMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Self::Substitution => "substitution",
            Self::FixedBelief => "fixed-belief",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct StrategyPayoffs {
    pub junior_i: f64,
    pub junior_c: f64,
    pub senior_i: f64,
    pub senior_c: f64,
}

impl StrategyPayoffs {
    pub fn junior_advantage(&self) -> f64 {
        self.junior_i - self.junior_c
    }

    pub fn senior_advantage(&self) -> f64 {
        self.senior_i - self.senior_c
    }
}

/// Payoffs of each pure strategy against the opposing population.
pub fn pure_strategy_payoffs(state: PopulationState, params: &GameParams, mode: PayoffMode) -> StrategyPayoffs {
    let eval = |s: PopulationState| match mode {
        PayoffMode::Substitution => payoffs_with_belief(s, s, params),
        PayoffMode::FixedBelief => payoffs_with_belief(s, state, params),
    };
    StrategyPayoffs {
        junior_i: eval(PopulationState { p_j: 1.0, ..state }).junior,
        junior_c: eval(PopulationState { p_j: 0.0, ..state }).junior,
        senior_i: eval(PopulationState { p_s: 1.0, ..state }).senior,
        senior_c: eval(PopulationState { p_s: 0.0, ..state }).senior,
    }
}
