//! Two-population replicator dynamics over `(p_j, p_s)`.
//!
//! `dp_j/dt = p_j (1 - p_j) (pi_j(I) - pi_j(C))` and likewise for Senior.

mod basin;
mod equilibrium;
mod integrate;

pub use basin::{basin_fractions, basin_outcomes, basin_sweep, BasinReport, BasinSweep, SweepGap, SweepRow};
pub use equilibrium::{find_interior_equilibrium, payoff_advantage};
pub use integrate::{integrate_trajectory, Trajectory, TrajectoryPoint};

use serde::Serialize;

use crate::credit::{pure_strategy_payoffs, GameParams, PayoffMode, PopulationState};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct IntegratorConfig {
    pub step: f64,
    pub max_time: f64,
    /// Integration stops once the field norm falls below this.
    pub convergence_tol: f64,
    /// Max-norm radius for assigning a terminal state to a corner.
    pub corner_tol: f64,
}

impl Default for IntegratorConfig {
    fn default() -> Self {
        Self {
            step: 0.01,
            max_time: 2000.0,
            convergence_tol: 1e-7,
            corner_tol: 1e-3,
        }
    }
}

impl IntegratorConfig {
    pub fn validate(&self) -> Result<()> {
        let positive = |name, v: f64| {
            if v.is_finite() && v > 0.0 {
                Ok(())
            } else {
                Err(Error::range(name, v, "must be positive"))
            }
        };
        positive("step", self.step)?;
        positive("max_time", self.max_time)?;
        positive("convergence_tol", self.convergence_tol)?;
        positive("corner_tol", self.corner_tol)?;
        if self.corner_tol >= 0.5 {
            return Err(Error::range("corner_tol", self.corner_tol, "must be below 0.5"));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum OutcomeLabel {
    CNorm,
    INorm,
    NoCollaboration,
    Other,
}

impl OutcomeLabel {
    pub fn code(self) -> u8 {
        match self {
            OutcomeLabel::CNorm => 0,
            OutcomeLabel::INorm => 1,
            OutcomeLabel::NoCollaboration => 2,
            OutcomeLabel::Other => 3,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Outcome {
    pub label: OutcomeLabel,
    pub terminal: PopulationState,
    /// Time at which integration stopped.
    pub time: f64,
    /// Whether the field norm dropped below the convergence tolerance.
    pub converged: bool,
}

pub fn classify(state: PopulationState, corner_tol: f64) -> OutcomeLabel {
    let near = |c: PopulationState| (state.p_j - c.p_j).abs().max((state.p_s - c.p_s).abs()) <= corner_tol;
    if near(PopulationState::ALL_C) {
        OutcomeLabel::CNorm
    } else if near(PopulationState::ALL_I) {
        OutcomeLabel::INorm
    } else if near(PopulationState::NO_COLLABORATION) {
        OutcomeLabel::NoCollaboration
    } else {
        OutcomeLabel::Other
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FieldVector {
    pub dp_j: f64,
    pub dp_s: f64,
}

impl FieldVector {
    pub fn norm(&self) -> f64 {
        self.dp_j.hypot(self.dp_s)
    }
}

pub fn replicator_field(state: PopulationState, params: &GameParams, mode: PayoffMode) -> FieldVector {
    let PopulationState { p_j, p_s } = state;
    let gj = p_j * (1.0 - p_j);
    let gs = p_s * (1.0 - p_s);
    if gj == 0.0 && gs == 0.0 {
        return FieldVector { dp_j: 0.0, dp_s: 0.0 };
    }
    let pay = pure_strategy_payoffs(state, params, mode);
    FieldVector {
        dp_j: gj * pay.junior_advantage(),
        dp_s: gs * pay.senior_advantage(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FieldSample {
    pub state: PopulationState,
    pub field: FieldVector,
}

/// Field on the `resolution x resolution` lattice `{0, 1/(R-1), ..., 1}^2`,
/// row-major with `p_s` as the outer index.
pub fn stream_field_grid(params: &GameParams, resolution: usize, mode: PayoffMode) -> Result<Vec<FieldSample>> {
    if resolution < 2 {
        return Err(Error::range("resolution", resolution as f64, "must be at least 2"));
    }
    let step = 1.0 / (resolution - 1) as f64;
    let mut out = Vec::with_capacity(resolution * resolution);
    for row in 0..resolution {
        for col in 0..resolution {
            let state = PopulationState {
                p_j: col as f64 * step,
                p_s: row as f64 * step,
            };
            out.push(FieldSample {
                state,
                field: replicator_field(state, params, mode),
            });
        }
    }
    Ok(out)
}
