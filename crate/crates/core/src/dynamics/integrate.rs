use serde::Serialize;

use super::{classify, replicator_field, IntegratorConfig, Outcome};
use crate::credit::{GameParams, PayoffMode, PopulationState};
use crate::error::Result;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TrajectoryPoint {
    pub time: f64,
    pub state: PopulationState,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Trajectory {
    pub points: Vec<TrajectoryPoint>,
    pub outcome: Outcome,
}

fn rk4_step(state: PopulationState, params: &GameParams, mode: PayoffMode, h: f64) -> PopulationState {
    let f = |s: PopulationState| replicator_field(s, params, mode);
    let at = |dj: f64, ds: f64| PopulationState::clamped(state.p_j + dj, state.p_s + ds);
    let k1 = f(state);
    let k2 = f(at(0.5 * h * k1.dp_j, 0.5 * h * k1.dp_s));
    let k3 = f(at(0.5 * h * k2.dp_j, 0.5 * h * k2.dp_s));
    let k4 = f(at(h * k3.dp_j, h * k3.dp_s));
    at(
        h / 6.0 * (k1.dp_j + 2.0 * k2.dp_j + 2.0 * k3.dp_j + k4.dp_j),
        h / 6.0 * (k1.dp_s + 2.0 * k2.dp_s + 2.0 * k3.dp_s + k4.dp_s),
    )
}

/// Fixed-step RK4 run, optionally recording every state visited.
pub(crate) fn run(
    start: PopulationState,
    params: &GameParams,
    cfg: &IntegratorConfig,
    mode: PayoffMode,
    mut record: Option<&mut Vec<TrajectoryPoint>>,
) -> Outcome {
    // tolerate ratios like 0.05 / 0.01 = 5.000000000000001
    let max_steps = (cfg.max_time / cfg.step - 1e-9).ceil().max(0.0) as u64;
    let mut state = start;
    let mut step = 0u64;
    if let Some(points) = record.as_deref_mut() {
        points.push(TrajectoryPoint { time: 0.0, state });
    }
    loop {
        let converged = replicator_field(state, params, mode).norm() < cfg.convergence_tol;
        if converged || step >= max_steps {
            return Outcome {
                label: classify(state, cfg.corner_tol),
                terminal: state,
                time: step as f64 * cfg.step,
                converged,
            };
        }
        state = rk4_step(state, params, mode, cfg.step);
        step += 1;
        if let Some(points) = record.as_deref_mut() {
            points.push(TrajectoryPoint {
                time: step as f64 * cfg.step,
                state,
            });
        }
    }
}

/// Integrates from `start` until the field vanishes or `max_time` elapses.
///
/// Non-convergence is reported through [`Outcome::converged`], with the label
/// taken from wherever the run stopped.
pub fn integrate_trajectory(
    start: PopulationState,
    params: &GameParams,
    cfg: &IntegratorConfig,
    mode: PayoffMode,
) -> Result<Trajectory> {
    cfg.validate()?;
    let start = PopulationState::new(start.p_j, start.p_s)?;
    let mut points = Vec::new();
    let outcome = run(start, params, cfg, mode, Some(&mut points));
    Ok(Trajectory { points, outcome })
}
