use rayon::prelude::*;
use serde::Serialize;

use super::{integrate, IntegratorConfig, OutcomeLabel};
use crate::credit::{BiasParams, GameParams, PayoffMode, PopulationState};
use crate::error::{Error, Result};
use crate::priors::{derive_contribution_stats, BetaPrior, WjMode};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BasinReport {
    pub grid_resolution: usize,
    pub fraction_c: f64,
    pub fraction_i: f64,
    /// Everything not attracted to the C or I corner, including
    /// [`fraction_no_collaboration`](Self::fraction_no_collaboration).
    pub fraction_other: f64,
    pub fraction_no_collaboration: f64,
}

/// Outcome label for every cell midpoint `((i + 0.5)/R, (k + 0.5)/R)`,
/// row-major with `p_s` as the outer index.
pub fn basin_outcomes(
    params: &GameParams,
    resolution: usize,
    cfg: &IntegratorConfig,
    mode: PayoffMode,
) -> Result<Vec<(PopulationState, OutcomeLabel)>> {
    if resolution < 2 {
        return Err(Error::range("resolution", resolution as f64, "must be at least 2"));
    }
    cfg.validate()?;
    let r = resolution as f64;
    Ok((0..resolution * resolution)
        .into_par_iter()
        .map(|idx| {
            let start = PopulationState {
                p_j: ((idx % resolution) as f64 + 0.5) / r,
                p_s: ((idx / resolution) as f64 + 0.5) / r,
            };
            (start, integrate::run(start, params, cfg, mode, None).label)
        })
        .collect())
}

pub fn basin_fractions(
    params: &GameParams,
    resolution: usize,
    cfg: &IntegratorConfig,
    mode: PayoffMode,
) -> Result<BasinReport> {
    let labels = basin_outcomes(params, resolution, cfg, mode)?;
    Ok(BasinReport::from_labels(resolution, labels.iter().map(|(_, l)| *l)))
}

impl BasinReport {
    /// Tallies the labels of a `resolution x resolution` basin grid.
    pub fn from_labels(resolution: usize, labels: impl IntoIterator<Item = OutcomeLabel>) -> Self {
        let mut counts = [0usize; 4];
        for label in labels {
            counts[label.code() as usize] += 1;
        }
        let n = counts.iter().sum::<usize>().max(1) as f64;
        BasinReport {
            grid_resolution: resolution,
            fraction_c: counts[0] as f64 / n,
            fraction_i: counts[1] as f64 / n,
            fraction_other: (counts[2] + counts[3]) as f64 / n,
            fraction_no_collaboration: counts[2] as f64 / n,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SweepRow {
    pub a: f64,
    pub delta: f64,
    pub report: BasinReport,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepGap {
    pub a: f64,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BasinSweep {
    /// Sorted by ascending `delta`.
    pub rows: Vec<SweepRow>,
    pub gaps: Vec<SweepGap>,
}

/// Basin fractions across the prior family `Beta(a, 100 - a)`.
///
/// Family members whose statistics cannot be derived are recorded as gaps.
#[allow(clippy::too_many_arguments)]
pub fn basin_sweep(
    a_values: &[f64],
    bias: BiasParams,
    c_hat: f64,
    resolution: usize,
    cfg: &IntegratorConfig,
    mode: PayoffMode,
    wj_mode: WjMode,
) -> Result<BasinSweep> {
    let mut rows = Vec::new();
    let mut gaps = Vec::new();
    for &a in a_values {
        if !(a > 0.0 && a < 100.0) {
            return Err(Error::range("a", a, "family parameter must lie in (0, 100)"));
        }
        let stats = BetaPrior::new(a, 100.0 - a).and_then(|p| derive_contribution_stats(&p, wj_mode));
        let stats = match stats {
            Ok(s) => s,
            Err(e) => {
                gaps.push(SweepGap {
                    a,
                    reason: e.to_string(),
                });
                continue;
            }
        };
        let params = GameParams::new(stats, bias, c_hat)?;
        let report = basin_fractions(&params, resolution, cfg, mode)?;
        rows.push(SweepRow {
            a,
            delta: stats.delta(),
            report,
        });
    }
    rows.sort_by(|x, y| x.delta.total_cmp(&y.delta));
    Ok(BasinSweep { rows, gaps })
}
