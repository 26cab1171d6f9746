//! Run configuration: a flat TOML document, one run per file.

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use normdyn_core::collaboration::{Axis, GridSpec};
use normdyn_core::priors::{derive_contribution_stats, stats_from_explicit};
use normdyn_core::{BetaPrior, BiasParams, ContributionStats, IntegratorConfig, Norm, PayoffMode, WjMode};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Model {
    Phase,
    Basin,
    BasinSweep,
    M2Failure,
    M2Compare,
    M2Preference,
    DerivePrior,
}

impl Model {
    pub const ALL: [Model; 7] = [
        Model::Phase,
        Model::Basin,
        Model::BasinSweep,
        Model::M2Failure,
        Model::M2Compare,
        Model::M2Preference,
        Model::DerivePrior,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Model::Phase => "phase",
            Model::Basin => "basin",
            Model::BasinSweep => "basin-sweep",
            Model::M2Failure => "m2-failure",
            Model::M2Compare => "m2-compare",
            Model::M2Preference => "m2-preference",
            Model::DerivePrior => "derive-prior",
        }
    }
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Model {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        Model::ALL.into_iter().find(|m| m.name() == s).ok_or_else(|| {
            let names: Vec<_> = Model::ALL.iter().map(|m| m.name()).collect();
            CliError::Validation(format!(
                "model: unknown model `{s}` (expected one of {})",
                names.join(", ")
            ))
        })
    }
}

/// Which norms a Model 2 failure run reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum NormSelection {
    Both,
    C,
    I,
}

impl NormSelection {
    pub fn norms(self) -> &'static [Norm] {
        match self {
            NormSelection::Both => &Norm::BOTH,
            NormSelection::C => &[Norm::C],
            NormSelection::I => &[Norm::I],
        }
    }
}

impl FromStr for NormSelection {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        match s.to_ascii_lowercase().as_str() {
            "both" => Ok(NormSelection::Both),
            "c" => Ok(NormSelection::C),
            "i" => Ok(NormSelection::I),
            _ => Err(CliError::Validation(format!(
                "norm: unknown norm `{s}` (expected both, c or i)"
            ))),
        }
    }
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    model: Option<String>,
    alpha: Option<f64>,
    beta: Option<f64>,
    w_j: Option<f64>,
    b_j: Option<f64>,
    b_s: Option<f64>,
    wj_mode: Option<String>,
    payoff_mode: Option<String>,
    epsilon: Option<f64>,
    chi: Option<f64>,
    c_hat: Option<f64>,
    resolution: Option<usize>,
    step: Option<f64>,
    max_time: Option<f64>,
    convergence_tol: Option<f64>,
    corner_tol: Option<f64>,
    a_values: Option<Vec<f64>>,
    mu_min: Option<f64>,
    mu_max: Option<f64>,
    mu_steps: Option<usize>,
    c_hat_min: Option<f64>,
    c_hat_max: Option<f64>,
    c_hat_steps: Option<usize>,
    shape_sum: Option<f64>,
    norm: Option<String>,
    mc_samples: Option<u64>,
    seed: Option<u64>,
    out_dir: Option<PathBuf>,
}

/// Fully resolved and validated run configuration.
///
/// Serializes to the flat key set it was read from, minus `out_dir`, so the
/// same text can be embedded in every output and fed back in.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunConfig {
    pub model: Model,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub beta: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub w_j: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b_j: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b_s: Option<f64>,
    pub wj_mode: WjMode,
    pub payoff_mode: PayoffMode,
    pub epsilon: f64,
    pub chi: f64,
    pub c_hat: f64,
    pub resolution: usize,
    pub step: f64,
    pub max_time: f64,
    pub convergence_tol: f64,
    pub corner_tol: f64,
    pub a_values: Vec<f64>,
    pub mu_min: f64,
    pub mu_max: f64,
    pub mu_steps: usize,
    pub c_hat_min: f64,
    pub c_hat_max: f64,
    pub c_hat_steps: usize,
    pub shape_sum: f64,
    pub norm: NormSelection,
    pub mc_samples: u64,
    pub seed: u64,
    #[serde(skip)]
    pub out_dir: PathBuf,
}

pub const DEFAULT_ALPHA: f64 = 2.0;
pub const DEFAULT_BETA: f64 = 2.0;
pub const DEFAULT_EPSILON: f64 = 0.1;
pub const DEFAULT_CHI: f64 = 0.05;
pub const DEFAULT_C_HAT: f64 = 1.0;
pub const DEFAULT_M2_C_HAT: f64 = 0.3;
pub const DEFAULT_RESOLUTION: usize = 21;
pub const DEFAULT_SHAPE_SUM: f64 = 7.0;

pub fn load_config(path: &Path) -> Result<RunConfig, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    parse_config(&text)
}

pub fn parse_config(text: &str) -> Result<RunConfig, CliError> {
    let raw: RawConfig = toml::from_str(text).map_err(|e| CliError::Parse(e.to_string().trim_end().to_owned()))?;
    RunConfig::resolve(raw)
}

fn invalid(msg: impl Into<String>) -> CliError {
    CliError::Validation(msg.into())
}

impl RunConfig {
    fn resolve(raw: RawConfig) -> Result<Self, CliError> {
        let model: Model = raw
            .model
            .as_deref()
            .ok_or_else(|| invalid("model: required key is missing"))?
            .parse()?;

        let explicit = [raw.w_j, raw.b_j, raw.b_s];
        let (alpha, beta, w_j, b_j, b_s) = if explicit.iter().any(Option::is_some) {
            if raw.alpha.is_some() || raw.beta.is_some() {
                return Err(invalid("alpha/beta and w_j/b_j/b_s are mutually exclusive"));
            }
            let [Some(w), Some(bj), Some(bs)] = explicit else {
                return Err(invalid("w_j, b_j and b_s must be given together"));
            };
            (None, None, Some(w), Some(bj), Some(bs))
        } else {
            (
                Some(raw.alpha.unwrap_or(DEFAULT_ALPHA)),
                Some(raw.beta.unwrap_or(DEFAULT_BETA)),
                None,
                None,
                None,
            )
        };

        let wj_mode = match raw.wj_mode {
            Some(s) => s.parse::<WjMode>().map_err(|e| invalid(format!("wj_mode: {e}")))?,
            None => WjMode::default(),
        };
        let payoff_mode = match raw.payoff_mode {
            Some(s) => s
                .parse::<PayoffMode>()
                .map_err(|e| invalid(format!("payoff_mode: {e}")))?,
            None => PayoffMode::default(),
        };
        let norm = match raw.norm {
            Some(s) => s.parse()?,
            None => NormSelection::Both,
        };
        let default_c_hat = if model == Model::M2Failure {
            DEFAULT_M2_C_HAT
        } else {
            DEFAULT_C_HAT
        };
        let integ = IntegratorConfig::default();

        let cfg = RunConfig {
            model,
            alpha,
            beta,
            w_j,
            b_j,
            b_s,
            wj_mode,
            payoff_mode,
            epsilon: raw.epsilon.unwrap_or(DEFAULT_EPSILON),
            chi: raw.chi.unwrap_or(DEFAULT_CHI),
            c_hat: raw.c_hat.unwrap_or(default_c_hat),
            resolution: raw.resolution.unwrap_or(DEFAULT_RESOLUTION),
            step: raw.step.unwrap_or(integ.step),
            max_time: raw.max_time.unwrap_or(integ.max_time),
            convergence_tol: raw.convergence_tol.unwrap_or(integ.convergence_tol),
            corner_tol: raw.corner_tol.unwrap_or(integ.corner_tol),
            a_values: raw
                .a_values
                .unwrap_or_else(|| (1..=9).map(|k| 10.0 * k as f64).collect()),
            mu_min: raw.mu_min.unwrap_or(0.05),
            mu_max: raw.mu_max.unwrap_or(0.95),
            mu_steps: raw.mu_steps.unwrap_or(19),
            c_hat_min: raw.c_hat_min.unwrap_or(0.01),
            c_hat_max: raw.c_hat_max.unwrap_or(0.5),
            c_hat_steps: raw.c_hat_steps.unwrap_or(19),
            shape_sum: raw.shape_sum.unwrap_or(DEFAULT_SHAPE_SUM),
            norm,
            mc_samples: raw.mc_samples.unwrap_or(0),
            seed: raw.seed.unwrap_or(0),
            out_dir: raw.out_dir.unwrap_or_else(|| PathBuf::from(".")),
        };
        cfg.validate()?;
        Ok(cfg)
    }

    /// Checks every numeric field against its model's constraints.
    pub fn validate(&self) -> Result<(), CliError> {
        if let (Some(a), Some(b)) = (self.alpha, self.beta) {
            BetaPrior::new(a, b)?;
        }
        if let (Some(w), Some(bj), Some(bs)) = (self.w_j, self.b_j, self.b_s) {
            stats_from_explicit(w, bj, bs)?;
        }
        self.bias()?;
        if !(self.c_hat.is_finite() && self.c_hat >= 0.0) {
            return Err(invalid(format!("c_hat = {} must be non-negative", self.c_hat)));
        }
        if self.resolution < 2 {
            return Err(invalid(format!("resolution = {} must be at least 2", self.resolution)));
        }
        self.integrator().validate()?;
        if self.a_values.is_empty() {
            return Err(invalid("a_values must not be empty"));
        }
        if let Some(a) = self.a_values.iter().find(|a| !(**a > 0.0 && **a < 100.0)) {
            return Err(invalid(format!("a_values: {a} is outside (0, 100)")));
        }
        self.grid().validate()?;
        if self.model == Model::M2Failure && self.alpha.is_none() {
            return Err(normdyn_core::Error::DistributionRequired.into());
        }
        Ok(())
    }

    pub fn bias(&self) -> Result<BiasParams, CliError> {
        Ok(BiasParams::new(self.epsilon, self.chi)?)
    }

    pub fn integrator(&self) -> IntegratorConfig {
        IntegratorConfig {
            step: self.step,
            max_time: self.max_time,
            convergence_tol: self.convergence_tol,
            corner_tol: self.corner_tol,
        }
    }

    pub fn grid(&self) -> GridSpec {
        GridSpec {
            mu: Axis {
                min: self.mu_min,
                max: self.mu_max,
                steps: self.mu_steps,
            },
            c_hat: Axis {
                min: self.c_hat_min,
                max: self.c_hat_max,
                steps: self.c_hat_steps,
            },
            shape_sum: self.shape_sum,
            wj_mode: self.wj_mode,
        }
    }

    pub fn prior(&self) -> Option<BetaPrior> {
        match (self.alpha, self.beta) {
            (Some(a), Some(b)) => BetaPrior::new(a, b).ok(),
            _ => None,
        }
    }

    /// Contribution statistics for single-prior models.
    pub fn stats(&self) -> Result<ContributionStats, CliError> {
        match (self.prior(), self.w_j, self.b_j, self.b_s) {
            (Some(p), ..) => Ok(derive_contribution_stats(&p, self.wj_mode)?),
            (None, Some(w), Some(bj), Some(bs)) => Ok(stats_from_explicit(w, bj, bs)?),
            _ => Err(invalid("no prior specified")),
        }
    }

    /// The resolved configuration as flat TOML.
    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("flat config always serializes")
    }
}
