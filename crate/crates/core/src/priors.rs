//! Beta prior over the junior's contribution share `c_j` and the statistics
//! the credit model needs from it.
//!
//! The community summarizes the contribution distribution with
//!
//! - `w_j`: probability that Junior contributes more than Senior,
//! - `b_j = E[c_j | c_j > 1/2]`,
//! - `b_s = E[1 - c_j | c_j < 1/2]`,
//! - `mu_j = w_j b_j + (1 - w_j)(1 - b_s)`.
//!
//! Conditional means are computed by adaptive quadrature against the Beta
//! density. Algebraic endpoint singularities of the density (shape < 1) are
//! removed by a power substitution before integrating.

use serde::Serialize;
use statrs::function::beta::{checked_beta_reg, ln_beta};

use crate::error::{Error, Result};
use crate::quadrature;

/// Conditioning events below this probability are rejected.
pub const DEGENERATE_PROBABILITY: f64 = 1e-12;

/// Target absolute accuracy of a returned conditional mean.
pub const CONDITIONAL_MEAN_TOL: f64 = quadrature::DEFAULT_ABS_TOL;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BetaPrior {
    alpha: f64,
    beta: f64,
}

impl BetaPrior {
    pub fn new(alpha: f64, beta: f64) -> Result<Self> {
        if !(alpha.is_finite() && alpha > 0.0) {
            return Err(Error::range("alpha", alpha, "Beta shape must be positive"));
        }
        if !(beta.is_finite() && beta > 0.0) {
            return Err(Error::range("beta", beta, "Beta shape must be positive"));
        }
        Ok(Self { alpha, beta })
    }

    /// Prior with mean `mu` and concentration `alpha + beta = shape_sum`.
    pub fn from_mean(mu: f64, shape_sum: f64) -> Result<Self> {
        if !(mu > 0.0 && mu < 1.0) {
            return Err(Error::range("mu_j", mu, "must lie in (0, 1)"));
        }
        if !(shape_sum.is_finite() && shape_sum > 0.0) {
            return Err(Error::range("shape_sum", shape_sum, "must be positive"));
        }
        Self::new(mu * shape_sum, (1.0 - mu) * shape_sum)
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn mean(&self) -> f64 {
        self.alpha / (self.alpha + self.beta)
    }

    pub fn pdf(&self, x: f64) -> f64 {
        if !(0.0..=1.0).contains(&x) {
            return 0.0;
        }
        let ln_b = ln_beta(self.alpha, self.beta);
        x.powf(self.alpha - 1.0) * (1.0 - x).powf(self.beta - 1.0) * (-ln_b).exp()
    }

    /// `P(c_j <= x)`.
    pub fn cdf(&self, x: f64) -> Result<f64> {
        check_unit("x", x)?;
        if x == 0.0 {
            return Ok(0.0);
        }
        if x == 1.0 {
            return Ok(1.0);
        }
        checked_beta_reg(self.alpha, self.beta, x).map_err(|e| Error::SpecialFunction(e.to_string()))
    }

    /// `P(c_j > x)`, accurate in the far upper tail.
    pub fn sf(&self, x: f64) -> Result<f64> {
        check_unit("x", x)?;
        if x == 0.0 {
            return Ok(1.0);
        }
        if x == 1.0 {
            return Ok(0.0);
        }
        checked_beta_reg(self.beta, self.alpha, 1.0 - x).map_err(|e| Error::SpecialFunction(e.to_string()))
    }

    /// Prior mass of `[lo, hi]`, computed from whichever tail keeps precision.
    pub fn mass(&self, lo: f64, hi: f64) -> Result<f64> {
        check_unit("lo", lo)?;
        check_unit("hi", hi)?;
        if hi <= lo {
            return Ok(0.0);
        }
        let m = if lo >= 0.5 {
            self.sf(lo)? - self.sf(hi)?
        } else {
            self.cdf(hi)? - self.cdf(lo)?
        };
        Ok(m.max(0.0))
    }

    /// `∫_lo^hi g(x) f(x) dx` for the Beta density `f`, by adaptive quadrature.
    ///
    /// `g` must be bounded on `[lo, hi]`.
    pub fn expect_on<G: Fn(f64) -> f64>(&self, g: G, lo: f64, hi: f64, abs_tol: f64) -> Result<f64> {
        check_unit("lo", lo)?;
        check_unit("hi", hi)?;
        if hi <= lo {
            return Ok(0.0);
        }
        let (a, b) = (self.alpha, self.beta);
        let ln_b = ln_beta(a, b);
        // each half gets half the budget
        let tol = 0.5 * abs_tol;
        let mut total = 0.0;

        let (l0, l1) = (lo, hi.min(0.5));
        if l1 > l0 {
            total += if a < 1.0 {
                // u = x^a, so x^(a-1) dx = du / a
                let scale = (-ln_b - a.ln()).exp();
                quadrature::integrate(
                    |u| {
                        let x = u.powf(1.0 / a);
                        g(x) * (1.0 - x).powf(b - 1.0) * scale
                    },
                    l0.powf(a),
                    l1.powf(a),
                    tol,
                )
                .value
            } else {
                let scale = (-ln_b).exp();
                quadrature::integrate(
                    |x| g(x) * x.powf(a - 1.0) * (1.0 - x).powf(b - 1.0) * scale,
                    l0,
                    l1,
                    tol,
                )
                .value
            };
        }

        let (r0, r1) = (lo.max(0.5), hi);
        if r1 > r0 {
            total += if b < 1.0 {
                // v = (1-x)^b, so (1-x)^(b-1) dx = -dv / b
                let scale = (-ln_b - b.ln()).exp();
                quadrature::integrate(
                    |v| {
                        let x = 1.0 - v.powf(1.0 / b);
                        g(x) * x.powf(a - 1.0) * scale
                    },
                    (1.0 - r1).powf(b),
                    (1.0 - r0).powf(b),
                    tol,
                )
                .value
            } else {
                let scale = (-ln_b).exp();
                quadrature::integrate(
                    |x| g(x) * x.powf(a - 1.0) * (1.0 - x).powf(b - 1.0) * scale,
                    r0,
                    r1,
                    tol,
                )
                .value
            };
        }
        Ok(total)
    }

    /// `∫_lo^hi x f(x) dx`.
    pub fn partial_mean(&self, lo: f64, hi: f64) -> Result<f64> {
        self.expect_on(|x| x, lo, hi, quadrature::DEFAULT_ABS_TOL)
    }
}

fn check_unit(name: &'static str, x: f64) -> Result<()> {
    if (0.0..=1.0).contains(&x) {
        Ok(())
    } else {
        Err(Error::range(name, x, "must lie in [0, 1]"))
    }
}

pub fn beta_cdf(prior: &BetaPrior, x: f64) -> Result<f64> {
    prior.cdf(x)
}

/// `E[c_j | c_j > t]`.
pub fn conditional_mean_above(prior: &BetaPrior, t: f64) -> Result<f64> {
    if !(0.0..1.0).contains(&t) {
        return Err(Error::range("t", t, "must lie in [0, 1)"));
    }
    let p = prior.sf(t)?;
    if p < DEGENERATE_PROBABILITY {
        return Err(Error::DegenerateCondition {
            event: format!("c_j > {t}"),
            probability: p,
            threshold: DEGENERATE_PROBABILITY,
        });
    }
    let num = prior.expect_on(|x| x, t, 1.0, CONDITIONAL_MEAN_TOL * p)?;
    Ok(num / p)
}

/// `E[1 - c_j | c_j < t]`, Senior's expected share when `c_j` falls below `t`.
pub fn conditional_complement_mean_below(prior: &BetaPrior, t: f64) -> Result<f64> {
    if !(t > 0.0 && t <= 1.0) {
        return Err(Error::range("t", t, "must lie in (0, 1]"));
    }
    let p = prior.cdf(t)?;
    if p < DEGENERATE_PROBABILITY {
        return Err(Error::DegenerateCondition {
            event: format!("c_j < {t}"),
            probability: p,
            threshold: DEGENERATE_PROBABILITY,
        });
    }
    let num = prior.expect_on(|x| 1.0 - x, 0.0, t, CONDITIONAL_MEAN_TOL * p)?;
    Ok(num / p)
}

/// How `w_j` is obtained from a Beta prior.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum WjMode {
    /// `w_j = P(c_j > 1/2)`.
    #[default]
    Exact,
    /// `w_j = alpha / (alpha + beta)`, the prior mean.
    PriorMean,
}

impl std::str::FromStr for WjMode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "exact" => Ok(Self::Exact),
            "prior-mean" => Ok(Self::PriorMean),
            other => Err(format!("unknown wj_mode `{other}` (expected `exact` or `prior-mean`)")),
        }
    }
}

impl std::fmt::Display for WjMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Self::Exact => "exact",
            Self::PriorMean => "prior-mean",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ContributionStats {
    w_j: f64,
    b_j: f64,
    b_s: f64,
    mu_j: f64,
    prior: Option<BetaPrior>,
}

impl ContributionStats {
    fn checked(w_j: f64, b_j: f64, b_s: f64, prior: Option<BetaPrior>) -> Result<Self> {
        if !(w_j > 0.0 && w_j < 1.0) {
            return Err(Error::range("w_j", w_j, "must lie in (0, 1)"));
        }
        if !(b_j > 0.5 && b_j < 1.0) {
            return Err(Error::range("b_j", b_j, "must lie in (0.5, 1)"));
        }
        if !(b_s > 0.5 && b_s < 1.0) {
            return Err(Error::range("b_s", b_s, "must lie in (0.5, 1)"));
        }
        let mu_j = w_j * b_j + (1.0 - w_j) * (1.0 - b_s);
        Ok(Self {
            w_j,
            b_j,
            b_s,
            mu_j,
            prior,
        })
    }

    pub fn w_j(&self) -> f64 {
        self.w_j
    }

    pub fn b_j(&self) -> f64 {
        self.b_j
    }

    pub fn b_s(&self) -> f64 {
        self.b_s
    }

    pub fn mu_j(&self) -> f64 {
        self.mu_j
    }

    pub fn mu_s(&self) -> f64 {
        1.0 - self.mu_j
    }

    /// `delta = 1 - 2 mu_j`, Senior's expected share minus Junior's.
    pub fn delta(&self) -> f64 {
        1.0 - 2.0 * self.mu_j
    }

    /// The Beta prior these statistics came from, if any.
    pub fn prior(&self) -> Option<&BetaPrior> {
        self.prior.as_ref()
    }

    pub fn require_prior(&self) -> Result<&BetaPrior> {
        self.prior.as_ref().ok_or(Error::DistributionRequired)
    }
}

pub fn derive_contribution_stats(prior: &BetaPrior, mode: WjMode) -> Result<ContributionStats> {
    let b_j = conditional_mean_above(prior, 0.5)?;
    let b_s = conditional_complement_mean_below(prior, 0.5)?;
    let w_j = match mode {
        WjMode::Exact => prior.sf(0.5)?,
        WjMode::PriorMean => prior.mean(),
    };
    ContributionStats::checked(w_j, b_j, b_s, Some(*prior))
}

/// Statistics given directly, with no distribution behind them.
pub fn stats_from_explicit(w_j: f64, b_j: f64, b_s: f64) -> Result<ContributionStats> {
    ContributionStats::checked(w_j, b_j, b_s, None)
}
