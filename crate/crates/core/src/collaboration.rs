//! Collaboration decisions once a norm is established.
//!
//! After learning the realized share `c_j`, each author compares the credit a
//! joint paper would bring with the value of publishing their own part alone
//! (`c_j` for Junior, `1 - c_j` for Senior). Either author can walk away.
//! Credit is the unbiased community estimate; ties resolve to collaborating.
//!
//! Under the I-norm the community credits `mu_j (1 + c_hat)` to Junior
//! regardless of `c_j`. Under the C-norm the first-listed author is the larger
//! contributor and is credited `b_j` or `b_s` of the paper.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Beta, Distribution};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::priors::{derive_contribution_stats, BetaPrior, ContributionStats, WjMode};
use crate::quadrature;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Norm {
    /// Contribution-sensitive: the larger contributor is listed first.
    #[serde(rename = "C-norm")]
    C,
    /// Contribution-insensitive: Junior is always listed first.
    #[serde(rename = "I-norm")]
    I,
}

impl Norm {
    pub const BOTH: [Norm; 2] = [Norm::C, Norm::I];

    pub fn code(self) -> u8 {
        match self {
            Norm::C => 0,
            Norm::I => 1,
        }
    }
}

impl std::fmt::Display for Norm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Norm::C => "C-norm",
            Norm::I => "I-norm",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Party {
    Junior,
    Senior,
}

/// Sub-interval `[lo, hi]` of the unit interval with `lo < hi`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

impl Interval {
    pub fn length(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }
}

/// Sorted union of disjoint intervals in `[0, 1]`.
///
/// Boundary points carry no prior mass, so sets are handled up to endpoints:
/// degenerate intervals are dropped and touching intervals merged.
#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct IntervalSet {
    intervals: Vec<Interval>,
}

impl IntervalSet {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn new(intervals: impl IntoIterator<Item = Interval>) -> Self {
        let mut v: Vec<Interval> = intervals
            .into_iter()
            .map(|i| Interval {
                lo: i.lo.clamp(0.0, 1.0),
                hi: i.hi.clamp(0.0, 1.0),
            })
            .filter(|i| i.hi > i.lo)
            .collect();
        v.sort_by(|a, b| a.lo.total_cmp(&b.lo));
        let mut merged: Vec<Interval> = Vec::with_capacity(v.len());
        for i in v {
            match merged.last_mut() {
                Some(last) if i.lo <= last.hi => last.hi = last.hi.max(i.hi),
                _ => merged.push(i),
            }
        }
        Self { intervals: merged }
    }

    fn single(lo: f64, hi: f64) -> Self {
        Self::new([Interval { lo, hi }])
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn contains(&self, x: f64) -> bool {
        self.intervals.iter().any(|i| i.contains(x))
    }

    pub fn length(&self) -> f64 {
        self.intervals.iter().fold(0.0, |acc, i| acc + i.length())
    }

    pub fn union(&self, other: &IntervalSet) -> IntervalSet {
        IntervalSet::new(self.intervals.iter().chain(other.intervals.iter()).copied())
    }

    /// Closure of `[0, 1]` minus this set.
    pub fn complement(&self) -> IntervalSet {
        let mut out = Vec::new();
        let mut cursor = 0.0;
        for i in &self.intervals {
            out.push(Interval { lo: cursor, hi: i.lo });
            cursor = i.hi;
        }
        out.push(Interval { lo: cursor, hi: 1.0 });
        IntervalSet::new(out)
    }

    pub fn intersect(&self, lo: f64, hi: f64) -> IntervalSet {
        IntervalSet::new(self.intervals.iter().map(|i| Interval {
            lo: i.lo.max(lo),
            hi: i.hi.min(hi),
        }))
    }

    pub fn mass(&self, prior: &BetaPrior) -> Result<f64> {
        self.intervals
            .iter()
            .try_fold(0.0, |acc, i| Ok(acc + prior.mass(i.lo, i.hi)?))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RefusalRegions {
    pub junior: IntervalSet,
    pub senior: IntervalSet,
}

impl RefusalRegions {
    pub fn union(&self) -> IntervalSet {
        self.junior.union(&self.senior)
    }
}

fn check_c_hat(c_hat: f64) -> Result<()> {
    if c_hat.is_finite() && c_hat >= 0.0 {
        Ok(())
    } else {
        Err(Error::range("c_hat", c_hat, "must be non-negative"))
    }
}

/// Under the I-norm Junior refuses when `c_j > mu_j (1 + c_hat)` and Senior
/// when `1 - c_j > (1 - mu_j)(1 + c_hat)`.
pub fn inorm_refusal_regions(mu_j: f64, c_hat: f64) -> Result<RefusalRegions> {
    if !(mu_j > 0.0 && mu_j < 1.0) {
        return Err(Error::range("mu_j", mu_j, "must lie in (0, 1)"));
    }
    check_c_hat(c_hat)?;
    let v = 1.0 + c_hat;
    Ok(RefusalRegions {
        junior: IntervalSet::single(mu_j * v, 1.0),
        senior: IntervalSet::single(0.0, 1.0 - (1.0 - mu_j) * v),
    })
}

/// C-norm refusal regions.
///
/// For `c_j >= 1/2` Junior is listed first: Junior refuses above
/// `b_j (1 + c_hat)`, Senior refuses below `1 - (1 - b_j)(1 + c_hat)`.
/// For `c_j < 1/2` Senior is listed first: Senior refuses below
/// `1 - b_s (1 + c_hat)`, Junior refuses above `(1 - b_s)(1 + c_hat)`.
pub fn cnorm_refusal_regions(stats: &ContributionStats, c_hat: f64) -> Result<RefusalRegions> {
    check_c_hat(c_hat)?;
    let v = 1.0 + c_hat;
    let (b_j, b_s) = (stats.b_j(), stats.b_s());
    let junior = IntervalSet::new([
        Interval { lo: b_j * v, hi: 1.0 },
        Interval {
            lo: (1.0 - b_s) * v,
            hi: 0.5,
        },
    ]);
    let senior = IntervalSet::new([
        Interval {
            lo: 0.5,
            hi: (1.0 - (1.0 - b_j) * v).min(1.0),
        },
        Interval {
            lo: 0.0,
            hi: (1.0 - b_s * v).min(0.5),
        },
    ]);
    Ok(RefusalRegions { junior, senior })
}

pub fn refusal_regions(norm: Norm, stats: &ContributionStats, c_hat: f64) -> Result<RefusalRegions> {
    match norm {
        Norm::I => inorm_refusal_regions(stats.mu_j(), c_hat),
        Norm::C => cnorm_refusal_regions(stats, c_hat),
    }
}

/// Who walks away at realized share `c_j`, if anyone. `c_j = 1/2` counts as
/// Junior contributing more.
pub fn refusing_party(norm: Norm, stats: &ContributionStats, c_hat: f64, c_j: f64) -> Option<Party> {
    let v = 1.0 + c_hat;
    let (junior_credit, senior_credit) = match norm {
        Norm::I => (stats.mu_j() * v, stats.mu_s() * v),
        Norm::C if c_j >= 0.5 => (stats.b_j() * v, (1.0 - stats.b_j()) * v),
        Norm::C => ((1.0 - stats.b_s()) * v, stats.b_s() * v),
    };
    if c_j > junior_credit {
        Some(Party::Junior)
    } else if 1.0 - c_j > senior_credit {
        Some(Party::Senior)
    } else {
        None
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FailureReport {
    pub norm: Norm,
    pub c_hat: f64,
    pub junior_refuses: IntervalSet,
    pub senior_refuses: IntervalSet,
    pub success: IntervalSet,
    pub failure_probability: f64,
    /// Expected collaboration surplus forfeited, `c_hat * failure_probability`.
    pub public_good_loss: f64,
}

/// Ex-ante failure probability and surplus loss under `norm`.
///
/// Needs statistics derived from a Beta prior.
pub fn failure_report(norm: Norm, stats: &ContributionStats, c_hat: f64) -> Result<FailureReport> {
    let prior = stats.require_prior()?;
    let regions = refusal_regions(norm, stats, c_hat)?;
    let refused = regions.union();
    let failure_probability = refused.mass(prior)?.clamp(0.0, 1.0);
    Ok(FailureReport {
        norm,
        c_hat,
        success: refused.complement(),
        junior_refuses: regions.junior,
        senior_refuses: regions.senior,
        failure_probability,
        public_good_loss: c_hat * failure_probability,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct McEstimate {
    pub estimate: f64,
    pub standard_error: f64,
    pub samples: u64,
}

/// Monte Carlo failure probability from `n` seeded draws of `c_j`.
pub fn monte_carlo_failure(norm: Norm, stats: &ContributionStats, c_hat: f64, n: u64, seed: u64) -> Result<McEstimate> {
    let prior = stats.require_prior()?;
    check_c_hat(c_hat)?;
    if n == 0 {
        return Err(Error::range("n", 0.0, "need at least one sample"));
    }
    let dist = Beta::new(prior.alpha(), prior.beta()).map_err(|e| Error::SpecialFunction(e.to_string()))?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let failures = (0..n)
        .filter(|_| refusing_party(norm, stats, c_hat, dist.sample(&mut rng)).is_some())
        .count() as u64;
    let p = failures as f64 / n as f64;
    Ok(McEstimate {
        estimate: p,
        standard_error: (p * (1.0 - p) / n as f64).sqrt(),
        samples: n,
    })
}

/// Expected realized payoff of `party` before `c_j` is known.
///
/// Successful collaborations pay the community credit times `1 + c_hat`;
/// refusals leave each author with their own share.
pub fn ex_ante_player_payoff(norm: Norm, party: Party, stats: &ContributionStats, c_hat: f64) -> Result<f64> {
    let prior = stats.require_prior()?;
    let report = failure_report(norm, stats, c_hat)?;
    let v = 1.0 + c_hat;
    let tol = quadrature::DEFAULT_ABS_TOL;

    let mut total = 0.0;
    // joint paper
    let pieces: [(IntervalSet, f64, f64); 2] = match norm {
        Norm::I => [
            (report.success.clone(), stats.mu_j(), stats.mu_s()),
            (IntervalSet::empty(), 0.0, 0.0),
        ],
        Norm::C => [
            (report.success.intersect(0.5, 1.0), stats.b_j(), 1.0 - stats.b_j()),
            (report.success.intersect(0.0, 0.5), 1.0 - stats.b_s(), stats.b_s()),
        ],
    };
    for (set, junior_share, senior_share) in &pieces {
        let share = match party {
            Party::Junior => *junior_share,
            Party::Senior => *senior_share,
        };
        total += set.mass(prior)? * share * v;
    }
    // solo papers
    for i in report.junior_refuses.union(&report.senior_refuses).intervals() {
        total += match party {
            Party::Junior => prior.expect_on(|x| x, i.lo, i.hi, tol)?,
            Party::Senior => prior.expect_on(|x| 1.0 - x, i.lo, i.hi, tol)?,
        };
    }
    Ok(total)
}

/// Evenly spaced axis values; a single step yields `min` alone.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Axis {
    pub min: f64,
    pub max: f64,
    pub steps: usize,
}

impl Axis {
    pub fn values(&self) -> Vec<f64> {
        match self.steps {
            0 => Vec::new(),
            1 => vec![self.min],
            n => (0..n)
                .map(|k| self.min + (self.max - self.min) * k as f64 / (n - 1) as f64)
                .collect(),
        }
    }
}

/// Grid over Junior's expected share `mu_j` and surplus `c_hat`, with priors
/// `Beta(mu_j s, (1 - mu_j) s)` for a fixed concentration `s`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GridSpec {
    pub mu: Axis,
    pub c_hat: Axis,
    pub shape_sum: f64,
    pub wj_mode: WjMode,
}

impl GridSpec {
    pub fn validate(&self) -> Result<()> {
        if !(self.mu.min > 0.0 && self.mu.max < 1.0 && self.mu.min <= self.mu.max) {
            return Err(Error::range("mu_min", self.mu.min, "mu range must lie inside (0, 1)"));
        }
        if !(self.c_hat.min >= 0.0 && self.c_hat.min <= self.c_hat.max && self.c_hat.max.is_finite()) {
            return Err(Error::range(
                "c_hat_min",
                self.c_hat.min,
                "c_hat range must be non-negative",
            ));
        }
        if self.mu.steps == 0 || self.c_hat.steps == 0 {
            return Err(Error::range("steps", 0.0, "grid axes need at least one step"));
        }
        if !(self.shape_sum.is_finite() && self.shape_sum > 0.0) {
            return Err(Error::range("shape_sum", self.shape_sum, "must be positive"));
        }
        Ok(())
    }

    /// Cell coordinates, `c_hat` as the outer index.
    pub fn cells(&self) -> Vec<(f64, f64)> {
        let mus = self.mu.values();
        self.c_hat
            .values()
            .into_iter()
            .flat_map(|c| mus.iter().map(move |&m| (m, c)))
            .collect()
    }

    fn stats_at(&self, mu: f64) -> Result<ContributionStats> {
        derive_contribution_stats(&BetaPrior::from_mean(mu, self.shape_sum)?, self.wj_mode)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct NormComparison {
    pub fail_c: f64,
    pub fail_i: f64,
    pub loss_c: f64,
    pub loss_i: f64,
}

impl NormComparison {
    /// `fail_c - fail_i`; negative when the C-norm fails less often.
    pub fn fail_diff(&self) -> f64 {
        self.fail_c - self.fail_i
    }

    /// `loss_c - loss_i`; negative when the C-norm loses less surplus.
    pub fn loss_diff(&self) -> f64 {
        self.loss_c - self.loss_i
    }
}

/// One grid cell; `value` is `None` where the prior was degenerate.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GridCell<T> {
    pub mu_j: f64,
    pub c_hat: f64,
    pub value: Option<T>,
    pub error: Option<String>,
}

fn run_grid<T, F>(spec: &GridSpec, eval: F) -> Result<Vec<GridCell<T>>>
where
    T: Send,
    F: Fn(&ContributionStats, f64) -> Result<T> + Sync,
{
    spec.validate()?;
    Ok(spec
        .cells()
        .into_par_iter()
        .map(|(mu_j, c_hat)| {
            let res = spec.stats_at(mu_j).and_then(|s| eval(&s, c_hat));
            let (value, error) = match res {
                Ok(v) => (Some(v), None),
                Err(e) => (None, Some(e.to_string())),
            };
            GridCell {
                mu_j,
                c_hat,
                value,
                error,
            }
        })
        .collect())
}

pub fn norm_comparison_grid(spec: &GridSpec) -> Result<Vec<GridCell<NormComparison>>> {
    run_grid(spec, |stats, c_hat| {
        let c = failure_report(Norm::C, stats, c_hat)?;
        let i = failure_report(Norm::I, stats, c_hat)?;
        Ok(NormComparison {
            fail_c: c.failure_probability,
            fail_i: i.failure_probability,
            loss_c: c.public_good_loss,
            loss_i: i.public_good_loss,
        })
    })
}

/// Ex-ante preference for the C-norm: payoff under C minus payoff under I.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Preference {
    pub junior_pref: f64,
    pub senior_pref: f64,
}

pub fn preference_grid(spec: &GridSpec) -> Result<Vec<GridCell<Preference>>> {
    run_grid(spec, |stats, c_hat| {
        let pref = |party| -> Result<f64> {
            Ok(ex_ante_player_payoff(Norm::C, party, stats, c_hat)?
                - ex_ante_player_payoff(Norm::I, party, stats, c_hat)?)
        };
        Ok(Preference {
            junior_pref: pref(Party::Junior)?,
            senior_pref: pref(Party::Senior)?,
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::priors::stats_from_explicit;

    fn beta22() -> ContributionStats {
        derive_contribution_stats(&BetaPrior::new(2.0, 2.0).unwrap(), WjMode::Exact).unwrap()
    }

    fn iv(lo: f64, hi: f64) -> Interval {
        Interval { lo, hi }
    }

    fn assert_intervals(set: &IntervalSet, expected: &[(f64, f64)], tol: f64) {
        assert_eq!(set.intervals().len(), expected.len(), "{set:?}");
        for (got, &(lo, hi)) in set.intervals().iter().zip(expected) {
            assert!(
                (got.lo - lo).abs() <= tol && (got.hi - hi).abs() <= tol,
                "{got:?} vs ({lo}, {hi})"
            );
        }
    }

    #[test]
    fn interval_set_normalizes() {
        let s = IntervalSet::new([iv(0.6, 0.8), iv(0.1, 0.2), iv(0.7, 0.9), iv(0.3, 0.3), iv(-1.0, 0.05)]);
        assert_intervals(&s, &[(0.0, 0.05), (0.1, 0.2), (0.6, 0.9)], 0.0);
        assert_intervals(&s.complement(), &[(0.05, 0.1), (0.2, 0.6), (0.9, 1.0)], 0.0);
        assert!((s.length() + s.complement().length() - 1.0).abs() < 1e-15);
        assert!(IntervalSet::empty().complement().contains(0.5));
    }

    #[test]
    fn inorm_examples() {
        let r = inorm_refusal_regions(0.5, 0.3).unwrap();
        assert_intervals(&r.junior, &[(0.65, 1.0)], 1e-15);
        assert_intervals(&r.senior, &[(0.0, 0.35)], 1e-15);

        let r = inorm_refusal_regions(0.5, 0.0).unwrap();
        assert_intervals(&r.union(), &[(0.0, 1.0)], 0.0);

        // c_hat above both 1/mu - 1 and 1/(1-mu) - 1
        let r = inorm_refusal_regions(0.3, 2.4).unwrap();
        assert!(r.junior.is_empty() && r.senior.is_empty());
    }

    #[test]
    fn cnorm_examples() {
        let r = cnorm_refusal_regions(&beta22(), 0.15).unwrap();
        // Case 2 junior band (0.359375, 0.5) touches the Case 1 senior band at 1/2
        assert_intervals(&r.senior, &[(0.0, 0.209375), (0.5, 0.640625)], 1e-9);
        assert_intervals(&r.junior, &[(0.359375, 0.5), (0.790625, 1.0)], 1e-9);

        let r = cnorm_refusal_regions(&beta22(), 0.0).unwrap();
        assert!(r.union().complement().is_empty());

        let r = cnorm_refusal_regions(&beta22(), 1.0).unwrap();
        assert!(r.junior.is_empty() && r.senior.is_empty());
    }

    #[test]
    fn failure_report_examples() {
        let s = beta22();
        let r = failure_report(Norm::I, &s, 0.3).unwrap();
        let cdf = |x: f64| 3.0 * x * x - 2.0 * x * x * x;
        assert!((r.failure_probability - 2.0 * cdf(0.35)).abs() < 1e-12);
        assert!((r.failure_probability - 0.5635).abs() < 1e-9);
        for norm in Norm::BOTH {
            let r = failure_report(norm, &s, 0.0).unwrap();
            assert_eq!(r.failure_probability, 1.0);
            assert_eq!(r.public_good_loss, 0.0);
        }
        assert_eq!(failure_report(Norm::I, &s, 10.0).unwrap().failure_probability, 0.0);
    }

    #[test]
    fn explicit_stats_rejected_for_model_two() {
        let s = stats_from_explicit(0.5, 0.7, 0.7).unwrap();
        assert_eq!(
            failure_report(Norm::C, &s, 0.2).unwrap_err(),
            Error::DistributionRequired
        );
        assert_eq!(
            monte_carlo_failure(Norm::C, &s, 0.2, 10, 1).unwrap_err(),
            Error::DistributionRequired
        );
        assert_eq!(
            ex_ante_player_payoff(Norm::I, Party::Junior, &s, 0.2).unwrap_err(),
            Error::DistributionRequired
        );
    }

    #[test]
    fn monte_carlo_examples() {
        let s = beta22();
        let mc = monte_carlo_failure(Norm::I, &s, 0.3, 200_000, 7).unwrap();
        assert!((mc.estimate - 0.5635).abs() < 4.0 * mc.standard_error);
        let again = monte_carlo_failure(Norm::I, &s, 0.3, 200_000, 7).unwrap();
        assert_eq!(mc.estimate.to_bits(), again.estimate.to_bits());
        let all = monte_carlo_failure(Norm::C, &s, 0.0, 10_000, 3).unwrap();
        assert_eq!(all.estimate, 1.0);
        assert_eq!(all.standard_error, 0.0);
    }

    #[test]
    fn pointwise_predicate_agrees_with_regions() {
        let s = beta22();
        for norm in Norm::BOTH {
            for c_hat in [0.05, 0.15, 0.3] {
                let r = refusal_regions(norm, &s, c_hat).unwrap();
                for k in 0..=997 {
                    let x = (k as f64 + 0.37) / 998.0;
                    match refusing_party(norm, &s, c_hat, x) {
                        Some(Party::Junior) => assert!(r.junior.contains(x), "{norm} {c_hat} {x}"),
                        Some(Party::Senior) => assert!(r.senior.contains(x), "{norm} {c_hat} {x}"),
                        None => assert!(
                            !r.union().contains(x) || r.union().intervals().iter().any(|i| i.lo == x || i.hi == x)
                        ),
                    }
                }
            }
        }
    }

    #[test]
    fn ex_ante_examples() {
        let s = beta22();
        for party in [Party::Junior, Party::Senior] {
            let c = ex_ante_player_payoff(Norm::C, party, &s, 5.0).unwrap();
            let i = ex_ante_player_payoff(Norm::I, party, &s, 5.0).unwrap();
            assert!((c - i).abs() < 1e-9, "{c} {i}");
        }
        assert!((ex_ante_player_payoff(Norm::I, Party::Junior, &s, 5.0).unwrap() - 0.5 * 6.0).abs() < 1e-9);

        let skew = derive_contribution_stats(&BetaPrior::new(3.0, 5.0).unwrap(), WjMode::Exact).unwrap();
        for norm in Norm::BOTH {
            let j = ex_ante_player_payoff(norm, Party::Junior, &skew, 0.0).unwrap();
            assert!((j - 3.0 / 8.0).abs() < 1e-9, "{norm}: {j}");
        }
    }

    #[test]
    fn grids_record_degenerate_cells() {
        let spec = GridSpec {
            mu: Axis {
                min: 0.01,
                max: 0.5,
                steps: 2,
            },
            c_hat: Axis {
                min: 0.0,
                max: 0.2,
                steps: 2,
            },
            shape_sum: 400.0,
            wj_mode: WjMode::Exact,
        };
        let cells = norm_comparison_grid(&spec).unwrap();
        assert_eq!(cells.len(), 4);
        assert!(cells[0].value.is_none() && cells[0].error.is_some());
        let zero_row = cells[1].value.unwrap();
        assert_eq!(zero_row.fail_diff(), 0.0);
        assert_eq!(zero_row.loss_diff(), 0.0);
    }

    #[test]
    fn axis_values() {
        assert_eq!(
            Axis {
                min: 0.2,
                max: 0.9,
                steps: 1
            }
            .values(),
            vec![0.2]
        );
        let v = Axis {
            min: 0.0,
            max: 1.0,
            steps: 5,
        }
        .values();
        assert_eq!(v, vec![0.0, 0.25, 0.5, 0.75, 1.0]);
    }
}
