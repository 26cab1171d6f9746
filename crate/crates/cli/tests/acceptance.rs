//! Acceptance suite: one pass/fail line per criterion, nonzero exit on failure.

use std::process::{Command, ExitCode};
use std::time::Instant;

use normdyn_core::collaboration::{
    cnorm_refusal_regions, failure_report, monte_carlo_failure, norm_comparison_grid, Axis, GridSpec,
};
use normdyn_core::credit::{collaboration_probability, expected_payoffs};
use normdyn_core::dynamics::{basin_fractions, basin_sweep, integrate_trajectory, replicator_field};
use normdyn_core::priors::derive_contribution_stats;
use normdyn_core::{
    BetaPrior, BiasParams, ContributionStats, GameParams, IntegratorConfig, IntervalSet, Norm, OutcomeLabel,
    PayoffMode, PopulationState, WjMode,
};

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

const MODE: PayoffMode = PayoffMode::Substitution;

fn stats(a: f64, b: f64) -> ContributionStats {
    derive_contribution_stats(&BetaPrior::new(a, b).unwrap(), WjMode::Exact).unwrap()
}

fn params(a: f64, b: f64, epsilon: f64, chi: f64, c_hat: f64) -> GameParams {
    GameParams::new(stats(a, b), BiasParams::new(epsilon, chi).unwrap(), c_hat).unwrap()
}

fn state(p_j: f64, p_s: f64) -> PopulationState {
    PopulationState::new(p_j, p_s).unwrap()
}

fn ensure(ok: bool, detail: String) -> Check {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn prior_consistency() -> Check {
    // quasi-random points from additive recurrences
    let frac = |x: f64| x - x.floor();
    let mut worst = 0.0f64;
    for k in 1..=20 {
        let a = 0.5 + 19.5 * frac(k as f64 * 0.618_033_988_75);
        let b = 0.5 + 19.5 * frac(k as f64 * 0.754_877_666_25 + 0.3);
        let s = stats(a, b);
        worst = worst.max((s.w_j() * s.b_j() + (1.0 - s.w_j()) * (1.0 - s.b_s()) - a / (a + b)).abs());
    }
    ensure(worst < 1e-8, format!("max |mu_j - mean| = {worst:.2e} over 20 priors"))
}

fn credit_conservation() -> Check {
    let sets = [
        params(2.0, 2.0, 0.1, 0.05, 1.0),
        params(2.0, 2.0, 0.0, 0.0, 1.0),
        params(8.0, 2.0, 0.3, 0.2, 0.5),
        params(0.7, 3.0, 0.05, 0.6, 2.0),
        params(20.0, 30.0, 0.45, 0.45, 0.1),
    ];
    let mut worst = 0.0f64;
    for p in &sets {
        for i in 0..21 {
            for k in 0..21 {
                let s = state(i as f64 / 20.0, k as f64 / 20.0);
                let pay = expected_payoffs(s, p);
                let pc = collaboration_probability(s);
                worst = worst.max((pay.junior + pay.senior - (pc * (1.0 + p.c_hat()) + 1.0 - pc)).abs());
            }
        }
    }
    ensure(worst < 1e-10, format!("max violation {worst:.2e} over 5 x 441 states"))
}

fn comparative_statics() -> Check {
    let h = 1e-5;
    let mut bad = 0;
    let mut count = 0;
    for c_hat in [0.1, 1.0] {
        let p = params(2.0, 2.0, 0.0, 0.0, c_hat);
        for i in 0..10 {
            for k in 0..10 {
                let (x, y) = (0.05 + 0.1 * i as f64, 0.05 + 0.1 * k as f64);
                let d_j = (expected_payoffs(state(x + h, y), &p).junior - expected_payoffs(state(x - h, y), &p).junior)
                    / (2.0 * h);
                let d_s = (expected_payoffs(state(x, y + h), &p).senior - expected_payoffs(state(x, y - h), &p).senior)
                    / (2.0 * h);
                count += 1;
                if !(d_j < 0.0 && d_s > 0.0) {
                    bad += 1;
                }
            }
        }
    }
    ensure(bad == 0, format!("{bad} of {count} states violate the signs"))
}

fn fixed_point_lines() -> Check {
    let p = params(2.0, 2.0, 0.0, 0.0, 1.0);
    let mut worst = 0.0f64;
    for k in 0..50 {
        let x = (k as f64 + 0.5) / 50.0;
        worst = worst.max(replicator_field(state(0.0, x), &p, MODE).norm());
        worst = worst.max(replicator_field(state(x, 1.0), &p, MODE).norm());
    }
    ensure(worst < 1e-12, format!("max field norm {worst:.2e} on 100 points"))
}

fn bistability() -> Check {
    let p = params(2.0, 2.0, 0.1, 0.05, 1.0);
    let cfg = IntegratorConfig::default();
    let low = integrate_trajectory(state(0.05, 0.05), &p, &cfg, MODE).unwrap().outcome;
    let high = integrate_trajectory(state(0.95, 0.95), &p, &cfg, MODE).unwrap().outcome;
    let r = basin_fractions(&p, 21, &cfg, MODE).unwrap();
    let ok = low.converged
        && low.label == OutcomeLabel::CNorm
        && high.converged
        && high.label == OutcomeLabel::INorm
        && r.fraction_c > 0.05
        && r.fraction_i > 0.05;
    ensure(
        ok,
        format!(
            "(0.05,0.05) -> {:?} at t={:.1}, (0.95,0.95) -> {:?} at t={:.1}, fraction_C={:.4}, fraction_I={:.4}",
            low.label, low.time, high.label, high.time, r.fraction_c, r.fraction_i
        ),
    )
}

fn red_king_direction() -> Check {
    let a_values: Vec<f64> = (2..=8).map(|k| 10.0 * k as f64).collect();
    let s = basin_sweep(
        &a_values,
        BiasParams::new(0.1, 0.05).unwrap(),
        1.0,
        21,
        &IntegratorConfig::default(),
        MODE,
        WjMode::Exact,
    )
    .map_err(|e| e.to_string())?;
    if !s.gaps.is_empty() || s.rows.len() != a_values.len() {
        return Err(format!("sweep has gaps: {:?}", s.gaps));
    }
    let tol = 1.0 / 441.0;
    let monotone = s
        .rows
        .windows(2)
        .all(|w| w[1].report.fraction_i >= w[0].report.fraction_i - tol);
    let at = |delta: f64| {
        s.rows
            .iter()
            .find(|r| (r.delta - delta).abs() < 1e-6)
            .map(|r| r.report.fraction_i)
    };
    let (plus, minus) = (at(0.2), at(-0.2));
    let series: Vec<String> = s
        .rows
        .iter()
        .map(|r| format!("{:+.1}:{:.3}", r.delta, r.report.fraction_i))
        .collect();
    let ok = monotone && matches!((plus, minus), (Some(p), Some(m)) if p > m);
    ensure(ok, format!("fraction_I by delta [{}]", series.join(" ")))
}

fn chi_effect() -> Check {
    let cfg = IntegratorConfig::default();
    let frac = |chi| {
        basin_fractions(&params(50.0, 50.0, 0.1, chi, 1.0), 21, &cfg, MODE)
            .unwrap()
            .fraction_i
    };
    let (lo, hi) = (frac(0.01), frac(0.1));
    ensure(hi >= lo, format!("fraction_I: chi=0.01 -> {lo:.4}, chi=0.1 -> {hi:.4}"))
}

fn inorm_oracle() -> Check {
    let s = stats(2.0, 2.0);
    let q = failure_report(Norm::I, &s, 0.3).unwrap().failure_probability;
    let mc = monte_carlo_failure(Norm::I, &s, 0.3, 1_000_000, 20240607).unwrap();
    let z = (mc.estimate - q) / mc.standard_error;
    ensure(
        (q - 0.5635).abs() < 1e-9 && z.abs() < 4.0,
        format!("quadrature {q:.12}, Monte Carlo {:.6} (z = {z:+.2})", mc.estimate),
    )
}

fn model2_limits() -> Check {
    let s = stats(2.0, 2.0);
    let mut parts = Vec::new();
    let mut ok = true;
    for norm in Norm::BOTH {
        let r = failure_report(norm, &s, 0.0).unwrap();
        ok &= r.failure_probability == 1.0 && r.public_good_loss == 0.0;
        parts.push(format!(
            "{norm} c_hat=0: fail={} loss={}",
            r.failure_probability, r.public_good_loss
        ));
    }
    let big = failure_report(Norm::I, &s, 10.0).unwrap().failure_probability;
    ok &= big == 0.0;
    parts.push(format!("I-norm c_hat=10: fail={big}"));
    ensure(ok, parts.join(", "))
}

fn second_contributor_band() -> Check {
    let r = cnorm_refusal_regions(&stats(2.0, 2.0), 0.15).unwrap();
    let close = |set: &IntervalSet, expected: &[(f64, f64)]| {
        set.intervals().len() == expected.len()
            && set
                .intervals()
                .iter()
                .zip(expected)
                .all(|(i, (lo, hi))| (i.lo - lo).abs() < 1e-9 && (i.hi - hi).abs() < 1e-9)
    };
    let senior = [(0.0, 0.209375), (0.5, 0.640625)];
    let junior = [(0.359375, 0.5), (0.790625, 1.0)];
    let show = |set: &IntervalSet| {
        set.intervals()
            .iter()
            .map(|i| format!("({:.6}, {:.6})", i.lo, i.hi))
            .collect::<Vec<_>>()
            .join(" ")
    };
    ensure(
        close(&r.senior, &senior) && close(&r.junior, &junior),
        format!("senior refuses {}, junior refuses {}", show(&r.senior), show(&r.junior)),
    )
}

fn norm_comparison() -> Check {
    let spec = GridSpec {
        mu: Axis {
            min: 0.05,
            max: 0.95,
            steps: 19,
        },
        c_hat: Axis {
            min: 0.01,
            max: 0.5,
            steps: 19,
        },
        shape_sum: 7.0,
        wj_mode: WjMode::Exact,
    };
    let cells = norm_comparison_grid(&spec).map_err(|e| e.to_string())?;
    let values: Vec<_> = cells.iter().filter_map(|c| c.value).collect();
    let c_better = values.iter().filter(|v| v.loss_c <= v.loss_i).count();
    let i_better = values.iter().filter(|v| v.loss_i < v.loss_c).count();
    ensure(
        values.len() == cells.len() && 2 * c_better > cells.len() && i_better > 0,
        format!(
            "C-norm weakly better on {c_better}/{} cells, I-norm strictly better on {i_better}",
            cells.len()
        ),
    )
}

fn determinism() -> Check {
    let configs = [
        "model = \"phase\"\nresolution = 7\n",
        "model = \"basin\"\nresolution = 5\n",
        "model = \"basin-sweep\"\nresolution = 3\na_values = [30, 50, 70]\n",
        "model = \"m2-failure\"\nmc_samples = 20000\nseed = 3\n",
        "model = \"m2-compare\"\nmu_steps = 7\nc_hat_steps = 5\n",
        "model = \"m2-preference\"\nmu_steps = 5\nc_hat_steps = 4\n",
        "model = \"derive-prior\"\nalpha = 3\nbeta = 5\n",
    ];
    let tmp = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut compared = 0;
    for (k, cfg) in configs.iter().enumerate() {
        let path = tmp.path().join(format!("run{k}.toml"));
        std::fs::write(&path, cfg).map_err(|e| e.to_string())?;
        let mut outputs = Vec::new();
        let mut written = String::new();
        for pass in 0..2 {
            let dir = tmp.path().join(format!("pass{pass}"));
            let out = Command::new(env!("CARGO_BIN_EXE_norm-dynamics"))
                .arg(&path)
                .arg("--out-dir")
                .arg(&dir)
                .output()
                .map_err(|e| e.to_string())?;
            if !out.status.success() {
                return Err(format!("{cfg:?} failed: {}", String::from_utf8_lossy(&out.stderr)));
            }
            written = String::from_utf8_lossy(&out.stdout).into_owned();
            outputs.push(dir);
        }
        for line in written.lines().filter(|l| l.ends_with(".csv")) {
            let name = std::path::Path::new(line).file_name().unwrap();
            let a = std::fs::read(outputs[0].join(name)).map_err(|e| e.to_string())?;
            let b = std::fs::read(outputs[1].join(name)).map_err(|e| e.to_string())?;
            if a != b {
                return Err(format!("{} differs between runs", name.to_string_lossy()));
            }
            compared += 1;
        }
    }
    ensure(
        compared >= configs.len(),
        format!("{compared} CSV files byte-identical across two runs"),
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("prior consistency", prior_consistency),
        ("credit conservation", credit_conservation),
        ("comparative statics", comparative_statics),
        ("fixed-point lines", fixed_point_lines),
        ("bistability", bistability),
        ("Red King direction", red_king_direction),
        ("Matthew effect", chi_effect),
        ("I-norm failure oracle", inorm_oracle),
        ("Model 2 limits", model2_limits),
        ("C-norm second-contributor band", second_contributor_band),
        ("norm comparison", norm_comparison),
        ("CLI determinism", determinism),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("[PASS] AC-{} {name}: {detail} ({secs:.1}s)", k + 1),
            Err(detail) => {
                failed += 1;
                println!("[FAIL] AC-{} {name}: {detail} ({secs:.1}s)", k + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
