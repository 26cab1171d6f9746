//! Dispatch from a resolved configuration to the model code and output files.

use std::path::{Path, PathBuf};

use normdyn_core::collaboration::{
    failure_report, monte_carlo_failure, norm_comparison_grid, preference_grid, GridCell,
};
use normdyn_core::dynamics::{basin_outcomes, basin_sweep, find_interior_equilibrium, stream_field_grid};
use normdyn_core::{BasinReport, GameParams, Norm};
use serde_json::json;

use crate::config::{Model, RunConfig};
use crate::error::CliError;
use crate::svg::{emit_svg, Scale, SvgKind};
use crate::table::{render_csv, render_json, write_file, ResultTable};

/// Runs the configured model and writes its outputs into `cfg.out_dir`.
///
/// Returns the written paths in creation order.
pub fn run_command(cfg: &RunConfig) -> Result<Vec<PathBuf>, CliError> {
    cfg.validate()?;
    let mut out = Outputs::new(cfg)?;
    match cfg.model {
        Model::Phase => phase(cfg, &mut out)?,
        Model::Basin => basin(cfg, &mut out)?,
        Model::BasinSweep => sweep(cfg, &mut out)?,
        Model::M2Failure => m2_failure(cfg, &mut out)?,
        Model::M2Compare => m2_compare(cfg, &mut out)?,
        Model::M2Preference => m2_preference(cfg, &mut out)?,
        Model::DerivePrior => derive_prior(cfg, &mut out)?,
    }
    Ok(out.written)
}

struct Outputs<'a> {
    cfg: &'a RunConfig,
    dir: &'a Path,
    written: Vec<PathBuf>,
}

impl<'a> Outputs<'a> {
    fn new(cfg: &'a RunConfig) -> Result<Self, CliError> {
        std::fs::create_dir_all(&cfg.out_dir).map_err(|e| CliError::io(&cfg.out_dir, e))?;
        Ok(Self {
            cfg,
            dir: &cfg.out_dir,
            written: Vec::new(),
        })
    }

    fn table<S: Into<String>>(&self, columns: impl IntoIterator<Item = S>) -> ResultTable {
        let metadata = vec![
            format!("normdyn {}", env!("CARGO_PKG_VERSION")),
            self.cfg.to_toml().trim_end().to_owned(),
        ];
        ResultTable::new(columns, metadata)
    }

    fn path(&self, suffix: &str, ext: &str) -> PathBuf {
        self.dir.join(format!("{}{suffix}.{ext}", self.cfg.model))
    }

    fn csv(&mut self, suffix: &str, table: &ResultTable) -> Result<(), CliError> {
        let path = self.path(suffix, "csv");
        write_file(&path, &render_csv(table)?)?;
        self.written.push(path);
        Ok(())
    }

    fn json(&mut self, table: &ResultTable, details: serde_json::Value) -> Result<(), CliError> {
        let path = self.path("", "json");
        write_file(&path, &render_json(table, self.cfg, details))?;
        self.written.push(path);
        Ok(())
    }

    fn svg(&mut self, suffix: &str, kind: SvgKind, table: &ResultTable, title: &str) -> Result<(), CliError> {
        let path = self.path(suffix, "svg");
        emit_svg(&kind, table, title, &path)?;
        self.written.push(path);
        Ok(())
    }
}

fn game_params(cfg: &RunConfig) -> Result<GameParams, CliError> {
    Ok(GameParams::new(cfg.stats()?, cfg.bias()?, cfg.c_hat)?)
}

fn phase(cfg: &RunConfig, out: &mut Outputs) -> Result<(), CliError> {
    let params = game_params(cfg)?;
    let field = stream_field_grid(&params, cfg.resolution, cfg.payoff_mode)?;
    let mut t = out.table(["p_j", "p_s", "dp_j", "dp_s", "norm"]);
    for s in &field {
        t.push(vec![
            s.state.p_j,
            s.state.p_s,
            s.field.dp_j,
            s.field.dp_s,
            s.field.norm(),
        ]);
    }
    let eq = find_interior_equilibrium(&params, cfg.payoff_mode);
    out.csv("", &t)?;
    out.json(&t, json!({ "interior_equilibrium": eq }))?;
    out.svg("", SvgKind::VectorField, &t, "replicator field")
}

fn basin(cfg: &RunConfig, out: &mut Outputs) -> Result<(), CliError> {
    let params = game_params(cfg)?;
    let labels = basin_outcomes(&params, cfg.resolution, &cfg.integrator(), cfg.payoff_mode)?;
    let mut t = out.table(["p_j", "p_s", "label"]);
    for (s, label) in &labels {
        t.push(vec![s.p_j, s.p_s, label.code() as f64]);
    }
    let report = BasinReport::from_labels(cfg.resolution, labels.iter().map(|(_, l)| *l));
    out.csv("", &t)?;
    out.json(&t, json!({ "report": report, "label_codes": label_codes() }))?;
    let kind = SvgKind::Heatmap {
        x: "p_j",
        y: "p_s",
        value: "label",
        scale: Scale::Labels,
    };
    out.svg(
        "",
        kind,
        &t,
        "basins (red: C-norm, grey: I-norm, blue: no collaboration)",
    )
}

fn label_codes() -> serde_json::Value {
    json!({ "0": "c-norm", "1": "i-norm", "2": "no-collaboration", "3": "other" })
}

fn sweep(cfg: &RunConfig, out: &mut Outputs) -> Result<(), CliError> {
    let s = basin_sweep(
        &cfg.a_values,
        cfg.bias()?,
        cfg.c_hat,
        cfg.resolution,
        &cfg.integrator(),
        cfg.payoff_mode,
        cfg.wj_mode,
    )?;
    let mut t = out.table(["a", "delta", "fraction_I", "fraction_C", "fraction_other"]);
    for gap in &s.gaps {
        t.metadata.push(format!("gap a = {}: {}", gap.a, gap.reason));
    }
    for row in &s.rows {
        let r = &row.report;
        t.push(vec![row.a, row.delta, r.fraction_i, r.fraction_c, r.fraction_other]);
    }
    out.csv("", &t)?;
    out.json(&t, json!({ "rows": s.rows, "gaps": s.gaps }))
}

fn m2_failure(cfg: &RunConfig, out: &mut Outputs) -> Result<(), CliError> {
    let stats = cfg.stats()?;
    let prior = *stats.require_prior()?;
    let mut t = out.table([
        "norm",
        "c_hat",
        "failure_probability",
        "public_good_loss",
        "junior_refusal_mass",
        "senior_refusal_mass",
        "mc_estimate",
        "mc_standard_error",
    ]);
    let mut bands = out.table(["row", "lo", "hi", "kind"]);
    let mut reports = Vec::new();
    for &norm in cfg.norm.norms() {
        let r = failure_report(norm, &stats, cfg.c_hat)?;
        let (mc, se) = if cfg.mc_samples > 0 {
            let m = monte_carlo_failure(norm, &stats, cfg.c_hat, cfg.mc_samples, cfg.seed)?;
            (m.estimate, m.standard_error)
        } else {
            (f64::NAN, f64::NAN)
        };
        t.push(vec![
            norm.code() as f64,
            cfg.c_hat,
            r.failure_probability,
            r.public_good_loss,
            r.junior_refuses.mass(&prior)?,
            r.senior_refuses.mass(&prior)?,
            mc,
            se,
        ]);
        let row = norm.code() as f64;
        for (kind, set) in [(0.0, &r.success), (1.0, &r.junior_refuses), (2.0, &r.senior_refuses)] {
            for i in set.intervals() {
                bands.push(vec![row, i.lo, i.hi, kind]);
            }
        }
        reports.push(r);
    }
    out.csv("", &t)?;
    out.csv("-intervals", &bands)?;
    out.json(
        &t,
        json!({ "norm_codes": { "0": "C-norm", "1": "I-norm" }, "reports": reports }),
    )?;
    let labels = [Norm::C.to_string(), Norm::I.to_string()];
    let labels: Vec<&str> = labels.iter().map(String::as_str).collect();
    out.svg(
        "",
        SvgKind::IntervalDiagram { row_labels: &labels },
        &bands,
        "outcome by c_j (grey: success, red: junior refuses, blue: senior refuses)",
    )
}

fn grid_details<T>(cells: &[GridCell<T>]) -> serde_json::Value {
    let failed: Vec<_> = cells
        .iter()
        .filter_map(|c| {
            c.error
                .as_ref()
                .map(|e| json!({ "mu_j": c.mu_j, "c_hat": c.c_hat, "error": e }))
        })
        .collect();
    json!({ "failed_cells": failed })
}

fn m2_compare(cfg: &RunConfig, out: &mut Outputs) -> Result<(), CliError> {
    let cells = norm_comparison_grid(&cfg.grid())?;
    let mut t = out.table([
        "mu_j",
        "c_hat",
        "fail_c",
        "fail_i",
        "loss_c",
        "loss_i",
        "fail_diff",
        "loss_diff",
    ]);
    let mut c_better = 0usize;
    for c in &cells {
        let row = match &c.value {
            Some(v) => {
                c_better += usize::from(v.loss_diff() <= 0.0);
                vec![v.fail_c, v.fail_i, v.loss_c, v.loss_i, v.fail_diff(), v.loss_diff()]
            }
            None => vec![f64::NAN; 6],
        };
        t.push([vec![c.mu_j, c.c_hat], row].concat());
    }
    let mut details = grid_details(&cells);
    details["cells_c_weakly_better"] = json!(c_better);
    details["sign_convention"] = json!("diff = C - I; negative means the C-norm is better");
    out.csv("", &t)?;
    out.json(&t, details)?;
    let kind = SvgKind::Heatmap {
        x: "mu_j",
        y: "c_hat",
        value: "loss_diff",
        scale: Scale::Diverging,
    };
    out.svg("", kind, &t, "public-good loss, C minus I (red: C-norm better)")
}

fn m2_preference(cfg: &RunConfig, out: &mut Outputs) -> Result<(), CliError> {
    let cells = preference_grid(&cfg.grid())?;
    let mut t = out.table(["mu_j", "c_hat", "junior_pref", "senior_pref"]);
    for c in &cells {
        let (j, s) = c.value.map_or((f64::NAN, f64::NAN), |v| (v.junior_pref, v.senior_pref));
        t.push(vec![c.mu_j, c.c_hat, j, s]);
    }
    let mut details = grid_details(&cells);
    details["sign_convention"] =
        json!("pref = payoff under C - payoff under I; positive means the C-norm is preferred");
    out.csv("", &t)?;
    out.json(&t, details)?;
    for (suffix, col, who) in [
        ("-junior", "junior_pref", "Junior"),
        ("-senior", "senior_pref", "Senior"),
    ] {
        let kind = SvgKind::Heatmap {
            x: "mu_j",
            y: "c_hat",
            value: col,
            scale: Scale::Diverging,
        };
        out.svg(
            suffix,
            kind,
            &t,
            &format!("{who} payoff, C minus I (grey: prefers C-norm)"),
        )?;
    }
    Ok(())
}

fn derive_prior(cfg: &RunConfig, out: &mut Outputs) -> Result<(), CliError> {
    let stats = cfg.stats()?;
    let mut t = out.table(["alpha", "beta", "w_j", "b_j", "b_s", "mu_j", "delta"]);
    t.push(vec![
        cfg.alpha.unwrap_or(f64::NAN),
        cfg.beta.unwrap_or(f64::NAN),
        stats.w_j(),
        stats.b_j(),
        stats.b_s(),
        stats.mu_j(),
        stats.delta(),
    ]);
    out.csv("", &t)?;
    out.json(&t, json!({}))
}
