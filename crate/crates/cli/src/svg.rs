//! Minimal standalone SVG renderings of result tables.

use std::fmt::Write;
use std::path::Path;

use crate::error::CliError;
use crate::table::{write_file, ResultTable};

const CELL: f64 = 24.0;
const MARGIN: f64 = 48.0;

/// Colour midpoint of the diverging scale.
pub const NEUTRAL: &str = "#f7f7f7";
const NEGATIVE: (u8, u8, u8) = (0xb2, 0x18, 0x2b);
const POSITIVE: (u8, u8, u8) = (0x6e, 0x6e, 0x6e);
const NEUTRAL_RGB: (u8, u8, u8) = (0xf7, 0xf7, 0xf7);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scale {
    /// Centred at zero: negative red, positive grey.
    Diverging,
    /// Outcome label codes 0..=3.
    Labels,
}

#[derive(Debug, Clone, PartialEq)]
pub enum SvgKind<'a> {
    Heatmap {
        x: &'a str,
        y: &'a str,
        value: &'a str,
        scale: Scale,
    },
    /// Expects columns `p_j, p_s, dp_j, dp_s`.
    VectorField,
    /// Expects columns `row, lo, hi, kind` with kind 0 = success,
    /// 1 = junior refuses, 2 = senior refuses.
    IntervalDiagram { row_labels: &'a [&'a str] },
}

impl SvgKind<'_> {
    fn name(&self) -> &'static str {
        match self {
            SvgKind::Heatmap { .. } => "heatmap",
            SvgKind::VectorField => "vector-field",
            SvgKind::IntervalDiagram { .. } => "interval-diagram",
        }
    }
}

pub fn emit_svg(kind: &SvgKind, table: &ResultTable, title: &str, path: &Path) -> Result<(), CliError> {
    write_file(path, render_svg(kind, table, title)?.as_bytes())
}

pub fn render_svg(kind: &SvgKind, table: &ResultTable, title: &str) -> Result<String, CliError> {
    let col = |name: &str| {
        table.values(name).ok_or_else(|| CliError::Schema {
            kind: kind.name(),
            reason: format!("missing column `{name}`"),
        })
    };
    match kind {
        SvgKind::Heatmap { x, y, value, scale } => Ok(heatmap(&col(x)?, &col(y)?, &col(value)?, *scale, title, x, y)),
        SvgKind::VectorField => Ok(vector_field(
            &col("p_j")?,
            &col("p_s")?,
            &col("dp_j")?,
            &col("dp_s")?,
            title,
        )),
        SvgKind::IntervalDiagram { row_labels } => Ok(interval_diagram(
            &col("row")?,
            &col("lo")?,
            &col("hi")?,
            &col("kind")?,
            row_labels,
            title,
        )),
    }
}

fn header(width: f64, height: f64, title: &str) -> String {
    let mut s = String::new();
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0}" height="{height:.0}" viewBox="0 0 {width:.0} {height:.0}" font-family="sans-serif" font-size="11">"#
    )
    .unwrap();
    writeln!(
        s,
        r#"<text x="{:.1}" y="20" text-anchor="middle" font-size="13">{}</text>"#,
        width / 2.0,
        escape(title)
    )
    .unwrap();
    s
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

fn distinct(values: &[f64]) -> Vec<f64> {
    let mut v: Vec<f64> = values.iter().copied().filter(|x| !x.is_nan()).collect();
    v.sort_by(f64::total_cmp);
    v.dedup();
    v
}

fn lerp(a: (u8, u8, u8), b: (u8, u8, u8), t: f64) -> String {
    let mix = |x: u8, y: u8| (x as f64 + (y as f64 - x as f64) * t).round() as u8;
    format!("#{:02x}{:02x}{:02x}", mix(a.0, b.0), mix(a.1, b.1), mix(a.2, b.2))
}

fn diverging_colour(v: f64, max_abs: f64) -> String {
    if v.is_nan() {
        return "#ffffff".into();
    }
    if v == 0.0 || max_abs == 0.0 {
        return NEUTRAL.into();
    }
    let t = (v.abs() / max_abs).min(1.0);
    if v < 0.0 {
        lerp(NEUTRAL_RGB, NEGATIVE, t)
    } else {
        lerp(NEUTRAL_RGB, POSITIVE, t)
    }
}

fn label_colour(v: f64) -> &'static str {
    match v as i64 {
        0 => "#b2182b",
        1 => "#6e6e6e",
        2 => "#2166ac",
        _ => NEUTRAL,
    }
}

fn heatmap(xs: &[f64], ys: &[f64], vs: &[f64], scale: Scale, title: &str, x_name: &str, y_name: &str) -> String {
    let ux = distinct(xs);
    let uy = distinct(ys);
    let width = 2.0 * MARGIN + CELL * ux.len() as f64;
    let height = 2.0 * MARGIN + CELL * uy.len() as f64;
    let max_abs = vs.iter().filter(|v| v.is_finite()).fold(0.0f64, |m, v| m.max(v.abs()));
    let mut s = header(width, height, title);
    for ((&x, &y), &v) in xs.iter().zip(ys).zip(vs) {
        let (Some(i), Some(k)) = (ux.iter().position(|u| *u == x), uy.iter().position(|u| *u == y)) else {
            continue;
        };
        let fill = match scale {
            Scale::Diverging => diverging_colour(v, max_abs),
            Scale::Labels => label_colour(v).to_owned(),
        };
        // y grows upward
        let px = MARGIN + CELL * i as f64;
        let py = height - MARGIN - CELL * (k + 1) as f64;
        writeln!(
            s,
            r#"<rect x="{px:.1}" y="{py:.1}" width="{CELL:.1}" height="{CELL:.1}" fill="{fill}"/>"#
        )
        .unwrap();
    }
    axis_labels(&mut s, width, height, x_name, y_name, &ux, &uy);
    s.push_str("</svg>\n");
    s
}

fn axis_labels(s: &mut String, width: f64, height: f64, x_name: &str, y_name: &str, ux: &[f64], uy: &[f64]) {
    let (Some(x0), Some(x1), Some(y0), Some(y1)) = (ux.first(), ux.last(), uy.first(), uy.last()) else {
        return;
    };
    let bottom = height - MARGIN + 16.0;
    writeln!(s, r#"<text x="{MARGIN:.1}" y="{bottom:.1}">{x0:.3}</text>"#).unwrap();
    writeln!(
        s,
        r#"<text x="{:.1}" y="{bottom:.1}" text-anchor="end">{x1:.3}</text>"#,
        width - MARGIN
    )
    .unwrap();
    writeln!(
        s,
        r#"<text x="{:.1}" y="{:.1}" text-anchor="middle">{}</text>"#,
        width / 2.0,
        bottom + 14.0,
        escape(x_name)
    )
    .unwrap();
    writeln!(
        s,
        r#"<text x="{:.1}" y="{:.1}" text-anchor="end">{y0:.3}</text>"#,
        MARGIN - 4.0,
        height - MARGIN
    )
    .unwrap();
    writeln!(
        s,
        r#"<text x="{:.1}" y="{:.1}" text-anchor="end">{y1:.3}</text>"#,
        MARGIN - 4.0,
        MARGIN + 10.0
    )
    .unwrap();
    writeln!(
        s,
        r#"<text x="12" y="{:.1}" transform="rotate(-90 12 {:.1})" text-anchor="middle">{}</text>"#,
        height / 2.0,
        height / 2.0,
        escape(y_name)
    )
    .unwrap();
}

fn vector_field(pj: &[f64], ps: &[f64], dj: &[f64], ds: &[f64], title: &str) -> String {
    let n = distinct(pj).len().max(2);
    let side = CELL * 1.5 * n as f64;
    let width = 2.0 * MARGIN + side;
    let height = width;
    let spacing = side / (n - 1) as f64;
    let max_norm = dj
        .iter()
        .zip(ds)
        .map(|(a, b)| a.hypot(*b))
        .filter(|v| v.is_finite())
        .fold(0.0f64, f64::max);
    let scale = if max_norm > 0.0 { 0.8 * spacing / max_norm } else { 0.0 };

    let mut s = header(width, height, title);
    s.push_str(
        "<defs><marker id=\"head\" markerWidth=\"6\" markerHeight=\"6\" refX=\"5\" refY=\"3\" orient=\"auto\">\
         <path d=\"M0,0 L6,3 L0,6 z\" fill=\"#333333\"/></marker></defs>\n",
    );
    writeln!(
        s,
        r##"<path d="M{MARGIN:.1},{MARGIN:.1} H{:.1} V{:.1} H{MARGIN:.1} Z" fill="none" stroke="#999999"/>"##,
        MARGIN + side,
        MARGIN + side
    )
    .unwrap();
    for k in 0..pj.len() {
        let x1 = MARGIN + pj[k] * side;
        let y1 = MARGIN + (1.0 - ps[k]) * side;
        let x2 = x1 + dj[k] * scale;
        let y2 = y1 - ds[k] * scale;
        writeln!(
            s,
            r##"<line x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}" stroke="#333333" marker-end="url(#head)"/>"##
        )
        .unwrap();
    }
    axis_labels(&mut s, width, height, "p_j", "p_s", &[0.0, 1.0], &[0.0, 1.0]);
    s.push_str("</svg>\n");
    s
}

fn interval_diagram(rows: &[f64], lo: &[f64], hi: &[f64], kind: &[f64], labels: &[&str], title: &str) -> String {
    let band_rows = distinct(rows);
    let span = 400.0;
    let band = 22.0;
    let left = MARGIN + 40.0;
    let width = left + span + MARGIN;
    let height = 2.0 * MARGIN + (band + 10.0) * band_rows.len() as f64;
    let mut s = header(width, height, title);
    for (r, row) in band_rows.iter().enumerate() {
        let y = MARGIN + r as f64 * (band + 10.0);
        let label = labels
            .get(*row as usize)
            .copied()
            .map(str::to_owned)
            .unwrap_or_else(|| format!("{row}"));
        writeln!(
            s,
            r#"<text x="{:.1}" y="{:.1}" text-anchor="end">{}</text>"#,
            left - 6.0,
            y + 15.0,
            escape(&label)
        )
        .unwrap();
        for k in (0..rows.len()).filter(|&k| rows[k] == *row) {
            let fill = match kind[k] as i64 {
                0 => "#d9d9d9",
                1 => "#b2182b",
                _ => "#2166ac",
            };
            writeln!(
                s,
                r#"<rect x="{:.2}" y="{y:.1}" width="{:.2}" height="{band:.1}" fill="{fill}"/>"#,
                left + lo[k] * span,
                (hi[k] - lo[k]) * span
            )
            .unwrap();
        }
    }
    let base = height - MARGIN + 14.0;
    for t in [0.0, 0.5, 1.0] {
        writeln!(
            s,
            r#"<text x="{:.1}" y="{base:.1}" text-anchor="middle">{t}</text>"#,
            left + t * span
        )
        .unwrap();
    }
    writeln!(
        s,
        r#"<text x="{:.1}" y="{:.1}" text-anchor="middle">c_j</text>"#,
        left + span / 2.0,
        base + 14.0
    )
    .unwrap();
    s.push_str("</svg>\n");
    s
}
