//! Table, JSON and CSV rendering of reports.

use std::fmt::Write as _;

use polyzero_core::{BoundReport, DiskCountResult, HypothesisReport, TheoremId, Witness};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

/// Reals with 17 significant digits, locale-free.
pub fn real(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else if x.is_nan() {
        "NaN".to_string()
    } else if x > 0.0 {
        "inf".to_string()
    } else {
        "-inf".to_string()
    }
}

/// Short human form for tables.
fn short(x: f64) -> String {
    if x == x.trunc() && x.abs() < 1e15 {
        format!("{x}")
    } else {
        format!("{x:.6}")
    }
}

/// Serializable mirror of `BoundReport`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundRow {
    pub theorem: String,
    pub delta: f64,
    pub m_value: f64,
    pub raw_bound: f64,
    pub integer_bound: usize,
    pub clamped: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beta: Option<f64>,
}

impl From<&BoundReport> for BoundRow {
    fn from(r: &BoundReport) -> Self {
        let w = r.witness.unwrap_or_else(|| Witness::plain(r.theorem));
        Self {
            theorem: r.theorem.label().to_string(),
            delta: r.delta,
            m_value: r.m_value,
            raw_bound: r.raw_bound,
            integer_bound: r.integer_bound,
            clamped: r.clamped,
            lambda: w.lambda,
            t: w.t,
            s: w.s,
            alpha: w.alpha,
            beta: w.beta,
        }
    }
}

fn witness_params(w: &Witness) -> String {
    let mut parts = Vec::new();
    if let Some(l) = w.lambda {
        parts.push(format!("lambda={l}"));
    }
    if let Some(t) = w.t {
        parts.push(format!("t={}", short(t)));
    }
    if let Some(s) = w.s {
        parts.push(format!("s={}", short(s)));
    }
    if let Some(a) = w.alpha {
        parts.push(format!("alpha={}", short(a)));
    }
    if let Some(b) = w.beta {
        parts.push(format!("beta={}", short(b)));
    }
    parts.join(" ")
}

pub fn hypothesis_table(report: &HypothesisReport, degree: usize) -> String {
    let mut out = String::new();
    if degree == 0 {
        out.push_str("degree 0: a nonzero constant has no zeros; every counting bound is 0\n");
    }
    for id in TheoremId::ALL {
        let witnesses: Vec<&Witness> = report.witnesses_for(id).collect();
        if witnesses.is_empty() {
            let reason = report.rejection(id).unwrap_or("");
            let _ = writeln!(out, "{:<6} REJECTED   {reason}", id.label());
        } else {
            for w in witnesses {
                let _ = writeln!(out, "{:<6} SATISFIED  {}", id.label(), witness_params(w));
            }
        }
    }
    // trailing spaces from parameter-less witnesses
    out.lines().map(str::trim_end).collect::<Vec<_>>().join("\n") + "\n"
}

#[derive(Serialize)]
struct HypothesisJson<'a> {
    degree: usize,
    theorems: Vec<TheoremJson<'a>>,
}

#[derive(Serialize)]
struct TheoremJson<'a> {
    theorem: &'static str,
    satisfied: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    reason: Option<&'a str>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    witnesses: Vec<WitnessJson>,
}

#[derive(Serialize)]
struct WitnessJson {
    #[serde(skip_serializing_if = "Option::is_none")]
    lambda: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    t: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    s: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    alpha: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    beta: Option<f64>,
}

pub fn hypothesis_json(report: &HypothesisReport, degree: usize) -> Result<String, CliError> {
    let theorems = TheoremId::ALL
        .iter()
        .map(|&id| {
            let witnesses: Vec<WitnessJson> = report
                .witnesses_for(id)
                .map(|w| WitnessJson { lambda: w.lambda, t: w.t, s: w.s, alpha: w.alpha, beta: w.beta })
                .collect();
            TheoremJson {
                theorem: id.label(),
                satisfied: report.satisfies(id),
                reason: report.rejection(id),
                witnesses,
            }
        })
        .collect();
    to_json(&HypothesisJson { degree, theorems })
}

pub fn hypothesis_csv(report: &HypothesisReport) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["theorem", "satisfied", "reason", "lambda", "t", "s", "alpha", "beta"])?;
    let opt = |x: Option<f64>| x.map(real).unwrap_or_default();
    for id in TheoremId::ALL {
        let witnesses: Vec<&Witness> = report.witnesses_for(id).collect();
        if witnesses.is_empty() {
            let reason = report.rejection(id).unwrap_or("");
            w.write_record([id.label(), "false", reason, "", "", "", "", ""])?;
        }
        for wit in witnesses {
            w.write_record([
                id.label().to_string(),
                "true".to_string(),
                String::new(),
                wit.lambda.map(|l| l.to_string()).unwrap_or_default(),
                opt(wit.t),
                opt(wit.s),
                opt(wit.alpha),
                opt(wit.beta),
            ])?;
        }
    }
    finish_csv(w)
}

fn finish_csv(w: csv::Writer<Vec<u8>>) -> Result<String, CliError> {
    let bytes = w.into_inner().map_err(|e| CliError::Io(std::io::Error::other(e.to_string())))?;
    Ok(String::from_utf8(bytes).expect("csv output is ASCII"))
}

fn to_json<T: Serialize>(value: &T) -> Result<String, CliError> {
    serde_json::to_string_pretty(value).map(|s| s + "\n").map_err(|e| CliError::Io(std::io::Error::other(e)))
}

pub fn bounds_table(rows: &[BoundReport], notes: &[String]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{:<7} {:>6} {:>14} {:>14} {:>8}  witness", "theorem", "delta", "M", "raw_bound", "integer");
    for r in rows {
        let w = r.witness.map(|w| witness_params(&w)).unwrap_or_default();
        let flag = match (r.clamped, w.is_empty()) {
            (false, _) => "",
            (true, true) => "(clamped to degree)",
            (true, false) => " (clamped to degree)",
        };
        let _ = writeln!(
            out,
            "{:<7} {:>6} {:>14.6} {:>14.6} {:>8}  {w}{flag}",
            r.theorem.label(),
            r.delta,
            r.m_value,
            r.raw_bound,
            r.integer_bound
        );
    }
    for n in notes {
        let _ = writeln!(out, "note: {n}");
    }
    out.lines().map(str::trim_end).collect::<Vec<_>>().join("\n") + "\n"
}

pub fn bounds_json(rows: &[BoundReport]) -> Result<String, CliError> {
    let rows: Vec<BoundRow> = rows.iter().map(BoundRow::from).collect();
    to_json(&rows)
}

/// Re-renders a bounds JSON document; idempotent on this module's output.
pub fn rerender_bounds_json(text: &str) -> Result<String, CliError> {
    let rows: Vec<BoundRow> =
        serde_json::from_str(text).map_err(|e| CliError::Input(format!("invalid bounds document: {e}")))?;
    to_json(&rows)
}

pub fn bounds_csv(rows: &[BoundReport]) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([
        "theorem",
        "delta",
        "m_value",
        "raw_bound",
        "integer_bound",
        "clamped",
        "lambda",
        "t",
        "s",
        "alpha",
        "beta",
    ])?;
    let opt = |x: Option<f64>| x.map(real).unwrap_or_default();
    for r in rows {
        let row = BoundRow::from(r);
        w.write_record([
            row.theorem,
            real(row.delta),
            real(row.m_value),
            real(row.raw_bound),
            row.integer_bound.to_string(),
            row.clamped.to_string(),
            row.lambda.map(|l| l.to_string()).unwrap_or_default(),
            opt(row.t),
            opt(row.s),
            opt(row.alpha),
            opt(row.beta),
        ])?;
    }
    finish_csv(w)
}

#[derive(Serialize)]
struct CountJson {
    count: usize,
    method: &'static str,
    boundary_margin: f64,
    radius: f64,
}

pub fn count_text(c: &DiskCountResult, format: Format) -> Result<String, CliError> {
    match format {
        Format::Json => to_json(&CountJson {
            count: c.count,
            method: c.method.label(),
            boundary_margin: c.boundary_margin,
            radius: c.radius,
        }),
        Format::Csv => Ok(format!(
            "count,method,boundary_margin,radius\n{},{},{},{}\n",
            c.count,
            c.method.label(),
            real(c.boundary_margin),
            real(c.radius)
        )),
        Format::Table => Ok(format!(
            "count: {}\nmethod: {}\nboundary_margin: {}\nradius: {}\n",
            c.count,
            c.method.label(),
            real(c.boundary_margin),
            c.radius
        )),
    }
}
