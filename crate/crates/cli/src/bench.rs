//! Seeded tightness benchmark: family instances against exact disk counts.

use polyzero_core::bounds::{self, HALF_DISK};
use polyzero_core::families::{self, FamilySpec};
use polyzero_core::oracle::{aberth_roots, count_with_roots, CountMethod, OracleError, RootSet};
use polyzero_core::{BoundReport, Polynomial, TheoremId};
use rayon::prelude::*;

use crate::error::CliError;
use crate::render::real;

/// Rows whose nearest root is closer than this to the circle are skipped.
pub const MIN_BOUNDARY_MARGIN: f64 = 1e-6;

const GRID_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub struct BenchConfig {
    pub family: TheoremId,
    /// Inclusive degree range; instance `i` has degree `lo + i mod (hi - lo + 1)`.
    pub degrees: (usize, usize),
    pub seed: u64,
    pub count: usize,
    pub deltas: Vec<f64>,
    pub scale: f64,
    pub lambda: Option<usize>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub seed_index: usize,
    pub degree: usize,
    pub report: BoundReport,
    /// `None` when the row is skipped.
    pub exact_count: Option<usize>,
    pub boundary_margin: f64,
    pub max_root_modulus: Option<f64>,
}

impl BenchRow {
    pub fn skipped(&self) -> bool {
        self.exact_count.is_none()
    }

    pub fn slack(&self) -> Option<i64> {
        self.exact_count.map(|c| self.report.integer_bound as i64 - c as i64)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchOutcome {
    pub rows: Vec<BenchRow>,
    pub instances: usize,
}

impl BenchOutcome {
    pub fn skipped(&self) -> usize {
        self.rows.iter().filter(|r| r.skipped()).count()
    }

    pub fn violations(&self) -> usize {
        self.rows.iter().filter(|r| r.slack().is_some_and(|s| s < 0)).count()
    }

    pub fn summary(&self) -> String {
        let slacks: Vec<i64> = self.rows.iter().filter_map(BenchRow::slack).collect();
        let mean = if slacks.is_empty() { f64::NAN } else { slacks.iter().sum::<i64>() as f64 / slacks.len() as f64 };
        let max = slacks.iter().max().map(|m| m.to_string()).unwrap_or_else(|| "NaN".into());
        format!(
            "instances={} rows={} skipped={} mean_slack={mean:.4} max_slack={max} violations={}",
            self.instances,
            self.rows.len(),
            self.skipped(),
            self.violations()
        )
    }

    pub fn to_csv(&self, family: TheoremId) -> Result<String, CliError> {
        let with_modulus = family == TheoremId::EkA;
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut header = vec![
            "seed_index",
            "degree",
            "theorem",
            "delta",
            "m_value",
            "raw_bound",
            "integer_bound",
            "exact_count",
            "slack",
            "boundary_margin",
            "skipped_flag",
        ];
        if with_modulus {
            header.push("max_root_modulus");
        }
        w.write_record(&header)?;
        for r in &self.rows {
            let mut rec = vec![
                r.seed_index.to_string(),
                r.degree.to_string(),
                r.report.theorem.label().to_string(),
                real(r.report.delta),
                real(r.report.m_value),
                real(r.report.raw_bound),
                r.report.integer_bound.to_string(),
                r.exact_count.map(|c| c.to_string()).unwrap_or_default(),
                r.slack().map(|s| s.to_string()).unwrap_or_default(),
                real(r.boundary_margin),
                u8::from(r.skipped()).to_string(),
            ];
            if with_modulus {
                rec.push(r.max_root_modulus.map(real).unwrap_or_default());
            }
            w.write_record(&rec)?;
        }
        let bytes = w.into_inner().map_err(|e| CliError::Io(std::io::Error::other(e.to_string())))?;
        Ok(String::from_utf8(bytes).expect("csv output is ASCII"))
    }
}

/// Parses `start:stop:step` (inclusive within 1e-12), a comma list, or a
/// single value. Grid points are rounded to 12 decimals.
pub fn parse_delta_grid(text: &str) -> Result<Vec<f64>, CliError> {
    let bad = || CliError::Input(format!("invalid delta grid '{text}'"));
    let num = |s: &str| s.trim().parse::<f64>().ok().filter(|x| x.is_finite()).ok_or_else(bad);
    let parts: Vec<&str> = text.split(':').collect();
    let grid = match parts.as_slice() {
        [start, stop, step] => {
            let (start, stop, step) = (num(start)?, num(stop)?, num(step)?);
            if !(step > 0.0) || stop < start {
                return Err(bad());
            }
            let mut out = Vec::new();
            let mut k = 0u32;
            loop {
                let x = start + f64::from(k) * step;
                if x > stop + GRID_TOLERANCE {
                    break;
                }
                out.push(snap(x));
                k += 1;
                if k > 1_000_000 {
                    return Err(bad());
                }
            }
            out
        }
        [list] => list.split(',').map(num).collect::<Result<Vec<_>, _>>()?,
        _ => return Err(bad()),
    };
    if grid.is_empty() {
        return Err(bad());
    }
    Ok(grid)
}

fn snap(x: f64) -> f64 {
    (x * 1e12).round() / 1e12
}

/// Parses `n` or `lo:hi`.
pub fn parse_degrees(text: &str) -> Result<(usize, usize), CliError> {
    let bad = || CliError::Input(format!("invalid degree '{text}'"));
    let num = |s: &str| s.trim().parse::<usize>().map_err(|_| bad());
    let (lo, hi) = match text.split_once(':') {
        Some((a, b)) => (num(a)?, num(b)?),
        None => {
            let n = num(text)?;
            (n, n)
        }
    };
    if lo == 0 || hi < lo {
        return Err(bad());
    }
    Ok((lo, hi))
}

/// The bound a family is measured against at `delta`. Half-disk theorems
/// are replaced by their general-radius counterparts away from `δ = 1/2`.
pub fn bench_theorem(family: TheoremId, delta: f64) -> TheoremId {
    let half = delta == HALF_DISK;
    match family {
        TheoremId::EkA | TheoremId::ThmB if half => TheoremId::ThmB,
        TheoremId::ThmC if half => TheoremId::ThmC,
        TheoremId::ThmD if half => TheoremId::ThmD,
        TheoremId::EkA | TheoremId::ThmB | TheoremId::ThmC | TheoremId::ThmE => TheoremId::ThmE,
        TheoremId::ThmD | TheoremId::ThmF => TheoremId::ThmF,
        other => other,
    }
}

impl BenchConfig {
    fn spec(&self, index: usize) -> FamilySpec {
        let (lo, hi) = self.degrees;
        let degree = lo + index % (hi - lo + 1);
        let mut spec = FamilySpec::new(self.family, degree, self.seed, self.count).with_scale(self.scale);
        if let Some(l) = self.lambda {
            spec = spec.with_lambda(l);
        }
        spec
    }

    pub fn instance(&self, index: usize) -> Result<Polynomial, CliError> {
        families::instance(&self.spec(index), index).map_err(|e| CliError::Input(e.to_string()))
    }

    fn validate(&self) -> Result<(), CliError> {
        if !families::is_generated(self.family) {
            return Err(CliError::Input(format!("no generator for family {}", self.family)));
        }
        if let Some(&d) = self.deltas.iter().find(|&&d| !(d > 0.0 && d < 1.0)) {
            return Err(CliError::Input(format!("delta = {d} is outside the open interval (0, 1)")));
        }
        // surface infeasible specs before any work is scheduled
        self.instance(0).map(|_| ())
    }
}

fn instance_rows(cfg: &BenchConfig, index: usize) -> Result<Vec<BenchRow>, CliError> {
    let p = cfg.instance(index)?;
    let roots = aberth_roots(&p)?;
    let max_root_modulus = (cfg.family == TheoremId::EkA && roots.converged).then(|| roots.max_modulus());
    cfg.deltas
        .iter()
        .map(|&delta| {
            let report = bounds::best_for_theorem(&p, bench_theorem(cfg.family, delta), delta)?;
            let (exact_count, boundary_margin) = exact(&p, &roots, delta)?;
            Ok(BenchRow {
                seed_index: index,
                degree: p.degree(),
                report,
                exact_count,
                boundary_margin,
                max_root_modulus,
            })
        })
        .collect()
}

fn exact(p: &Polynomial, roots: &RootSet, delta: f64) -> Result<(Option<usize>, f64), CliError> {
    let margin = if roots.converged { roots.boundary_margin(delta) } else { f64::NAN };
    if !(margin >= MIN_BOUNDARY_MARGIN) {
        return Ok((None, margin));
    }
    match count_with_roots(p, roots, delta) {
        Ok(c) if c.method == CountMethod::CrossChecked => Ok((Some(c.count), margin)),
        Ok(_) | Err(OracleError::NotConverged(_)) => Ok((None, margin)),
        Err(e) => Err(e.into()),
    }
}

/// Runs the benchmark on `threads` workers (0 = rayon default). Rows come
/// back in (instance, δ) order whatever the schedule.
pub fn run(cfg: &BenchConfig, threads: usize) -> Result<BenchOutcome, CliError> {
    cfg.validate()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| CliError::Io(std::io::Error::other(e)))?;
    let per_instance: Vec<Vec<BenchRow>> =
        pool.install(|| (0..cfg.count).into_par_iter().map(|i| instance_rows(cfg, i)).collect::<Result<_, _>>())?;
    Ok(BenchOutcome { rows: per_instance.into_iter().flatten().collect(), instances: cfg.count })
}
