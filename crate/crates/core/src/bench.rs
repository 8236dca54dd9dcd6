//! Batch commands behind the `gmq` binary: node generation, convergence
//! sweeps, the kernel property suite and gnuplot script emission.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use rayon::prelude::*;

use crate::assembly::{assemble_detailed, AssemblyParams, DEFAULT_DELTA};
use crate::cube::{CubeRuleFactory, CubeRuleKind};
use crate::error::{Error, Result};
use crate::kernel_check::{run_kernel_check, KernelCheckReport};
use crate::wce::{rate_fit, wce_1d, wce_md, ErrorReport, DEFAULT_TRUNCATION};

/// Worker cap; `0` or unset leaves the choice to rayon.
pub const THREADS_ENV: &str = "GMQ_THREADS";

/// Smoothness values of the reference rate experiments.
pub const DEFAULT_S_VALUES: [f64; 5] = [1.1, 1.7, 1.8, 2.7, 2.8];
/// Smoothness values below one.
pub const LOW_S_VALUES: [f64; 3] = [0.6, 0.8, 1.0];

/// `2^5, ..., 2^12`.
pub fn default_n_grid() -> Vec<u64> {
    (5..=12).map(|p| 1u64 << p).collect()
}

fn write_file(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents).map_err(|e| Error::io(path, e))
}

fn thread_pool() -> Result<rayon::ThreadPool> {
    let threads = std::env::var(THREADS_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .unwrap_or(0);
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::Usage(format!("cannot start worker pool: {e}")))
}

#[derive(Debug, Clone, PartialEq)]
pub struct NodesConfig {
    pub params: AssemblyParams,
    pub base: CubeRuleKind,
    pub apply_psi: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct NodesSummary {
    pub node_count: usize,
    pub radius_bound: f64,
    pub csv: String,
}

pub fn build_nodes(cfg: &NodesConfig) -> Result<NodesSummary> {
    let factory = CubeRuleFactory::new(cfg.base, cfg.apply_psi);
    let assembly = assemble_detailed(&factory, &cfg.params)?;
    Ok(NodesSummary {
        node_count: assembly.rule.len(),
        radius_bound: cfg.params.radius_bound(),
        csv: assembly.rule.to_csv(),
    })
}

/// Writes the assembled rule as CSV to `out`.
pub fn cmd_nodes(cfg: &NodesConfig, out: &Path) -> Result<NodesSummary> {
    let summary = build_nodes(cfg)?;
    write_file(out, &summary.csv)?;
    Ok(summary)
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub s_values: Vec<f64>,
    pub n_grid: Vec<u64>,
    pub m: usize,
    pub delta: f64,
    pub dim: usize,
    pub base: CubeRuleKind,
    pub apply_psi: bool,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            s_values: DEFAULT_S_VALUES.to_vec(),
            n_grid: default_n_grid(),
            m: DEFAULT_TRUNCATION,
            delta: DEFAULT_DELTA,
            dim: 1,
            base: CubeRuleKind::Midpoint1D,
            apply_psi: true,
        }
    }
}

impl SweepConfig {
    pub fn validate(&self) -> Result<()> {
        if self.s_values.is_empty() || self.s_values.iter().any(|&s| s <= 0.5 || !s.is_finite()) {
            return Err(Error::Usage("every s must exceed 1/2".into()));
        }
        if self.n_grid.is_empty() || self.n_grid.iter().any(|&n| n < 2) {
            return Err(Error::Usage("n grid entries must be >= 2".into()));
        }
        if self.n_grid.windows(2).any(|w| w[1] <= w[0]) {
            return Err(Error::Usage("n grid must be strictly increasing".into()));
        }
        if self.m == 0 {
            return Err(Error::Usage("truncation m must be >= 1".into()));
        }
        if self.dim != self.base.dimension() {
            return Err(Error::Usage(format!(
                "base rule {:?} is {}-dimensional, --dim is {}",
                self.base,
                self.base.dimension(),
                self.dim
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepResult {
    /// Rows in canonical `(s, n)` order.
    pub rows: Vec<ErrorReport>,
    /// Fitted slope per `s`, in the order of `s_values`; `None` if the fit was impossible.
    pub slopes: Vec<(f64, Option<f64>)>,
}

impl SweepResult {
    pub fn to_csv(&self) -> String {
        let mut out = String::from(ErrorReport::CSV_HEADER);
        out.push('\n');
        for r in &self.rows {
            out.push_str(&r.csv_row());
            out.push('\n');
        }
        for (s, slope) in &self.slopes {
            match slope {
                Some(v) => writeln!(out, "# slope s={s}: {v:.16e}"),
                None => writeln!(out, "# slope s={s}: nan"),
            }
            .expect("writing to a String");
        }
        out
    }

    pub fn slope(&self, s: f64) -> Option<f64> {
        self.slopes
            .iter()
            .find(|(v, _)| *v == s)
            .and_then(|(_, sl)| *sl)
    }

    pub fn errors_for(&self, s: f64) -> Vec<f64> {
        self.rows
            .iter()
            .filter(|r| r.s == s)
            .map(|r| r.err)
            .collect()
    }
}

/// Error of one sweep point: assemble with `a = s` and evaluate `err_m`.
pub fn sweep_point(cfg: &SweepConfig, s: f64, n: u64) -> Result<ErrorReport> {
    let params = AssemblyParams::new(cfg.dim, s, cfg.delta, n)?;
    let factory = CubeRuleFactory::new(cfg.base, cfg.apply_psi);
    let rule = assemble_detailed(&factory, &params)?.rule;
    let err = if cfg.dim == 1 {
        wce_1d(&rule, s, cfg.m)?
    } else {
        wce_md(&rule, s, cfg.m + 1)?
    };
    Ok(ErrorReport {
        n_requested: n,
        n_actual: rule.len() as u64,
        s,
        m: cfg.m,
        err,
    })
}

/// Runs the sweep; points are evaluated in parallel but reported in `(s, n)` order.
pub fn run_sweep(cfg: &SweepConfig) -> Result<SweepResult> {
    cfg.validate()?;
    let jobs: Vec<(f64, u64)> = cfg
        .s_values
        .iter()
        .flat_map(|&s| cfg.n_grid.iter().map(move |&n| (s, n)))
        .collect();
    let pool = thread_pool()?;
    let rows = pool.install(|| {
        jobs.par_iter()
            .map(|&(s, n)| sweep_point(cfg, s, n))
            .collect::<Result<Vec<_>>>()
    })?;
    let slopes = cfg
        .s_values
        .iter()
        .map(|&s| {
            let pts: Vec<(u64, f64)> = rows
                .iter()
                .filter(|r| r.s == s)
                .map(|r| (r.n_requested, r.err))
                .collect();
            (s, rate_fit(&pts).ok())
        })
        .collect();
    Ok(SweepResult { rows, slopes })
}

pub fn cmd_sweep(cfg: &SweepConfig, out: &Path) -> Result<SweepResult> {
    let result = run_sweep(cfg)?;
    write_file(out, &result.to_csv())?;
    Ok(result)
}

pub fn cmd_kernel_check(seed: u64, samples: usize) -> Result<KernelCheckReport> {
    if samples == 0 {
        return Err(Error::Usage("--samples must be >= 1".into()));
    }
    run_kernel_check(seed, samples)
}

/// Parses a sweep CSV; `#` lines and blank lines are skipped.
pub fn parse_sweep_csv(text: &str) -> Result<Vec<ErrorReport>> {
    let mut rows = Vec::new();
    let mut header_seen = false;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if !header_seen {
            if line != ErrorReport::CSV_HEADER {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("expected header `{}`", ErrorReport::CSV_HEADER),
                });
            }
            header_seen = true;
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 5 {
            return Err(Error::Parse {
                line: line_no,
                message: format!("expected 5 fields, found {}", fields.len()),
            });
        }
        let bad = |what: &str| Error::Parse {
            line: line_no,
            message: format!("invalid {what}"),
        };
        let row = ErrorReport {
            n_requested: fields[0].parse().map_err(|_| bad("n_requested"))?,
            n_actual: fields[1].parse().map_err(|_| bad("n_actual"))?,
            s: fields[2].parse().map_err(|_| bad("s"))?,
            m: fields[3].parse().map_err(|_| bad("m"))?,
            err: fields[4].parse().map_err(|_| bad("err"))?,
        };
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(Error::Parse {
            line: text.lines().count(),
            message: "no data rows".into(),
        });
    }
    Ok(rows)
}

/// Gnuplot script with one inline data block per `s` and an `n^{-s}` guide
/// anchored at the first point of each block.
pub fn render_plot_script(rows: &[ErrorReport]) -> String {
    let mut groups: BTreeMap<u64, (f64, Vec<&ErrorReport>)> = BTreeMap::new();
    for r in rows {
        groups
            .entry(r.s.to_bits())
            .or_insert_with(|| (r.s, Vec::new()))
            .1
            .push(r);
    }
    let mut blocks: Vec<(f64, Vec<&ErrorReport>)> = groups.into_values().collect();
    blocks.sort_by(|a, b| a.0.total_cmp(&b.0));

    let mut out = String::new();
    out.push_str("# worst-case error against requested node count\n");
    out.push_str("set terminal pngcairo size 900,650\n");
    out.push_str("set output 'wce.png'\n");
    out.push_str("set logscale xy\n");
    out.push_str("set xlabel 'n'\n");
    out.push_str("set ylabel 'err_m'\n");
    out.push_str("set key outside right\n");
    out.push_str("set grid\n");
    for (i, (_, rows)) in blocks.iter().enumerate() {
        let _ = writeln!(out, "$data{i} << EOD");
        for r in rows {
            let _ = writeln!(out, "{} {:.16e}", r.n_requested, r.err);
        }
        out.push_str("EOD\n");
    }
    out.push_str("plot \\\n");
    let mut terms = Vec::new();
    for (i, (s, rows)) in blocks.iter().enumerate() {
        terms.push(format!(
            "  $data{i} using 1:2 with linespoints lw 2 title 's={s}'"
        ));
        let first = rows[0];
        let c = first.err * (first.n_requested as f64).powf(*s);
        terms.push(format!(
            "  {c:.16e}*x**(-{s}) with lines dashtype 2 lc {} title 'n^{{-{s}}}'",
            i + 1
        ));
    }
    out.push_str(&terms.join(", \\\n"));
    out.push('\n');
    out
}

pub fn cmd_plot(input: &Path, output: &Path) -> Result<()> {
    let text = fs::read_to_string(input).map_err(|e| Error::io(input, e))?;
    let rows = parse_sweep_csv(&text)?;
    write_file(output, &render_plot_script(&rows))
}

/// Default output path for a command when `--out` is omitted.
pub fn default_output(command: &str) -> PathBuf {
    PathBuf::from(match command {
        "nodes" => "nodes.csv",
        "sweep" => "sweep.csv",
        _ => "plot.gp",
    })
}
