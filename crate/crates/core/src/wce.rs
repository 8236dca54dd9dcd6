//! Worst-case integration error over the unit ball of the Hermite space
//! `H^s(R^d, γ)`, whose norm weights the coefficient of `Π_j H_{k_j}` by
//! `Π_j (k_j + 1)^s`.
//!
//! For a rule `(x_i, λ_i)` the squared error is
//!
//! ```text
//! (1 - Σ λ_i)² + Σ_{k != 0} Π_j (k_j+1)^{-s} (Σ_i λ_i Π_j H_{k_j}(x_{i,j}))²
//! ```
//!
//! truncated to `k <= m` in one dimension and to the hyperbolic cross
//! `Π_j (k_j + 1) <= M` in general.
//!
//! Accumulation order is fixed: each moment `Σ_i λ_i H_k(x_i)` adds nodes in
//! stored order, then the weighted squares are added with `k` ascending (in
//! hyperbolic-cross order for `d > 1`). Results are therefore bit-reproducible.

use crate::error::{Error, Result};
use crate::hermite::hermite_sweep;
use crate::rule::QuadratureRule;

/// Truncation degree used by the reference experiments.
pub const DEFAULT_TRUNCATION: usize = 30_000;

fn check_inputs(rule: &QuadratureRule, s: f64) -> Result<()> {
    if s <= 0.5 || !s.is_finite() {
        return Err(Error::domain(format!(
            "smoothness must exceed 1/2, got {s}"
        )));
    }
    for (x, w) in rule.iter() {
        if !w.is_finite() || x.iter().any(|v| !v.is_finite()) {
            return Err(Error::Evaluation {
                node: x.to_vec(),
                value: w,
            });
        }
    }
    Ok(())
}

/// `Σ_i λ_i H_k(x_i)` for `k = 0..=m`, one recurrence sweep per node.
pub fn hermite_moments_1d(rule: &QuadratureRule, m: usize) -> Vec<f64> {
    let mut sums = vec![0.0; m + 1];
    for (x, w) in rule.iter() {
        hermite_sweep(x[0], m, |k, h| sums[k] += w * h);
    }
    sums
}

/// Truncated worst-case error `err_m` of a one-dimensional rule.
pub fn wce_1d(rule: &QuadratureRule, s: f64, m: usize) -> Result<f64> {
    if rule.dimension() != 1 {
        return Err(Error::domain(format!(
            "wce_1d needs a one-dimensional rule, got dimension {}",
            rule.dimension()
        )));
    }
    if m == 0 {
        return Err(Error::domain("truncation degree m must be >= 1"));
    }
    check_inputs(rule, s)?;
    if rule.is_empty() {
        // no nodes: every moment vanishes and the defect is 1
        return Ok(1.0);
    }
    let sums = hermite_moments_1d(rule, m);
    let defect = 1.0 - rule.weight_sum();
    let mut total = defect * defect;
    for (k, &c) in sums.iter().enumerate().skip(1) {
        total += ((k + 1) as f64).powf(-s) * (c * c);
    }
    Ok(total.sqrt())
}

/// Nonzero multi-indices with `Π_j (k_j + 1) <= cap`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HyperbolicCrossIndexSet {
    pub d: usize,
    pub cap: usize,
    indices: Vec<Vec<usize>>,
}

impl HyperbolicCrossIndexSet {
    pub fn indices(&self) -> &[Vec<usize>] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    /// Largest single-coordinate degree in the set.
    pub fn max_degree(&self) -> usize {
        self.indices.iter().flatten().copied().max().unwrap_or(0)
    }
}

/// Enumerates the hyperbolic cross in lexicographic order (first coordinate
/// slowest). For `d = 1` this is `1, 2, ..., cap - 1`.
pub fn hyperbolic_cross(d: usize, cap: usize) -> Result<HyperbolicCrossIndexSet> {
    if d == 0 {
        return Err(Error::domain("hyperbolic cross needs d >= 1"));
    }
    if cap == 0 {
        return Err(Error::domain("hyperbolic cross needs cap >= 1"));
    }
    let mut indices = Vec::new();
    let mut current = Vec::with_capacity(d);
    fill_cross(d, cap, &mut current, &mut indices);
    indices.retain(|k| k.iter().any(|&c| c != 0));
    Ok(HyperbolicCrossIndexSet { d, cap, indices })
}

fn fill_cross(d: usize, budget: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if current.len() == d {
        out.push(current.clone());
        return;
    }
    // k + 1 <= budget
    for k in 0..budget {
        current.push(k);
        fill_cross(d, budget / (k + 1), current, out);
        current.pop();
    }
}

/// Truncated worst-case error over the hyperbolic cross with cap `cap`.
///
/// For `d = 1` and `cap = m + 1` this reproduces [`wce_1d`] bit for bit.
pub fn wce_md(rule: &QuadratureRule, s: f64, cap: usize) -> Result<f64> {
    check_inputs(rule, s)?;
    let d = rule.dimension();
    let cross = hyperbolic_cross(d, cap)?;
    if rule.is_empty() {
        return Ok(1.0);
    }
    let degree = cross.max_degree();
    let n = rule.len();

    // tables[j][i * (degree+1) + k] = H_k(x_{i,j})
    let width = degree + 1;
    let mut tables = vec![Vec::with_capacity(n * width); d];
    for (x, _) in rule.iter() {
        for (table, &c) in tables.iter_mut().zip(x) {
            hermite_sweep(c, degree, |_, h| table.push(h));
        }
    }

    let defect = 1.0 - rule.weight_sum();
    let mut total = defect * defect;
    for k in cross.indices() {
        let mut weight = 1.0;
        for &kj in k {
            weight *= ((kj + 1) as f64).powf(-s);
        }
        let mut c = 0.0;
        for (i, &w) in rule.weights().iter().enumerate() {
            let mut prod = 1.0;
            for (table, &kj) in tables.iter().zip(k) {
                prod *= table[i * width + kj];
            }
            c += w * prod;
        }
        total += weight * (c * c);
    }
    Ok(total.sqrt())
}

/// Least-squares slope of `ln err` against `ln n`.
pub fn rate_fit(samples: &[(u64, f64)]) -> Result<f64> {
    if samples.len() < 3 {
        return Err(Error::domain(format!(
            "rate fit needs at least 3 samples, got {}",
            samples.len()
        )));
    }
    for w in samples.windows(2) {
        if w[1].0 <= w[0].0 {
            return Err(Error::domain("rate fit needs strictly increasing n"));
        }
    }
    if let Some(&(n, e)) = samples
        .iter()
        .find(|&&(n, e)| n == 0 || e <= 0.0 || !e.is_finite())
    {
        return Err(Error::domain(format!(
            "rate fit needs positive n and err, got ({n}, {e})"
        )));
    }
    let pts: Vec<(f64, f64)> = samples
        .iter()
        .map(|&(n, e)| ((n as f64).ln(), e.ln()))
        .collect();
    let len = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / len;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / len;
    let (mut sxy, mut sxx) = (0.0, 0.0);
    for &(x, y) in &pts {
        sxy += (x - mx) * (y - my);
        sxx += (x - mx) * (x - mx);
    }
    Ok(sxy / sxx)
}

/// One row of a convergence sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ErrorReport {
    pub n_requested: u64,
    pub n_actual: u64,
    pub s: f64,
    pub m: usize,
    pub err: f64,
}

impl ErrorReport {
    pub const CSV_HEADER: &'static str = "n_requested,n_actual,s,m,err";

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{:.16e}",
            self.n_requested, self.n_actual, self.s, self.m, self.err
        )
    }
}
