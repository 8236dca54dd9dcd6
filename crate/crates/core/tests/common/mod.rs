//! Oracles shared by the integration tests. Nothing here calls into the
//! library's Hermite recurrence or Gauss–Hermite code.

#![allow(dead_code)]

use nalgebra::{DMatrix, SymmetricEigen};

/// Gauss–Hermite rule for `∫ f dγ`, built from the physicists' polynomials:
/// nodes from the Jacobi matrix (off-diagonal `sqrt(k/2)`) polished by Newton
/// on `H_n`, weights `2^{n-1} n! sqrt(π) / (n² H_{n-1}(x)²)` evaluated in logs,
/// then mapped to the standard normal by `x -> sqrt(2) x`, `w -> w / sqrt(π)`.
pub struct PhysicistsGaussHermite {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

/// `(ln|H_n(x)|, ln|H_{n-1}(x)|, sign ratio H_n/H_{n-1})` via a scaled recurrence.
fn phys_top_two(x: f64, n: usize) -> (f64, f64) {
    // returns H_n(x) / H_{n-1}(x) and ln|H_{n-1}(x)|
    let mut log_scale = 0.0f64;
    let mut prev = 1.0f64; // H_0
    let mut cur = 2.0 * x; // H_1
    if n == 1 {
        return (cur / prev, 0.0);
    }
    for k in 1..n - 1 {
        let next = 2.0 * x * cur - 2.0 * k as f64 * prev;
        prev = cur;
        cur = next;
        let m = cur.abs().max(prev.abs());
        if m > 1e100 {
            prev /= m;
            cur /= m;
            log_scale += m.ln();
        }
    }
    // cur = H_{n-1} (scaled), prev = H_{n-2}
    let hn = 2.0 * x * cur - 2.0 * (n - 1) as f64 * prev;
    (hn / cur, log_scale + cur.abs().ln())
}

impl PhysicistsGaussHermite {
    pub fn new(n: usize) -> Self {
        let j = DMatrix::from_fn(n, n, |a, b| {
            if a.abs_diff(b) == 1 {
                (a.max(b) as f64 / 2.0).sqrt()
            } else {
                0.0
            }
        });
        let mut xs: Vec<f64> = SymmetricEigen::new(j).eigenvalues.iter().copied().collect();
        xs.sort_by(f64::total_cmp);
        let ln_fact: f64 = (1..=n).map(|k| (k as f64).ln()).sum();
        let mut nodes = Vec::with_capacity(n);
        let mut weights = Vec::with_capacity(n);
        for mut x in xs {
            for _ in 0..4 {
                // H_n' = 2n H_{n-1}
                let (ratio, _) = phys_top_two(x, n);
                let step = ratio / (2.0 * n as f64);
                x -= step;
                if step.abs() < 1e-16 * x.abs().max(1.0) {
                    break;
                }
            }
            let (_, ln_hn1) = phys_top_two(x, n);
            let ln_w = (n as f64 - 1.0) * 2f64.ln() + ln_fact + 0.5 * std::f64::consts::PI.ln()
                - 2.0 * (n as f64).ln()
                - 2.0 * ln_hn1;
            nodes.push(std::f64::consts::SQRT_2 * x);
            weights.push(ln_w.exp() / std::f64::consts::PI.sqrt());
        }
        Self { nodes, weights }
    }

    pub fn integrate(&self, f: impl Fn(f64) -> f64) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(x))
            .sum()
    }
}

/// Normalized probabilists' Hermite values from the explicit sum
/// `He_k(x) = k! Σ_j (-1)^j x^{k-2j} / (j! (k-2j)! 2^j)`, for small `k` only.
pub fn explicit_hermite(k: usize, x: f64) -> f64 {
    let fact = |n: usize| (1..=n).map(|v| v as f64).product::<f64>();
    let mut acc = 0.0;
    for j in 0..=k / 2 {
        let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
        acc +=
            sign * x.powi((k - 2 * j) as i32) / (fact(j) * fact(k - 2 * j) * 2f64.powi(j as i32));
    }
    acc * fact(k) / fact(k).sqrt()
}

/// Composite Simpson rule with `panels` (even) panels.
pub fn simpson(a: f64, b: f64, panels: usize, f: impl Fn(f64) -> f64) -> f64 {
    assert!(panels.is_multiple_of(2));
    let h = (b - a) / panels as f64;
    let mut acc = f(a) + f(b);
    for i in 1..panels {
        acc += if i % 2 == 1 { 4.0 } else { 2.0 } * f(a + i as f64 * h);
    }
    acc * h / 3.0
}

/// Least-squares slope of `ln y` on `ln x`.
pub fn loglog_slope(pts: &[(f64, f64)]) -> f64 {
    let n = pts.len() as f64;
    let lx: Vec<f64> = pts.iter().map(|p| p.0.ln()).collect();
    let ly: Vec<f64> = pts.iter().map(|p| p.1.ln()).collect();
    let mx = lx.iter().sum::<f64>() / n;
    let my = ly.iter().sum::<f64>() / n;
    let sxy: f64 = lx.iter().zip(&ly).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = lx.iter().map(|x| (x - mx).powi(2)).sum();
    sxy / sxx
}

/// Normalized probabilists' Hermite values `H_0..=H_m` at `x` by the
/// three-term recurrence, written out separately from the library sweep.
pub fn hermite_row(x: f64, m: usize) -> Vec<f64> {
    let mut h = vec![0.0; m + 1];
    h[0] = 1.0;
    if m > 0 {
        h[1] = x;
    }
    for k in 1..m {
        h[k + 1] = (x * h[k] - (k as f64).sqrt() * h[k - 1]) / ((k + 1) as f64).sqrt();
    }
    h
}
