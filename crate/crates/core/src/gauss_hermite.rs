//! Gauss–Hermite rules for the standard normal weight.
//!
//! Nodes start from the eigenvalues of the symmetric Jacobi matrix (off-diagonal
//! `sqrt(k)`), are polished by Newton steps on `H_n`, and weights come from the
//! Christoffel numbers `1 / sum_{k<n} H_k(x_i)^2`, which keeps small tail weights
//! accurate to full relative precision.

use nalgebra::{DMatrix, SymmetricEigen};

use crate::error::{Error, Result};
use crate::hermite::hermite_sweep;

/// Upper limit on the rule size; beyond this `sum H_k^2` at the outer nodes
/// approaches the f64 range.
pub const MAX_GAUSS_HERMITE_NODES: usize = 320;

#[derive(Debug, Clone)]
pub struct GaussHermite {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussHermite {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_GAUSS_HERMITE_NODES {
            return Err(Error::domain(format!(
                "Gauss-Hermite size must be in 1..={MAX_GAUSS_HERMITE_NODES}, got {n}"
            )));
        }
        let jacobi = DMatrix::from_fn(n, n, |i, j| {
            if i.abs_diff(j) == 1 {
                (i.max(j) as f64).sqrt()
            } else {
                0.0
            }
        });
        let mut nodes: Vec<f64> = SymmetricEigen::new(jacobi)
            .eigenvalues
            .iter()
            .copied()
            .collect();
        nodes.sort_by(f64::total_cmp);

        let sqrt_n = (n as f64).sqrt();
        let mut weights = Vec::with_capacity(n);
        for x in nodes.iter_mut() {
            for _ in 0..3 {
                let (hn, hn1) = top_two(*x, n);
                // H_n' = sqrt(n) H_{n-1}
                let step = hn / (sqrt_n * hn1);
                if !step.is_finite() {
                    break;
                }
                *x -= step;
                if step.abs() <= 1e-16 * x.abs().max(1.0) {
                    break;
                }
            }
            let mut christoffel = 0.0;
            hermite_sweep(*x, n - 1, |_, h| christoffel += h * h);
            weights.push(1.0 / christoffel);
        }
        Ok(Self { nodes, weights })
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Approximates `∫ f dγ` over the real line.
    pub fn integrate(&self, mut f: impl FnMut(f64) -> f64) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(x))
            .sum()
    }
}

/// `(H_n(x), H_{n-1}(x))`.
fn top_two(x: f64, n: usize) -> (f64, f64) {
    let (mut hn, mut hn1) = (0.0, 0.0);
    hermite_sweep(x, n, |k, h| {
        if k + 1 == n {
            hn1 = h;
        } else if k == n {
            hn = h;
        }
    });
    (hn, hn1)
}
