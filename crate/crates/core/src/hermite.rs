//! Normalized probabilistic Hermite polynomials and the standard Gaussian density.
//!
//! `H_k` is orthonormal in `L_2(R, γ)` where `γ` is the standard normal
//! distribution. Values are produced by the forward recurrence
//!
//! ```text
//! sqrt(k+1) H_{k+1}(x) = x H_k(x) - sqrt(k) H_{k-1}(x),   H_0 = 1,  H_1(x) = x
//! ```
//!
//! which is stable in the oscillatory region `|x| <= 2 sqrt(k)` and in the
//! monotone region beyond it, where the wanted solution is dominant.

use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Calls `f(k, H_k(x))` for `k = 0..=max_degree`, in ascending order.
///
/// This is the inner loop shared by every evaluation path in the crate; it never
/// allocates.
#[inline]
pub fn hermite_sweep(x: f64, max_degree: usize, mut f: impl FnMut(usize, f64)) {
    let mut prev = 1.0;
    f(0, prev);
    if max_degree == 0 {
        return;
    }
    let mut cur = x;
    f(1, cur);
    let mut sqrt_k = 1.0; // sqrt(k) for the current k
    for k in 1..max_degree {
        let sqrt_k1 = ((k + 1) as f64).sqrt();
        let next = (x * cur - sqrt_k * prev) / sqrt_k1;
        prev = cur;
        cur = next;
        sqrt_k = sqrt_k1;
        f(k + 1, cur);
    }
}

/// Returns `[H_0(x), ..., H_max_degree(x)]`.
pub fn hermite_eval(x: f64, max_degree: usize) -> Result<Vec<f64>> {
    if !x.is_finite() {
        return Err(Error::domain(format!(
            "hermite_eval: non-finite abscissa {x}"
        )));
    }
    let mut out = Vec::with_capacity(max_degree + 1);
    hermite_sweep(x, max_degree, |_, h| out.push(h));
    Ok(out)
}

/// Hermite values at a batch of points, stored row-major by point.
#[derive(Debug, Clone, PartialEq)]
pub struct HermiteTable {
    points: Vec<f64>,
    max_degree: usize,
    values: Vec<f64>,
}

impl HermiteTable {
    pub fn points(&self) -> &[f64] {
        &self.points
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// `H_0..=H_m` at `points[i]`.
    pub fn row(&self, i: usize) -> &[f64] {
        let w = self.max_degree + 1;
        &self.values[i * w..(i + 1) * w]
    }

    /// `H_k(points[i])`.
    pub fn get(&self, i: usize, k: usize) -> f64 {
        self.values[i * (self.max_degree + 1) + k]
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }
}

pub fn hermite_table(points: &[f64], max_degree: usize) -> Result<HermiteTable> {
    if let Some(bad) = points.iter().find(|x| !x.is_finite()) {
        return Err(Error::domain(format!(
            "hermite_table: non-finite point {bad}"
        )));
    }
    let mut values = Vec::with_capacity(points.len() * (max_degree + 1));
    for &x in points {
        hermite_sweep(x, max_degree, |_, h| values.push(h));
    }
    Ok(HermiteTable {
        points: points.to_vec(),
        max_degree,
        values,
    })
}

/// Dimension of the standard Gaussian measure on `R^d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GaussianDensityContext {
    dimension: usize,
}

impl GaussianDensityContext {
    pub fn new(dimension: usize) -> Result<Self> {
        if dimension == 0 {
            return Err(Error::domain("Gaussian density needs dimension >= 1"));
        }
        Ok(Self { dimension })
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }
}

/// `(2π)^{-d/2} exp(-|x|^2 / 2)`.
pub fn gaussian_density(ctx: GaussianDensityContext, x: &[f64]) -> Result<f64> {
    if x.len() != ctx.dimension {
        return Err(Error::domain(format!(
            "point has {} coordinates, density is {}-dimensional",
            x.len(),
            ctx.dimension
        )));
    }
    if x.iter().any(|v| !v.is_finite()) {
        return Err(Error::domain("gaussian_density: non-finite coordinate"));
    }
    Ok(density_unchecked(x))
}

#[inline]
pub(crate) fn density_unchecked(x: &[f64]) -> f64 {
    let r2: f64 = x.iter().map(|v| v * v).sum();
    (2.0 * PI).powf(-(x.len() as f64) / 2.0) * (-0.5 * r2).exp()
}
