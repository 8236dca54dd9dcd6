//! Seeded property suite for the kernel lower/upper bounds and the semigroup
//! eigen-relation.
//!
//! The constants of the two-sided estimates are not known in closed form; they
//! were fitted once on a calibration grid (see `examples/kernel_bounds.rs`)
//! and frozen here with headroom.

use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::hermite::hermite_eval;
use crate::kernel::{
    close_pair_profile, k_sigma, k_sigma_lower_bound, semigroup_project, KernelQuadratureConfig,
};

/// Sampled smoothness range.
pub const SIGMA_RANGE: (f64, f64) = (0.1, 1.5);
/// Relative slack allowed below the lower bound (quadrature error).
pub const LOWER_BOUND_SLACK: f64 = 1e-6;
/// Half-width of the box for the bounded-domain upper bound.
pub const UPPER_BOX: f64 = 2.0;
/// Frozen `C` with `K_σ(x,y) |x-y|^{1+σ} <= C` on `[-2, 2]²`, `σ` in [`SIGMA_RANGE`].
/// Grid supremum 89.02 (σ = 0.1, opposite corners).
pub const UPPER_CONSTANT: f64 = 100.0;
/// `t_0` of the close-pair bound.
pub const CLOSE_PAIR_T0: f64 = 1.0;
/// Half-width of the box for the close-pair bound.
pub const CLOSE_PAIR_BOX: f64 = 3.0;
/// Frozen `c` with `K_σ >= c · close_pair_profile` for `|x - y| <= 1` on `[-3, 3]²`.
/// Grid infimum 2.412 (σ = 0.3, near the diagonal at the origin).
pub const CLOSE_PAIR_CONSTANT: f64 = 2.2;
/// Absolute tolerance of the eigen-relation check.
pub const EIGEN_TOLERANCE: f64 = 1e-6;
pub const EIGEN_TIMES: [f64; 3] = [0.5, 1.0, 2.0];
pub const EIGEN_POINTS: [f64; 7] = [0.0, 0.5, -0.5, 1.0, -1.0, 2.0, -2.0];
pub const EIGEN_MAX_DEGREE: usize = 10;

#[derive(Debug, Clone, PartialEq)]
pub struct PropertyOutcome {
    pub name: &'static str,
    pub checked: usize,
    pub violations: usize,
    /// Smallest normalized margin seen; negative means violated.
    pub worst_margin: f64,
}

impl PropertyOutcome {
    fn new(name: &'static str) -> Self {
        Self {
            name,
            checked: 0,
            violations: 0,
            worst_margin: f64::INFINITY,
        }
    }

    fn record(&mut self, margin: f64) {
        self.checked += 1;
        if margin.is_nan() || margin < 0.0 {
            self.violations += 1;
        }
        if margin < self.worst_margin || margin.is_nan() {
            self.worst_margin = margin;
        }
    }

    pub fn passed(&self) -> bool {
        self.violations == 0
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct KernelCheckReport {
    pub seed: u64,
    pub samples: usize,
    pub properties: Vec<PropertyOutcome>,
}

impl KernelCheckReport {
    pub fn passed(&self) -> bool {
        self.properties.iter().all(PropertyOutcome::passed)
    }

    pub fn render(&self) -> String {
        let mut out = format!("kernel-check seed={} samples={}\n", self.seed, self.samples);
        for p in &self.properties {
            let _ = writeln!(
                out,
                "{:<14} checked={:<5} violations={:<4} worst_margin={:+.6e} {}",
                p.name,
                p.checked,
                p.violations,
                p.worst_margin,
                if p.passed() { "PASS" } else { "FAIL" }
            );
        }
        let _ = writeln!(
            out,
            "overall {}",
            if self.passed() { "PASS" } else { "FAIL" }
        );
        out
    }
}

/// Draws `(σ, x, y)` with `x, y` in `[-half, half]` and `lo <= |x - y| <= hi`.
fn draw_pair(rng: &mut ChaCha8Rng, half: f64, lo: f64, hi: f64) -> (f64, f64, f64) {
    let sigma = rng.random_range(SIGMA_RANGE.0..=SIGMA_RANGE.1);
    loop {
        let x = rng.random_range(-half..=half);
        let y = rng.random_range(-half..=half);
        let gap = (x - y).abs();
        if (lo..=hi).contains(&gap) {
            return (sigma, x, y);
        }
    }
}

pub fn run_kernel_check(seed: u64, samples: usize) -> Result<KernelCheckReport> {
    let cfg = KernelQuadratureConfig::default();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let mut lower = PropertyOutcome::new("lower_bound");
    for _ in 0..samples {
        let (sigma, x, y) = draw_pair(&mut rng, 3.0, 1e-3, 2.0);
        let bound = k_sigma_lower_bound(sigma, x, y);
        let k = k_sigma(sigma, x, y, &cfg)?;
        lower.record(k / bound - 1.0 + LOWER_BOUND_SLACK);
    }

    let mut upper = PropertyOutcome::new("upper_bound");
    for _ in 0..samples {
        let (sigma, x, y) = draw_pair(&mut rng, UPPER_BOX, 1e-3, 2.0 * UPPER_BOX);
        let k = k_sigma(sigma, x, y, &cfg)?;
        upper.record(1.0 - k * (x - y).abs().powf(1.0 + sigma) / UPPER_CONSTANT);
    }

    let mut close = PropertyOutcome::new("close_pair");
    for _ in 0..samples {
        let (sigma, x, y) = draw_pair(&mut rng, CLOSE_PAIR_BOX, 1e-3, 1.0);
        let k = k_sigma(sigma, x, y, &cfg)?;
        let profile = close_pair_profile(sigma, CLOSE_PAIR_T0, x, y);
        close.record(k / (CLOSE_PAIR_CONSTANT * profile) - 1.0);
    }

    let mut eigen = PropertyOutcome::new("eigen");
    for &t in &EIGEN_TIMES {
        for &x in &EIGEN_POINTS {
            let h = hermite_eval(x, EIGEN_MAX_DEGREE)?;
            for (k, &hk) in h.iter().enumerate() {
                let exact = (-(k as f64) * t).exp() * hk;
                let got = semigroup_project(t, k, x)?;
                eigen.record(1.0 - (got - exact).abs() / EIGEN_TOLERANCE);
            }
        }
    }

    Ok(KernelCheckReport {
        seed,
        samples,
        properties: vec![lower, upper, close, eigen],
    })
}
