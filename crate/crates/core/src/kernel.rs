//! Mehler kernel of the Ornstein–Uhlenbeck semigroup and the fractional kernel
//!
//! ```text
//! K_σ(x, y) = ∫_0^∞ M_t(x, y) t^{-σ/2 - 1} dt
//! ```
//!
//! `K_σ` is evaluated by splitting the `t`-axis at `t_split`. On the near piece
//! `t = u²` removes the `t^{-3/2}` blow-up of the heat-kernel factor; the
//! remaining `u`-integral is taken on a logarithmic grid so that the peak at
//! `u ~ |x - y|` is resolved at any separation. The far piece is integrated on
//! a logarithmic grid up to `tail_cutoff`, beyond which `M_t = 1 + O(e^{-t})`
//! and the remainder `(2/σ) T^{-σ/2}` is added in closed form.

use std::sync::OnceLock;

use statrs::function::gamma::gamma;

use crate::error::{Error, Result};
use crate::gauss_hermite::GaussHermite;
use crate::hermite::hermite_sweep;

/// Largest degree accepted by [`semigroup_project`].
pub const SEMIGROUP_MAX_DEGREE: usize = 60;

/// Gauss–Hermite size used by [`semigroup_project`].
pub const SEMIGROUP_GH_NODES: usize = 160;

/// Discretization of the `t`-integral defining `K_σ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelQuadratureConfig {
    pub t_split: f64,
    pub near_steps: usize,
    pub tail_steps: usize,
    pub tail_cutoff: f64,
}

impl Default for KernelQuadratureConfig {
    fn default() -> Self {
        Self {
            t_split: 1.0,
            near_steps: 2000,
            tail_steps: 2000,
            tail_cutoff: 40.0,
        }
    }
}

impl KernelQuadratureConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.t_split > 0.0 && self.t_split.is_finite()) {
            return Err(Error::domain("t_split must be positive"));
        }
        if !(self.tail_cutoff > self.t_split && self.tail_cutoff.is_finite()) {
            return Err(Error::domain("tail_cutoff must exceed t_split"));
        }
        if self.near_steps < 16 || self.tail_steps < 16 {
            return Err(Error::domain(
                "kernel quadrature needs at least 16 steps per piece",
            ));
        }
        Ok(())
    }
}

/// `M_t(x, y)`.
pub fn mehler(t: f64, x: f64, y: f64) -> Result<f64> {
    if t <= 0.0 || !t.is_finite() {
        return Err(Error::domain(format!("Mehler kernel needs t > 0, got {t}")));
    }
    if !x.is_finite() || !y.is_finite() {
        return Err(Error::domain("Mehler kernel needs finite arguments"));
    }
    Ok(mehler_unchecked(t, x, y))
}

/// Cancellation-free form of the Mehler kernel. With `q = e^{-t}`,
/// the exponent is `-q² (x-y)² / (2(1-q²)) + q x y / (1+q)`.
#[inline]
fn mehler_unchecked(t: f64, x: f64, y: f64) -> f64 {
    let q = (-t).exp();
    let one_minus_q2 = -(-2.0 * t).exp_m1();
    let d = x - y;
    let exponent = -q * q * d * d / (2.0 * one_minus_q2) + q * x * y / (1.0 + q);
    exponent.exp() / one_minus_q2.sqrt()
}

/// `K_σ(x, y)` for `x != y`.
pub fn k_sigma(sigma: f64, x: f64, y: f64, cfg: &KernelQuadratureConfig) -> Result<f64> {
    cfg.validate()?;
    if sigma <= 0.0 || !sigma.is_finite() {
        return Err(Error::domain(format!(
            "K_sigma needs sigma > 0, got {sigma}"
        )));
    }
    if !x.is_finite() || !y.is_finite() {
        return Err(Error::domain("K_sigma needs finite arguments"));
    }
    if x == y {
        return Err(Error::domain("K_sigma diverges on the diagonal x = y"));
    }
    // Symmetric in (x, y); fix the order so both calls run identical arithmetic.
    let (x, y) = if x <= y { (x, y) } else { (y, x) };
    Ok(near_part(sigma, x, y, cfg) + far_part(sigma, x, y, cfg))
}

/// `∫_0^{t_split}` with `t = u²`, `u = e^w`: integrand `2 u^{-σ} M_{u²}(x,y) dw`.
fn near_part(sigma: f64, x: f64, y: f64, cfg: &KernelQuadratureConfig) -> f64 {
    let u_hi = cfg.t_split.sqrt();
    // below u_lo the heat factor exp(-(x-y)^2 / (4u^2)) is under e^{-750}
    let u_lo = (x - y).abs() / 3000f64.sqrt();
    if u_lo >= u_hi {
        return 0.0;
    }
    simpson(u_lo.ln(), u_hi.ln(), cfg.near_steps, |w| {
        let u = w.exp();
        2.0 * u.powf(-sigma) * mehler_unchecked(u * u, x, y)
    })
}

/// `∫_{t_split}^∞` with `t = e^w` up to the cutoff, plus the closed-form remainder.
fn far_part(sigma: f64, x: f64, y: f64, cfg: &KernelQuadratureConfig) -> f64 {
    let body = simpson(
        cfg.t_split.ln(),
        cfg.tail_cutoff.ln(),
        cfg.tail_steps,
        |w| {
            let t = w.exp();
            t.powf(-sigma / 2.0) * mehler_unchecked(t, x, y)
        },
    );
    body + 2.0 / sigma * cfg.tail_cutoff.powf(-sigma / 2.0)
}

fn simpson(a: f64, b: f64, steps: usize, f: impl Fn(f64) -> f64) -> f64 {
    let n = steps + steps % 2;
    let h = (b - a) / n as f64;
    let mut acc = f(a) + f(b);
    for i in 1..n {
        let c = if i % 2 == 1 { 4.0 } else { 2.0 };
        acc += c * f(a + i as f64 * h);
    }
    acc * h / 3.0
}

/// Lower bound `2^{σ+1/2} Γ((σ+1)/2) / |x-y|^{1+σ}` on `K_σ(x, y)`.
pub fn k_sigma_lower_bound(sigma: f64, x: f64, y: f64) -> f64 {
    2f64.powf(sigma + 0.5) * gamma((sigma + 1.0) / 2.0) / (x - y).abs().powf(1.0 + sigma)
}

/// Shape of the close-pair lower bound without its constant:
/// `exp((x²+y²)/4 · (1 - (1-e^{-t0})/(1+e^{-t0}))) / |x-y|^{1+σ}`.
pub fn close_pair_profile(sigma: f64, t0: f64, x: f64, y: f64) -> f64 {
    let q = (-t0).exp();
    let factor = 1.0 - (1.0 - q) / (1.0 + q);
    ((x * x + y * y) / 4.0 * factor).exp() / (x - y).abs().powf(1.0 + sigma)
}

fn semigroup_rule() -> &'static GaussHermite {
    static RULE: OnceLock<GaussHermite> = OnceLock::new();
    RULE.get_or_init(|| GaussHermite::new(SEMIGROUP_GH_NODES).expect("valid Gauss-Hermite size"))
}

/// Gauss–Hermite estimate of `(e^{tL} H_k)(x) = ∫ M_t(x, y) H_k(y) dγ(y)`.
///
/// The exact value is `e^{-kt} H_k(x)`.
pub fn semigroup_project(t: f64, k: usize, x: f64) -> Result<f64> {
    if t <= 0.0 || !t.is_finite() {
        return Err(Error::domain(format!("semigroup needs t > 0, got {t}")));
    }
    if k > SEMIGROUP_MAX_DEGREE {
        return Err(Error::domain(format!(
            "semigroup_project supports degree <= {SEMIGROUP_MAX_DEGREE}, got {k}"
        )));
    }
    if !x.is_finite() {
        return Err(Error::domain("semigroup_project needs finite x"));
    }
    Ok(semigroup_rule().integrate(|y| {
        let mut hk = 0.0;
        hermite_sweep(y, k, |j, h| {
            if j == k {
                hk = h;
            }
        });
        mehler_unchecked(t, x, y) * hk
    }))
}
