//! Quadrature on `R^d` for the standard Gaussian measure, assembled from
//! shifted cube rules.
//!
//! For a node budget `n`, the unit cubes `k + [-1/2, 1/2]^d` with
//! `|k| < ξ_n = sqrt(2 a ln n / δ)` each receive
//! `n_k = floor(ϱ n exp(-δ |k|² / (2a)))` nodes, where
//!
//! ```text
//! 1/ϱ = Σ_{j>=0} [(2j+1)^d - (2j-1)^d] exp(-δ j² / (2a))
//! ```
//!
//! counts the integer points by sup-norm shell, so `Σ n_k <= n`. A cube's base
//! rule `(x_j, λ_j)` contributes nodes `x_j + k` with weights `λ_j ρ(x_j + k)`.

use std::collections::BTreeMap;
use std::ops::Range;

use crate::cube::BaseRuleFactory;
use crate::error::{Error, Result};
use crate::hermite::density_unchecked;
use crate::rule::QuadratureRule;

pub const DEFAULT_DELTA: f64 = 1.0;
pub const DEFAULT_VARRHO_TOL: f64 = 1e-16;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AssemblyParams {
    pub dimension: usize,
    /// Target rate; experiments use `a = s`.
    pub a: f64,
    pub delta: f64,
    pub n_budget: u64,
    pub varrho_tol: f64,
}

impl AssemblyParams {
    pub fn new(dimension: usize, a: f64, delta: f64, n_budget: u64) -> Result<Self> {
        let p = Self {
            dimension,
            a,
            delta,
            n_budget,
            varrho_tol: DEFAULT_VARRHO_TOL,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if self.dimension == 0 {
            return Err(Error::domain("assembly dimension must be >= 1"));
        }
        if !(self.a > 0.0 && self.a.is_finite()) {
            return Err(Error::domain(format!(
                "rate a must be positive, got {}",
                self.a
            )));
        }
        if !(self.delta > 0.0 && self.delta.is_finite()) {
            return Err(Error::domain(format!(
                "delta must be positive, got {}",
                self.delta
            )));
        }
        if self.varrho_tol.is_nan() || self.varrho_tol <= 0.0 {
            return Err(Error::domain("varrho tolerance must be positive"));
        }
        Ok(())
    }

    /// `ξ_n`, or 0 when `n < 2`.
    pub fn xi(&self) -> f64 {
        if self.n_budget < 2 {
            0.0
        } else {
            xi_for_log_n((self.n_budget as f64).ln(), self.delta, self.a)
        }
    }

    /// Every assembled node lies within this distance of the origin.
    pub fn radius_bound(&self) -> f64 {
        (self.dimension as f64).sqrt() / 2.0 + self.xi()
    }
}

/// `ϱ` for the given decay `δ / (2a)` and dimension, summing shells until a
/// term drops below `tol` times the partial sum.
pub fn varrho(delta: f64, a: f64, d: usize, tol: f64) -> f64 {
    let c = delta / (2.0 * a);
    let d = d as i32;
    let mut sum = 0.0;
    let mut j = 0u64;
    loop {
        let jf = j as f64;
        let mut shell = (2.0 * jf + 1.0).powi(d) - (2.0 * jf - 1.0).powi(d);
        if j == 0 {
            // the origin shell holds one cube; the difference formula gives 0 for even d
            shell = shell.max(1.0);
        }
        let term = shell * (-c * jf * jf).exp();
        sum += term;
        if j > 0 && sum > 0.0 && term < tol * sum {
            break;
        }
        j += 1;
    }
    1.0 / sum
}

pub fn xi(n: u64, delta: f64, a: f64) -> Result<f64> {
    if n < 2 {
        return Err(Error::domain(format!("xi needs n >= 2, got {n}")));
    }
    Ok(xi_for_log_n((n as f64).ln(), delta, a))
}

/// `sqrt(2 a log_n / δ)` for a real `log_n`.
pub fn xi_for_log_n(log_n: f64, delta: f64, a: f64) -> f64 {
    (2.0 * a * log_n / delta).sqrt()
}

/// `floor(ϱ n exp(-δ |k|² / (2a)))` for `|k|² = k_norm2`.
pub fn cube_budget(varrho: f64, n: u64, delta: f64, a: f64, k_norm2: f64) -> u64 {
    (varrho * n as f64 * (-(delta / (2.0 * a)) * k_norm2).exp()).floor() as u64
}

/// Per-cube node counts, keyed by integer shift in lexicographic order.
#[derive(Debug, Clone, PartialEq)]
pub struct Allocation {
    pub entries: BTreeMap<Vec<i64>, u64>,
    pub xi: f64,
    pub varrho: f64,
}

impl Allocation {
    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }
}

pub fn allocate(params: &AssemblyParams) -> Result<Allocation> {
    params.validate()?;
    let rho = varrho(params.delta, params.a, params.dimension, params.varrho_tol);
    let mut entries = BTreeMap::new();
    if params.n_budget < 2 {
        return Ok(Allocation {
            entries,
            xi: 0.0,
            varrho: rho,
        });
    }
    let xi = params.xi();
    let xi2 = 2.0 * params.a * (params.n_budget as f64).ln() / params.delta;
    let reach = xi.ceil() as i64;
    let d = params.dimension;
    let mut k = vec![-reach; d];
    loop {
        let k2: f64 = k.iter().map(|&c| (c * c) as f64).sum();
        if k2 < xi2 {
            let nk = cube_budget(rho, params.n_budget, params.delta, params.a, k2);
            entries.insert(k.clone(), nk);
        }
        // odometer over [-reach, reach]^d, last coordinate fastest
        let mut pos = d;
        loop {
            if pos == 0 {
                return Ok(Allocation {
                    entries,
                    xi,
                    varrho: rho,
                });
            }
            pos -= 1;
            if k[pos] < reach {
                k[pos] += 1;
                break;
            }
            k[pos] = -reach;
        }
    }
}

/// Nodes contributed by one shifted cube.
#[derive(Debug, Clone, PartialEq)]
pub struct AssemblyBlock {
    pub shift: Vec<i64>,
    pub nodes: Range<usize>,
}

#[derive(Debug, Clone)]
pub struct Assembly {
    pub rule: QuadratureRule,
    pub allocation: Allocation,
    pub blocks: Vec<AssemblyBlock>,
}

/// Builds the assembled rule together with its allocation and the node range
/// of every cube. Cubes are visited in lexicographic order of their shift.
pub fn assemble_detailed(
    factory: &impl BaseRuleFactory,
    params: &AssemblyParams,
) -> Result<Assembly> {
    if factory.dimension() != params.dimension {
        return Err(Error::domain(format!(
            "base rule dimension {} does not match assembly dimension {}",
            factory.dimension(),
            params.dimension
        )));
    }
    let allocation = allocate(params)?;
    let d = params.dimension;
    let mut rule = QuadratureRule::empty(d);
    let mut blocks = Vec::new();
    let mut shifted = vec![0.0; d];
    for (k, &nk) in &allocation.entries {
        if nk == 0 {
            continue;
        }
        let base = factory.rule_with_at_most(nk as usize)?;
        if base.dimension() != d {
            return Err(Error::domain(format!(
                "factory returned a {}-dimensional rule, expected {d}",
                base.dimension()
            )));
        }
        if base.len() as u64 > nk {
            return Err(Error::domain(format!(
                "factory returned {} nodes for a budget of {nk}",
                base.len()
            )));
        }
        let start = rule.len();
        for (x, w) in base.iter() {
            for ((s, &xj), &kj) in shifted.iter_mut().zip(x).zip(k) {
                *s = xj + kj as f64;
            }
            rule.push(&shifted, w * density_unchecked(&shifted));
        }
        blocks.push(AssemblyBlock {
            shift: k.clone(),
            nodes: start..rule.len(),
        });
    }
    Ok(Assembly {
        rule,
        allocation,
        blocks,
    })
}

pub fn assemble(factory: &impl BaseRuleFactory, params: &AssemblyParams) -> Result<QuadratureRule> {
    assemble_detailed(factory, params).map(|a| a.rule)
}
