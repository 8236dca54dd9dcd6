//! Base rules on the centered unit cube `[-1/2, 1/2]^d`.
//!
//! * [`midpoint_rule`]: `m` equal-weight midpoints, `d = 1`.
//! * [`fibonacci_rule`]: the Fibonacci lattice with generating vector
//!   `(1, F_{j-1})`, `d = 2`.
//! * [`psi`] / [`transform_rule`]: the polynomial change of variable with
//!   `ψ'(x) = 630 (1/4 - x²)^4`, which makes a rule for boundary-vanishing
//!   integrands usable for arbitrary smooth ones.

use crate::error::{Error, Result};
use crate::rule::QuadratureRule;

/// Normalizer of `(1/4 - ξ²)^4` on `[-1/2, 1/2]`.
pub const PSI_NORMALIZER: f64 = 630.0;

// ψ(x) = x (c1 + x²(c3 + x²(c5 + x²(c7 + x² c9))))
const PSI_C1: f64 = 630.0 / 256.0;
const PSI_C3: f64 = -630.0 / 48.0;
const PSI_C5: f64 = 630.0 * 3.0 / 40.0;
const PSI_C7: f64 = -90.0;
const PSI_C9: f64 = 70.0;

/// Largest supported Fibonacci index (`F_90` still fits comfortably in `u64`).
pub const MAX_FIBONACCI_INDEX: usize = 90;

pub fn midpoint_rule(m: usize) -> QuadratureRule {
    let w = 1.0 / m as f64;
    let nodes = (1..=m).map(|i| -0.5 + (i as f64 - 0.5) * w).collect();
    QuadratureRule::from_1d(nodes, vec![w; m]).expect("midpoint rule is well formed")
}

pub fn psi(x: f64) -> f64 {
    if x >= 0.5 {
        return 0.5;
    }
    if x <= -0.5 {
        return -0.5;
    }
    let x2 = x * x;
    let v = x * (PSI_C1 + x2 * (PSI_C3 + x2 * (PSI_C5 + x2 * (PSI_C7 + x2 * PSI_C9))));
    v.clamp(-0.5, 0.5)
}

pub fn psi_prime(x: f64) -> f64 {
    if x.abs() > 0.5 {
        return 0.0;
    }
    let b = 0.25 - x * x;
    let b2 = b * b;
    PSI_NORMALIZER * b2 * b2
}

/// Maps nodes through `ψ` coordinatewise and multiplies each weight by the
/// product of `ψ'` over the coordinates.
pub fn transform_rule(rule: &QuadratureRule) -> Result<QuadratureRule> {
    let d = rule.dimension();
    let mut nodes = Vec::with_capacity(rule.nodes().len());
    let mut weights = Vec::with_capacity(rule.len());
    for (x, w) in rule.iter() {
        let mut scale = w;
        for &c in x {
            if !(-0.5..=0.5).contains(&c) {
                return Err(Error::domain(format!(
                    "node coordinate {c} outside [-1/2, 1/2]"
                )));
            }
            nodes.push(psi(c));
            scale *= psi_prime(c);
        }
        weights.push(scale);
    }
    QuadratureRule::new(d, nodes, weights)
}

/// `F_index` with `F_1 = F_2 = 1`.
pub fn fibonacci_number(index: usize) -> u64 {
    let (mut a, mut b) = (0u64, 1u64);
    for _ in 0..index {
        let next = a + b;
        a = b;
        b = next;
    }
    a
}

pub fn fibonacci_rule(index: usize) -> Result<QuadratureRule> {
    if index < 3 {
        return Err(Error::domain(format!(
            "Fibonacci index must be >= 3, got {index}"
        )));
    }
    if index > MAX_FIBONACCI_INDEX {
        return Err(Error::domain(format!(
            "Fibonacci index must be <= {MAX_FIBONACCI_INDEX}, got {index}"
        )));
    }
    let f = fibonacci_number(index);
    let g = fibonacci_number(index - 1);
    let ff = f as f64;
    let mut nodes = Vec::with_capacity(2 * f as usize);
    for i in 0..f {
        let j = ((i as u128 * g as u128) % f as u128) as u64;
        nodes.push(i as f64 / ff - 0.5);
        nodes.push(j as f64 / ff - 0.5);
    }
    QuadratureRule::new(2, nodes, vec![1.0 / ff; f as usize])
}

/// Largest Fibonacci index `j >= 3` with `F_j <= m`, if any.
pub fn fibonacci_index_at_most(m: usize) -> Option<usize> {
    let m = m as u64;
    let mut best = None;
    for j in 3..=MAX_FIBONACCI_INDEX {
        if fibonacci_number(j) > m {
            break;
        }
        best = Some(j);
    }
    best
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CubeRuleKind {
    Midpoint1D,
    Fibonacci2D,
}

impl CubeRuleKind {
    pub fn dimension(self) -> usize {
        match self {
            CubeRuleKind::Midpoint1D => 1,
            CubeRuleKind::Fibonacci2D => 2,
        }
    }
}

/// Recipe for a base rule: the kind, its size (node count for midpoint,
/// lattice index for Fibonacci) and whether `ψ` is applied.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CubeRuleSpec {
    pub kind: CubeRuleKind,
    pub size: usize,
    pub apply_psi: bool,
}

impl CubeRuleSpec {
    pub fn build(&self) -> Result<QuadratureRule> {
        let base = match self.kind {
            CubeRuleKind::Midpoint1D => midpoint_rule(self.size),
            CubeRuleKind::Fibonacci2D => fibonacci_rule(self.size)?,
        };
        if self.apply_psi {
            transform_rule(&base)
        } else {
            Ok(base)
        }
    }
}

/// A rule on the cube with at most `m` nodes for each budget `m`.
pub trait BaseRuleFactory {
    fn dimension(&self) -> usize;
    fn rule_with_at_most(&self, m: usize) -> Result<QuadratureRule>;
}

/// Budget-driven factory for one [`CubeRuleKind`].
///
/// Midpoint returns exactly `m` nodes. Fibonacci returns the largest lattice
/// with `F_j <= m`; a budget of one gives the cube's center.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CubeRuleFactory {
    pub kind: CubeRuleKind,
    pub apply_psi: bool,
}

impl CubeRuleFactory {
    pub fn new(kind: CubeRuleKind, apply_psi: bool) -> Self {
        Self { kind, apply_psi }
    }
}

impl BaseRuleFactory for CubeRuleFactory {
    fn dimension(&self) -> usize {
        self.kind.dimension()
    }

    fn rule_with_at_most(&self, m: usize) -> Result<QuadratureRule> {
        let d = self.kind.dimension();
        if m == 0 {
            return Ok(QuadratureRule::empty(d));
        }
        let base = match self.kind {
            CubeRuleKind::Midpoint1D => midpoint_rule(m),
            CubeRuleKind::Fibonacci2D => match fibonacci_index_at_most(m) {
                Some(j) => fibonacci_rule(j)?,
                None => QuadratureRule::new(2, vec![0.0, 0.0], vec![1.0])?,
            },
        };
        if self.apply_psi {
            transform_rule(&base)
        } else {
            Ok(base)
        }
    }
}

/// Adapts a closure `m -> rule` into a [`BaseRuleFactory`].
pub struct FnFactory<F> {
    dimension: usize,
    build: F,
}

impl<F> FnFactory<F>
where
    F: Fn(usize) -> Result<QuadratureRule>,
{
    pub fn new(dimension: usize, build: F) -> Self {
        Self { dimension, build }
    }
}

impl<F> BaseRuleFactory for FnFactory<F>
where
    F: Fn(usize) -> Result<QuadratureRule>,
{
    fn dimension(&self) -> usize {
        self.dimension
    }

    fn rule_with_at_most(&self, m: usize) -> Result<QuadratureRule> {
        (self.build)(m)
    }
}
