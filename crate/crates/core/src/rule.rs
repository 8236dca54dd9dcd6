use std::fmt::Write as _;
use std::io::Write;

use crate::error::{Error, Result};

/// Nodes and weights of an `n`-point rule in `R^d`; nodes stored row-major.
///
/// Zero nodes is a valid rule and integrates everything to 0. Repeated nodes
/// are allowed.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule {
    dimension: usize,
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl QuadratureRule {
    pub fn new(dimension: usize, nodes: Vec<f64>, weights: Vec<f64>) -> Result<Self> {
        if dimension == 0 {
            return Err(Error::domain("rule dimension must be >= 1"));
        }
        if nodes.len() != weights.len() * dimension {
            return Err(Error::domain(format!(
                "{} coordinates do not match {} weights in dimension {dimension}",
                nodes.len(),
                weights.len()
            )));
        }
        if nodes.iter().chain(&weights).any(|v| !v.is_finite()) {
            return Err(Error::domain("rule contains a non-finite node or weight"));
        }
        Ok(Self {
            dimension,
            nodes,
            weights,
        })
    }

    pub fn empty(dimension: usize) -> Self {
        Self {
            dimension: dimension.max(1),
            nodes: Vec::new(),
            weights: Vec::new(),
        }
    }

    /// Builds a one-dimensional rule.
    pub fn from_1d(nodes: Vec<f64>, weights: Vec<f64>) -> Result<Self> {
        Self::new(1, nodes, weights)
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn node(&self, i: usize) -> &[f64] {
        &self.nodes[i * self.dimension..(i + 1) * self.dimension]
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn iter(&self) -> impl ExactSizeIterator<Item = (&[f64], f64)> + '_ {
        self.nodes
            .chunks_exact(self.dimension)
            .zip(self.weights.iter().copied())
    }

    /// Sum of weights in stored order.
    pub fn weight_sum(&self) -> f64 {
        self.weights.iter().sum()
    }

    pub(crate) fn push(&mut self, node: &[f64], weight: f64) {
        debug_assert_eq!(node.len(), self.dimension);
        self.nodes.extend_from_slice(node);
        self.weights.push(weight);
    }

    /// CSV with header `dim,x1,...,xd,weight`, one node per row, 17 significant digits.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("dim");
        for j in 1..=self.dimension {
            let _ = write!(out, ",x{j}");
        }
        out.push_str(",weight\n");
        for (x, w) in self.iter() {
            let _ = write!(out, "{}", self.dimension);
            for v in x {
                let _ = write!(out, ",{v:.16e}");
            }
            let _ = writeln!(out, ",{w:.16e}");
        }
        out
    }

    pub fn write_csv(&self, mut w: impl Write) -> std::io::Result<()> {
        w.write_all(self.to_csv().as_bytes())
    }
}

/// `Σ λ_i f(x_i)`; the empty rule gives 0.
///
/// A non-finite `f` value is reported together with the node it came from.
pub fn integrate(rule: &QuadratureRule, mut f: impl FnMut(&[f64]) -> f64) -> Result<f64> {
    let mut acc = 0.0;
    for (x, w) in rule.iter() {
        let v = f(x);
        if !v.is_finite() {
            return Err(Error::Evaluation {
                node: x.to_vec(),
                value: v,
            });
        }
        acc += w * v;
    }
    Ok(acc)
}
