//! Quadrature for integrals against the standard Gaussian measure on `R^d`.
//!
//! The rules are assembled from equal-weight cube rules placed on integer-shifted
//! unit cubes, with a per-cube node budget that decays like a Gaussian in the
//! shift. Their quality is measured by the exact worst-case error in the
//! Hermite spaces `H^s(R^d, γ)`, computed from truncated Hermite expansions.
//!
//! | Module | Contents |
//! |--------|----------|
//! | [`hermite`] | orthonormal probabilists' Hermite polynomials, Gaussian density |
//! | [`kernel`] | Mehler kernel, fractional kernel `K_σ`, semigroup projections |
//! | [`cube`] | midpoint and Fibonacci base rules on `[-1/2, 1/2]^d`, the `ψ` transform |
//! | [`assembly`] | node allocation over shifted cubes and the assembled rule |
//! | [`wce`] | worst-case errors, hyperbolic cross, log-log rate fits |
//! | [`bench`] | sweeps, CSV/gnuplot output and the kernel property suite |
//!
//! ```
//! use gmq::{assemble, integrate, AssemblyParams, CubeRuleFactory, CubeRuleKind};
//!
//! let params = AssemblyParams::new(1, 2.0, 1.0, 4096).unwrap();
//! let rule = assemble(&CubeRuleFactory::new(CubeRuleKind::Midpoint1D, true), &params).unwrap();
//! assert!(rule.len() <= 4096);
//! let second_moment = integrate(&rule, |x| x[0] * x[0]).unwrap();
//! assert!((second_moment - 1.0).abs() < 0.02);
//! ```

pub mod assembly;
pub mod bench;
pub mod cube;
pub mod error;
pub mod gauss_hermite;
pub mod hermite;
pub mod kernel;
pub mod kernel_check;
pub mod rule;
pub mod wce;

pub use assembly::{
    allocate, assemble, assemble_detailed, varrho, xi, Allocation, Assembly, AssemblyParams,
};
pub use cube::{
    fibonacci_rule, midpoint_rule, psi, psi_prime, transform_rule, BaseRuleFactory,
    CubeRuleFactory, CubeRuleKind, CubeRuleSpec,
};
pub use error::{Error, Result};
pub use hermite::{
    gaussian_density, hermite_eval, hermite_table, GaussianDensityContext, HermiteTable,
};
pub use kernel::{k_sigma, mehler, semigroup_project, KernelQuadratureConfig};
pub use rule::{integrate, QuadratureRule};
pub use wce::{hyperbolic_cross, rate_fit, wce_1d, wce_md, ErrorReport, HyperbolicCrossIndexSet};
