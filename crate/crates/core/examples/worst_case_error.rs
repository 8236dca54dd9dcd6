//! Worst-case errors of assembled rules in the Hermite spaces.
//!
//! ```text
//! cargo run --release -p gmq --example worst_case_error
//! ```
//!
//! Compares the assembled rule with Gauss–Hermite of the same size, and shows
//! the two-dimensional error over a hyperbolic cross.

use gmq::gauss_hermite::{GaussHermite, MAX_GAUSS_HERMITE_NODES};
use gmq::{
    assemble, hyperbolic_cross, wce_1d, wce_md, AssemblyParams, CubeRuleFactory, CubeRuleKind,
    QuadratureRule,
};

fn main() -> gmq::Result<()> {
    let s = 1.8;
    let m = 10_000;
    let midpoint = CubeRuleFactory::new(CubeRuleKind::Midpoint1D, true);
    println!("d=1, s={s}, m={m}");
    println!(
        "{:>6} {:>8} {:>12} {:>12}",
        "n", "nodes", "assembled", "gauss-herm"
    );
    for n in [32u64, 128, 512, 2048] {
        let rule = assemble(&midpoint, &AssemblyParams::new(1, s, 1.0, n)?)?;
        let gh = if rule.len() <= MAX_GAUSS_HERMITE_NODES {
            let gh = GaussHermite::new(rule.len())?;
            let gh_rule = QuadratureRule::from_1d(gh.nodes().to_vec(), gh.weights().to_vec())?;
            format!("{:.4e}", wce_1d(&gh_rule, s, m)?)
        } else {
            "-".into()
        };
        println!(
            "{n:>6} {:>8} {:>12.4e} {gh:>12}",
            rule.len(),
            wce_1d(&rule, s, m)?
        );
    }

    let cap = 400;
    println!(
        "\nd=2, s={s}, hyperbolic cross cap {cap} ({} indices)",
        hyperbolic_cross(2, cap)?.len()
    );
    let fib = CubeRuleFactory::new(CubeRuleKind::Fibonacci2D, true);
    for n in [256u64, 1024, 4096] {
        let rule = assemble(&fib, &AssemblyParams::new(2, s, 1.0, n)?)?;
        println!("{n:>6} {:>8} {:>12.4e}", rule.len(), wce_md(&rule, s, cap)?);
    }
    Ok(())
}
