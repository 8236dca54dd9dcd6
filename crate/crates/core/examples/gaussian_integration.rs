//! Integrating against the standard Gaussian with an assembled rule.
//!
//! ```text
//! cargo run --release -p gmq --example gaussian_integration [n]
//! ```
//!
//! Shows the per-cube allocation and compares a few integrals with their
//! closed forms.

use gmq::{assemble_detailed, integrate, AssemblyParams, CubeRuleFactory, CubeRuleKind};

type Case = (&'static str, fn(&[f64]) -> f64, f64);

fn main() -> gmq::Result<()> {
    let n: u64 = std::env::args()
        .nth(1)
        .and_then(|v| v.parse().ok())
        .unwrap_or(1000);
    let params = AssemblyParams::new(1, 2.0, 1.0, n)?;
    let asm = assemble_detailed(
        &CubeRuleFactory::new(CubeRuleKind::Midpoint1D, true),
        &params,
    )?;
    println!(
        "budget n={n}: xi={:.4}, varrho={:.6}, {} nodes used",
        asm.allocation.xi,
        asm.allocation.varrho,
        asm.rule.len()
    );
    for (k, nk) in &asm.allocation.entries {
        println!("  cube k={:+} -> {nk} nodes", k[0]);
    }

    let rule = &asm.rule;
    let cases: [Case; 4] = [
        ("1", |_| 1.0, 1.0),
        ("x^2", |x| x[0] * x[0], 1.0),
        ("x^4", |x| x[0].powi(4), 3.0),
        ("cos(x)", |x| x[0].cos(), (-0.5f64).exp()),
    ];
    println!("\n{:>8} {:>18} {:>12}", "f", "rule", "error");
    for (name, f, exact) in cases {
        let v = integrate(rule, f)?;
        println!("{name:>8} {v:>18.12} {:>12.3e}", (v - exact).abs());
    }
    Ok(())
}
