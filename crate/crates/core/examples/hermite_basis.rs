//! Orthonormal Hermite polynomials and the Gaussian inner product.
//!
//! ```text
//! cargo run --release -p gmq --example hermite_basis
//! ```
//!
//! Prints a few values of `H_k`, then the Gram matrix of `H_0..H_5` under a
//! 40-node Gauss–Hermite rule, which should be the identity to rounding.

use gmq::gauss_hermite::GaussHermite;
use gmq::{gaussian_density, hermite_eval, hermite_table, GaussianDensityContext};

fn main() -> gmq::Result<()> {
    for x in [0.0, 1.0, -2.5] {
        let h = hermite_eval(x, 6)?;
        let shown: Vec<String> = h.iter().map(|v| format!("{v:+.6}")).collect();
        println!("H_0..H_6({x:+}) = {}", shown.join(" "));
    }

    let gh = GaussHermite::new(40)?;
    let table = hermite_table(gh.nodes(), 5)?;
    println!("\nGram matrix of H_0..H_5:");
    for j in 0..=5 {
        let row: Vec<String> = (0..=5)
            .map(|k| {
                let v: f64 = (0..table.len())
                    .map(|i| gh.weights()[i] * table.get(i, j) * table.get(i, k))
                    .sum();
                format!("{v:+.2e}")
            })
            .collect();
        println!("  {}", row.join(" "));
    }

    let ctx = GaussianDensityContext::new(2)?;
    println!("\nrho(0, 0) = {:.12}", gaussian_density(ctx, &[0.0, 0.0])?);
    println!("rho(1, -1) = {:.12}", gaussian_density(ctx, &[1.0, -1.0])?);
    Ok(())
}
