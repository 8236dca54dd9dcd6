//! Fitted convergence slopes as a function of the allocation decay `δ`.
//!
//! ```text
//! cargo run --release -p gmq --example delta_study
//! ```
//!
//! Functions in `H^s` may grow like `exp(x²/4)`, so the per-cube error scales
//! like `n^-s exp((δ/2 - 1/4)|k|²)`. Large `δ` starves the outer cubes and
//! the observed rate falls short of `-s`; small `δ` spends too many nodes far
//! out. This prints the slope table over a range of `δ`.

use gmq::bench::{run_sweep, SweepConfig, DEFAULT_S_VALUES, LOW_S_VALUES};

fn main() -> gmq::Result<()> {
    let mut s_values = LOW_S_VALUES.to_vec();
    s_values.extend_from_slice(&DEFAULT_S_VALUES);
    let deltas = [0.25, 0.4, 0.5, 0.75, 1.0];

    print!("{:>6}", "s");
    for d in deltas {
        print!(" {:>14}", format!("delta={d}"));
    }
    println!();

    let mut table = Vec::new();
    for &delta in &deltas {
        let cfg = SweepConfig {
            s_values: s_values.clone(),
            delta,
            ..SweepConfig::default()
        };
        table.push(run_sweep(&cfg)?);
    }
    for &s in &s_values {
        print!("{s:>6}");
        for result in &table {
            let slope = result.slope(s).unwrap_or(f64::NAN);
            let monotone = result.errors_for(s).windows(2).all(|w| w[1] < w[0]);
            print!(
                " {:>14}",
                format!("{slope:+.3}{}", if monotone { "" } else { "*" })
            );
        }
        println!();
    }
    println!("\n* errors not strictly decreasing along n");
    Ok(())
}
