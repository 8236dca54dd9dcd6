//! Convergence sweep at the reference setup: midpoint+ψ cubes, `a = s`,
//! `m = 30000`, `n = 2^5..2^12`.
//!
//! ```text
//! cargo run --release -p gmq --example convergence_sweep [delta] [out.csv]
//! ```
//!
//! Writes the sweep CSV (and `out.gp` next to it) and prints the fitted slopes
//! next to the target `-s`.

use std::path::PathBuf;

use gmq::bench::{self, SweepConfig, LOW_S_VALUES};

fn main() -> gmq::Result<()> {
    let mut args = std::env::args().skip(1);
    let delta: f64 = args.next().and_then(|v| v.parse().ok()).unwrap_or(1.0);
    let out = PathBuf::from(args.next().unwrap_or_else(|| "sweep.csv".into()));

    let mut cfg = SweepConfig {
        delta,
        ..SweepConfig::default()
    };
    cfg.s_values.extend_from_slice(&LOW_S_VALUES);
    cfg.s_values.sort_by(f64::total_cmp);

    let result = bench::cmd_sweep(&cfg, &out)?;
    println!("delta={delta}");
    for (s, slope) in &result.slopes {
        let errs = result.errors_for(*s);
        let monotone = errs.windows(2).all(|w| w[1] < w[0]);
        match slope {
            Some(v) => println!(
                "s={s:<4} slope {v:+.3} (target {:+.1})  decreasing: {monotone}",
                -s
            ),
            None => println!("s={s:<4} slope unavailable"),
        }
    }
    let script = out.with_extension("gp");
    bench::cmd_plot(&out, &script)?;
    println!("wrote {} and {}", out.display(), script.display());
    Ok(())
}
