//! Calibrates the constants of the two-sided kernel estimates on a fixed grid
//! and checks the universal lower bound along the way.
//!
//! ```text
//! cargo run --release -p gmq --example kernel_bounds
//! ```
//!
//! The printed `sup` and `inf` are the values frozen (with headroom) in
//! `gmq::kernel_check`.

use gmq::kernel::{close_pair_profile, k_sigma, k_sigma_lower_bound, KernelQuadratureConfig};
use gmq::kernel_check::{
    CLOSE_PAIR_BOX, CLOSE_PAIR_CONSTANT, CLOSE_PAIR_T0, SIGMA_RANGE, UPPER_BOX, UPPER_CONSTANT,
};

fn grid(lo: f64, hi: f64, steps: usize) -> impl Iterator<Item = f64> {
    (0..=steps).map(move |i| lo + (hi - lo) * i as f64 / steps as f64)
}

fn main() -> gmq::Result<()> {
    let cfg = KernelQuadratureConfig::default();
    let sigmas: Vec<f64> = grid(SIGMA_RANGE.0, SIGMA_RANGE.1, 14).collect();
    let gaps = [1e-3, 1e-2, 0.1, 0.25, 0.5, 0.75, 1.0];

    // sup of K |x-y|^{1+σ} over the box; pairs (x, x + g) and (x, x - g)
    let mut sup = (0.0, 0.0, 0.0, 0.0);
    let mut worst_lower = f64::INFINITY;
    for &sigma in &sigmas {
        for x in grid(-UPPER_BOX, UPPER_BOX, 16) {
            for y in grid(-UPPER_BOX, UPPER_BOX, 16).chain(gaps.iter().flat_map(|g| [x + g, x - g]))
            {
                if y.abs() > UPPER_BOX || (x - y).abs() < 1e-3 {
                    continue;
                }
                let k = k_sigma(sigma, x, y, &cfg)?;
                let ratio = k * (x - y).abs().powf(1.0 + sigma);
                if ratio > sup.0 {
                    sup = (ratio, sigma, x, y);
                }
                worst_lower = worst_lower.min(k / k_sigma_lower_bound(sigma, x, y));
            }
        }
    }
    println!(
        "upper: sup K|x-y|^(1+s) = {:.6} at sigma={:.2} x={:.3} y={:.3}  (frozen C = {UPPER_CONSTANT})",
        sup.0, sup.1, sup.2, sup.3
    );
    println!("lower: min K / bound = {worst_lower:.6}");

    let mut inf = (f64::INFINITY, 0.0, 0.0, 0.0);
    for &sigma in &sigmas {
        for x in grid(-CLOSE_PAIR_BOX, CLOSE_PAIR_BOX, 24) {
            for g in gaps {
                for y in [x + g, x - g] {
                    if y.abs() > CLOSE_PAIR_BOX {
                        continue;
                    }
                    let k = k_sigma(sigma, x, y, &cfg)?;
                    let ratio = k / close_pair_profile(sigma, CLOSE_PAIR_T0, x, y);
                    if ratio < inf.0 {
                        inf = (ratio, sigma, x, y);
                    }
                }
            }
        }
    }
    println!(
        "close pair: inf K / profile = {:.6} at sigma={:.2} x={:.3} y={:.3}  (frozen c = {CLOSE_PAIR_CONSTANT})",
        inf.0, inf.1, inf.2, inf.3
    );
    Ok(())
}
