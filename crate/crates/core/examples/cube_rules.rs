//! Base rules on the unit cube and the `ψ` change of variable.
//!
//! ```text
//! cargo run --release -p gmq --example cube_rules
//! ```
//!
//! The midpoint rule converges like `m^-2` on a smooth non-periodic integrand;
//! after `ψ` the boundary mismatch is smoothed away and the error falls much
//! faster. The Fibonacci lattice does the same job in two dimensions.

use gmq::cube::fibonacci_number;
use gmq::{fibonacci_rule, integrate, midpoint_rule, transform_rule};

fn main() -> gmq::Result<()> {
    // ∫_{-1/2}^{1/2} e^x dx
    let exact = 0.5f64.exp() - (-0.5f64).exp();
    println!("{:>6} {:>12} {:>12}", "m", "midpoint", "midpoint+psi");
    for m in [4, 8, 16, 32, 64] {
        let plain = midpoint_rule(m);
        let smooth = transform_rule(&plain)?;
        let e1 = (integrate(&plain, |x| x[0].exp())? - exact).abs();
        let e2 = (integrate(&smooth, |x| x[0].exp())? - exact).abs();
        println!("{m:>6} {e1:>12.3e} {e2:>12.3e}");
    }

    // ∫ e^{x+y} over the square
    let exact2 = exact * exact;
    println!("\n{:>6} {:>12} {:>12}", "F_j", "fibonacci", "fibonacci+psi");
    for j in [8, 11, 14, 17] {
        let plain = fibonacci_rule(j)?;
        let smooth = transform_rule(&plain)?;
        let f = |x: &[f64]| (x[0] + x[1]).exp();
        let e1 = (integrate(&plain, f)? - exact2).abs();
        let e2 = (integrate(&smooth, f)? - exact2).abs();
        println!("{:>6} {e1:>12.3e} {e2:>12.3e}", fibonacci_number(j));
    }
    Ok(())
}
