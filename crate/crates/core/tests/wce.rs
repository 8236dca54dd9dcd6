mod common;

use common::{hermite_row, PhysicistsGaussHermite};
use gmq::{
    assemble, hyperbolic_cross, rate_fit, wce_1d, wce_md, AssemblyParams, CubeRuleFactory,
    CubeRuleKind, QuadratureRule,
};
use proptest::prelude::*;

/// Bound on `exp(-x²/4) |H_k(x)|` over all `k` and `x` for the normalized
/// probabilists' polynomials (Cramér's inequality rescaled).
const CRAMER: f64 = 1.086_435;

fn assembled_1d(n: u64, a: f64) -> QuadratureRule {
    let p = AssemblyParams::new(1, a, 1.0, n).unwrap();
    assemble(&CubeRuleFactory::new(CubeRuleKind::Midpoint1D, true), &p).unwrap()
}

#[test]
fn empty_rule_has_unit_error() {
    let r = QuadratureRule::empty(1);
    assert_eq!(wce_1d(&r, 1.5, 100).unwrap(), 1.0);
    assert_eq!(wce_md(&QuadratureRule::empty(2), 1.5, 100).unwrap(), 1.0);
}

#[test]
fn single_node_at_origin() {
    // sqrt(Σ_{j=1}^{15000} (2j+1)^{-2} ((2j-1)!!/(2j)!!)), high-precision reference
    let r = QuadratureRule::from_1d(vec![0.0], vec![1.0]).unwrap();
    let e = wce_1d(&r, 2.0, 30_000).unwrap();
    assert!((e - 0.297_981_532_938_443_66).abs() < 1e-12, "{e}");
}

#[test]
fn single_node_series_by_hand() {
    // H_{2j}(0)² = (2j-1)!! / (2j)!!, odd moments vanish
    let r = QuadratureRule::from_1d(vec![0.0], vec![1.0]).unwrap();
    let mut ratio = 1.0;
    let mut acc = 0.0;
    for j in 1..=50usize {
        ratio *= (2 * j - 1) as f64 / (2 * j) as f64;
        acc += ratio / ((2 * j + 1) as f64).powf(1.5);
    }
    let e = wce_1d(&r, 1.5, 101).unwrap();
    assert!((e * e - acc).abs() < 1e-14);
}

#[test]
fn kernel_form_agrees_with_coefficient_form() {
    // err² = ∫∫K - 2 Σ λ_i ∫K(x_i, ·) + Σ λ_i λ_j K(x_i, x_j) with the truncated kernel
    let m = 500;
    let s = 2.0;
    let xs = [-0.7, 0.2, 1.3];
    let ws = [0.3, 0.45, 0.2];
    let kernel = |x: f64, y: f64| {
        let hx = hermite_row(x, m);
        let hy = hermite_row(y, m);
        (0..=m)
            .map(|k| ((k + 1) as f64).powf(-s) * hx[k] * hy[k])
            .sum::<f64>()
    };
    let gh = PhysicistsGaussHermite::new(260);
    let double: f64 = gh.integrate(|x| gh.integrate(|y| kernel(x, y)));
    let mut err2 = double;
    for i in 0..3 {
        err2 -= 2.0 * ws[i] * gh.integrate(|y| kernel(xs[i], y));
        for j in 0..3 {
            err2 += ws[i] * ws[j] * kernel(xs[i], xs[j]);
        }
    }
    let r = QuadratureRule::from_1d(xs.to_vec(), ws.to_vec()).unwrap();
    let e = wce_1d(&r, s, m).unwrap();
    assert!((e * e - err2).abs() < 1e-10, "{} vs {}", e * e, err2);
}

#[test]
fn error_grows_with_truncation() {
    let r = assembled_1d(300, 1.5);
    let mut prev = 0.0;
    for m in [1, 10, 100, 1000, 10_000] {
        let e = wce_1d(&r, 1.5, m).unwrap();
        assert!(e >= prev);
        prev = e;
    }
}

#[test]
fn error_is_at_least_the_weight_defect() {
    for n in [10u64, 100, 1000] {
        let r = assembled_1d(n, 2.0);
        let e = wce_1d(&r, 2.0, 1000).unwrap();
        assert!(e >= (1.0 - r.weight_sum()).abs());
    }
}

#[test]
fn symmetric_rule_has_vanishing_odd_moments() {
    let r = assembled_1d(2000, 1.7);
    let moments = gmq::wce::hermite_moments_1d(&r, 41);
    for k in (1..=41).step_by(2) {
        assert!(moments[k].abs() < 1e-14, "k={k}: {}", moments[k]);
    }
}

#[test]
fn one_dimensional_cross_matches_1d() {
    for n in [50u64, 700, 4096] {
        let r = assembled_1d(n, 1.8);
        for s in [1.1, 2.8] {
            assert_eq!(
                wce_1d(&r, s, 999).unwrap().to_bits(),
                wce_md(&r, s, 1000).unwrap().to_bits()
            );
        }
    }
}

#[test]
fn hyperbolic_cross_matches_brute_force() {
    let cross = hyperbolic_cross(2, 100).unwrap();
    let mut expected = Vec::new();
    for i in 0..100usize {
        for j in 0..100usize {
            if (i, j) != (0, 0) && (i + 1) * (j + 1) <= 100 {
                expected.push(vec![i, j]);
            }
        }
    }
    assert_eq!(cross.indices(), &expected[..]);
    assert_eq!(cross.max_degree(), 99);
}

#[test]
fn two_dimensional_error_decreases_with_budget() {
    let factory = CubeRuleFactory::new(CubeRuleKind::Fibonacci2D, true);
    let errs: Vec<f64> = [1u64 << 6, 1 << 8, 1 << 10]
        .iter()
        .map(|&n| {
            let p = AssemblyParams::new(2, 2.0, 1.0, n).unwrap();
            wce_md(&assemble(&factory, &p).unwrap(), 2.0, 200).unwrap()
        })
        .collect();
    assert!(errs[1] <= errs[0] && errs[2] <= errs[1], "{errs:?}");
}

#[test]
fn rate_fit_recovers_power_laws() {
    let pts: Vec<(u64, f64)> = (5..12)
        .map(|k| (1u64 << k, 3.0 * (1u64 << k) as f64 / 1e6))
        .collect();
    assert!((rate_fit(&pts).unwrap() - 1.0).abs() < 1e-12);
    let pts: Vec<(u64, f64)> = (5..12)
        .map(|k| (1u64 << k, ((1u64 << k) as f64).powf(-2.5)))
        .collect();
    assert!((rate_fit(&pts).unwrap() + 2.5).abs() < 1e-12);
    assert!(rate_fit(&pts[..2]).is_err());
    assert!(rate_fit(&[(4, 1.0), (2, 1.0), (8, 1.0)]).is_err());
    assert!(rate_fit(&[(2, 1.0), (4, 0.0), (8, 1.0)]).is_err());
}

#[test]
fn rejects_bad_inputs() {
    let r = assembled_1d(100, 1.0);
    assert!(wce_1d(&r, 0.5, 10).is_err());
    assert!(wce_1d(&r, 1.0, 0).is_err());
    assert!(wce_1d(&QuadratureRule::empty(2), 1.0, 10).is_err());
    assert!(QuadratureRule::from_1d(vec![f64::NAN], vec![1.0]).is_err());
}

#[test]
fn truncation_tail_small_for_smooth_spaces() {
    for n in [1u64 << 5, 1 << 8, 1 << 12] {
        let r = assembled_1d(n, 2.7);
        for s in [2.7, 2.8] {
            let lo = wce_1d(&r, s, 10_000).unwrap();
            let hi = wce_1d(&r, s, 30_000).unwrap();
            assert!(hi - lo <= 1e-6, "n={n} s={s}: {}", hi - lo);
            let half = wce_1d(&r, s, 15_000).unwrap();
            assert!(hi - half < 1e-6);
        }
    }
}

#[test]
fn truncation_tail_within_cramer_bound() {
    for n in [1u64 << 5, 1 << 9, 1 << 12] {
        for s in [1.1, 1.7, 2.8] {
            let r = assembled_1d(n, s);
            let amp: f64 = r
                .iter()
                .map(|(x, w)| w.abs() * (x[0] * x[0] / 4.0).exp())
                .sum();
            let (m1, m2) = (10_000usize, 30_000usize);
            let zeta: f64 = (m1 + 1..=m2).map(|k| ((k + 1) as f64).powf(-s)).sum();
            let lo = wce_1d(&r, s, m1).unwrap();
            let hi = wce_1d(&r, s, m2).unwrap();
            let bound = (CRAMER * amp).powi(2) * zeta;
            assert!(hi * hi - lo * lo <= bound * (1.0 + 1e-12), "n={n} s={s}");
        }
    }
}

#[test]
fn cramer_constant_holds_on_a_grid() {
    for i in 0..=400 {
        let x = -20.0 + 0.1 * i as f64;
        let scale = (-x * x / 4.0).exp();
        for h in hermite_row(x, 3000) {
            assert!((h * scale).abs() <= CRAMER);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn smoother_spaces_have_smaller_error(n in 4u64..2000, s in 0.6f64..3.0, ds in 0.01f64..1.0) {
        let r = assembled_1d(n, 1.5);
        prop_assert!(wce_1d(&r, s + ds, 500).unwrap() <= wce_1d(&r, s, 500).unwrap());
    }
}
