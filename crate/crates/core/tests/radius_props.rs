use maminda::catalog::{in_psi_image, MaMindaSpec};
use maminda::extremal::t_series;
use maminda::radius::{
    convex_order_equation, curve_points, k_starlike_equation, majorization_equation, majorization_radius,
    radius_convex_order, radius_k_starlike, radius_starlike_order, CurveId,
};
use maminda::series::series_div;
use num_complex::Complex64;
use proptest::prelude::*;

/// First grid point at or past a sign change on a `step` grid from 0.
fn scan(f: impl Fn(f64) -> f64, step: f64) -> f64 {
    let f0 = f(0.0);
    let mut k = 1u64;
    loop {
        let x = k as f64 * step;
        if f(x) * f0 <= 0.0 {
            return x;
        }
        k += 1;
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn starlike_order_radius_decreases(a in 0.3069f64..0.999, b in 0.3069f64..0.999) {
        prop_assume!((a - b).abs() > 1e-9);
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        prop_assert!(radius_starlike_order(lo).unwrap() > radius_starlike_order(hi).unwrap());
    }

    #[test]
    fn k_starlike_radius_decreases(a in 0.05f64..20.0, b in 0.05f64..20.0) {
        prop_assume!((a - b).abs() > 1e-6);
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        prop_assert!(radius_k_starlike(lo).unwrap().root > radius_k_starlike(hi).unwrap().root);
    }

    #[test]
    fn roots_match_a_scan(alpha in 0.0f64..0.99, k in 0.1f64..8.0) {
        let r = radius_convex_order(alpha).unwrap();
        prop_assert!(r.residual.abs() < 1e-12);
        prop_assert!((r.root - scan(|x| convex_order_equation(x, alpha), 1e-6)).abs() <= 1e-6);
        let r = radius_k_starlike(k).unwrap();
        prop_assert!(r.residual.abs() < 1e-12);
        prop_assert!((r.root - scan(|x| k_starlike_equation(x, k), 1e-6)).abs() <= 1e-6);
    }
}

#[test]
fn majorization_root_matches_a_scan() {
    let r = majorization_radius().unwrap();
    assert!(r.residual.abs() < 1e-12);
    assert!((r.root - scan(majorization_equation, 1e-6)).abs() <= 1e-6);
}

#[test]
fn starlike_order_sharpness_from_the_series() {
    let f0 = t_series(&MaMindaSpec::psi(), 1, 600).unwrap().series;
    let g = f0.derivative().times_z();
    // z f'/f as a series, dividing both by z
    let num = maminda::series::TruncatedSeries::new(g.coeffs()[1..].to_vec()).unwrap();
    let den = maminda::series::TruncatedSeries::new(f0.coeffs()[1..].to_vec()).unwrap();
    let q = series_div(&num, &den, 599).unwrap();
    for alpha in [0.4, 0.5, 0.6] {
        let z0 = radius_starlike_order(alpha).unwrap();
        let v = q.eval(Complex64::new(z0, 0.0));
        assert!((v.re - alpha).abs() < 1e-6, "alpha = {alpha}: {v}");
    }
}

#[test]
fn convex_radius_at_zero_is_where_the_bound_turns() {
    let r = radius_convex_order(0.0).unwrap().root;
    let lower = |x: f64| (1.0 - x) * (1.0 - (1.0 + x).ln()).powi(2) - x;
    assert!(lower(r - 1e-6) > 0.0 && lower(r + 1e-6) < 0.0);
}

#[test]
fn tau_separates_inside_from_outside() {
    let pts = curve_points(CurveId::Tau, 1024).unwrap();
    let mut checked = 0;
    for i in (8..pts.len() - 8).step_by(15) {
        let tangent = pts[i + 1] - pts[i - 1];
        let normal = Complex64::new(-tangent.im, tangent.re) / tangent.norm();
        let eps = 1e-4;
        let (a, b) = (pts[i] + eps * normal, pts[i] - eps * normal);
        assert_ne!(in_psi_image(a), in_psi_image(b), "at {}", pts[i]);
        checked += 1;
    }
    assert!(checked >= 64);
    // away from the logarithmic ends at θ = ±π the points trace one arc
    let mid = &pts[pts.len() / 8..7 * pts.len() / 8];
    assert!(mid.windows(2).all(|w| (w[1] - w[0]).norm() < 0.05));
    // symmetric about the real axis, through 1 - log 2 at θ = 0
    let n = pts.len();
    for i in 0..n {
        assert!((pts[i] - pts[n - 1 - i].conj()).norm() < 1e-9);
    }
}
