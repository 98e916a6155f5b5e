use maminda::catalog::{counterpart, CatalogName, MaMindaSpec};
use maminda::extremal::{d_series, t_series};
use maminda::series::{
    integrate_q_over_t, series_add, series_compose, series_div, series_exp, series_log1p, series_mul, TruncatedSeries,
};
use num_complex::Complex64;
use proptest::prelude::*;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Series of length `n + 1` with coefficients in the box `[-s, s]^2`.
fn series(n: usize, s: f64, c0: Option<Complex64>) -> impl Strategy<Value = TruncatedSeries> {
    prop::collection::vec((-s..s, -s..s), n + 1).prop_map(move |v| {
        let mut coeffs: Vec<Complex64> = v.into_iter().map(|(a, b)| c(a, b)).collect();
        if let Some(c0) = c0 {
            coeffs[0] = c0;
        }
        TruncatedSeries::new(coeffs).unwrap()
    })
}

/// `s(z)/z` for `s(0) = 0`.
fn div_z(s: &TruncatedSeries) -> TruncatedSeries {
    TruncatedSeries::new(s.coeffs()[1..].to_vec()).unwrap()
}

fn rel_close(a: &TruncatedSeries, b: &TruncatedSeries, tol: f64) -> bool {
    let scale = a.coeffs().iter().chain(b.coeffs()).map(|x| x.norm()).fold(1.0, f64::max);
    a.max_abs_diff(b) <= tol * scale
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn exp_inverts_log1p(a in (4usize..24).prop_flat_map(|n| series(n, 0.5, Some(c(0.0, 0.0))))) {
        let n = a.order();
        let back = series_exp(&series_log1p(&a, n).unwrap(), n).unwrap();
        let expected = &TruncatedSeries::one(n) + &a;
        prop_assert!(back.max_abs_diff(&expected) < 1e-12, "{}", back.max_abs_diff(&expected));
    }

    #[test]
    fn integral_of_q_over_t(q in (4usize..30).prop_flat_map(|n| series(n, 2.0, Some(c(1.0, 0.0))))) {
        let n = q.order();
        let i = integrate_q_over_t(&q, n).unwrap();
        let lhs = i.derivative().times_z();
        let rhs = &q - &TruncatedSeries::one(n);
        prop_assert!(lhs.with_order(n - 1).max_abs_diff(&rhs.with_order(n - 1)) < 1e-14);
    }

    #[test]
    fn composition_is_associative(
        (f, g, h) in (3usize..14).prop_flat_map(|n| (
            series(n, 1.0, None),
            series(n, 0.7, Some(c(0.0, 0.0))),
            series(n, 0.7, Some(c(0.0, 0.0))),
        ))
    ) {
        let n = f.order();
        let left = series_compose(&series_compose(&f, &g, n).unwrap(), &h, n).unwrap();
        let right = series_compose(&f, &series_compose(&g, &h, n).unwrap(), n).unwrap();
        prop_assert!(rel_close(&left, &right, 1e-12));
        prop_assert!(left.max_abs_diff(&right) < 1e-10);
    }

    #[test]
    fn multiplication_is_a_ring_product(
        (a, b, d) in (2usize..30).prop_flat_map(|n| (series(n, 1.0, None), series(n, 1.0, None), series(n, 1.0, None)))
    ) {
        let n = a.order();
        prop_assert!(series_mul(&a, &b, n).max_abs_diff(&series_mul(&b, &a, n)) < 1e-12);
        let lhs = series_mul(&a, &series_add(&b, &d), n);
        let rhs = series_add(&series_mul(&a, &b, n), &series_mul(&a, &d, n));
        prop_assert!(rel_close(&lhs, &rhs, 1e-12));
    }

    #[test]
    fn catalog_eval_matches_partial_sums(idx in 0usize..6, th in 0.0..std::f64::consts::TAU) {
        let spec = MaMindaSpec::named(CatalogName::ALL[idx]);
        let z = Complex64::from_polar(0.5, th);
        let direct = spec.eval(z);
        let partial = spec.series(40).eval(z);
        prop_assert!((direct - partial).norm() < 1e-8);
    }

    #[test]
    fn extremal_odes(idx in 0usize..6, n in 1usize..5) {
        let order = 24;
        let spec = MaMindaSpec::named(CatalogName::ALL[idx]);
        let m = TruncatedSeries::monomial(n, c(1.0, 0.0), order);
        let target = series_compose(&spec.series(order), &m, order).unwrap();

        // z t'/t = Φ(z^n)
        let t = t_series(&spec, n, order + 1).unwrap().series;
        let zt = t.derivative().times_z();
        let q = series_div(&div_z(&zt), &div_z(&t), order).unwrap();
        prop_assert!(q.with_order(order - 1).max_abs_diff(&target.with_order(order - 1)) < 1e-10);

        // 1 + z d''/d' = Φ(z^n)
        let d = d_series(&spec, n, order + 2).unwrap().series;
        let d1 = d.derivative();
        let lhs = &TruncatedSeries::one(order) + &series_div(&d1.derivative().times_z(), &d1, order).unwrap();
        prop_assert!(lhs.with_order(order - 1).max_abs_diff(&target.with_order(order - 1)) < 1e-10);
    }

    #[test]
    fn counterpart_is_reflection(idx in 0usize..6, j in 0usize..256) {
        let spec = MaMindaSpec::named(CatalogName::ALL[idx]);
        let cp = counterpart(&spec);
        let z = Complex64::from_polar(0.99, std::f64::consts::TAU * j as f64 / 256.0);
        prop_assert!((cp.eval(z) - spec.eval(-z)).norm() < 1e-12);
    }
}

#[test]
fn counterpart_distortion_derivative_alternates() {
    for name in CatalogName::ALL {
        let spec = MaMindaSpec::named(name);
        let a = d_series(&spec, 1, 30).unwrap().series.derivative();
        let b = d_series(&counterpart(&spec), 1, 30).unwrap().series.derivative();
        for k in 0..a.order() {
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            assert!((b.coeff(k) - sign * a.coeff(k)).norm() < 1e-12, "{name:?} k = {k}");
        }
    }
}
