//! Sweeps over Carathéodory coefficients checking the `p_2 - v p_1^2`
//! bounds, the `(p_1, x, y)` reconstruction, and the
//! `|p_3 - 2 p_1 p_2 + p_1^3| ≤ 2` inequality (plus its `p_4` companion on
//! composed samples).

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::caratheodory::caratheodory_point;
use super::schwarz::{sample_schwarz, schwarz_sample_stream, SchwarzKind, SchwarzSample};
use crate::error::{Error, Result};
use crate::series::{series_div, TruncatedSeries};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct LemmaReport {
    pub name: String,
    pub points: usize,
    /// largest value of the checked functional
    pub max_value: f64,
    /// largest `functional - bound` (≤ 0 when the inequality holds)
    pub max_violation: f64,
    /// extra named quantities (refinements, identity residuals)
    pub extra: Vec<(String, f64)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

fn check_density(density: usize) -> Result<()> {
    if density < 2 {
        return Err(Error::OutOfRange {
            what: "density",
            value: density as f64,
            range: ">= 2",
        });
    }
    Ok(())
}

/// Grid of `(p_1, x)` with `p_1 ∈ [0, 2]`, `|x| ∈ [0, 1]`, `arg x ∈ [0, 2π)`.
fn grid(density: usize) -> impl ParallelIterator<Item = (f64, Complex64)> {
    let n = density;
    let step = 1.0 / (n - 1) as f64;
    let dth = std::f64::consts::TAU / n as f64;
    (0..n * n * n).into_par_iter().map(move |idx| {
        let (i, j, l) = (idx / (n * n), (idx / n) % n, idx % n);
        (2.0 * i as f64 * step, Complex64::from_polar(j as f64 * step, l as f64 * dth))
    })
}

fn fmax(a: f64, b: f64) -> f64 {
    a.max(b)
}

/// `|p_2 - v p_1^2| ≤ -4v + 2 (v ≤ 0), 2 (0 ≤ v ≤ 1), 4v - 2 (v ≥ 1)`.
pub fn p1p2_bound(v: f64) -> f64 {
    if v <= 0.0 {
        2.0 - 4.0 * v
    } else if v <= 1.0 {
        2.0
    } else {
        4.0 * v - 2.0
    }
}

/// Sweeps `density^3` Carathéodory points for the three-branch bound on
/// `|p_2 - v p_1^2|` and, when `0 < v < 1`, the refinements
/// `|p_2 - v p_1^2| + v |p_1|^2 ≤ 2` (`v ≤ 1/2`) and
/// `|p_2 - v p_1^2| + (1 - v)|p_1|^2 ≤ 2` (`v ≥ 1/2`).
pub fn lemma_p1p2_check(v: f64, density: usize) -> Result<LemmaReport> {
    check_density(density)?;
    let bound = p1p2_bound(v);
    let (max_value, max_violation, refine) = grid(density)
        .map(|(p1, x)| {
            let pt = caratheodory_point(p1, x, Complex64::new(0.0, 0.0)).expect("grid is admissible");
            let val = (pt.p2 - v * p1 * p1).norm();
            let refine = if v > 0.0 && v <= 0.5 {
                val + v * p1 * p1
            } else if (0.5..1.0).contains(&v) {
                val + (1.0 - v) * p1 * p1
            } else {
                f64::NEG_INFINITY
            };
            (val, val - bound, refine)
        })
        .reduce(
            || (f64::NEG_INFINITY, f64::NEG_INFINITY, f64::NEG_INFINITY),
            |a, b| (fmax(a.0, b.0), fmax(a.1, b.1), fmax(a.2, b.2)),
        );
    let mut extra = vec![("bound".to_string(), bound)];
    let mut max_violation = max_violation;
    if refine.is_finite() {
        extra.push(("refinedMax".to_string(), refine));
        max_violation = max_violation.max(refine - 2.0);
    }
    Ok(LemmaReport {
        name: format!("p1p2 v={v}"),
        points: density.pow(3),
        max_value,
        max_violation,
        extra,
        note: None,
    })
}

const Y_SAMPLES: [Complex64; 5] = [
    Complex64 { re: 1.0, im: 0.0 },
    Complex64 { re: 0.0, im: 1.0 },
    Complex64 { re: -1.0, im: 0.0 },
    Complex64 { re: 0.0, im: -1.0 },
    Complex64 { re: 0.5, im: 0.25 },
];

/// Checks that `(p_1, x, y)` reproduces `p_2, p_3` of a genuine Carathéodory
/// function: the Schur-type Schwarz function built from the parameters has
/// `(1 + ω)/(1 - ω) = 1 + p_1 z + p_2 z^2 + p_3 z^3 + ...`, and `|ω| ≤ 1` on
/// the unit circle (checked on a subgrid).
pub fn lemma_p1p2p3_check(density: usize) -> Result<LemmaReport> {
    check_density(density)?;
    let residual = grid(density)
        .map(|(p1, x)| {
            Y_SAMPLES
                .iter()
                .map(|&y| {
                    let pt = caratheodory_point(p1, x, y).expect("grid is admissible");
                    let p = pt.caratheodory_series(3).expect("1 - ω(0) = 1");
                    (p.coeff(1) - p1).norm().max((p.coeff(2) - pt.p2).norm()).max((p.coeff(3) - pt.p3).norm())
                })
                .fold(0.0, f64::max)
        })
        .reduce(|| 0.0, f64::max);
    let sub = density.min(8);
    let sup = grid(sub)
        .map(|(p1, x)| {
            let pt = caratheodory_point(p1, x, Complex64::new(0.6, -0.8)).expect("admissible");
            (0..512)
                .map(|j| pt.schwarz_eval(Complex64::from_polar(1.0, std::f64::consts::TAU * j as f64 / 512.0)).norm())
                .fold(0.0, f64::max)
        })
        .reduce(|| 0.0, f64::max);
    Ok(LemmaReport {
        name: "p1p2p3 reconstruction".to_string(),
        points: density.pow(3) * Y_SAMPLES.len(),
        max_value: residual,
        max_violation: residual.max(sup - 1.0),
        extra: vec![("identityResidual".to_string(), residual), ("schwarzBoundarySup".to_string(), sup)],
        note: None,
    })
}

/// `p_1..p_4` of `(1 + ω)/(1 - ω)`.
fn caratheodory_prefix(w: &SchwarzSample) -> Result<[Complex64; 4]> {
    let w = w.series.with_order(4);
    let one = TruncatedSeries::one(4);
    let p = series_div(&(&one + &w), &(&one - &w), 4)?;
    Ok([p.coeff(1), p.coeff(2), p.coeff(3), p.coeff(4)])
}

/// `|p_3 - 2 p_1 p_2 + p_1^3| ≤ 2` over a `density^3` sweep of `(p_1, x)`
/// with `y` eliminated (the functional is affine in `y`, so its max over
/// `|y| ≤ 1` is `|P| + |Q|`). The `p_4` inequality
/// `|p_1^4 - 3 p_1^2 p_2 + p_2^2 + 2 p_1 p_3 - p_4| ≤ 2` has no parameter
/// formula for `p_4` and is checked on `ω = z^m` and seeded Schwarz samples.
pub fn eq_p31_check(density: usize) -> Result<LemmaReport> {
    check_density(density)?;
    let f = |p1: f64, p2: Complex64, p3: Complex64| p3 - 2.0 * p1 * p2 + p1.powi(3);
    let first = grid(density)
        .map(|(p1, x)| {
            let a = caratheodory_point(p1, x, Complex64::new(0.0, 0.0)).expect("admissible");
            let b = caratheodory_point(p1, x, Complex64::new(1.0, 0.0)).expect("admissible");
            let p = f(p1, a.p2, a.p3);
            let q = f(p1, b.p2, b.p3) - p;
            p.norm() + q.norm()
        })
        .reduce(|| f64::NEG_INFINITY, f64::max);

    let mut samples = Vec::new();
    for m in 1..=6 {
        samples.push(sample_schwarz(SchwarzKind::Monomial { m }, 0)?);
    }
    for i in 0..200 {
        samples.push(schwarz_sample_stream(0x5eed, i)?);
    }
    let mut second: f64 = f64::NEG_INFINITY;
    let mut first_on_samples: f64 = f64::NEG_INFINITY;
    for s in &samples {
        let [p1, p2, p3, p4] = caratheodory_prefix(s)?;
        let p1sq = p1 * p1;
        second = second.max((p1sq * p1sq - 3.0 * p1sq * p2 + p2 * p2 + 2.0 * p1 * p3 - p4).norm());
        first_on_samples = first_on_samples.max((p3 - 2.0 * p1 * p2 + p1sq * p1).norm());
    }
    Ok(LemmaReport {
        name: "p31".to_string(),
        points: density.pow(3),
        max_value: first,
        max_violation: (first - 2.0).max(second - 2.0).max(first_on_samples - 2.0),
        extra: vec![
            ("p4InequalityMaxOnSamples".to_string(), second),
            ("p4Samples".to_string(), samples.len() as f64),
        ],
        note: Some("the p4 inequality is checked only on composed Schwarz samples".to_string()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p1p2_examples() {
        let r = lemma_p1p2_check(0.0, 16).unwrap();
        assert!((r.max_value - 2.0).abs() < 1e-12 && r.max_violation <= 1e-9);
        let r = lemma_p1p2_check(2.0, 16).unwrap();
        assert!((r.max_value - 6.0).abs() < 1e-12 && r.max_violation <= 1e-9);
        let r = lemma_p1p2_check(23.0 / 24.0, 16).unwrap();
        assert!(r.max_violation <= 1e-9);
        assert!(r.extra.iter().any(|(k, v)| k == "refinedMax" && *v <= 2.0 + 1e-9));
        for v in [-1.5, 0.25, 0.5, 0.75, 1.0, 3.0] {
            assert!(lemma_p1p2_check(v, 12).unwrap().max_violation <= 1e-9, "v = {v}");
        }
    }

    #[test]
    fn p1p2p3_reconstruction() {
        let r = lemma_p1p2p3_check(10).unwrap();
        assert!(r.max_violation <= 1e-9, "{r:?}");
    }

    #[test]
    fn p31_examples() {
        let r = eq_p31_check(16).unwrap();
        assert!(r.max_violation <= 1e-9, "{r:?}");
        assert!((r.max_value - 2.0).abs() < 1e-12);
        let z = sample_schwarz(SchwarzKind::Monomial { m: 1 }, 0).unwrap();
        let [p1, p2, p3, _] = caratheodory_prefix(&z).unwrap();
        assert!(((p3 - 2.0 * p1 * p2 + p1 * p1 * p1).norm() - 2.0).abs() < 1e-12);
        let z3 = sample_schwarz(SchwarzKind::Monomial { m: 3 }, 0).unwrap();
        let [p1, p2, p3, _] = caratheodory_prefix(&z3).unwrap();
        assert!(((p3 - 2.0 * p1 * p2 + p1 * p1 * p1).norm() - 2.0).abs() < 1e-12);
        let z2 = sample_schwarz(SchwarzKind::Monomial { m: 2 }, 0).unwrap();
        let [p1, p2, p3, _] = caratheodory_prefix(&z2).unwrap();
        assert_eq!((p3 - 2.0 * p1 * p2 + p1 * p1 * p1).norm(), 0.0);
    }
}
