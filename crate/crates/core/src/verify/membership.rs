//! Sampled members of the starlike class of `ψ` and of `S_l(α)` checked
//! against the Re/Im envelopes, the convex distortion envelope and the
//! coefficient bounds.

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::schwarz::{schwarz_sample_stream, SchwarzSample};
use crate::bounds::{
    a2a3_a4_bound, a4_bound, a5_bound_sl, alpha_class_params, fekete_szego, h3_bound_sl_alpha, h3_bound_sl_star,
    second_hankel, PhiCoeffs, SpecialCoeffs,
};
use crate::catalog::MaMindaSpec;
use crate::error::{Error, Result};
use crate::extremal::{distortion_envelope_convex, f_from_q};
use crate::radius::re_im_envelope;
use crate::series::{series_compose, TruncatedSeries};

/// Radii and angle count of the envelope check.
pub const ENVELOPE_RADII: [f64; 3] = [0.3, 0.6, 0.9];
pub const DISTORTION_RADII: [f64; 2] = [0.3, 0.5];
pub const ANGLES: usize = 64;
pub const ALPHAS: [f64; 3] = [0.0, 0.5, 1.0];
/// Series order for the `f` used in the evaluation checks (radius ≤ 0.6).
const EVAL_SERIES_ORDER: usize = 48;
/// A margin below this fails the suite.
pub const FAIL_MARGIN: f64 = -1e-6;

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct MembershipReport {
    pub samples: usize,
    pub seed: u64,
    /// `min (Re zf'/f - (1 - log(1 + r)))`
    pub worst_re_lower: f64,
    /// `min ((1 - log(1 - r)) - Re zf'/f)`
    pub worst_re_upper: f64,
    /// `min (arctan(r/√(1 - r^2)) - |Im zf'/f|)`
    pub worst_im: f64,
    /// convex-class `d'(r) ≤ |f'| ≤ d'(-r)`, smaller of the two margins
    pub worst_distortion: f64,
    /// smallest `bound - |functional|` over all coefficient bounds and α
    pub worst_coefficient: f64,
    pub worst_coefficient_label: String,
    /// max `|zf'/f|` mismatch between the series of `f` and `ψ(ω(z))`
    pub series_consistency: f64,
    /// max mismatch between `S_l(α)` coefficients from `F ↦ f` and from the
    /// general `M_{g,h}` recursion
    pub recursion_discrepancy: f64,
    pub violations: Vec<String>,
    pub passed: bool,
}

/// `[re lower, re upper, im]` margins of `ψ(ω(z))` over the envelope grid.
pub fn envelope_margins(omega: impl Fn(Complex64) -> Complex64) -> Result<[f64; 3]> {
    let psi = MaMindaSpec::psi();
    let mut worst = [f64::INFINITY; 3];
    for r in ENVELOPE_RADII {
        let env = re_im_envelope(r)?;
        for j in 0..ANGLES {
            let z = Complex64::from_polar(r, std::f64::consts::TAU * j as f64 / ANGLES as f64);
            let w = psi.eval(omega(z));
            worst[0] = worst[0].min(w.re - env.re_lo);
            worst[1] = worst[1].min(env.re_hi - w.re);
            worst[2] = worst[2].min(env.im_abs - w.im.abs());
        }
    }
    Ok(worst)
}

/// `a_1..a_n` of `f ∈ M_{g,h}` with `(f*g)/(f*h) = q`, from
/// `a_n (g_n - h_n) = ∑_{k<n} a_k h_k q_{n-k}`.
pub fn coefficients_from_subordinate(g: &[f64], h: &[f64], q: &TruncatedSeries) -> Vec<Complex64> {
    // g[0] = h[0] = 1 for a_1
    let n = g.len();
    let mut a = vec![Complex64::new(0.0, 0.0); n];
    a[0] = Complex64::new(1.0, 0.0);
    for m in 1..n {
        let s: Complex64 = (0..m).map(|k| a[k] * h[k] * q.coeff(m - k)).sum();
        a[m] = s / (g[m] - h[m]);
    }
    a
}

fn alpha_gh(alpha: f64, n: usize) -> (Vec<f64>, Vec<f64>) {
    let h: Vec<f64> = (1..=n).map(|k| 1.0 + (k as f64 - 1.0) * alpha).collect();
    let g: Vec<f64> = h.iter().enumerate().map(|(i, hk)| (i + 1) as f64 * hk).collect();
    (g, h)
}

struct AlphaBounds {
    alpha: f64,
    a3: f64,
    fs: f64,
    h2: f64,
    a4: f64,
    a2a3_a4: f64,
    a5: f64,
    h3: f64,
}

fn alpha_bounds(alpha: f64) -> Result<AlphaBounds> {
    let p = alpha_class_params(alpha)?;
    let b = PhiCoeffs::sl();
    let h3 = if alpha == 0.0 {
        h3_bound_sl_star().value
    } else {
        h3_bound_sl_alpha(alpha)?.value
    };
    Ok(AlphaBounds {
        alpha,
        a3: fekete_szego(&p, SpecialCoeffs::sl(), 0.0)?.value,
        fs: fekete_szego(&p, SpecialCoeffs::sl(), 1.0)?.value,
        h2: second_hankel(&p, b)?.value,
        a4: a4_bound(&p, b)?.value,
        a2a3_a4: a2a3_a4_bound(&p, b)?.value,
        a5: a5_bound_sl(alpha)?.value,
        h3,
    })
}

#[derive(Default)]
struct SampleOutcome {
    env: [f64; 3],
    distortion: f64,
    coefficient: (f64, String),
    consistency: f64,
    recursion: f64,
}

fn check_sample(index: u64, s: &SchwarzSample, bounds: &[AlphaBounds]) -> Result<SampleOutcome> {
    let psi = MaMindaSpec::psi();
    let env = envelope_margins(|z| s.eval(z))?;

    let order = EVAL_SERIES_ORDER;
    let q = series_compose(&psi.series(order), &s.series.with_order(order), order)?;
    let f = f_from_q(&q, order + 1)?.series;
    let fp = f.derivative();
    let mut consistency: f64 = 0.0;
    for r in [0.3, 0.6] {
        for j in 0..ANGLES {
            let z = Complex64::from_polar(r, std::f64::consts::TAU * j as f64 / ANGLES as f64);
            let lhs = z * fp.eval(z) / f.eval(z);
            consistency = consistency.max((lhs - psi.eval(s.eval(z))).norm());
        }
    }

    // f' = F/z for the convex class when F is starlike
    let mut distortion = f64::INFINITY;
    for r in DISTORTION_RADII {
        let (lo, hi) = distortion_envelope_convex(&psi, r)?;
        for j in 0..ANGLES {
            let z = Complex64::from_polar(r, std::f64::consts::TAU * j as f64 / ANGLES as f64);
            let m = (f.eval(z) / z).norm();
            distortion = distortion.min(m - lo).min(hi - m);
        }
    }

    let big_a: Vec<Complex64> = (1..=5).map(|n| f.coeff(n)).collect();
    let mut coefficient = (f64::INFINITY, String::new());
    let mut recursion: f64 = 0.0;
    for b in bounds {
        let a: Vec<Complex64> = big_a
            .iter()
            .enumerate()
            .map(|(i, an)| an / (1.0 + i as f64 * b.alpha))
            .collect();
        let (g, h) = alpha_gh(b.alpha, 5);
        let rec = coefficients_from_subordinate(&g, &h, &q);
        for (x, y) in a.iter().zip(&rec) {
            recursion = recursion.max((x - y).norm());
        }
        let (a2, a3, a4, a5) = (a[1], a[2], a[3], a[4]);
        let h3 = a3 * (a2 * a4 - a3 * a3) - a4 * (a4 - a2 * a3) + a5 * (a3 - a2 * a2);
        for (label, bound, val) in [
            ("|a3|", b.a3, a3.norm()),
            ("|a3-a2^2|", b.fs, (a3 - a2 * a2).norm()),
            ("|a2a4-a3^2|", b.h2, (a2 * a4 - a3 * a3).norm()),
            ("|a4|", b.a4, a4.norm()),
            ("|a2a3-a4|", b.a2a3_a4, (a2 * a3 - a4).norm()),
            ("|a5|", b.a5, a5.norm()),
            ("|H3(1)|", b.h3, h3.norm()),
        ] {
            let margin = bound - val;
            if margin < coefficient.0 {
                coefficient = (margin, format!("{label} at alpha = {} (sample {index})", b.alpha));
            }
        }
    }
    Ok(SampleOutcome {
        env,
        distortion,
        coefficient,
        consistency,
        recursion,
    })
}

/// Runs `sample_count` seeded Schwarz samples through the envelope,
/// distortion and coefficient checks and reports the worst margins.
pub fn verify_class_membership_bounds(sample_count: usize, seed: u64) -> Result<MembershipReport> {
    if sample_count == 0 {
        return Err(Error::OutOfRange {
            what: "sampleCount",
            value: 0.0,
            range: ">= 1",
        });
    }
    let bounds = ALPHAS.iter().map(|&a| alpha_bounds(a)).collect::<Result<Vec<_>>>()?;
    let outcomes = (0..sample_count as u64)
        .into_par_iter()
        .map(|i| {
            let s = schwarz_sample_stream(seed, i)?;
            check_sample(i, &s, &bounds)
        })
        .collect::<Result<Vec<_>>>()?;

    let mut report = MembershipReport {
        samples: sample_count,
        seed,
        worst_re_lower: f64::INFINITY,
        worst_re_upper: f64::INFINITY,
        worst_im: f64::INFINITY,
        worst_distortion: f64::INFINITY,
        worst_coefficient: f64::INFINITY,
        ..Default::default()
    };
    for (i, o) in outcomes.iter().enumerate() {
        report.worst_re_lower = report.worst_re_lower.min(o.env[0]);
        report.worst_re_upper = report.worst_re_upper.min(o.env[1]);
        report.worst_im = report.worst_im.min(o.env[2]);
        report.worst_distortion = report.worst_distortion.min(o.distortion);
        if o.coefficient.0 < report.worst_coefficient {
            report.worst_coefficient = o.coefficient.0;
            report.worst_coefficient_label = o.coefficient.1.clone();
        }
        report.series_consistency = report.series_consistency.max(o.consistency);
        report.recursion_discrepancy = report.recursion_discrepancy.max(o.recursion);
        for (name, m) in [
            ("Re lower envelope", o.env[0]),
            ("Re upper envelope", o.env[1]),
            ("Im envelope", o.env[2]),
            ("convex distortion", o.distortion),
        ] {
            if m < FAIL_MARGIN {
                report.violations.push(format!("sample {i}: {name} margin {m:e}"));
            }
        }
        if o.coefficient.0 < FAIL_MARGIN {
            report.violations.push(format!("{}: margin {:e}", o.coefficient.1, o.coefficient.0));
        }
    }
    report.passed = report.violations.is_empty();
    Ok(report)
}
