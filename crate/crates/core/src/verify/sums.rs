//! The sum counterexample and the `λ`-combination sufficiency check.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::catalog::{in_psi_image, psi_preimage_modulus};
use crate::error::{Error, Result};
use crate::series::{series_compose, series_div, series_exp, TruncatedSeries};

/// `∑_{k≥1} (-u)^k / k^2` for `|u| < 1`.
fn neg_dilog(u: Complex64) -> Complex64 {
    let mut sum = Complex64::new(0.0, 0.0);
    let mut p = Complex64::new(1.0, 0.0);
    let mut k = 1;
    while k < 100_000 {
        p *= -u;
        let term = p / (k * k) as f64;
        sum += term;
        if term.norm() < 1e-18 {
            break;
        }
        k += 1;
    }
    sum
}

/// `A = ∫ -log(1 + t)/t` and `B = ∫ -log(1 + t^2)/t` together with `z A'`
/// and `z B'`, for `ω_1 = z`, `ω_2 = z^2`.
fn sum_terms(z: Complex64) -> (Complex64, Complex64, Complex64, Complex64) {
    let a = neg_dilog(z);
    let b = neg_dilog(z * z) / 2.0;
    let za = -(1.0 + z).ln();
    let zb = -(1.0 + z * z).ln();
    (a, b, za, zb)
}

/// `exp(-z(A' e^A + B' e^B))/(e^A + e^B) - 1`.
pub fn omega_printed(z: Complex64) -> Complex64 {
    let (a, b, za, zb) = sum_terms(z);
    (-(za * a.exp() + zb * b.exp())).exp() / (a.exp() + b.exp()) - 1.0
}

/// `exp(-z(A' e^A + B' e^B)/(e^A + e^B)) - 1`, the `ω` with
/// `z F'/F = 1 - log(1 + ω)` for `F = z(e^A + e^B)`.
pub fn omega_derived(z: Complex64) -> Complex64 {
    let (a, b, za, zb) = sum_terms(z);
    (-(za * a.exp() + zb * b.exp()) / (a.exp() + b.exp())).exp() - 1.0
}

pub fn counterexample_z0() -> Complex64 {
    -Complex64::new(0.5, 2.0 / 3.0)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CounterexampleReport {
    pub z0: [f64; 2],
    /// `|ω(z_0)|` from the printed formula
    pub omega_abs: f64,
    pub exceeds_one: bool,
    /// printed formula at `z = 0`
    pub omega_at_zero: [f64; 2],
    /// `|ω(z_0)|` and `ω(0)` from the derived formula
    pub derived_omega_abs: f64,
    pub derived_omega_at_zero: [f64; 2],
    /// with `ω_2 = ω_1 = z` the derived formula returns `ω = z`; max `|ω|` on
    /// a grid of radius 0.99
    pub same_summand_max: f64,
}

pub fn vector_space_counterexample() -> CounterexampleReport {
    let z0 = counterexample_z0();
    let w = omega_printed(z0);
    let w0 = omega_printed(Complex64::new(0.0, 0.0));
    let d0 = omega_derived(Complex64::new(0.0, 0.0));
    let same = |z: Complex64| {
        let a = neg_dilog(z);
        let za = -(1.0 + z).ln();
        (-(za * a.exp() * 2.0) / (a.exp() * 2.0)).exp() - 1.0
    };
    let mut same_max: f64 = 0.0;
    for i in 1..=10 {
        for j in 0..64 {
            let z = Complex64::from_polar(0.099 * i as f64, std::f64::consts::TAU * j as f64 / 64.0);
            same_max = same_max.max(same(z).norm());
        }
    }
    CounterexampleReport {
        z0: [z0.re, z0.im],
        omega_abs: w.norm(),
        exceeds_one: w.norm() > 1.0,
        omega_at_zero: [w0.re, w0.im],
        derived_omega_abs: omega_derived(z0).norm(),
        derived_omega_at_zero: [d0.re, d0.im],
        same_summand_max: same_max,
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct LambdaReport {
    pub lambda: f64,
    pub m: usize,
    pub n: usize,
    pub order: usize,
    pub points: usize,
    pub all_inside: bool,
    /// max `|ψ^{-1}(w)|` over the grid; `< 1` means inside `ψ(𝔻)`
    pub max_preimage_modulus: f64,
    /// max mismatch of `z g'/g` with
    /// `1 - λ log(1 - (-z)^n) - (1 - λ) log(1 - (-z)^m)`
    pub identity_error: f64,
    /// Taylor coefficients `a_1..a_6` of `g`
    pub leading_coeffs: Vec<[f64; 2]>,
}

/// Radii of the membership grid.
const LAMBDA_RADII: [f64; 4] = [0.25, 0.5, 0.9, 0.99];
const LAMBDA_ANGLES: usize = 256;

/// `∑_k (1/k^2)(λ (-z)^{nk}/n + (1 - λ)(-z)^{mk}/m)`.
fn alpha_series(lambda: f64, m: usize, n: usize, order: usize) -> Result<TruncatedSeries> {
    let dilog = TruncatedSeries::new(
        (0..=order)
            .map(|k| if k == 0 { Complex64::new(0.0, 0.0) } else { Complex64::new(1.0 / (k * k) as f64, 0.0) })
            .collect(),
    )?;
    let part = |p: usize, w: f64| -> Result<TruncatedSeries> {
        let sign = if p % 2 == 0 { 1.0 } else { -1.0 };
        let inner = TruncatedSeries::monomial(p, Complex64::new(sign, 0.0), order);
        Ok(series_compose(&dilog, &inner, order)?.scale(Complex64::new(w / p as f64, 0.0)))
    };
    Ok(&part(n, lambda)? + &part(m, 1.0 - lambda)?)
}

/// Builds `g = z exp(α)`, computes `z g'/g` as a series and checks that its
/// values on a grid up to radius 0.99 lie in `ψ(𝔻)`.
pub fn lambda_combination_check(lambda: f64, m: usize, n: usize, order: usize) -> Result<LambdaReport> {
    if !(0.0..=1.0).contains(&lambda) {
        return Err(Error::OutOfRange {
            what: "lambda",
            value: lambda,
            range: "[0, 1]",
        });
    }
    if m == 0 || n == 0 || order < 2 * m.max(n) {
        return Err(Error::InvalidParams(format!(
            "need m, n >= 1 and order >= 2 max(m, n); got m = {m}, n = {n}, order = {order}"
        )));
    }
    let alpha = alpha_series(lambda, m, n, order)?;
    let h = series_exp(&alpha, order)?;
    // z g'/g = 1 + z h'/h for g = z h
    let q = &TruncatedSeries::one(order) + &series_div(&h.euler(), &h, order)?;
    let closed = |z: Complex64| {
        let u = |p: usize| (-z).powu(p as u32);
        1.0 - lambda * (1.0 - u(n)).ln() - (1.0 - lambda) * (1.0 - u(m)).ln()
    };
    let mut all_inside = true;
    let mut max_pre: f64 = 0.0;
    let mut err: f64 = 0.0;
    let mut points = 0;
    for r in LAMBDA_RADII {
        for j in 0..LAMBDA_ANGLES {
            let z = Complex64::from_polar(r, std::f64::consts::TAU * j as f64 / LAMBDA_ANGLES as f64);
            let w = q.eval(z);
            all_inside &= in_psi_image(w);
            max_pre = max_pre.max(psi_preimage_modulus(w));
            err = err.max((w - closed(z)).norm());
            points += 1;
        }
    }
    let g = h.times_z();
    Ok(LambdaReport {
        lambda,
        m,
        n,
        order,
        points,
        all_inside,
        max_preimage_modulus: max_pre,
        identity_error: err,
        leading_coeffs: (1..=6).map(|k| [g.coeff(k).re, g.coeff(k).im]).collect(),
    })
}
