//! Carathéodory coefficients `p_1, p_2, p_3` in the `(p_1, x, y)`
//! parameterization, and a grid oracle for the second Hankel functional.

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::{
    alpha_class_params, caratheodory_to_coeffs, q_params_a2a3_a4, q_params_a4, schwarz_functional_h, second_hankel,
    ClassParams, PhiCoeffs, H_DENSITY,
};
use crate::error::{Error, Result};
use crate::optimize::nelder_mead;
use crate::series::{series_div, TruncatedSeries};

const ONE: Complex64 = Complex64 { re: 1.0, im: 0.0 };

/// `p_1 ∈ [0, 2]`, `|x|, |y| ≤ 1` with
/// `2 p_2 = p_1^2 + x(4 - p_1^2)` and
/// `4 p_3 = p_1^3 + 2 p_1 (4 - p_1^2) x - p_1 (4 - p_1^2) x^2 + 2 (4 - p_1^2)(1 - |x|^2) y`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CaratheodoryPoint {
    pub p1: f64,
    pub x: Complex64,
    pub y: Complex64,
    pub p2: Complex64,
    pub p3: Complex64,
}

pub fn caratheodory_point(p1: f64, x: Complex64, y: Complex64) -> Result<CaratheodoryPoint> {
    const SLACK: f64 = 1e-12;
    if !(-SLACK..=2.0 + SLACK).contains(&p1) || x.norm() > 1.0 + SLACK || y.norm() > 1.0 + SLACK {
        return Err(Error::OutOfRange {
            what: "caratheodory parameters",
            value: p1,
            range: "0 <= p1 <= 2, |x| <= 1, |y| <= 1",
        });
    }
    let s = 4.0 - p1 * p1;
    let p2 = (p1 * p1 + x * s) / 2.0;
    let p3 = (p1.powi(3) + 2.0 * p1 * s * x - p1 * s * x * x + 2.0 * s * (1.0 - x.norm_sqr()) * y) / 4.0;
    Ok(CaratheodoryPoint { p1, x, y, p2, p3 })
}

impl CaratheodoryPoint {
    /// Schwarz function `ω = z τ_0` with `τ_0 = (ξ + z τ_1)/(1 + ξ z τ_1)`,
    /// `τ_1 = (x + z y)/(1 + conj(x) z y)`, `ξ = p_1/2`: a rational function
    /// bounded by 1 on the disk whose `p = (1 + ω)/(1 - ω)` starts with
    /// `1 + p_1 z + p_2 z^2 + p_3 z^3`.
    pub fn schwarz_eval(&self, z: Complex64) -> Complex64 {
        let xi = self.p1 / 2.0;
        let t1 = (self.x + z * self.y) / (1.0 + self.x.conj() * z * self.y);
        let t0 = (xi + z * t1) / (1.0 + xi * z * t1);
        z * t0
    }

    /// Series of [`Self::schwarz_eval`] up to `order`.
    pub fn schwarz_series(&self, order: usize) -> Result<TruncatedSeries> {
        let xi = Complex64::new(self.p1 / 2.0, 0.0);
        let num1 = TruncatedSeries::new(vec![self.x, self.y])?;
        let den1 = TruncatedSeries::new(vec![ONE, self.x.conj() * self.y])?;
        let t1 = series_div(&num1, &den1, order)?;
        let zt1 = t1.times_z();
        let num0 = &TruncatedSeries::constant(xi, order) + &zt1;
        let den0 = &TruncatedSeries::one(order) + &zt1.scale(xi);
        Ok(series_div(&num0, &den0, order)?.times_z().with_order(order))
    }

    /// Coefficients `p_1..p_order` of `(1 + ω)/(1 - ω)` from the Schwarz series.
    pub fn caratheodory_series(&self, order: usize) -> Result<TruncatedSeries> {
        let w = self.schwarz_series(order)?;
        let num = &TruncatedSeries::one(order) + &w;
        let den = &TruncatedSeries::one(order) - &w;
        series_div(&num, &den, order)
    }
}

/// Best point found by [`maximize_second_hankel_oracle`].
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct HankelOracle {
    pub value: f64,
    pub p1: f64,
    pub x: Complex64,
    pub y: Complex64,
}

/// `a_2 a_4 - a_3^2` is affine in `y`; returns its values at `y = 0` and the
/// `y`-coefficient.
fn hankel_affine(params: &ClassParams, b: [f64; 3], p1: f64, x: Complex64) -> Result<(Complex64, Complex64)> {
    let h = |y: Complex64| -> Result<Complex64> {
        let c = caratheodory_point(p1, x, y)?;
        let (a2, a3, a4) = caratheodory_to_coeffs(params, b, Complex64::new(p1, 0.0), c.p2, c.p3);
        Ok(a2 * a4 - a3 * a3)
    };
    let at0 = h(Complex64::new(0.0, 0.0))?;
    let at1 = h(ONE)?;
    Ok((at0, at1 - at0))
}

/// Lower bound for `sup |a_2 a_4 - a_3^2|` over `M_{g,h}(φ)`: the coefficients
/// come from the Carathéodory representation, swept over `p_1 ∈ [0, 2]`,
/// `x = ρ e^{iθ}` on a `density^3` grid with `y` on the unit circle chosen
/// optimally (the functional is affine in `y`), then polished by Nelder–Mead.
pub fn maximize_second_hankel_oracle(params: &ClassParams, b: PhiCoeffs, density: usize) -> Result<HankelOracle> {
    if density < 32 {
        return Err(Error::OutOfRange {
            what: "density",
            value: density as f64,
            range: ">= 32",
        });
    }
    let b = b.as_array();
    let n = density;
    let step = 1.0 / (n - 1) as f64;
    let dth = std::f64::consts::TAU / n as f64;
    let eval = |p1: f64, rho: f64, th: f64| -> f64 {
        match hankel_affine(params, b, p1, Complex64::from_polar(rho, th)) {
            Ok((p, q)) => p.norm() + q.norm(),
            Err(_) => f64::NEG_INFINITY,
        }
    };
    let best = (0..n)
        .into_par_iter()
        .map(|i| {
            let p1 = 2.0 * i as f64 * step;
            let mut best = (f64::NEG_INFINITY, i, 0, 0);
            for j in 0..n {
                for l in 0..n {
                    let v = eval(p1, j as f64 * step, l as f64 * dth);
                    if v > best.0 {
                        best = (v, i, j, l);
                    }
                }
            }
            best
        })
        .reduce(
            || (f64::NEG_INFINITY, usize::MAX, 0, 0),
            |a, b| if b.0 > a.0 || (b.0 == a.0 && b.1 < a.1) { b } else { a },
        );
    let start = [2.0 * best.1 as f64 * step, best.2 as f64 * step, best.3 as f64 * dth];
    let clamp = |v: &[f64]| (v[0].clamp(0.0, 2.0), v[1].clamp(0.0, 1.0), v[2]);
    let (x, fx) = nelder_mead(
        |v| {
            let (p1, rho, th) = clamp(v);
            -eval(p1, rho, th)
        },
        &start,
        step,
        1e-15,
        2000,
    );
    let (p1, rho, th) = if -fx > best.0 { clamp(&x) } else { (start[0], start[1], start[2]) };
    let xv = Complex64::from_polar(rho, th);
    let (p, q) = hankel_affine(params, b, p1, xv)?;
    let y = if q.norm() > 0.0 && p.norm() > 0.0 {
        (p / p.norm()) * (q.norm() / q)
    } else {
        ONE
    };
    Ok(HankelOracle {
        value: p.norm() + q.norm(),
        p1,
        x: xv,
        y,
    })
}

/// Sample points for [`hankel_suite`]: the case switch of the `S_l(α)`
/// bound sits at `(2 + √15)/11`.
pub fn hankel_suite_alphas() -> [f64; 6] {
    [0.0, 0.25, 0.5, (2.0 + 15f64.sqrt()) / 11.0, 0.75, 1.0]
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct HankelSuiteRow {
    pub alpha: f64,
    pub bound: f64,
    pub case_label: String,
    pub oracle: f64,
    /// `bound - oracle`
    pub margin: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct HankelSuiteReport {
    pub density: usize,
    pub rows: Vec<HankelSuiteRow>,
    pub worst_margin: f64,
    /// `H(q_1, q_2)` for `|a_4|` and `|a_2 a_3 - a_4|` of `S_l(0)`
    pub h_a4: f64,
    pub h_a2a3_a4: f64,
}

/// Theorem bound against the Carathéodory oracle for `S_l(α)` at
/// [`hankel_suite_alphas`], plus the two `H` maxima behind the `a_4` bounds.
pub fn hankel_suite(density: usize) -> Result<HankelSuiteReport> {
    let b = PhiCoeffs::sl();
    let rows = hankel_suite_alphas()
        .iter()
        .map(|&alpha| {
            let params = alpha_class_params(alpha)?;
            let bound = second_hankel(&params, b)?;
            let oracle = maximize_second_hankel_oracle(&params, b, density)?.value;
            Ok(HankelSuiteRow {
                alpha,
                bound: bound.value,
                case_label: bound.case_label,
                oracle,
                margin: bound.value - oracle,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let p0 = alpha_class_params(0.0)?;
    let (q1, q2) = q_params_a4(&p0, b);
    let h_a4 = schwarz_functional_h(q1, q2, H_DENSITY)?.value;
    let (q1, q2) = q_params_a2a3_a4(&p0, b);
    let h_a2a3_a4 = schwarz_functional_h(q1, q2, H_DENSITY)?.value;
    Ok(HankelSuiteReport {
        density,
        worst_margin: rows.iter().map(|r| r.margin).fold(f64::INFINITY, f64::min),
        rows,
        h_a4,
        h_a2a3_a4,
    })
}
