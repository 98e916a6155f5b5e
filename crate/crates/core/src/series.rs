//! Truncated Maclaurin series over complex double-precision coefficients.
//!
//! A [`TruncatedSeries`] of order `N` stores `c_0, ..., c_N` and stands for
//! the polynomial `c_0 + c_1 z + ... + c_N z^N`. Every operation takes the
//! target order explicitly and drops higher powers, so results are exact up
//! to rounding at the requested order.

pub mod exact;

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Order used for coefficient and bound work.
pub const DEFAULT_ORDER: usize = 32;
/// Order used for point evaluations out to `|z| = 0.95`.
pub const EVAL_ORDER: usize = 60;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TruncatedSeries {
    coeffs: Vec<Complex64>,
}

impl TruncatedSeries {
    /// Builds a series from `c_0..c_N`. An empty vector is the zero series of
    /// order 0.
    pub fn new(mut coeffs: Vec<Complex64>) -> Result<Self> {
        if let Some(index) = coeffs.iter().position(|c| !c.re.is_finite() || !c.im.is_finite()) {
            return Err(Error::NonFinite { index });
        }
        if coeffs.is_empty() {
            coeffs.push(ZERO);
        }
        Ok(Self { coeffs })
    }

    pub fn from_real(coeffs: &[f64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect())
    }

    /// Internal constructor for results of arithmetic on finite inputs.
    fn from_vec(coeffs: Vec<Complex64>) -> Self {
        debug_assert!(!coeffs.is_empty());
        Self { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::from_vec(vec![ZERO; order + 1])
    }

    pub fn constant(c: Complex64, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn one(order: usize) -> Self {
        Self::constant(ONE, order)
    }

    /// `c z^k`, truncated at `order` (zero if `k > order`).
    pub fn monomial(k: usize, c: Complex64, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// The identity map `z`.
    pub fn identity(order: usize) -> Self {
        Self::monomial(1, ONE, order.max(1))
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Coefficient of `z^k`; zero past the truncation order.
    pub fn coeff(&self, k: usize) -> Complex64 {
        self.coeffs.get(k).copied().unwrap_or(ZERO)
    }

    /// Truncates or zero-pads to exactly `order`.
    pub fn with_order(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order + 1, ZERO);
        Self::from_vec(coeffs)
    }

    pub fn scale(&self, c: Complex64) -> Self {
        Self::from_vec(self.coeffs.iter().map(|&x| x * c).collect())
    }

    /// Termwise derivative; the order drops by one (floored at 0).
    pub fn derivative(&self) -> Self {
        if self.order() == 0 {
            return Self::zero(0);
        }
        Self::from_vec(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, &c)| c * k as f64)
                .collect(),
        )
    }

    /// Termwise antiderivative vanishing at 0; the order grows by one.
    pub fn antiderivative(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(ZERO);
        coeffs.extend(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, &c)| c / (k + 1) as f64),
        );
        Self::from_vec(coeffs)
    }

    /// Multiplies by `z^k`, keeping the order fixed.
    pub fn shift(&self, k: usize) -> Self {
        let n = self.order();
        let mut out = Self::zero(n);
        for j in 0..=n.saturating_sub(k) {
            if j + k <= n {
                out.coeffs[j + k] = self.coeffs[j];
            }
        }
        out
    }

    /// Multiplies by `z`, growing the order by one.
    pub fn times_z(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(ZERO);
        coeffs.extend_from_slice(&self.coeffs);
        Self::from_vec(coeffs)
    }

    /// `z * a'(z)`, the Euler operator, at the same order.
    pub fn euler(&self) -> Self {
        Self::from_vec(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, &c)| c * k as f64)
                .collect(),
        )
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let n = self.order().max(other.order());
        (0..=n)
            .map(|k| (self.coeff(k) - other.coeff(k)).norm())
            .fold(0.0, f64::max)
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        series_eval(self, z)
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if *c == ZERO {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if c.im == 0.0 {
                write!(f, "{}", c.re)?;
            } else {
                write!(f, "({}{:+}i)", c.re, c.im)?;
            }
            match k {
                0 => {}
                1 => write!(f, "·z")?,
                _ => write!(f, "·z^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(z^{})", self.order() + 1)
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: Self) -> TruncatedSeries {
        series_add(self, rhs)
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: Self) -> TruncatedSeries {
        series_add(self, &-rhs)
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        self.scale(-ONE)
    }
}

fn require_constant(a: &TruncatedSeries, expected: f64, op: &'static str) -> Result<()> {
    let c0 = a.coeff(0);
    if (c0 - Complex64::new(expected, 0.0)).norm() > 1e-14 {
        return Err(Error::ConstantTerm {
            op,
            expected,
            found: format!("{c0}"),
        });
    }
    Ok(())
}

/// Coefficientwise sum; the shorter input is zero-padded.
pub fn series_add(a: &TruncatedSeries, b: &TruncatedSeries) -> TruncatedSeries {
    let n = a.order().max(b.order());
    TruncatedSeries::from_vec((0..=n).map(|k| a.coeff(k) + b.coeff(k)).collect())
}

/// Cauchy product truncated at `order`.
pub fn series_mul(a: &TruncatedSeries, b: &TruncatedSeries, order: usize) -> TruncatedSeries {
    let mut out = vec![ZERO; order + 1];
    for (i, &x) in a.coeffs.iter().enumerate().take(order + 1) {
        if x == ZERO {
            continue;
        }
        for (j, &y) in b.coeffs.iter().enumerate().take(order + 1 - i) {
            out[i + j] += x * y;
        }
    }
    TruncatedSeries::from_vec(out)
}

/// `1 / a` truncated at `order`; requires `a(0) != 0`.
pub fn series_reciprocal(a: &TruncatedSeries, order: usize) -> Result<TruncatedSeries> {
    let a0 = a.coeff(0);
    if a0.norm() < 1e-300 {
        return Err(Error::ConstantTerm {
            op: "reciprocal",
            expected: f64::NAN,
            found: "0".into(),
        });
    }
    let mut out = vec![ZERO; order + 1];
    out[0] = ONE / a0;
    for n in 1..=order {
        let mut s = ZERO;
        for k in 1..=n.min(a.order()) {
            s += a.coeffs[k] * out[n - k];
        }
        out[n] = -s / a0;
    }
    Ok(TruncatedSeries::from_vec(out))
}

/// `a / b` truncated at `order`.
pub fn series_div(a: &TruncatedSeries, b: &TruncatedSeries, order: usize) -> Result<TruncatedSeries> {
    Ok(series_mul(a, &series_reciprocal(b, order)?, order))
}

/// `exp(a)` truncated at `order`, from `(exp a)' = a' exp a`.
pub fn series_exp(a: &TruncatedSeries, order: usize) -> Result<TruncatedSeries> {
    require_constant(a, 0.0, "series_exp")?;
    let mut out = vec![ZERO; order + 1];
    out[0] = ONE;
    for n in 1..=order {
        let mut s = ZERO;
        for k in 1..=n.min(a.order()) {
            s += a.coeffs[k] * (k as f64) * out[n - k];
        }
        out[n] = s / n as f64;
    }
    Ok(TruncatedSeries::from_vec(out))
}

/// Principal `log(1 + a)` truncated at `order`, from `(1 + a) L' = a'`.
pub fn series_log1p(a: &TruncatedSeries, order: usize) -> Result<TruncatedSeries> {
    require_constant(a, 0.0, "series_log1p")?;
    let mut out = vec![ZERO; order + 1];
    for n in 1..=order {
        let mut s = ZERO;
        for k in 1..n.min(a.order() + 1) {
            s += a.coeffs[k] * ((n - k) as f64) * out[n - k];
        }
        out[n] = a.coeff(n) - s / n as f64;
    }
    Ok(TruncatedSeries::from_vec(out))
}

/// `outer(inner(z))` truncated at `order`. Horner over powers of `inner`,
/// with a direct path when `inner` is a single monomial `c z^m`.
pub fn series_compose(
    outer: &TruncatedSeries,
    inner: &TruncatedSeries,
    order: usize,
) -> Result<TruncatedSeries> {
    require_constant(inner, 0.0, "series_compose")?;
    let terms: Vec<(usize, Complex64)> = inner
        .coeffs
        .iter()
        .enumerate()
        .filter(|(k, c)| *k <= order && **c != ZERO)
        .map(|(k, &c)| (k, c))
        .collect();
    Ok(match terms.as_slice() {
        [] => TruncatedSeries::constant(outer.coeff(0), order),
        &[(m, c)] => {
            let mut out = vec![ZERO; order + 1];
            let mut cp = ONE;
            for (k, &a) in outer.coeffs.iter().enumerate() {
                if k * m > order {
                    break;
                }
                out[k * m] += a * cp;
                cp *= c;
            }
            TruncatedSeries::from_vec(out)
        }
        _ => horner(outer, inner, order),
    })
}

fn horner(outer: &TruncatedSeries, inner: &TruncatedSeries, order: usize) -> TruncatedSeries {
    // Powers of inner beyond `order` contribute nothing since inner(0) = 0.
    let top = outer.order().min(order);
    let mut acc = TruncatedSeries::constant(outer.coeff(top), order);
    for k in (0..top).rev() {
        acc = series_mul(&acc, inner, order);
        acc.coeffs[0] += outer.coeff(k);
    }
    acc
}

/// `∑_{k≥1} c_k(q) z^k / k`, the primitive of `(q(t) - 1)/t`.
pub fn integrate_q_over_t(q: &TruncatedSeries, order: usize) -> Result<TruncatedSeries> {
    require_constant(q, 1.0, "integrate_q_over_t")?;
    let mut out = vec![ZERO; order + 1];
    for (k, slot) in out.iter_mut().enumerate().skip(1) {
        *slot = q.coeff(k) / k as f64;
    }
    Ok(TruncatedSeries::from_vec(out))
}

/// Horner evaluation of the truncated polynomial.
pub fn series_eval(a: &TruncatedSeries, z: Complex64) -> Complex64 {
    a.coeffs.iter().rev().fold(ZERO, |acc, &c| acc * z + c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn real(c: &[f64]) -> TruncatedSeries {
        TruncatedSeries::from_real(c).unwrap()
    }

    fn assert_coeffs(s: &TruncatedSeries, expected: &[f64], tol: f64) {
        for (k, &e) in expected.iter().enumerate() {
            assert!(
                (s.coeff(k) - Complex64::new(e, 0.0)).norm() <= tol,
                "c_{k}: {} vs {e}",
                s.coeff(k)
            );
        }
    }

    fn psi_head() -> TruncatedSeries {
        real(&[1.0, -1.0, 0.5])
    }

    #[test]
    fn add_cancels_and_pads() {
        assert_coeffs(&series_add(&real(&[1.0, 1.0]), &real(&[1.0, -1.0])), &[2.0, 0.0], 0.0);
        let s = series_add(&psi_head(), &TruncatedSeries::zero(0));
        assert_eq!(s.order(), 2);
        assert_coeffs(&s, &[1.0, -1.0, 0.5], 0.0);
        // ψ head plus the head of 1 - log(1 - z)
        assert_coeffs(&series_add(&psi_head(), &real(&[1.0, 1.0, 0.5])), &[2.0, 0.0, 1.0], 0.0);
    }

    #[test]
    fn mul_examples() {
        assert_coeffs(&series_mul(&real(&[1.0, 1.0]), &real(&[1.0, -1.0]), 2), &[1.0, 0.0, -1.0], 0.0);
        let z = TruncatedSeries::identity(1);
        let s = series_mul(&z, &real(&[1.0, -1.0, 0.5, -1.0 / 3.0]), 4);
        assert_coeffs(&s, &[0.0, 1.0, -1.0, 0.5, -1.0 / 3.0], 1e-15);
        assert_coeffs(&series_mul(&psi_head(), &psi_head(), 2), &[1.0, -2.0, 2.0], 1e-15);
    }

    #[test]
    fn exp_examples() {
        assert_coeffs(&series_exp(&TruncatedSeries::zero(3), 3).unwrap(), &[1.0, 0.0, 0.0, 0.0], 0.0);
        let e = series_exp(&real(&[0.0, -1.0]), 3).unwrap();
        assert_coeffs(&e, &[1.0, -1.0, 0.5, -1.0 / 6.0], 1e-15);
        assert!(series_exp(&real(&[1.0, 1.0]), 3).is_err());
    }

    #[test]
    fn exp_of_dilog_head_matches_product_of_exponentials() {
        // exp(∑_{k=1..4} (-z)^k/k²) = ∏_k exp((-1)^k z^k / k²); multiply the
        // scalar exponential series of each monomial term.
        let n = 8;
        let mut oracle = TruncatedSeries::one(n);
        for k in 1..=4usize {
            let c = (if k % 2 == 0 { 1.0 } else { -1.0 }) / (k * k) as f64;
            let mut term = vec![Complex64::default(); n + 1];
            let mut j = 0;
            let mut fact = 1.0;
            while j * k <= n {
                term[j * k] = Complex64::new(c.powi(j as i32) / fact, 0.0);
                j += 1;
                fact *= j as f64;
            }
            oracle = series_mul(&oracle, &TruncatedSeries::new(term).unwrap(), n);
        }
        let arg = real(&[0.0, -1.0, 0.25, -1.0 / 9.0, 1.0 / 16.0]);
        let e = series_exp(&arg, n).unwrap();
        assert!(e.max_abs_diff(&oracle) < 1e-14);
        assert_eq!(e.coeff(1).re, -1.0);
    }

    #[test]
    fn log1p_examples() {
        let l = series_log1p(&TruncatedSeries::identity(3), 3).unwrap();
        assert_coeffs(&l, &[0.0, 1.0, -0.5, 1.0 / 3.0], 1e-15);
        assert_coeffs(&series_log1p(&TruncatedSeries::zero(2), 2).unwrap(), &[0.0, 0.0, 0.0], 0.0);
        // log(1 + z + z²) = z + z²/2 + O(z³)
        assert_coeffs(&series_log1p(&real(&[0.0, 1.0, 1.0]), 2).unwrap(), &[0.0, 1.0, 0.5], 1e-15);
        assert!(series_log1p(&real(&[0.5, 1.0]), 2).is_err());
    }

    #[test]
    fn compose_examples() {
        let psi = real(&[1.0, -1.0, 0.5, -1.0 / 3.0, 0.25, -0.2, 1.0 / 6.0]);
        let z2 = TruncatedSeries::monomial(2, Complex64::new(1.0, 0.0), 4);
        assert_coeffs(&series_compose(&psi, &z2, 4).unwrap(), &[1.0, 0.0, -1.0, 0.0, 0.5], 1e-15);
        let z3 = TruncatedSeries::monomial(3, Complex64::new(1.0, 0.0), 6);
        let s = series_compose(&psi, &z3, 6).unwrap();
        assert_coeffs(&s, &[1.0, 0.0, 0.0, -1.0, 0.0, 0.0, 0.5], 1e-15);
        let s = series_compose(&psi, &TruncatedSeries::zero(3), 3).unwrap();
        assert_coeffs(&s, &[1.0, 0.0, 0.0, 0.0], 0.0);
        assert!(series_compose(&psi, &real(&[1.0, 1.0]), 3).is_err());
    }

    #[test]
    fn compose_monomial_path_matches_horner() {
        let outer = real(&[0.3, -1.0, 0.5, 0.25, -0.125, 0.7]);
        let inner = TruncatedSeries::monomial(2, Complex64::new(0.5, -0.25), 9);
        let fast = series_compose(&outer, &inner, 9).unwrap();
        let slow = horner(&outer, &inner, 9);
        assert!(fast.max_abs_diff(&slow) < 1e-15);
    }

    #[test]
    fn integrate_q_over_t_examples() {
        assert_coeffs(&integrate_q_over_t(&TruncatedSeries::one(3), 3).unwrap(), &[0.0; 4], 0.0);
        let psi = real(&[1.0, -1.0, 0.5, -1.0 / 3.0, 0.25]);
        let i = integrate_q_over_t(&psi, 4).unwrap();
        assert_coeffs(&i, &[0.0, -1.0, 0.25, -1.0 / 9.0, 1.0 / 16.0], 1e-15);
        assert_coeffs(&integrate_q_over_t(&real(&[1.0, -1.0]), 2).unwrap(), &[0.0, -1.0, 0.0], 0.0);
        assert!(integrate_q_over_t(&real(&[0.0, 1.0]), 2).is_err());
    }

    #[test]
    fn eval_dilog_exponential() {
        let n = EVAL_ORDER;
        let psi: Vec<f64> = (0..=n)
            .map(|k| match k {
                0 => 1.0,
                _ => (if k % 2 == 0 { 1.0 } else { -1.0 }) / k as f64,
            })
            .collect();
        let d = series_exp(&integrate_q_over_t(&real(&psi), n).unwrap(), n).unwrap();
        assert_eq!(psi_head().eval(Complex64::default()).re, 1.0);
        assert_relative_eq!(d.eval(Complex64::new(0.5, 0.0)).re, 0.63864, epsilon = 1e-4);
        assert_relative_eq!(d.eval(Complex64::new(-0.5, 0.0)).re, 1.79004, epsilon = 1e-4);
    }

    #[test]
    fn rejects_non_finite() {
        assert!(matches!(
            TruncatedSeries::from_real(&[1.0, f64::NAN]),
            Err(Error::NonFinite { index: 1 })
        ));
    }

    #[test]
    fn derivative_antiderivative_shift() {
        let s = real(&[1.0, 2.0, 3.0]);
        assert_coeffs(&s.derivative(), &[2.0, 6.0], 0.0);
        assert_coeffs(&s.antiderivative().derivative(), &[1.0, 2.0, 3.0], 1e-15);
        assert_coeffs(&s.shift(1), &[0.0, 1.0, 2.0], 0.0);
        assert_coeffs(&s.euler(), &[0.0, 2.0, 6.0], 0.0);
        let r = series_reciprocal(&real(&[1.0, -1.0]), 3).unwrap();
        assert_coeffs(&r, &[1.0, 1.0, 1.0, 1.0], 0.0);
    }
}
