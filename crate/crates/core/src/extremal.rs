//! Extremal functions `t_{Φn}`, `d_{Φn}` and `f` built from a subordinate
//! `q`, plus the distortion and growth envelopes they define.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::catalog::MaMindaSpec;
use crate::error::{Error, Result};
use crate::series::{
    integrate_q_over_t, series_compose, series_exp, TruncatedSeries, EVAL_ORDER,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExtremalKind {
    /// `1 + z d''/d' = Φ(z^n)`
    ConvexD,
    /// `z t'/t = Φ(z^n)`
    StarlikeT,
    /// `z f'/f = q(z)` for a supplied `q`
    FromQ,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Generator {
    /// Name of `Φ`, absent for [`ExtremalKind::FromQ`].
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub spec: Option<String>,
    pub n: usize,
    pub kind: ExtremalKind,
}

/// A normalized `f(z) = z + a_2 z^2 + ...` with its provenance.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExtremalFunction {
    pub series: TruncatedSeries,
    pub generator: Generator,
}

impl ExtremalFunction {
    /// `a_k`; `a_1 = 1`.
    pub fn coeff(&self, k: usize) -> f64 {
        self.series.coeff(k).re
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.series.eval(z)
    }
}

/// `z exp ∫_0^z (q(t) - 1)/t dt` to order `order`, `q(0) = 1`.
fn starlike_from_q(q: &TruncatedSeries, order: usize) -> Result<TruncatedSeries> {
    let order = order.max(1);
    let integral = integrate_q_over_t(q, order - 1)?;
    Ok(series_exp(&integral, order - 1)?.times_z())
}

fn phi_of_power(phi: &TruncatedSeries, n: usize, order: usize) -> Result<TruncatedSeries> {
    if n == 0 {
        return Err(Error::OutOfRange {
            what: "n",
            value: 0.0,
            range: ">= 1",
        });
    }
    let zn = TruncatedSeries::monomial(n, Complex64::new(1.0, 0.0), order);
    series_compose(phi, &zn, order)
}

/// `t_{Φn}` from the coefficient series of `Φ` (any `Φ` with `Φ(0) = 1`,
/// including the constant 1).
pub fn t_series_from_phi(phi: &TruncatedSeries, n: usize, order: usize) -> Result<TruncatedSeries> {
    starlike_from_q(&phi_of_power(phi, n, order)?, order)
}

/// `d_{Φn}` from the coefficient series of `Φ`: termwise antiderivative of
/// `d' = exp ∫ (Φ(t^n) - 1)/t dt`.
pub fn d_series_from_phi(phi: &TruncatedSeries, n: usize, order: usize) -> Result<TruncatedSeries> {
    let order = order.max(1);
    let q = phi_of_power(phi, n, order - 1)?;
    let dprime = series_exp(&integrate_q_over_t(&q, order - 1)?, order - 1)?;
    Ok(dprime.antiderivative())
}

pub fn t_series(spec: &MaMindaSpec, n: usize, order: usize) -> Result<ExtremalFunction> {
    Ok(ExtremalFunction {
        series: t_series_from_phi(&spec.series(order), n, order)?,
        generator: Generator {
            spec: Some(spec.name().to_string()),
            n,
            kind: ExtremalKind::StarlikeT,
        },
    })
}

pub fn d_series(spec: &MaMindaSpec, n: usize, order: usize) -> Result<ExtremalFunction> {
    Ok(ExtremalFunction {
        series: d_series_from_phi(&spec.series(order), n, order)?,
        generator: Generator {
            spec: Some(spec.name().to_string()),
            n,
            kind: ExtremalKind::ConvexD,
        },
    })
}

/// The member of the starlike class with `z f'/f = q`.
pub fn f_from_q(q: &TruncatedSeries, order: usize) -> Result<ExtremalFunction> {
    Ok(ExtremalFunction {
        series: starlike_from_q(q, order)?,
        generator: Generator {
            spec: None,
            n: 1,
            kind: ExtremalKind::FromQ,
        },
    })
}

/// Order needed to evaluate `∑ C_k r^k / k` to roughly 1e-16 for bounded
/// `C_k`: at least 60 terms, then growing with `1/|log r|` (about 350 at
/// `r = 0.9`).
pub fn envelope_order(r: f64) -> usize {
    if r <= 0.5 {
        return EVAL_ORDER;
    }
    let needed = (1e-16f64.ln() / r.ln()).ceil() as usize;
    needed.clamp(EVAL_ORDER, 200_000)
}

/// `∫_0^x (Φ(t) - 1)/t dt` for real `x`, by series.
fn log_structural(spec: &MaMindaSpec, x: f64) -> f64 {
    let order = envelope_order(x.abs());
    let mut sum = 0.0;
    let mut p = 1.0;
    for k in 1..=order {
        p *= x;
        sum += spec.coeff(k).re * p / k as f64;
    }
    sum
}

fn check_radius(r: f64) -> Result<()> {
    if !(r > 0.0 && r < 1.0) {
        return Err(Error::OutOfRange {
            what: "r",
            value: r,
            range: "(0, 1)",
        });
    }
    Ok(())
}

/// `d'_Φ(x)` at real `x`.
pub fn d_prime_at(spec: &MaMindaSpec, x: f64) -> f64 {
    log_structural(spec, x).exp()
}

/// `t_Φ(x) = x d'_Φ(x)` at real `x`.
pub fn t_at(spec: &MaMindaSpec, x: f64) -> f64 {
    x * d_prime_at(spec, x)
}

/// `(d'_Φ(r), d'_Φ(-r))`: bounds on `|f'|` over `|z| = r` for the convex class.
pub fn distortion_envelope_convex(spec: &MaMindaSpec, r: f64) -> Result<(f64, f64)> {
    check_radius(r)?;
    Ok((d_prime_at(spec, r), d_prime_at(spec, -r)))
}

/// `(t_Φ(r), -t_Φ(-r))`: bounds on `|f|` over `|z| = r` for the starlike class.
pub fn growth_envelope_starlike(spec: &MaMindaSpec, r: f64) -> Result<(f64, f64)> {
    check_radius(r)?;
    Ok((t_at(spec, r), -t_at(spec, -r)))
}

/// `(t'_Φ(r), t'_Φ(-r))`: bounds on `|f'|` for the starlike class. Valid only
/// when `min |Φ|` and `max |Φ|` over `|z| = r` sit at `r` and `-r`; that is
/// checked on 256 angles and a failure is reported as an error.
pub fn distortion_envelope_starlike(spec: &MaMindaSpec, r: f64) -> Result<(f64, f64)> {
    check_radius(r)?;
    let at_plus = spec.eval(Complex64::new(r, 0.0)).norm();
    let at_minus = spec.eval(Complex64::new(-r, 0.0)).norm();
    let slack = 1e-12 * at_minus.max(1.0);
    for j in 0..256 {
        let z = Complex64::from_polar(r, 2.0 * std::f64::consts::PI * j as f64 / 256.0);
        let m = spec.eval(z).norm();
        if m < at_plus - slack || m > at_minus + slack {
            return Err(Error::Hypothesis(format!(
                "|Φ| on |z| = {r} is {m} at {z}, outside [|Φ({r})|, |Φ(-{r})|] = [{at_plus}, {at_minus}]"
            )));
        }
    }
    // t' = Φ exp ∫ (Φ - 1)/t
    Ok((
        spec.eval(Complex64::new(r, 0.0)).re * d_prime_at(spec, r),
        spec.eval(Complex64::new(-r, 0.0)).re * d_prime_at(spec, -r),
    ))
}

/// `∑_{n≥1} (-1)^{n+1} / n^2` from `terms` terms, summed in consecutive
/// pairs `1/(2k-1)^2 - 1/(2k)^2`.
pub fn growth_constant(terms: usize) -> f64 {
    let pairs = terms / 2;
    let mut sum: f64 = (1..=pairs)
        .rev()
        .map(|k| {
            let a = (2 * k - 1) as f64;
            let b = (2 * k) as f64;
            (b * b - a * a) / (a * a * b * b)
        })
        .sum();
    if terms % 2 == 1 {
        let n = terms as f64;
        sum += 1.0 / (n * n);
    }
    sum
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{counterpart, make_spec};
    use crate::series::{exact, series_div};
    use approx::assert_relative_eq;

    const Z1: Complex64 = Complex64::new(1.0, 0.0);

    #[test]
    fn t_psi_matches_exact_coefficients() {
        let f0 = t_series(&MaMindaSpec::psi(), 1, 5).unwrap();
        let expected = [0.0, 1.0, -1.0, 0.75, -19.0 / 36.0, 107.0 / 288.0];
        for (k, e) in expected.iter().enumerate() {
            assert_relative_eq!(f0.coeff(k), e, epsilon = 1e-15);
        }
        let exact = exact::t_psi(1, 5);
        let want = [0, 1, -1, 3, -19, 107];
        let den = [1, 1, 1, 4, 36, 288];
        for k in 0..6 {
            assert_eq!(exact.coeff(k), exact::ratio(want[k], den[k]));
        }
    }

    #[test]
    fn t_psi_cubed() {
        let f = t_series(&MaMindaSpec::psi(), 3, 4).unwrap();
        assert_eq!(f.coeff(2), 0.0);
        assert_eq!(f.coeff(3), 0.0);
        assert_relative_eq!(f.coeff(4), -1.0 / 3.0, epsilon = 1e-15);
        let e = exact::t_psi(3, 7);
        assert_eq!(e.coeff(4), exact::ratio(-1, 3));
        assert_eq!(e.coeff(5), exact::ratio(0, 1));
    }

    #[test]
    fn constant_phi_gives_identity() {
        let one = TruncatedSeries::one(6);
        for n in 1..4 {
            let t = t_series_from_phi(&one, n, 6).unwrap();
            let d = d_series_from_phi(&one, n, 6).unwrap();
            assert!(t.max_abs_diff(&TruncatedSeries::identity(6)) == 0.0);
            assert!(d.max_abs_diff(&TruncatedSeries::identity(6)) == 0.0);
        }
    }

    #[test]
    fn n_zero_rejected() {
        assert!(t_series(&MaMindaSpec::psi(), 0, 4).is_err());
    }

    #[test]
    fn d_relation_z_dprime_is_t() {
        let psi = MaMindaSpec::psi();
        for n in 1..4 {
            let d = d_series(&psi, n, 12).unwrap();
            let t = t_series(&psi, n, 12).unwrap();
            let zd = d.series.derivative().times_z();
            assert!(zd.max_abs_diff(&t.series) < 1e-14);
        }
    }

    #[test]
    fn d_prime_psi2_at_half() {
        let d = d_series(&MaMindaSpec::psi(), 2, 80).unwrap();
        let v = d.series.derivative().eval(Complex64::new(0.5, 0.0)).norm();
        assert_relative_eq!(v, 0.88874, epsilon = 1e-4);
    }

    #[test]
    fn f_from_q_examples() {
        let n = 10;
        // q = 1 - z/6 gives z exp(-z/6)
        let f1 = f_from_q(&TruncatedSeries::from_real(&[1.0, -1.0 / 6.0]).unwrap(), n).unwrap();
        assert_relative_eq!(f1.coeff(2), -1.0 / 6.0, epsilon = 1e-15);
        assert_relative_eq!(f1.coeff(3), 1.0 / 72.0, epsilon = 1e-15);

        // q = (4 - z)/(4 + z) gives 16z/(4+z)^2 = z ∑ (k+1)(-z/4)^k
        let num = TruncatedSeries::from_real(&[4.0, -1.0]).unwrap();
        let den = TruncatedSeries::from_real(&[4.0, 1.0]).unwrap();
        let q = series_div(&num, &den, n).unwrap();
        let f2 = f_from_q(&q, n).unwrap();
        for k in 1..=n {
            let j = (k - 1) as i32;
            assert_relative_eq!(f2.coeff(k), (k as f64) * (-0.25f64).powi(j), epsilon = 1e-14);
        }
        assert_relative_eq!(f2.coeff(2), -0.5, epsilon = 1e-15);

        // q = (8 - 2z)/(8 - z) gives the polynomial z - z^2/8
        let num = TruncatedSeries::from_real(&[8.0, -2.0]).unwrap();
        let den = TruncatedSeries::from_real(&[8.0, -1.0]).unwrap();
        let f4 = f_from_q(&series_div(&num, &den, n).unwrap(), n).unwrap();
        assert_relative_eq!(f4.coeff(2), -0.125, epsilon = 1e-15);
        for k in 3..=n {
            assert!(f4.coeff(k).abs() < 1e-15, "a_{k} = {}", f4.coeff(k));
        }

        assert!(f_from_q(&TruncatedSeries::from_real(&[2.0, 1.0]).unwrap(), 4).is_err());
    }

    fn assert_defining_odes(spec: &MaMindaSpec, n: usize) {
        let order = 24;
        let target = phi_of_power(&spec.series(order), n, order - 1).unwrap();
        // z t'/t = Φ(z^n)
        let t = t_series(spec, n, order).unwrap().series;
        let t_over_z = TruncatedSeries::new(t.coeffs()[1..].to_vec()).unwrap();
        let tp = t.derivative();
        let lhs = series_div(&tp, &t_over_z, order - 1).unwrap();
        assert!(lhs.max_abs_diff(&target) < 1e-10, "{}", spec.name());
        // 1 + z d''/d' = Φ(z^n)
        let d = d_series(spec, n, order).unwrap().series;
        let dp = d.derivative();
        let zdpp = dp.euler();
        let ratio = series_div(&zdpp, &dp, order - 1).unwrap();
        let lhs = &ratio + &TruncatedSeries::one(0);
        assert!(lhs.max_abs_diff(&target) < 1e-10, "{}", spec.name());
    }

    #[test]
    fn defining_differential_equations() {
        for name in ["psi", "sqrt_1_plus_z", "cos_sqrt_z", "one_minus_log_one_minus_z"] {
            let spec = make_spec(name).unwrap();
            for n in 1..=3 {
                assert_defining_odes(&spec, n);
            }
        }
    }

    #[test]
    fn counterpart_reflects_d_prime() {
        for name in ["psi", "sqrt_1_minus_z", "cos_sqrt_z"] {
            let spec = make_spec(name).unwrap();
            let a = d_series(&spec, 1, 16).unwrap().series.derivative();
            let b = d_series(&counterpart(&spec), 1, 16).unwrap().series.derivative();
            for k in 0..=15 {
                let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
                assert!((b.coeff(k) - a.coeff(k) * sign).norm() < 1e-14);
            }
        }
    }

    #[test]
    fn convex_envelope_for_psi() {
        let psi = MaMindaSpec::psi();
        let (lo, hi) = distortion_envelope_convex(&psi, 0.5).unwrap();
        assert_relative_eq!(lo, 0.63864, epsilon = 1e-4);
        assert_relative_eq!(hi, 1.79004, epsilon = 1e-4);
        let (lo, hi) = distortion_envelope_convex(&psi, 1e-9).unwrap();
        assert_relative_eq!(lo, 1.0, epsilon = 1e-8);
        assert_relative_eq!(hi, 1.0, epsilon = 1e-8);
        assert!(distortion_envelope_convex(&psi, 1.0).is_err());
        assert!(distortion_envelope_convex(&psi, 0.0).is_err());
        // |d'_{ψ2}(1/2)| sits strictly inside the envelope
        let d2 = d_series(&psi, 2, 80).unwrap().series.derivative();
        let v = d2.eval(Complex64::new(0.5, 0.0)).norm();
        let (lo, hi) = distortion_envelope_convex(&psi, 0.5).unwrap();
        assert_relative_eq!(v, 0.88874, epsilon = 1e-4);
        assert!(lo < v && v < hi);
    }

    #[test]
    fn growth_envelope_matches_series_evaluation() {
        let psi = MaMindaSpec::psi();
        let (lo, hi) = growth_envelope_starlike(&psi, 0.5).unwrap();
        let f0 = t_series(&psi, 1, EVAL_ORDER).unwrap();
        assert_relative_eq!(lo, f0.eval(Complex64::new(0.5, 0.0)).re, epsilon = 1e-12);
        assert_relative_eq!(hi, -f0.eval(Complex64::new(-0.5, 0.0)).re, epsilon = 1e-12);
        let (lo, hi) = growth_envelope_starlike(&psi, 1e-6).unwrap();
        assert_relative_eq!(lo / 1e-6, 1.0, epsilon = 1e-5);
        assert_relative_eq!(hi / 1e-6, 1.0, epsilon = 1e-5);
    }

    #[test]
    fn growth_envelope_near_boundary() {
        // t_ψ(r) = r exp(-∑ (-1)^{k+1} r^k / k^2) → exp(-π²/12) as r → 1
        let psi = MaMindaSpec::psi();
        let (lo, hi) = growth_envelope_starlike(&psi, 0.999_999).unwrap();
        let l = std::f64::consts::PI.powi(2) / 12.0;
        assert_relative_eq!(lo, (-l).exp(), epsilon = 1e-5);
        // -t_ψ(-r) = r exp(Li_2(r)) → exp(π²/6)
        assert_relative_eq!(hi, (2.0 * l).exp(), epsilon = 2e-4);
    }

    #[test]
    fn starlike_distortion_hypothesis() {
        // |ψ| on |z| = r: smallest at r, largest at -r
        let psi = MaMindaSpec::psi();
        let (lo, hi) = distortion_envelope_starlike(&psi, 0.5).unwrap();
        assert!(lo < 1.0 && hi > 1.0);
        let f0 = t_series(&psi, 1, EVAL_ORDER).unwrap().series.derivative();
        assert_relative_eq!(lo, f0.eval(Complex64::new(0.5, 0.0)).re, epsilon = 1e-12);
        // a Φ whose modulus peaks off the real axis
        let tilted = MaMindaSpec::from_polynomial(
            "tilted",
            vec![Z1, Complex64::new(-0.3, 0.0), Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0), Complex64::new(0.2, 0.0)],
        )
        .unwrap();
        assert!(matches!(
            distortion_envelope_starlike(&tilted, 0.9),
            Err(Error::Hypothesis(_))
        ));
    }

    #[test]
    fn growth_constant_converges() {
        let l = std::f64::consts::PI.powi(2) / 12.0;
        assert_relative_eq!(growth_constant(1000), 0.822467, epsilon = 1e-6);
        assert!((growth_constant(1000) - l).abs() < 1e-6);
        assert_relative_eq!(growth_constant(1), 1.0);
        assert_relative_eq!(growth_constant(3), 1.0 - 0.25 + 1.0 / 9.0, epsilon = 1e-15);
    }
}
