//! Radius constants for the starlike class of `ψ(z) = 1 - log(1 + z)`,
//! the majorization radius, inclusion constants and boundary curves of the
//! image domain and its best dominants.

use std::f64::consts::{FRAC_PI_2, LN_2, PI};
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::catalog::MaMindaSpec;
use crate::error::{Error, Result};
use crate::roots::{bisect, first_root};

/// Cells used to locate the first sign change before bisecting.
const SCAN_CELLS: usize = 1000;

/// Root of one of the radius equations together with its bracket.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct RadiusResult {
    pub equation_id: String,
    pub bracket: (f64, f64),
    pub root: f64,
    pub residual: f64,
    pub iterations: usize,
}

fn smallest_root<F: Fn(f64) -> f64>(f: F, equation: &'static str) -> Result<RadiusResult> {
    let (lo, hi) = (0.0, 1.0);
    let (f_lo, f_hi) = (f(lo), f(hi));
    if !(f_lo * f_hi < 0.0) {
        return Err(Error::Bracket { equation, lo, hi });
    }
    let (_, _, b) = first_root(&f, lo, hi, SCAN_CELLS, equation)?;
    Ok(RadiusResult {
        equation_id: equation.to_string(),
        bracket: (lo, hi),
        root: b.root,
        residual: b.residual,
        iterations: b.iterations,
    })
}

/// Starlike of order `α` holds in `|z| < e^{1-α} - 1`, `1 - log 2 ≤ α < 1`.
pub fn radius_starlike_order(alpha: f64) -> Result<f64> {
    if !(alpha >= 1.0 - LN_2 && alpha < 1.0) {
        return Err(Error::OutOfRange {
            what: "alpha",
            value: alpha,
            range: "[1 - log 2, 1)",
        });
    }
    Ok((1.0 - alpha).exp() - 1.0)
}

/// `Re(z f'/f) < β` holds in `|z| < 1 - e^{1-β}`, `β > 1`.
pub fn radius_m_beta(beta: f64) -> Result<f64> {
    if !(beta > 1.0) || !beta.is_finite() {
        return Err(Error::OutOfRange {
            what: "beta",
            value: beta,
            range: "(1, inf)",
        });
    }
    Ok(1.0 - (1.0 - beta).exp())
}

/// `(1 - r)(1 - log(1 + r))(1 - log(1 + r) - α) - r`.
pub fn convex_order_equation(r: f64, alpha: f64) -> f64 {
    let l = 1.0 - (1.0 + r).ln();
    (1.0 - r) * l * (l - alpha) - r
}

/// Convexity of order `α` radius: smallest positive root of
/// [`convex_order_equation`].
pub fn radius_convex_order(alpha: f64) -> Result<RadiusResult> {
    if !(0.0..1.0).contains(&alpha) {
        return Err(Error::OutOfRange {
            what: "alpha",
            value: alpha,
            range: "[0, 1)",
        });
    }
    smallest_root(|r| convex_order_equation(r, alpha), "root2")
}

/// `γ_0 = (2/π) arctan(π/3)`, the largest `γ` with `r(γ) ≤ 1`.
pub fn gamma0() -> f64 {
    2.0 / PI * (PI / 3.0).atan()
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct StronglyStarlikeRadius {
    pub gamma: f64,
    pub radius: f64,
    /// `z_0 = 1/√(1+A²) - 1 + i A/√(1+A²)`, `A = tan(tan(γπ/2))`; `|z_0| = radius`.
    pub z0: [f64; 2],
}

/// Strongly starlike of order `γ` radius `√(2(1 - 1/√(1 + A²)))`.
pub fn radius_strongly_starlike(gamma: f64) -> Result<StronglyStarlikeRadius> {
    let g0 = gamma0();
    if !(gamma > 0.0 && gamma <= g0 + 1e-15) {
        return Err(Error::OutOfRange {
            what: "gamma",
            value: gamma,
            range: "(0, gamma0 ~ 0.514674]",
        });
    }
    let a = (gamma * FRAC_PI_2).tan().tan();
    let s = 1.0 / (1.0 + a * a).sqrt();
    let radius = (2.0 * (1.0 - s)).sqrt();
    Ok(StronglyStarlikeRadius {
        gamma,
        radius,
        z0: [s - 1.0, a * s],
    })
}

/// `1 + r - e (1 - r)^k`.
pub fn k_starlike_equation(r: f64, k: f64) -> f64 {
    1.0 + r - std::f64::consts::E * (1.0 - r).powf(k)
}

/// `k`-starlike radius: smallest positive root of [`k_starlike_equation`].
pub fn radius_k_starlike(k: f64) -> Result<RadiusResult> {
    if !(k > 0.0) || !k.is_finite() {
        return Err(Error::OutOfRange {
            what: "k",
            value: k,
            range: "(0, inf)",
        });
    }
    smallest_root(|r| k_starlike_equation(r, k), "root1")
}

/// `(1 - r^2)(1 - log(1 + r)) - 2r`.
pub fn majorization_equation(r: f64) -> f64 {
    (1.0 - r * r) * (1.0 - (1.0 + r).ln()) - 2.0 * r
}

pub fn majorization_radius() -> Result<RadiusResult> {
    smallest_root(majorization_equation, "root")
}

/// `-2 + log(2(1 + cos θ)) + θ tan(θ/2)`, whose zero maximizes [`ftilde`].
pub fn theta0_equation(theta: f64) -> f64 {
    -2.0 + (2.0 * (1.0 + theta.cos())).ln() + theta * (theta / 2.0).tan()
}

/// `|arg ψ(e^{iθ})| = arctan((θ/2) / (1 - log(2(1 + cos θ))/2))` on `[0, π)`.
pub fn ftilde(theta: f64) -> f64 {
    let re = 1.0 - 0.5 * (2.0 * (1.0 + theta.cos())).ln();
    (0.5 * theta).atan2(re)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct InclusionConstants {
    /// Largest `α` with inclusion in the starlike class of order `α`: `1 - log 2`.
    pub alpha_max: f64,
    pub theta0: f64,
    pub ftheta0: f64,
    /// Smallest strongly starlike order: `2 f̃(θ_0)/π`.
    pub gamma_min: f64,
    /// Parabolic starlike order bound `1 - 2 log 2`.
    pub alpha_st: f64,
    /// Largest `c` with `√(1 + cz)` subordinate: `log 2 (2 - log 2)`.
    pub c0: f64,
    /// `f̃` is smaller at `θ_0 ± 10^{-3}` than at `θ_0`.
    pub concave_at_theta0: bool,
}

pub fn inclusion_constants() -> Result<InclusionConstants> {
    let b = bisect(theta0_equation, 0.5, 3.0, "theta0")?;
    let theta0 = b.root;
    let ftheta0 = ftilde(theta0);
    let h = 1e-3;
    let concave_at_theta0 = ftilde(theta0 - h) < ftheta0 && ftilde(theta0 + h) < ftheta0;
    Ok(InclusionConstants {
        alpha_max: 1.0 - LN_2,
        theta0,
        ftheta0,
        gamma_min: 2.0 * ftheta0 / PI,
        alpha_st: 1.0 - 2.0 * LN_2,
        c0: LN_2 * (2.0 - LN_2),
        concave_at_theta0,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ReImEnvelope {
    pub re_lo: f64,
    pub re_hi: f64,
    pub im_abs: f64,
}

/// Bounds on `z f'/f` over `|z| = r` for the starlike class of `ψ`.
pub fn re_im_envelope(r: f64) -> Result<ReImEnvelope> {
    if !(r > 0.0 && r < 1.0) {
        return Err(Error::OutOfRange {
            what: "r",
            value: r,
            range: "(0, 1)",
        });
    }
    Ok(ReImEnvelope {
        re_lo: 1.0 - (1.0 + r).ln(),
        re_hi: 1.0 - (1.0 - r).ln(),
        im_abs: (r / (1.0 - r * r).sqrt()).atan(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CurveId {
    /// `ψ(e^{iθ})`: `|exp(1 - w) - 1| = 1`
    Tau,
    /// `Re w = 1 - log 2`
    Tau1,
    /// `|arg w| = (7029/12500)(π/2)`
    Tau2,
    /// `Re w - |w - 1| = 1 - 2 log 2`
    Tau3,
    /// `|w^2 - 1| = log 2 (2 - log 2)`
    Tau4,
}

impl CurveId {
    pub const ALL: [CurveId; 5] = [CurveId::Tau, CurveId::Tau1, CurveId::Tau2, CurveId::Tau3, CurveId::Tau4];

    pub fn as_str(self) -> &'static str {
        match self {
            CurveId::Tau => "tau",
            CurveId::Tau1 => "tau1",
            CurveId::Tau2 => "tau2",
            CurveId::Tau3 => "tau3",
            CurveId::Tau4 => "tau4",
        }
    }
}

impl fmt::Display for CurveId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CurveId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        CurveId::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| Error::UnknownName {
                kind: "curve",
                name: s.to_string(),
            })
    }
}

/// Slope coefficient of the `τ_2` rays as printed with the figure.
pub const TAU2_COEFF: f64 = 7029.0 / 12500.0;

/// Length of the `τ_2` rays and half-height of the `τ_1` segment.
const RAY_LENGTH: f64 = 3.0;

/// `τ` at parameter `θ ∈ (-π, π)`.
pub fn tau_point(theta: f64) -> Complex64 {
    MaMindaSpec::psi().eval(Complex64::from_polar(1.0, theta))
}

/// Point of `τ_3` in direction `φ` seen from `w = 1`, by bisection on the
/// distance `s` in `1 + s cos φ - s = 1 - 2 log 2`. At `φ = π` this is the
/// vertex `((1 + α)/2, 0)`.
pub fn tau3_point(phi: f64) -> Result<Complex64> {
    let alpha = 1.0 - 2.0 * LN_2;
    let dir = Complex64::from_polar(1.0, phi);
    if (phi - PI).abs() < 1e-15 {
        return Ok(Complex64::new((1.0 + alpha) / 2.0, 0.0));
    }
    let h = |s: f64| 1.0 + s * dir.re - s - alpha;
    let mut hi = 1.0;
    while h(hi) > 0.0 {
        hi *= 2.0;
        if hi > 1e12 {
            return Err(Error::Bracket {
                equation: "tau3",
                lo: 0.0,
                hi,
            });
        }
    }
    let s = bisect(h, 0.0, hi, "tau3")?.root;
    Ok(1.0 + dir * s)
}

/// Sampled boundary points of the chosen curve, ordered along the curve.
pub fn curve_points(id: CurveId, samples: usize) -> Result<Vec<Complex64>> {
    if samples < 16 {
        return Err(Error::OutOfRange {
            what: "samples",
            value: samples as f64,
            range: ">= 16",
        });
    }
    sample_curve(id, samples)
}

/// [`curve_points`] for short previews: any `samples ≥ 4` (two points per
/// ray of `τ_2`).
pub fn curve_preview(id: CurveId, samples: usize) -> Result<Vec<Complex64>> {
    if samples < 4 {
        return Err(Error::OutOfRange {
            what: "samples",
            value: samples as f64,
            range: ">= 4",
        });
    }
    sample_curve(id, samples)
}

fn sample_curve(id: CurveId, samples: usize) -> Result<Vec<Complex64>> {
    let n = samples as f64;
    let pts = match id {
        // θ = ±π maps to infinity; sample the open interval
        CurveId::Tau => (0..samples)
            .map(|j| tau_point(-PI + 2.0 * PI * (j as f64 + 1.0) / (n + 1.0)))
            .collect(),
        CurveId::Tau1 => (0..samples)
            .map(|j| {
                let y = -RAY_LENGTH + 2.0 * RAY_LENGTH * j as f64 / (n - 1.0);
                Complex64::new(1.0 - LN_2, y)
            })
            .collect(),
        CurveId::Tau2 => {
            let beta = TAU2_COEFF * FRAC_PI_2;
            let upper = samples / 2;
            let lower = samples - upper;
            let mut v: Vec<Complex64> = (0..upper)
                .map(|j| Complex64::from_polar(RAY_LENGTH * (1.0 - j as f64 / upper as f64), beta))
                .collect();
            v.extend((0..lower).map(|j| {
                Complex64::from_polar(RAY_LENGTH * j as f64 / (lower - 1) as f64, -beta)
            }));
            v
        }
        CurveId::Tau3 => {
            // keep points within distance ~4 of w = 1
            let alpha = 1.0 - 2.0 * LN_2;
            let phi_min = (1.0 - (1.0 - alpha) / 4.0).acos();
            (0..samples)
                .map(|j| tau3_point(phi_min + (2.0 * PI - 2.0 * phi_min) * j as f64 / (n - 1.0)))
                .collect::<Result<Vec<_>>>()?
        }
        CurveId::Tau4 => {
            let c0 = LN_2 * (2.0 - LN_2);
            (0..samples)
                .map(|j| {
                    let t = 2.0 * PI * j as f64 / n;
                    (1.0 + Complex64::from_polar(c0, t)).sqrt()
                })
                .collect()
        }
    };
    Ok(pts)
}
