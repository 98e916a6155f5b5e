//! Named Ma-Minda functions, their reflected counterparts `Φ(z) = φ(-z)`,
//! grid classification and the closed-form membership test for `ψ(𝔻)`.

use std::f64::consts::FRAC_PI_2;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::series::TruncatedSeries;

/// Tolerance below which an imaginary part counts as zero.
pub const REAL_COEFF_TOL: f64 = 1e-12;

/// Radii used by [`classify`].
pub const CLASSIFY_RADII: [f64; 11] = [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.95, 0.99];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CatalogName {
    /// `1 - log(1 + z)`
    Psi,
    /// `1 - log(1 - z)`
    OneMinusLogOneMinusZ,
    Sqrt1PlusZ,
    Sqrt1MinusZ,
    CosSqrtZ,
    CosSqrtMinusZ,
}

impl CatalogName {
    pub const ALL: [CatalogName; 6] = [
        CatalogName::Psi,
        CatalogName::OneMinusLogOneMinusZ,
        CatalogName::Sqrt1PlusZ,
        CatalogName::Sqrt1MinusZ,
        CatalogName::CosSqrtZ,
        CatalogName::CosSqrtMinusZ,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CatalogName::Psi => "psi",
            CatalogName::OneMinusLogOneMinusZ => "one_minus_log_one_minus_z",
            CatalogName::Sqrt1PlusZ => "sqrt_1_plus_z",
            CatalogName::Sqrt1MinusZ => "sqrt_1_minus_z",
            CatalogName::CosSqrtZ => "cos_sqrt_z",
            CatalogName::CosSqrtMinusZ => "cos_sqrt_minus_z",
        }
    }

    fn partner(self) -> CatalogName {
        match self {
            CatalogName::Psi => CatalogName::OneMinusLogOneMinusZ,
            CatalogName::OneMinusLogOneMinusZ => CatalogName::Psi,
            CatalogName::Sqrt1PlusZ => CatalogName::Sqrt1MinusZ,
            CatalogName::Sqrt1MinusZ => CatalogName::Sqrt1PlusZ,
            CatalogName::CosSqrtZ => CatalogName::CosSqrtMinusZ,
            CatalogName::CosSqrtMinusZ => CatalogName::CosSqrtZ,
        }
    }
}

impl fmt::Display for CatalogName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CatalogName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CatalogName::ALL
            .into_iter()
            .find(|n| n.as_str() == s)
            .ok_or_else(|| Error::UnknownName {
                kind: "catalog function",
                name: s.to_string(),
            })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Sign {
    Positive,
    Negative,
}

#[derive(Clone, Debug, PartialEq)]
enum Source {
    Named(CatalogName),
    /// `1 + c_1 z + ... + c_N z^N` given explicitly.
    Polynomial(Vec<Complex64>),
}

/// An analytic `Φ` with `Φ(0) = 1`: coefficient generator, point evaluator
/// and the sign of `Φ'(0)`.
#[derive(Clone, Debug, PartialEq)]
pub struct MaMindaSpec {
    name: String,
    source: Source,
}

pub fn make_spec(name: &str) -> Result<MaMindaSpec> {
    Ok(MaMindaSpec::named(name.parse()?))
}

impl MaMindaSpec {
    pub fn named(name: CatalogName) -> Self {
        Self {
            name: name.as_str().to_string(),
            source: Source::Named(name),
        }
    }

    pub fn psi() -> Self {
        Self::named(CatalogName::Psi)
    }

    /// A polynomial `Φ`; `coeffs[0]` must be 1 and `coeffs[1]` nonzero.
    pub fn from_polynomial(name: impl Into<String>, coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.len() < 2 {
            return Err(Error::InvalidParams("need at least c_0 and c_1".into()));
        }
        if (coeffs[0] - Complex64::new(1.0, 0.0)).norm() > 1e-14 {
            return Err(Error::ConstantTerm {
                op: "MaMindaSpec::from_polynomial",
                expected: 1.0,
                found: coeffs[0].to_string(),
            });
        }
        if coeffs[1].norm() == 0.0 {
            return Err(Error::InvalidParams("Φ'(0) must be nonzero".into()));
        }
        if coeffs.iter().any(|c| !c.re.is_finite() || !c.im.is_finite()) {
            return Err(Error::InvalidParams("non-finite coefficient".into()));
        }
        Ok(Self {
            name: name.into(),
            source: Source::Polynomial(coeffs),
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn catalog_name(&self) -> Option<CatalogName> {
        match self.source {
            Source::Named(n) => Some(n),
            Source::Polynomial(_) => None,
        }
    }

    /// Maclaurin coefficient `C_k`.
    pub fn coeff(&self, k: usize) -> Complex64 {
        let re = |x: f64| Complex64::new(x, 0.0);
        if k == 0 {
            return re(1.0);
        }
        match &self.source {
            Source::Polynomial(c) => c.get(k).copied().unwrap_or_default(),
            Source::Named(name) => {
                let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
                re(match name {
                    CatalogName::Psi => sign / k as f64,
                    CatalogName::OneMinusLogOneMinusZ => 1.0 / k as f64,
                    CatalogName::Sqrt1PlusZ => binomial_half(k),
                    CatalogName::Sqrt1MinusZ => sign * binomial_half(k),
                    CatalogName::CosSqrtZ => sign / factorial(2 * k),
                    CatalogName::CosSqrtMinusZ => 1.0 / factorial(2 * k),
                })
            }
        }
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        let one = Complex64::new(1.0, 0.0);
        match &self.source {
            Source::Polynomial(c) => c.iter().rev().fold(Complex64::default(), |acc, &a| acc * z + a),
            Source::Named(name) => match name {
                CatalogName::Psi => one - (one + z).ln(),
                CatalogName::OneMinusLogOneMinusZ => one - (one - z).ln(),
                CatalogName::Sqrt1PlusZ => (one + z).sqrt(),
                CatalogName::Sqrt1MinusZ => (one - z).sqrt(),
                // cos(√w) is even in √w, so the branch of the root is irrelevant
                CatalogName::CosSqrtZ => z.sqrt().cos(),
                CatalogName::CosSqrtMinusZ => (-z).sqrt().cos(),
            },
        }
    }

    pub fn first_coeff_sign(&self) -> Sign {
        if self.coeff(1).re > 0.0 {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }

    /// `C_0..C_order` as a truncated series.
    pub fn series(&self, order: usize) -> TruncatedSeries {
        TruncatedSeries::new((0..=order).map(|k| self.coeff(k)).collect())
            .expect("catalog coefficients are finite")
    }
}

fn factorial(n: usize) -> f64 {
    (1..=n).fold(1.0, |acc, k| acc * k as f64)
}

/// `binom(1/2, k)`.
fn binomial_half(k: usize) -> f64 {
    (0..k).fold(1.0, |acc, j| acc * (0.5 - j as f64) / (j + 1) as f64)
}

/// `Φ(z) ↦ Φ(-z)`: `C_k ↦ (-1)^k C_k`.
pub fn counterpart(spec: &MaMindaSpec) -> MaMindaSpec {
    match &spec.source {
        Source::Named(n) => MaMindaSpec::named(n.partner()),
        Source::Polynomial(c) => MaMindaSpec {
            name: format!("{}(-z)", spec.name),
            source: Source::Polynomial(
                c.iter()
                    .enumerate()
                    .map(|(k, &a)| if k % 2 == 1 { -a } else { a })
                    .collect(),
            ),
        },
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Classification {
    /// `Φ - 1` typically real, i.e. `C_1 > 0`.
    pub typically_real_shift: bool,
    pub positive_real_part: bool,
    pub real_coefficients: bool,
    pub min_re: f64,
    pub max_re: f64,
    /// Point of the grid where `Re Φ` is smallest.
    pub argmin: [f64; 2],
}

/// Grid heuristic for the Ma-Minda conditions: `Re Φ` over radii
/// [`CLASSIFY_RADII`] × `grid_size` angles, and `Im C_k` for `k ≤ 40`.
pub fn classify(spec: &MaMindaSpec, grid_size: usize) -> Result<Classification> {
    if grid_size < 64 {
        return Err(Error::OutOfRange {
            what: "grid_size",
            value: grid_size as f64,
            range: ">= 64",
        });
    }
    let mut min_re = f64::INFINITY;
    let mut max_re = f64::NEG_INFINITY;
    let mut argmin = [0.0, 0.0];
    for &r in &CLASSIFY_RADII {
        for j in 0..grid_size {
            let theta = 2.0 * std::f64::consts::PI * j as f64 / grid_size as f64;
            let z = Complex64::from_polar(r, theta);
            let re = spec.eval(z).re;
            if re < min_re {
                min_re = re;
                argmin = [z.re, z.im];
            }
            max_re = max_re.max(re);
        }
    }
    let real_coefficients = (1..=40).all(|k| spec.coeff(k).im.abs() < REAL_COEFF_TOL);
    Ok(Classification {
        typically_real_shift: real_coefficients && spec.coeff(1).re > 0.0,
        positive_real_part: min_re > 0.0,
        real_coefficients,
        min_re,
        max_re,
        argmin,
    })
}

/// Membership of `w` in `ψ(𝔻)` for `ψ(z) = 1 - log(1 + z)`.
///
/// `w = ψ(z)` iff `z = exp(1 - w) - 1`, with the principal logarithm, so
/// besides `|exp(1 - w) - 1| < 1` the imaginary part must lie in the
/// principal strip `|Im w| < π/2` (otherwise `w` is a `2πi` translate).
pub fn in_psi_image(w: Complex64) -> bool {
    psi_preimage_modulus(w) < 1.0 && w.im.abs() < FRAC_PI_2
}

/// `|exp(1 - w) - 1|`, which equals `|z|` when `w = ψ(z)`.
pub fn psi_preimage_modulus(w: Complex64) -> f64 {
    ((Complex64::new(1.0, 0.0) - w).exp() - 1.0).norm()
}
