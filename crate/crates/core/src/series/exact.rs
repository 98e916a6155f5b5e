//! Exact rational series for the fixed rational fixtures (`psi`
//! coefficients and the `t_{psi,n}` expansions).

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::TruncatedSeries;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalSeries {
    coeffs: Vec<BigRational>,
}

pub fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

impl RationalSeries {
    pub fn new(coeffs: Vec<BigRational>) -> Self {
        assert!(!coeffs.is_empty(), "series needs at least c_0");
        Self { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn to_f64(&self) -> TruncatedSeries {
        TruncatedSeries::from_vec(
            self.coeffs
                .iter()
                .map(|c| Complex64::new(c.to_f64().unwrap_or(f64::NAN), 0.0))
                .collect(),
        )
    }

    /// `exp(self)`; panics unless `c_0 = 0`.
    pub fn exp(&self, order: usize) -> Self {
        assert!(self.coeff(0).is_zero(), "exp needs zero constant term");
        let mut out = vec![BigRational::zero(); order + 1];
        out[0] = BigRational::one();
        for n in 1..=order {
            let mut s = BigRational::zero();
            for k in 1..=n.min(self.order()) {
                s += &self.coeffs[k] * BigRational::from_integer(k.into()) * &out[n - k];
            }
            out[n] = s / BigRational::from_integer(n.into());
        }
        Self::new(out)
    }

    /// Multiplies by `z`, growing the order by one.
    pub fn times_z(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(BigRational::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        Self::new(coeffs)
    }
}

/// Coefficients of `1 - log(1 + z^n)` up to `order`.
pub fn psi_power(n: usize, order: usize) -> RationalSeries {
    assert!(n >= 1);
    let mut c = vec![BigRational::zero(); order + 1];
    c[0] = BigRational::one();
    let mut k = 1;
    while k * n <= order {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        c[k * n] = ratio(sign, k as i64);
        k += 1;
    }
    RationalSeries::new(c)
}

/// Exact `t_{psi,n}(z) = z exp ∫ (psi(t^n) - 1)/t dt` up to `z^order`.
pub fn t_psi(n: usize, order: usize) -> RationalSeries {
    assert!(order >= 1);
    let q = psi_power(n, order - 1);
    let integral = RationalSeries::new(
        (0..order)
            .map(|k| {
                if k == 0 {
                    BigRational::zero()
                } else {
                    q.coeff(k) / BigRational::from_integer(k.into())
                }
            })
            .collect(),
    );
    integral.exp(order - 1).times_z()
}
