//! Schwarz functions for sampling: monomials, `z(z + η)/(1 + η z)`, scaled
//! Blaschke factors and random normalized polynomials.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::series::TruncatedSeries;

/// Truncation order of sample series. Non-polynomial kinds have parameters
/// bounded away from the unit circle so the tail at this order is negligible.
pub const SAMPLE_ORDER: usize = 96;

/// Boundary sup is measured on this many points at radius [`BOUNDARY_RADIUS`].
pub const BOUNDARY_POINTS: usize = 512;
pub const BOUNDARY_RADIUS: f64 = 0.999;

/// Random polynomials are divided by this factor times their boundary sup.
const POLY_MARGIN: f64 = 1.001;
const MAX_POLY_DEGREE: usize = 8;
/// `|a|` of sampled Blaschke factors stays below this.
const MAX_BLASCHKE_ZERO: f64 = 0.6;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SchwarzKind {
    /// `z^m`, `m ≥ 1`
    Monomial { m: usize },
    /// `z (z + η)/(1 + η z)`, `0 ≤ η ≤ 1`
    MobiusEta { eta: f64 },
    /// `s z (z - a)/(1 - conj(a) z)`, `|a| < 1`, `0 < s ≤ 1`
    ScaledBlaschke { a: [f64; 2], scale: f64 },
    /// `∑_{k=1}^{degree} c_k z^k` normalized to boundary sup `1/1.001`;
    /// coefficients are drawn from the seed
    RandomPoly { degree: usize },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SchwarzSample {
    pub kind: SchwarzKind,
    pub series: TruncatedSeries,
}

fn boundary_sup(f: impl Fn(Complex64) -> Complex64) -> f64 {
    circle_sup(f, BOUNDARY_RADIUS)
}

fn circle_sup(f: impl Fn(Complex64) -> Complex64, r: f64) -> f64 {
    (0..BOUNDARY_POINTS)
        .map(|j| {
            let th = std::f64::consts::TAU * j as f64 / BOUNDARY_POINTS as f64;
            f(Complex64::from_polar(r, th)).norm()
        })
        .fold(0.0, f64::max)
}

impl SchwarzSample {
    /// Closed-form evaluation.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        match &self.kind {
            SchwarzKind::Monomial { m } => z.powu(*m as u32),
            SchwarzKind::MobiusEta { eta } => z * (z + eta) / (1.0 + eta * z),
            SchwarzKind::ScaledBlaschke { a, scale } => {
                let a = Complex64::new(a[0], a[1]);
                *scale * z * (z - a) / (1.0 - a.conj() * z)
            }
            SchwarzKind::RandomPoly { .. } => self.series.eval(z),
        }
    }

    /// `max |ω|` over the sampling circle.
    pub fn boundary_sup(&self) -> f64 {
        boundary_sup(|z| self.eval(z))
    }
}

fn geometric_tail(lead: &[Complex64], ratio: Complex64, order: usize) -> Vec<Complex64> {
    // lead(z) / (1 - ratio z)
    let mut out = vec![Complex64::new(0.0, 0.0); order + 1];
    for n in 0..=order {
        let mut s = Complex64::new(0.0, 0.0);
        for (k, c) in lead.iter().enumerate().take(n + 1) {
            s += c * ratio.powu((n - k) as u32);
        }
        out[n] = s;
    }
    out
}

/// Builds the sample described by `kind`; `seed` only matters for
/// [`SchwarzKind::RandomPoly`].
pub fn sample_schwarz(kind: SchwarzKind, seed: u64) -> Result<SchwarzSample> {
    sample_with_rng(kind, &mut ChaCha8Rng::seed_from_u64(seed))
}

fn sample_with_rng(kind: SchwarzKind, rng: &mut ChaCha8Rng) -> Result<SchwarzSample> {
    let zero = Complex64::new(0.0, 0.0);
    let order = SAMPLE_ORDER;
    let coeffs = match &kind {
        SchwarzKind::Monomial { m } => {
            if *m == 0 || *m > order {
                return Err(Error::InvalidParams(format!("monomial power must be in 1..={order}, got {m}")));
            }
            let mut c = vec![zero; order + 1];
            c[*m] = Complex64::new(1.0, 0.0);
            c
        }
        SchwarzKind::MobiusEta { eta } => {
            if !(0.0..=1.0).contains(eta) {
                return Err(Error::OutOfRange {
                    what: "eta",
                    value: *eta,
                    range: "[0, 1]",
                });
            }
            if *eta == 1.0 {
                // z (z + 1)/(1 + z) = z
                let mut c = vec![zero; order + 1];
                c[1] = Complex64::new(1.0, 0.0);
                c
            } else {
                let lead = [zero, Complex64::new(*eta, 0.0), Complex64::new(1.0, 0.0)];
                geometric_tail(&lead, Complex64::new(-eta, 0.0), order)
            }
        }
        SchwarzKind::ScaledBlaschke { a, scale } => {
            let a = Complex64::new(a[0], a[1]);
            if !(a.norm() < 1.0) || !(*scale > 0.0 && *scale <= 1.0) {
                return Err(Error::InvalidParams(format!(
                    "need |a| < 1 and 0 < scale <= 1, got |a| = {}, scale = {scale}",
                    a.norm()
                )));
            }
            let lead = [zero, -a * *scale, Complex64::new(*scale, 0.0)];
            geometric_tail(&lead, a.conj(), order)
        }
        SchwarzKind::RandomPoly { degree } => {
            if *degree == 0 || *degree > MAX_POLY_DEGREE {
                return Err(Error::InvalidParams(format!(
                    "degree must be in 1..={MAX_POLY_DEGREE}, got {degree}"
                )));
            }
            let mut c = vec![zero; degree + 1];
            for slot in c.iter_mut().skip(1) {
                *slot = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            }
            let p = TruncatedSeries::new(c.clone())?;
            // on |z| = 1; for degree <= 8 and 512 points the sampled max is
            // within a factor cos(8π/1024) of the true one, inside POLY_MARGIN
            let sup = circle_sup(|z| p.eval(z), 1.0).max(1e-300);
            let mut c: Vec<Complex64> = c.iter().map(|x| x / (POLY_MARGIN * sup)).collect();
            c.resize(order + 1, zero);
            c
        }
    };
    Ok(SchwarzSample {
        kind,
        series: TruncatedSeries::new(coeffs)?,
    })
}

/// Sample number `index` of the stream for `seed`: the kind and its
/// parameters are drawn from a ChaCha stream keyed by `(seed, index)`, so
/// samples can be generated independently and in parallel.
pub fn schwarz_sample_stream(seed: u64, index: u64) -> Result<SchwarzSample> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    let kind = match rng.gen_range(0..4) {
        0 => SchwarzKind::Monomial { m: rng.gen_range(1..=4) },
        1 => SchwarzKind::MobiusEta { eta: rng.gen_range(0.0..0.75) },
        2 => {
            let a = Complex64::from_polar(rng.gen_range(0.0..MAX_BLASCHKE_ZERO), rng.gen_range(0.0..std::f64::consts::TAU));
            SchwarzKind::ScaledBlaschke {
                a: [a.re, a.im],
                scale: rng.gen_range(0.5..=1.0),
            }
        }
        _ => SchwarzKind::RandomPoly {
            degree: rng.gen_range(1..=MAX_POLY_DEGREE),
        },
    };
    sample_with_rng(kind, &mut rng)
}
