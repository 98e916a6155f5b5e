//! Bloch seminorm `sup (1 - |z|^2)|f'(z)|` estimates for the starlike class
//! of `ψ`.

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::schwarz::{schwarz_sample_stream, SAMPLE_ORDER};
use crate::catalog::MaMindaSpec;
use crate::error::{Error, Result};
use crate::extremal::{d_prime_at, f_from_q, t_series};
use crate::optimize::nelder_mead;
use crate::roots::bisect;
use crate::series::{series_compose, TruncatedSeries};

/// Outermost radius of the polar grid.
pub const BLOCH_MAX_RADIUS: f64 = 0.999;
const RADII: usize = 200;

/// `(1 - r^2)(1 - log(1 - r))`.
pub fn bloch_envelope(r: f64) -> f64 {
    (1.0 - r * r) * (1.0 - (1.0 - r).ln())
}

/// `(1 - r^2) ψ(-r) d'_ψ(-r)`: `(1 - r^2)` times the starlike distortion
/// bound `max_{|z|=r} |f'|`, attained by `f_0` at `z = -r`.
pub fn distortion_bloch_envelope(r: f64) -> f64 {
    bloch_envelope(r) * d_prime_at(&MaMindaSpec::psi(), -r)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct BlochEnvelope {
    /// root of `1 - r + 2 r log(1 - r)`
    pub r0: f64,
    pub value: f64,
    /// argmax of [`bloch_envelope`] on a `1e-5` grid
    pub grid_argmax: f64,
    /// maximizer and maximum of [`distortion_bloch_envelope`]
    pub distortion_argmax: f64,
    pub distortion_max: f64,
}

pub fn bloch_class_envelope() -> Result<BlochEnvelope> {
    let b = bisect(|r| 1.0 - r + 2.0 * r * (1.0 - r).ln(), 0.1, 0.9, "bloch")?;
    let grid_argmax = (0..100_000)
        .map(|i| i as f64 * 1e-5)
        .max_by(|a, b| bloch_envelope(*a).total_cmp(&bloch_envelope(*b)))
        .unwrap_or(0.0);
    let coarse = (1..1000)
        .map(|i| i as f64 * 1e-3)
        .max_by(|a, b| distortion_bloch_envelope(*a).total_cmp(&distortion_bloch_envelope(*b)))
        .unwrap_or(0.0);
    let (x, fx) = nelder_mead(|v| -distortion_bloch_envelope(v[0].clamp(0.0, 0.999)), &[coarse], 1e-3, 1e-15, 500);
    Ok(BlochEnvelope {
        r0: b.root,
        value: bloch_envelope(b.root),
        grid_argmax,
        distortion_argmax: x[0].clamp(0.0, 0.999),
        distortion_max: -fx,
    })
}

/// `sup (1 - |z|^2)|f'(z)|` over radii up to 0.999 and `grid_size` angles.
pub fn bloch_norm_estimate(f: &TruncatedSeries, grid_size: usize) -> Result<f64> {
    if f.order() < 40 {
        return Err(Error::OutOfRange {
            what: "series order",
            value: f.order() as f64,
            range: ">= 40",
        });
    }
    if grid_size == 0 {
        return Err(Error::OutOfRange {
            what: "gridSize",
            value: 0.0,
            range: ">= 1",
        });
    }
    let fp = f.derivative();
    let sup = (0..=RADII)
        .into_par_iter()
        .map(|i| {
            let r = BLOCH_MAX_RADIUS * i as f64 / RADII as f64;
            (0..grid_size)
                .map(|j| {
                    let z = Complex64::from_polar(r, std::f64::consts::TAU * j as f64 / grid_size as f64);
                    (1.0 - r * r) * fp.eval(z).norm()
                })
                .fold(0.0, f64::max)
        })
        .reduce(|| 0.0, f64::max);
    Ok(sup)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct BlochReport {
    pub envelope: BlochEnvelope,
    pub samples: usize,
    /// largest `‖f‖ = |f(0)| + κ(f)` over the samples
    pub max_norm: f64,
    /// samples whose norm exceeds the `(1 - r^2)(1 - log(1 - r))` maximum
    pub above_envelope_value: usize,
    /// smallest `distortion_max - ‖f‖`
    pub distortion_margin: f64,
    /// `κ(f_0)` for `f_0 = t_{ψ,1}`
    pub f0_norm: f64,
}

/// Bloch norms of `count` sampled members of the starlike class of `ψ` and
/// of `f_0`, compared with both class envelopes.
pub fn bloch_samples(count: usize, seed: u64, grid_size: usize) -> Result<BlochReport> {
    let envelope = bloch_class_envelope()?;
    let psi = MaMindaSpec::psi();
    let order = SAMPLE_ORDER;
    let norms = (0..count as u64)
        .map(|i| {
            let s = schwarz_sample_stream(seed, i)?;
            let q = series_compose(&psi.series(order), &s.series, order)?;
            let f = f_from_q(&q, order + 1)?.series;
            Ok(f.coeff(0).norm() + bloch_norm_estimate(&f, grid_size)?)
        })
        .collect::<Result<Vec<f64>>>()?;
    let f0 = t_series(&psi, 1, 400)?.series;
    let max_norm = norms.iter().cloned().fold(0.0, f64::max);
    Ok(BlochReport {
        envelope,
        samples: count,
        max_norm,
        above_envelope_value: norms.iter().filter(|&&v| v > envelope.value).count(),
        distortion_margin: envelope.distortion_max - max_norm,
        f0_norm: bloch_norm_estimate(&f0, grid_size)?,
    })
}
