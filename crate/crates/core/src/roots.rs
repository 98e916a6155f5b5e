//! Bracketed bisection.

use crate::error::{Error, Result};

/// Interval width at which bisection stops.
pub const BISECTION_WIDTH: f64 = 1e-13;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Bisection {
    pub root: f64,
    pub residual: f64,
    pub iterations: usize,
}

/// Bisects `f` on `[lo, hi]`, which must straddle a sign change.
pub fn bisect<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, equation: &'static str) -> Result<Bisection> {
    let (mut a, mut b) = (lo, hi);
    let (mut fa, fb) = (f(a), f(b));
    if fa == 0.0 {
        return Ok(Bisection { root: a, residual: 0.0, iterations: 0 });
    }
    if fb == 0.0 {
        return Ok(Bisection { root: b, residual: 0.0, iterations: 0 });
    }
    if !(fa * fb < 0.0) {
        return Err(Error::Bracket { equation, lo, hi });
    }
    let mut iterations = 0;
    while b - a > BISECTION_WIDTH && iterations < 200 {
        let m = 0.5 * (a + b);
        let fm = f(m);
        iterations += 1;
        if fm == 0.0 {
            return Ok(Bisection { root: m, residual: 0.0, iterations });
        }
        if (fa < 0.0) == (fm < 0.0) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    let root = 0.5 * (a + b);
    Ok(Bisection {
        root,
        residual: f(root).abs(),
        iterations,
    })
}

/// Bisection on the first sign change found scanning `[lo, hi]` in `steps`
/// equal cells, so the smallest root in the interval is returned.
pub fn first_root<F: Fn(f64) -> f64>(
    f: F,
    lo: f64,
    hi: f64,
    steps: usize,
    equation: &'static str,
) -> Result<(f64, f64, Bisection)> {
    let h = (hi - lo) / steps as f64;
    let mut a = lo;
    let mut fa = f(a);
    for i in 1..=steps {
        let b = if i == steps { hi } else { lo + h * i as f64 };
        let fb = f(b);
        if fa == 0.0 || fa * fb < 0.0 || fb == 0.0 {
            return Ok((a, b, bisect(&f, a, b, equation)?));
        }
        a = b;
        fa = fb;
    }
    Err(Error::Bracket { equation, lo, hi })
}
