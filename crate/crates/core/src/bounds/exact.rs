//! The `S_l(α)` bound table in exact rational arithmetic for rational `α`.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::{fekete_case, hankel_case, quadratic_max_0_4, sl_h2_printed, sl_h3_assembly, sl_h3_printed};
use crate::error::{Error, Result};
use crate::series::exact::ratio;

type Q = BigRational;

/// Exact `S_l(α)` bounds.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SlTable {
    pub alpha: String,
    /// `|a_3|` (Fekete–Szegő at `t = 0`)
    pub a3: String,
    /// `|a_3 - a_2^2|`
    pub a3_minus_a2_sq: String,
    /// second Hankel bound from the general theorem
    pub hankel2: String,
    pub hankel2_case: &'static str,
    /// printed closed form of the second Hankel bound
    pub hankel2_printed: String,
    pub a4: String,
    pub a2a3_minus_a4: String,
    pub a5: String,
    pub hankel3: String,
    pub hankel3_assembly: String,
}

pub struct SlValues {
    pub a3: Q,
    pub a3_minus_a2_sq: Q,
    pub hankel2: Q,
    pub hankel2_case: &'static str,
    pub hankel2_printed: Q,
    pub a4: Q,
    pub a2a3_minus_a4: Q,
    pub a5: Q,
    pub hankel3: Q,
    pub hankel3_assembly: Q,
}

fn params(a: &Q) -> ([Q; 3], [Q; 3]) {
    let one = Q::one();
    let n = |v: i64| Q::from_integer(v.into());
    (
        [
            n(2) * (one.clone() + a),
            n(3) * (one.clone() + n(2) * a),
            n(4) * (one.clone() + n(3) * a),
        ],
        [one.clone() + a, one.clone() + n(2) * a, one + n(3) * a],
    )
}

/// `H(q1, q2)` at the two admissible points `ω = z` (value `|q2|`) and
/// `ω = z^3` (value 1). A lower bound in general; for the `S_l(α)` inputs
/// the grid oracle confirms it is the maximum.
pub fn h_at_extremals(q2: &Q) -> Q {
    let one = Q::one();
    let a = q2.abs();
    if a > one {
        a
    } else {
        one
    }
}

pub fn sl_values(alpha: &Q) -> Result<SlValues> {
    if alpha < &Q::zero() || alpha > &Q::one() {
        return Err(Error::OutOfRange {
            what: "alpha",
            value: num_traits::ToPrimitive::to_f64(alpha).unwrap_or(f64::NAN),
            range: "[0, 1]",
        });
    }
    let (g, h) = params(alpha);
    let c = [ratio(-1, 1), ratio(1, 2), ratio(-1, 3)];
    let b = [ratio(1, 1), ratio(1, 2), ratio(1, 3)];
    let (a3, _, _) = fekete_case(&g, &h, &c, &Q::zero());
    let (fs, _, _) = fekete_case(&g, &h, &c, &Q::one());
    let (hankel2, hankel2_case, _) = hankel_case(&g, &h, &b)?;
    let (hankel2_printed, _) = sl_h2_printed(alpha);

    let (d, e, f) = (
        g[0].clone() - h[0].clone(),
        g[1].clone() - h[1].clone(),
        g[2].clone() - h[2].clone(),
    );
    let [b1, b2, b3] = b;
    let (h2, h3, h4) = (h[0].clone(), h[1].clone(), h[2].clone());
    let (g2, g3, g4) = (g[0].clone(), g[1].clone(), g[2].clone());
    let two = ratio(2, 1);
    let mix = g3.clone() * &h2 + g2.clone() * &h3 - two.clone() * &h2 * &h3;
    let q2_a4 = (b3.clone() * &d * &e + b1.clone() * &b1 * &b1 * &h2 * &h3 + b1.clone() * &b2 * &mix)
        / (b1.clone() * &d * &e);
    let mix2 = -g4.clone() + g3 * &h2 + g2.clone() * &h3 - two * &h2 * &h3 + &h4;
    let q2_a2a3 = (b3 * &d * &d * &e
        + b1.clone() * &b2 * &d * &mix2
        + b1.clone() * &b1 * &b1 * &h2 * (-g4 + g2 * &h3 - h2.clone() * &h3 + &h4))
        / (b1.clone() * &d * &d * &e);
    let a4 = b1.clone() / &f * h_at_extremals(&q2_a4);
    let a2a3_minus_a4 = b1 / &f * h_at_extremals(&q2_a2a3);

    let (gmax, _) = quadratic_max_0_4(&ratio(-1, 576), &ratio(1, 12), &Q::zero());
    let a5 = (ratio(2, 1) + ratio(2, 3) + gmax) / (ratio(8, 1) * (Q::one() + ratio(4, 1) * alpha));
    let (hankel3, _) = sl_h3_printed(alpha);
    let hankel3_assembly = sl_h3_assembly(alpha);
    Ok(SlValues {
        a3,
        a3_minus_a2_sq: fs,
        hankel2,
        hankel2_case,
        hankel2_printed,
        a4,
        a2a3_minus_a4,
        a5,
        hankel3,
        hankel3_assembly,
    })
}

pub fn sl_table(alpha: &Q) -> Result<SlTable> {
    let v = sl_values(alpha)?;
    Ok(SlTable {
        alpha: alpha.to_string(),
        a3: v.a3.to_string(),
        a3_minus_a2_sq: v.a3_minus_a2_sq.to_string(),
        hankel2: v.hankel2.to_string(),
        hankel2_case: v.hankel2_case,
        hankel2_printed: v.hankel2_printed.to_string(),
        a4: v.a4.to_string(),
        a2a3_minus_a4: v.a2a3_minus_a4.to_string(),
        a5: v.a5.to_string(),
        hankel3: v.hankel3.to_string(),
        hankel3_assembly: v.hankel3_assembly.to_string(),
    })
}
