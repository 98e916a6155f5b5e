//! Coefficient bounds for `M_{g,h}(φ)`: Fekete–Szegő, the second Hankel
//! determinant, `|a_4|`, `|a_2 a_3 - a_4|`, and the `S_l(α)` table
//! (`|a_5|`, `|H_3(1)|`).
//!
//! `M_{g,h}(φ)` is the set of normalized `f` with `(f*g)/(f*h) ≺ φ`, where
//! `g = z + g_2 z^2 + ...`, `h = z + h_2 z^2 + ...`. The Hankel and
//! Fekete–Szegő formulas are written once over [`Scalar`] so the same code
//! runs in `f64` and in exact rationals (see [`exact`]).

pub mod exact;

use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex64;
use num_traits::{FromPrimitive, Signed};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::catalog::MaMindaSpec;
use crate::error::{Error, Result};
use crate::optimize::nelder_mead;

/// Grid density used by the bounds that go through `H(q1, q2)`.
pub const H_DENSITY: usize = 64;

/// Numeric types the piecewise formulas are evaluated in.
pub trait Scalar: Clone + PartialOrd + Signed + FromPrimitive + fmt::Debug {}
impl<T: Clone + PartialOrd + Signed + FromPrimitive + fmt::Debug> Scalar for T {}

fn k<T: Scalar>(n: i64) -> T {
    T::from_i64(n).expect("small integer")
}

fn pw<T: Scalar>(x: &T, n: u32) -> T {
    (0..n).fold(T::one(), |acc, _| acc * x.clone())
}

/// Maximum of `A t^2 + B t + C` over `0 ≤ t ≤ 4`, by the three-branch rule.
/// Labels: `"left"` (value `C`), `"right"` (`16A + 4B + C`), `"vertex"`.
pub fn quadratic_max_0_4<T: Scalar>(a: &T, b: &T, c: &T) -> (T, &'static str) {
    let zero = T::zero();
    let quarter = -b.clone() / k(4);
    let eighth = -b.clone() / k(8);
    if *b <= zero && *a <= quarter {
        (c.clone(), "left")
    } else if (*b >= zero && *a >= eighth) || (*b <= zero && *a >= quarter) {
        (k::<T>(16) * a.clone() + k::<T>(4) * b.clone() + c.clone(), "right")
    } else {
        let v = (k::<T>(4) * a.clone() * c.clone() - b.clone() * b.clone()) / (k::<T>(4) * a.clone());
        (v, "vertex")
    }
}

/// `M`, `T` and the three case predicates of the second Hankel theorem:
/// `p_m = |M| - B1^2 d^4 f`, `p_t = |T| + B1 e^2 d - 2 B1 d^2 f`,
/// `p_mt = 2|M| - B1 |T| d^2 - B1^2 e^2 d^3`, with `d, e, f = g_n - h_n`.
#[derive(Clone, Debug, PartialEq)]
pub struct HankelTerms<T> {
    pub m: T,
    pub t: T,
    pub p_m: T,
    pub p_t: T,
    pub p_mt: T,
}

pub fn hankel_terms<T: Scalar>(g: &[T; 3], h: &[T; 3], b: &[T; 3]) -> HankelTerms<T> {
    let [g2, g3, g4] = g.clone();
    let [h2, h3, _] = h.clone();
    let [b1, b2, b3] = b.clone();
    let d = g2.clone() - h2.clone();
    let e = g3.clone() - h3.clone();
    let f = g4 - h[2].clone();
    let (d2, d3, d4, e2) = (pw(&d, 2), pw(&d, 3), pw(&d, 4), pw(&e, 2));
    let h2sq = pw(&h2, 2);
    let h2cu = pw(&h2, 3);

    let inner = g2.clone() * g3.clone() * h2sq.clone() - g3.clone() * h2cu.clone()
        + pw(&g2, 2) * h2.clone() * h3.clone()
        - k::<T>(3) * g2.clone() * h2sq.clone() * h3.clone()
        + k::<T>(2) * h2cu.clone() * h3.clone()
        + e.clone() * (h2cu - g2.clone() * h2sq.clone());
    let mix = g3.clone() * h2.clone() + g2.clone() * h3.clone() - k::<T>(2) * h2.clone() * h3.clone();
    let m = pw(&b1, 4) * (-(h2sq * d2.clone() * f.clone()) + e.clone() * inner)
        - pw(&b2, 2) * d4.clone() * f.clone()
        + b1.clone() * b3 * e2.clone() * d3.clone()
        + pw(&b1, 2)
            * b2.clone()
            * (e.clone() * d2.clone() * mix - k::<T>(2) * h2.clone() * d3.clone() * f.clone());

    let b1sq = pw(&b1, 2);
    let t = k::<T>(2) * b2.clone() * d2.clone() * f.clone()
        + k::<T>(2) * b1sq.clone() * h2.clone() * d.clone() * f.clone()
        - b1sq.clone() * g3 * h2.clone() * e.clone()
        - b1sq.clone() * g2 * h3.clone() * e.clone()
        + k::<T>(2) * b1sq.clone() * h2 * h3 * e.clone()
        - k::<T>(2) * b2 * e2.clone() * d.clone();

    let (am, at) = (m.abs(), t.abs());
    let p_m = am.clone() - b1sq.clone() * d4 * f.clone();
    let p_t = at.clone() + b1.clone() * e2.clone() * d.clone() - k::<T>(2) * b1.clone() * d2.clone() * f;
    let p_mt = k::<T>(2) * am - b1.clone() * at * d2 - b1sq * e2 * d3;
    HankelTerms { m, t, p_m, p_t, p_mt }
}

/// Second Hankel bound: value, case label and the terms used.
pub fn hankel_case<T: Scalar>(
    g: &[T; 3],
    h: &[T; 3],
    b: &[T; 3],
) -> Result<(T, &'static str, HankelTerms<T>)> {
    let d = g[0].clone() - h[0].clone();
    let e = g[1].clone() - h[1].clone();
    let f = g[2].clone() - h[2].clone();
    if pw(&e, 2) > k::<T>(2) * d.clone() * f.clone() {
        return Err(Error::Hypothesis(format!(
            "(g3-h3)^2 = {:?} exceeds 2(g2-h2)(g4-h4) = {:?}",
            pw(&e, 2),
            k::<T>(2) * d * f
        )));
    }
    let terms = hankel_terms(g, h, b);
    let zero = T::zero();
    let b1sq = pw(&b[0], 2);
    let e2 = pw(&e, 2);
    let HankelTerms { m, t, p_m, p_t, p_mt } = &terms;
    let (value, label) = if *p_m <= zero && *p_t <= zero {
        (b1sq / e2, "case1")
    } else if (*p_t >= zero && *p_mt >= zero) || (*p_t <= zero && *p_m >= zero) {
        (m.abs() / (pw(&d, 4) * e2 * f), "case2")
    } else if *p_t > zero && *p_mt <= zero {
        let a = m.abs() - b[0].clone() * t.abs() * pw(&d, 2) - b1sq.clone() * e2.clone() * pw(&d, 3)
            + b1sq.clone() * pw(&d, 4) * f.clone();
        let v = b1sq.clone() / e2.clone() - b1sq * pw(p_t, 2) / (k::<T>(4) * e2 * f * a);
        (v, "case3")
    } else {
        return Err(Error::NoCase {
            theorem: "second Hankel",
            diagnostics: format!("M={m:?} T={t:?} p_m={p_m:?} p_t={p_t:?} p_mt={p_mt:?}"),
        });
    };
    Ok((value, label, terms))
}

/// Fekete–Szegő bound for `M_{g,h}(Φ)` with `Φ = 1 + C1 z + C2 z^2 + ...`,
/// `C1 < 0`. Returns value, branch label and `(κ1, κ2)`.
pub fn fekete_case<T: Scalar>(g: &[T; 3], h: &[T; 3], c: &[T; 3], t: &T) -> (T, &'static str, (T, T)) {
    let [g2, g3, _] = g.clone();
    let [h2, h3, _] = h.clone();
    let [c1, c2, _] = c.clone();
    let d = g2.clone() - h2.clone();
    let e = g3 - h3;
    let c1sq = pw(&c1, 2);
    let d2 = pw(&d, 2);
    let k1 = (d2.clone() * (c2.clone() + c1.clone()) + h2.clone() * d.clone() * c1sq.clone())
        / (e.clone() * c1sq.clone());
    let k2 = (d2.clone() * (c2.clone() - c1.clone()) + h2.clone() * d.clone() * c1sq.clone())
        / (e.clone() * c1sq.clone());
    let s = (g2 * h2.clone() - pw(&h2, 2)) * c1sq.clone() / (e.clone() * d2.clone());
    let lin = t.clone() * c1sq / d2;
    if *t <= k1 {
        (c2 / e.clone() - lin + s, "below_k1", (k1, k2))
    } else if *t <= k2 {
        (-c1 / e, "middle", (k1, k2))
    } else {
        (-c2 / e - s + lin, "above_k2", (k1, k2))
    }
}

/// Convolution coefficients `g_2..g_4`, `h_2..h_4` of `M_{g,h}`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClassParams {
    pub g2: f64,
    pub g3: f64,
    pub g4: f64,
    pub h2: f64,
    pub h3: f64,
    pub h4: f64,
}

impl ClassParams {
    /// Requires `g_n > 0`, `h_n ≥ 0` and `g_n - h_n > 0`. (`h_n = 0` occurs for
    /// the symmetric-point classes.)
    pub fn new(g: [f64; 3], h: [f64; 3]) -> Result<Self> {
        for (n, (gn, hn)) in g.iter().zip(&h).enumerate() {
            if !(gn.is_finite() && hn.is_finite() && *gn > 0.0 && *hn >= 0.0 && gn - hn > 0.0) {
                return Err(Error::InvalidParams(format!(
                    "need g{0} > 0, h{0} >= 0, g{0} - h{0} > 0; got g{0} = {gn}, h{0} = {hn}",
                    n + 2
                )));
            }
        }
        Ok(ClassParams {
            g2: g[0],
            g3: g[1],
            g4: g[2],
            h2: h[0],
            h3: h[1],
            h4: h[2],
        })
    }

    pub fn g(&self) -> [f64; 3] {
        [self.g2, self.g3, self.g4]
    }

    pub fn h(&self) -> [f64; 3] {
        [self.h2, self.h3, self.h4]
    }

    /// `2 z f'/(f(z) - f(-z))`: `g = z/(1-z)^2`, `h = z/(1-z^2)`.
    pub fn starlike_symmetric() -> Self {
        ClassParams::new([2.0, 3.0, 4.0], [0.0, 1.0, 0.0]).expect("valid")
    }

    /// `(2 z f')'/(f(z) - f(-z))'`: `g = z(1+z)/(1-z)^3`, `h = z(1+z^2)/(1-z^2)^2`.
    pub fn convex_symmetric() -> Self {
        ClassParams::new([4.0, 9.0, 16.0], [0.0, 3.0, 0.0]).expect("valid")
    }

    fn echo(&self, out: &mut BTreeMap<String, f64>) {
        for (key, v) in [
            ("g2", self.g2),
            ("g3", self.g3),
            ("g4", self.g4),
            ("h2", self.h2),
            ("h3", self.h3),
            ("h4", self.h4),
        ] {
            out.insert(key.to_string(), v);
        }
    }
}

/// Parameters of `M_α(φ)`, i.e. `(z f' + α z^2 f'')/(α z f' + (1-α) f) ≺ φ`.
pub fn alpha_class_params(alpha: f64) -> Result<ClassParams> {
    check_alpha(alpha)?;
    ClassParams::new(
        [2.0 * (1.0 + alpha), 3.0 * (1.0 + 2.0 * alpha), 4.0 * (1.0 + 3.0 * alpha)],
        [1.0 + alpha, 1.0 + 2.0 * alpha, 1.0 + 3.0 * alpha],
    )
}

fn check_alpha(alpha: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&alpha) {
        return Err(Error::OutOfRange {
            what: "alpha",
            value: alpha,
            range: "[0, 1]",
        });
    }
    Ok(())
}

/// `φ(z) = 1 + B1 z + B2 z^2 + B3 z^3 + ...` with `B1 > 0`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PhiCoeffs {
    pub b1: f64,
    pub b2: f64,
    pub b3: f64,
}

impl PhiCoeffs {
    pub fn new(b1: f64, b2: f64, b3: f64) -> Result<Self> {
        if !(b1 > 0.0 && b1.is_finite() && b2.is_finite() && b3.is_finite()) {
            return Err(Error::InvalidParams(format!("need finite B with B1 > 0, got B1 = {b1}")));
        }
        Ok(PhiCoeffs { b1, b2, b3 })
    }

    /// `B_i = (-1)^i C_i` for a special-type `Φ = 1 + C1 z + ...`, `C1 < 0`.
    pub fn from_special(c: SpecialCoeffs) -> Self {
        PhiCoeffs {
            b1: -c.c1,
            b2: c.c2,
            b3: -c.c3,
        }
    }

    /// First three coefficients of a catalog function, flipped to `B1 > 0`
    /// when the function is of special type.
    pub fn from_spec(spec: &MaMindaSpec) -> Result<Self> {
        let c: Vec<f64> = (1..=3).map(|k| spec.coeff(k).re).collect();
        if c[0] < 0.0 {
            Ok(PhiCoeffs::from_special(SpecialCoeffs::new(c[0], c[1], c[2])?))
        } else {
            PhiCoeffs::new(c[0], c[1], c[2])
        }
    }

    /// `1 - log(1 - z)`, the counterpart of `ψ`.
    pub fn sl() -> Self {
        PhiCoeffs::from_special(SpecialCoeffs::sl())
    }

    pub fn as_array(&self) -> [f64; 3] {
        [self.b1, self.b2, self.b3]
    }

    fn echo(&self, out: &mut BTreeMap<String, f64>) {
        out.insert("B1".into(), self.b1);
        out.insert("B2".into(), self.b2);
        out.insert("B3".into(), self.b3);
    }
}

/// `Φ(z) = 1 + C1 z + C2 z^2 + C3 z^3 + ...` with `C1 < 0`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpecialCoeffs {
    pub c1: f64,
    pub c2: f64,
    pub c3: f64,
}

impl SpecialCoeffs {
    pub fn new(c1: f64, c2: f64, c3: f64) -> Result<Self> {
        if !(c1 < 0.0 && c2.is_finite() && c3.is_finite() && c1.is_finite()) {
            return Err(Error::InvalidParams(format!(
                "need C1 < 0 (use the counterpart form otherwise), got C1 = {c1}"
            )));
        }
        Ok(SpecialCoeffs { c1, c2, c3 })
    }

    /// `ψ(z) = 1 - log(1 + z)`.
    pub fn sl() -> Self {
        SpecialCoeffs {
            c1: -1.0,
            c2: 0.5,
            c3: -1.0 / 3.0,
        }
    }

    pub fn from_phi(b: PhiCoeffs) -> Self {
        SpecialCoeffs {
            c1: -b.b1,
            c2: b.b2,
            c3: -b.b3,
        }
    }

    pub fn as_array(&self) -> [f64; 3] {
        [self.c1, self.c2, self.c3]
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct BoundReport {
    pub value: f64,
    pub case_label: String,
    pub inputs_echo: BTreeMap<String, f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub extremal_hint: Option<String>,
}

impl BoundReport {
    fn new(value: f64, case_label: &str) -> Self {
        BoundReport {
            value,
            case_label: case_label.to_string(),
            inputs_echo: BTreeMap::new(),
            extremal_hint: None,
        }
    }

    fn echo(mut self, key: &str, v: f64) -> Self {
        self.inputs_echo.insert(key.to_string(), v);
        self
    }

    fn hint(mut self, h: impl Into<String>) -> Self {
        self.extremal_hint = Some(h.into());
        self
    }
}

/// `|a_3 - t a_2^2|` over `M_{g,h}(Φ)`.
pub fn fekete_szego(params: &ClassParams, c: SpecialCoeffs, t: f64) -> Result<BoundReport> {
    let c = SpecialCoeffs::new(c.c1, c.c2, c.c3)?;
    if !t.is_finite() {
        return Err(Error::InvalidParams(format!("t must be finite, got {t}")));
    }
    let (value, label, (k1, k2)) = fekete_case(&params.g(), &params.h(), &c.as_array(), &t);
    let hint = match label {
        "middle" if t > k1 && t < k2 => "Phi(z^2)",
        "middle" if t == k1 => "Phi(z(z+eta)/(1+eta z))",
        "middle" => "Phi(-z(z+eta)/(1+eta z))",
        _ => "Phi(z)",
    };
    let mut r = BoundReport::new(value, label)
        .echo("t", t)
        .echo("C1", c.c1)
        .echo("C2", c.c2)
        .echo("C3", c.c3)
        .echo("kappa1", k1)
        .echo("kappa2", k2)
        .hint(hint);
    params.echo(&mut r.inputs_echo);
    Ok(r)
}

/// `|a_2 a_4 - a_3^2|` over `M_{g,h}(φ)`.
pub fn second_hankel(params: &ClassParams, b: PhiCoeffs) -> Result<BoundReport> {
    let (value, label, terms) = hankel_case(&params.g(), &params.h(), &b.as_array())?;
    let mut r = BoundReport::new(value, label)
        .echo("M", terms.m)
        .echo("T", terms.t)
        .echo("p_m", terms.p_m)
        .echo("p_t", terms.p_t)
        .echo("p_mt", terms.p_mt);
    r = match label {
        "case1" => r.hint("phi(z^2)"),
        "case2" => r.hint("phi(z)"),
        _ => r,
    };
    params.echo(&mut r.inputs_echo);
    b.echo(&mut r.inputs_echo);
    Ok(r)
}

/// The second Hankel bound re-derived as `max_{0≤t≤4} (A t^2 + B t + C)`
/// over `16 d^4 e^2 f`; must agree with [`second_hankel`].
pub fn second_hankel_quadratic(params: &ClassParams, b: PhiCoeffs) -> f64 {
    let terms = hankel_terms(&params.g(), &params.h(), &b.as_array());
    let (d, e, f) = (params.g2 - params.h2, params.g3 - params.h3, params.g4 - params.h4);
    let b1 = b.b1;
    let (am, at) = (terms.m.abs(), terms.t.abs());
    let qa = am - b1 * at * d * d - b1 * b1 * e * e * d.powi(3) + b1 * b1 * d.powi(4) * f;
    let qb = 4.0 * b1 * d * d * terms.p_t;
    let qc = 16.0 * b1 * b1 * d.powi(4) * f;
    let (v, _) = quadratic_max_0_4(&qa, &qb, &qc);
    v / (16.0 * d.powi(4) * e * e * f)
}

/// Closed form printed for `S_l(α)`:
/// `1/(4(1+2α)^2)` for `α ≤ (2+√15)/11`, else
/// `(31α^4+136α^3-14α^2-24α-3) / (2(61α^2-20α-5)(1+α)(1+3α)(1+2α)^2)`.
///
/// The second branch is smaller than what the general theorem gives and
/// than what the Carathéodory oracle attains (about 0.02809 at α = 1), so
/// [`second_hankel`] is the bound to use; this one reproduces the table.
pub fn second_hankel_sl_alpha_printed(alpha: f64) -> Result<BoundReport> {
    check_alpha(alpha)?;
    let (v, label) = sl_h2_printed(&alpha);
    Ok(BoundReport::new(v, label).echo("alpha", alpha))
}

/// `α ≤ (2 + √15)/11`, decided without square roots.
pub fn below_sl_threshold<T: Scalar>(alpha: &T) -> bool {
    let x = k::<T>(11) * alpha.clone() - k(2);
    x <= T::zero() || pw(&x, 2) <= k(15)
}

pub fn sl_h2_printed<T: Scalar>(a: &T) -> (T, &'static str) {
    let one = T::one();
    let p = |c: &[i64]| c.iter().rev().fold(T::zero(), |acc, &ci| acc * a.clone() + k(ci));
    let a1 = one.clone() + a.clone();
    let a2 = one.clone() + k::<T>(2) * a.clone();
    let a3 = one + k::<T>(3) * a.clone();
    if below_sl_threshold(a) {
        (T::one() / (k::<T>(4) * pw(&a2, 2)), "branch1")
    } else {
        let num = p(&[-3, -24, -14, 136, 31]);
        let den = k::<T>(2) * p(&[-5, -20, 61]) * a1 * a3 * pw(&a2, 2);
        (num / den, "branch2")
    }
}

/// Printed `g(α)` bounding `|H_3(1)|` on `S_l(α)`.
pub fn sl_h3_printed<T: Scalar>(a: &T) -> (T, &'static str) {
    let one = T::one();
    let p = |c: &[i64]| c.iter().rev().fold(T::zero(), |acc, &ci| acc * a.clone() + k(ci));
    let a1 = one.clone() + a.clone();
    let a2 = one.clone() + k::<T>(2) * a.clone();
    let a3 = one.clone() + k::<T>(3) * a.clone();
    let a4 = one + k::<T>(4) * a.clone();
    if below_sl_threshold(a) {
        let num = p(&[949, 11388, 52493, 114974, 117180, 42568]);
        let den = k::<T>(1728) * a4 * pw(&a3, 2) * pw(&a2, 4);
        (num / den, "branch1")
    } else {
        let num = p(&[-5069, -76035, -385994, -619570, 831511, 3545777, 3327024, 1298324]);
        let den = k::<T>(1728) * a1 * a4 * pw(&a3, 2) * pw(&a2, 3) * p(&[-5, -20, 61]);
        (num / den, "branch2")
    }
}

/// `|a_3| H_2 + |a_4| |a_2 a_3 - a_4| + |a_5| |a_3 - a_2^2|` from the
/// individual `S_l(α)` bounds (printed `H_2`).
pub fn sl_h3_assembly<T: Scalar>(a: &T) -> T {
    let one = T::one();
    let a2 = one.clone() + k::<T>(2) * a.clone();
    let a3 = one.clone() + k::<T>(3) * a.clone();
    let a4 = one + k::<T>(4) * a.clone();
    let abs_a3 = k::<T>(3) / (k::<T>(4) * a2.clone());
    let (h2, _) = sl_h2_printed(a);
    let abs_a4 = k::<T>(19) / (k::<T>(36) * a3.clone());
    let a2a3_a4 = T::one() / (k::<T>(3) * a3);
    let abs_a5 = k::<T>(107) / (k::<T>(288) * a4);
    let fs = T::one() / (k::<T>(2) * a2);
    abs_a3 * h2 + abs_a4 * a2a3_a4 + abs_a5 * fs
}

/// Corollary forms for the symmetric-point classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SymmetricKind {
    Starlike,
    Convex,
}

impl std::str::FromStr for SymmetricKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "starlike" => Ok(SymmetricKind::Starlike),
            "convex" => Ok(SymmetricKind::Convex),
            _ => Err(Error::UnknownName {
                kind: "symmetric kind",
                name: s.to_string(),
            }),
        }
    }
}

/// `|a_2 a_4 - a_3^2|` for `S_s*(φ)` or `C_s(φ)`, labels `A`, `B`, `C`.
pub fn second_hankel_symmetric(kind: SymmetricKind, b: PhiCoeffs) -> Result<BoundReport> {
    let PhiCoeffs { b1, b2, b3 } = PhiCoeffs::new(b.b1, b.b2, b.b3)?;
    // (M, T, A-threshold on |M|, |T| threshold, B-coefficient on |T|, B-constant, leading, case-2 divisor, case-3 divisor, case-3 denominator constant)
    let (m, t, ma, tc, bt, bc, lead, div2, div3, dc, dt) = match kind {
        SymmetricKind::Starlike => (
            16.0 * b1 * b1 * b2 - 64.0 * b2 * b2 + 32.0 * b1 * b3,
            16.0 * b2 - 4.0 * b1 * b1,
            64.0,
            24.0,
            2.0,
            16.0,
            4.0,
            256.0,
            64.0,
            32.0,
            4.0,
        ),
        SymmetricKind::Convex => (
            128.0 * (9.0 * b1 * b1 * b2 - 32.0 * b2 * b2 + 18.0 * b1 * b3),
            8.0 * (28.0 * b2 - 9.0 * b1 * b1),
            4096.0,
            368.0,
            8.0,
            1152.0,
            36.0,
            147456.0,
            2304.0,
            1792.0,
            16.0,
        ),
    };
    let (am, at) = (m.abs(), t.abs());
    let pa = am - ma * b1 * b1;
    let pt = at - tc * b1;
    let pb = am - bt * b1 * at - bc * b1 * b1;
    let (value, label) = if pa <= 0.0 && pt <= 0.0 {
        (b1 * b1 / lead, "A")
    } else if (pb >= 0.0 && pt >= 0.0) || (pa >= 0.0 && pt <= 0.0) {
        (am / div2, "B")
    } else if pt > 0.0 && pb <= 0.0 {
        let v = b1 * b1 / lead - b1 * b1 * pt * pt / (div3 * (am - dt * b1 * at + dc * b1 * b1));
        (v, "C")
    } else {
        return Err(Error::NoCase {
            theorem: "symmetric second Hankel",
            diagnostics: format!("M={m} T={t} A:{pa} T-cond:{pt} B:{pb}"),
        });
    };
    let mut r = BoundReport::new(value, label).echo("M", m).echo("T", t);
    b.echo(&mut r.inputs_echo);
    Ok(r)
}

/// `(a_2, a_3, a_4)` in terms of Carathéodory coefficients `p_1, p_2, p_3`
/// of `p = (1 + ω)/(1 - ω)`. `b` is used as given (no sign normalization).
pub fn caratheodory_to_coeffs(
    params: &ClassParams,
    b: [f64; 3],
    p1: Complex64,
    p2: Complex64,
    p3: Complex64,
) -> (Complex64, Complex64, Complex64) {
    let ClassParams { g2, g3, g4, h2, h3, h4 } = *params;
    let [b1, b2, b3] = b;
    let (d, e, f) = (g2 - h2, g3 - h3, g4 - h4);
    let p1sq = p1 * p1;
    let a2 = b1 * p1 / (2.0 * d);
    let a3 = (b2 * p1sq * d - b1 * (p1sq - 2.0 * p2) * d + b1 * b1 * p1sq * h2) / (4.0 * d * e);
    let p1cu = p1sq * p1;
    let bracket = p1cu * (g2 * (g3 + (b2 - 1.0) * h3) + h2 * ((b2 - 1.0) * g3 + h3 - 2.0 * b2 * h3))
        - 4.0 * p1 * p2 * d * e
        + 4.0 * p3 * d * e;
    let a4 = (p1 * (-2.0 * b2 * p1sq + b3 * p1sq + 4.0 * b2 * p2) * d * e
        + b1.powi(3) * p1cu * h2 * h3
        - b1 * b1 * p1 * (p1sq - 2.0 * p2) * (g3 * h2 + (g2 - 2.0 * h2) * h3)
        + b1 * bracket)
        / (8.0 * d * e * f);
    (a2, a3, a4)
}

/// `(q1, q2)` with `|a_4| ≤ B1/(g_4 - h_4) · H(q1, q2)`.
pub fn q_params_a4(params: &ClassParams, b: PhiCoeffs) -> (f64, f64) {
    let ClassParams { g2, g3, h2, h3, .. } = *params;
    let PhiCoeffs { b1, b2, b3 } = b;
    let (d, e) = (g2 - h2, g3 - h3);
    let mix = g3 * h2 + g2 * h3 - 2.0 * h2 * h3;
    let den = b1 * d * e;
    let q1 = (2.0 * b2 * d * e + b1 * b1 * mix) / den;
    let q2 = (b3 * d * e + b1.powi(3) * h2 * h3 + b1 * b2 * mix) / den;
    (q1, q2)
}

/// `(q1, q2)` with `|a_2 a_3 - a_4| ≤ B1/(g_4 - h_4) · H(q1, q2)`.
pub fn q_params_a2a3_a4(params: &ClassParams, b: PhiCoeffs) -> (f64, f64) {
    let ClassParams { g2, g3, g4, h2, h3, h4 } = *params;
    let PhiCoeffs { b1, b2, b3 } = b;
    let (d, e) = (g2 - h2, g3 - h3);
    let mix = -g4 + g3 * h2 + g2 * h3 - 2.0 * h2 * h3 + h4;
    let den = b1 * d * d * e;
    let q1 = (2.0 * b2 * d * d * e + b1 * b1 * d * mix) / den;
    let q2 = (b3 * d * d * e + b1 * b2 * d * mix + b1.powi(3) * h2 * (-g4 + g2 * h3 - h2 * h3 + h4)) / den;
    (q1, q2)
}

/// Maximizer of `|c_3 + q1 c_1 c_2 + q2 c_1^3|` over Schwarz coefficients.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct HMaximum {
    pub value: f64,
    /// `c_1 = ξ ∈ [0, 1]` (real after rotation)
    pub xi: f64,
    /// `c_2 = (1 - ξ^2) η`
    pub eta: [f64; 2],
    /// `c_3 = (1 - ξ^2)(1 - |η|^2) ζ - (1 - ξ^2) ξ η^2`
    pub zeta: [f64; 2],
}

/// With `ζ` chosen optimally the objective is `|X| + (1 - ξ^2)(1 - |η|^2)`,
/// `X = q2 ξ^3 + q1 ξ (1 - ξ^2) η - (1 - ξ^2) ξ η^2`.
fn h_objective(q1: f64, q2: f64, xi: f64, eta: Complex64) -> (f64, Complex64) {
    let s = 1.0 - xi * xi;
    let x = q2 * xi.powi(3) + q1 * xi * s * eta - s * xi * eta * eta;
    (x.norm() + s * (1.0 - eta.norm_sqr()), x)
}

/// Numerical `H(q1, q2)`: grid over `ξ ∈ [0, 1]`, `|η| ∈ [0, 1]`,
/// `arg η ∈ [0, 2π)` with `density` points each (ζ eliminated exactly),
/// then Nelder–Mead from the best grid point. A lower bound for the true
/// maximum.
pub fn schwarz_functional_h(q1: f64, q2: f64, density: usize) -> Result<HMaximum> {
    if density < 32 {
        return Err(Error::OutOfRange {
            what: "density",
            value: density as f64,
            range: ">= 32",
        });
    }
    if !(q1.is_finite() && q2.is_finite()) {
        return Err(Error::InvalidParams(format!("q1, q2 must be finite, got ({q1}, {q2})")));
    }
    let n = density;
    let step = 1.0 / (n - 1) as f64;
    let dth = std::f64::consts::TAU / n as f64;
    let (best, i, j, l) = (0..n)
        .into_par_iter()
        .map(|i| {
            let xi = i as f64 * step;
            let mut best = (f64::NEG_INFINITY, i, 0, 0);
            for j in 0..n {
                for l in 0..n {
                    let eta = Complex64::from_polar(j as f64 * step, l as f64 * dth);
                    let (v, _) = h_objective(q1, q2, xi, eta);
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
    let clamp = |v: &[f64]| (v[0].clamp(0.0, 1.0), v[1].clamp(0.0, 1.0), v[2]);
    let neg = |v: &[f64]| {
        let (xi, rho, th) = clamp(v);
        -h_objective(q1, q2, xi, Complex64::from_polar(rho, th)).0
    };
    let start = [i as f64 * step, j as f64 * step, l as f64 * dth];
    let (x, fx) = nelder_mead(neg, &start, step, 1e-15, 2000);
    let (xi, rho, th) = if -fx > best { clamp(&x) } else { (start[0], start[1], start[2]) };
    let eta = Complex64::from_polar(rho, th);
    let (value, xval) = h_objective(q1, q2, xi, eta);
    let zeta = if xval.norm() > 0.0 { xval / xval.norm() } else { Complex64::new(1.0, 0.0) };
    Ok(HMaximum {
        value,
        xi,
        eta: [eta.re, eta.im],
        zeta: [zeta.re, zeta.im],
    })
}

fn h_hint(h: &HMaximum) -> String {
    let eta = Complex64::new(h.eta[0], h.eta[1]);
    if (h.xi - 1.0).abs() < 1e-9 {
        "omega(z) = z".to_string()
    } else if h.xi < 1e-9 && eta.norm() < 1e-9 {
        "omega(z) = z^3".to_string()
    } else {
        format!("xi = {:.6}, eta = {:.6}{:+.6}i", h.xi, eta.re, eta.im)
    }
}

fn h_bound(params: &ClassParams, b: PhiCoeffs, (q1, q2): (f64, f64)) -> Result<BoundReport> {
    let b = PhiCoeffs::new(b.b1, b.b2, b.b3)?;
    let h = schwarz_functional_h(q1, q2, H_DENSITY)?;
    let mut r = BoundReport::new(b.b1 / (params.g4 - params.h4) * h.value, "H")
        .echo("q1", q1)
        .echo("q2", q2)
        .echo("H", h.value)
        .hint(h_hint(&h));
    params.echo(&mut r.inputs_echo);
    b.echo(&mut r.inputs_echo);
    Ok(r)
}

/// `|a_4| ≤ B1/(g_4 - h_4) · H(q1, q2)`.
pub fn a4_bound(params: &ClassParams, b: PhiCoeffs) -> Result<BoundReport> {
    h_bound(params, b, q_params_a4(params, b))
}

/// `|a_2 a_3 - a_4| ≤ B1/(g_4 - h_4) · H(q1, q2)`.
pub fn a2a3_a4_bound(params: &ClassParams, b: PhiCoeffs) -> Result<BoundReport> {
    h_bound(params, b, q_params_a2a3_a4(params, b))
}

/// `|a_5| ≤ (2 + 2/3 + max G)/(8(1+4α)) = 107/(288(1+4α))` on `S_l(α)`, where
/// `G(p) = |p|^2/12 - |p|^4/576` is maximized over `|p|^2 ∈ [0, 4]`.
pub fn a5_bound_sl(alpha: f64) -> Result<BoundReport> {
    check_alpha(alpha)?;
    let (g, _) = quadratic_max_0_4(&(-1.0 / 576.0), &(1.0 / 12.0), &0.0);
    let value = (2.0 + 2.0 / 3.0 + g) / (8.0 * (1.0 + 4.0 * alpha));
    let mut r = BoundReport::new(value, "sl").echo("alpha", alpha);
    if alpha == 0.0 {
        r = r.hint("1 - log(1 + z)");
    }
    Ok(r)
}

/// Printed `g(α)` bound for `|H_3(1)|` on `S_l(α)`, with the assembled
/// product-sum echoed for comparison.
pub fn h3_bound_sl_alpha(alpha: f64) -> Result<BoundReport> {
    check_alpha(alpha)?;
    let (v, label) = sl_h3_printed(&alpha);
    Ok(BoundReport::new(v, label)
        .echo("alpha", alpha)
        .echo("assembly", sl_h3_assembly(&alpha)))
}

/// `|H_3(1)| ≤ 1/9` on `S_l*`, attained by `z exp(-∫ log(1+t^3)/t)`.
pub fn h3_bound_sl_star() -> BoundReport {
    BoundReport::new(1.0 / 9.0, "sl-star").hint("t_psi(3): 1 - log(1 + z^3)")
}
