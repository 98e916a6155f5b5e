//! Command-line front end. Every subcommand builds a JSON value and renders
//! it as JSON, CSV or text; curves render as `re,im` rows.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{FromPrimitive, ToPrimitive};
use serde::Serialize;
use serde_json::{json, Value};

use crate::bounds::{
    self, a2a3_a4_bound, a4_bound, a5_bound_sl, alpha_class_params, fekete_szego, h3_bound_sl_alpha,
    h3_bound_sl_star, second_hankel, second_hankel_symmetric, ClassParams, PhiCoeffs, SpecialCoeffs, SymmetricKind,
};
use crate::catalog::{classify, counterpart, make_spec, in_psi_image};
use crate::error::{Error, Result};
use crate::extremal::{d_series, t_series};
use crate::radius::{
    curve_preview, gamma0, inclusion_constants, majorization_radius, radius_convex_order, radius_k_starlike,
    radius_m_beta, radius_starlike_order, radius_strongly_starlike, re_im_envelope, CurveId,
};
use crate::series::exact::t_psi;
use crate::verify;

/// Environment variable naming a `key=value` configuration file.
pub const CONFIG_ENV: &str = "GFT_CONFIG";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Json,
    Csv,
    Text,
}

impl FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        <OutputFormat as ValueEnum>::from_str(s, false)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Config {
    pub truncation_order: usize,
    pub tolerance: f64,
    pub seed: u64,
    /// `None` lets the subcommand choose (CSV for curves, JSON otherwise).
    pub output_format: Option<OutputFormat>,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            truncation_order: 32,
            tolerance: 1e-9,
            seed: 42,
            output_format: None,
        }
    }
}

impl Config {
    fn validate(&self) -> std::result::Result<(), String> {
        if self.truncation_order < 8 {
            return Err(format!("truncationOrder must be >= 8, got {}", self.truncation_order));
        }
        if !(self.tolerance > 0.0 && self.tolerance.is_finite()) {
            return Err(format!("tolerance must be positive, got {}", self.tolerance));
        }
        Ok(())
    }

    /// Applies `key=value` lines; `#` starts a comment.
    pub fn apply_file(&mut self, text: &str) -> std::result::Result<(), String> {
        for (i, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| format!("config line {}: expected key=value", i + 1))?;
            let (key, value) = (key.trim(), value.trim());
            let bad = |e: &dyn std::fmt::Display| format!("config line {}: {key}: {e}", i + 1);
            match key {
                "truncationOrder" | "order" => self.truncation_order = value.parse().map_err(|e| bad(&e))?,
                "tolerance" | "tol" => self.tolerance = value.parse().map_err(|e| bad(&e))?,
                "seed" => self.seed = value.parse().map_err(|e| bad(&e))?,
                "outputFormat" | "format" => self.output_format = Some(value.parse().map_err(|e: String| bad(&e))?),
                _ => return Err(format!("config line {}: unknown key '{key}'", i + 1)),
            }
        }
        Ok(())
    }
}

#[derive(Debug, Parser)]
#[command(name = "maminda", version, about = "Series, radii, coefficient bounds and oracles for 1 - log(1 + z)")]
struct Cli {
    /// Truncation order for series work
    #[arg(long, global = true)]
    order: Option<usize>,
    /// Tolerance used by pass/fail checks
    #[arg(long, global = true)]
    tol: Option<f64>,
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[arg(long, global = true, value_enum)]
    format: Option<OutputFormat>,
    /// Shorthand for --format json
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Radius problems and inclusion constants
    Radius(RadiusArgs),
    /// Coefficient and Hankel bounds
    Bound(BoundArgs),
    /// Taylor coefficients of t_{Φ,n} or d_{Φ,n}
    Extremal(ExtremalArgs),
    /// Boundary curves of ψ(𝔻) and the inscribed regions
    Curves(CurvesArgs),
    /// Oracle suites
    Verify(VerifyArgs),
    /// Grid classification of a catalog function
    Classify(ClassifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum RadiusProblem {
    StarlikeOrder,
    MBeta,
    Convex,
    StronglyStarlike,
    KStarlike,
    Majorization,
    Inclusion,
    Envelope,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
struct RadiusArgs {
    #[arg(long, value_enum)]
    problem: RadiusProblem,
    #[arg(long)]
    alpha: Option<f64>,
    #[arg(long)]
    beta: Option<f64>,
    #[arg(long)]
    gamma: Option<f64>,
    #[arg(long)]
    k: Option<f64>,
    #[arg(long)]
    r: Option<f64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ClassKind {
    /// S_l(α), the α-class of ψ
    Sl,
    /// M_{g,h} with --g, --h and --b
    General,
    StarlikeSymmetric,
    ConvexSymmetric,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Which {
    Fekete,
    H2,
    A4,
    A2a3a4,
    A5,
    H3,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
struct BoundArgs {
    #[arg(long = "class", value_enum)]
    class: ClassKind,
    #[arg(long, value_enum)]
    which: Which,
    /// α for the sl class; a fraction like 1/2 is accepted with --exact
    #[arg(long, default_value = "0")]
    alpha: String,
    /// Fekete–Szegő parameter
    #[arg(long, default_value_t = 1.0)]
    t: f64,
    /// g_2,g_3,g_4
    #[arg(long, value_delimiter = ',', num_args = 1, allow_hyphen_values = true)]
    g: Vec<f64>,
    /// h_2,h_3,h_4
    #[arg(long, value_delimiter = ',', num_args = 1, allow_hyphen_values = true)]
    h: Vec<f64>,
    /// B_1,B_2,B_3 (default: those of ψ's counterpart 1 - log(1 - z))
    #[arg(long, value_delimiter = ',', num_args = 1, allow_hyphen_values = true)]
    b: Vec<f64>,
    /// Print the exact rational bound table for the sl class
    #[arg(long)]
    exact: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ExtremalKindArg {
    /// z t'/t = Φ(z^n)
    T,
    /// 1 + z d''/d' = Φ(z^n)
    D,
}

#[derive(Debug, Args)]
struct ExtremalArgs {
    #[arg(long, default_value = "psi")]
    phi: String,
    #[arg(long, default_value_t = 1)]
    n: usize,
    #[arg(long, value_enum, default_value = "t")]
    kind: ExtremalKindArg,
    /// Also print exact rationals (t_{ψ,n} only)
    #[arg(long)]
    exact: bool,
}

#[derive(Debug, Args)]
struct CurvesArgs {
    #[arg(long, value_parser = parse_curve)]
    id: CurveId,
    #[arg(long, default_value_t = 512)]
    samples: usize,
}

fn parse_curve(s: &str) -> std::result::Result<CurveId, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Suite {
    Membership,
    Hankel,
    Lemmas,
    Bloch,
    Conjecture,
    Counterexamples,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    suite: Suite,
    #[arg(long, default_value_t = 200)]
    samples: usize,
    /// Grid density for sweeps
    #[arg(long, default_value_t = 64)]
    density: usize,
    #[arg(long, default_value_t = 5)]
    n_max: usize,
    #[arg(long, default_value_t = 10)]
    m_max: usize,
}

#[derive(Debug, Args)]
struct ClassifyArgs {
    #[arg(long, default_value = "psi")]
    phi: String,
    #[arg(long, default_value_t = 256)]
    grid: usize,
}

/// Rendered output plus whether the checks it reports passed.
enum Output {
    Value { value: Value, ok: bool },
    Points(Vec<Complex64>),
}

fn value<T: Serialize>(x: &T) -> Result<Value> {
    serde_json::to_value(x).map_err(|e| Error::InvalidParams(e.to_string()))
}

fn ok<T: Serialize>(x: &T) -> Result<Output> {
    Ok(Output::Value { value: value(x)?, ok: true })
}

fn need(x: Option<f64>, flag: &str) -> Result<f64> {
    x.ok_or_else(|| Error::InvalidParams(format!("--{flag} is required for this problem")))
}

fn run_radius(a: &RadiusArgs) -> Result<Output> {
    match a.problem {
        RadiusProblem::StarlikeOrder => {
            let alpha = need(a.alpha, "alpha")?;
            ok(&json!({ "alpha": alpha, "radius": radius_starlike_order(alpha)? }))
        }
        RadiusProblem::MBeta => {
            let beta = need(a.beta, "beta")?;
            ok(&json!({ "beta": beta, "radius": radius_m_beta(beta)? }))
        }
        RadiusProblem::Convex => ok(&radius_convex_order(need(a.alpha, "alpha")?)?),
        RadiusProblem::StronglyStarlike => {
            let gamma = a.gamma.unwrap_or_else(gamma0);
            ok(&radius_strongly_starlike(gamma)?)
        }
        RadiusProblem::KStarlike => ok(&radius_k_starlike(need(a.k, "k")?)?),
        RadiusProblem::Majorization => ok(&majorization_radius()?),
        RadiusProblem::Inclusion => ok(&inclusion_constants()?),
        RadiusProblem::Envelope => ok(&re_im_envelope(need(a.r, "r")?)?),
    }
}

fn parse_rational(s: &str) -> Result<BigRational> {
    BigRational::from_str(s)
        .ok()
        .or_else(|| s.parse::<f64>().ok().and_then(BigRational::from_f64))
        .ok_or_else(|| Error::InvalidParams(format!("cannot read '{s}' as a number")))
}

fn triple(v: &[f64], flag: &str) -> Result<[f64; 3]> {
    v.try_into()
        .map_err(|_| Error::InvalidParams(format!("--{flag} needs three comma-separated values")))
}

fn run_bound(a: &BoundArgs) -> Result<Output> {
    let b = if a.b.is_empty() {
        PhiCoeffs::sl()
    } else {
        let [b1, b2, b3] = triple(&a.b, "b")?;
        PhiCoeffs::new(b1, b2, b3)?
    };
    let general = |params: &ClassParams| -> Result<Output> {
        match a.which {
            Which::Fekete => ok(&fekete_szego(params, SpecialCoeffs::from_phi(b), a.t)?),
            Which::H2 => ok(&second_hankel(params, b)?),
            Which::A4 => ok(&a4_bound(params, b)?),
            Which::A2a3a4 => ok(&a2a3_a4_bound(params, b)?),
            Which::A5 | Which::H3 => Err(Error::InvalidParams(
                "--which a5 and h3 are available for --class sl only".to_string(),
            )),
        }
    };
    match a.class {
        ClassKind::Sl => {
            let exact = parse_rational(&a.alpha)?;
            if a.exact {
                return ok(&bounds::exact::sl_table(&exact)?);
            }
            let alpha = exact.to_f64().unwrap_or(f64::NAN);
            let params = alpha_class_params(alpha)?;
            match a.which {
                Which::A5 => ok(&a5_bound_sl(alpha)?),
                Which::H3 if alpha == 0.0 => ok(&h3_bound_sl_star()),
                Which::H3 => ok(&h3_bound_sl_alpha(alpha)?),
                Which::Fekete => ok(&fekete_szego(&params, SpecialCoeffs::sl(), a.t)?),
                _ => general(&params),
            }
        }
        ClassKind::General => {
            let params = ClassParams::new(triple(&a.g, "g")?, triple(&a.h, "h")?)?;
            general(&params)
        }
        ClassKind::StarlikeSymmetric | ClassKind::ConvexSymmetric => {
            let kind = if a.class == ClassKind::StarlikeSymmetric {
                SymmetricKind::Starlike
            } else {
                SymmetricKind::Convex
            };
            match a.which {
                Which::H2 => ok(&second_hankel_symmetric(kind, b)?),
                _ => {
                    let params = if kind == SymmetricKind::Starlike {
                        ClassParams::starlike_symmetric()
                    } else {
                        ClassParams::convex_symmetric()
                    };
                    general(&params)
                }
            }
        }
    }
}

fn run_extremal(a: &ExtremalArgs, order: usize) -> Result<Output> {
    let spec = make_spec(&a.phi)?;
    let f = match a.kind {
        ExtremalKindArg::T => t_series(&spec, a.n, order)?,
        ExtremalKindArg::D => d_series(&spec, a.n, order)?,
    };
    let coeffs: Vec<f64> = (1..=order).map(|k| f.coeff(k)).collect();
    let mut out = json!({
        "phi": spec.name(),
        "n": a.n,
        "kind": if a.kind == ExtremalKindArg::T { "t" } else { "d" },
        "order": order,
        "coefficients": coeffs,
    });
    if a.exact {
        if a.phi != "psi" || a.kind != ExtremalKindArg::T {
            return Err(Error::InvalidParams("--exact is available for --phi psi --kind t".to_string()));
        }
        let s = t_psi(a.n, order);
        out["exact"] = json!((1..=order).map(|k| s.coeff(k).to_string()).collect::<Vec<_>>());
    }
    Ok(Output::Value { value: out, ok: true })
}

fn run_verify(a: &VerifyArgs, cfg: &Config) -> Result<Output> {
    let tol = cfg.tolerance;
    let (v, pass) = match a.suite {
        Suite::Membership => {
            let r = verify::verify_class_membership_bounds(a.samples, cfg.seed)?;
            let pass = r.passed;
            (value(&r)?, pass)
        }
        Suite::Hankel => {
            let r = verify::hankel_suite(a.density)?;
            let pass = r.worst_margin >= -tol;
            (value(&r)?, pass)
        }
        Suite::Lemmas => {
            let mut reports = Vec::new();
            for v in [-1.0, 0.0, 0.5, 23.0 / 24.0, 1.0, 2.0] {
                reports.push(verify::lemma_p1p2_check(v, a.density)?);
            }
            reports.push(verify::lemma_p1p2p3_check(a.density.min(32))?);
            reports.push(verify::eq_p31_check(a.density)?);
            let pass = reports.iter().all(|r| r.max_violation <= tol);
            (value(&reports)?, pass)
        }
        Suite::Bloch => {
            let r = verify::bloch_samples(a.samples, cfg.seed, 256)?;
            let pass = r.distortion_margin >= -1e-6;
            (value(&r)?, pass)
        }
        Suite::Conjecture => {
            let r = verify::conjecture_check(a.n_max, a.m_max)?;
            // a violation refutes a conjecture, it is not a failure of the run
            (value(&r)?, true)
        }
        Suite::Counterexamples => {
            let sum = verify::vector_space_counterexample();
            let lambda = [(1.0, 1, 1), (0.0, 2, 1), (0.5, 1, 3), (0.25, 2, 3)]
                .iter()
                .map(|&(l, m, n)| verify::lambda_combination_check(l, m, n, 3000))
                .collect::<Result<Vec<_>>>()?;
            let pass = lambda.iter().all(|r| r.all_inside);
            (json!({ "sum": value(&sum)?, "lambdaCombinations": value(&lambda)? }), pass)
        }
    };
    Ok(Output::Value { value: v, ok: pass })
}

fn run_classify(a: &ClassifyArgs) -> Result<Output> {
    let spec = make_spec(&a.phi)?;
    let c = classify(&spec, a.grid)?;
    let cp = counterpart(&spec);
    let at_half = spec.eval(Complex64::new(0.5, 0.0));
    ok(&json!({
        "phi": spec.name(),
        "counterpart": cp.name(),
        "firstCoeff": spec.coeff(1).re,
        "classification": value(&c)?,
        "valueAtHalfInPsiImage": in_psi_image(at_half),
    }))
}

fn check_finite(v: &Value, path: &str) -> Result<()> {
    match v {
        Value::Null => Err(Error::InvalidParams(format!("non-finite value at {path}"))),
        Value::Array(xs) => xs
            .iter()
            .enumerate()
            .try_for_each(|(i, x)| check_finite(x, &format!("{path}[{i}]"))),
        Value::Object(m) => m.iter().try_for_each(|(k, x)| check_finite(x, &format!("{path}.{k}"))),
        _ => Ok(()),
    }
}

fn flatten(v: &Value, prefix: &str, out: &mut BTreeMap<String, String>) {
    let key = |k: &str| if prefix.is_empty() { k.to_string() } else { format!("{prefix}.{k}") };
    match v {
        Value::Object(m) => m.iter().for_each(|(k, x)| flatten(x, &key(k), out)),
        Value::Array(xs) => xs
            .iter()
            .enumerate()
            .for_each(|(i, x)| flatten(x, &format!("{prefix}[{i}]"), out)),
        Value::String(s) => {
            out.insert(prefix.to_string(), s.clone());
        }
        other => {
            out.insert(prefix.to_string(), other.to_string());
        }
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n', '\r']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn render(out: &Output, format: OutputFormat) -> Result<String> {
    let mut s = String::new();
    match out {
        Output::Points(pts) => {
            if let Some(p) = pts.iter().find(|p| !(p.re.is_finite() && p.im.is_finite())) {
                return Err(Error::InvalidParams(format!("non-finite curve point {p}")));
            }
            match format {
                OutputFormat::Csv => {
                    s.push_str("re,im\r\n");
                    for p in pts {
                        let _ = write!(s, "{},{}\r\n", p.re, p.im);
                    }
                }
                OutputFormat::Text => {
                    for p in pts {
                        let _ = writeln!(s, "{} {}", p.re, p.im);
                    }
                }
                OutputFormat::Json => {
                    let v: Vec<[f64; 2]> = pts.iter().map(|p| [p.re, p.im]).collect();
                    s = serde_json::to_string_pretty(&json!({ "points": v })).unwrap_or_default();
                    s.push('\n');
                }
            }
        }
        Output::Value { value, .. } => {
            check_finite(value, "$")?;
            match format {
                OutputFormat::Json => {
                    s = serde_json::to_string_pretty(value).unwrap_or_default();
                    s.push('\n');
                }
                OutputFormat::Csv | OutputFormat::Text => {
                    let mut flat = BTreeMap::new();
                    flatten(value, "", &mut flat);
                    if format == OutputFormat::Csv {
                        s.push_str("key,value\r\n");
                    }
                    for (k, v) in flat {
                        if format == OutputFormat::Csv {
                            let _ = write!(s, "{},{}\r\n", csv_field(&k), csv_field(&v));
                        } else {
                            let _ = writeln!(s, "{k} = {v}");
                        }
                    }
                }
            }
        }
    }
    Ok(s)
}

fn resolve_config(cli: &Cli, env_path: Option<&Path>) -> std::result::Result<Config, String> {
    let mut cfg = Config::default();
    if let Some(path) = env_path {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{CONFIG_ENV}={}: {e}", path.display()))?;
        cfg.apply_file(&text)?;
    }
    if let Some(o) = cli.order {
        cfg.truncation_order = o;
    }
    if let Some(t) = cli.tol {
        cfg.tolerance = t;
    }
    if let Some(s) = cli.seed {
        cfg.seed = s;
    }
    if cli.json {
        cfg.output_format = Some(OutputFormat::Json);
    }
    if let Some(f) = cli.format {
        cfg.output_format = Some(f);
    }
    cfg.validate()?;
    Ok(cfg)
}

/// Runs the CLI on `argv` (program name first), writing to `stdout` and
/// `stderr`. Returns 0 on success, 1 when a computation is rejected or a
/// verification suite fails, 2 on a usage error.
pub fn run_with(argv: &[String], stdout: &mut dyn std::io::Write, stderr: &mut dyn std::io::Write) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { stdout.write_all(text.as_bytes()) } else { stderr.write_all(text.as_bytes()) };
            return code;
        }
    };
    let env_path = std::env::var_os(CONFIG_ENV).filter(|p| !p.is_empty());
    let cfg = match resolve_config(&cli, env_path.as_deref().map(Path::new)) {
        Ok(c) => c,
        Err(msg) => {
            let _ = writeln!(stderr, "error: {msg}");
            return 2;
        }
    };
    let (result, default_format) = match &cli.command {
        Command::Radius(a) => (run_radius(a), OutputFormat::Json),
        Command::Bound(a) => (run_bound(a), OutputFormat::Json),
        Command::Extremal(a) => (run_extremal(a, cfg.truncation_order), OutputFormat::Json),
        Command::Curves(a) => (curve_preview(a.id, a.samples).map(Output::Points), OutputFormat::Csv),
        Command::Verify(a) => (run_verify(a, &cfg), OutputFormat::Json),
        Command::Classify(a) => (run_classify(a), OutputFormat::Json),
    };
    let format = cfg.output_format.unwrap_or(default_format);
    let out = match result.and_then(|o| render(&o, format).map(|s| (s, o))) {
        Ok(x) => x,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return 1;
        }
    };
    let (text, out) = out;
    if stdout.write_all(text.as_bytes()).is_err() {
        return 1;
    }
    match out {
        Output::Value { ok: false, .. } => {
            let _ = writeln!(stderr, "verification failed");
            1
        }
        _ => 0,
    }
}

/// [`run_with`] on the process streams.
pub fn run(argv: &[String]) -> i32 {
    run_with(argv, &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &str) -> (i32, String, String) {
        let argv: Vec<String> = std::iter::once("maminda").chain(args.split_whitespace()).map(String::from).collect();
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run_with(&argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn config_file() {
        let mut c = Config::default();
        c.apply_file("# comment\ntruncationOrder = 40\nseed=7\nformat = text\n").unwrap();
        assert_eq!((c.truncation_order, c.seed, c.output_format), (40, 7, Some(OutputFormat::Text)));
        assert!(c.apply_file("colour = red").is_err());
        assert!(c.apply_file("seed = -1").is_err());
        c.truncation_order = 4;
        assert!(c.validate().is_err());
    }

    #[test]
    fn exit_codes() {
        assert_eq!(call("frobnicate").0, 2);
        assert_eq!(call("radius --problem k-starlike --k 1 --bogus").0, 2);
        assert_eq!(call("radius --problem k-starlike --k -1").0, 1);
        assert_eq!(call("radius --problem convex").0, 1);
        assert_eq!(call("extremal --order 4").0, 2);
        assert_eq!(call("--help").0, 0);
        assert_eq!(call("curves --id tau --samples 3").0, 1);
        assert_eq!(call("bound --class general --which h2 --g 2,3,4 --h 0,1,0 --b 1,-0.5,0.3").0, 0);
    }

    #[test]
    fn radius_json() {
        let (code, out, _) = call("radius --problem k-starlike --k 1");
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["equationId"], "root1");
        let e = std::f64::consts::E;
        assert!((v["root"].as_f64().unwrap() - (e - 1.0) / (e + 1.0)).abs() < 1e-12);
    }

    #[test]
    fn curves_rows() {
        let (code, out, _) = call("curves --id tau --samples 4");
        assert_eq!(code, 0);
        let lines: Vec<&str> = out.split("\r\n").filter(|l| !l.is_empty()).collect();
        assert_eq!(lines.len(), 5);
        assert_eq!(lines[0], "re,im");
    }

    #[test]
    fn formats() {
        let (_, out, _) = call("radius --problem majorization --format csv");
        assert!(out.starts_with("key,value\r\n"));
        assert!(out.contains("equationId,root\r\n"));
        let (_, out, _) = call("radius --problem majorization --format text");
        assert!(out.contains("equationId = root\n"));
        assert_eq!(csv_field("a,\"b\""), "\"a,\"\"b\"\"\"");
    }
}
