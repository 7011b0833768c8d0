//! Command-line front end: runs recoveries against seeded random or
//! file-provided polynomials, reproduces the worked examples, and prints
//! cost tables.
//!
//! Exit codes: 0 on success, 1 when a recovery or construction fails, 2 on
//! bad input.

use std::f64::consts::PI;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use phaseless::complex_recovery::{recover_complex, recover_from_samples_with_cost, PolarSamples};
use phaseless::counterexample::{
    build_collision_pair, build_collision_pair_with, real_line_collision, real_line_modulus_gap,
    unit_circle_profile, verify_collision, CollisionPair,
};
use phaseless::poly::{ratio, JsonScalar};
use phaseless::real_recovery::{
    adaptive_points, enumerate_sign_candidates, find_separating_point, rational_points,
    recover_adaptive, recover_nonadaptive, recover_rational,
};
use phaseless::{
    AnyPoly, Complex64, ComplexPoly, EvaluationOracle, PolyJson, RationalPoly, RealPoly,
    TranscendentalPoint,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Map, Value};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("invalid input: {0}")]
    Input(String),
    #[error("i/o error: {0}")]
    Io(String),
    #[error(transparent)]
    Recovery(#[from] phaseless::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Recovery(_) => 1,
            CliError::Input(_) | CliError::Io(_) => 2,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

#[derive(Debug, Clone, Parser)]
#[command(name = "phaseless", version, about = "Phaseless polynomial interpolation")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
    /// Degree bound n of the hidden polynomial (default 3, or the input's bound).
    #[arg(long, global = true)]
    pub degree: Option<usize>,
    /// Seed for random hidden polynomials.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// JSON input: a polynomial, polar samples, or collision-pair inputs.
    #[arg(long, global = true)]
    pub input: Option<PathBuf>,
    /// Where to write the main output (default: standard output).
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// Tolerance for the hidden-polynomial match or collision certificate.
    #[arg(long, global = true)]
    pub tolerance: Option<f64>,
    /// Decimal digits of the pi approximation in rational mode.
    #[arg(long, global = true, default_value_t = 50)]
    pub precision_digits: u32,
    /// Where to write CSV plot data, for commands that produce it.
    #[arg(long, global = true)]
    pub csv: Option<PathBuf>,
    /// Largest n in the `costs` table.
    #[arg(long, global = true, default_value_t = 6)]
    pub max_degree: usize,
    /// Number of samples in CSV sweeps.
    #[arg(long, global = true, default_value_t = 200)]
    pub samples: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Nonadaptive real recovery from 2n+1 signless values.
    RecoverReal,
    /// Adaptive real recovery: n+1 signless values and one exact value.
    RecoverAdaptive,
    /// Rational recovery with one exact value at an approximation of pi.
    RecoverRational,
    /// Complex recovery from (2n+1)^2 moduli on a polar grid.
    RecoverComplex,
    /// Build and certify a collision pair.
    Counterexample,
    /// The eight cubics with unit modulus at 1, 2, 3, 4.
    #[command(name = "demo-figure1")]
    DemoFigure1,
    /// 2x+1 and x+2 on the unit circle.
    DemoUnitCircle,
    /// Query counts per algorithm for n = 0..max-degree.
    Costs,
}

impl Command {
    fn name(self) -> &'static str {
        match self {
            Command::RecoverReal => "recover-real",
            Command::RecoverAdaptive => "recover-adaptive",
            Command::RecoverRational => "recover-rational",
            Command::RecoverComplex => "recover-complex",
            Command::Counterexample => "counterexample",
            Command::DemoFigure1 => "demo-figure1",
            Command::DemoUnitCircle => "demo-unit-circle",
            Command::Costs => "costs",
        }
    }
}

/// What a run produced: the main output and optional CSV plot data.
#[derive(Debug, Clone, PartialEq)]
pub struct RunOutput {
    pub stdout: String,
    pub csv: Option<String>,
}

/// Uniformly spaced samples of one or more polynomials.
#[derive(Debug, Clone, PartialEq)]
pub struct PlotData {
    pub header: Vec<String>,
    pub rows: Vec<Vec<f64>>,
}

impl PlotData {
    pub fn to_csv(&self) -> String {
        write_csv(&self.header, &self.rows)
    }
}

fn write_csv(header: &[String], rows: &[Vec<f64>]) -> String {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(row.iter().map(f64::to_string))
            .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv is utf-8")
}

/// `samples` uniformly spaced points of `[lo, hi]`, endpoints included.
fn grid(interval: (f64, f64), samples: usize) -> Vec<f64> {
    let (lo, hi) = interval;
    (0..samples)
        .map(|i| {
            if i + 1 == samples {
                hi
            } else {
                lo + (hi - lo) * i as f64 / (samples - 1) as f64
            }
        })
        .collect()
}

/// Samples each polynomial on `interval`: the value for real and rational
/// kinds, the modulus for the complex kind.
///
/// # Panics
///
/// If `samples < 2`.
pub fn emit_plot_data(polynomials: &[AnyPoly], interval: (f64, f64), samples: usize) -> PlotData {
    assert!(samples >= 2, "need at least two samples");
    let mut header = vec!["t".to_owned()];
    let real: Vec<Box<dyn Fn(f64) -> f64>> = polynomials
        .iter()
        .enumerate()
        .map(|(i, p)| -> Box<dyn Fn(f64) -> f64> {
            match p {
                AnyPoly::Real(p) => {
                    header.push(format!("p{}", i + 1));
                    let p = p.clone();
                    Box::new(move |t| p.evaluate(t))
                }
                AnyPoly::Rational(p) => {
                    header.push(format!("p{}", i + 1));
                    let p = p.to_real();
                    Box::new(move |t| p.evaluate(t))
                }
                AnyPoly::Complex(p) => {
                    header.push(format!("abs_p{}", i + 1));
                    let p = p.clone();
                    Box::new(move |t| p.evaluate(Complex64::new(t, 0.0)).norm())
                }
            }
        })
        .collect();
    let rows = grid(interval, samples)
        .into_iter()
        .map(|t| std::iter::once(t).chain(real.iter().map(|f| f(t))).collect())
        .collect();
    PlotData { header, rows }
}

pub fn random_real(seed: u64, n: usize) -> RealPoly {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    RealPoly::new((0..=n).map(|_| rng.random_range(-1.0..=1.0)).collect())
        .expect("finite coefficients")
}

pub fn random_complex(seed: u64, n: usize) -> ComplexPoly {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    ComplexPoly::new(
        (0..=n)
            .map(|_| Complex64::new(rng.random_range(-1.0..=1.0), rng.random_range(-1.0..=1.0)))
            .collect(),
    )
    .expect("finite coefficients")
}

pub fn random_rational(seed: u64, n: usize) -> RationalPoly {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    RationalPoly::new(
        (0..=n)
            .map(|_| ratio(rng.random_range(-10..=10), rng.random_range(1..=10)))
            .collect(),
    )
    .expect("nonempty")
}

fn read_input(config: &RunConfig) -> CliResult<Option<Value>> {
    let Some(path) = &config.input else {
        return Ok(None);
    };
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map(Some)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn input_poly(value: &Value) -> CliResult<AnyPoly> {
    let raw: PolyJson =
        serde_json::from_value(value.clone()).map_err(|e| CliError::Input(e.to_string()))?;
    AnyPoly::try_from(&raw).map_err(|e| CliError::Input(e.to_string()))
}

/// Hidden polynomial from `--input`, or a seeded random one of the requested degree.
fn hidden<P>(
    config: &RunConfig,
    input: Option<&Value>,
    pick: impl FnOnce(AnyPoly) -> Option<P>,
    random: impl FnOnce(u64, usize) -> P,
    bound: impl Fn(&P) -> usize,
) -> CliResult<(P, usize)> {
    match input {
        Some(v) => {
            let any = input_poly(v)?;
            let kind = PolyJson::from(&any).kind;
            let p = pick(any).ok_or_else(|| {
                CliError::Input(format!("{} expects another polynomial kind, got {kind}", config.command.name()))
            })?;
            let n = config.degree.unwrap_or(bound(&p));
            if n < bound(&p) {
                return Err(CliError::Input(format!(
                    "--degree {n} is below the input's degree bound {}",
                    bound(&p)
                )));
            }
            Ok((p, n))
        }
        None => {
            let n = config.degree.unwrap_or(3);
            Ok((random(config.seed, n), n))
        }
    }
}

fn envelope(command: Command, hidden: Option<PolyJson>, result: Value, matches: Option<bool>) -> Value {
    let mut out = Map::new();
    out.insert("command".into(), json!(command.name()));
    if let Some(h) = hidden {
        out.insert("hidden".into(), serde_json::to_value(h).expect("serializes"));
    }
    if let Value::Object(fields) = result {
        out.extend(fields);
    }
    if let Some(m) = matches {
        out.insert("matches_hidden".into(), json!(m));
    }
    Value::Object(out)
}

fn render(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializes");
    s.push('\n');
    s
}

/// Dispatches one command. Deterministic in `(command, flags, seed, input)`.
pub fn run(config: &RunConfig) -> CliResult<RunOutput> {
    if config.samples < 2 {
        return Err(CliError::Input("--samples must be at least 2".into()));
    }
    let input = read_input(config)?;
    let json_only = |v: Value| RunOutput {
        stdout: render(&v),
        csv: None,
    };
    match config.command {
        Command::RecoverReal | Command::RecoverAdaptive => {
            let pick = |a| match a {
                AnyPoly::Real(p) => Some(p),
                _ => None,
            };
            let (p, n) = hidden(config, input.as_ref(), pick, random_real, RealPoly::degree_bound)?;
            let tol = config.tolerance.unwrap_or(1e-6);
            let mut oracle = EvaluationOracle::new(p.clone());
            let (result, matches) = if config.command == Command::RecoverReal {
                let r = recover_nonadaptive(&mut oracle, n)?;
                let m = r.polynomial.phase_equivalent(&p, tol);
                (r, m)
            } else {
                let r = recover_adaptive(&mut oracle, n)?;
                let found = r.identified.as_ref().expect("adaptive recovery identifies");
                let m = found.to_complex().distance(&p.padded(n).to_complex()) <= tol;
                (r, m)
            };
            Ok(json_only(envelope(
                config.command,
                Some((&p).into()),
                result.to_json_value(),
                Some(matches),
            )))
        }
        Command::RecoverRational => {
            let pick = |a| match a {
                AnyPoly::Rational(p) => Some(p),
                _ => None,
            };
            let (p, n) =
                hidden(config, input.as_ref(), pick, random_rational, RationalPoly::degree_bound)?;
            if config.precision_digits == 0 {
                return Err(CliError::Input("--precision-digits must be positive".into()));
            }
            let point = TranscendentalPoint::pi(config.precision_digits);
            let mut oracle = EvaluationOracle::new(p.clone());
            let r = recover_rational(&mut oracle, n, &rational_points(n), &point)?;
            let matches = r.identified.as_ref().map(|q| q.coeffs() == p.coeffs());
            Ok(json_only(envelope(
                config.command,
                Some((&p).into()),
                r.to_json_value(),
                matches,
            )))
        }
        Command::RecoverComplex => {
            if let Some(v) = input.as_ref().filter(|v| v.get("sq_moduli").is_some()) {
                let samples: PolarSamples = serde_json::from_value(v.clone())
                    .map_err(|e| CliError::Input(e.to_string()))?;
                let r = recover_from_samples_with_cost(&samples)?;
                return Ok(json_only(envelope(config.command, None, r.to_json_value(), None)));
            }
            let pick = |a| match a {
                AnyPoly::Complex(p) => Some(p),
                AnyPoly::Real(p) => Some(p.to_complex()),
                AnyPoly::Rational(_) => None,
            };
            let (p, n) =
                hidden(config, input.as_ref(), pick, random_complex, ComplexPoly::degree_bound)?;
            let tol = config.tolerance.unwrap_or(1e-5);
            let r = recover_complex(&mut EvaluationOracle::new(p.clone()), n)?;
            let matches = r.polynomial.phase_equivalent(&p, tol);
            Ok(json_only(envelope(
                config.command,
                Some((&p).into()),
                r.to_json_value(),
                Some(matches),
            )))
        }
        Command::Counterexample => counterexample(config, input.as_ref()),
        Command::DemoFigure1 => demo_figure1(config),
        Command::DemoUnitCircle => demo_unit_circle(config),
        Command::Costs => {
            let header: Vec<String> = ["n", "nonadaptive_real", "adaptive_real", "complex"]
                .map(String::from)
                .to_vec();
            let rows: Vec<Vec<f64>> = (0..=config.max_degree)
                .map(|n| {
                    let m = 2 * n + 1;
                    [n, m, n + 2, m * m].map(|v| v as f64).to_vec()
                })
                .collect();
            Ok(RunOutput {
                stdout: write_csv(&header, &rows),
                csv: None,
            })
        }
    }
}

fn complex_list(value: &Value, key: &str) -> CliResult<Vec<Complex64>> {
    value
        .get(key)
        .and_then(Value::as_array)
        .ok_or_else(|| CliError::Input(format!("missing array {key:?}")))?
        .iter()
        .map(|v| {
            if let Some(x) = v.as_f64() {
                Ok(Complex64::new(x, 0.0))
            } else {
                Complex64::from_json(v).map_err(|e| CliError::Input(e.to_string()))
            }
        })
        .collect()
}

fn collision_from_input(value: &Value) -> CliResult<CollisionPair> {
    let anchors = complex_list(value, "anchors")?;
    let probes = complex_list(value, "probes")?;
    let moduli: Vec<f64> = value
        .get("moduli")
        .and_then(Value::as_array)
        .ok_or_else(|| CliError::Input("missing array \"moduli\"".into()))?
        .iter()
        .map(|v| v.as_f64().ok_or_else(|| CliError::Input("moduli must be numbers".into())))
        .collect::<CliResult<_>>()?;
    let pair = match value.get("vanishing") {
        Some(v) => {
            let p = match input_poly(v)? {
                AnyPoly::Complex(p) => p,
                AnyPoly::Real(p) => p.to_complex(),
                AnyPoly::Rational(p) => p.to_real().to_complex(),
            };
            build_collision_pair_with(&anchors, &moduli, &probes, &p)?
        }
        None => build_collision_pair(&anchors, &moduli, &probes)?,
    };
    Ok(pair)
}

fn counterexample(config: &RunConfig, input: Option<&Value>) -> CliResult<RunOutput> {
    let pair = match input {
        Some(v) => collision_from_input(v)?,
        None => real_line_collision(),
    };
    let tol = config.tolerance.unwrap_or(1e-9);
    let report = verify_collision(&pair, tol);
    let reals = pair
        .anchor_points
        .iter()
        .chain(&pair.probe_points)
        .map(|z| z.re);
    let (lo, hi) = reals.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), x| {
        (lo.min(x), hi.max(x))
    });
    let interval = (lo - 0.1, hi + 0.1);

    let mut report_json = serde_json::to_value(report).expect("serializes");
    report_json["pass"] = json!(report.pass());
    let out = json!({
        "command": config.command.name(),
        "pair": pair.to_json_value(),
        "report": report_json,
        "sweep": {
            "interval": [interval.0, interval.1],
            "samples": config.samples,
            "max_modulus_gap": real_line_modulus_gap(&pair, interval.0, interval.1, config.samples),
        },
    });

    let header: Vec<String> = ["t", "abs_w_b", "abs_w_bp", "re_w_b", "im_w_b", "re_w_bp", "im_w_bp"]
        .map(String::from)
        .to_vec();
    let rows: Vec<Vec<f64>> = grid(interval, config.samples)
        .into_iter()
        .map(|t| {
            let x = Complex64::new(t, 0.0);
            let (u, v) = (pair.w_b.evaluate(x), pair.w_bp.evaluate(x));
            vec![t, u.norm(), v.norm(), u.re, u.im, v.re, v.im]
        })
        .collect();
    Ok(RunOutput {
        stdout: render(&out),
        csv: Some(write_csv(&header, &rows)),
    })
}

fn demo_figure1(config: &RunConfig) -> CliResult<RunOutput> {
    let points = adaptive_points(3);
    let moduli = [1.0; 4];
    let candidates = enumerate_sign_candidates(&points, &moduli)?;
    let x_star = find_separating_point(&candidates);
    let out = json!({
        "command": config.command.name(),
        "points": points,
        "moduli": moduli,
        "candidates": candidates.iter().map(PolyJson::from).collect::<Vec<_>>(),
        "separating_point": x_star,
    });
    let polys: Vec<AnyPoly> = candidates.into_iter().map(AnyPoly::Real).collect();
    let plot = emit_plot_data(&polys, (0.8, 4.2), config.samples);
    Ok(RunOutput {
        stdout: render(&out),
        csv: Some(plot.to_csv()),
    })
}

fn demo_unit_circle(config: &RunConfig) -> CliResult<RunOutput> {
    let one = |a: f64, b: f64| {
        ComplexPoly::new(vec![Complex64::new(a, 0.0), Complex64::new(b, 0.0)])
            .expect("finite coefficients")
    };
    let (p, q) = (one(1.0, 2.0), one(2.0, 1.0));
    let angles: Vec<f64> = (0..config.samples)
        .map(|k| 2.0 * PI * k as f64 / config.samples as f64)
        .collect();
    let (pp, qp) = (unit_circle_profile(&p, &angles), unit_circle_profile(&q, &angles));
    let expected: Vec<f64> = angles.iter().map(|t| 4.0 * t.cos() + 5.0).collect();
    let residual = |profile: &[f64]| {
        profile
            .iter()
            .zip(&expected)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    };
    let rp = recover_complex(&mut EvaluationOracle::new(p.clone()), 1)?;
    let rq = recover_complex(&mut EvaluationOracle::new(q.clone()), 1)?;
    let out = json!({
        "command": config.command.name(),
        "p": PolyJson::from(&p),
        "q": PolyJson::from(&q),
        "max_residual_p": residual(&pp),
        "max_residual_q": residual(&qp),
        "recovered_p": rp.to_json_value(),
        "recovered_q": rq.to_json_value(),
        "recovered_distinct": !rp.polynomial.phase_equivalent(&rq.polynomial, 1e-6),
    });
    let header: Vec<String> = ["theta", "abs2_p", "abs2_q", "four_cos_plus_five"]
        .map(String::from)
        .to_vec();
    let rows: Vec<Vec<f64>> = (0..angles.len())
        .map(|i| vec![angles[i], pp[i], qp[i], expected[i]])
        .collect();
    Ok(RunOutput {
        stdout: render(&out),
        csv: Some(write_csv(&header, &rows)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_hits_endpoints() {
        let g = grid((-0.1, 6.1), 1000);
        assert_eq!((g[0], g[999]), (-0.1, 6.1));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(CliError::Input(String::new()).exit_code(), 2);
        assert_eq!(CliError::Recovery(phaseless::Error::ZeroPolynomial).exit_code(), 1);
    }

    #[test]
    fn random_rationals_respect_bounds() {
        let p = random_rational(11, 20);
        for c in p.coeffs() {
            let (n, d) = (c.numer().clone(), c.denom().clone());
            assert!(n.magnitude() <= &10u8.into() && d <= 10.into());
        }
    }
}
