//! Nonadaptive recovery of complex polynomials from `(2n+1)^2` phaseless
//! evaluations on a polar grid.
//!
//! For `p(x) = sum a_k e^{i alpha_k} x^k`, the squared modulus on a circle of
//! radius `r` is a trigonometric polynomial in the angle `y`:
//!
//! ```text
//! |p(r e^{iy})|^2 = sum_m sum_{k>=m} b_{k,m} r^{2k-m} (cos(beta_{k,m}) cos(my) + sigma sin(beta_{k,m}) sin(my))
//! b_{k,0} = a_k^2,  b_{k,m} = 2 a_k a_{k-m},  beta_{k,m} = alpha_k - alpha_{k-m}
//! ```
//!
//! with `sigma = -1` ([`SIGN_CONVENTION`]). Sampling `2n + 1` angles per radius
//! yields the trigonometric coefficients; interpolating those across `2n + 1`
//! radii yields `b cos(beta)` and `sigma b sin(beta)`, from which magnitudes
//! and phase differences follow.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ledger::CostLedger;
use crate::oracle::EvaluationOracle;
use crate::poly::{chebyshev_nodes, ComplexPoly, RealPoly};
use crate::recovery::RecoveryResult;

/// Sign of the `sin(beta) sin(my)` term in the expansion of `|p(x e^{iy})|^2`.
///
/// Expanding `|sum_k c_k x^k e^{iky}|^2` pairs `k > l` into
/// `2 a_k a_l x^{k+l} cos(beta + (k-l) y)`, whose sine part carries a minus
/// sign. `expansion_sign_is_forced` in the tests re-derives it numerically.
pub const SIGN_CONVENTION: f64 = -1.0;

/// Default relative magnitude below which a coefficient is treated as zero.
pub const DEFAULT_ZERO_TOL: f64 = 1e-7;
/// Off-pattern radial coefficients must stay below this, relative to the
/// largest radial coefficient.
pub const SPARSITY_RTOL: f64 = 1e-6;
/// Allowed mismatch between `sqrt(P^2 + Q^2)` and `2 a_k a_{k-m}`, relative to
/// `1 + max P_{k,0}`.
pub const CONSISTENCY_RTOL: f64 = 1e-5;

/// Radii of the polar grid: `2n + 1` Chebyshev points on `(0, 3/2)`.
pub fn polar_radii(n: usize) -> Vec<f64> {
    chebyshev_nodes(2 * n + 1, 0.0, 1.5)
}

/// Angles `2 pi k / (2n + 1)`, `k = 0..2n`.
pub fn polar_angles(n: usize) -> Vec<f64> {
    let count = 2 * n + 1;
    (0..count)
        .map(|k| 2.0 * PI * k as f64 / count as f64)
        .collect()
}

/// Squared moduli measured on the polar grid; `sq_moduli[i][k]` is
/// `|p(radii[i] e^{i angles[k]})|^2`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PolarSamples {
    pub n: usize,
    pub radii: Vec<f64>,
    pub angles: Vec<f64>,
    pub sq_moduli: Vec<Vec<f64>>,
}

impl PolarSamples {
    pub fn points(&self) -> Vec<Complex64> {
        self.radii
            .iter()
            .flat_map(|&r| self.angles.iter().map(move |&t| Complex64::from_polar(r, t)))
            .collect()
    }

    fn validate(&self) -> Result<()> {
        let count = 2 * self.n + 1;
        let check = |len: usize| {
            if len == count {
                Ok(())
            } else {
                Err(Error::SampleCountMismatch {
                    expected: count,
                    actual: len,
                })
            }
        };
        check(self.radii.len())?;
        check(self.angles.len())?;
        check(self.sq_moduli.len())?;
        for row in &self.sq_moduli {
            check(row.len())?;
        }
        crate::poly::interp::check_distinct(&self.radii)?;
        if let Some(i) = self.radii.iter().position(|&r| !(r > 0.0 && r.is_finite())) {
            return Err(Error::InvalidInput(format!("radius {i} is not positive")));
        }
        let expected = polar_angles(self.n);
        if self
            .angles
            .iter()
            .zip(&expected)
            .any(|(a, e)| (a - e).abs() > 1e-12)
        {
            return Err(Error::InvalidInput(
                "angles must be the uniform grid 2 pi k / (2n + 1)".into(),
            ));
        }
        Ok(())
    }
}

/// `sum A_m cos(m t) + sum B_m sin(m t)`; `sin[0]` is always zero.
#[derive(Debug, Clone, PartialEq)]
pub struct TrigPoly {
    pub cos: Vec<f64>,
    pub sin: Vec<f64>,
}

impl TrigPoly {
    pub fn value(&self, t: f64) -> f64 {
        let c: f64 = self
            .cos
            .iter()
            .enumerate()
            .map(|(m, a)| a * (m as f64 * t).cos())
            .sum();
        let s: f64 = self
            .sin
            .iter()
            .enumerate()
            .map(|(m, b)| b * (m as f64 * t).sin())
            .sum();
        c + s
    }
}

/// Radial coefficient tables.
///
/// `cos_table[k][m]` holds `P_{k,m} = b_{k,m} cos(beta_{k,m})` for `m <= k`;
/// `sin_table[k][m]` holds the coefficient read from the sine rows, which
/// equals `SIGN_CONVENTION * b_{k,m} sin(beta_{k,m})`.
#[derive(Debug, Clone, PartialEq)]
pub struct PolarTables {
    pub radii: Vec<f64>,
    pub cos_table: Vec<Vec<f64>>,
    pub sin_table: Vec<Vec<f64>>,
}

/// Queries `|p|^2` on the `(2n+1) x (2n+1)` polar grid, row by radius.
pub fn sample_polar_grid(oracle: &mut EvaluationOracle<ComplexPoly>, n: usize) -> PolarSamples {
    let radii = polar_radii(n);
    let angles = polar_angles(n);
    let sq_moduli = radii
        .iter()
        .map(|&r| {
            angles
                .iter()
                .map(|&t| {
                    let m = oracle.query_phaseless(&Complex64::from_polar(r, t)).modulus;
                    m * m
                })
                .collect()
        })
        .collect();
    oracle.charge_arithmetic(((2 * n + 1) * (2 * n + 1)) as u64);
    PolarSamples {
        n,
        radii,
        angles,
        sq_moduli,
    }
}

/// Discrete Fourier sums on the uniform grid; exact for trigonometric
/// polynomials of degree at most `n`.
pub fn trig_coefficients(samples: &[f64], n: usize) -> Result<TrigPoly> {
    let count = 2 * n + 1;
    if samples.len() != count {
        return Err(Error::SampleCountMismatch {
            expected: count,
            actual: samples.len(),
        });
    }
    let weight = 2.0 / count as f64;
    let mut cos = vec![0.0; n + 1];
    let mut sin = vec![0.0; n + 1];
    cos[0] = samples.iter().sum::<f64>() / count as f64;
    for m in 1..=n {
        for (k, s) in samples.iter().enumerate() {
            let t = 2.0 * PI * (m * k % count) as f64 / count as f64;
            cos[m] += s * t.cos();
            sin[m] += s * t.sin();
        }
        cos[m] *= weight;
        sin[m] *= weight;
    }
    Ok(TrigPoly { cos, sin })
}

/// Exponents `2k - m` (`k = m..=n`) that the radial polynomial of order `m`
/// may carry.
fn on_pattern(exponent: usize, m: usize, n: usize) -> bool {
    exponent >= m && exponent <= 2 * n - m && (exponent - m).is_multiple_of(2)
}

/// Interpolates each trigonometric coefficient across the radii and reads
/// the coefficient tables off the radial polynomials.
pub fn radial_interpolation(rows: &[TrigPoly], radii: &[f64], n: usize) -> Result<PolarTables> {
    let count = 2 * n + 1;
    if rows.len() != count || radii.len() != count {
        return Err(Error::SampleCountMismatch {
            expected: count,
            actual: rows.len().min(radii.len()),
        });
    }
    let mut radial = Vec::with_capacity(2 * (n + 1));
    for m in 0..=n {
        let cos_vals: Vec<f64> = rows.iter().map(|r| r.cos[m]).collect();
        let sin_vals: Vec<f64> = rows.iter().map(|r| r.sin[m]).collect();
        radial.push((m, RealPoly::interpolate(radii, &cos_vals)?));
        radial.push((m, RealPoly::interpolate(radii, &sin_vals)?));
    }

    let scale = 1.0
        + radial
            .iter()
            .fold(0.0_f64, |acc, (_, p)| acc.max(p.max_abs_coeff()));
    for (m, p) in &radial {
        for (e, &c) in p.coeffs().iter().enumerate() {
            if !on_pattern(e, *m, n) && c.abs() > SPARSITY_RTOL * scale {
                return Err(Error::SparsityViolation {
                    order: *m,
                    exponent: e,
                    value: c,
                });
            }
        }
    }

    let mut cos_table = vec![vec![0.0; n + 1]; n + 1];
    let mut sin_table = vec![vec![0.0; n + 1]; n + 1];
    for pair in radial.chunks(2) {
        let (m, cos_poly) = &pair[0];
        let (_, sin_poly) = &pair[1];
        for k in *m..=n {
            cos_table[k][*m] = cos_poly.coeffs()[2 * k - m];
            if *m > 0 {
                sin_table[k][*m] = sin_poly.coeffs()[2 * k - m];
            }
        }
    }
    Ok(PolarTables {
        radii: radii.to_vec(),
        cos_table,
        sin_table,
    })
}

/// Magnitudes from `P_{k,0} = a_k^2`, phases from the chain
/// `alpha_k - alpha_j = atan2(sigma Q_{k,k-j}, P_{k,k-j})` anchored at the
/// lowest nonzero coefficient `j` (whose phase is fixed to zero).
///
/// `tol` is the relative magnitude threshold: `a_k` counts as zero when
/// `P_{k,0} <= tol^2 (1 + max P)`.
pub fn reconstruct(tables: &PolarTables, n: usize, tol: f64) -> Result<ComplexPoly> {
    let p0: Vec<f64> = (0..=n).map(|k| tables.cos_table[k][0]).collect();
    let max_p = p0.iter().fold(0.0_f64, |a, &b| a.max(b));
    let zero_cut = tol * tol * (1.0 + max_p);
    let mags: Vec<f64> = p0
        .iter()
        .map(|&p| if p <= zero_cut { 0.0 } else { p.max(0.0).sqrt() })
        .collect();

    let Some(j) = mags.iter().position(|&a| a > 0.0) else {
        return Ok(ComplexPoly::zero(n));
    };

    let allowed = CONSISTENCY_RTOL * (1.0 + max_p);
    for k in 0..=n {
        for m in 1..=k {
            if mags[k] == 0.0 || mags[k - m] == 0.0 {
                continue;
            }
            let measured = tables.cos_table[k][m].hypot(tables.sin_table[k][m]);
            let residual = (measured - 2.0 * mags[k] * mags[k - m]).abs();
            if residual > allowed {
                return Err(Error::InconsistentTables { k, m, residual });
            }
        }
    }

    let angles: Vec<f64> = (0..=n)
        .map(|k| {
            if k <= j || mags[k] == 0.0 {
                0.0
            } else {
                let m = k - j;
                (SIGN_CONVENTION * tables.sin_table[k][m]).atan2(tables.cos_table[k][m])
            }
        })
        .collect();
    Ok(ComplexPoly::from_polar(&mags, &angles)?.canonicalize())
}

/// Recovery from pre-recorded polar samples.
pub fn recover_from_samples(samples: &PolarSamples) -> Result<ComplexPoly> {
    samples.validate()?;
    recover_from_samples_counted(samples, &mut 0)
}

/// Like [`recover_from_samples`], but wraps the output in a [`RecoveryResult`]
/// whose ledger counts each recorded sample as one phaseless query.
pub fn recover_from_samples_with_cost(samples: &PolarSamples) -> Result<RecoveryResult<ComplexPoly>> {
    samples.validate()?;
    let mut ops = 0;
    let polynomial = recover_from_samples_counted(samples, &mut ops)?;
    let points = samples.points();
    let ledger = CostLedger {
        phaseless_queries: points.len() as u64,
        exact_queries: 0,
        arithmetic_ops: ops,
    };
    Ok(RecoveryResult {
        polynomial,
        identified: None,
        ledger,
        points_used: points,
    })
}

fn recover_from_samples_counted(samples: &PolarSamples, ops: &mut u64) -> Result<ComplexPoly> {
    let n = samples.n;
    let count = (2 * n + 1) as u64;
    let width = (n + 1) as u64;
    let rows = samples
        .sq_moduli
        .iter()
        .map(|row| trig_coefficients(row, n))
        .collect::<Result<Vec<_>>>()?;
    // per row: n+1 frequencies, 2n+1 samples, sin + cos + 2 mul-adds
    *ops += count * width * count * 6;
    let tables = radial_interpolation(&rows, &samples.radii, n)?;
    *ops += 2 * width * 3 * count * count;
    let p = reconstruct(&tables, n, DEFAULT_ZERO_TOL)?;
    *ops += width * width * 6;
    Ok(p)
}

/// Full pipeline: sample, extract, interpolate, reconstruct.
///
/// Issues exactly `(2n+1)^2` phaseless queries and no exact query.
pub fn recover_complex(
    oracle: &mut EvaluationOracle<ComplexPoly>,
    n: usize,
) -> Result<RecoveryResult<ComplexPoly>> {
    let samples = sample_polar_grid(oracle, n);
    let mut ops = 0;
    let polynomial = recover_from_samples_counted(&samples, &mut ops)?;
    oracle.charge_arithmetic(ops);
    Ok(RecoveryResult {
        polynomial,
        identified: None,
        ledger: oracle.report(),
        points_used: samples.points(),
    })
}

/// Evaluates the trigonometric expansion of `|p(x e^{iy})|^2` with the given
/// sign on the `sin(beta) sin(my)` term.
pub fn expansion_value(p: &ComplexPoly, x: f64, y: f64, sigma: f64) -> f64 {
    let n = p.degree_bound();
    let mut total = 0.0;
    for m in 0..=n {
        for k in m..=n {
            let b = if m == 0 {
                p.magnitude(k).powi(2)
            } else {
                2.0 * p.magnitude(k) * p.magnitude(k - m)
            };
            let beta = p.angle(k) - p.angle(k - m);
            let my = m as f64 * y;
            total += b
                * x.powi((2 * k - m) as i32)
                * (beta.cos() * my.cos() + sigma * beta.sin() * my.sin());
        }
    }
    total
}
