//! Recovery of real polynomials from signless evaluations.
//!
//! Three algorithms are provided:
//!
//! * [`recover_nonadaptive`]: `2n + 1` signless queries at fixed nodes,
//!   polynomial processing cost. The squared polynomial `q = p^2` is
//!   interpolated and `p` is read off `q`'s coefficients by the square-root
//!   recursion.
//! * [`recover_adaptive`]: `n + 1` signless queries and one exact query at a
//!   point chosen after enumerating all `2^n` sign-consistent candidates.
//! * [`recover_rational`]: the same count for rational coefficients, but every
//!   point is fixed in advance; the exact query goes to a transcendental
//!   point, approximated with a certified error bound.

use nalgebra::{DMatrix, DVector};
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::oracle::EvaluationOracle;
use crate::poly::{chebyshev_nodes, ratio, vandermonde_inverse, RationalPoly, RealPoly};
use crate::recovery::RecoveryResult;
use crate::transcendental::TranscendentalPoint;

/// Relative threshold below which a coefficient of `q = p^2` counts as zero.
pub const SQUARE_ZERO_RTOL: f64 = 1e-9;
/// Relative residual `|p(x_i)^2 - |f(x_i)|^2|` above which the measurements are
/// rejected as not coming from a polynomial of the stated degree bound.
pub const SQUARE_FIT_RTOL: f64 = 1e-6;
const POLISH_MAX_ITERS: usize = 20;
const DIFFERENCE_CLEAN_RTOL: f64 = 1e-9;

/// A sign choice `b in {-1, +1}^{n+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignPattern {
    pub bits: Vec<i8>,
}

impl SignPattern {
    /// Every pattern that matters for the given moduli: bits at vanishing
    /// moduli are fixed to `+1`, as is the first remaining bit (global sign).
    /// Free bits are enumerated in binary order, lowest index first.
    pub fn enumerate(vanishing: &[bool]) -> Vec<SignPattern> {
        let free: Vec<usize> = (0..vanishing.len()).filter(|&i| !vanishing[i]).collect();
        let toggles = free.len().saturating_sub(1);
        (0..1usize << toggles)
            .map(|mask| {
                let mut bits = vec![1i8; vanishing.len()];
                for (t, &i) in free.iter().skip(1).enumerate() {
                    if mask >> t & 1 == 1 {
                        bits[i] = -1;
                    }
                }
                SignPattern { bits }
            })
            .collect()
    }

    pub fn apply(&self, moduli: &[f64]) -> Vec<f64> {
        self.bits
            .iter()
            .zip(moduli)
            .map(|(&b, &m)| f64::from(b) * m)
            .collect()
    }
}

/// Nodes used by [`recover_nonadaptive`]: `2n + 1` Chebyshev points on `[-1, 1]`.
pub fn nonadaptive_points(n: usize) -> Vec<f64> {
    chebyshev_nodes(2 * n + 1, -1.0, 1.0)
}

/// Nodes used by [`recover_adaptive`]: the integers `1..=n+1`.
pub fn adaptive_points(n: usize) -> Vec<f64> {
    (1..=n + 1).map(|i| i as f64).collect()
}

/// Nodes used by [`recover_rational`]: the integers `1..=n+1`.
pub fn rational_points(n: usize) -> Vec<BigRational> {
    (1..=n as i64 + 1).map(|i| ratio(i, 1)).collect()
}

/// Interpolates `q(x) = |p(x)|^2` (degree bound `2n`) from `2n + 1` moduli.
pub fn interpolate_square(points: &[f64], moduli: &[f64]) -> Result<RealPoly> {
    let squares: Vec<f64> = moduli.iter().map(|m| m * m).collect();
    RealPoly::interpolate(points, &squares)
}

/// Support `[first, last]` of a coefficient slice under the zero threshold.
fn support(square: &[f64]) -> Option<(usize, usize)> {
    let max = square.iter().fold(0.0_f64, |m, a| m.max(a.abs()));
    let tol = SQUARE_ZERO_RTOL * (1.0 + max);
    let first = square.iter().position(|a| a.abs() > tol)?;
    let last = square.iter().rposition(|a| a.abs() > tol)?;
    Some((first, last))
}

/// Runs `c_0 = sqrt(B_0)`, `c_m = (B_m - sum_{i=1}^{m-1} c_i c_{m-i}) / (2 c_0)`.
fn sqrt_recursion(square: &[f64], len: usize) -> Result<Vec<f64>> {
    if square[0] <= 0.0 {
        return Err(Error::DegreeMismatch(format!(
            "extreme coefficient {:e} of the squared polynomial is not positive",
            square[0]
        )));
    }
    let mut c = vec![0.0; len];
    c[0] = square[0].sqrt();
    for m in 1..len {
        let cross: f64 = (1..m).map(|i| c[i] * c[m - i]).sum();
        c[m] = (square[m] - cross) / (2.0 * c[0]);
    }
    Ok(c)
}

/// Recovers `p` (up to sign, with `a_j > 0`) from the coefficients of `p^2`
/// by the forward recursion anchored at the lowest nonzero coefficient.
///
/// Returns the zero polynomial when every coefficient is below the zero
/// threshold.
pub fn square_root_coefficients(square: &[f64], n: usize) -> Result<RealPoly> {
    let Some((first, last)) = support(square) else {
        return Ok(RealPoly::zero(n));
    };
    let (j_low, j_high) = square_support_to_range(first, last, n)?;
    let c = sqrt_recursion(&square[first..=last], j_high - j_low + 1)?;
    Ok(place(&c, j_low, n))
}

fn square_support_to_range(first: usize, last: usize, n: usize) -> Result<(usize, usize)> {
    if first % 2 == 1 || last % 2 == 1 {
        return Err(Error::DegreeMismatch(format!(
            "squared polynomial has odd extreme exponent ({first}..{last})"
        )));
    }
    if last > 2 * n {
        return Err(Error::DegreeMismatch(format!(
            "squared polynomial has degree {last} > {}",
            2 * n
        )));
    }
    Ok((first / 2, last / 2))
}

fn place(active: &[f64], offset: usize, n: usize) -> RealPoly {
    let mut coeffs = vec![0.0; n + 1];
    coeffs[offset..offset + active.len()].copy_from_slice(active);
    RealPoly::new(coeffs).expect("finite recursion output")
}

/// Gauss-Newton on `p(x_i)^2 = squares_i` over the coefficients `offset..offset+len`.
/// Returns the refined active coefficients and the final max residual.
fn polish(
    active: Vec<f64>,
    offset: usize,
    points: &[f64],
    squares: &[f64],
    ops: &mut u64,
) -> (Vec<f64>, f64) {
    let len = active.len();
    let rows = points.len();
    let basis = DMatrix::from_fn(rows, len, |i, k| points[i].powi((offset + k) as i32));
    let residual_of = |a: &DVector<f64>| -> (DVector<f64>, DVector<f64>) {
        let values = &basis * a;
        let r = DVector::from_fn(rows, |i, _| values[i] * values[i] - squares[i]);
        (values, r)
    };

    let mut a = DVector::from_vec(active);
    let (mut values, mut r) = residual_of(&a);
    let mut best = r.amax();
    for _ in 0..POLISH_MAX_ITERS {
        if !best.is_finite() {
            break;
        }
        let jac = DMatrix::from_fn(rows, len, |i, k| 2.0 * values[i] * basis[(i, k)]);
        *ops += (rows * len * (len + 4)) as u64;
        let Ok(step) = jac.svd(true, true).solve(&r, 1e-14) else {
            break;
        };
        let candidate = &a - &step;
        let (v, rr) = residual_of(&candidate);
        let res = rr.amax();
        if res.is_nan() || res >= best {
            break;
        }
        let small = step.amax() <= 1e-15 * (1.0 + candidate.amax());
        a = candidate;
        values = v;
        r = rr;
        best = res;
        if small {
            break;
        }
    }
    (a.iter().copied().collect(), best)
}

/// Nonadaptive recovery from `2n + 1` signless evaluations.
///
/// `q = |p|^2` is interpolated at Chebyshev nodes; the square-root recursion
/// is run from both ends of `q`'s support (the forward recursion amplifies
/// rounding by roughly `|smallest root|^{-k}`, the backward one by
/// `|largest root|^k`), each result is refined by Gauss-Newton on the
/// measured squares, and the one with the smaller residual is kept.
pub fn recover_nonadaptive(
    oracle: &mut EvaluationOracle<RealPoly>,
    n: usize,
) -> Result<RecoveryResult<RealPoly>> {
    let points = nonadaptive_points(n);
    let moduli: Vec<f64> = points
        .iter()
        .map(|x| oracle.query_phaseless(x).modulus)
        .collect();
    let m = points.len() as u64;

    let square = interpolate_square(&points, &moduli)?;
    oracle.charge_arithmetic(m + 3 * m * m);
    let squares: Vec<f64> = moduli.iter().map(|v| v * v).collect();

    let recovered = match support(square.coeffs()) {
        None => RealPoly::zero(n),
        Some((first, last)) => {
            let (j_low, j_high) = square_support_to_range(first, last, n)?;
            let len = j_high - j_low + 1;
            let band = &square.coeffs()[first..=last];
            let mut reversed = band.to_vec();
            reversed.reverse();
            oracle.charge_arithmetic(4 * (len * len) as u64);

            let mut ops = 0;
            let mut best: Option<(Vec<f64>, f64)> = None;
            let starts = [
                sqrt_recursion(band, len),
                sqrt_recursion(&reversed, len).map(|mut c| {
                    c.reverse();
                    c
                }),
            ];
            for start in starts.into_iter().flatten() {
                if start.iter().any(|c| !c.is_finite()) {
                    continue;
                }
                let (refined, res) = polish(start, j_low, &points, &squares, &mut ops);
                if best.as_ref().is_none_or(|(_, b)| res < *b) {
                    best = Some((refined, res));
                }
            }
            oracle.charge_arithmetic(ops);

            let scale = 1.0 + squares.iter().fold(0.0_f64, |a, &b| a.max(b));
            match best {
                Some((coeffs, res)) if res <= SQUARE_FIT_RTOL * scale => place(&coeffs, j_low, n),
                Some((_, res)) => {
                    return Err(Error::DegreeMismatch(format!(
                        "no degree-{n} polynomial reproduces the moduli (residual {res:e})"
                    )))
                }
                None => {
                    return Err(Error::DegreeMismatch(
                        "squared polynomial has no real square root".into(),
                    ))
                }
            }
        }
    };

    Ok(RecoveryResult {
        polynomial: recovered.canonicalize(),
        identified: None,
        ledger: oracle.report(),
        points_used: points,
    })
}

/// All `w_b` with `w_b(x_i) = b_i * moduli_i`, one per orbit `{w_b, -w_b}`.
pub fn enumerate_sign_candidates(points: &[f64], moduli: &[f64]) -> Result<Vec<RealPoly>> {
    if points.len() != moduli.len() {
        return Err(Error::LengthMismatch {
            expected: points.len(),
            actual: moduli.len(),
        });
    }
    let vanishing: Vec<bool> = moduli.iter().map(|&m| m == 0.0).collect();
    SignPattern::enumerate(&vanishing)
        .iter()
        .map(|b| RealPoly::interpolate(points, &b.apply(moduli)))
        .collect()
}

/// Exact counterpart of [`enumerate_sign_candidates`].
pub fn enumerate_rational_candidates(
    points: &[BigRational],
    moduli: &[BigRational],
) -> Result<Vec<RationalPoly>> {
    if points.len() != moduli.len() {
        return Err(Error::LengthMismatch {
            expected: points.len(),
            actual: moduli.len(),
        });
    }
    let inverse = vandermonde_inverse(points)?;
    let vanishing: Vec<bool> = moduli.iter().map(Zero::is_zero).collect();
    Ok(SignPattern::enumerate(&vanishing)
        .iter()
        .map(|b| {
            let values: Vec<BigRational> = b
                .bits
                .iter()
                .zip(moduli)
                .map(|(&s, m)| if s < 0 { -m.clone() } else { m.clone() })
                .collect();
            RationalPoly::apply_inverse(&inverse, &values)
        })
        .collect())
}

fn cleaned(p: RealPoly) -> RealPoly {
    let tol = DIFFERENCE_CLEAN_RTOL * p.max_abs_coeff();
    RealPoly::new(
        p.coeffs()
            .iter()
            .map(|&c| if c.abs() <= tol { 0.0 } else { c })
            .collect(),
    )
    .expect("cleaning keeps coefficients finite")
}

fn values_distinct(candidates: &[RealPoly], x: f64) -> bool {
    let mut values: Vec<f64> = candidates
        .iter()
        .filter(|c| !c.is_zero())
        .flat_map(|c| {
            let v = c.evaluate(x);
            [v, -v]
        })
        .collect();
    values.sort_by(f64::total_cmp);
    values.windows(2).all(|w| w[0] < w[1])
}

/// A real point at which all signed candidates `±w_b` take pairwise distinct
/// values (and no candidate vanishes).
///
/// Every difference `w_b - w_b'`, sum `w_b + w_b'` and double `2 w_b` is
/// formed and the largest Cauchy root bound among them is returned, so every
/// real root of every such polynomial lies strictly below it. The number of
/// pairs is quadratic in the number of candidates, i.e. `O(4^n)`.
pub fn find_separating_point(candidates: &[RealPoly]) -> f64 {
    find_separating_point_counted(candidates, &mut 0)
}

fn find_separating_point_counted(candidates: &[RealPoly], ops: &mut u64) -> f64 {
    let bound = |p: RealPoly| cleaned(p).cauchy_root_bound().unwrap_or(1.0);
    let mut x = 1.0_f64;
    for (i, a) in candidates.iter().enumerate() {
        if !a.is_zero() {
            x = x.max(bound(a * 2.0));
        }
        for b in &candidates[i + 1..] {
            x = x.max(bound(a - b)).max(bound(a + b));
        }
        *ops += 4 * (candidates.len() - i) as u64 * (a.degree_bound() as u64 + 1);
    }
    // rounding can still merge values that differ in exact arithmetic
    for _ in 0..64 {
        if values_distinct(candidates, x) {
            break;
        }
        x *= 2.0;
    }
    x
}

/// Adaptive recovery: `n + 1` signless queries at `1..=n+1` and one exact
/// query at a separating point.
pub fn recover_adaptive(
    oracle: &mut EvaluationOracle<RealPoly>,
    n: usize,
) -> Result<RecoveryResult<RealPoly>> {
    let mut points = adaptive_points(n);
    let moduli: Vec<f64> = points
        .iter()
        .map(|x| oracle.query_phaseless(x).modulus)
        .collect();
    let candidates = enumerate_sign_candidates(&points, &moduli)?;
    let m = (n + 1) as u64;
    oracle.charge_arithmetic(candidates.len() as u64 * 3 * m * m);

    let mut ops = 0;
    let x_star = find_separating_point_counted(&candidates, &mut ops);
    oracle.charge_arithmetic(ops);
    let exact = oracle.query_exact(&x_star)?;
    points.push(x_star);

    let mut best: Option<(f64, RealPoly)> = None;
    for c in &candidates {
        let v = c.evaluate_counted(x_star, oracle.ledger_mut());
        for (value, sign) in [(v, 1.0), (-v, -1.0)] {
            let d = (value - exact).abs();
            if best.as_ref().is_none_or(|(bd, _)| d < *bd) {
                best = Some((d, c * sign));
            }
        }
    }
    let (distance, found) = best.ok_or(Error::NoMatchingCandidate {
        distance: f64::INFINITY,
    })?;
    let magnitude: f64 = found
        .coeffs()
        .iter()
        .enumerate()
        .map(|(k, a)| a.abs() * x_star.abs().powi(k as i32))
        .sum();
    if distance > 1e-8 * (1.0 + magnitude) {
        return Err(Error::NoMatchingCandidate { distance });
    }

    Ok(RecoveryResult {
        polynomial: found.canonicalize(),
        identified: Some(found),
        ledger: oracle.report(),
        points_used: points,
    })
}

/// Nonadaptive recovery over the rationals: `n + 1` signless queries at the
/// given rational points and one exact query at a transcendental point.
///
/// The candidates are enumerated exactly and evaluated at the rational
/// approximation of the transcendental point. The minimal gap between
/// distinct signed candidate values must exceed twice the evaluation error
/// bound, otherwise [`Error::PrecisionInsufficient`] is returned.
pub fn recover_rational(
    oracle: &mut EvaluationOracle<RationalPoly>,
    n: usize,
    points: &[BigRational],
    exact_point: &TranscendentalPoint,
) -> Result<RecoveryResult<RationalPoly>> {
    if points.len() != n + 1 {
        return Err(Error::LengthMismatch {
            expected: n + 1,
            actual: points.len(),
        });
    }
    crate::poly::interp::check_distinct(points)?;
    let moduli: Vec<BigRational> = points
        .iter()
        .map(|x| oracle.query_phaseless(x).modulus)
        .collect();
    let candidates = enumerate_rational_candidates(points, &moduli)?;
    let m = (n + 1) as u64;
    oracle.charge_arithmetic(m * m * m + candidates.len() as u64 * m * m);

    let mut signed: Vec<(BigRational, RationalPoly)> = Vec::with_capacity(2 * candidates.len());
    let mut error_bound = BigRational::zero();
    for c in &candidates {
        let v = c.evaluate(&exact_point.approx);
        let e = exact_point.evaluation_error_bound(c.coeffs());
        if e > error_bound {
            error_bound = e;
        }
        if !c.is_zero() {
            signed.push((-v.clone(), -c.clone()));
        }
        signed.push((v, c.clone()));
    }
    oracle.charge_arithmetic(signed.len() as u64 * 4 * m);
    signed.sort_by(|a, b| a.0.cmp(&b.0));

    let two_bounds = &error_bound + &error_bound;
    if let Some(gap) = signed.windows(2).map(|w| &w[1].0 - &w[0].0).min() {
        if gap <= two_bounds {
            return Err(Error::PrecisionInsufficient {
                gap: gap.to_f64().unwrap_or(0.0),
                bound: error_bound.to_f64().unwrap_or(f64::INFINITY),
            });
        }
    }

    let exact = oracle.query_exact(&exact_point.approx)?;
    let (distance, found) = signed
        .into_iter()
        .map(|(v, c)| ((v - &exact).abs(), c))
        .min_by(|a, b| a.0.cmp(&b.0))
        .ok_or(Error::NoMatchingCandidate {
            distance: f64::INFINITY,
        })?;
    if distance > error_bound {
        return Err(Error::NoMatchingCandidate {
            distance: distance.to_f64().unwrap_or(f64::INFINITY),
        });
    }

    let mut points_used = points.to_vec();
    points_used.push(exact_point.approx.clone());
    Ok(RecoveryResult {
        polynomial: found.canonicalize(),
        identified: Some(found),
        ledger: oracle.report(),
        points_used,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[f64]) -> RealPoly {
        RealPoly::new(c.to_vec()).unwrap()
    }

    fn assert_close(p: &RealPoly, expected: &[f64], tol: f64) {
        let e = poly(expected);
        let d = p.padded(e.degree_bound()).to_complex().distance(&e.to_complex());
        assert!(d <= tol, "{:?} vs {:?}", p.coeffs(), expected);
    }

    #[test]
    fn sign_patterns_fix_first_free_bit() {
        let all = SignPattern::enumerate(&[false; 3]);
        assert_eq!(all.len(), 4);
        assert!(all.iter().all(|b| b.bits[0] == 1));
        let with_zero = SignPattern::enumerate(&[true, false, false]);
        assert_eq!(with_zero.len(), 2);
        assert!(with_zero.iter().all(|b| b.bits[0] == 1 && b.bits[1] == 1));
        assert_eq!(SignPattern::enumerate(&[true, true]).len(), 1);
    }

    #[test]
    fn square_root_recursion_examples() {
        assert_close(&square_root_coefficients(&[1.0, 4.0, 4.0], 1).unwrap(), &[1.0, 2.0], 1e-15);
        let x_sq = square_root_coefficients(&[0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0], 3).unwrap();
        assert_close(&x_sq, &[0.0, 0.0, 1.0, 0.0], 1e-15);
        assert!(square_root_coefficients(&[0.0; 5], 2).unwrap().is_zero());
        assert!(matches!(
            square_root_coefficients(&[0.0, 1.0, 1.0], 1),
            Err(Error::DegreeMismatch(_))
        ));
    }

    #[test]
    fn nonadaptive_examples() {
        let mut o = EvaluationOracle::new(poly(&[1.0, 2.0]));
        let r = recover_nonadaptive(&mut o, 1).unwrap();
        assert_close(&r.polynomial, &[1.0, 2.0], 1e-12);
        assert_eq!(r.ledger.phaseless_queries, 3);

        let mut o = EvaluationOracle::new(poly(&[0.0, 0.0, 1.0, 0.0]));
        let r = recover_nonadaptive(&mut o, 3).unwrap();
        assert_close(&r.polynomial, &[0.0, 0.0, 1.0, 0.0], 1e-12);

        let mut o = EvaluationOracle::new(poly(&[13.0, -19.0, 8.0, -1.0]));
        let r = recover_nonadaptive(&mut o, 3).unwrap();
        assert_close(&r.polynomial, &[13.0, -19.0, 8.0, -1.0], 1e-9);
        assert_eq!(r.ledger.phaseless_queries, 7);
        assert_eq!(r.ledger.exact_queries, 0);
    }

    #[test]
    fn nonadaptive_zero_polynomial() {
        let mut o = EvaluationOracle::new(RealPoly::zero(4));
        let r = recover_nonadaptive(&mut o, 4).unwrap();
        assert!(r.polynomial.is_zero());
        assert_eq!(r.ledger.phaseless_queries, 9);
    }

    #[test]
    fn nonadaptive_rejects_degree_overflow() {
        // degree 3 hidden behind a claimed bound of 1
        let mut o = EvaluationOracle::new(poly(&[0.3, -1.0, 0.5, 2.0]));
        assert!(matches!(
            recover_nonadaptive(&mut o, 1),
            Err(Error::DegreeMismatch(_))
        ));
    }

    #[test]
    fn candidate_enumeration_examples() {
        let c = enumerate_sign_candidates(&[0.0, 1.0], &[1.0, 2.0]).unwrap();
        assert_eq!(c.len(), 2);
        assert_close(&c[0], &[1.0, 1.0], 1e-15);
        assert_close(&c[1], &[1.0, -3.0], 1e-15);

        let zero = enumerate_sign_candidates(&[1.0, 2.0, 3.0], &[0.0; 3]).unwrap();
        assert_eq!(zero.len(), 1);
        assert!(zero[0].is_zero());

        assert_eq!(
            enumerate_sign_candidates(&[1.0, 1.0], &[1.0, 1.0]),
            Err(Error::DuplicatePoint(1))
        );
    }

    #[test]
    fn separating_point_examples() {
        let cands = [poly(&[1.0, 1.0]), poly(&[1.0, -1.0])];
        let x = find_separating_point(&cands);
        assert_eq!(x, 2.0);
        assert_eq!(cands[0].evaluate(x), 3.0);
        assert_eq!(cands[1].evaluate(x), -1.0);

        let single = [poly(&[4.0])];
        let x = find_separating_point(&single);
        assert!(x.is_finite() && single[0].evaluate(x) != 0.0);
    }

    #[test]
    fn adaptive_identifies_p5() {
        let p5 = poly(&[5.0, -5.0, 1.0, 0.0]);
        let mut o = EvaluationOracle::with_exact_budget(p5.clone(), 1);
        let r = recover_adaptive(&mut o, 3).unwrap();
        let id = r.identified.unwrap();
        assert_close(&id, p5.coeffs(), 1e-9);
        let signs: Vec<f64> = (1..=4).map(|x| id.evaluate(x as f64).signum()).collect();
        assert_eq!(signs, vec![1.0, -1.0, -1.0, 1.0]);
        assert_eq!((r.ledger.phaseless_queries, r.ledger.exact_queries), (4, 1));
    }

    #[test]
    fn adaptive_zero_and_negated() {
        let mut o = EvaluationOracle::with_exact_budget(RealPoly::zero(2), 1);
        let r = recover_adaptive(&mut o, 2).unwrap();
        assert!(r.identified.unwrap().is_zero());
        assert_eq!(r.ledger.information_cost(), 4);

        let neg = poly(&[-1.0, 0.5]);
        let mut o = EvaluationOracle::with_exact_budget(neg.clone(), 1);
        let r = recover_adaptive(&mut o, 1).unwrap();
        assert_close(&r.identified.unwrap(), neg.coeffs(), 1e-12);
        assert_close(&r.polynomial, &[1.0, -0.5], 1e-12);
    }

    #[test]
    fn adaptive_needs_exact_budget() {
        let mut o = EvaluationOracle::with_exact_budget(poly(&[1.0, 1.0]), 0);
        assert_eq!(
            recover_adaptive(&mut o, 1),
            Err(Error::ExactBudgetExhausted { budget: 0 })
        );
    }

    #[test]
    fn rational_example_selects_pattern() {
        let hidden = RationalPoly::from_fractions(&[(1, 2), (0, 1), (-1, 1)]).unwrap();
        let pts = vec![ratio(0, 1), ratio(1, 1), ratio(2, 1)];
        let mut o = EvaluationOracle::with_exact_budget(hidden.clone(), 1);
        let r = recover_rational(&mut o, 2, &pts, &TranscendentalPoint::pi(50)).unwrap();
        assert_eq!(r.identified.as_ref(), Some(&hidden));
        assert_eq!(r.polynomial, hidden);
        assert_eq!((r.ledger.phaseless_queries, r.ledger.exact_queries), (3, 1));
    }

    #[test]
    fn rational_zero_and_p7() {
        let pts = rational_points(3);
        let mut o = EvaluationOracle::with_exact_budget(RationalPoly::zero(3), 1);
        let r = recover_rational(&mut o, 3, &pts, &TranscendentalPoint::pi(50)).unwrap();
        assert!(r.polynomial.is_zero());

        let p7 = RationalPoly::from_fractions(&[(-5, 1), (31, 3), (-5, 1), (2, 3)]).unwrap();
        let mut o = EvaluationOracle::with_exact_budget(p7.clone(), 1);
        let r = recover_rational(&mut o, 3, &pts, &TranscendentalPoint::pi(50)).unwrap();
        assert_eq!(r.identified, Some(p7));
    }

    #[test]
    fn rational_precision_too_low() {
        // at 0 digits the approximation 3 carries radius 2, too coarse to separate anything
        let hidden = RationalPoly::from_fractions(&[(1, 1), (1, 1), (1, 1)]).unwrap();
        let mut o = EvaluationOracle::with_exact_budget(hidden, 1);
        let res = recover_rational(&mut o, 2, &rational_points(2), &TranscendentalPoint::pi(0));
        assert!(matches!(res, Err(Error::PrecisionInsufficient { .. })));
        assert_eq!(o.report().exact_queries, 0);
    }
}
