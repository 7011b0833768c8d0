//! Collision pairs: two distinct complex polynomials whose moduli agree on
//! `n + 1` anchor points and whose values agree on `n` probe points, so no
//! algorithm can tell them apart from `n + 1` phaseless and `n` exact
//! evaluations at those points.
//!
//! Construction: take `p` of degree `n` vanishing at the probes, set
//! `c_i = p(x_i) / r_i` (scaled so `|c_i| <= 2`), split each `c_i = b_i - b'_i`
//! with `|b_i| = |b'_i| = 1`, and interpolate `w_b` through `(x_i, b_i r_i)`
//! and `w_b'` through `(x_i, b'_i r_i)`. Then `w_b - w_b' = p`.

use num_complex::Complex64;
use serde::Serialize;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::poly::{ComplexPoly, JsonScalar, PolyJson};

#[derive(Debug, Clone, PartialEq)]
pub struct CollisionPair {
    pub w_b: ComplexPoly,
    pub w_bp: ComplexPoly,
    pub anchor_points: Vec<Complex64>,
    pub target_moduli: Vec<f64>,
    pub probe_points: Vec<Complex64>,
    /// The polynomial vanishing at the probes, after scaling (`w_b - w_bp`).
    pub vanishing: ComplexPoly,
    pub c: Vec<Complex64>,
    pub b: Vec<Complex64>,
    pub bp: Vec<Complex64>,
}

#[derive(Serialize)]
struct PairJson {
    w_b: PolyJson,
    w_bp: PolyJson,
    vanishing: PolyJson,
    anchor_points: Vec<Value>,
    target_moduli: Vec<f64>,
    probe_points: Vec<Value>,
    c: Vec<Value>,
    b: Vec<Value>,
    bp: Vec<Value>,
}

impl CollisionPair {
    pub fn to_json_value(&self) -> Value {
        let enc = |v: &[Complex64]| v.iter().map(JsonScalar::to_json).collect();
        serde_json::to_value(PairJson {
            w_b: (&self.w_b).into(),
            w_bp: (&self.w_bp).into(),
            vanishing: (&self.vanishing).into(),
            anchor_points: enc(&self.anchor_points),
            target_moduli: self.target_moduli.clone(),
            probe_points: enc(&self.probe_points),
            c: enc(&self.c),
            b: enc(&self.b),
            bp: enc(&self.bp),
        })
        .expect("collision pair serializes")
    }
}

/// Residuals of the four collision-pair invariants.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CollisionReport {
    pub tol: f64,
    /// `max ||b_i| - 1|, ||b'_i| - 1|`
    pub unit_residual: f64,
    /// `max |b_i - b'_i - c_i|`
    pub difference_residual: f64,
    /// `max ||w(x_i)| - r_i|` over both polynomials
    pub modulus_residual: f64,
    /// `max |w_b(x'_i) - w_b'(x'_i)| / (1 + |w_b(x'_i)|)`
    pub probe_residual: f64,
    /// Coefficient distance between `w_b` and `w_b'`; must exceed `tol`.
    pub separation: f64,
}

impl CollisionReport {
    pub fn units_ok(&self) -> bool {
        self.unit_residual <= self.tol && self.difference_residual <= self.tol
    }

    pub fn moduli_ok(&self) -> bool {
        self.modulus_residual <= self.tol
    }

    pub fn probes_ok(&self) -> bool {
        self.probe_residual <= self.tol
    }

    pub fn distinct(&self) -> bool {
        self.separation > self.tol
    }

    pub fn pass(&self) -> bool {
        self.units_ok() && self.moduli_ok() && self.probes_ok() && self.distinct()
    }
}

/// Splits `c` into `b - b'` with `|b| = |b'| = 1`, taking the branch
/// `b = c/2 + i (c/|c|) sqrt(1 - |c|^2/4)`.
pub fn unit_difference_decomposition(c: Complex64) -> Result<(Complex64, Complex64)> {
    let r = c.norm();
    if r > 2.0 + 1e-12 {
        return Err(Error::MagnitudeTooLarge(r));
    }
    if r == 0.0 {
        let one = Complex64::new(1.0, 0.0);
        return Ok((one, one));
    }
    let height = (1.0 - r * r / 4.0).max(0.0).sqrt();
    let b = c / 2.0 + Complex64::i() * (c / r) * height;
    Ok((b, b - c))
}

/// Builds a collision pair with the monic vanishing polynomial
/// `prod_i (x - x'_i)`.
pub fn build_collision_pair(
    anchors: &[Complex64],
    moduli: &[f64],
    probes: &[Complex64],
) -> Result<CollisionPair> {
    let mut coeffs = vec![Complex64::new(1.0, 0.0)];
    for &root in probes {
        let mut next = vec![Complex64::new(0.0, 0.0); coeffs.len() + 1];
        for (k, &a) in coeffs.iter().enumerate() {
            next[k + 1] += a;
            next[k] -= a * root;
        }
        coeffs = next;
    }
    build_collision_pair_with(anchors, moduli, probes, &ComplexPoly::new(coeffs)?)
}

/// Builds a collision pair from an explicit polynomial that vanishes at the
/// probes. It is rescaled only if some `|p(x_i)| / r_i` exceeds 2.
pub fn build_collision_pair_with(
    anchors: &[Complex64],
    moduli: &[f64],
    probes: &[Complex64],
    vanishing: &ComplexPoly,
) -> Result<CollisionPair> {
    if anchors.is_empty() {
        return Err(Error::EmptyPolynomial);
    }
    let n = anchors.len() - 1;
    if moduli.len() != anchors.len() {
        return Err(Error::LengthMismatch {
            expected: anchors.len(),
            actual: moduli.len(),
        });
    }
    if probes.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            actual: probes.len(),
        });
    }
    crate::poly::interp::check_distinct(anchors)?;
    crate::poly::interp::check_distinct(probes)?;
    if let Some(i) = moduli.iter().position(|&r| !(r > 0.0 && r.is_finite())) {
        return Err(Error::InvalidInput(format!("target modulus {i} is not positive")));
    }
    if vanishing.degree_bound() > n {
        return Err(Error::InvalidInput(format!(
            "vanishing polynomial exceeds degree bound {n}"
        )));
    }
    if vanishing.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    for (i, &x) in probes.iter().enumerate() {
        let scale: f64 = vanishing
            .coeffs()
            .iter()
            .enumerate()
            .map(|(k, a)| a.norm() * x.norm().powi(k as i32))
            .sum();
        if vanishing.evaluate(x).norm() > 1e-12 * (1.0 + scale) {
            return Err(Error::ProbeNotRoot(i));
        }
    }

    let mut p = vanishing.padded(n);
    let max_ratio = anchors
        .iter()
        .zip(moduli)
        .map(|(&x, &r)| p.evaluate(x).norm() / r)
        .fold(0.0_f64, f64::max);
    if max_ratio > 2.0 {
        p = &p * Complex64::new(2.0 / max_ratio, 0.0);
    }

    let c: Vec<Complex64> = anchors
        .iter()
        .zip(moduli)
        .map(|(&x, &r)| p.evaluate(x) / r)
        .collect();
    let (b, bp): (Vec<_>, Vec<_>) = c
        .iter()
        .map(|&ci| unit_difference_decomposition(ci))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .unzip();
    let targets = |units: &[Complex64]| -> Vec<Complex64> {
        units.iter().zip(moduli).map(|(u, &r)| u * r).collect()
    };
    let w_b = ComplexPoly::interpolate(anchors, &targets(&b))?;
    let w_bp = ComplexPoly::interpolate(anchors, &targets(&bp))?;

    Ok(CollisionPair {
        w_b,
        w_bp,
        anchor_points: anchors.to_vec(),
        target_moduli: moduli.to_vec(),
        probe_points: probes.to_vec(),
        vanishing: p,
        c,
        b,
        bp,
    })
}

/// Certifies the collision-pair invariants at tolerance `tol`.
pub fn verify_collision(pair: &CollisionPair, tol: f64) -> CollisionReport {
    let max = |it: &mut dyn Iterator<Item = f64>| it.fold(0.0_f64, f64::max);
    let unit_residual = max(&mut pair
        .b
        .iter()
        .chain(&pair.bp)
        .map(|u| (u.norm() - 1.0).abs()));
    let difference_residual = max(&mut pair
        .b
        .iter()
        .zip(&pair.bp)
        .zip(&pair.c)
        .map(|((b, bp), c)| (b - bp - c).norm()));
    let modulus_residual = max(&mut pair
        .anchor_points
        .iter()
        .zip(&pair.target_moduli)
        .flat_map(|(&x, &r)| {
            [
                (pair.w_b.evaluate(x).norm() - r).abs(),
                (pair.w_bp.evaluate(x).norm() - r).abs(),
            ]
        }));
    let probe_residual = max(&mut pair.probe_points.iter().map(|&x| {
        let (u, v) = (pair.w_b.evaluate(x), pair.w_bp.evaluate(x));
        (u - v).norm() / (1.0 + u.norm())
    }));
    CollisionReport {
        tol,
        unit_residual,
        difference_residual,
        modulus_residual,
        probe_residual,
        separation: pair.w_b.distance(&pair.w_bp),
    }
}

/// `|p(e^{i theta})|^2` for each angle.
pub fn unit_circle_profile(p: &ComplexPoly, angles: &[f64]) -> Vec<f64> {
    angles
        .iter()
        .map(|&t| p.evaluate(Complex64::from_polar(1.0, t)).norm_sqr())
        .collect()
}

/// Largest `||w_b(t)| - |w_b'(t)||` over `count` uniform real samples of `[lo, hi]`.
pub fn real_line_modulus_gap(pair: &CollisionPair, lo: f64, hi: f64, count: usize) -> f64 {
    let step = if count > 1 {
        (hi - lo) / (count - 1) as f64
    } else {
        0.0
    };
    (0..count)
        .map(|i| {
            let t = Complex64::new(lo + step * i as f64, 0.0);
            (pair.w_b.evaluate(t).norm() - pair.w_bp.evaluate(t).norm()).abs()
        })
        .fold(0.0, f64::max)
}

/// Anchors `1, 2, 3, 4` with unit moduli, probes `0, 5, 6` and the vanishing
/// cubic `x^3/24 - 11x^2/24 + 5x/4`. Anchors and probes are real, so the two
/// moduli agree on the whole real line.
pub fn real_line_collision() -> CollisionPair {
    let re = |v: &[f64]| -> Vec<Complex64> { v.iter().map(|&x| Complex64::new(x, 0.0)).collect() };
    let vanishing = ComplexPoly::new(re(&[0.0, 5.0 / 4.0, -11.0 / 24.0, 1.0 / 24.0]))
        .expect("finite coefficients");
    build_collision_pair_with(
        &re(&[1.0, 2.0, 3.0, 4.0]),
        &[1.0; 4],
        &re(&[0.0, 5.0, 6.0]),
        &vanishing,
    )
    .expect("fixed example is well formed")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn decomposition_examples() {
        let (b, bp) = unit_difference_decomposition(c(5.0 / 6.0, 0.0)).unwrap();
        let s = 119f64.sqrt();
        assert!((b - c(5.0 / 12.0, s / 12.0)).norm() < 1e-15);
        assert!((bp - c(-5.0 / 12.0, s / 12.0)).norm() < 1e-15);
        assert_eq!(
            unit_difference_decomposition(c(0.0, 0.0)).unwrap(),
            (c(1.0, 0.0), c(1.0, 0.0))
        );
        let (b, bp) = unit_difference_decomposition(c(2.0, 0.0)).unwrap();
        assert_eq!((b, bp), (c(1.0, 0.0), c(-1.0, 0.0)));
        assert!(matches!(
            unit_difference_decomposition(c(2.1, 0.0)),
            Err(Error::MagnitudeTooLarge(_))
        ));
    }

    #[test]
    fn real_line_example_reproduces_c() {
        let pair = real_line_collision();
        let expect = [5.0 / 6.0, 1.0, 0.75, 1.0 / 3.0];
        for (ci, e) in pair.c.iter().zip(expect) {
            assert!((ci - c(e, 0.0)).norm() < 1e-12);
        }
        let report = verify_collision(&pair, 1e-9);
        assert!(report.pass(), "{report:?}");
    }

    #[test]
    fn probe_on_anchor_gives_trivial_split() {
        let re = |v: &[f64]| -> Vec<Complex64> { v.iter().map(|&x| c(x, 0.0)).collect() };
        let pair =
            build_collision_pair(&re(&[1.0, 2.0, 3.0]), &[1.0, 2.0, 1.5], &re(&[1.0, -2.0]))
                .unwrap();
        assert!(pair.c[0].norm() < 1e-15);
        assert_eq!((pair.b[0], pair.bp[0]), (c(1.0, 0.0), c(1.0, 0.0)));
        assert!(verify_collision(&pair, 1e-9).pass());
    }

    #[test]
    fn scaling_caps_differences_at_two() {
        let re = |v: &[f64]| -> Vec<Complex64> { v.iter().map(|&x| c(x, 0.0)).collect() };
        let pair = build_collision_pair(&re(&[10.0, 20.0]), &[0.1, 0.1], &re(&[0.0])).unwrap();
        let max = pair.c.iter().map(|z| z.norm()).fold(0.0, f64::max);
        assert!((max - 2.0).abs() < 1e-12);
        assert!(verify_collision(&pair, 1e-9).pass());
    }

    #[test]
    fn verification_detects_tampering() {
        let pair = real_line_collision();
        let mut same = pair.clone();
        same.w_bp = same.w_b.clone();
        let r = verify_collision(&same, 1e-9);
        assert!(!r.distinct() && !r.pass());

        let mut shifted = pair;
        shifted.target_moduli[2] += 1e-3;
        let r = verify_collision(&shifted, 1e-9);
        assert!(!r.moduli_ok());
        assert!((r.modulus_residual - 1e-3).abs() < 1e-9);
    }

    #[test]
    fn rejects_bad_inputs() {
        let one = [c(1.0, 0.0), c(2.0, 0.0)];
        assert!(matches!(
            build_collision_pair(&one, &[1.0], &[c(0.0, 0.0)]),
            Err(Error::LengthMismatch { .. })
        ));
        assert!(matches!(
            build_collision_pair(&[c(1.0, 0.0), c(1.0, 0.0)], &[1.0, 1.0], &[c(0.0, 0.0)]),
            Err(Error::DuplicatePoint(1))
        ));
        let not_root = ComplexPoly::new(vec![c(1.0, 0.0), c(1.0, 0.0)]).unwrap();
        assert_eq!(
            build_collision_pair_with(&one, &[1.0, 1.0], &[c(0.0, 0.0)], &not_root),
            Err(Error::ProbeNotRoot(0))
        );
    }

    #[test]
    fn unit_circle_profiles_collide() {
        let angles: Vec<f64> = (0..12).map(|k| k as f64 * 0.5).collect();
        let p = ComplexPoly::new(vec![c(1.0, 0.0), c(2.0, 0.0)]).unwrap();
        let q = ComplexPoly::new(vec![c(2.0, 0.0), c(1.0, 0.0)]).unwrap();
        for ((a, b), t) in unit_circle_profile(&p, &angles)
            .iter()
            .zip(unit_circle_profile(&q, &angles))
            .zip(&angles)
        {
            assert!((a - (4.0 * t.cos() + 5.0)).abs() < 1e-12);
            assert!((a - b).abs() < 1e-12);
        }
        let k = ComplexPoly::new(vec![c(0.6, -0.8)]).unwrap();
        assert!(unit_circle_profile(&k, &angles)
            .iter()
            .all(|v| (v - 1.0).abs() < 1e-15));
    }
}
