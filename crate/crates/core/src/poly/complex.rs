use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::ledger::CostLedger;
use crate::poly::interp;
use crate::poly::RealPoly;

/// Dense complex polynomial in `C_n[x]`.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexPoly {
    coeffs: Vec<Complex64>,
}

impl ComplexPoly {
    pub fn new(coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::EmptyPolynomial);
        }
        if let Some(i) = coeffs.iter().position(|c| !c.is_finite()) {
            return Err(Error::NonFiniteCoefficient(i));
        }
        Ok(Self { coeffs })
    }

    /// Builds from polar form `a_k e^{i alpha_k}`.
    pub fn from_polar(magnitudes: &[f64], angles: &[f64]) -> Result<Self> {
        if magnitudes.len() != angles.len() {
            return Err(Error::LengthMismatch {
                expected: magnitudes.len(),
                actual: angles.len(),
            });
        }
        Self::new(
            magnitudes
                .iter()
                .zip(angles)
                .map(|(&a, &t)| Complex64::from_polar(a, t))
                .collect(),
        )
    }

    pub fn from_real(p: &RealPoly) -> Self {
        Self {
            coeffs: p.coeffs().iter().map(|&c| Complex64::new(c, 0.0)).collect(),
        }
    }

    pub fn zero(degree_bound: usize) -> Self {
        Self {
            coeffs: vec![Complex64::new(0.0, 0.0); degree_bound + 1],
        }
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn degree_bound(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.re == 0.0 && c.im == 0.0)
    }

    /// `a_k = |coeff_k|`.
    pub fn magnitude(&self, k: usize) -> f64 {
        self.coeffs[k].norm()
    }

    /// `alpha_k` in `(-pi, pi]`, reported as 0 for a vanishing coefficient.
    pub fn angle(&self, k: usize) -> f64 {
        let c = self.coeffs[k];
        if c.norm() == 0.0 {
            0.0
        } else {
            let t = c.arg();
            if t <= -std::f64::consts::PI {
                std::f64::consts::PI
            } else {
                t
            }
        }
    }

    pub fn max_abs_coeff(&self) -> f64 {
        self.coeffs.iter().fold(0.0, |m, c| m.max(c.norm()))
    }

    pub fn evaluate(&self, x: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * x + c)
    }

    pub fn evaluate_counted(&self, x: Complex64, ledger: &mut CostLedger) -> Complex64 {
        ledger.charge(2 * self.degree_bound() as u64);
        self.evaluate(x)
    }

    pub fn interpolate(points: &[Complex64], values: &[Complex64]) -> Result<Self> {
        interp::newton_interpolate(points, values).and_then(Self::new)
    }

    pub fn padded(&self, degree_bound: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        if coeffs.len() < degree_bound + 1 {
            coeffs.resize(degree_bound + 1, Complex64::new(0.0, 0.0));
        }
        Self { coeffs }
    }

    /// `u * p` with `|u| = 1` chosen so the lowest-index nonzero coefficient
    /// is real and positive.
    pub fn canonicalize(&self) -> Self {
        let Some(lead) = self.coeffs.iter().find(|c| c.norm() != 0.0) else {
            return self.clone();
        };
        let u = lead.conj() / lead.norm();
        self.rotated(u, self.coeffs.iter().position(|c| c.norm() != 0.0))
    }

    /// Multiplies by `u`, forcing the coefficient at `real_at` onto the
    /// positive real axis to absorb rounding.
    fn rotated(&self, u: Complex64, real_at: Option<usize>) -> Self {
        let mut coeffs: Vec<Complex64> = self.coeffs.iter().map(|&c| c * u).collect();
        if let Some(k) = real_at {
            coeffs[k] = Complex64::new(self.coeffs[k].norm(), 0.0);
        }
        Self { coeffs }
    }

    /// Tests `p = u q` for some unit `u`, up to `tol * (1 + max |coeff|)` in
    /// the max-coefficient distance.
    ///
    /// Both sides are rotated so that the coefficient where `p` is largest
    /// becomes real and positive, which keeps the comparison stable when
    /// low-order coefficients are at rounding level.
    pub fn phase_equivalent(&self, other: &Self, tol: f64) -> bool {
        let n = self.degree_bound().max(other.degree_bound());
        let p = self.padded(n);
        let q = other.padded(n);
        let scale = 1.0 + p.max_abs_coeff().max(q.max_abs_coeff());
        let anchor = |poly: &Self| {
            poly.coeffs
                .iter()
                .enumerate()
                .max_by(|a, b| a.1.norm().total_cmp(&b.1.norm()))
                .map(|(i, _)| i)
                .unwrap_or(0)
        };
        let k = if p.is_zero() { anchor(&q) } else { anchor(&p) };
        let unit = |c: Complex64| {
            if c.norm() == 0.0 {
                Complex64::new(1.0, 0.0)
            } else {
                c.conj() / c.norm()
            }
        };
        let pr = p.rotated(unit(p.coeffs[k]), None);
        let qr = q.rotated(unit(q.coeffs[k]), None);
        let dist = pr
            .coeffs
            .iter()
            .zip(&qr.coeffs)
            .fold(0.0_f64, |m, (a, b)| m.max((a - b).norm()));
        dist <= tol * scale
    }

    /// Largest coefficient distance to `other` after zero padding.
    pub fn distance(&self, other: &Self) -> f64 {
        let n = self.degree_bound().max(other.degree_bound());
        let (p, q) = (self.padded(n), other.padded(n));
        p.coeffs
            .iter()
            .zip(&q.coeffs)
            .fold(0.0, |m, (a, b)| m.max((a - b).norm()))
    }

    fn zip_with(&self, other: &Self, f: impl Fn(Complex64, Complex64) -> Complex64) -> Self {
        let n = self.degree_bound().max(other.degree_bound());
        let (p, q) = (self.padded(n), other.padded(n));
        Self {
            coeffs: p.coeffs.iter().zip(&q.coeffs).map(|(&a, &b)| f(a, b)).collect(),
        }
    }
}

impl Add for &ComplexPoly {
    type Output = ComplexPoly;
    fn add(self, rhs: Self) -> ComplexPoly {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &ComplexPoly {
    type Output = ComplexPoly;
    fn sub(self, rhs: Self) -> ComplexPoly {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Neg for ComplexPoly {
    type Output = ComplexPoly;
    fn neg(mut self) -> ComplexPoly {
        self.coeffs.iter_mut().for_each(|c| *c = -*c);
        self
    }
}

impl Mul<Complex64> for &ComplexPoly {
    type Output = ComplexPoly;
    fn mul(self, rhs: Complex64) -> ComplexPoly {
        ComplexPoly {
            coeffs: self.coeffs.iter().map(|c| c * rhs).collect(),
        }
    }
}

/// The `count` roots of unity `e^{2 pi i k / count}`.
pub fn roots_of_unity(count: usize) -> Vec<Complex64> {
    (0..count)
        .map(|k| Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * k as f64 / count as f64))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn canonicalize_rotates_lowest_coefficient() {
        let p = ComplexPoly::new(vec![c(0.0, 0.0), c(1.0, 1.0)]).unwrap();
        let canon = p.canonicalize();
        assert_eq!(canon.coeffs()[1], c(2f64.sqrt(), 0.0));
        assert_eq!(canon.canonicalize(), canon);
        assert!(ComplexPoly::zero(3).canonicalize().is_zero());
    }

    #[test]
    fn polar_accessors() {
        let p = ComplexPoly::new(vec![c(0.0, 0.0), c(0.0, 2.0), c(-1.0, 0.0)]).unwrap();
        assert_eq!(p.magnitude(1), 2.0);
        assert_eq!(p.angle(0), 0.0);
        assert!((p.angle(1) - std::f64::consts::FRAC_PI_2).abs() < 1e-15);
        assert!((p.angle(2) - std::f64::consts::PI).abs() < 1e-15);
        let q = ComplexPoly::from_polar(&[0.0, 2.0, 1.0], &[0.3, p.angle(1), p.angle(2)]).unwrap();
        assert!(q.distance(&p) < 1e-15);
    }

    #[test]
    fn phase_equivalence_examples() {
        let p = ComplexPoly::new(vec![c(1.0, 0.0), c(2.0, 0.0)]).unwrap();
        let q = ComplexPoly::new(vec![c(2.0, 0.0), c(1.0, 0.0)]).unwrap();
        assert!(p.phase_equivalent(&(-p.clone()), 1e-12));
        assert!(!p.phase_equivalent(&q, 1e-6));
        let r = ComplexPoly::new(vec![c(0.3, -0.2), c(-0.7, 0.9), c(0.1, 0.4)]).unwrap();
        assert!((&r * c(0.0, 1.0)).phase_equivalent(&r, 1e-12));
        assert!(ComplexPoly::zero(1).phase_equivalent(&ComplexPoly::zero(2), 1e-12));
        assert!(!ComplexPoly::zero(1).phase_equivalent(&p, 1e-6));
    }

    #[test]
    fn phase_equivalence_tolerates_rounding_in_low_coefficients() {
        let p = ComplexPoly::new(vec![c(0.0, 0.0), c(1.0, 2.0)]).unwrap();
        let q = ComplexPoly::new(vec![c(1e-17, -1e-17), c(-2.0, 1.0)]).unwrap();
        assert!(p.phase_equivalent(&q, 1e-9));
    }

    #[test]
    fn roots_of_unity_sum_to_zero() {
        let sum: Complex64 = roots_of_unity(5).into_iter().sum();
        assert!(sum.norm() < 1e-14);
    }
}
