use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::ledger::CostLedger;
use crate::poly::interp;
use crate::poly::ComplexPoly;

/// Dense real polynomial `a_0 + a_1 x + ... + a_n x^n` in `R_n[x]`.
///
/// The degree bound is `coeffs.len() - 1`; trailing zeros are kept so that
/// the bound survives arithmetic.
#[derive(Debug, Clone, PartialEq)]
pub struct RealPoly {
    coeffs: Vec<f64>,
}

impl RealPoly {
    pub fn new(coeffs: Vec<f64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::EmptyPolynomial);
        }
        if let Some(i) = coeffs.iter().position(|c| !c.is_finite()) {
            return Err(Error::NonFiniteCoefficient(i));
        }
        Ok(Self { coeffs })
    }

    pub fn zero(degree_bound: usize) -> Self {
        Self {
            coeffs: vec![0.0; degree_bound + 1],
        }
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<f64> {
        self.coeffs
    }

    pub fn degree_bound(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0.0)
    }

    /// Index of the highest nonzero coefficient, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|&c| c != 0.0)
    }

    pub fn max_abs_coeff(&self) -> f64 {
        self.coeffs.iter().fold(0.0, |m, c| m.max(c.abs()))
    }

    /// Horner evaluation.
    pub fn evaluate(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }

    /// Horner evaluation charging `2n` operations to `ledger`.
    pub fn evaluate_counted(&self, x: f64, ledger: &mut CostLedger) -> f64 {
        ledger.charge(2 * self.degree_bound() as u64);
        self.evaluate(x)
    }

    /// The unique polynomial of degree bound `m - 1` through `m` distinct points.
    pub fn interpolate(points: &[f64], values: &[f64]) -> Result<Self> {
        interp::newton_interpolate(points, values).and_then(Self::new)
    }

    /// Zero-pads (never truncates) to the given degree bound.
    pub fn padded(&self, degree_bound: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        if coeffs.len() < degree_bound + 1 {
            coeffs.resize(degree_bound + 1, 0.0);
        }
        Self { coeffs }
    }

    /// Representative of `{p, -p}` whose lowest-index nonzero coefficient is positive.
    pub fn canonicalize(&self) -> Self {
        match self.coeffs.iter().find(|&&c| c != 0.0) {
            Some(&c) if c < 0.0 => -self.clone(),
            _ => self.clone(),
        }
    }

    pub fn phase_equivalent(&self, other: &Self, tol: f64) -> bool {
        self.to_complex().phase_equivalent(&other.to_complex(), tol)
    }

    /// Cauchy bound `1 + max_{k<d} |a_k / a_d|`; every real root lies strictly inside.
    pub fn cauchy_root_bound(&self) -> Result<f64> {
        let d = self.degree().ok_or(Error::ZeroPolynomial)?;
        let lead = self.coeffs[d].abs();
        let ratio = self.coeffs[..d]
            .iter()
            .fold(0.0_f64, |m, c| m.max(c.abs() / lead));
        Ok(1.0 + ratio)
    }

    pub fn to_complex(&self) -> ComplexPoly {
        ComplexPoly::from_real(self)
    }

    fn zip_with(&self, other: &Self, f: impl Fn(f64, f64) -> f64) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let get = |v: &[f64], i: usize| v.get(i).copied().unwrap_or(0.0);
        Self {
            coeffs: (0..len)
                .map(|i| f(get(&self.coeffs, i), get(&other.coeffs, i)))
                .collect(),
        }
    }
}

impl Add for &RealPoly {
    type Output = RealPoly;
    fn add(self, rhs: Self) -> RealPoly {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &RealPoly {
    type Output = RealPoly;
    fn sub(self, rhs: Self) -> RealPoly {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Neg for RealPoly {
    type Output = RealPoly;
    fn neg(mut self) -> RealPoly {
        self.coeffs.iter_mut().for_each(|c| *c = -*c);
        self
    }
}

impl Mul<f64> for &RealPoly {
    type Output = RealPoly;
    fn mul(self, rhs: f64) -> RealPoly {
        RealPoly {
            coeffs: self.coeffs.iter().map(|c| c * rhs).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[f64]) -> RealPoly {
        RealPoly::new(c.to_vec()).unwrap()
    }

    #[test]
    fn evaluate_examples() {
        assert_eq!(poly(&[1.0, 2.0, 3.0]).evaluate(2.0), 17.0);
        assert_eq!(RealPoly::zero(4).evaluate(3.7), 0.0);
        let p = poly(&[0.0, 5.0 / 4.0, -11.0 / 24.0, 1.0 / 24.0]);
        assert!((p.evaluate(2.0) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn evaluate_counted_charges_two_ops_per_degree() {
        let mut ledger = CostLedger::new();
        poly(&[1.0, 2.0, 3.0, 4.0]).evaluate_counted(1.0, &mut ledger);
        assert_eq!(ledger.arithmetic_ops, 6);
    }

    #[test]
    fn rejects_non_finite_and_empty() {
        assert_eq!(
            RealPoly::new(vec![1.0, f64::NAN]),
            Err(Error::NonFiniteCoefficient(1))
        );
        assert_eq!(RealPoly::new(vec![]), Err(Error::EmptyPolynomial));
    }

    #[test]
    fn interpolate_examples() {
        assert_eq!(
            RealPoly::interpolate(&[0.0, 1.0], &[1.0, 2.0]).unwrap(),
            poly(&[1.0, 1.0])
        );
        let xs = [1.0, 2.0, 3.0, 4.0];
        let p2 = RealPoly::interpolate(&xs, &[1.0, -1.0, 1.0, 1.0]).unwrap();
        for (a, b) in p2.coeffs().iter().zip([13.0, -19.0, 8.0, -1.0]) {
            assert!((a - b).abs() < 1e-12);
        }
        let p5 = RealPoly::interpolate(&xs, &[1.0, -1.0, -1.0, 1.0]).unwrap();
        for (a, b) in p5.coeffs().iter().zip([5.0, -5.0, 1.0, 0.0]) {
            assert!((a - b).abs() < 1e-12);
        }
        assert_eq!(
            RealPoly::interpolate(&[1.0, 1.0], &[0.0, 1.0]),
            Err(Error::DuplicatePoint(1))
        );
    }

    #[test]
    fn canonicalize_flips_sign() {
        assert_eq!(poly(&[0.0, -2.0]).canonicalize(), poly(&[0.0, 2.0]));
        assert_eq!(RealPoly::zero(2).canonicalize(), RealPoly::zero(2));
        let p = poly(&[0.0, -1.0, 3.0]);
        assert_eq!(p.canonicalize().canonicalize(), p.canonicalize());
    }

    #[test]
    fn phase_equivalence_up_to_sign() {
        assert!(poly(&[1.0, 2.0]).phase_equivalent(&poly(&[-1.0, -2.0]), 1e-12));
        assert!(!poly(&[1.0, 2.0]).phase_equivalent(&poly(&[2.0, 1.0]), 1e-6));
    }

    #[test]
    fn cauchy_bound_examples() {
        assert_eq!(poly(&[-1.0, 0.0, 1.0]).cauchy_root_bound().unwrap(), 2.0);
        assert_eq!(poly(&[-5.0, 1.0]).cauchy_root_bound().unwrap(), 6.0);
        assert_eq!(poly(&[0.0, 0.0, 3.0]).cauchy_root_bound().unwrap(), 1.0);
        assert_eq!(
            RealPoly::zero(3).cauchy_root_bound(),
            Err(Error::ZeroPolynomial)
        );
    }
}
