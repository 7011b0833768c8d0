use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::poly::interp::check_distinct;
use crate::poly::RealPoly;

/// Polynomial with exact rational coefficients, `Q_n[x]`.
///
/// `BigRational` keeps every coefficient reduced with a positive denominator.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalPoly {
    coeffs: Vec<BigRational>,
}

/// Shorthand for `num / den`.
pub fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

impl RationalPoly {
    pub fn new(coeffs: Vec<BigRational>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::EmptyPolynomial);
        }
        Ok(Self { coeffs })
    }

    /// Convenience constructor from `(numerator, denominator)` pairs.
    pub fn from_fractions(fractions: &[(i64, i64)]) -> Result<Self> {
        if let Some(i) = fractions.iter().position(|&(_, d)| d == 0) {
            return Err(Error::InvalidInput(format!("zero denominator at {i}")));
        }
        Self::new(fractions.iter().map(|&(n, d)| ratio(n, d)).collect())
    }

    pub fn zero(degree_bound: usize) -> Self {
        Self {
            coeffs: vec![BigRational::zero(); degree_bound + 1],
        }
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn degree_bound(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn evaluate(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    /// Exact interpolation by Gaussian elimination on the Vandermonde system.
    pub fn interpolate(points: &[BigRational], values: &[BigRational]) -> Result<Self> {
        if points.len() != values.len() {
            return Err(Error::LengthMismatch {
                expected: points.len(),
                actual: values.len(),
            });
        }
        let inverse = vandermonde_inverse(points)?;
        Ok(Self::apply_inverse(&inverse, values))
    }

    /// Coefficients `V^{-1} values` for a precomputed Vandermonde inverse.
    pub(crate) fn apply_inverse(inverse: &[Vec<BigRational>], values: &[BigRational]) -> Self {
        let coeffs = inverse
            .iter()
            .map(|row| {
                row.iter()
                    .zip(values)
                    .fold(BigRational::zero(), |acc, (r, v)| acc + r * v)
            })
            .collect();
        Self { coeffs }
    }

    /// Flips the sign so the lowest-index nonzero coefficient is positive.
    pub fn canonicalize(&self) -> Self {
        match self.coeffs.iter().find(|c| !c.is_zero()) {
            Some(c) if c.is_negative() => -self.clone(),
            _ => self.clone(),
        }
    }

    /// Nearest-double approximation, for plotting and comparisons with the
    /// floating kinds.
    pub fn to_real(&self) -> RealPoly {
        RealPoly::new(
            self.coeffs
                .iter()
                .map(|c| c.to_f64().unwrap_or(f64::NAN))
                .collect(),
        )
        .expect("rational coefficients convert to finite doubles")
    }
}

impl Neg for RationalPoly {
    type Output = RationalPoly;
    fn neg(self) -> RationalPoly {
        RationalPoly {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

/// Inverse of the Vandermonde matrix `V[i][k] = points[i]^k`, by Gauss-Jordan
/// elimination over the rationals.
pub(crate) fn vandermonde_inverse(points: &[BigRational]) -> Result<Vec<Vec<BigRational>>> {
    if points.is_empty() {
        return Err(Error::EmptyPolynomial);
    }
    check_distinct(points)?;
    let m = points.len();
    // augmented [V | I]
    let mut rows: Vec<Vec<BigRational>> = points
        .iter()
        .enumerate()
        .map(|(i, x)| {
            let mut row = Vec::with_capacity(2 * m);
            let mut power = BigRational::one();
            for _ in 0..m {
                row.push(power.clone());
                power *= x;
            }
            row.extend((0..m).map(|j| {
                if i == j {
                    BigRational::one()
                } else {
                    BigRational::zero()
                }
            }));
            row
        })
        .collect();

    for col in 0..m {
        let pivot = (col..m)
            .find(|&r| !rows[r][col].is_zero())
            .expect("Vandermonde matrix on distinct points is invertible");
        rows.swap(col, pivot);
        let inv = rows[col][col].recip();
        for v in rows[col].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = rows[col].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == col || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (v, p) in row.iter_mut().zip(&pivot_row) {
                *v -= &factor * p;
            }
        }
    }
    Ok(rows.into_iter().map(|row| row[m..].to_vec()).collect())
}
