//! Finite-precision stand-ins for transcendental evaluation points.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A rational approximation `approx` of a transcendental number `t`, with a
/// certified bound `|t - approx| <= radius`.
#[derive(Debug, Clone, PartialEq)]
pub struct TranscendentalPoint {
    pub approx: BigRational,
    pub radius: BigRational,
    pub digits: u32,
}

impl TranscendentalPoint {
    /// pi truncated to `digits` decimal places.
    pub fn pi(digits: u32) -> Self {
        const GUARD: u32 = 10;
        let scale = BigInt::from(10).pow(digits + GUARD);
        // Machin: pi = 16 atan(1/5) - 4 atan(1/239)
        let pi_scaled = arctan_inverse(5, &scale) * 16 - arctan_inverse(239, &scale) * 4;
        let truncated = pi_scaled / BigInt::from(10).pow(GUARD);
        let unit = BigInt::from(10).pow(digits);
        Self {
            approx: BigRational::new(truncated, unit.clone()),
            // truncation error below one unit, plus series rounding far below it
            radius: BigRational::new(BigInt::from(2), unit),
            digits,
        }
    }

    /// Upper bound on `|p(t) - p(approx)|` for a polynomial with the given
    /// coefficients, via `|p'| <= sum k |a_k| (|approx| + radius)^(k-1)`.
    pub fn evaluation_error_bound(&self, coeffs: &[BigRational]) -> BigRational {
        let reach = self.approx.abs() + &self.radius;
        let mut power = BigRational::one();
        let mut slope = BigRational::zero();
        for (k, c) in coeffs.iter().enumerate().skip(1) {
            slope += c.abs() * BigRational::from_integer(BigInt::from(k)) * &power;
            power *= &reach;
        }
        slope * &self.radius
    }
}

/// `scale * atan(1/x)` by the alternating Taylor series in integer arithmetic.
fn arctan_inverse(x: u32, scale: &BigInt) -> BigInt {
    let x = BigInt::from(x);
    let x_sq = &x * &x;
    let mut power = scale / &x;
    let mut sum = BigInt::zero();
    let mut k = 0u32;
    while !power.is_zero() {
        let term = &power / BigInt::from(2 * k + 1);
        if k.is_multiple_of(2) {
            sum += term;
        } else {
            sum -= term;
        }
        power /= &x_sq;
        k += 1;
    }
    sum
}
