//! Newton divided differences and node placement shared by the floating kinds.

use num_traits::Num;

use crate::error::{Error, Result};

/// Rejects repeated points by exact equality. Returns the index of the later
/// duplicate on failure.
pub(crate) fn check_distinct<T: PartialEq>(points: &[T]) -> Result<()> {
    for (i, p) in points.iter().enumerate() {
        if points[..i].iter().any(|q| q == p) {
            return Err(Error::DuplicatePoint(i));
        }
    }
    Ok(())
}

/// Monomial coefficients of the interpolant through `(points[i], values[i])`.
///
/// Divided differences give the Newton form in O(m²); the nested Newton
/// polynomial is then expanded into the monomial basis, also in O(m²).
pub(crate) fn newton_interpolate<T>(points: &[T], values: &[T]) -> Result<Vec<T>>
where
    T: Num + Copy,
{
    if points.len() != values.len() {
        return Err(Error::LengthMismatch {
            expected: points.len(),
            actual: values.len(),
        });
    }
    if points.is_empty() {
        return Err(Error::EmptyPolynomial);
    }
    check_distinct(points)?;

    let m = points.len();
    let mut diffs = values.to_vec();
    for j in 1..m {
        for i in (j..m).rev() {
            diffs[i] = (diffs[i] - diffs[i - 1]) / (points[i] - points[i - j]);
        }
    }

    // Horner on the Newton form: p <- p * (x - x_k) + d_k
    let mut coeffs = vec![T::zero(); m];
    coeffs[0] = diffs[m - 1];
    for k in (0..m - 1).rev() {
        for i in (1..m).rev() {
            coeffs[i] = coeffs[i - 1] - points[k] * coeffs[i];
        }
        coeffs[0] = diffs[k] - points[k] * coeffs[0];
    }
    Ok(coeffs)
}

/// Chebyshev points of the first kind, affinely mapped onto `[lo, hi]`.
///
/// All nodes lie strictly inside the interval and are returned in
/// increasing order.
pub fn chebyshev_nodes(count: usize, lo: f64, hi: f64) -> Vec<f64> {
    let mid = 0.5 * (lo + hi);
    let half = 0.5 * (hi - lo);
    (0..count)
        .rev()
        .map(|k| {
            let theta = (2 * k + 1) as f64 * std::f64::consts::PI / (2 * count) as f64;
            mid + half * theta.cos()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn line_through_two_points() {
        let c = newton_interpolate(&[0.0, 1.0], &[1.0, 2.0]).unwrap();
        assert_eq!(c, vec![1.0, 1.0]);
    }

    #[test]
    fn duplicate_points_rejected() {
        assert_eq!(
            newton_interpolate(&[1.0, 2.0, 1.0], &[0.0, 0.0, 0.0]),
            Err(Error::DuplicatePoint(2))
        );
    }

    #[test]
    fn chebyshev_nodes_are_interior_and_sorted() {
        let nodes = chebyshev_nodes(7, 0.0, 1.5);
        assert!(nodes.windows(2).all(|w| w[0] < w[1]));
        assert!(nodes.iter().all(|&x| x > 0.0 && x < 1.5));
        // odd count on a symmetric interval puts the middle node at the centre
        let sym = chebyshev_nodes(5, -1.0, 1.0);
        assert!(sym[2].abs() < 1e-15);
    }
}
