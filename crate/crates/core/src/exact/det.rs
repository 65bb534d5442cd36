//! Exact determinants: Bareiss elimination over the integers, and
//! evaluation–interpolation for matrices of integer polynomials.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;
use thiserror::Error;

use super::poly::IntPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DetError {
    #[error("matrix is not square: row {row} has {len} entries, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },
    #[error("degree bound {bound} is below the determinant's a priori degree {needed}")]
    DegreeBoundTooSmall { bound: usize, needed: usize },
    #[error("interpolated determinant is not integral at Newton coefficient {0}")]
    InterpolationNotIntegral(usize),
}

/// Determinant by fraction-free (Bareiss) elimination with row pivoting.
/// The empty matrix has determinant 1.
pub fn det_int(m: &[Vec<BigInt>]) -> Result<BigInt, DetError> {
    check_square(m)?;
    Ok(bareiss(m.to_vec()))
}

fn check_square<T>(m: &[Vec<T>]) -> Result<(), DetError> {
    let n = m.len();
    match m.iter().enumerate().find(|(_, row)| row.len() != n) {
        Some((row, r)) => Err(DetError::NotSquare { row, len: r.len(), expected: n }),
        None => Ok(()),
    }
}

fn bareiss(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        let (top, bottom) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        let pivot = &pivot_row[k];
        for row in bottom.iter_mut() {
            let factor = row[k].clone();
            for j in k + 1..n {
                // Sylvester's identity makes this division exact.
                let v = pivot * &row[j] - &factor * &pivot_row[j];
                row[j] = if prev.is_one() { v } else { v / &prev };
            }
            row[k] = BigInt::zero();
        }
        prev = pivot.clone();
    }
    if n == 0 {
        return BigInt::one();
    }
    let det = a[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Determinant of a polynomial matrix by evaluating at `t = 0, 1, ..., degree_bound`,
/// taking integer determinants, and interpolating in Newton form.
///
/// `degree_bound` must be at least the sum over rows of the largest entry
/// degree in that row; this is checked.
pub fn det_poly(m: &[Vec<IntPoly>], degree_bound: usize) -> Result<IntPoly, DetError> {
    check_square(m)?;
    let needed: usize = m
        .iter()
        .map(|row| row.iter().filter_map(IntPoly::degree).max().unwrap_or(0))
        .sum();
    if degree_bound < needed {
        return Err(DetError::DegreeBoundTooSmall { bound: degree_bound, needed });
    }
    let values: Vec<BigInt> = (0..=degree_bound)
        .into_par_iter()
        .map(|v| {
            let point = BigInt::from(v);
            let evaluated = m
                .iter()
                .map(|row| row.iter().map(|e| e.eval_int(&point)).collect())
                .collect();
            bareiss(evaluated)
        })
        .collect();
    interpolate_consecutive(&values)
}

/// The integer polynomial of degree `< values.len()` taking `values[k]` at `t = k`.
pub fn interpolate_consecutive(values: &[BigInt]) -> Result<IntPoly, DetError> {
    let n = values.len();
    // Forward differences: diffs[k] = Δ^k f(0).
    let mut work = values.to_vec();
    let mut newton = Vec::with_capacity(n);
    let mut factorial = BigInt::one();
    for k in 0..n {
        if k > 0 {
            factorial *= k;
            for i in 0..n - k {
                work[i] = &work[i + 1] - &work[i];
            }
        }
        let (q, r) = work[0].div_rem(&factorial);
        if !r.is_zero() {
            return Err(DetError::InterpolationNotIntegral(k));
        }
        newton.push(q);
    }
    // Horner in the falling-factorial basis: c_0 + t(c_1 + (t-1)(c_2 + ...)).
    let mut acc = IntPoly::zero();
    for (k, c) in newton.into_iter().enumerate().rev() {
        acc = &acc * &IntPoly::linear(-(k as i64), 1) + IntPoly::constant(c);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int_matrix(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect()
    }

    fn cofactor_det(m: &[Vec<i64>]) -> i64 {
        let n = m.len();
        if n == 0 {
            return 1;
        }
        (0..n)
            .map(|j| {
                let minor: Vec<Vec<i64>> = m[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &v)| v).collect())
                    .collect();
                let sign = if j % 2 == 0 { 1 } else { -1 };
                sign * m[0][j] * cofactor_det(&minor)
            })
            .sum()
    }

    #[test]
    fn small_integer_determinants() {
        assert_eq!(det_int(&int_matrix(&[&[1, 0], &[0, 1]])).unwrap(), BigInt::from(1));
        assert_eq!(det_int(&int_matrix(&[&[2, 1], &[1, 2]])).unwrap(), BigInt::from(3));
        assert_eq!(det_int(&[]).unwrap(), BigInt::from(1));
        assert_eq!(det_int(&int_matrix(&[&[0, 1], &[1, 0]])).unwrap(), BigInt::from(-1));
        assert_eq!(det_int(&int_matrix(&[&[1, 2], &[2, 4]])).unwrap(), BigInt::from(0));
        assert!(det_int(&int_matrix(&[&[1, 2], &[3]])).is_err());
    }

    #[test]
    fn random_five_by_five_matches_cofactor_expansion() {
        // Fixed LCG so the matrices are reproducible without a RNG dependency.
        let mut state: u64 = 0x9e37_79b9_7f4a_7c15;
        for _ in 0..50 {
            let m: Vec<Vec<i64>> = (0..5)
                .map(|_| {
                    (0..5)
                        .map(|_| {
                            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                            ((state >> 33) % 19) as i64 - 9
                        })
                        .collect()
                })
                .collect();
            let big: Vec<Vec<BigInt>> =
                m.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect();
            assert_eq!(det_int(&big).unwrap(), BigInt::from(cofactor_det(&m)));
        }
    }

    #[test]
    fn two_by_two_polynomial() {
        let tm1 = IntPoly::from_i64s(&[-1, 1]);
        let t = IntPoly::from_i64s(&[0, 1]);
        let m = vec![vec![tm1.clone(), t.clone()], vec![t, tm1]];
        assert_eq!(det_poly(&m, 2).unwrap(), IntPoly::from_i64s(&[1, -2]));
    }

    #[test]
    fn diagonal_power() {
        let s = 6;
        let tm1 = IntPoly::from_i64s(&[-1, 1]);
        let m: Vec<Vec<IntPoly>> = (0..s)
            .map(|i| (0..s).map(|j| if i == j { tm1.clone() } else { IntPoly::zero() }).collect())
            .collect();
        let mut expected = IntPoly::one();
        for _ in 0..s {
            expected = &expected * &tm1;
        }
        assert_eq!(det_poly(&m, s).unwrap(), expected);
    }

    #[test]
    fn equal_rows_vanish() {
        let row = vec![IntPoly::from_i64s(&[3, 1]), IntPoly::from_i64s(&[0, -2]), IntPoly::one()];
        let m = vec![row.clone(), vec![IntPoly::one(), IntPoly::zero(), IntPoly::from_i64s(&[0, 5])], row];
        assert!(det_poly(&m, 3).unwrap().is_zero());
    }

    #[test]
    fn degree_bound_enforced() {
        let m = vec![vec![IntPoly::from_i64s(&[0, 0, 1])]];
        assert!(matches!(det_poly(&m, 1), Err(DetError::DegreeBoundTooSmall { .. })));
        assert_eq!(det_poly(&m, 2).unwrap(), IntPoly::from_i64s(&[0, 0, 1]));
    }

    #[test]
    fn non_integral_interpolation_detected() {
        // t(t-1)/2 takes integer values at every integer but has a half-integer coefficient.
        let values: Vec<BigInt> = (0..3).map(|k| BigInt::from(k * (k - 1) / 2)).collect();
        assert_eq!(interpolate_consecutive(&values), Err(DetError::InterpolationNotIntegral(2)));
    }
}
