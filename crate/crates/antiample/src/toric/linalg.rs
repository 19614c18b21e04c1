//! Exact integer linear algebra for unimodular cone data.
//!
//! Fans are validated with exact determinants, and support functions are
//! solved with Cramer's rule; smoothness makes every denominator +-1, so
//! all outputs stay in the integers.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Determinant of a square integer matrix (rows of equal length) by
/// fraction-free Gaussian elimination.
pub fn determinant(rows: &[Vec<i64>]) -> BigInt {
    let n = rows.len();
    debug_assert!(rows.iter().all(|r| r.len() == n));
    if n == 0 {
        return BigInt::one();
    }
    let mut m: Vec<Vec<BigInt>> =
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * m[n - 1][n - 1].clone()
}

/// Solve V x = b exactly for a unimodular integer matrix V (det = +-1),
/// by Cramer's rule. Returns `None` when det V is not a unit.
pub fn solve_unimodular(rows: &[Vec<i64>], rhs: &[BigInt]) -> Option<Vec<BigInt>> {
    let n = rows.len();
    let det = determinant(rows);
    if !det.abs().is_one() {
        return None;
    }
    let mut solution = Vec::with_capacity(n);
    for col in 0..n {
        // Cramer numerator: det of V with column `col` replaced by the
        // rhs, expanded along that column so the minors stay in i64.
        let mut column_det = BigInt::zero();
        for (i, entry) in rhs.iter().enumerate().take(n) {
            let minor_rows: Vec<Vec<i64>> = rows
                .iter()
                .enumerate()
                .filter(|&(r, _)| r != i)
                .map(|(_, other)| {
                    other
                        .iter()
                        .enumerate()
                        .filter(|&(c, _)| c != col)
                        .map(|(_, &x)| x)
                        .collect()
                })
                .collect();
            let cofactor = determinant(&minor_rows);
            let sgn = if (i + col) % 2 == 0 { BigInt::one() } else { -BigInt::one() };
            column_det += sgn * entry * cofactor;
        }
        solution.push(column_det / &det);
    }
    Some(solution)
}

/// Dot product of an integer vector with a ray.
pub fn dot(a: &[BigInt], b: &[i64]) -> BigInt {
    a.iter().zip(b).map(|(x, &y)| x * BigInt::from(y)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinant_values() {
        assert_eq!(determinant(&[vec![1, 0], vec![0, 1]]), BigInt::one());
        assert_eq!(determinant(&[vec![0, 1], vec![1, 0]]), BigInt::from(-1));
        assert_eq!(determinant(&[vec![1, 2], vec![3, 4]]), BigInt::from(-2));
        assert_eq!(
            determinant(&[vec![2, 0, 1], vec![1, 1, 0], vec![0, 3, 1]]),
            BigInt::from(5)
        );
        assert_eq!(determinant(&[vec![1, 1], vec![2, 2]]), BigInt::zero());
    }

    #[test]
    fn solve_simple_system() {
        // [[0,1],[-1,1]] x = (2, 3) => x = (-1, 2)
        let rows = vec![vec![0, 1], vec![-1, 1]];
        let rhs = vec![BigInt::from(2), BigInt::from(3)];
        let x = solve_unimodular(&rows, &rhs).unwrap();
        assert_eq!(x, vec![BigInt::from(-1), BigInt::from(2)]);
    }

    #[test]
    fn solve_rejects_non_unimodular() {
        let rows = vec![vec![2, 0], vec![0, 1]];
        assert!(solve_unimodular(&rows, &[BigInt::one(), BigInt::one()]).is_none());
    }

    #[test]
    fn solve_round_trips() {
        let rows = vec![vec![1, 0, 0], vec![2, 1, 0], vec![3, -7, 1]];
        let rhs = vec![BigInt::from(5), BigInt::from(-4), BigInt::from(11)];
        let x = solve_unimodular(&rows, &rhs).unwrap();
        for (row, want) in rows.iter().zip(&rhs) {
            assert_eq!(&dot(&x, row), want);
        }
    }
}
