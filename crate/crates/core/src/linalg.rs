//! Exact Gaussian elimination over the rationals.

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Solves the square system `a * x = b` exactly.
///
/// Returns `DivisionByZero` when the matrix is singular.
pub fn solve(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Result<Vec<Rational>> {
    let n = b.len();
    assert!(a.len() == n && a.iter().all(|row| row.len() == n), "system must be square");

    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .ok_or(Error::DivisionByZero)?;
        a.swap(col, pivot);
        b.swap(col, pivot);

        let inv = a[col][col].recip()?;
        for x in &mut a[col][col..] {
            *x = &*x * &inv;
        }
        b[col] = &b[col] * &inv;

        let pivot_row = a[col].clone();
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].clone();
            for (x, p) in a[r][col..].iter_mut().zip(&pivot_row[col..]) {
                *x -= &factor * p;
            }
            let delta = &factor * &b[col];
            b[r] -= delta;
        }
    }
    Ok(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::integer(n)
    }

    #[test]
    fn solves_small_system() {
        // x + y = 3, x - y = 1
        let a = vec![vec![q(1), q(1)], vec![q(1), q(-1)]];
        let x = solve(a, vec![q(3), q(1)]).unwrap();
        assert_eq!(x, vec![q(2), q(1)]);
    }

    #[test]
    fn needs_pivoting() {
        let a = vec![vec![q(0), q(2)], vec![q(3), q(0)]];
        let x = solve(a, vec![q(4), q(9)]).unwrap();
        assert_eq!(x, vec![q(3), q(2)]);
    }

    #[test]
    fn singular_is_an_error() {
        let a = vec![vec![q(1), q(2)], vec![q(2), q(4)]];
        assert_eq!(solve(a, vec![q(1), q(2)]), Err(Error::DivisionByZero));
    }
}
