//! Dense univariate polynomials over [`Rational`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::rational::Rational;

/// Coefficients in ascending order of degree, with no trailing zeros.
/// The zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * n^k`
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Self::from_coeffs(coeffs)
    }

    /// The identity polynomial `n`.
    pub fn var() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_int(&self, x: i64) -> Rational {
        self.eval(&Rational::integer(x))
    }

    /// `p(a*n + b)` as a polynomial in `n`.
    pub fn compose_affine(&self, a: &Rational, b: &Rational) -> Self {
        let inner = Poly::from_coeffs(vec![b.clone(), a.clone()]);
        let mut result = Poly::zero();
        for c in self.coeffs.iter().rev() {
            result = &(&result * &inner) + &Poly::constant(c.clone());
        }
        result
    }

    /// `p(n + c)`
    pub fn shift(&self, c: &Rational) -> Self {
        self.compose_affine(&Rational::one(), c)
    }

    /// Renders with the given variable name, highest degree first.
    pub fn display_in<'a>(&'a self, var: &'a str) -> impl fmt::Display + 'a {
        PolyDisplay { poly: self, var }
    }
}

struct PolyDisplay<'a> {
    poly: &'a Poly,
    var: &'a str,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.poly.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let monomial = match k {
                0 => String::new(),
                1 => self.var.to_string(),
                _ => format!("{}^{}", self.var, k),
            };
            crate::text::format::write_signed_term(f, c, &monomial, first)?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({})", self.display_in("n"))
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..len).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly::from_coeffs(coeffs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn trims_trailing_zeros() {
        let p = Poly::from_coeffs(vec![q(1, 1), q(0, 1), q(0, 1)]);
        assert_eq!(p.degree(), Some(0));
        assert_eq!(Poly::from_coeffs(vec![q(0, 1)]).degree(), None);
    }

    #[test]
    fn evaluation_and_arithmetic() {
        // n^2/2 + n/2
        let tri = Poly::from_coeffs(vec![q(0, 1), q(1, 2), q(1, 2)]);
        assert_eq!(tri.eval_int(4), q(10, 1));
        let sq = &Poly::var() * &Poly::var();
        assert_eq!((&sq - &tri).eval_int(4), q(6, 1));
        assert_eq!(tri.scale(&q(2, 1)).eval_int(3), q(12, 1));
    }

    #[test]
    fn shift_expands_binomially() {
        // (n - 1)^2/2 + (n - 1)/2 = n^2/2 - n/2
        let tri = Poly::from_coeffs(vec![q(0, 1), q(1, 2), q(1, 2)]);
        let shifted = tri.shift(&q(-1, 1));
        assert_eq!(shifted.coeffs(), &[q(0, 1), q(-1, 2), q(1, 2)]);
    }

    #[test]
    fn affine_composition() {
        let p = Poly::from_coeffs(vec![q(1, 1), q(1, 1)]);
        // p((n+1)/2) = n/2 + 3/2
        let c = p.compose_affine(&q(1, 2), &q(1, 2));
        assert_eq!(c.coeffs(), &[q(3, 2), q(1, 2)]);
    }

    #[test]
    fn display() {
        let tri = Poly::from_coeffs(vec![q(0, 1), q(1, 2), q(1, 2)]);
        assert_eq!(tri.display_in("n").to_string(), "n^2/2 + n/2");
        let p = Poly::from_coeffs(vec![q(-1, 8), q(3, 2), q(-1, 1)]);
        assert_eq!(p.display_in("n").to_string(), "-n^2 + 3*n/2 - 1/8");
        assert_eq!(Poly::zero().display_in("n").to_string(), "0");
    }
}
