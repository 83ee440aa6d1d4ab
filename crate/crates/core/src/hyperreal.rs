//! Hyperreal values of series: finite formal sums of `c * w^p * b^w`.
//!
//! `w` is the infinite unit (the count of positive integers). Terms are
//! keyed by `(base, power)` and ordered by asymptotic dominance: any
//! exponential factor `b^w` with a larger base outgrows every power of
//! `w`, so the key compares base first and power second.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::rational::Rational;

/// One term `coeff * w^power * base^w`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct HyperTerm {
    coeff: Rational,
    power: i64,
    base: Rational,
}

impl HyperTerm {
    /// Fails with `NonPositiveRatio` when `base <= 0`. A zero `coeff` is
    /// accepted here and dropped when the term joins a [`Hyperreal`].
    pub fn new(coeff: Rational, power: i64, base: Rational) -> Result<Self> {
        if !base.is_positive() {
            return Err(Error::NonPositiveRatio(base));
        }
        Ok(HyperTerm { coeff, power, base })
    }

    pub fn coeff(&self) -> &Rational {
        &self.coeff
    }

    pub fn power(&self) -> i64 {
        self.power
    }

    pub fn base(&self) -> &Rational {
        &self.base
    }

    /// Dominance key; larger keys grow faster.
    pub fn key(&self) -> (&Rational, i64) {
        (&self.base, self.power)
    }

    /// True when the term is larger than every standard real in magnitude.
    pub fn is_infinite(&self) -> bool {
        self.base > 1 || (self.base == 1 && self.power > 0)
    }

    /// True when the term is smaller than every positive standard real.
    pub fn is_infinitesimal(&self) -> bool {
        self.base < 1 || (self.base == 1 && self.power < 0)
    }

    fn mul(&self, other: &HyperTerm) -> HyperTerm {
        HyperTerm {
            coeff: &self.coeff * &other.coeff,
            power: self.power + other.power,
            base: &self.base * &other.base,
        }
    }
}

/// A hyperreal value in canonical form: terms strictly descending by
/// dominance key, no zero coefficients. Zero is the empty sum.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Hyperreal {
    terms: Vec<HyperTerm>,
}

impl Hyperreal {
    pub fn zero() -> Self {
        Hyperreal { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_rational(c: Rational) -> Self {
        Self::monomial(c, 0, Rational::one())
    }

    /// The infinite unit `w`.
    pub fn omega() -> Self {
        Self::monomial(Rational::one(), 1, Rational::one())
    }

    /// `c * w^power * base^w`. Panics on a non-positive base; use
    /// [`HyperTerm::new`] with [`Hyperreal::from_terms`] for untrusted input.
    pub fn monomial(c: Rational, power: i64, base: Rational) -> Self {
        let term = HyperTerm::new(c, power, base).expect("positive base");
        Self::from_terms([term])
    }

    /// Canonicalizes an arbitrary multiset of terms.
    pub fn from_terms<I: IntoIterator<Item = HyperTerm>>(terms: I) -> Self {
        let mut merged: BTreeMap<(Rational, i64), Rational> = BTreeMap::new();
        for t in terms {
            *merged.entry((t.base, t.power)).or_insert_with(Rational::zero) += t.coeff;
        }
        let terms = merged
            .into_iter()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|((base, power), coeff)| HyperTerm { coeff, power, base })
            .collect();
        Hyperreal { terms }
    }

    pub fn terms(&self) -> &[HyperTerm] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Hyperreal {
            terms: self
                .terms
                .iter()
                .map(|t| HyperTerm {
                    coeff: &t.coeff * c,
                    ..t.clone()
                })
                .collect(),
        }
    }

    /// The dominant term alone, coefficient included.
    pub fn principal_value(&self) -> Self {
        Hyperreal {
            terms: self.terms.first().cloned().into_iter().collect(),
        }
    }

    /// The `≃` relation: both values share a principal value.
    pub fn same_halo(&self, other: &Hyperreal) -> bool {
        self.terms.first() == other.terms.first()
    }

    /// The finite part of a value with no infinite terms; `None` when some
    /// term is infinite. Infinitesimal terms are discarded.
    pub fn standard_part(&self) -> Option<Rational> {
        if self.terms.iter().any(HyperTerm::is_infinite) {
            return None;
        }
        Some(
            self.terms
                .iter()
                .find(|t| t.base == 1 && t.power == 0)
                .map(|t| t.coeff.clone())
                .unwrap_or_else(Rational::zero),
        )
    }

    /// `principal_value(self) / principal_value(other)` as a monomial.
    pub fn ratio_principal(&self, other: &Hyperreal) -> Result<Self> {
        let den = other.terms.first().ok_or(Error::DivisionByZero)?;
        let Some(num) = self.terms.first() else {
            return Ok(Self::zero());
        };
        let term = HyperTerm {
            coeff: num.coeff.checked_div(&den.coeff)?,
            power: num.power - den.power,
            base: num.base.checked_div(&den.base)?,
        };
        Ok(Self::from_terms([term]))
    }

    /// Integer power. Negative exponents are only defined for monomials.
    pub fn pow(&self, exp: i64) -> Result<Self> {
        if exp < 0 {
            let [t] = self.terms.as_slice() else {
                return Err(Error::DivisionByZero);
            };
            let inv = HyperTerm {
                coeff: t.coeff.recip()?,
                power: -t.power,
                base: t.base.recip()?,
            };
            return Self::from_terms([inv]).pow(-exp);
        }
        let mut result = Self::one();
        for _ in 0..exp {
            result = &result * self;
        }
        Ok(result)
    }

    /// Evaluates the finite analogue `Σ c * n^p * b^n` at an integer `n`,
    /// i.e. the value obtained by replacing `w` with `n`.
    pub fn at(&self, n: i64) -> Result<Rational> {
        let n_q = Rational::integer(n);
        let mut total = Rational::zero();
        for t in &self.terms {
            total += &t.coeff * n_q.pow(t.power)? * t.base.pow(n)?;
        }
        Ok(total)
    }

    /// Exact quotient by a monomial divisor.
    pub fn div_monomial(&self, divisor: &Hyperreal) -> Result<Self> {
        match divisor.terms.as_slice() {
            [_] => Ok(self * &divisor.pow(-1)?),
            _ => Err(Error::DivisionByZero),
        }
    }
}

/// `p(w + c)` expanded into base-1 terms.
pub fn eval_poly_at_shifted_omega(p: &Poly, c: i64) -> Hyperreal {
    poly_exp_at_shifted_omega(p, c, &Rational::one())
}

/// `p(w + c) * base^(w + c)` for a positive base, expanded into terms.
pub(crate) fn poly_exp_at_shifted_omega(p: &Poly, c: i64, base: &Rational) -> Hyperreal {
    let shifted = p.shift(&Rational::integer(c));
    let factor = base.pow(c).expect("positive base");
    Hyperreal::from_terms(shifted.coeffs().iter().enumerate().map(|(k, a)| HyperTerm {
        coeff: a * &factor,
        power: k as i64,
        base: base.clone(),
    }))
}

impl Ord for Hyperreal {
    fn cmp(&self, other: &Self) -> Ordering {
        let diff = self - other;
        match diff.terms.first() {
            None => Ordering::Equal,
            Some(t) if t.coeff.is_positive() => Ordering::Greater,
            Some(_) => Ordering::Less,
        }
    }
}

impl PartialOrd for Hyperreal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for &Hyperreal {
    type Output = Hyperreal;
    fn add(self, rhs: &Hyperreal) -> Hyperreal {
        Hyperreal::from_terms(self.terms.iter().chain(&rhs.terms).cloned())
    }
}

impl Neg for &Hyperreal {
    type Output = Hyperreal;
    fn neg(self) -> Hyperreal {
        self.scale(&Rational::integer(-1))
    }
}

impl Sub for &Hyperreal {
    type Output = Hyperreal;
    fn sub(self, rhs: &Hyperreal) -> Hyperreal {
        self + &(-rhs)
    }
}

impl Mul for &Hyperreal {
    type Output = Hyperreal;
    fn mul(self, rhs: &Hyperreal) -> Hyperreal {
        Hyperreal::from_terms(
            self.terms
                .iter()
                .flat_map(|a| rhs.terms.iter().map(move |b| a.mul(b))),
        )
    }
}

macro_rules! owned_binop {
    ($Trait:ident, $method:ident) => {
        impl $Trait for Hyperreal {
            type Output = Hyperreal;
            fn $method(self, rhs: Hyperreal) -> Hyperreal {
                (&self).$method(&rhs)
            }
        }
        impl $Trait<&Hyperreal> for Hyperreal {
            type Output = Hyperreal;
            fn $method(self, rhs: &Hyperreal) -> Hyperreal {
                (&self).$method(rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Neg for Hyperreal {
    type Output = Hyperreal;
    fn neg(self) -> Hyperreal {
        -&self
    }
}

impl From<Rational> for Hyperreal {
    fn from(c: Rational) -> Self {
        Hyperreal::from_rational(c)
    }
}

impl From<i64> for Hyperreal {
    fn from(c: i64) -> Self {
        Hyperreal::from_rational(Rational::integer(c))
    }
}

impl fmt::Display for Hyperreal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        crate::text::format::write_hyperreal(f, self)
    }
}

impl fmt::Debug for Hyperreal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Hyperreal({self})")
    }
}
