//! Closed-form partial sums and their evaluation at `w`.
//!
//! Every general term is a sum of atoms `c * i^p * r^i`. For `r = 1` the
//! partial sum is a Faulhaber polynomial; otherwise it is `Q(n) r^n - Q(0)`
//! for a polynomial `Q` of degree `p` found by undetermined coefficients.
//! Evaluating at `w` keeps positive bases as `r^w` factors and sends every
//! `Q(w) * (-1)^w` to zero.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::hyperreal::{eval_poly_at_shifted_omega, poly_exp_at_shifted_omega, Hyperreal};
use crate::linalg;
use crate::poly::Poly;
use crate::rational::Rational;
use crate::series::SeriesExpr;

/// How to treat exponential parts with a negative base other than -1.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum NegBaseMode {
    /// Refuse with `NegativeBase`.
    #[default]
    Error,
    /// Send `Q(w) r^w` to zero for `-1 < r < 0`. Bases below -1 are still
    /// refused, since their magnitude grows without bound.
    ConjectureExtended,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct EvalConfig {
    pub neg_base_mode: NegBaseMode,
    pub max_power: u32,
}

impl Default for EvalConfig {
    fn default() -> Self {
        EvalConfig {
            neg_base_mode: NegBaseMode::Error,
            max_power: 16,
        }
    }
}

impl EvalConfig {
    pub fn new(neg_base_mode: NegBaseMode, max_power: u32) -> Result<Self> {
        if max_power < 1 {
            return Err(Error::InvalidConfig("max_power must be at least 1".into()));
        }
        Ok(EvalConfig {
            neg_base_mode,
            max_power,
        })
    }

    fn check_degree(&self, p: u32) -> Result<()> {
        if p > self.max_power {
            return Err(Error::DegreeLimit {
                degree: p,
                max: self.max_power,
            });
        }
        Ok(())
    }
}

/// Exact closed form of `Σ_{i=start}^{n} term(i)`:
///
/// `poly_part(n) + Σ_r exp_parts[r](n) * r^n + correction`,
///
/// valid for every integer `n >= valid_from`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PartialSumFormula {
    pub start: i64,
    pub poly_part: Poly,
    pub exp_parts: BTreeMap<Rational, Poly>,
    pub correction: Rational,
    pub valid_from: i64,
}

impl PartialSumFormula {
    pub fn eval(&self, n: i64) -> Rational {
        let mut total = self.poly_part.eval_int(n) + &self.correction;
        for (r, q) in &self.exp_parts {
            total += q.eval_int(n) * r.pow(n).expect("nonzero base");
        }
        total
    }
}

impl fmt::Display for PartialSumFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let constant = self.poly_part.coeff(0) + &self.correction;
        let mut poly = self.poly_part.coeffs().to_vec();
        if poly.is_empty() {
            poly.push(Rational::zero());
        }
        poly[0] = constant;
        let poly = Poly::from_coeffs(poly);

        let mut wrote = false;
        for (r, q) in self.exp_parts.iter().rev() {
            if wrote {
                write!(f, " + ")?;
            }
            let base = if r.is_integer() && r.is_positive() {
                r.to_string()
            } else {
                format!("({r})")
            };
            write!(f, "({})*{base}^n", q.display_in("n"))?;
            wrote = true;
        }
        if !poly.is_zero() || !wrote {
            let rendered = poly.display_in("n").to_string();
            if wrote {
                match rendered.strip_prefix('-') {
                    Some(rest) => write!(f, " - {rest}")?,
                    None => write!(f, " + {rendered}")?,
                }
            } else {
                write!(f, "{rendered}")?;
            }
        }
        Ok(())
    }
}

fn binomial(n: usize, k: usize) -> Rational {
    let mut acc = Rational::one();
    for j in 0..k {
        acc *= Rational::integer((n - j) as i64);
        acc = acc.checked_div(&Rational::integer((j + 1) as i64)).unwrap();
    }
    acc
}

/// Bernoulli numbers `B_0..=B_m` with `B_1 = +1/2`.
fn bernoulli_plus(m: usize) -> Vec<Rational> {
    let mut b = vec![Rational::one()];
    for k in 1..=m {
        // Σ_{j<=k} C(k+1, j) B_j = 0 with B_1 = -1/2
        let s: Rational = (0..k).map(|j| binomial(k + 1, j) * &b[j]).sum();
        b.push(-s.checked_div(&Rational::integer(k as i64 + 1)).unwrap());
    }
    if m >= 1 {
        b[1] = Rational::new(1, 2);
    }
    b
}

/// `F_p` with `F_p(n) = Σ_{i=1}^n i^p`.
pub fn faulhaber(p: u32, cfg: &EvalConfig) -> Result<Poly> {
    cfg.check_degree(p)?;
    let p = p as usize;
    let b = bernoulli_plus(p);
    let scale = Rational::new(1, p as i64 + 1);
    let mut coeffs = vec![Rational::zero(); p + 2];
    for (j, bj) in b.iter().enumerate() {
        coeffs[p + 1 - j] = binomial(p + 1, j) * bj * &scale;
    }
    Ok(Poly::from_coeffs(coeffs))
}

/// `Q` of degree `p` with `Σ_{i=1}^n i^p r^i = Q(n) r^n - Q(0)`.
///
/// Solves `Q(i) - Q(i-1)/r = i^p` coefficient-wise.
pub fn antidifference_polygeom(p: u32, r: &Rational, cfg: &EvalConfig) -> Result<Poly> {
    if r.is_zero() {
        return Err(Error::ZeroRatio);
    }
    if r.is_one() {
        return Err(Error::UnsupportedRatio(r.clone()));
    }
    cfg.check_degree(p)?;
    let p = p as usize;
    let inv_r = r.recip()?;
    // row k: coefficient of n^k in Q(n) - Q(n-1)/r
    let mut a = vec![vec![Rational::zero(); p + 1]; p + 1];
    for (k, row) in a.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate().skip(k) {
            let sign = if (j - k) % 2 == 0 { 1 } else { -1 };
            let shifted = binomial(j, k) * Rational::integer(sign) * &inv_r;
            *cell = if j == k {
                Rational::one() - shifted
            } else {
                -shifted
            };
        }
    }
    let mut rhs = vec![Rational::zero(); p + 1];
    rhs[p] = Rational::one();
    Ok(Poly::from_coeffs(linalg::solve(a, rhs)?))
}

/// Closed form of the partial sums of `s`, valid past every override.
pub fn partial_sum_formula(s: &SeriesExpr, cfg: &EvalConfig) -> Result<PartialSumFormula> {
    let mut poly_part = Poly::zero();
    let mut exp_parts: BTreeMap<Rational, Poly> = BTreeMap::new();
    for atom in s.atoms() {
        if atom.ratio.is_one() {
            poly_part = &poly_part + &faulhaber(atom.power, cfg)?.scale(&atom.coeff);
        } else {
            let q = antidifference_polygeom(atom.power, &atom.ratio, cfg)?.scale(&atom.coeff);
            poly_part = &poly_part - &Poly::constant(q.coeff(0));
            let slot = exp_parts.entry(atom.ratio.clone()).or_default();
            *slot = &*slot + &q;
        }
    }
    exp_parts.retain(|_, q| !q.is_zero());

    let mut formula = PartialSumFormula {
        start: s.start(),
        poly_part,
        exp_parts,
        correction: Rational::zero(),
        valid_from: s.start(),
    };
    // The pieces above sum from index 1; subtracting their value at
    // start - 1 moves the lower bound (it adds terms when start < 1).
    let below = formula.eval(s.start() - 1);
    formula.poly_part = &formula.poly_part - &Poly::constant(below);

    for (&i, v) in s.overrides() {
        formula.correction += v - s.general_term(i);
        formula.valid_from = formula.valid_from.max(i);
    }
    Ok(formula)
}

/// Substitutes `n = w` into a partial-sum formula.
pub fn evaluate_at_omega(f: &PartialSumFormula, cfg: &EvalConfig) -> Result<Hyperreal> {
    let mut value = eval_poly_at_shifted_omega(&f.poly_part, 0)
        + Hyperreal::from_rational(f.correction.clone());
    let minus_one = Rational::integer(-1);
    for (r, q) in &f.exp_parts {
        if r.is_positive() {
            value = value + poly_exp_at_shifted_omega(q, 0, r);
        } else if *r == minus_one {
            // Q(w) (-1)^w contributes nothing
        } else if *r > minus_one && cfg.neg_base_mode == NegBaseMode::ConjectureExtended {
            // |r|^w is infinitesimal and (-1)^w vanishes
        } else {
            return Err(Error::NegativeBase(r.clone()));
        }
    }
    Ok(value)
}

/// The hyperreal value of `Σ_{i=start}^{w} term(i)`.
pub fn sum_series(s: &SeriesExpr, cfg: &EvalConfig) -> Result<Hyperreal> {
    evaluate_at_omega(&partial_sum_formula(s, cfg)?, cfg)
}

/// `Σ_{i=1}^{w} a + (i-1) d = wa + w²d/2 - wd/2`.
pub fn arithmetic_series_value(a: &Rational, d: &Rational) -> Hyperreal {
    let half = Rational::new(1, 2);
    let one = Rational::one();
    Hyperreal::monomial(a.clone(), 1, one.clone())
        + Hyperreal::monomial(d * &half, 2, one.clone())
        - Hyperreal::monomial(d * &half, 1, one)
}

/// `Σ_{i=1}^{w} a r^(i-1) = a (1 - r^w) / (1 - r)` for `r > 0`.
pub fn geometric_series_value(a: &Rational, r: &Rational) -> Result<Hyperreal> {
    if !r.is_positive() {
        return Err(Error::NonPositiveRatio(r.clone()));
    }
    if r.is_one() {
        return Ok(Hyperreal::monomial(a.clone(), 1, Rational::one()));
    }
    let k = a.checked_div(&(Rational::one() - r))?;
    Ok(Hyperreal::from_rational(k.clone()) - Hyperreal::monomial(k, 0, r.clone()))
}
