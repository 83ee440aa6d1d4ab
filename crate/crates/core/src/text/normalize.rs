//! Evaluation of parsed expressions into normalized values.
//!
//! Series bodies become sums of atoms `c * i^p * r^i`; hyperreal literals
//! become canonical [`Hyperreal`]s. Any form outside those closures (such
//! as `i^i`, `2^(i^2)` or fractional exponents) is rejected with the byte
//! offset of the offending operator.

use std::collections::BTreeMap;

use super::ast::{Expr, Node, Parser};
use crate::error::{Error, Result};
use crate::hyperreal::{HyperTerm, Hyperreal};
use crate::rational::Rational;
use crate::series::{SeriesAtom, SeriesExpr};

const MAX_EXPONENT: i64 = 1024;
const MAX_TERMS: usize = 4096;
const MAX_BITS: u64 = 1 << 16;

fn unsupported(offset: usize, message: impl Into<String>) -> Error {
    Error::UnsupportedForm {
        offset,
        message: message.into(),
    }
}

fn bits(q: &Rational) -> u64 {
    q.numer().bits().max(q.denom().bits())
}

fn check_size(q: &Rational, offset: usize) -> Result<()> {
    if bits(q) > MAX_BITS {
        return Err(unsupported(offset, "number too large"));
    }
    Ok(())
}

fn small_integer(q: &Rational, offset: usize) -> Result<i64> {
    let e = q
        .to_i64()
        .ok_or_else(|| unsupported(offset, "exponent must be an integer"))?;
    if e.abs() > MAX_EXPONENT {
        return Err(unsupported(offset, format!("exponent magnitude above {MAX_EXPONENT}")));
    }
    Ok(e)
}

fn const_pow(c: &Rational, e: i64, offset: usize) -> Result<Rational> {
    if c.is_zero() && e < 0 {
        return Err(unsupported(offset, "division by zero"));
    }
    if bits(c).saturating_mul(e.unsigned_abs()) > MAX_BITS {
        return Err(unsupported(offset, "number too large"));
    }
    c.pow(e)
}

/// The arithmetic shared by both value domains.
trait Algebra: Sized + Clone {
    fn constant(c: Rational) -> Self;
    fn variable(name: &str, offset: usize) -> Result<Self>;
    fn as_constant(&self) -> Option<Rational>;
    fn add(&self, rhs: &Self) -> Self;
    fn scale(&self, c: &Rational) -> Self;
    fn mul(&self, rhs: &Self, offset: usize) -> Result<Self>;
    fn div(&self, rhs: &Self, offset: usize) -> Result<Self>;
    fn pow(&self, exp: &Self, offset: usize) -> Result<Self>;

    fn pow_nonneg(&self, e: i64, offset: usize) -> Result<Self> {
        let mut result = Self::constant(Rational::one());
        let mut base = self.clone();
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base, offset)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base, offset)?;
            }
        }
        Ok(result)
    }
}

fn eval<A: Algebra>(e: &Expr) -> Result<A> {
    Ok(match &e.node {
        Node::Int(v) => {
            let q = Rational::from(v.clone());
            check_size(&q, e.offset)?;
            A::constant(q)
        }
        Node::Var(name) => A::variable(name, e.offset)?,
        Node::Neg(x) => eval::<A>(x)?.scale(&Rational::integer(-1)),
        Node::Add(a, b) => eval::<A>(a)?.add(&eval(b)?),
        Node::Sub(a, b) => eval::<A>(a)?.add(&eval::<A>(b)?.scale(&Rational::integer(-1))),
        Node::Mul(a, b) => eval::<A>(a)?.mul(&eval(b)?, e.offset)?,
        Node::Div(a, b) => eval::<A>(a)?.div(&eval(b)?, e.offset)?,
        Node::Pow(a, b) => eval::<A>(a)?.pow(&eval(b)?, e.offset)?,
    })
}

/// A general term `Σ c * i^p * r^i`, keyed by `(p, r)`.
#[derive(Clone, Debug, PartialEq)]
struct GeneralTerm(BTreeMap<(u32, Rational), Rational>);

impl GeneralTerm {
    fn from_pairs<I: IntoIterator<Item = ((u32, Rational), Rational)>>(pairs: I) -> Self {
        let mut map: BTreeMap<(u32, Rational), Rational> = BTreeMap::new();
        for (k, c) in pairs {
            *map.entry(k).or_insert_with(Rational::zero) += c;
        }
        map.retain(|_, c| !c.is_zero());
        GeneralTerm(map)
    }

    /// `c * r^i` with no index power.
    fn as_exponential(&self) -> Option<(Rational, Rational)> {
        match self.0.iter().collect::<Vec<_>>().as_slice() {
            [((0, r), c)] => Some(((*c).clone(), r.clone())),
            _ => None,
        }
    }

    /// `a * i + k` with integer `a` and `k`.
    fn as_affine_index(&self, offset: usize) -> Result<Option<(i64, i64)>> {
        let one = Rational::one();
        let mut a = Rational::zero();
        let mut k = Rational::zero();
        for ((p, r), c) in &self.0 {
            match (p, r == &one) {
                (0, true) => k = c.clone(),
                (1, true) => a = c.clone(),
                _ => return Ok(None),
            }
        }
        Ok(Some((small_integer(&a, offset)?, small_integer(&k, offset)?)))
    }
}

impl Algebra for GeneralTerm {
    fn constant(c: Rational) -> Self {
        Self::from_pairs([((0, Rational::one()), c)])
    }

    fn variable(name: &str, offset: usize) -> Result<Self> {
        match name {
            "i" => Ok(Self::from_pairs([((1, Rational::one()), Rational::one())])),
            "w" | "omega" => Err(unsupported(
                offset,
                format!("`{name}` cannot appear inside a series term"),
            )),
            _ => Err(Error::Syntax {
                offset,
                message: format!("unknown variable `{name}`"),
            }),
        }
    }

    fn as_constant(&self) -> Option<Rational> {
        match self.0.len() {
            0 => Some(Rational::zero()),
            1 => self.0.get(&(0, Rational::one())).cloned(),
            _ => None,
        }
    }

    fn add(&self, rhs: &Self) -> Self {
        Self::from_pairs(self.0.clone().into_iter().chain(rhs.0.clone()))
    }

    fn scale(&self, c: &Rational) -> Self {
        Self::from_pairs(self.0.iter().map(|(k, v)| (k.clone(), v * c)))
    }

    fn mul(&self, rhs: &Self, offset: usize) -> Result<Self> {
        let mut pairs = Vec::with_capacity(self.0.len() * rhs.0.len());
        for ((p1, r1), c1) in &self.0 {
            for ((p2, r2), c2) in &rhs.0 {
                let power = p1 + p2;
                if power as i64 > MAX_EXPONENT {
                    return Err(unsupported(offset, "polynomial degree too large"));
                }
                let ratio = r1 * r2;
                let coeff = c1 * c2;
                check_size(&ratio, offset)?;
                check_size(&coeff, offset)?;
                pairs.push(((power, ratio), coeff));
            }
        }
        let out = Self::from_pairs(pairs);
        if out.0.len() > MAX_TERMS {
            return Err(unsupported(offset, "expression expands to too many terms"));
        }
        Ok(out)
    }

    fn div(&self, rhs: &Self, offset: usize) -> Result<Self> {
        if let Some(c) = rhs.as_constant() {
            let inv = c
                .recip()
                .map_err(|_| unsupported(offset, "division by zero"))?;
            return Ok(self.scale(&inv));
        }
        if let Some((c, r)) = rhs.as_exponential() {
            let inv = Self::from_pairs([((0, r.recip()?), c.recip()?)]);
            return self.mul(&inv, offset);
        }
        Err(unsupported(offset, "can only divide by a constant or by c*r^i"))
    }

    fn pow(&self, exp: &Self, offset: usize) -> Result<Self> {
        if let Some(e) = exp.as_constant() {
            let e = small_integer(&e, offset)?;
            if e >= 0 {
                return self.pow_nonneg(e, offset);
            }
            if let Some(c) = self.as_constant() {
                return Ok(Self::constant(const_pow(&c, e, offset)?));
            }
            if let Some((c, r)) = self.as_exponential() {
                let coeff = const_pow(&c, e, offset)?;
                let ratio = const_pow(&r, e, offset)?;
                return Ok(Self::from_pairs([((0, ratio), coeff)]));
            }
            return Err(unsupported(offset, "negative powers need a constant base"));
        }
        let Some((a, k)) = exp.as_affine_index(offset)? else {
            return Err(unsupported(
                offset,
                "exponent must be an integer or an integer multiple of i plus an integer",
            ));
        };
        let Some(base) = self.as_constant() else {
            return Err(unsupported(offset, "only constant bases can be raised to i"));
        };
        if base.is_zero() {
            return Err(unsupported(offset, "zero base raised to i"));
        }
        let coeff = const_pow(&base, k, offset)?;
        let ratio = const_pow(&base, a, offset)?;
        Ok(Self::from_pairs([((0, ratio), coeff)]))
    }
}

impl Algebra for Hyperreal {
    fn constant(c: Rational) -> Self {
        Hyperreal::from_rational(c)
    }

    fn variable(name: &str, offset: usize) -> Result<Self> {
        match name {
            "w" => Ok(Hyperreal::omega()),
            "i" | "omega" => Err(unsupported(
                offset,
                format!("`{name}` cannot appear in a hyperreal value; use `w`"),
            )),
            _ => Err(Error::Syntax {
                offset,
                message: format!("unknown variable `{name}`"),
            }),
        }
    }

    fn as_constant(&self) -> Option<Rational> {
        match self.terms() {
            [] => Some(Rational::zero()),
            [t] if t.base().is_one() && t.power() == 0 => Some(t.coeff().clone()),
            _ => None,
        }
    }

    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn scale(&self, c: &Rational) -> Self {
        Hyperreal::scale(self, c)
    }

    fn mul(&self, rhs: &Self, offset: usize) -> Result<Self> {
        if self.terms().len() * rhs.terms().len() > MAX_TERMS * 4 {
            return Err(unsupported(offset, "expression expands to too many terms"));
        }
        for a in self.terms() {
            for b in rhs.terms() {
                if (a.power() + b.power()).abs() > MAX_EXPONENT {
                    return Err(unsupported(offset, "power of w too large"));
                }
                if bits(a.coeff()) + bits(b.coeff()) > MAX_BITS
                    || bits(a.base()) + bits(b.base()) > MAX_BITS
                {
                    return Err(unsupported(offset, "number too large"));
                }
            }
        }
        let out = self * rhs;
        if out.terms().len() > MAX_TERMS {
            return Err(unsupported(offset, "expression expands to too many terms"));
        }
        Ok(out)
    }

    fn div(&self, rhs: &Self, offset: usize) -> Result<Self> {
        if rhs.is_zero() {
            return Err(unsupported(offset, "division by zero"));
        }
        if rhs.terms().len() != 1 {
            return Err(unsupported(offset, "can only divide by a single term"));
        }
        let t = &rhs.terms()[0];
        if t.power().abs() > MAX_EXPONENT {
            return Err(unsupported(offset, "power of w too large"));
        }
        self.div_monomial(rhs)
    }

    fn pow(&self, exp: &Self, offset: usize) -> Result<Self> {
        if let Some(e) = exp.as_constant() {
            let e = small_integer(&e, offset)?;
            if e >= 0 {
                return self.pow_nonneg(e, offset);
            }
            let [t] = self.terms() else {
                return Err(unsupported(
                    offset,
                    if self.is_zero() {
                        "division by zero"
                    } else {
                        "negative powers need a single-term base"
                    },
                ));
            };
            if t.power().saturating_mul(e).abs() > MAX_EXPONENT {
                return Err(unsupported(offset, "power of w too large"));
            }
            let coeff = const_pow(t.coeff(), e, offset)?;
            let base = const_pow(t.base(), e, offset)?;
            let term = HyperTerm::new(coeff, t.power() * e, base)?;
            return Ok(Hyperreal::from_terms([term]));
        }
        // exponent a*w + k
        let mut a = Rational::zero();
        let mut k = Rational::zero();
        for t in exp.terms() {
            match (t.base().is_one(), t.power()) {
                (true, 1) => a = t.coeff().clone(),
                (true, 0) => k = t.coeff().clone(),
                _ => {
                    return Err(unsupported(
                        offset,
                        "exponent must be an integer or an integer multiple of w plus an integer",
                    ))
                }
            }
        }
        let (a, k) = (small_integer(&a, offset)?, small_integer(&k, offset)?);
        let Some(base) = self.as_constant() else {
            return Err(unsupported(offset, "only constant bases can be raised to w"));
        };
        if !base.is_positive() {
            return Err(Error::NonPositiveBase {
                offset,
                message: format!("base {base} raised to w must be positive"),
            });
        }
        let coeff = const_pow(&base, k, offset)?;
        let b = const_pow(&base, a, offset)?;
        Ok(Hyperreal::monomial(coeff, 0, b))
    }
}

/// Parses `sum(i=<start>..omega, <body>) [with {<index>: <value>, …}]`.
pub fn parse_series(text: &str) -> Result<SeriesExpr> {
    let ast = Parser::new(text)?.series()?;
    let body: GeneralTerm = eval(&ast.body)?;
    let atoms = body
        .0
        .into_iter()
        .map(|((power, ratio), coeff)| SeriesAtom::new(coeff, power, ratio))
        .collect::<Result<Vec<_>>>()?;
    let mut series = SeriesExpr::from_atoms(ast.start, atoms);
    let mut seen = std::collections::BTreeSet::new();
    for (index, offset, value) in &ast.overrides {
        if !seen.insert(*index) {
            return Err(Error::Syntax {
                offset: *offset,
                message: format!("duplicate override for index {index}"),
            });
        }
        if *index < ast.start {
            return Err(Error::BadBounds {
                offset: *offset,
                message: format!("override index {index} precedes the start {}", ast.start),
            });
        }
        let v = eval::<GeneralTerm>(value)?
            .as_constant()
            .ok_or_else(|| unsupported(value.offset, "override values must be constants"))?;
        series = series.with_override(*index, v)?;
    }
    Ok(series)
}

/// Parses a hyperreal literal such as `w^2/2 + w/2` or `2 - 2*(1/2)^w`.
pub fn parse_hyperreal(text: &str) -> Result<Hyperreal> {
    let mut parser = Parser::new(text)?;
    let e = parser.expr()?;
    parser.expect_end()?;
    eval(&e)
}

/// Parses a plain rational such as `3`, `-5/2` or `(1/2)^3`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let mut parser = Parser::new(text)?;
    let e = parser.expr()?;
    parser.expect_end()?;
    let g: GeneralTerm = eval(&e)?;
    g.as_constant()
        .ok_or_else(|| unsupported(e.offset, "expected a constant"))
}
