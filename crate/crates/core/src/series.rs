//! Symbolic infinite series summed from a start index up to `w`.
//!
//! A series has a general term `g(i) = Σ c * i^p * r^i` plus a finite map
//! of per-index overrides. Finite manipulations (adding into terms,
//! removing terms, rearranging) only touch the overrides, so the general
//! term and therefore the long-run behaviour stay put.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::rational::Rational;

/// The general-term building block `coeff * i^power * ratio^i`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SeriesAtom {
    pub coeff: Rational,
    pub power: u32,
    pub ratio: Rational,
}

impl SeriesAtom {
    pub fn new(coeff: Rational, power: u32, ratio: Rational) -> Result<Self> {
        if ratio.is_zero() {
            return Err(Error::ZeroRatio);
        }
        Ok(SeriesAtom { coeff, power, ratio })
    }

    /// `coeff * i^power`
    pub fn poly(coeff: Rational, power: u32) -> Self {
        SeriesAtom {
            coeff,
            power,
            ratio: Rational::one(),
        }
    }

    pub fn at(&self, i: i64) -> Rational {
        let ratio_pow = self.ratio.pow(i).expect("nonzero ratio");
        &self.coeff * Rational::integer(i).powu(self.power) * ratio_pow
    }
}

/// Which alternate positions [`SeriesExpr::blank_alternate`] keeps.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Parity {
    Even,
    Odd,
}

/// Where [`SeriesExpr::stretch2`] places the original terms.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Slots {
    /// term `j` goes to position `2j - 1`
    Odd,
    /// term `j` goes to position `2j`
    Even,
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SeriesExpr {
    start: i64,
    atoms: BTreeMap<(u32, Rational), Rational>,
    overrides: BTreeMap<i64, Rational>,
}

impl SeriesExpr {
    /// The series with every term zero.
    pub fn zero(start: i64) -> Self {
        SeriesExpr {
            start,
            atoms: BTreeMap::new(),
            overrides: BTreeMap::new(),
        }
    }

    pub fn from_atoms<I: IntoIterator<Item = SeriesAtom>>(start: i64, atoms: I) -> Self {
        let mut s = Self::zero(start);
        for a in atoms {
            s.push_atom(a.coeff, a.power, a.ratio);
        }
        s.normalize();
        s
    }

    /// Adds an override, validating the index against the start.
    pub fn with_override(mut self, index: i64, value: Rational) -> Result<Self> {
        self.check_index(index)?;
        self.overrides.insert(index, value);
        self.normalize();
        Ok(self)
    }

    /// `a + (i - 1) d`, the arithmetic series from index 1.
    pub fn arithmetic(a: Rational, d: Rational) -> Self {
        Self::from_atoms(
            1,
            [
                SeriesAtom::poly(&a - &d, 0),
                SeriesAtom::poly(d, 1),
            ],
        )
    }

    /// `a * r^(i - 1)`, the geometric series from index 1.
    pub fn geometric(a: Rational, r: Rational) -> Result<Self> {
        let coeff = a.checked_div(&r).map_err(|_| Error::ZeroRatio)?;
        Ok(Self::from_atoms(1, [SeriesAtom::new(coeff, 0, r)?]))
    }

    pub fn start(&self) -> i64 {
        self.start
    }

    pub fn atoms(&self) -> impl Iterator<Item = SeriesAtom> + '_ {
        self.atoms.iter().map(|((power, ratio), coeff)| SeriesAtom {
            coeff: coeff.clone(),
            power: *power,
            ratio: ratio.clone(),
        })
    }

    pub fn overrides(&self) -> &BTreeMap<i64, Rational> {
        &self.overrides
    }

    pub fn is_zero_series(&self) -> bool {
        self.atoms.is_empty() && self.overrides.is_empty()
    }

    /// Largest index power among the atoms.
    pub fn max_power(&self) -> Option<u32> {
        self.atoms.keys().map(|(p, _)| *p).max()
    }

    /// `g(i)`, ignoring overrides.
    pub fn general_term(&self, i: i64) -> Rational {
        self.atoms().map(|a| a.at(i)).sum()
    }

    pub fn term_at(&self, i: i64) -> Result<Rational> {
        self.check_index(i)?;
        Ok(self
            .overrides
            .get(&i)
            .cloned()
            .unwrap_or_else(|| self.general_term(i)))
    }

    pub fn scalar_mul(&self, c: &Rational) -> Self {
        let mut s = self.clone();
        for v in s.atoms.values_mut() {
            *v = &*v * c;
        }
        for v in s.overrides.values_mut() {
            *v = &*v * c;
        }
        s.normalize();
        s
    }

    /// Term-by-term sum; both series must start at the same index.
    pub fn series_add(&self, other: &SeriesExpr) -> Result<Self> {
        if self.start != other.start {
            return Err(Error::BoundMismatch {
                left: self.start,
                right: other.start,
            });
        }
        let mut s = self.clone();
        for ((p, r), c) in &other.atoms {
            s.push_atom(c.clone(), *p, r.clone());
        }
        let indices: BTreeSet<i64> = self
            .overrides
            .keys()
            .chain(other.overrides.keys())
            .copied()
            .collect();
        s.overrides = indices
            .into_iter()
            .map(|i| Ok((i, self.term_at(i)? + other.term_at(i)?)))
            .collect::<Result<_>>()?;
        s.normalize();
        Ok(s)
    }

    /// Adds `amount` into the term at each listed index. The series value
    /// grows by exactly the total distributed.
    pub fn add_scalar_into_terms(&self, distribution: &BTreeMap<i64, Rational>) -> Result<Self> {
        let mut s = self.clone();
        for (&i, amount) in distribution {
            let term = self.term_at(i)?;
            s.overrides.insert(i, term + amount);
        }
        s.normalize();
        Ok(s)
    }

    /// Replaces the term at `i` with zero and returns it alongside the new
    /// series, so that `value(self) = value(result) + extracted`.
    pub fn remove_term_to_zero(&self, i: i64) -> Result<(Self, Rational)> {
        let extracted = self.term_at(i)?;
        let mut s = self.clone();
        s.overrides.insert(i, Rational::zero());
        s.normalize();
        Ok((s, extracted))
    }

    /// Moves the term at each `from` to the matching `to`. The `from` and
    /// `to` sides must each list the same finite index set once.
    pub fn rearrange_finite(&self, moves: &[(i64, i64)]) -> Result<Self> {
        let sources: BTreeSet<i64> = moves.iter().map(|m| m.0).collect();
        let targets: BTreeSet<i64> = moves.iter().map(|m| m.1).collect();
        if sources.len() != moves.len() || targets.len() != moves.len() {
            return Err(Error::NotAPermutation("an index appears twice".into()));
        }
        if sources != targets {
            return Err(Error::NotAPermutation(
                "source and target index sets differ".into(),
            ));
        }
        let mut s = self.clone();
        for &(from, to) in moves {
            s.check_index(to)?;
            s.overrides.insert(to, self.term_at(from)?);
        }
        s.normalize();
        Ok(s)
    }

    /// Multiplies the general term by the blanking factor
    /// `((-1)^(i+δ) + 1) / 2`, zeroing every other position.
    pub fn blank_alternate(&self, keep: Parity) -> Self {
        let sign = match keep {
            Parity::Even => Rational::one(),
            Parity::Odd => Rational::integer(-1),
        };
        let half = Rational::new(1, 2);
        let mut s = Self::zero(self.start);
        for a in self.atoms() {
            let c = &a.coeff * &half;
            s.push_atom(c.clone(), a.power, a.ratio.clone());
            s.push_atom(&c * &sign, a.power, -&a.ratio);
        }
        let kept = |i: i64| (i.rem_euclid(2) == 0) == (keep == Parity::Even);
        s.overrides = self
            .overrides
            .iter()
            .map(|(&i, v)| (i, if kept(i) { v.clone() } else { Rational::zero() }))
            .collect();
        s.normalize();
        s
    }

    /// Spreads the terms out with zeros in between: term `j` moves to
    /// position `2j - 1` or `2j`. The new series starts at `2 * start - 1`.
    /// Only purely polynomial series are supported; stretching `r^i` would
    /// need `sqrt(r)`.
    pub fn stretch2(&self, phase: Slots) -> Result<Self> {
        if let Some(((_, r), _)) = self.atoms.iter().find(|((_, r), _)| !r.is_one()) {
            return Err(Error::UnsupportedRatio(r.clone()));
        }
        if let Some((&i, _)) = self.overrides.iter().next() {
            return Err(Error::UnsupportedOverride(i));
        }
        let g = Poly::from_coeffs(
            (0..=self.max_power().unwrap_or(0))
                .map(|p| {
                    self.atoms
                        .get(&(p, Rational::one()))
                        .cloned()
                        .unwrap_or_else(Rational::zero)
                })
                .collect(),
        );
        // odd slots: t(i) = g((i+1)/2) * (1 - (-1)^i)/2
        // even slots: t(i) = g(i/2) * (1 + (-1)^i)/2
        let half = Rational::new(1, 2);
        let (offset, sign) = match phase {
            Slots::Odd => (half.clone(), Rational::integer(-1)),
            Slots::Even => (Rational::zero(), Rational::one()),
        };
        let composed = g.compose_affine(&half, &offset);
        let mut s = Self::zero(2 * self.start - 1);
        for (k, c) in composed.coeffs().iter().enumerate() {
            let c = c * &half;
            s.push_atom(c.clone(), k as u32, Rational::one());
            s.push_atom(&c * &sign, k as u32, Rational::integer(-1));
        }
        s.normalize();
        Ok(s)
    }

    /// Same general term, new start index. Overrides must stay in range.
    pub fn reindex_start(&self, new_start: i64) -> Result<Self> {
        if let Some((&i, _)) = self.overrides.iter().find(|(&i, _)| i < new_start) {
            return Err(Error::UnsupportedOverride(i));
        }
        let mut s = self.clone();
        s.start = new_start;
        Ok(s)
    }

    fn check_index(&self, i: i64) -> Result<()> {
        if i < self.start {
            return Err(Error::IndexBeforeStart {
                index: i,
                start: self.start,
            });
        }
        Ok(())
    }

    fn push_atom(&mut self, coeff: Rational, power: u32, ratio: Rational) {
        *self
            .atoms
            .entry((power, ratio))
            .or_insert_with(Rational::zero) += coeff;
    }

    /// Drops zero atoms and overrides that agree with the general term.
    fn normalize(&mut self) {
        self.atoms.retain(|_, c| !c.is_zero());
        let overrides = std::mem::take(&mut self.overrides);
        self.overrides = overrides
            .into_iter()
            .filter(|(i, v)| *v != self.general_term(*i))
            .collect();
    }
}
