//! Canonical text rendering for hyperreals and series.
//!
//! Output always parses back to the same value. Rationals print as `p/q`,
//! hyperreal terms in descending dominance, e.g. `w^2/2 + w/2` or
//! `2 - 2*(1/2)^w`.

use std::fmt::{self, Write};

use crate::hyperreal::Hyperreal;
use crate::rational::Rational;
use crate::series::SeriesExpr;

/// Writes `c * monomial` with its sign as a separator (` + `, ` - `) or,
/// for the first term, a bare leading `-`.
pub(crate) fn write_signed_term<W: Write>(
    out: &mut W,
    c: &Rational,
    monomial: &str,
    first: bool,
) -> fmt::Result {
    match (first, c.is_negative()) {
        (true, true) => out.write_char('-')?,
        (true, false) => {}
        (false, true) => out.write_str(" - ")?,
        (false, false) => out.write_str(" + ")?,
    }
    let abs = c.abs();
    if monomial.is_empty() {
        return write!(out, "{abs}");
    }
    let numer = abs.numer();
    let denom = abs.denom();
    let unit_numer = *numer == 1.into();
    let unit_denom = *denom == 1.into();
    match (unit_numer, unit_denom) {
        (true, true) => write!(out, "{monomial}"),
        (false, true) => write!(out, "{numer}*{monomial}"),
        (true, false) => write!(out, "{monomial}/{denom}"),
        (false, false) => write!(out, "{numer}*{monomial}/{denom}"),
    }
}

/// `r` as an exponent base: bare for positive integers, parenthesized
/// otherwise.
fn base_text(r: &Rational) -> String {
    if r.is_integer() && r.is_positive() {
        r.to_string()
    } else {
        format!("({r})")
    }
}

/// `var^power * base^var`, omitting unit factors.
fn monomial_text(var: &str, power: i64, base: &Rational) -> String {
    let mut parts = Vec::with_capacity(2);
    match power {
        0 => {}
        1 => parts.push(var.to_string()),
        p => parts.push(format!("{var}^{p}")),
    }
    if !base.is_one() {
        parts.push(format!("{}^{var}", base_text(base)));
    }
    parts.join("*")
}

pub(crate) fn write_hyperreal<W: Write>(out: &mut W, x: &Hyperreal) -> fmt::Result {
    if x.is_zero() {
        return out.write_char('0');
    }
    for (k, t) in x.terms().iter().enumerate() {
        let monomial = monomial_text("w", t.power(), t.base());
        write_signed_term(out, t.coeff(), &monomial, k == 0)?;
    }
    Ok(())
}

pub fn format_hyperreal(x: &Hyperreal) -> String {
    x.to_string()
}

/// The general term alone, e.g. `i^2 + (-1)^i/2`.
pub fn format_general_term(s: &SeriesExpr) -> String {
    let mut out = String::new();
    let mut atoms: Vec<_> = s.atoms().collect();
    // larger powers first, then ratios descending
    atoms.sort_by(|a, b| (b.power, &b.ratio).cmp(&(a.power, &a.ratio)));
    for (k, a) in atoms.iter().enumerate() {
        let monomial = monomial_text("i", a.power as i64, &a.ratio);
        write_signed_term(&mut out, &a.coeff, &monomial, k == 0).expect("string write");
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn format_series(s: &SeriesExpr) -> String {
    let mut out = format!("sum(i={}..omega, {})", s.start(), format_general_term(s));
    if !s.overrides().is_empty() {
        let entries: Vec<String> = s
            .overrides()
            .iter()
            .map(|(i, v)| format!("{i}: {v}"))
            .collect();
        write!(out, " with {{{}}}", entries.join(", ")).expect("string write");
    }
    out
}

impl fmt::Display for SeriesExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_series(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::SeriesAtom;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn hyperreal_rendering() {
        let one = q(1, 1);
        let tri = Hyperreal::monomial(q(1, 2), 2, one.clone()) + Hyperreal::monomial(q(1, 2), 1, one.clone());
        assert_eq!(format_hyperreal(&tri), "w^2/2 + w/2");
        assert_eq!(format_hyperreal(&Hyperreal::from(q(1, 4))), "1/4");
        let pow2 = Hyperreal::monomial(one.clone(), 0, q(2, 1)) - Hyperreal::one();
        assert_eq!(format_hyperreal(&pow2), "2^w - 1");
        let conv = Hyperreal::from(2) - Hyperreal::monomial(q(2, 1), 0, q(1, 2));
        assert_eq!(format_hyperreal(&conv), "2 - 2*(1/2)^w");
        assert_eq!(format_hyperreal(&Hyperreal::zero()), "0");
        let mixed = Hyperreal::monomial(q(-3, 2), -1, q(3, 1));
        assert_eq!(format_hyperreal(&mixed), "-3*w^-1*3^w/2");
        let shifted = Hyperreal::monomial(q(1, 2), 2, one.clone()) + Hyperreal::monomial(q(3, 2), 1, one);
        assert_eq!(format_hyperreal(&shifted), "w^2/2 + 3*w/2");
    }

    #[test]
    fn series_rendering() {
        let grandi = SeriesExpr::from_atoms(1, [SeriesAtom::new(q(-1, 1), 0, q(-1, 1)).unwrap()]);
        assert_eq!(format_series(&grandi), "sum(i=1..omega, -(-1)^i)");
        let s = SeriesExpr::from_atoms(
            0,
            [
                SeriesAtom::poly(q(2, 1), 2),
                SeriesAtom::new(q(-1, 3), 1, q(1, 2)).unwrap(),
            ],
        )
        .with_override(4, q(-5, 2))
        .unwrap();
        assert_eq!(
            format_series(&s),
            "sum(i=0..omega, 2*i^2 - i*(1/2)^i/3) with {4: -5/2}"
        );
        assert_eq!(format_series(&SeriesExpr::zero(1)), "sum(i=1..omega, 0)");
    }
}
