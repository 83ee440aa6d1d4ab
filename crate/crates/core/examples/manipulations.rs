//! Finite manipulations and how each one moves the value at w.

use std::collections::BTreeMap;

use hyperseries::text::parse_series;
use hyperseries::{sum_series, EvalConfig, Hyperreal, Rational, SeriesExpr};

fn value(s: &SeriesExpr) -> hyperseries::Result<Hyperreal> {
    sum_series(s, &EvalConfig::default())
}

fn main() -> hyperseries::Result<()> {
    let naturals = parse_series("sum(i=1..omega, i)")?;
    println!("{naturals} = {}", value(&naturals)?);

    // adding A into finite terms adds exactly A
    let a = Rational::integer(10);
    let mut spread = BTreeMap::new();
    spread.insert(1, Rational::new(2, 5) * &a);
    spread.insert(2, Rational::new(3, 5) * &a);
    let s = naturals.add_scalar_into_terms(&spread)?;
    println!("{s} = {}", value(&s)?);

    // 1 + 2 + 3 + ... = 1 + (0 + 2 + 3 + ...) = 1 + sum from 2
    let (zeroed, one) = naturals.remove_term_to_zero(1)?;
    println!("{one} + [{zeroed}] = {}", Hyperreal::from(one.clone()) + value(&zeroed)?);
    let from_two = naturals.reindex_start(2)?;
    let total = Hyperreal::from(one.clone()) + value(&from_two)?;
    println!("{one} + [{from_two}] = {total}");

    // ... but 1 + (2 + 3 + 4 + ...) with w terms is larger, in the same halo
    let bumped = parse_series("sum(i=1..omega, i + 1)")?;
    let v = Hyperreal::one() + value(&bumped)?;
    println!("1 + [{bumped}] = {v}  (same halo: {})", v.same_halo(&value(&naturals)?));

    // the start index changes the value: 1+1+1+... from 0, 1 and 2
    for start in [0, 1, 2] {
        let ones = parse_series(&format!("sum(i={start}..omega, 1)"))?;
        println!("{ones} = {}", value(&ones)?);
    }

    // permuting finitely many terms leaves the value alone
    let moved = naturals.rearrange_finite(&[(1, 3), (2, 1), (3, 2)])?;
    println!("{moved} = {}", value(&moved)?);

    // scaling and termwise addition are linear
    let odds = parse_series("sum(i=1..omega, 2*i - 1)")?;
    let sum = naturals.series_add(&odds)?;
    println!("{sum} = {}", value(&sum)?);
    println!("3 * {odds} = {}", value(&odds.scalar_mul(&Rational::integer(3)))?);

    // series with different bounds cannot be added termwise
    let from_zero = parse_series("sum(i=0..omega, i)")?;
    if let Err(e) = naturals.series_add(&from_zero) {
        println!("{naturals} + {from_zero}: {e}");
    }
    Ok(())
}
