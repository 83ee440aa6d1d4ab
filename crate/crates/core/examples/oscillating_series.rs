//! Series built from (-1)^i: Grandi's series, alternating naturals,
//! blanking every other term and spacing terms out with zeros.

use hyperseries::text::parse_series;
use hyperseries::{sum_series, EvalConfig, NegBaseMode, Parity, SeriesExpr, Slots};

fn show(label: &str, s: &SeriesExpr) -> hyperseries::Result<()> {
    let first: Vec<String> = (s.start()..s.start() + 6)
        .map(|i| s.term_at(i).map(|t| t.to_string()))
        .collect::<Result<_, _>>()?;
    let v = sum_series(s, &EvalConfig::default())?;
    println!("{label:<22} {}, ... -> {v}", first.join(", "));
    Ok(())
}

fn main() -> hyperseries::Result<()> {
    show("grandi", &parse_series("sum(i=1..omega, (-1)^(i+1))")?)?;
    show("grandi negated", &parse_series("sum(i=1..omega, (-1)^i)")?)?;
    show("alternating naturals", &parse_series("sum(i=1..omega, i*(-1)^(i-1))")?)?;
    show("zero prepended", &parse_series("sum(i=1..omega, (i-1)*(-1)^i)")?)?;

    let naturals = parse_series("sum(i=1..omega, i)")?;
    let evens_only = naturals.blank_alternate(Parity::Even);
    show("odd terms blanked", &evens_only)?;
    println!("  as a series: {evens_only}");
    show("2 + 4 + 6 + ...", &parse_series("sum(i=1..omega, 2*i)")?)?;

    // spacing 1+1+1+... out with zeros, on either side
    let ones = parse_series("sum(i=1..omega, 1)")?;
    show("ones in odd slots", &ones.stretch2(Slots::Odd)?)?;
    show("ones in even slots", &ones.stretch2(Slots::Even)?)?;

    // (-1/2)^i needs the conjecture mode; (-2)^i has no value at all
    let half = parse_series("sum(i=1..omega, (-1/2)^i)")?;
    let conjecture = EvalConfig::new(NegBaseMode::ConjectureExtended, 16)?;
    match sum_series(&half, &EvalConfig::default()) {
        Ok(v) => println!("{half} = {v}"),
        Err(e) => println!("{half}: {e}"),
    }
    println!("{half} = {} (conjecture mode)", sum_series(&half, &conjecture)?);
    let double = parse_series("sum(i=1..omega, (-2)^i)")?;
    if let Err(e) = sum_series(&double, &conjecture) {
        println!("{double}: {e}");
    }
    Ok(())
}
