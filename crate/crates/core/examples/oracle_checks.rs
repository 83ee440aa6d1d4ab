//! Cross-checking the engine: exact brute-force partial sums and Hölder
//! means of the partial sums.

use hyperseries::text::parse_series;
use hyperseries::{
    brute_partial_sum, check_formula, check_formula_against, holder_mean, partial_sum_formula,
    standard_part_crosscheck, EvalConfig, Rational,
};

fn main() -> hyperseries::Result<()> {
    let cfg = EvalConfig::default();

    let s = parse_series("sum(i=1..omega, i^3*(1/2)^i - 2*i) with {3: 7}")?;
    let report = check_formula(&s, 200, &cfg)?;
    println!("{}", serde_json::to_string_pretty(&report).unwrap());
    println!("S(10) = {}", brute_partial_sum(&s, 10));

    // a corrupted formula is caught at its first wrong point
    let mut broken = partial_sum_formula(&s, &cfg)?;
    broken.correction += Rational::new(1, 1000);
    let report = check_formula_against(&s, &broken, 200, "corrupted");
    println!("corrupted formula: {:?}, first mismatch {:?}", report.status, report.first_mismatch);

    // Hölder means approach the standard part of convergent-in-mean series
    for (text, k) in [
        ("sum(i=1..omega, (-1)^(i+1))", 1),
        ("sum(i=1..omega, i*(-1)^(i-1))", 1),
        ("sum(i=1..omega, i*(-1)^(i-1))", 2),
        ("sum(i=1..omega, (1/2)^(i-1))", 1),
    ] {
        let s = parse_series(text)?;
        println!("{text}: Hölder-{k} mean over 10^5 terms = {:.6}", holder_mean(&s, k, 100_000));
    }
    let euler = parse_series("sum(i=1..omega, i*(-1)^(i-1))")?;
    let report = standard_part_crosscheck(&euler, 2, 100_000, 1e-2, &cfg)?;
    println!("crosscheck of {}: {:?}", report.series_id, report.status);
    Ok(())
}
