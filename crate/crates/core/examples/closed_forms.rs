//! Closed-form partial sums and their evaluation at w.

use hyperseries::text::parse_series;
use hyperseries::{
    antidifference_polygeom, evaluate_at_omega, faulhaber, partial_sum_formula, EvalConfig,
    Rational,
};

fn main() -> hyperseries::Result<()> {
    let cfg = EvalConfig::default();

    for p in 0..=4 {
        println!("sum of i^{p} up to n = {}", faulhaber(p, &cfg)?.display_in("n"));
    }

    // Q with Q(n) r^n - Q(n-1) r^(n-1) = n^p r^n
    for (p, r) in [(0, Rational::integer(-1)), (1, Rational::integer(-1)), (2, Rational::integer(2))] {
        let q = antidifference_polygeom(p, &r, &cfg)?;
        println!("antidifference of n^{p} * r^n for r = {r}: ({}) * r^n", q.display_in("n"));
    }

    for text in [
        "sum(i=1..omega, i*(-1)^(i-1))",
        "sum(i=1..omega, ((-1)^i+1)/2)",
        "sum(i=1..omega, i^2*2^i)",
        "sum(i=3..omega, i) with {4: 0}",
    ] {
        let s = parse_series(text)?;
        let f = partial_sum_formula(&s, &cfg)?;
        let first: Vec<String> = (f.valid_from..f.valid_from + 5).map(|n| f.eval(n).to_string()).collect();
        println!("{text}");
        println!("  S(n) = {f}   for n >= {}", f.valid_from);
        println!("  S = {}, ...", first.join(", "));
        println!("  at w: {}", evaluate_at_omega(&f, &cfg)?);
    }

    // a tighter degree limit is enforced
    let tight = EvalConfig::new(Default::default(), 3)?;
    if let Err(e) = partial_sum_formula(&parse_series("sum(i=1..omega, i^5)")?, &tight) {
        println!("with max degree 3: {e}");
    }
    Ok(())
}
