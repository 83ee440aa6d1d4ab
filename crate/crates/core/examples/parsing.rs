//! Text in and out: parsing, formatting, JSON reports and error offsets.

use hyperseries::text::{format_series, parse_hyperreal, parse_series, ValueReport};
use hyperseries::{sum_series, EvalConfig};

fn main() -> hyperseries::Result<()> {
    // bodies are normalized to sums of c*i^p*r^i
    for text in [
        "sum(i=1..omega, i*(((-1)^i+1)/2))",
        "sum(i=1..omega, (i+1)^2 - i^2)",
        "sum(i=1..omega, 3*i/(2^i))",
        "sum(i=0..omega, 2^(2*i+1)) with {0: 5}",
    ] {
        let s = parse_series(text)?;
        println!("{text}\n  -> {}", format_series(&s));
        assert_eq!(parse_series(&format_series(&s))?, s);
    }

    let v = parse_hyperreal("(w + 1)^2/2 - 3*(1/2)^w")?;
    println!("{v}");
    assert_eq!(parse_hyperreal(&v.to_string())?, v);

    let input = "sum(i=1..omega, 2^(i-1))";
    let value = sum_series(&parse_series(input)?, &EvalConfig::default())?;
    println!("{}", serde_json::to_string(&ValueReport::new(input, &value)).unwrap());

    for bad in [
        "sum(i=1..omega, 1/i)",
        "sum(i=1..n, i)",
        "sum(i=1..omega, i^i)",
        "sum(i=1..omega, i) with {0: 1}",
        "(-2)^w",
        "sum(i=1..omega, i +)",
    ] {
        let err = if bad.starts_with("sum") {
            parse_series(bad).err()
        } else {
            parse_hyperreal(bad).err()
        };
        if let Some(e) = err {
            let at = e.offset().unwrap_or(0);
            println!("{bad}\n{}^ {e}", " ".repeat(at));
        }
    }
    Ok(())
}
