//! The named catalog of series, each summed at w.

use hyperseries::catalog::CATALOG;
use hyperseries::text::parse_series;
use hyperseries::{sum_series, EvalConfig};

fn main() -> hyperseries::Result<()> {
    let cfg = EvalConfig::default();
    let width = CATALOG.iter().map(|e| e.series.len()).max().unwrap_or(0);
    for entry in CATALOG {
        let value = sum_series(&parse_series(entry.series)?, &cfg)?;
        let std = value
            .standard_part()
            .map(|c| c.to_string())
            .unwrap_or_else(|| "infinite".into());
        println!("{:<width$}  = {value}   [{std}]", entry.series);
    }
    Ok(())
}
