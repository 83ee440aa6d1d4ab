//! Named series with their known values at `w`.

/// A series in text form with the value it must sum to.
#[derive(Clone, Copy, Debug)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub series: &'static str,
    pub value: &'static str,
}

const fn entry(name: &'static str, series: &'static str, value: &'static str) -> CatalogEntry {
    CatalogEntry {
        name,
        series,
        value,
    }
}

pub const CATALOG: &[CatalogEntry] = &[
    entry("ones", "sum(i=1..omega, 1)", "w"),
    entry("naturals", "sum(i=1..omega, i)", "w^2/2 + w/2"),
    entry("odds", "sum(i=1..omega, 2*i - 1)", "w^2"),
    entry("evens", "sum(i=1..omega, 2*i)", "w^2 + w"),
    entry("powers-of-two", "sum(i=1..omega, 2^(i-1))", "2^w - 1"),
    entry("halving", "sum(i=1..omega, (1/2)^(i-1))", "2 - 2*(1/2)^w"),
    entry("grandi", "sum(i=1..omega, (-1)^(i+1))", "1/2"),
    entry("grandi-negated", "sum(i=1..omega, (-1)^i)", "-1/2"),
    entry(
        "blanked-naturals",
        "sum(i=1..omega, i*(((-1)^i+1)/2))",
        "w^2/4 + w/4 - 1/8",
    ),
    entry("euler", "sum(i=1..omega, i*(-1)^(i-1))", "1/4"),
    entry("euler-zero-prepended", "sum(i=1..omega, (i-1)*(-1)^i)", "1/4"),
    entry("one-zero", "sum(i=1..omega, ((-1)^(i+1)+1)/2)", "w/2 + 1/4"),
    entry("zero-one", "sum(i=1..omega, ((-1)^i+1)/2)", "w/2 - 1/4"),
    entry("ones-from-zero", "sum(i=0..omega, 1)", "w + 1"),
    entry("naturals-from-two", "sum(i=2..omega, i)", "w^2/2 + w/2 - 1"),
    entry("shifted-naturals", "sum(i=1..omega, i+1)", "w^2/2 + 3*w/2"),
    entry("naturals-first-removed", "sum(i=1..omega, i) with {1: 0}", "w^2/2 + w/2 - 1"),
    entry("squares", "sum(i=1..omega, i^2)", "w^3/3 + w^2/2 + w/6"),
    entry("zero", "sum(i=1..omega, 0)", "0"),
];

pub fn find(name: &str) -> Option<&'static CatalogEntry> {
    CATALOG.iter().find(|e| e.name == name)
}
