//! Hyperreal values: construction, ordering by dominance, principal
//! values and halos.

use hyperseries::text::parse_hyperreal;
use hyperseries::{Hyperreal, Rational};

fn main() -> hyperseries::Result<()> {
    let w = Hyperreal::omega();
    let one = Hyperreal::one();

    // w and w + 1 are distinct, but share a principal value
    let bumped = &w + &one;
    println!("w < w + 1: {}", w < bumped);
    println!("w ~ w + 1: {}", w.same_halo(&bumped));

    // exponential terms dominate any power of w
    let two_w = Hyperreal::monomial(Rational::one(), 0, Rational::integer(2));
    let big_poly = w.pow(50)?;
    println!("w^50 < 2^w: {}", big_poly < two_w);

    // (1/2)^w is infinitesimal: below every positive rational
    let tiny = Hyperreal::monomial(Rational::one(), 0, Rational::new(1, 2));
    let eps = Hyperreal::from(Rational::new(1, 1_000_000));
    println!("0 < (1/2)^w < 1/1000000: {}", Hyperreal::zero() < tiny && tiny < eps);

    // principal value and standard part
    let x = parse_hyperreal("w^2 - 12*w + 23")?;
    println!("{x}: principal {}, standard part {:?}", x.principal_value(), x.standard_part());
    let y = parse_hyperreal("2 - 2*(1/2)^w")?;
    println!("{y}: principal {}, standard part {}", y.principal_value(), y.standard_part().unwrap());

    // ratio of principal values: (w^2/2 + w/2) / (w^2 + w) ~ 1/2
    let a = parse_hyperreal("w^2/2 + w/2")?;
    let b = parse_hyperreal("w^2 + w")?;
    println!("({a}) / ({b}) ~ {}", a.ratio_principal(&b)?);

    // exact products
    println!("(w + 1)^3 = {}", bumped.pow(3)?);
    println!("(w - 1)(w + 1) = {}", (&w - &one) * bumped);
    Ok(())
}
