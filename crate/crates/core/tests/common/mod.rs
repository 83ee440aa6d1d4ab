#![allow(dead_code)]

use hyperseries::{HyperTerm, Hyperreal, Rational, SeriesAtom, SeriesExpr};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

pub const RATIOS: [(i64, i64); 5] = [(-1, 1), (1, 1), (1, 2), (2, 1), (3, 1)];
pub const BASES: [(i64, i64); 5] = [(1, 3), (1, 2), (1, 1), (2, 1), (3, 1)];

pub fn small_rational<R: Rng>(rng: &mut R) -> Rational {
    let n = rng.gen_range(-9..=9);
    let d = rng.gen_range(1..=6);
    q(n, d)
}

pub fn nonzero_rational<R: Rng>(rng: &mut R) -> Rational {
    loop {
        let c = small_rational(rng);
        if !c.is_zero() {
            return c;
        }
    }
}

/// Atoms with power <= 4 and ratio in {-1, 1, 1/2, 2, 3}, plus up to three
/// overrides near the start.
pub fn random_series<R: Rng>(rng: &mut R, start: i64) -> SeriesExpr {
    random_series_with(rng, start, &RATIOS)
}

pub fn random_series_with<R: Rng>(rng: &mut R, start: i64, ratios: &[(i64, i64)]) -> SeriesExpr {
    let atoms: Vec<SeriesAtom> = (0..rng.gen_range(1..=3))
        .map(|_| {
            let (rn, rd) = *ratios.choose(rng).unwrap();
            SeriesAtom::new(nonzero_rational(rng), rng.gen_range(0..=4), q(rn, rd)).unwrap()
        })
        .collect();
    let mut s = SeriesExpr::from_atoms(start, atoms);
    for _ in 0..rng.gen_range(0..=3) {
        let i = start + rng.gen_range(0..10);
        s = s.with_override(i, small_rational(rng)).unwrap();
    }
    s
}

pub fn random_start<R: Rng>(rng: &mut R) -> i64 {
    *[1, 1, 1, 0, 2, -1].choose(rng).unwrap()
}

pub fn random_hyperreal<R: Rng>(rng: &mut R) -> Hyperreal {
    Hyperreal::from_terms((0..rng.gen_range(0..=4)).map(|_| {
        let (bn, bd) = *BASES.choose(rng).unwrap();
        HyperTerm::new(nonzero_rational(rng), rng.gen_range(-3..=3), q(bn, bd)).unwrap()
    }))
}

pub fn omega_poly(coeffs: &[(i64, i64)]) -> Hyperreal {
    Hyperreal::from_terms(
        coeffs
            .iter()
            .enumerate()
            .map(|(p, &(n, d))| HyperTerm::new(q(n, d), p as i64, q(1, 1)).unwrap()),
    )
}
