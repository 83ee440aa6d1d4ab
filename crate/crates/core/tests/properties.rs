mod common;

use common::q;
use hyperseries::text::{format_hyperreal, format_series, parse_hyperreal, parse_series};
use hyperseries::{
    brute_partial_sum, check_formula, partial_sum_formula, sum_series, EvalConfig, HyperTerm,
    Hyperreal, Parity, Rational, SeriesAtom, SeriesExpr,
};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=7).prop_map(|(n, d)| q(n, d))
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    rational().prop_filter("non-zero", |c| !c.is_zero())
}

fn base() -> impl Strategy<Value = Rational> {
    prop::sample::select(common::BASES.to_vec()).prop_map(|(n, d)| q(n, d))
}

fn term() -> impl Strategy<Value = HyperTerm> {
    (nonzero_rational(), -3i64..=3, base()).prop_map(|(c, p, b)| HyperTerm::new(c, p, b).unwrap())
}

fn hyperreal() -> impl Strategy<Value = Hyperreal> {
    prop::collection::vec(term(), 0..5).prop_map(Hyperreal::from_terms)
}

fn ratio() -> impl Strategy<Value = Rational> {
    prop::sample::select(common::RATIOS.to_vec()).prop_map(|(n, d)| q(n, d))
}

fn series_with_start(start: i64) -> impl Strategy<Value = SeriesExpr> {
    let atoms = prop::collection::vec(
        (nonzero_rational(), 0u32..=4, ratio()).prop_map(|(c, p, r)| SeriesAtom::new(c, p, r).unwrap()),
        1..4,
    );
    let overrides = prop::collection::vec((0i64..10, rational()), 0..4);
    (atoms, overrides).prop_map(move |(atoms, overrides)| {
        overrides
            .into_iter()
            .fold(SeriesExpr::from_atoms(start, atoms), |s, (i, v)| {
                s.with_override(start + i, v).unwrap()
            })
    })
}

fn series() -> impl Strategy<Value = SeriesExpr> {
    (-2i64..=3).prop_flat_map(series_with_start)
}

fn series_pair() -> impl Strategy<Value = (SeriesExpr, SeriesExpr)> {
    (-2i64..=3).prop_flat_map(|start| (series_with_start(start), series_with_start(start)))
}

fn value(s: &SeriesExpr) -> Hyperreal {
    sum_series(s, &EvalConfig::default()).unwrap()
}

/// Exact value of a single term `c * n^p * b^n` at a finite `n`.
fn term_at(t: &HyperTerm, n: i64) -> Rational {
    let np = q(n, 1).pow(t.power()).unwrap();
    t.coeff() * &np * t.base().powu(n as u32)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn ring_laws(a in hyperreal(), b in hyperreal(), c in hyperreal()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &Hyperreal::zero(), a.clone());
        prop_assert_eq!(&a * &Hyperreal::one(), a.clone());
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(-(-a.clone()), a);
    }

    #[test]
    fn order_is_compatible(a in hyperreal(), b in hyperreal(), c in hyperreal(), k in nonzero_rational()) {
        // exactly one of <, =, >
        let lt = a < b;
        let gt = a > b;
        prop_assert_eq!(u8::from(lt) + u8::from(gt) + u8::from(a == b), 1);
        prop_assert_eq!(lt, &a + &c < &b + &c);
        let k = k.abs();
        prop_assert_eq!(lt, a.scale(&k) < b.scale(&k));
        prop_assert_eq!(lt, -a.clone() > -b.clone());
        if a < b && b < c {
            prop_assert!(a < c);
        }
    }

    #[test]
    fn principal_values(a in hyperreal(), b in hyperreal()) {
        let pa = a.principal_value();
        prop_assert_eq!(pa.principal_value(), pa.clone());
        prop_assert!(pa.terms().len() <= 1);
        prop_assert!(a.same_halo(&pa));
        prop_assert_eq!(a.same_halo(&b), pa == b.principal_value());
        // a lower-order perturbation never leaves the halo
        if let Some(lead) = a.terms().first() {
            let lower = Hyperreal::monomial(q(7, 1), lead.power() - 1, lead.base().clone());
            prop_assert!(a.same_halo(&(&a + &lower)));
        }
    }

    #[test]
    fn standard_part_only_for_finite(a in hyperreal()) {
        let finite = a.terms().iter().all(|t| !t.is_infinite());
        prop_assert_eq!(a.standard_part().is_some(), finite);
    }

    #[test]
    fn text_round_trip(a in hyperreal(), s in series()) {
        prop_assert_eq!(parse_hyperreal(&format_hyperreal(&a)).unwrap(), a);
        prop_assert_eq!(parse_series(&format_series(&s)).unwrap(), s);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    /// Dominance in the hyperreal order agrees with the order of the finite
    /// analogues for all large enough n.
    #[test]
    fn dominance_matches_large_n(x in term(), y in term()) {
        let (hx, hy) = (Hyperreal::from_terms([x.clone()]), Hyperreal::from_terms([y.clone()]));
        let expected = hx.cmp(&hy);
        for n in [600, 800, 1000] {
            prop_assert_eq!(term_at(&x, n).cmp(&term_at(&y, n)), expected, "n = {}", n);
        }
    }

    #[test]
    fn finite_analogue_matches_terms(a in hyperreal(), n in 1i64..60) {
        let direct: Rational = a.terms().iter().map(|t| term_at(t, n)).sum();
        prop_assert_eq!(a.at(n).unwrap(), direct);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn formula_matches_brute_force(s in series()) {
        let cfg = EvalConfig::default();
        let report = check_formula(&s, 60, &cfg).unwrap();
        prop_assert!(report.passed(), "{:?}", report);
        let f = partial_sum_formula(&s, &cfg).unwrap();
        prop_assert_eq!(f.eval(f.valid_from + 7), brute_partial_sum(&s, f.valid_from + 7));
    }

    #[test]
    fn linearity((s, t) in series_pair(), k in rational()) {
        prop_assert_eq!(value(&s.scalar_mul(&k)), value(&s).scale(&k));
        prop_assert_eq!(value(&s.series_add(&t).unwrap()), &value(&s) + &value(&t));
    }

    #[test]
    fn removal_and_rearrangement(s in series(), offset in 0i64..6, shift in 1usize..5) {
        let i = s.start() + offset;
        let (removed, extracted) = s.remove_term_to_zero(i).unwrap();
        prop_assert_eq!(removed.term_at(i).unwrap(), Rational::zero());
        prop_assert_eq!(value(&removed) + Hyperreal::from(extracted), value(&s));

        let window: Vec<i64> = (s.start()..s.start() + 6).collect();
        let mut targets = window.clone();
        targets.rotate_left(shift);
        let moves: Vec<(i64, i64)> = window.iter().copied().zip(targets).collect();
        let moved = s.rearrange_finite(&moves).unwrap();
        for &(from, to) in &moves {
            prop_assert_eq!(moved.term_at(to).unwrap(), s.term_at(from).unwrap());
        }
        prop_assert_eq!(value(&moved), value(&s));
    }

    #[test]
    fn blanking_is_complementary(s in series()) {
        let even = s.blank_alternate(Parity::Even);
        let odd = s.blank_alternate(Parity::Odd);
        for i in s.start()..s.start() + 30 {
            let (e, o) = (even.term_at(i).unwrap(), odd.term_at(i).unwrap());
            prop_assert_eq!(&e + &o, s.term_at(i).unwrap());
            let blanked = if i.rem_euclid(2) == 0 { o } else { e };
            prop_assert!(blanked.is_zero());
        }
    }
}

#[test]
fn rearranging_needs_a_permutation() {
    let s = parse_series("sum(i=1..omega, i)").unwrap();
    assert!(s.rearrange_finite(&[(1, 2), (2, 3)]).is_err());
    assert!(s.rearrange_finite(&[(1, 2), (1, 3)]).is_err());
    assert!(s.rearrange_finite(&[(0, 1), (1, 0)]).is_err());
}

#[test]
fn exponents_and_sizes_are_bounded() {
    for text in [
        "sum(i=1..omega, 2^100000)",
        "sum(i=1..omega, i^5000)",
        "w^99999",
        &format!("sum(i=1..omega, {})", "(".repeat(10_000)),
        &format!("{}1", "-".repeat(100_000)),
        &format!("sum(i=1..omega, {})", "9".repeat(30_000)),
    ] {
        let outcome = std::panic::catch_unwind(|| {
            let _ = parse_series(text);
            let _ = parse_hyperreal(text);
        });
        assert!(outcome.is_ok(), "panicked on {}", &text[..text.len().min(40)]);
    }
}
