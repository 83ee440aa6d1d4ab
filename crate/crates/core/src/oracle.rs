//! Brute-force ground truth for the summation engine.
//!
//! Exact partial sums check closed forms at every point of a window.
//! Hölder means (iterated Cesàro averages of the partial sums) give a
//! floating-point estimate of the classical sum, which should land on the
//! standard part of the hyperreal value whenever that part exists.

use serde::{Deserialize, Serialize};

use crate::engine::{partial_sum_formula, sum_series, EvalConfig, PartialSumFormula};
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::series::SeriesExpr;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Mismatch {
    pub n: i64,
    pub expected: String,
    pub got: String,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct VerificationReport {
    pub series_id: String,
    /// Inclusive `[from, to]`.
    pub checked_range: (i64, i64),
    pub status: Status,
    pub first_mismatch: Option<Mismatch>,
}

impl VerificationReport {
    fn new(series_id: &str, checked_range: (i64, i64), first_mismatch: Option<Mismatch>) -> Self {
        VerificationReport {
            series_id: series_id.to_string(),
            checked_range,
            status: if first_mismatch.is_some() {
                Status::Fail
            } else {
                Status::Pass
            },
            first_mismatch,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// `Σ_{i=start}^{n} term(i)`; zero when `n < start`.
pub fn brute_partial_sum(s: &SeriesExpr, n: i64) -> Rational {
    (s.start()..=n)
        .map(|i| s.term_at(i).expect("index within range"))
        .sum()
}

/// Compares the engine's closed form against brute force on
/// `[valid_from, valid_from + points]`.
pub fn check_formula(s: &SeriesExpr, points: i64, cfg: &EvalConfig) -> Result<VerificationReport> {
    let formula = partial_sum_formula(s, cfg)?;
    Ok(check_formula_against(s, &formula, points, &s.to_string()))
}

/// [`check_formula`] with a caller-supplied formula.
pub fn check_formula_against(
    s: &SeriesExpr,
    formula: &PartialSumFormula,
    points: i64,
    series_id: &str,
) -> VerificationReport {
    let from = formula.valid_from.max(s.start() - 1);
    let to = from + points;
    let mut running = brute_partial_sum(s, from - 1);
    let mut mismatch = None;
    for n in from..=to {
        if n >= s.start() {
            running += s.term_at(n).expect("index within range");
        }
        let got = formula.eval(n);
        if got != running {
            mismatch = Some(Mismatch {
                n,
                expected: running.to_string(),
                got: got.to_string(),
            });
            break;
        }
    }
    VerificationReport::new(series_id, (from, to), mismatch)
}

/// Term values in `f64` for the numeric means. Each atom's exact data is
/// converted once; overrides are converted exactly.
fn float_terms(s: &SeriesExpr, count: usize) -> Vec<f64> {
    let atoms: Vec<(f64, i32, f64)> = s
        .atoms()
        .map(|a| (a.coeff.to_f64(), a.power as i32, a.ratio.to_f64()))
        .collect();
    (0..count as i64)
        .map(|k| {
            let i = s.start() + k;
            match s.overrides().get(&i) {
                Some(v) => v.to_f64(),
                None => atoms
                    .iter()
                    .map(|&(c, p, r)| c * (i as f64).powi(p) * r.powi(i as i32))
                    .sum(),
            }
        })
        .collect()
}

/// Running means `out[m] = (x[0] + … + x[m]) / (m + 1)` with compensated
/// summation.
fn running_means(xs: &[f64]) -> Vec<f64> {
    let mut sum = Neumaier::default();
    xs.iter()
        .enumerate()
        .map(|(m, &x)| {
            sum.add(x);
            sum.value() / (m + 1) as f64
        })
        .collect()
}

#[derive(Default)]
struct Neumaier {
    sum: f64,
    compensation: f64,
}

impl Neumaier {
    fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.compensation += (self.sum - t) + x;
        } else {
            self.compensation += (x - t) + self.sum;
        }
        self.sum = t;
    }

    fn value(&self) -> f64 {
        self.sum + self.compensation
    }
}

/// The order-`k` Hölder mean of the first `terms` partial sums: the
/// partial-sum sequence averaged `k` times, read at its last entry.
pub fn holder_mean(s: &SeriesExpr, k: u32, terms: usize) -> f64 {
    assert!(k >= 1 && terms >= 1, "holder_mean needs k >= 1 and at least one term");
    let mut acc = Neumaier::default();
    let mut seq: Vec<f64> = float_terms(s, terms)
        .into_iter()
        .map(|t| {
            acc.add(t);
            acc.value()
        })
        .collect();
    for _ in 0..k {
        seq = running_means(&seq);
    }
    *seq.last().expect("at least one term")
}

/// Passes when the Hölder mean lands within `tol` of the standard part of
/// the series value.
pub fn standard_part_crosscheck(
    s: &SeriesExpr,
    k: u32,
    terms: usize,
    tol: f64,
    cfg: &EvalConfig,
) -> Result<VerificationReport> {
    let value = sum_series(s, cfg)?;
    let expected = value.standard_part().ok_or(Error::InfiniteValue)?;
    let mean = holder_mean(s, k, terms);
    let last = s.start() + terms as i64 - 1;
    let mismatch = ((mean - expected.to_f64()).abs() > tol || mean.is_nan()).then(|| Mismatch {
        n: last,
        expected: expected.to_string(),
        got: mean.to_string(),
    });
    Ok(VerificationReport::new(
        &s.to_string(),
        (s.start(), last),
        mismatch,
    ))
}
