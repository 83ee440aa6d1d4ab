//! Exact hyperreal values for infinite series.
//!
//! A series `Σ_{i=start}^{w} term(i)` is summed by finding the exact closed
//! form of its partial sums and substituting the infinite unit `w` (the
//! count of positive integers) for the upper bound. Divergent series get
//! infinite values (`1+2+3+… = w²/2 + w/2`), convergent ones keep their
//! infinitesimal tails (`1+1/2+1/4+… = 2 - 2(1/2)^w`), and alternating
//! factors `(-1)^w` evaluate to zero (`1-1+1-… = 1/2`).
//!
//! ```
//! use hyperseries::{sum_series, text::parse_series, EvalConfig};
//!
//! let s = parse_series("sum(i=1..omega, i)").unwrap();
//! let v = sum_series(&s, &EvalConfig::default()).unwrap();
//! assert_eq!(v.to_string(), "w^2/2 + w/2");
//! assert_eq!(v.principal_value().to_string(), "w^2/2");
//! ```
//!
//! Runnable walkthroughs for each capability live in `examples/`.

pub mod catalog;
pub mod engine;
pub mod error;
pub mod hyperreal;
mod linalg;
pub mod oracle;
pub mod poly;
pub mod rational;
pub mod series;
pub mod text;

pub use engine::{
    antidifference_polygeom, arithmetic_series_value, evaluate_at_omega, faulhaber,
    geometric_series_value, partial_sum_formula, sum_series, EvalConfig, NegBaseMode,
    PartialSumFormula,
};
pub use error::{Error, Result};
pub use hyperreal::{eval_poly_at_shifted_omega, HyperTerm, Hyperreal};
pub use oracle::{
    brute_partial_sum, check_formula, check_formula_against, holder_mean,
    standard_part_crosscheck, Status, VerificationReport,
};
pub use poly::Poly;
pub use rational::Rational;
pub use series::{Parity, SeriesAtom, SeriesExpr, Slots};
