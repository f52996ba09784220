//! Slopes, quotient slopes, normal-cone weights, the Donaldson-Futaki
//! invariant and the stability verdict.

mod profile;
mod slopes;
mod transform;
mod verdict;
mod weights;

pub use profile::{ProfileFunction, Saturation, Seshadri, SlopeProfile};
pub use slopes::{
    alphas, alphas_from_profile, margin_polynomial, mu_ideal, mu_ideal_limit, mu_quotient, slope_of_variety,
};
pub use transform::{blowup_repolarize, profile_from_alphas, thicken, twist};
pub use verdict::{verdict, EqualityPoint, Verdict};
pub use weights::{futaki, normal_cone_weights, weight_sum_oracle, WeightPair};

use crate::exact::{IntegrationError, PiecewiseError, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EngineError {
    #[error("invalid profile: {0}")]
    InvalidProfile(String),
    #[error("a0 = {0} must be positive")]
    NonPositiveA0(Rational),
    #[error("c = {c} outside the admissible range (0, {bound}]")]
    COutOfRange { c: Rational, bound: String },
    #[error("{what} = {value} must be positive")]
    Degenerate { what: &'static str, value: Rational },
    #[error("x = {x} beyond the support end {end}")]
    OutsideSupport { x: Rational, end: Rational },
    #[error("the two closed forms of the weights disagree: ({a0}, {a1}) vs ({b0}, {b1})")]
    WeightMismatch {
        a0: Rational,
        a1: Rational,
        b0: Rational,
        b1: Rational,
    },
    #[error("ck = {c}*{k} is not an integer")]
    NonIntegralSample { c: Rational, k: i64 },
    #[error("need at least {need} distinct sample values of k, got {got}")]
    TooFewSamples { need: usize, got: usize },
    #[error("weight sum at k = {k} is off the fitted polynomial")]
    OracleInconsistent { k: i64 },
    #[error("{0} requires a polynomial profile")]
    NeedsPolynomial(&'static str),
    #[error(transparent)]
    Integration(#[from] IntegrationError),
    #[error(transparent)]
    Piecewise(#[from] PiecewiseError),
}
