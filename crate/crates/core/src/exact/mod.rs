//! Exact arithmetic: rationals, polynomials, piecewise polynomials and sign
//! analysis. Nothing here touches floating point.

pub mod piecewise;
pub mod polynomial;
pub mod rational;
pub mod sturm;

pub use piecewise::{PiecewiseError, PiecewisePolynomial};
pub use polynomial::{interpolate, IntegrationError, Polynomial};
pub use rational::{int, midpoint, parse_rational, rat, signum, to_sci, ParseRationalError, Rational};
pub use sturm::{
    isolate_roots, sign_on_interval, sign_regions, IsolatedRoot, RootLocation, SignRegion, SignReport, SignSummary,
};
