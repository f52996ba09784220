//! The universal engine input: the leading Hilbert coefficients a₀(x), a₁(x)
//! of `L^k(-xkE)` together with what is known about the Seshadri constant.

use std::fmt;

use num_traits::{Signed, Zero};

use crate::exact::{sign_on_interval, IntegrationError, PiecewisePolynomial, Polynomial, Rational, SignSummary};

use super::EngineError;

/// What is known about ε(Z).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Seshadri {
    Exact(Rational),
    /// ε ≥ the given value; only `(0, bound]` is certified.
    LowerBound(Rational),
    Unknown,
}

impl Seshadri {
    /// Upper end of the range of c known to be admissible.
    pub fn certified(&self) -> Option<&Rational> {
        match self {
            Seshadri::Exact(e) | Seshadri::LowerBound(e) => Some(e),
            Seshadri::Unknown => None,
        }
    }

    pub fn exact(&self) -> Option<&Rational> {
        match self {
            Seshadri::Exact(e) => Some(e),
            _ => None,
        }
    }
}

impl fmt::Display for Seshadri {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Seshadri::Exact(e) => write!(f, "{e}"),
            Seshadri::LowerBound(e) => write!(f, ">= {e}"),
            Seshadri::Unknown => f.write_str("unknown"),
        }
    }
}

/// Whether sections of `L^k ⊗ I_Z^{εk}` saturate at c = ε.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Saturation {
    Yes,
    No,
    #[default]
    Unknown,
}

impl fmt::Display for Saturation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Saturation::Yes => "yes",
            Saturation::No => "no",
            Saturation::Unknown => "unknown",
        })
    }
}

/// A polynomial, or a piecewise polynomial starting at 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProfileFunction {
    Poly(Polynomial),
    Piecewise(PiecewisePolynomial),
}

impl From<Polynomial> for ProfileFunction {
    fn from(p: Polynomial) -> Self {
        ProfileFunction::Poly(p)
    }
}

impl From<PiecewisePolynomial> for ProfileFunction {
    fn from(p: PiecewisePolynomial) -> Self {
        ProfileFunction::Piecewise(p)
    }
}

impl ProfileFunction {
    pub fn eval(&self, x: &Rational) -> Result<Rational, EngineError> {
        match self {
            ProfileFunction::Poly(p) => Ok(p.eval(x)),
            ProfileFunction::Piecewise(pw) => pw.eval(x).ok_or_else(|| EngineError::OutsideSupport {
                x: x.clone(),
                end: pw.end().clone(),
            }),
        }
    }

    pub fn integral(&self, lo: &Rational, hi: &Rational) -> Result<Rational, IntegrationError> {
        match self {
            ProfileFunction::Poly(p) => p.definite_integral(lo, hi),
            ProfileFunction::Piecewise(pw) => pw.integral(lo, hi),
        }
    }

    pub fn derivative(&self) -> Self {
        match self {
            ProfileFunction::Poly(p) => ProfileFunction::Poly(p.derivative()),
            ProfileFunction::Piecewise(pw) => ProfileFunction::Piecewise(pw.derivative()),
        }
    }

    pub fn as_poly(&self) -> Option<&Polynomial> {
        match self {
            ProfileFunction::Poly(p) => Some(p),
            ProfileFunction::Piecewise(_) => None,
        }
    }

    /// Right end of the support, if bounded.
    pub fn end(&self) -> Option<&Rational> {
        match self {
            ProfileFunction::Poly(_) => None,
            ProfileFunction::Piecewise(pw) => Some(pw.end()),
        }
    }

    pub fn max_degree(&self) -> Option<usize> {
        match self {
            ProfileFunction::Poly(p) => p.degree(),
            ProfileFunction::Piecewise(pw) => pw.pieces().iter().filter_map(Polynomial::degree).max(),
        }
    }

    /// Segments meeting `(lo, hi)`, clipped to it. A plain polynomial is a
    /// single segment.
    pub fn segments_within(&self, lo: &Rational, hi: &Rational) -> Vec<(Rational, Rational, Polynomial)> {
        match self {
            ProfileFunction::Poly(p) => vec![(lo.clone(), hi.clone(), p.clone())],
            ProfileFunction::Piecewise(pw) => pw
                .segments()
                .filter(|(a, b, _)| *b > lo && *a < hi)
                .map(|(a, b, p)| {
                    let s = if a > lo { a.clone() } else { lo.clone() };
                    let e = if b < hi { b.clone() } else { hi.clone() };
                    (s, e, p.clone())
                })
                .collect(),
        }
    }

    pub fn map(&self, f: impl Fn(&Polynomial) -> Polynomial) -> Self {
        match self {
            ProfileFunction::Poly(p) => ProfileFunction::Poly(f(p)),
            ProfileFunction::Piecewise(pw) => ProfileFunction::Piecewise(pw.map_pieces(f)),
        }
    }

    pub fn render(&self, var: &str) -> String {
        match self {
            ProfileFunction::Poly(p) => p.render(var),
            ProfileFunction::Piecewise(pw) => pw
                .segments()
                .map(|(a, b, p)| format!("[{a}, {b}]: {}", p.render(var)))
                .collect::<Vec<_>>()
                .join("; "),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlopeProfile {
    dim: usize,
    a0: ProfileFunction,
    a1: ProfileFunction,
    seshadri: Seshadri,
    saturation: Saturation,
}

impl SlopeProfile {
    /// Validates degrees, positivity of a₀ and strict decrease of a₀ on the
    /// certified range.
    pub fn new(
        dim: usize,
        a0: impl Into<ProfileFunction>,
        a1: impl Into<ProfileFunction>,
        seshadri: Seshadri,
        saturation: Saturation,
    ) -> Result<Self, EngineError> {
        let profile = SlopeProfile {
            dim,
            a0: a0.into(),
            a1: a1.into(),
            seshadri,
            saturation,
        };
        profile.validate()?;
        Ok(profile)
    }

    fn validate(&self) -> Result<(), EngineError> {
        let n = self.dim;
        if n == 0 {
            return Err(EngineError::InvalidProfile("dimension must be positive".into()));
        }
        if matches!(self.a0.max_degree(), Some(d) if d > n) {
            return Err(EngineError::InvalidProfile(format!("a0 has degree above {n}")));
        }
        if matches!(self.a1.max_degree(), Some(d) if d + 1 > n) {
            return Err(EngineError::InvalidProfile(format!("a1 has degree above {}", n - 1)));
        }
        match (&self.a0, &self.a1) {
            (ProfileFunction::Piecewise(p), ProfileFunction::Piecewise(q)) => {
                if !p.start().is_zero() || p.breakpoints() != q.breakpoints() {
                    return Err(EngineError::InvalidProfile(
                        "piecewise a0 and a1 must share breakpoints starting at 0".into(),
                    ));
                }
            }
            (ProfileFunction::Poly(_), ProfileFunction::Poly(_)) => {}
            _ => {
                return Err(EngineError::InvalidProfile(
                    "a0 and a1 must both be polynomials or both piecewise".into(),
                ))
            }
        }
        let zero = Rational::zero();
        if !self.a0.eval(&zero)?.is_positive() {
            return Err(EngineError::InvalidProfile("a0(0) must be positive".into()));
        }
        if let Some(e) = self.seshadri.certified() {
            if !e.is_positive() {
                return Err(EngineError::InvalidProfile(format!(
                    "Seshadri bound {e} must be positive"
                )));
            }
            if let Some(end) = self.a0.end() {
                if e > end {
                    return Err(EngineError::InvalidProfile(format!(
                        "Seshadri bound {e} beyond the support end {end}"
                    )));
                }
            }
            let da0 = self.a0.derivative();
            for (lo, hi, p) in self.a0.segments_within(&zero, e) {
                if sign_on_interval(&p, &lo, &hi, false).interior != SignSummary::StrictlyPositive {
                    return Err(EngineError::InvalidProfile(format!(
                        "a0 is not positive on ({lo}, {hi})"
                    )));
                }
                if lo.is_positive() && !p.eval(&lo).is_positive() {
                    return Err(EngineError::InvalidProfile(format!("a0 vanishes at {lo}")));
                }
            }
            for (lo, hi, p) in da0.segments_within(&zero, e) {
                if sign_on_interval(&p, &lo, &hi, false).interior != SignSummary::StrictlyNegative {
                    return Err(EngineError::InvalidProfile(format!(
                        "a0 is not strictly decreasing on ({lo}, {hi})"
                    )));
                }
                if lo.is_positive() && !p.eval(&lo).is_negative() {
                    return Err(EngineError::InvalidProfile(format!("a0' is not negative at {lo}")));
                }
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn a0(&self) -> &ProfileFunction {
        &self.a0
    }

    pub fn a1(&self) -> &ProfileFunction {
        &self.a1
    }

    pub fn seshadri(&self) -> &Seshadri {
        &self.seshadri
    }

    pub fn saturation(&self) -> Saturation {
        self.saturation
    }

    /// a₀ = a₀(0) of (X, L).
    pub fn a0_at_zero(&self) -> Rational {
        self.a0.eval(&Rational::zero()).expect("support contains 0")
    }

    /// a₁ = a₁(0) of (X, L).
    pub fn a1_at_zero(&self) -> Rational {
        self.a1.eval(&Rational::zero()).expect("support contains 0")
    }

    pub fn is_piecewise(&self) -> bool {
        matches!(self.a0, ProfileFunction::Piecewise(_))
    }

    pub fn with_seshadri(&self, seshadri: Seshadri, saturation: Saturation) -> Result<Self, EngineError> {
        SlopeProfile::new(self.dim, self.a0.clone(), self.a1.clone(), seshadri, saturation)
    }
}
