//! Profile transformers: thickening Z to Z^m, twisting L to L^r, blowing up
//! and repolarizing, and rebuilding a profile from its α's.

use num_traits::{Signed, Zero};

use crate::exact::{Polynomial, Rational};

use super::{EngineError, ProfileFunction, Saturation, Seshadri, SlopeProfile};

fn map_seshadri(s: &Seshadri, f: impl Fn(&Rational) -> Rational) -> Seshadri {
    match s {
        Seshadri::Exact(e) => Seshadri::Exact(f(e)),
        Seshadri::LowerBound(e) => Seshadri::LowerBound(f(e)),
        Seshadri::Unknown => Seshadri::Unknown,
    }
}

fn scale_support(
    pf: &ProfileFunction,
    a: &Rational,
    f: impl Fn(&Polynomial) -> Polynomial,
) -> Result<ProfileFunction, EngineError> {
    Ok(match pf {
        ProfileFunction::Poly(p) => ProfileFunction::Poly(f(p)),
        ProfileFunction::Piecewise(pw) => {
            let bps = pw.breakpoints().iter().map(|b| b / a).collect();
            let pieces = pw.pieces().iter().map(&f).collect();
            crate::exact::PiecewisePolynomial::new(bps, pieces)?.into()
        }
    })
}

/// Replaces Z by its m-th thickening: a_i(x) ↦ a_i(mx), ε ↦ ε/m.
pub fn thicken(profile: &SlopeProfile, m: u32) -> Result<SlopeProfile, EngineError> {
    if m == 0 {
        return Err(EngineError::InvalidProfile("thickening order must be positive".into()));
    }
    let mr = Rational::from_integer(m.into());
    let zero = Rational::zero();
    let sub = |p: &Polynomial| p.compose_affine(&mr, &zero);
    SlopeProfile::new(
        profile.dim(),
        scale_support(profile.a0(), &mr, sub)?,
        scale_support(profile.a1(), &mr, sub)?,
        map_seshadri(profile.seshadri(), |e| e / &mr),
        profile.saturation(),
    )
}

/// Replaces L by L^r: a₀(x) ↦ rⁿa₀(x/r), a₁(x) ↦ r^{n−1}a₁(x/r), ε ↦ rε.
pub fn twist(profile: &SlopeProfile, r: u32) -> Result<SlopeProfile, EngineError> {
    if r == 0 {
        return Err(EngineError::InvalidProfile("twist power must be positive".into()));
    }
    let n = profile.dim();
    let rr = Rational::from_integer(r.into());
    let inv = rr.recip();
    let zero = Rational::zero();
    let s0 = num_traits::pow(rr.clone(), n);
    let s1 = num_traits::pow(rr.clone(), n - 1);
    SlopeProfile::new(
        n,
        scale_support(profile.a0(), &inv, |p| p.compose_affine(&inv, &zero).scale(&s0))?,
        scale_support(profile.a1(), &inv, |p| p.compose_affine(&inv, &zero).scale(&s1))?,
        map_seshadri(profile.seshadri(), |e| e * &rr),
        profile.saturation(),
    )
}

/// Shifts the profile to the blow-up polarised by L − dE, viewing E as the
/// new subscheme: a_i(x) ↦ a_i(x + d), ε ↦ ε − d.
pub fn blowup_repolarize(profile: &SlopeProfile, d: &Rational) -> Result<SlopeProfile, EngineError> {
    if d.is_negative() {
        return Err(EngineError::InvalidProfile(format!("shift {d} must be nonnegative")));
    }
    if let Some(e) = profile.seshadri().certified() {
        if d >= e {
            return Err(EngineError::InvalidProfile(format!(
                "shift {d} must be below the Seshadri bound {e}"
            )));
        }
    }
    let one = Rational::from_integer(1.into());
    let shift = |pf: &ProfileFunction| -> Result<ProfileFunction, EngineError> {
        Ok(match pf {
            ProfileFunction::Poly(p) => ProfileFunction::Poly(p.compose_affine(&one, d)),
            ProfileFunction::Piecewise(pw) => {
                let tail = pw
                    .restrict(d, pw.end())
                    .ok_or_else(|| EngineError::InvalidProfile(format!("shift {d} leaves no support")))?;
                let bps = tail.breakpoints().iter().map(|b| b - d).collect();
                let pieces = tail.pieces().iter().map(|p| p.compose_affine(&one, d)).collect();
                crate::exact::PiecewisePolynomial::new(bps, pieces)?.into()
            }
        })
    };
    SlopeProfile::new(
        profile.dim(),
        shift(profile.a0())?,
        shift(profile.a1())?,
        map_seshadri(profile.seshadri(), |e| e - d),
        profile.saturation(),
    )
}

/// a₀(x) = a₀ − ∫₀ˣα₁ and a₁(x) = a₁ − ∫₀ˣα₂ + (α₁(x) − α₁(0))/2.
pub fn profile_from_alphas(
    n: usize,
    a0: &Rational,
    a1: &Rational,
    alpha1: &Polynomial,
    alpha2: &Polynomial,
    seshadri: Seshadri,
    saturation: Saturation,
) -> Result<SlopeProfile, EngineError> {
    let half = Rational::new(1.into(), 2.into());
    let p0 = &Polynomial::constant(a0.clone()) - &alpha1.antiderivative();
    let at0 = alpha1.eval(&Rational::zero());
    let p1 = &(&Polynomial::constant(a1 - &at0 * &half) - &alpha2.antiderivative()) + &alpha1.scale(&half);
    SlopeProfile::new(n, p0, p1, seshadri, saturation)
}
