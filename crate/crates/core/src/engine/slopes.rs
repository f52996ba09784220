use num_traits::{Signed, Zero};

use crate::exact::{PiecewisePolynomial, Polynomial, Rational};

use super::{EngineError, ProfileFunction, Seshadri, SlopeProfile};

/// μ(X) = a₁/a₀.
pub fn slope_of_variety(a0: &Rational, a1: &Rational) -> Result<Rational, EngineError> {
    if !a0.is_positive() {
        return Err(EngineError::NonPositiveA0(a0.clone()));
    }
    Ok(a1 / a0)
}

pub(crate) fn check_c(profile: &SlopeProfile, c: &Rational) -> Result<(), EngineError> {
    let bound = match (profile.seshadri(), profile.a0().end()) {
        (Seshadri::Exact(e), _) => Some(e.clone()),
        (_, Some(end)) => Some(end.clone()),
        _ => None,
    };
    let ok = c.is_positive() && bound.as_ref().is_none_or(|b| c <= b);
    if ok {
        Ok(())
    } else {
        Err(EngineError::COutOfRange {
            c: c.clone(),
            bound: bound.map_or_else(|| "inf".to_string(), |b| b.to_string()),
        })
    }
}

/// `∫₀ᶜ a₀` and `∫₀ᶜ (a₁ + a₀'/2)`.
pub(crate) fn integrals(profile: &SlopeProfile, c: &Rational) -> Result<(Rational, Rational), EngineError> {
    let zero = Rational::zero();
    let i0 = profile.a0().integral(&zero, c)?;
    let half = Rational::new(1.into(), 2.into());
    let a0c = profile.a0().eval(c)?;
    let i1 = profile.a1().integral(&zero, c)? + (a0c - profile.a0_at_zero()) * half;
    Ok((i0, i1))
}

/// μ_c(I_Z) = ∫₀ᶜ(a₁ + a₀'/2) / ∫₀ᶜ a₀.
pub fn mu_ideal(profile: &SlopeProfile, c: &Rational) -> Result<Rational, EngineError> {
    check_c(profile, c)?;
    let (i0, i1) = integrals(profile, c)?;
    if !i0.is_positive() {
        return Err(EngineError::Degenerate {
            what: "integral of a0",
            value: i0,
        });
    }
    Ok(i1 / i0)
}

/// The c → 0 limit of μ_c(I_Z), namely (a₁(0) + a₀'(0)/2)/a₀(0).
pub fn mu_ideal_limit(profile: &SlopeProfile) -> Rational {
    let zero = Rational::zero();
    let da0 = profile.a0().derivative().eval(&zero).expect("support contains 0");
    (profile.a1_at_zero() + da0 / Rational::from_integer(2.into())) / profile.a0_at_zero()
}

/// μ_c(O_Z) = (∫₀ᶜ(a₁ + a₀'/2) − c·a₁) / (∫₀ᶜ a₀ − c·a₀).
pub fn mu_quotient(profile: &SlopeProfile, c: &Rational) -> Result<Rational, EngineError> {
    check_c(profile, c)?;
    let (i0, i1) = integrals(profile, c)?;
    let den = c * profile.a0_at_zero() - i0;
    if !den.is_positive() {
        return Err(EngineError::Degenerate {
            what: "c*a0 - integral of a0",
            value: den,
        });
    }
    Ok((c * profile.a1_at_zero() - i1) / den)
}

/// α₁ = −a₀' and α₂ = −a₁' − a₀''/2.
pub fn alphas_from_profile(profile: &SlopeProfile) -> Result<(Polynomial, Polynomial), EngineError> {
    match (profile.a0(), profile.a1()) {
        (ProfileFunction::Poly(a0), ProfileFunction::Poly(a1)) => Ok(alpha_pair(a0, a1)),
        _ => Err(EngineError::NeedsPolynomial("alphas_from_profile")),
    }
}

fn alpha_pair(a0: &Polynomial, a1: &Polynomial) -> (Polynomial, Polynomial) {
    let d = a0.derivative();
    let alpha1 = -&d;
    let alpha2 = -&a1.derivative() - d.derivative().scale(&Rational::new(1.into(), 2.into()));
    (alpha1, alpha2)
}

/// α₁, α₂ piece by piece; works for both carriers.
pub fn alphas(profile: &SlopeProfile) -> Result<(ProfileFunction, ProfileFunction), EngineError> {
    match (profile.a0(), profile.a1()) {
        (ProfileFunction::Poly(a0), ProfileFunction::Poly(a1)) => {
            let (x, y) = alpha_pair(a0, a1);
            Ok((x.into(), y.into()))
        }
        (ProfileFunction::Piecewise(a0), ProfileFunction::Piecewise(a1)) => {
            let (p1, p2): (Vec<_>, Vec<_>) = a0
                .pieces()
                .iter()
                .zip(a1.pieces())
                .map(|(p, q)| alpha_pair(p, q))
                .unzip();
            let bps = a0.breakpoints().to_vec();
            Ok((
                PiecewisePolynomial::new(bps.clone(), p1)?.into(),
                PiecewisePolynomial::new(bps, p2)?.into(),
            ))
        }
        _ => unreachable!("validated at construction"),
    }
}

/// N(c) = a₀(0)·∫₀ᶜ(a₁ + a₀'/2) − a₁(0)·∫₀ᶜ a₀. Since ∫₀ᶜa₀ > 0 on the
/// admissible range, sign N(c) = sign(μ_c(I_Z) − μ(X)).
pub fn margin_polynomial(profile: &SlopeProfile) -> ProfileFunction {
    let a0 = profile.a0_at_zero();
    let a1 = profile.a1_at_zero();
    let half = Rational::new(1.into(), 2.into());
    let piece = |p0: &Polynomial, p1: &Polynomial| {
        let f = p1 + &p0.derivative().scale(&half);
        (f.antiderivative(), p0.antiderivative())
    };
    match (profile.a0(), profile.a1()) {
        (ProfileFunction::Poly(p0), ProfileFunction::Poly(p1)) => {
            let (i1, i0) = piece(p0, p1);
            ProfileFunction::Poly(&i1.scale(&a0) - &i0.scale(&a1))
        }
        (ProfileFunction::Piecewise(w0), ProfileFunction::Piecewise(w1)) => {
            let mut acc0 = Rational::zero();
            let mut acc1 = Rational::zero();
            let mut pieces = Vec::new();
            for ((lo, hi, p0), p1) in w0.segments().zip(w1.pieces()) {
                let (i1, i0) = piece(p0, p1);
                let i1 = &i1 + &Polynomial::constant(&acc1 - i1.eval(lo));
                let i0 = &i0 + &Polynomial::constant(&acc0 - i0.eval(lo));
                acc1 = i1.eval(hi);
                acc0 = i0.eval(hi);
                pieces.push(&i1.scale(&a0) - &i0.scale(&a1));
            }
            let pw = PiecewisePolynomial::new(w0.breakpoints().to_vec(), pieces).expect("same breakpoints");
            ProfileFunction::Piecewise(pw)
        }
        _ => unreachable!("validated at construction"),
    }
}
