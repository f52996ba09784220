use std::collections::BTreeSet;

use num_traits::{Signed, Zero};

use crate::exact::{interpolate, Polynomial, Rational};

use super::slopes::{alphas, check_c, integrals};
use super::{EngineError, SlopeProfile};

/// Leading coefficients of the total weight w(k) = b₀k^{n+1} + b₁kⁿ + ….
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightPair {
    pub b0: Rational,
    pub b1: Rational,
}

impl WeightPair {
    pub fn new(b0: Rational, b1: Rational) -> Self {
        WeightPair { b0, b1 }
    }

    /// The quotient slope b₁/b₀.
    pub fn ratio(&self) -> Option<Rational> {
        (!self.b0.is_zero()).then(|| &self.b1 / &self.b0)
    }
}

/// Weights of the deformation to the normal cone at parameter c. Computed
/// from a₀, a₁ directly and again from α₁, α₂; the two must agree.
pub fn normal_cone_weights(profile: &SlopeProfile, c: &Rational) -> Result<WeightPair, EngineError> {
    check_c(profile, c)?;
    let (i0, i1) = integrals(profile, c)?;
    let b0 = i0 - c * profile.a0_at_zero();
    let b1 = i1 - c * profile.a1_at_zero();

    let (al1, al2) = alphas(profile)?;
    let zero = Rational::zero();
    let tail = Polynomial::new(vec![c.clone(), Rational::from_integer((-1).into())]);
    let mut c0 = Rational::zero();
    let mut c1 = Rational::zero();
    for (lo, hi, p) in al1.segments_within(&zero, c) {
        c0 -= (&tail * &p).integral_unchecked(&lo, &hi);
    }
    for (lo, hi, p) in al2.segments_within(&zero, c) {
        c1 -= (&tail * &p).integral_unchecked(&lo, &hi);
    }
    c1 -= c * al1.eval(&zero)? / Rational::from_integer(2.into());

    if b0 != c0 || b1 != c1 {
        return Err(EngineError::WeightMismatch {
            a0: b0,
            a1: b1,
            b0: c0,
            b1: c1,
        });
    }
    debug_assert!(b0.is_negative(), "b0 must be negative on the admissible range");
    Ok(WeightPair { b0, b1 })
}

/// F₁ = (b₀a₁ − b₁a₀)/a₀².
pub fn futaki(a0: &Rational, a1: &Rational, w: &WeightPair) -> Result<Rational, EngineError> {
    if !a0.is_positive() {
        return Err(EngineError::NonPositiveA0(a0.clone()));
    }
    Ok((&w.b0 * a1 - &w.b1 * a0) / (a0 * a0))
}

/// Brute-force weights: evaluates
/// w(k) = −Σ_{i<ck} (ck − i)[α₁(i/k)k^{n−1} + α₂(i/k)k^{n−2}]
/// for each k, fits a degree n+1 polynomial through the first n+2 samples,
/// checks the rest against it and returns its top two coefficients.
pub fn weight_sum_oracle(
    n: usize,
    alpha1: &Polynomial,
    alpha2: &Polynomial,
    c: &Rational,
    ks: &[i64],
) -> Result<WeightPair, EngineError> {
    let ks: Vec<i64> = ks.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
    if ks.len() < n + 2 {
        return Err(EngineError::TooFewSamples {
            need: n + 2,
            got: ks.len(),
        });
    }
    let mut samples = Vec::with_capacity(ks.len());
    for &k in &ks {
        let ck = c * Rational::from_integer(k.into());
        if !ck.is_integer() || k <= 0 {
            return Err(EngineError::NonIntegralSample { c: c.clone(), k });
        }
        let kr = Rational::from_integer(k.into());
        let pow = |e: i64| -> Rational {
            if e >= 0 {
                num_traits::pow(kr.clone(), e as usize)
            } else {
                num_traits::pow(kr.recip(), (-e) as usize)
            }
        };
        let (k1, k2) = (pow(n as i64 - 1), pow(n as i64 - 2));
        let mut w = Rational::zero();
        let top = ck.to_integer();
        let mut i = num_bigint::BigInt::zero();
        while i < top {
            let ir = Rational::from_integer(i.clone());
            let x = &ir / &kr;
            w -= (&ck - &ir) * (alpha1.eval(&x) * &k1 + alpha2.eval(&x) * &k2);
            i += 1;
        }
        samples.push((kr, w));
    }
    let fit = interpolate(&samples[..n + 2]);
    for (k, w) in &samples[n + 2..] {
        if fit.eval(k) != *w {
            return Err(EngineError::OracleInconsistent {
                k: k.to_integer().try_into().unwrap_or(i64::MAX),
            });
        }
    }
    Ok(WeightPair {
        b0: fit.coeff(n + 1),
        b1: fit.coeff(n),
    })
}
