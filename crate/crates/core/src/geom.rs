//! Closed-form profiles and quotient slopes from intersection numbers:
//! curves in n-folds, divisors, curves on surfaces and smooth curves.

use num_traits::{One, Signed, Zero};

use crate::engine::{
    mu_quotient, profile_from_alphas, verdict, EngineError, Saturation, Seshadri, SlopeProfile, Verdict,
};
use crate::exact::{Polynomial, Rational};

pub use crate::engine::blowup_repolarize;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GeomError {
    #[error("invalid data: {0}")]
    InvalidData(String),
    #[error("{what} = {value} must be positive")]
    Degenerate { what: &'static str, value: Rational },
    #[error(transparent)]
    Engine(#[from] EngineError),
}

fn r(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn binom(n: usize, k: usize) -> Rational {
    Rational::from_integer(num_integer::binomial(n as u64, k as u64).into())
}

fn factorial(n: usize) -> Rational {
    (1..=n as i64).map(r).product()
}

fn positive(what: &'static str, value: Rational) -> Result<Rational, GeomError> {
    if value.is_positive() {
        Ok(value)
    } else {
        Err(GeomError::Degenerate { what, value })
    }
}

/// Intersection data of a smooth curve Z on a smooth polarised surface.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceCurveData {
    pub kl: Rational,
    pub l2: Rational,
    pub lz: Rational,
    pub kz: Rational,
    pub z2: Rational,
    pub genus: Option<u32>,
}

impl SurfaceCurveData {
    pub fn validate(&self) -> Result<(), GeomError> {
        positive("L^2", self.l2.clone())?;
        positive("L.Z", self.lz.clone())?;
        Ok(())
    }

    /// Set when 2g − 2 ≠ K·Z + Z².
    pub fn adjunction_warning(&self) -> Option<String> {
        let g = self.genus?;
        let lhs = r(2 * i64::from(g) - 2);
        let rhs = &self.kz + &self.z2;
        (lhs != rhs).then(|| format!("adjunction fails: 2g-2 = {lhs} but K.Z + Z^2 = {rhs}"))
    }

    /// The same curve viewed as a divisor on a surface.
    pub fn as_divisor(&self) -> DivisorData {
        DivisorData {
            n: 2,
            lnj_zj: vec![self.l2.clone(), self.lz.clone(), self.z2.clone()],
            lzk: vec![&self.kl + &self.lz, &self.kz + &self.z2],
        }
    }

    /// The same curve viewed as a curve in a 2-fold; c₁(ν_Z) = Z².
    pub fn as_curve(&self, genus: u32) -> CurveInNfoldData {
        CurveInNfoldData {
            n: 2,
            genus,
            lz: self.lz.clone(),
            c1nu: self.z2.clone(),
        }
    }

    /// a₀(x) = (L − xZ)²/2 and a₁(x) = −K·(L − xZ)/2.
    pub fn profile(&self, seshadri: Seshadri, saturation: Saturation) -> Result<SlopeProfile, GeomError> {
        self.validate()?;
        let half = Rational::new(1.into(), 2.into());
        let a0 = Polynomial::new(vec![&self.l2 * &half, -&self.lz, &self.z2 * &half]);
        let a1 = Polynomial::new(vec![-&self.kl * &half, &self.kz * &half]);
        Ok(SlopeProfile::new(2, a0, a1, seshadri, saturation)?)
    }
}

/// μ(X) = −K·L/L² and μ_c(O_Z) = 3[2L·Z − c(K·Z + Z²)] / 2c(3L·Z − cZ²).
/// For a rational curve the shortcut 3(L·Z + c)/(c(3L·Z − cZ²)) is used and
/// checked against the general form.
pub fn surface_curve(d: &SurfaceCurveData, c: &Rational) -> Result<(Rational, Rational), GeomError> {
    d.validate()?;
    if !c.is_positive() {
        return Err(GeomError::Degenerate {
            what: "c",
            value: c.clone(),
        });
    }
    let mu_x = -&d.kl / &d.l2;
    let den = positive("3L.Z - cZ^2", r(3) * &d.lz - c * &d.z2)?;
    let general = r(3) * (r(2) * &d.lz - c * (&d.kz + &d.z2)) / (r(2) * c * &den);
    if d.genus == Some(0) && d.adjunction_warning().is_none() {
        let shortcut = r(3) * (&d.lz + c) / (c * &den);
        debug_assert_eq!(shortcut, general);
        return Ok((mu_x, shortcut));
    }
    Ok((mu_x, general))
}

/// Intersection numbers for a divisor Z in an n-fold: `lnj_zj[j] = L^{n−j}·Z^j`
/// for j = 0..=n and `lzk[j] = L^{n−1−j}·Z^j·(K_X + Z)` for j = 0..n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorData {
    pub n: usize,
    pub lnj_zj: Vec<Rational>,
    pub lzk: Vec<Rational>,
}

impl DivisorData {
    pub fn validate(&self) -> Result<(), GeomError> {
        if self.n < 2 {
            return Err(GeomError::InvalidData(
                "divisor formulas need n >= 2; use the smooth-curve backend for n = 1".into(),
            ));
        }
        if self.lnj_zj.len() != self.n + 1 || self.lzk.len() != self.n {
            return Err(GeomError::InvalidData(format!(
                "expected {} numbers L^(n-j).Z^j and {} numbers L^(n-1-j).Z^j.(K+Z)",
                self.n + 1,
                self.n
            )));
        }
        positive("L^n", self.lnj_zj[0].clone())?;
        Ok(())
    }

    /// K·L^{n−1−j}·Z^j.
    fn k_term(&self, j: usize) -> Rational {
        &self.lzk[j] - &self.lnj_zj[j + 1]
    }

    /// a₀(x) = (L − xZ)ⁿ/n!, a₁(x) = −K·(L − xZ)^{n−1}/(2(n−1)!).
    fn polynomials(&self) -> (Polynomial, Polynomial) {
        let n = self.n;
        let a0 = Polynomial::new(
            (0..=n)
                .map(|j| binom(n, j) * sign(j) * &self.lnj_zj[j] / factorial(n))
                .collect(),
        );
        let a1 = Polynomial::new(
            (0..n)
                .map(|j| -binom(n - 1, j) * sign(j) * self.k_term(j) / (r(2) * factorial(n - 1)))
                .collect(),
        );
        (a0, a1)
    }

    pub fn profile(&self, seshadri: Seshadri, saturation: Saturation) -> Result<SlopeProfile, GeomError> {
        self.validate()?;
        let (a0, a1) = self.polynomials();
        Ok(SlopeProfile::new(self.n, a0, a1, seshadri, saturation)?)
    }
}

fn sign(j: usize) -> Rational {
    if j.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// Quotient slope of a divisor:
/// μ_c(O_Z) = −n[L^{n−1}Z + Σ_{j≥1} C(n−1,j)(−c)^j/(j+1)·L^{n−1−j}Z^j(K+Z)]
///            / (2 Σ_{j≥1} C(n,j)(−c)^j/(j+1)·L^{n−j}Z^j).
pub fn divisor_quotient_slope(d: &DivisorData, c: &Rational) -> Result<Rational, GeomError> {
    d.validate()?;
    let n = d.n;
    let pw = |j: usize| num_traits::pow(-c, j) / r(j as i64 + 1);
    let mut num = d.lnj_zj[1].clone();
    for j in 1..n {
        num += binom(n - 1, j) * pw(j) * &d.lzk[j];
    }
    let mut den = Rational::zero();
    for j in 1..=n {
        den += binom(n, j) * pw(j) * &d.lnj_zj[j];
    }
    // both sums are negative on the admissible range
    let den = positive("-2 * denominator sum", -r(2) * den)?;
    Ok(r(n as i64) * num / den)
}

/// Data of a smooth genus-g curve in an n-fold.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveInNfoldData {
    pub n: usize,
    pub genus: u32,
    pub lz: Rational,
    pub c1nu: Rational,
}

impl CurveInNfoldData {
    pub fn validate(&self) -> Result<(), GeomError> {
        if self.n < 2 {
            return Err(GeomError::InvalidData("a curve needs ambient dimension n >= 2".into()));
        }
        positive("L.Z", self.lz.clone())?;
        Ok(())
    }

    /// α₁, α₂ from Riemann-Roch on Z for L^k ⊗ S^{xk}ν*.
    pub fn alphas(&self) -> (Polynomial, Polynomial) {
        let n = self.n;
        let fact = factorial(n - 2);
        let lin = Polynomial::new(vec![self.lz.clone(), -&self.c1nu / r(n as i64 - 1)]);
        let alpha1 = (&Polynomial::monomial(Rational::one(), n - 2) * &lin).scale(&fact.recip());
        let mut alpha2 = Polynomial::monomial(r(1 - i64::from(self.genus)), n - 2);
        if n >= 3 {
            let coef = r(((n - 2) * (n - 1) / 2) as i64);
            alpha2 = &alpha2 + &(&Polynomial::monomial(coef, n - 3) * &lin);
        }
        (alpha1, alpha2.scale(&fact.recip()))
    }

    /// The profile of (X, L) given a₀, a₁ of X.
    pub fn profile(
        &self,
        a0: &Rational,
        a1: &Rational,
        seshadri: Seshadri,
        saturation: Saturation,
    ) -> Result<SlopeProfile, GeomError> {
        self.validate()?;
        let (al1, al2) = self.alphas();
        Ok(profile_from_alphas(self.n, a0, a1, &al1, &al2, seshadri, saturation)?)
    }
}

/// μ_c(O_Z) = (n²(n²−1)L·Z − cn(n+1)[(n−2)c₁(ν) + 2(g−1)]) / (2nc[(n+1)L·Z − c·c₁(ν)]).
pub fn curve_in_nfold_quotient_slope(d: &CurveInNfoldData, c: &Rational) -> Result<Rational, GeomError> {
    d.validate()?;
    let n = r(d.n as i64);
    let g = r(i64::from(d.genus));
    let num = &n * &n * (&n * &n - r(1)) * &d.lz - c * &n * (&n + r(1)) * ((&n - r(2)) * &d.c1nu + r(2) * (g - r(1)));
    let den = positive(
        "2nc[(n+1)L.Z - c c1(nu)]",
        r(2) * &n * c * ((&n + r(1)) * &d.lz - c * &d.c1nu),
    )?;
    Ok(num / den)
}

/// Profile of a smooth genus-g curve with deg L = `deg_l` against a divisor of
/// degree `d`: a₀(x) = deg L − xd, a₁(x) = 1 − g, ε = deg L/d. Saturation
/// holds at ε when g = 0, where the restriction is trivial.
pub fn smooth_curve_profile(g: u32, deg_l: &Rational, d: u32) -> Result<SlopeProfile, GeomError> {
    positive("deg L", deg_l.clone())?;
    if d == 0 {
        return Err(GeomError::InvalidData("divisor degree must be positive".into()));
    }
    let dr = r(i64::from(d));
    let sat = if g == 0 { Saturation::Yes } else { Saturation::Unknown };
    Ok(SlopeProfile::new(
        1,
        Polynomial::new(vec![deg_l.clone(), -&dr]),
        Polynomial::constant(r(1 - i64::from(g))),
        Seshadri::Exact(deg_l / &dr),
        sat,
    )?)
}

pub fn smooth_curve_verdict(g: u32, deg_l: &Rational, d: u32) -> Result<Verdict, GeomError> {
    Ok(verdict(&smooth_curve_profile(g, deg_l, d)?))
}

/// For a divisor on a curve, μ_c(O_Z) = 1/c.
pub fn smooth_curve_quotient_slope(g: u32, deg_l: &Rational, d: u32, c: &Rational) -> Result<Rational, GeomError> {
    Ok(mu_quotient(&smooth_curve_profile(g, deg_l, d)?, c)?)
}

/// Strict inequality
/// Fⁿ·∫₀ᶜ(ã₁ + ã₀'/2) < −(n/2)(K·F^{n−1})·∫₀ᶜ ã₀ with ãᵢ(x) = aᵢ(0) − aᵢ(x),
/// for a nef divisor F given through divisor-style data with F in place of L.
/// When it holds, Z strictly destabilises (X, F + δG) for small δ. Nefness
/// of F and F − cE is the caller's responsibility.
pub fn nef_limit_test(f: &DivisorData, c: &Rational) -> Result<bool, GeomError> {
    if f.n < 2 || f.lnj_zj.len() != f.n + 1 || f.lzk.len() != f.n {
        return Err(GeomError::InvalidData("malformed nef-limit data".into()));
    }
    let n = f.n;
    let (a0, a1) = f.polynomials();
    let zero = Rational::zero();
    let t0 = &Polynomial::constant(a0.eval(&zero)) - &a0;
    let t1 = &Polynomial::constant(a1.eval(&zero)) - &a1;
    let half = Rational::new(1.into(), 2.into());
    let lhs_int = (&t1 + &t0.derivative().scale(&half)).integral_unchecked(&zero, c);
    let fn_ = &f.lnj_zj[0];
    let kf = f.k_term(0);
    let lhs = fn_ * lhs_int;
    let rhs = -r(n as i64) * kf / r(2) * t0.integral_unchecked(&zero, c);
    Ok(lhs < rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::{mu_ideal, slope_of_variety, EqualityPoint};
    use crate::exact::{int, rat};

    fn bl1p2(q: &Rational) -> SurfaceCurveData {
        // L = H − qE, Z = E, K = −3H + E
        SurfaceCurveData {
            kl: q - int(3),
            l2: int(1) - q * q,
            lz: q.clone(),
            kz: int(-1),
            z2: int(-1),
            genus: Some(0),
        }
    }

    #[test]
    fn bl1p2_closed_forms() {
        for q in [rat(1, 10), rat(1, 3), rat(1, 2), rat(3, 4), rat(9, 10)] {
            let eps = int(1) - &q;
            let (mx, mq) = surface_curve(&bl1p2(&q), &eps).unwrap();
            assert_eq!(mx, (int(3) - &q) / (int(1) - &q * &q));
            assert_eq!(mq, int(3) / ((int(1) - &q) * (int(2) * &q + int(1))));
            assert_eq!(divisor_quotient_slope(&bl1p2(&q).as_divisor(), &eps).unwrap(), mq);
        }
    }

    #[test]
    fn divisor_formula_matches_engine() {
        // P³ blown up at a point, L = H − qE, Z = E, K + E = −4H + 3E, E³ = 1
        let q = rat(1, 3);
        let d = DivisorData {
            n: 3,
            lnj_zj: vec![int(1) - &q * &q * &q, &q * &q, -&q, int(1)],
            lzk: vec![int(-4) + int(3) * &q * &q, int(-3) * &q, int(3)],
        };
        let p = d.profile(Seshadri::Exact(int(1) - &q), Saturation::Yes).unwrap();
        for c in [rat(1, 5), rat(1, 2), rat(2, 3)] {
            assert_eq!(divisor_quotient_slope(&d, &c).unwrap(), mu_quotient(&p, &c).unwrap());
        }
        assert!(matches!(verdict(&p), Verdict::StrictlyUnstable { .. }));
    }

    #[test]
    fn surface_formulas_agree_on_p2_line() {
        // a line in P², L = O(1): K·L = −3, L² = 1, L·Z = 1, K·Z = −3, Z² = 1
        let d = SurfaceCurveData {
            kl: int(-3),
            l2: int(1),
            lz: int(1),
            kz: int(-3),
            z2: int(1),
            genus: Some(0),
        };
        assert!(d.adjunction_warning().is_none());
        let p = d.profile(Seshadri::Exact(int(1)), Saturation::Yes).unwrap();
        for c in [rat(1, 4), rat(1, 2), int(1)] {
            let (mx, mq) = surface_curve(&d, &c).unwrap();
            assert_eq!(mx, int(3));
            assert_eq!(mq, mu_quotient(&p, &c).unwrap());
            assert_eq!(mq, curve_in_nfold_quotient_slope(&d.as_curve(0), &c).unwrap());
            assert_eq!(mq, divisor_quotient_slope(&d.as_divisor(), &c).unwrap());
        }
        // divisor slab in P²: a₀(x) = (1−x)²/2
        assert_eq!(
            p.a0().as_poly().unwrap(),
            &Polynomial::from_ratios(&[(1, 2), (-1, 1), (1, 2)])
        );
    }

    #[test]
    fn minus_two_curve() {
        let rr = rat(9, 10);
        let d = SurfaceCurveData {
            kl: &rr - int(3),
            l2: rat(1, 2) + &rr - &rr * &rr,
            lz: int(1) - &rr,
            kz: int(0),
            z2: int(-2),
            genus: Some(0),
        };
        let c = &rr - rat(1, 2);
        let (mx, mq) = surface_curve(&d, &c).unwrap();
        assert_eq!(mx, rat(210, 59));
        assert_eq!(mq, rat(75, 22));
        assert_eq!(curve_in_nfold_quotient_slope(&d.as_curve(0), &c).unwrap(), mq);
    }

    #[test]
    fn adjunction_mismatch_warns() {
        let mut d = bl1p2(&rat(1, 2));
        d.kz = int(0);
        assert!(d.adjunction_warning().is_some());
    }

    #[test]
    fn curve_alphas_match_closed_form() {
        for n in 2..=4 {
            let d = CurveInNfoldData {
                n,
                genus: 2,
                lz: rat(7, 3),
                c1nu: rat(-1, 2),
            };
            let a0 = int(5);
            let a1 = int(4);
            let p = d.profile(&a0, &a1, Seshadri::Unknown, Saturation::Unknown).unwrap();
            let c = rat(1, 4);
            assert_eq!(
                mu_quotient(&p, &c).unwrap(),
                curve_in_nfold_quotient_slope(&d, &c).unwrap()
            );
        }
    }

    #[test]
    fn smooth_curves() {
        assert_eq!(smooth_curve_verdict(1, &int(1), 1).unwrap(), Verdict::StableAgainst);
        assert_eq!(
            smooth_curve_verdict(0, &int(1), 1).unwrap(),
            Verdict::SemistableOnly {
                equality_at: EqualityPoint::Exact(int(1))
            }
        );
        assert_eq!(
            smooth_curve_verdict(0, &int(2), 1).unwrap(),
            Verdict::SemistableOnly {
                equality_at: EqualityPoint::Exact(int(2))
            }
        );
        assert_eq!(smooth_curve_verdict(0, &int(2), 2).unwrap(), Verdict::StableAgainst);
        assert_eq!(smooth_curve_quotient_slope(0, &int(2), 1, &int(2)).unwrap(), rat(1, 2));
        assert_eq!(smooth_curve_quotient_slope(3, &int(2), 3, &rat(1, 2)).unwrap(), int(2));
        for g in 1..=3 {
            for l in 1..=3 {
                for d in 1..=3 {
                    assert_eq!(smooth_curve_verdict(g, &int(l), d).unwrap(), Verdict::StableAgainst);
                }
            }
        }
    }

    #[test]
    fn nef_limit() {
        for q in [rat(1, 2), rat(9, 10), rat(99, 100)] {
            assert!(nef_limit_test(&bl1p2(&q).as_divisor(), &(int(1) - &q)).unwrap());
        }
        let zero = DivisorData {
            n: 2,
            lnj_zj: vec![int(0), int(0), int(0)],
            lzk: vec![int(0), int(0)],
        };
        assert!(!nef_limit_test(&zero, &int(1)).unwrap());
    }

    #[test]
    fn blowup_shift_spot_check() {
        let p = bl1p2(&int(0)).profile(Seshadri::Exact(int(1)), Saturation::Yes);
        // q = 0 is not ample on the blow-up, so the data is rejected
        assert!(p.is_err());
        let base = bl1p2(&rat(1, 4))
            .profile(Seshadri::Exact(rat(3, 4)), Saturation::Yes)
            .unwrap();
        let shifted = blowup_repolarize(&base, &rat(1, 4)).unwrap();
        let direct = bl1p2(&rat(1, 2))
            .profile(Seshadri::Exact(rat(1, 2)), Saturation::Yes)
            .unwrap();
        assert_eq!(shifted, direct);
        let mx = slope_of_variety(&shifted.a0_at_zero(), &shifted.a1_at_zero()).unwrap();
        assert!(mu_ideal(&shifted, &rat(1, 2)).unwrap() > mx);
    }
}
