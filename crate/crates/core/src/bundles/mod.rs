//! Projective bundles ℙ(E) over a curve: sheaf slopes, the m̃ change of
//! variables, exact a₀/a₁ and the slope gap against projective subbundles.

use num_traits::{One, Signed};

use crate::engine::{
    futaki, normal_cone_weights, profile_from_alphas, verdict, EngineError, Saturation, Seshadri, SlopeProfile, Verdict,
};
use crate::exact::{Polynomial, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BundleError {
    #[error("base dimension {0} is not supported: the lower-order terms need Chern classes of E")]
    BaseDimension(u32),
    #[error("invalid data: {0}")]
    InvalidData(String),
    #[error("m~ = {0} is not positive, so L_m is not ample")]
    NotAmple(Rational),
    #[error(transparent)]
    Engine(#[from] EngineError),
}

fn r(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn factorial(n: u32) -> Rational {
    (1..=i64::from(n)).map(r).product()
}

/// (B, O_B(1)) through a₀^B and μ(B).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BaseData {
    pub b: u32,
    pub a0b: Rational,
    pub mu_b: Rational,
}

impl BaseData {
    /// A genus-g curve with deg O_B(1) = d: a₀^B = d, μ(B) = (1 − g)/d.
    pub fn curve(genus: u32, d: Rational) -> Self {
        let mu_b = r(1 - i64::from(genus)) / &d;
        BaseData { b: 1, a0b: d, mu_b }
    }

    pub fn validate(&self) -> Result<(), BundleError> {
        if self.b != 1 {
            return Err(BundleError::BaseDimension(self.b));
        }
        if !self.a0b.is_positive() {
            return Err(BundleError::InvalidData(format!(
                "a0^B = {} must be positive",
                self.a0b
            )));
        }
        Ok(())
    }

    /// Warning when μ(B) disagrees with (1 − g)/a₀^B for the stated genus.
    pub fn genus_warning(&self, genus: u32) -> Option<String> {
        let expect = r(1 - i64::from(genus)) / &self.a0b;
        (expect != self.mu_b).then(|| format!("mu(B) = {} but (1-g)/d = {expect}", self.mu_b))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SheafData {
    pub rank: u32,
    pub deg: Rational,
}

impl SheafData {
    pub fn new(rank: u32, deg: Rational) -> Self {
        SheafData { rank, deg }
    }
}

/// μ_E = deg E/(a₀^B (b−1)! rank E) + μ(B).
pub fn mu_sheaf(base: &BaseData, s: &SheafData) -> Rational {
    let bf = factorial(base.b.saturating_sub(1));
    &s.deg / (&base.a0b * bf * r(s.rank.into())) + &base.mu_b
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlopeIdentities {
    /// μ of S^k E*.
    pub sym_dual: Rational,
    /// μ of E ⊗ F.
    pub tensor: Rational,
    /// μ of E/F, when F has smaller rank.
    pub quotient: Option<Rational>,
}

/// μ_{S^k E*}, μ_{E⊗F} and μ_{E/F} computed from ranks and degrees, each
/// checked against the closed forms (1+k)μ(B) − kμ_E, μ_E + μ_F − μ(B) and
/// rank additivity.
pub fn slope_identities(base: &BaseData, e: &SheafData, f: &SheafData, k: u32) -> Result<SlopeIdentities, BundleError> {
    base.validate()?;
    if e.rank == 0 || f.rank == 0 {
        return Err(BundleError::InvalidData("ranks must be positive".into()));
    }
    let (me, mf) = (mu_sheaf(base, e), mu_sheaf(base, f));
    let rank_sym = num_integer::binomial(u64::from(e.rank) + u64::from(k) - 1, u64::from(k)) as u32;
    let sym = SheafData::new(rank_sym, -r(k.into()) * r(rank_sym.into()) * &e.deg / r(e.rank.into()));
    let sym_dual = mu_sheaf(base, &sym);
    assert_eq!(sym_dual, r(1 + i64::from(k)) * &base.mu_b - r(k.into()) * &me);
    let ten = SheafData::new(e.rank * f.rank, &e.deg * r(f.rank.into()) + &f.deg * r(e.rank.into()));
    let tensor = mu_sheaf(base, &ten);
    assert_eq!(tensor, &me + &mf - &base.mu_b);
    let quotient = (f.rank < e.rank).then(|| {
        let g = SheafData::new(e.rank - f.rank, &e.deg - &f.deg);
        let mg = mu_sheaf(base, &g);
        assert_eq!(r(e.rank.into()) * &me, r(f.rank.into()) * &mf + r(g.rank.into()) * &mg);
        mg
    });
    Ok(SlopeIdentities {
        sym_dual,
        tensor,
        quotient,
    })
}

/// m̃ = m + (μ(B) − μ_E)/b, with a warning when m̃ ≤ 0 (L_m not ample,
/// since deg L_m = a₀^B(r+1)m̃ on a curve base).
pub fn tilde_m(base: &BaseData, e: &SheafData, m: &Rational) -> (Rational, Option<String>) {
    let mt = m + (&base.mu_b - mu_sheaf(base, e)) / r(base.b.max(1).into());
    let warn = (!mt.is_positive()).then(|| format!("m~ = {mt} <= 0, so L_m is not ample"));
    (mt, warn)
}

/// Exact a₀, a₁ of (ℙ(E), L_m) over a curve:
/// a₀ = a₀^B m̃/r!, a₁ = (a₀^B/r!)(r(r+1)/2·m̃ + μ(B)).
pub fn projbundle_a0a1(base: &BaseData, e: &SheafData, m: &Rational) -> Result<(Rational, Rational), BundleError> {
    base.validate()?;
    if e.rank == 0 {
        return Err(BundleError::InvalidData("rank E must be positive".into()));
    }
    let rr = e.rank - 1;
    let (mt, _) = tilde_m(base, e, m);
    let lead = &base.a0b / factorial(rr);
    let mu_pr = r((i64::from(rr) * (i64::from(rr) + 1)) / 2);
    Ok((&lead * &mt, lead * (mu_pr * mt + &base.mu_b)))
}

/// A subsheaf to test, with the user's assertion about direct summands.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subsheaf {
    pub sheaf: SheafData,
    pub not_direct_summand: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BundleScenario {
    pub base: BaseData,
    pub e: SheafData,
    pub m: Rational,
    pub subsheaves: Vec<Subsheaf>,
}

struct Ranks {
    r: u32,
    s: u32,
    t: u32,
}

fn ranks(e: &SheafData, f: &SheafData) -> Result<Ranks, BundleError> {
    if f.rank == 0 || f.rank >= e.rank {
        return Err(BundleError::InvalidData(format!(
            "subsheaf rank {} must lie in 1..{}",
            f.rank, e.rank
        )));
    }
    Ok(Ranks {
        r: e.rank - 1,
        s: f.rank - 1,
        t: e.rank - f.rank - 1,
    })
}

fn checked_tilde_m(base: &BaseData, e: &SheafData, m: &Rational) -> Result<Rational, BundleError> {
    base.validate()?;
    let (mt, _) = tilde_m(base, e, m);
    if !mt.is_positive() {
        return Err(BundleError::NotAmple(mt));
    }
    Ok(mt)
}

/// α₁, α₂ for ℙ(F) ⊂ ℙ(E), exact over a curve:
/// α₁ = a₀^B/(s!t!)·(1−x)ˢxᵗ(m̃ + γ), α₂ = a₀^B/(s!t!)·[δ(m̃ + γ) + μ(B)(1−x)ˢxᵗ],
/// with γ = (μ_E − μ_F)(1 − x(r+1)/(t+1)) and
/// 2δ = s(s+1)(1−x)^{s−1}xᵗ + t(t+1)(1−x)ˢx^{t−1}.
pub fn subbundle_alphas(
    base: &BaseData,
    e: &SheafData,
    f: &SheafData,
    m: &Rational,
) -> Result<(Polynomial, Polynomial), BundleError> {
    let mt = checked_tilde_m(base, e, m)?;
    let Ranks { r: rr, s, t } = ranks(e, f)?;
    let diff = mu_sheaf(base, e) - mu_sheaf(base, f);
    let one_minus_x = Polynomial::new(vec![Rational::one(), -Rational::one()]);
    let pow = |p: &Polynomial, k: u32| (0..k).fold(Polynomial::constant(Rational::one()), |acc, _| &acc * p);
    let x = Polynomial::x();
    let base_term = &pow(&one_minus_x, s) * &pow(&x, t);
    let gamma = Polynomial::new(vec![diff.clone(), -&diff * r(i64::from(rr) + 1) / r(i64::from(t) + 1)]);
    let m_gamma = &Polynomial::constant(mt) + &gamma;
    let mut two_delta = Polynomial::zero();
    if s > 0 {
        two_delta =
            &two_delta + &(&pow(&one_minus_x, s - 1) * &pow(&x, t)).scale(&r(i64::from(s) * (i64::from(s) + 1)));
    }
    if t > 0 {
        two_delta =
            &two_delta + &(&pow(&one_minus_x, s) * &pow(&x, t - 1)).scale(&r(i64::from(t) * (i64::from(t) + 1)));
    }
    let delta = two_delta.scale(&Rational::new(1.into(), 2.into()));
    let coef = &base.a0b / (factorial(s) * factorial(t));
    let alpha1 = (&base_term * &m_gamma).scale(&coef);
    let alpha2 = (&(&delta * &m_gamma) + &base_term.scale(&base.mu_b)).scale(&coef);
    Ok((alpha1, alpha2))
}

/// The full profile of ℙ(E) against ℙ(F), with ε = 1 and saturation at ε,
/// as the proposition on Seshadri constants of projective subbundles gives
/// when μ_F ≥ μ_E and m is large.
pub fn subbundle_profile(
    base: &BaseData,
    e: &SheafData,
    f: &SheafData,
    m: &Rational,
) -> Result<SlopeProfile, BundleError> {
    let (al1, al2) = subbundle_alphas(base, e, f, m)?;
    let (a0, a1) = projbundle_a0a1(base, e, m)?;
    Ok(profile_from_alphas(
        e.rank as usize,
        &a0,
        &a1,
        &al1,
        &al2,
        Seshadri::Exact(Rational::one()),
        Saturation::Yes,
    )?)
}

/// μ₁(O_ℙ(F), L_m) − μ(ℙ(E), L_m) = C(μ_E − μ_F)[(r+1)m̃ − μ(B)] with
/// C = (a₀^B)²(s+1)/((r+2)! r! a₀ ∫₀¹(1−x)α₁) and
/// ∫₀¹(1−x)α₁ = a₀^B(s+1)/(r+1)!·[m̃ + (μ_E − μ_F)/(r+2)].
pub fn subbundle_slope_gap(
    base: &BaseData,
    e: &SheafData,
    f: &SheafData,
    m: &Rational,
) -> Result<Rational, BundleError> {
    let mt = checked_tilde_m(base, e, m)?;
    let Ranks { r: rr, s, .. } = ranks(e, f)?;
    let diff = mu_sheaf(base, e) - mu_sheaf(base, f);
    let (a0, _) = projbundle_a0a1(base, e, m)?;
    let s1 = r(i64::from(s) + 1);
    let r1 = r(i64::from(rr) + 1);
    let integral = &base.a0b * &s1 / factorial(rr + 1) * (&mt + &diff / r(i64::from(rr) + 2));
    if !integral.is_positive() {
        return Err(BundleError::InvalidData(format!(
            "integral of (1-x) alpha_1 = {integral} must be positive"
        )));
    }
    let c = &base.a0b * &base.a0b * s1 / (factorial(rr + 2) * factorial(rr) * a0 * integral);
    Ok(c * diff * (r1 * mt - &base.mu_b))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsheafReport {
    pub sheaf: SheafData,
    pub mu_f: Rational,
    pub gap: Rational,
    /// Futaki invariant of the deformation to the normal cone at c = 1.
    pub futaki: Rational,
    pub verdict: Verdict,
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BundleReport {
    pub mu_e: Rational,
    pub tilde_m: Rational,
    pub a0: Rational,
    pub a1: Rational,
    pub subsheaves: Vec<SubsheafReport>,
    pub aggregate: Verdict,
}

/// Verdict of ℙ(E) against each listed ℙ(F), taken from the engine on the
/// exact profile under the hypothesis ε(ℙ(F)) = 1 with saturation. The
/// hypothesis is known for μ_F ≥ μ_E and m ≫ 0; for
/// μ_F < μ_E it is recorded as an assumption.
pub fn bundle_verdict(scn: &BundleScenario) -> Result<BundleReport, BundleError> {
    let mt = checked_tilde_m(&scn.base, &scn.e, &scn.m)?;
    let (a0, a1) = projbundle_a0a1(&scn.base, &scn.e, &scn.m)?;
    let mu_e = mu_sheaf(&scn.base, &scn.e);
    let mut reports = Vec::new();
    for sub in &scn.subsheaves {
        let f = &sub.sheaf;
        let mu_f = mu_sheaf(&scn.base, f);
        let gap = subbundle_slope_gap(&scn.base, &scn.e, f, &scn.m)?;
        let profile = subbundle_profile(&scn.base, &scn.e, f, &scn.m)?;
        let w = normal_cone_weights(&profile, &Rational::one())?;
        let fut = futaki(&a0, &a1, &w)?;
        let v = verdict(&profile);
        let mut notes = Vec::new();
        if mu_f >= mu_e {
            notes.push("eps(P(F)) = 1 with saturation, valid for m >> 0".to_string());
        } else {
            notes.push("eps(P(F)) = 1 assumed (only proved when mu_F >= mu_E)".to_string());
        }
        if mu_f == mu_e && sub.not_direct_summand {
            notes.push("F is not a direct summand: equality at c = 1 rules out polystability".to_string());
        }
        reports.push(SubsheafReport {
            sheaf: f.clone(),
            mu_f,
            gap,
            futaki: fut,
            verdict: v,
            notes,
        });
    }
    let aggregate = reports
        .iter()
        .map(|s| s.verdict.clone())
        .max_by_key(Verdict::severity)
        .unwrap_or(Verdict::StableAgainst);
    Ok(BundleReport {
        mu_e,
        tilde_m: mt,
        a0,
        a1,
        subsheaves: reports,
        aggregate,
    })
}
