//! Scenario files: a TOML document with a `kind` tag, a table named after
//! the kind and rationals written as `"p/q"` strings. See
//! `docs/scenario-format.md` for the schema.

use std::fmt;

use num_traits::Signed;
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::bundles::{bundle_verdict, BaseData, BundleError, BundleReport, BundleScenario, SheafData, Subsheaf};
use crate::engine::{
    futaki, margin_polynomial, mu_ideal, mu_quotient, normal_cone_weights, slope_of_variety, verdict, EngineError,
    ProfileFunction, Saturation, Seshadri, SlopeProfile, Verdict,
};
use crate::exact::{parse_rational, PiecewisePolynomial, Polynomial, Rational};
use crate::geom::{
    curve_in_nfold_quotient_slope, divisor_quotient_slope, smooth_curve_profile, surface_curve, CurveInNfoldData,
    DivisorData, GeomError, SurfaceCurveData,
};
use crate::toric::{
    donaldson_normal_cone, donaldson_weights, toric_profile, toric_profile_auto, FaceSpec, Halfspace, Polytope,
    ToricError, ToricSubscheme,
};

#[derive(Debug, thiserror::Error)]
pub enum ScenarioError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: {message}")]
    Parse { path: String, message: String },
    #[error("{field}: {reason}")]
    Invalid { field: String, reason: String },
    #[error(transparent)]
    Geom(#[from] GeomError),
    #[error(transparent)]
    Toric(#[from] ToricError),
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error(transparent)]
    Bundle(#[from] BundleError),
}

fn invalid(field: &str, reason: impl fmt::Display) -> ScenarioError {
    ScenarioError::Invalid {
        field: field.to_string(),
        reason: reason.to_string(),
    }
}

/// An exact rational in a scenario file. Accepts `"p/q"` strings and bare
/// integers; always written back as a string.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Q(pub Rational);

impl Serialize for Q {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_string())
    }
}

impl<'de> Deserialize<'de> for Q {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = Q;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a rational as a \"p/q\" string or an integer")
            }
            fn visit_str<E: de::Error>(self, v: &str) -> Result<Q, E> {
                parse_rational(v).map(Q).map_err(E::custom)
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> Result<Q, E> {
                Ok(Q(Rational::from_integer(v.into())))
            }
            fn visit_f64<E: de::Error>(self, v: f64) -> Result<Q, E> {
                Err(E::custom(format!(
                    "float {v} is not exact; write it as a \"p/q\" string"
                )))
            }
        }
        d.deserialize_any(V)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    SurfaceCurve,
    Divisor,
    CurveInNfold,
    SmoothCurve,
    Toric,
    Bundle,
    RawProfile,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::SurfaceCurve => "surface-curve",
            Kind::Divisor => "divisor",
            Kind::CurveInNfold => "curve-in-nfold",
            Kind::SmoothCurve => "smooth-curve",
            Kind::Toric => "toric",
            Kind::Bundle => "bundle",
            Kind::RawProfile => "raw-profile",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundKind {
    Exact,
    LowerBound,
    Unknown,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SaturationIn {
    Yes,
    No,
    #[default]
    Unknown,
}

impl From<SaturationIn> for Saturation {
    fn from(s: SaturationIn) -> Self {
        match s {
            SaturationIn::Yes => Saturation::Yes,
            SaturationIn::No => Saturation::No,
            SaturationIn::Unknown => Saturation::Unknown,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", deny_unknown_fields)]
pub struct SeshadriIn {
    pub bound: BoundKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub value: Option<Q>,
    #[serde(default)]
    pub saturates: SaturationIn,
    /// Free-text justification, echoed in the report.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", deny_unknown_fields)]
pub struct SurfaceCurveIn {
    pub kl: Q,
    pub l2: Q,
    pub lz: Q,
    pub kz: Q,
    pub z2: Q,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub genus: Option<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", deny_unknown_fields)]
pub struct DivisorIn {
    pub n: usize,
    /// L^(n-j).Z^j for j = 0..=n.
    pub lnj_zj: Vec<Q>,
    /// L^(n-1-j).Z^j.(K+Z) for j = 0..n.
    pub lzk: Vec<Q>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", deny_unknown_fields)]
pub struct CurveInNfoldIn {
    pub n: usize,
    pub genus: u32,
    pub lz: Q,
    pub c1nu: Q,
    pub a0: Q,
    pub a1: Q,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", deny_unknown_fields)]
pub struct SmoothCurveIn {
    pub genus: u32,
    pub deg_l: Q,
    pub d: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", deny_unknown_fields)]
pub struct HalfspaceIn {
    pub normal: Vec<i64>,
    pub offset: Q,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", deny_unknown_fields)]
pub struct FaceIn {
    pub facet: usize,
    #[serde(default = "one")]
    pub multiplicity: u32,
}

fn one() -> u32 {
    1
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", deny_unknown_fields)]
pub struct ToricIn {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertices: Option<Vec<[Q; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub halfspaces: Option<Vec<HalfspaceIn>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub faces: Vec<FaceIn>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", deny_unknown_fields)]
pub struct SheafIn {
    pub rank: u32,
    pub deg: Q,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub not_direct_summand: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", deny_unknown_fields)]
pub struct BundleIn {
    pub genus: u32,
    /// Degree of O_B(1) on the base curve.
    pub d: Q,
    pub m: Q,
    pub e: SheafIn,
    #[serde(default)]
    pub subsheaves: Vec<SheafIn>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", deny_unknown_fields)]
pub struct RawProfileIn {
    pub dim: usize,
    /// Coefficients in increasing degree. For piecewise profiles, one list
    /// per piece.
    pub a0: Vec<Vec<Q>>,
    pub a1: Vec<Vec<Q>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub breakpoints: Option<Vec<Q>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Expect {
    Stable,
    Semistable,
    Unstable,
    Inconclusive,
}

impl Expect {
    pub fn tag(&self) -> &'static str {
        match self {
            Expect::Stable => "stable",
            Expect::Semistable => "semistable",
            Expect::Unstable => "unstable",
            Expect::Inconclusive => "inconclusive",
        }
    }
}

/// A parsed scenario file, field for field.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", deny_unknown_fields)]
pub struct Scenario {
    pub kind: Kind,
    pub name: String,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub description: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expect: Option<Expect>,
    /// Values of c at which to report μ_c(I_Z), μ_c(O_Z) and F₁.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub evaluate_at: Vec<Q>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seshadri: Option<SeshadriIn>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub surface_curve: Option<SurfaceCurveIn>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub divisor: Option<DivisorIn>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub curve_in_nfold: Option<CurveInNfoldIn>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub smooth_curve: Option<SmoothCurveIn>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub toric: Option<ToricIn>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bundle: Option<BundleIn>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub raw_profile: Option<RawProfileIn>,
}

/// Scenarios shipped with the crate, as (file name, contents).
pub const SHIPPED: &[(&str, &str)] = &[
    (
        "blp2_q_half.scenario",
        include_str!("../scenarios/blp2_q_half.scenario"),
    ),
    ("p1_point.scenario", include_str!("../scenarios/p1_point.scenario")),
    (
        "p2_point_toric.scenario",
        include_str!("../scenarios/p2_point_toric.scenario"),
    ),
    (
        "p2_point_raw.scenario",
        include_str!("../scenarios/p2_point_raw.scenario"),
    ),
    (
        "p2_line_divisor.scenario",
        include_str!("../scenarios/p2_line_divisor.scenario"),
    ),
    ("blp2_toric.scenario", include_str!("../scenarios/blp2_toric.scenario")),
    (
        "p1xp1_toric.scenario",
        include_str!("../scenarios/p1xp1_toric.scenario"),
    ),
    (
        "del_pezzo_minus_two.scenario",
        include_str!("../scenarios/del_pezzo_minus_two.scenario"),
    ),
    ("p3_line.scenario", include_str!("../scenarios/p3_line.scenario")),
    (
        "genus2_canonical.scenario",
        include_str!("../scenarios/genus2_canonical.scenario"),
    ),
    (
        "elliptic_split_bundle.scenario",
        include_str!("../scenarios/elliptic_split_bundle.scenario"),
    ),
];

/// Looks up a shipped scenario by file name, with or without the extension.
pub fn shipped(name: &str) -> Option<&'static str> {
    let stem = name.strip_suffix(".scenario").unwrap_or(name);
    SHIPPED
        .iter()
        .find(|(n, _)| n.strip_suffix(".scenario") == Some(stem))
        .map(|(_, s)| *s)
}

impl Scenario {
    /// Parses a scenario document; errors carry the path of the offending field.
    pub fn parse(text: &str) -> Result<Scenario, ScenarioError> {
        let de = toml::Deserializer::parse(text).map_err(|e| ScenarioError::Parse {
            path: "<document>".into(),
            message: e.message().to_string(),
        })?;
        let scn: Scenario = serde_path_to_error::deserialize(de).map_err(|e| ScenarioError::Parse {
            path: e.path().to_string(),
            message: e.inner().message().to_string(),
        })?;
        scn.check_tables()?;
        Ok(scn)
    }

    pub fn load(path: &std::path::Path) -> Result<Scenario, ScenarioError> {
        let text = std::fs::read_to_string(path).map_err(|source| ScenarioError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Scenario::parse(&text)
    }

    /// The scenario as TOML. Parsing the result gives back an equal value.
    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("scenario serializes")
    }

    fn check_tables(&self) -> Result<(), ScenarioError> {
        let present = [
            (Kind::SurfaceCurve, self.surface_curve.is_some()),
            (Kind::Divisor, self.divisor.is_some()),
            (Kind::CurveInNfold, self.curve_in_nfold.is_some()),
            (Kind::SmoothCurve, self.smooth_curve.is_some()),
            (Kind::Toric, self.toric.is_some()),
            (Kind::Bundle, self.bundle.is_some()),
            (Kind::RawProfile, self.raw_profile.is_some()),
        ];
        for (k, here) in present {
            if k == self.kind && !here {
                return Err(invalid(&k.to_string(), format!("kind = \"{k}\" needs a [{k}] table")));
            }
            if k != self.kind && here {
                return Err(invalid(
                    &k.to_string(),
                    format!("table not allowed when kind = \"{}\"", self.kind),
                ));
            }
        }
        Ok(())
    }

    fn seshadri_pair(&self) -> Result<Option<(Seshadri, Saturation)>, ScenarioError> {
        let Some(s) = &self.seshadri else {
            return Ok(None);
        };
        let ses = match (s.bound, &s.value) {
            (BoundKind::Unknown, None) => Seshadri::Unknown,
            (BoundKind::Unknown, Some(_)) => {
                return Err(invalid("seshadri.value", "must be absent when bound = \"unknown\""))
            }
            (_, None) => return Err(invalid("seshadri.value", "required unless bound = \"unknown\"")),
            (_, Some(v)) if !v.0.is_positive() => return Err(invalid("seshadri.value", "must be positive")),
            (BoundKind::Exact, Some(v)) => Seshadri::Exact(v.0.clone()),
            (BoundKind::LowerBound, Some(v)) => Seshadri::LowerBound(v.0.clone()),
        };
        Ok(Some((ses, s.saturates.into())))
    }

    fn user_seshadri(&self) -> Result<(Seshadri, Saturation), ScenarioError> {
        Ok(self
            .seshadri_pair()?
            .unwrap_or((Seshadri::Unknown, Saturation::Unknown)))
    }
}

/// Where the Seshadri data came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    UserSupplied,
    Computed,
    /// ε(ℙ(F)) = 1 for projective subbundles.
    Theorem,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::UserSupplied => "user-supplied",
            Provenance::Computed => "computed",
            Provenance::Theorem => "from the projective-subbundle theorem",
        })
    }
}

/// Values at one c.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Evaluation {
    pub c: Rational,
    pub mu_ideal: Rational,
    pub mu_quotient: Rational,
    pub margin: Rational,
    pub futaki: Rational,
    /// An independent value of μ_c(O_Z) or F₁ from a closed form, with its label.
    pub cross_check: Option<(String, Rational, Rational)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProfileAnalysis {
    pub profile: SlopeProfile,
    pub mu_x: Rational,
    pub provenance: Provenance,
    pub margin: ProfileFunction,
    pub verdict: Verdict,
    pub evaluations: Vec<Evaluation>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Profile(ProfileAnalysis),
    Bundle(BundleReport),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Analysis {
    pub scenario: Scenario,
    pub warnings: Vec<String>,
    pub outcome: Outcome,
}

impl Analysis {
    pub fn verdict(&self) -> &Verdict {
        match &self.outcome {
            Outcome::Profile(p) => &p.verdict,
            Outcome::Bundle(b) => &b.aggregate,
        }
    }

    pub fn exit_code(&self) -> i32 {
        self.verdict().exit_code()
    }

    /// Whether the verdict matches the scenario's `expect`, if it has one.
    pub fn meets_expectation(&self) -> Option<bool> {
        self.scenario.expect.map(|e| e.tag() == self.verdict().tag())
    }
}

/// Independent closed form for μ_c(O_Z), where the backend has one.
type Closed = Box<dyn Fn(&Rational) -> Result<(String, Rational), ScenarioError>>;

/// The profile a scenario describes, with the Seshadri provenance and an
/// optional closed-form cross-check. Bundles have one profile per subsheaf
/// and are not handled here.
pub fn build_profile(scn: &Scenario) -> Result<(SlopeProfile, Provenance, Vec<String>, Option<Closed>), ScenarioError> {
    let mut warnings = Vec::new();
    let user = scn.seshadri_pair()?;
    let (ses, sat) = scn.user_seshadri()?;
    let out = match scn.kind {
        Kind::SurfaceCurve => {
            let s = scn.surface_curve.as_ref().expect("checked");
            let d = SurfaceCurveData {
                kl: s.kl.0.clone(),
                l2: s.l2.0.clone(),
                lz: s.lz.0.clone(),
                kz: s.kz.0.clone(),
                z2: s.z2.0.clone(),
                genus: s.genus,
            };
            warnings.extend(d.adjunction_warning());
            let p = d.profile(ses, sat)?;
            let closed: Closed = Box::new(move |c| Ok(("surface closed form".into(), surface_curve(&d, c)?.1)));
            (p, Provenance::UserSupplied, Some(closed))
        }
        Kind::Divisor => {
            let s = scn.divisor.as_ref().expect("checked");
            let d = DivisorData {
                n: s.n,
                lnj_zj: s.lnj_zj.iter().map(|q| q.0.clone()).collect(),
                lzk: s.lzk.iter().map(|q| q.0.clone()).collect(),
            };
            let p = d.profile(ses, sat)?;
            let closed: Closed = Box::new(move |c| Ok(("divisor closed form".into(), divisor_quotient_slope(&d, c)?)));
            (p, Provenance::UserSupplied, Some(closed))
        }
        Kind::CurveInNfold => {
            let s = scn.curve_in_nfold.as_ref().expect("checked");
            let d = CurveInNfoldData {
                n: s.n,
                genus: s.genus,
                lz: s.lz.0.clone(),
                c1nu: s.c1nu.0.clone(),
            };
            let p = d.profile(&s.a0.0, &s.a1.0, ses, sat)?;
            let closed: Closed = Box::new(move |c| {
                Ok((
                    "curve-in-n-fold closed form".into(),
                    curve_in_nfold_quotient_slope(&d, c)?,
                ))
            });
            (p, Provenance::UserSupplied, Some(closed))
        }
        Kind::SmoothCurve => {
            let s = scn.smooth_curve.as_ref().expect("checked");
            let mut p = smooth_curve_profile(s.genus, &s.deg_l.0, s.d)?;
            let mut prov = Provenance::Computed;
            if let Some((ses, sat)) = user {
                p = p.with_seshadri(ses, sat)?;
                prov = Provenance::UserSupplied;
            }
            let closed: Closed = Box::new(|c| Ok(("1/c on a curve".into(), c.recip())));
            (p, prov, Some(closed))
        }
        Kind::Toric => {
            let s = scn.toric.as_ref().expect("checked");
            let poly = polytope(s)?;
            let z = subscheme(s)?;
            let (p, prov) = match user {
                Some((ses, sat)) => (toric_profile(&poly, &z, ses, sat)?, Provenance::UserSupplied),
                None => (toric_profile_auto(&poly, &z)?, Provenance::Computed),
            };
            (p, prov, None)
        }
        Kind::RawProfile => {
            let s = scn.raw_profile.as_ref().expect("checked");
            (raw_profile(s, ses, sat)?, Provenance::UserSupplied, None)
        }
        Kind::Bundle => return Err(invalid("kind", "bundle scenarios have one profile per subsheaf")),
    };
    let (p, prov, closed) = out;
    Ok((p, prov, warnings, closed))
}

fn polytope(s: &ToricIn) -> Result<Polytope, ScenarioError> {
    match (&s.vertices, &s.halfspaces) {
        (Some(v), None) => {
            let pts: Vec<_> = v.iter().map(|[x, y]| [x.0.clone(), y.0.clone()]).collect();
            Ok(Polytope::from_vertices(&pts).map_err(|e| invalid("toric.vertices", e))?)
        }
        (None, Some(h)) => {
            let hs = h
                .iter()
                .map(|h| Halfspace::new(h.normal.clone(), h.offset.0.clone()))
                .collect();
            let dim = h.first().map_or(2, |h| h.normal.len());
            Ok(Polytope::from_halfspaces(dim, hs).map_err(|e| invalid("toric.halfspaces", e))?)
        }
        _ => Err(invalid("toric", "give exactly one of vertices or halfspaces")),
    }
}

fn subscheme(s: &ToricIn) -> Result<ToricSubscheme, ScenarioError> {
    if s.faces.is_empty() {
        return Err(invalid("toric.faces", "at least one face is needed"));
    }
    Ok(ToricSubscheme::new(
        s.faces
            .iter()
            .map(|f| FaceSpec {
                facet: f.facet,
                multiplicity: f.multiplicity,
            })
            .collect(),
    ))
}

/// The polytope of a toric scenario, for the scan.
pub fn toric_polytope(scn: &Scenario) -> Result<Polytope, ScenarioError> {
    match (&scn.kind, &scn.toric) {
        (Kind::Toric, Some(t)) => polytope(t),
        _ => Err(invalid("kind", "scan needs a toric scenario")),
    }
}

fn raw_profile(s: &RawProfileIn, ses: Seshadri, sat: Saturation) -> Result<SlopeProfile, ScenarioError> {
    let poly = |v: &Vec<Q>| Polynomial::new(v.iter().map(|q| q.0.clone()).collect());
    let a0: Vec<Polynomial> = s.a0.iter().map(poly).collect();
    let a1: Vec<Polynomial> = s.a1.iter().map(poly).collect();
    match &s.breakpoints {
        None => {
            if a0.len() != 1 || a1.len() != 1 {
                return Err(invalid(
                    "raw-profile.a0",
                    "without breakpoints a0 and a1 are single coefficient lists",
                ));
            }
            Ok(SlopeProfile::new(s.dim, a0[0].clone(), a1[0].clone(), ses, sat)?)
        }
        Some(bps) => {
            let bps: Vec<Rational> = bps.iter().map(|q| q.0.clone()).collect();
            let p0 = PiecewisePolynomial::new(bps.clone(), a0).map_err(|e| invalid("raw-profile.a0", e))?;
            let p1 = PiecewisePolynomial::new(bps, a1).map_err(|e| invalid("raw-profile.a1", e))?;
            Ok(SlopeProfile::new(s.dim, p0, p1, ses, sat)?)
        }
    }
}

fn bundle_scenario(s: &BundleIn) -> Result<BundleScenario, ScenarioError> {
    if !s.d.0.is_positive() {
        return Err(invalid("bundle.d", "degree of O_B(1) must be positive"));
    }
    let base = BaseData::curve(s.genus, s.d.0.clone());
    if s.e.rank < 2 {
        return Err(invalid("bundle.e.rank", "E needs rank at least 2 to have subsheaves"));
    }
    for (i, f) in s.subsheaves.iter().enumerate() {
        if f.rank == 0 || f.rank >= s.e.rank {
            return Err(invalid(
                &format!("bundle.subsheaves[{i}].rank"),
                format!("must lie in 1..{}", s.e.rank),
            ));
        }
    }
    Ok(BundleScenario {
        base,
        e: SheafData::new(s.e.rank, s.e.deg.0.clone()),
        m: s.m.0.clone(),
        subsheaves: s
            .subsheaves
            .iter()
            .map(|f| Subsheaf {
                sheaf: SheafData::new(f.rank, f.deg.0.clone()),
                not_direct_summand: f.not_direct_summand,
            })
            .collect(),
    })
}

/// The per-subsheaf profiles of a bundle scenario.
pub fn bundle_profiles(scn: &Scenario) -> Result<Vec<(SheafData, SlopeProfile)>, ScenarioError> {
    let b = bundle_scenario(scn.bundle.as_ref().ok_or_else(|| invalid("bundle", "missing"))?)?;
    b.subsheaves
        .iter()
        .map(|f| {
            Ok((
                f.sheaf.clone(),
                crate::bundles::subbundle_profile(&b.base, &b.e, &f.sheaf, &b.m)?,
            ))
        })
        .collect()
}

/// The c values to report: `evaluate_at`, or ε when that is exact.
fn default_points(scn: &Scenario, p: &SlopeProfile) -> Vec<Rational> {
    if !scn.evaluate_at.is_empty() {
        return scn.evaluate_at.iter().map(|q| q.0.clone()).collect();
    }
    p.seshadri().exact().cloned().into_iter().collect()
}

/// Values of the profile at one c, with the closed-form check when available.
pub fn evaluate_at(p: &SlopeProfile, c: &Rational, closed: Option<&Closed>) -> Result<Evaluation, ScenarioError> {
    let w = normal_cone_weights(p, c)?;
    let mq = mu_quotient(p, c)?;
    let cross_check = match closed {
        Some(f) => {
            let (label, v) = f(c)?;
            Some((label, v, mq.clone()))
        }
        None => None,
    };
    Ok(Evaluation {
        c: c.clone(),
        mu_ideal: mu_ideal(p, c)?,
        mu_quotient: mq,
        margin: margin_polynomial(p).eval(c)?,
        futaki: futaki(&p.a0_at_zero(), &p.a1_at_zero(), &w)?,
        cross_check,
    })
}

/// Runs a parsed scenario.
pub fn analyse(scn: &Scenario) -> Result<Analysis, ScenarioError> {
    if scn.kind == Kind::Bundle {
        let b = bundle_scenario(scn.bundle.as_ref().expect("checked"))?;
        let mut warnings = Vec::new();
        let (mt, warn) = crate::bundles::tilde_m(&b.base, &b.e, &b.m);
        warnings.extend(warn);
        if mt.is_positive() && b.subsheaves.is_empty() {
            warnings.push("no subsheaves listed; nothing to test".into());
        }
        let report = bundle_verdict(&b)?;
        return Ok(Analysis {
            scenario: scn.clone(),
            warnings,
            outcome: Outcome::Bundle(report),
        });
    }
    let (profile, provenance, mut warnings, closed) = build_profile(scn)?;
    let mu_x = slope_of_variety(&profile.a0_at_zero(), &profile.a1_at_zero())?;
    let mut evaluations = Vec::new();
    for c in default_points(scn, &profile) {
        evaluations.push(
            evaluate_at(&profile, &c, closed.as_ref()).map_err(|e| invalid("evaluate-at", format!("c = {c}: {e}")))?,
        );
    }
    if scn.kind == Kind::Toric {
        warnings.extend(donaldson_notes(scn, &profile, &evaluations)?);
    }
    for e in &evaluations {
        if let Some((label, v, engine)) = &e.cross_check {
            if v != engine {
                warnings.push(format!(
                    "{label} gives mu_c(O_Z) = {v} at c = {}, engine gives {engine}",
                    e.c
                ));
            }
        }
    }
    Ok(Analysis {
        scenario: scn.clone(),
        warnings,
        outcome: Outcome::Profile(ProfileAnalysis {
            margin: margin_polynomial(&profile),
            verdict: verdict(&profile),
            profile,
            mu_x,
            provenance,
            evaluations,
        }),
    })
}

/// Donaldson's boundary weights give the same Futaki invariant; reported as
/// a warning only when they disagree or do not apply.
fn donaldson_notes(scn: &Scenario, p: &SlopeProfile, evals: &[Evaluation]) -> Result<Vec<String>, ScenarioError> {
    let t = scn.toric.as_ref().expect("checked");
    let (poly, z) = (polytope(t)?, subscheme(t)?);
    let mut notes = Vec::new();
    for e in evals {
        match donaldson_weights(&poly, &z, &e.c) {
            Ok(raw) => {
                let w = donaldson_normal_cone(&raw, &e.c, &p.a0_at_zero(), &p.a1_at_zero());
                let f = futaki(&p.a0_at_zero(), &p.a1_at_zero(), &w)?;
                if f != e.futaki {
                    notes.push(format!(
                        "Donaldson weights give F1 = {f} at c = {}, engine gives {}",
                        e.c, e.futaki
                    ));
                }
            }
            Err(ToricError::FractionalSlope(_)) => {
                notes.push("Donaldson's boundary formula skipped: level function has fractional gradient".into());
                break;
            }
            Err(err) => return Err(err.into()),
        }
    }
    Ok(notes)
}

/// The Seshadri bound used for grids: ε when certified, else the end of
/// the support.
pub fn grid_bound(p: &SlopeProfile) -> Option<Rational> {
    p.seshadri().certified().cloned().or_else(|| p.a0().end().cloned())
}

/// `k` evenly spaced points in (0, bound].
pub fn even_grid(bound: &Rational, k: u32) -> Vec<Rational> {
    (1..=k).map(|i| bound * Rational::new(i.into(), k.into())).collect()
}

/// Parses a comma-separated list of rationals.
pub fn parse_grid(s: &str) -> Result<Vec<Rational>, ScenarioError> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .enumerate()
        .map(|(i, t)| parse_rational(t).map_err(|e| invalid(&format!("grid[{i}]"), e)))
        .collect()
}
