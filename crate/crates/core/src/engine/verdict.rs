use std::fmt;

use num_traits::{Signed, Zero};

use crate::exact::{isolate_roots, midpoint, Rational, RootLocation};

use super::slopes::margin_polynomial;
use super::{Saturation, Seshadri, SlopeProfile};

/// Where μ_c(I_Z) = μ(X) holds; may be an irrational point known only
/// through an isolating interval.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EqualityPoint {
    Exact(Rational),
    Isolated { lo: Rational, hi: Rational },
}

impl From<RootLocation> for EqualityPoint {
    fn from(r: RootLocation) -> Self {
        match r {
            RootLocation::Exact(x) => EqualityPoint::Exact(x),
            RootLocation::Isolated { lo, hi } => EqualityPoint::Isolated { lo, hi },
        }
    }
}

impl fmt::Display for EqualityPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EqualityPoint::Exact(x) => write!(f, "{x}"),
            EqualityPoint::Isolated { lo, hi } => write!(f, "irrational in ({lo}, {hi})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    /// μ_c(I_Z) < μ(X) on the whole admissible range, endpoint included
    /// where it counts.
    StableAgainst,
    /// μ_c(I_Z) ≤ μ(X) with equality somewhere.
    SemistableOnly { equality_at: EqualityPoint },
    /// μ_c(I_Z) > μ(X) for every c in the closed witness interval.
    StrictlyUnstable { witness: (Rational, Rational) },
    /// Nothing destabilizing on `(0, certified]`, but the rest of the range
    /// could not be decided.
    Inconclusive {
        reason: String,
        certified: Option<Rational>,
    },
}

impl Verdict {
    /// 0 for stable or semistable, 2 for unstable, 3 for inconclusive.
    pub fn exit_code(&self) -> i32 {
        match self {
            Verdict::StableAgainst | Verdict::SemistableOnly { .. } => 0,
            Verdict::StrictlyUnstable { .. } => 2,
            Verdict::Inconclusive { .. } => 3,
        }
    }

    pub fn tag(&self) -> &'static str {
        match self {
            Verdict::StableAgainst => "stable",
            Verdict::SemistableOnly { .. } => "semistable",
            Verdict::StrictlyUnstable { .. } => "unstable",
            Verdict::Inconclusive { .. } => "inconclusive",
        }
    }

    /// The same verdict with every c-value multiplied by `r`, as happens
    /// when L is replaced by L^r.
    pub fn rescaled(&self, r: &Rational) -> Verdict {
        let s = |x: &Rational| x * r;
        match self {
            Verdict::SemistableOnly { equality_at } => Verdict::SemistableOnly {
                equality_at: match equality_at {
                    EqualityPoint::Exact(x) => EqualityPoint::Exact(s(x)),
                    EqualityPoint::Isolated { lo, hi } => EqualityPoint::Isolated { lo: s(lo), hi: s(hi) },
                },
            },
            Verdict::StrictlyUnstable { witness: (a, b) } => Verdict::StrictlyUnstable { witness: (s(a), s(b)) },
            Verdict::Inconclusive { reason, certified } => Verdict::Inconclusive {
                reason: reason.clone(),
                certified: certified.as_ref().map(s),
            },
            Verdict::StableAgainst => Verdict::StableAgainst,
        }
    }

    /// Ordering by badness, used to aggregate several verdicts.
    pub fn severity(&self) -> u8 {
        match self {
            Verdict::StableAgainst => 0,
            Verdict::SemistableOnly { .. } => 1,
            Verdict::Inconclusive { .. } => 2,
            Verdict::StrictlyUnstable { .. } => 3,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::StableAgainst => f.write_str("stable"),
            Verdict::SemistableOnly { equality_at } => write!(f, "semistable, equality at c = {equality_at}"),
            Verdict::StrictlyUnstable { witness: (a, b) } => {
                write!(f, "strictly unstable, mu_c(I_Z) > mu(X) for c in [{a}, {b}]")
            }
            Verdict::Inconclusive { reason, certified } => match certified {
                Some(c) => write!(f, "inconclusive ({reason}); no destabilizing c in (0, {c}]"),
                None => write!(f, "inconclusive ({reason})"),
            },
        }
    }
}

/// Decides slope (semi)stability against Z from the sign of the margin
/// N(c) on the admissible range.
pub fn verdict(profile: &SlopeProfile) -> Verdict {
    let bound = match profile.seshadri() {
        Seshadri::Unknown => {
            return Verdict::Inconclusive {
                reason: "Seshadri constant unknown".into(),
                certified: None,
            }
        }
        Seshadri::Exact(e) | Seshadri::LowerBound(e) => e.clone(),
    };
    let margin = margin_polynomial(profile);
    let zero = Rational::zero();
    let mut interior_zero: Option<EqualityPoint> = None;
    let mut zero_at_end = false;
    for (lo, hi, p) in margin.segments_within(&zero, &bound) {
        if p.is_zero() {
            interior_zero.get_or_insert(EqualityPoint::Exact(midpoint(&lo, &hi)));
            continue;
        }
        if let Some(r) = crate::exact::sign_regions(&p, &lo, &hi, true)
            .into_iter()
            .find(|r| r.sign > 0)
        {
            return Verdict::StrictlyUnstable { witness: (r.lo, r.hi) };
        }
        if let Some(root) = isolate_roots(&p, &lo, &hi).into_iter().next() {
            interior_zero.get_or_insert(root.location.into());
        }
        if p.eval(&hi).is_zero() {
            if hi == bound {
                zero_at_end = true;
            } else {
                interior_zero.get_or_insert(EqualityPoint::Exact(hi.clone()));
            }
        }
    }
    if let Some(at) = interior_zero {
        return Verdict::SemistableOnly { equality_at: at };
    }
    if let Seshadri::LowerBound(_) = profile.seshadri() {
        return Verdict::Inconclusive {
            reason: "only a lower bound for the Seshadri constant is known".into(),
            certified: Some(bound),
        };
    }
    if !zero_at_end {
        return Verdict::StableAgainst;
    }
    debug_assert!(bound.is_positive());
    match profile.saturation() {
        Saturation::Yes => Verdict::SemistableOnly {
            equality_at: EqualityPoint::Exact(bound),
        },
        Saturation::No => Verdict::StableAgainst,
        Saturation::Unknown => Verdict::Inconclusive {
            reason: "equality at c = epsilon and saturation unknown".into(),
            certified: None,
        },
    }
}
