//! Exact sign analysis of polynomials on intervals via Sturm sequences.

use num_traits::Zero;

use super::polynomial::Polynomial;
use super::rational::{midpoint, signum, simplest_between, Rational};

/// Where a real root sits: exactly at a rational, or alone inside an open
/// interval whose endpoints are not roots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RootLocation {
    Exact(Rational),
    Isolated { lo: Rational, hi: Rational },
}

impl RootLocation {
    pub fn lower(&self) -> &Rational {
        match self {
            RootLocation::Exact(r) => r,
            RootLocation::Isolated { lo, .. } => lo,
        }
    }

    pub fn upper(&self) -> &Rational {
        match self {
            RootLocation::Exact(r) => r,
            RootLocation::Isolated { hi, .. } => hi,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsolatedRoot {
    pub location: RootLocation,
    /// Whether the polynomial changes sign across this root (odd multiplicity).
    pub sign_change: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SignSummary {
    StrictlyPositive,
    StrictlyNegative,
    IdenticallyZero,
    /// `>= 0` with isolated zeros and no sign change.
    NonNegative(Vec<RootLocation>),
    /// `<= 0` with isolated zeros and no sign change.
    NonPositive(Vec<RootLocation>),
    /// All interior roots, sorted; at least one changes sign.
    Mixed(Vec<IsolatedRoot>),
}

/// Sign of `p` on `(lo, hi)`, plus whether `hi` itself is a root when the
/// interval is half-open `(lo, hi]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignReport {
    pub interior: SignSummary,
    pub zero_at_hi: bool,
}

/// A closed interval on which the polynomial has constant nonzero sign.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignRegion {
    pub lo: Rational,
    pub hi: Rational,
    pub sign: i32,
}

struct Sturm {
    chain: Vec<Polynomial>,
}

impl Sturm {
    fn new(squarefree: &Polynomial) -> Self {
        let mut chain = vec![squarefree.clone(), squarefree.derivative()];
        loop {
            let n = chain.len();
            if chain[n - 1].is_zero() {
                chain.pop();
                break;
            }
            let (_, r) = chain[n - 2].div_rem(&chain[n - 1]);
            if r.is_zero() {
                break;
            }
            chain.push(-r);
        }
        Sturm { chain }
    }

    fn variations(&self, x: &Rational) -> usize {
        let mut count = 0;
        let mut last = 0;
        for p in &self.chain {
            let s = signum(&p.eval(x));
            if s == 0 {
                continue;
            }
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Distinct roots in the half-open interval `(a, b]`.
    fn count(&self, a: &Rational, b: &Rational) -> usize {
        self.variations(a) - self.variations(b)
    }

    /// Distinct roots in the open interval `(a, b)`.
    fn open_count(&self, q: &Polynomial, a: &Rational, b: &Rational) -> usize {
        self.count(a, b) - usize::from(q.eval(b).is_zero())
    }
}

/// Distinct real roots of `p` in the open interval `(lo, hi)`, sorted, each
/// with an isolating interval strictly inside `(lo, hi)`.
pub fn isolate_roots(p: &Polynomial, lo: &Rational, hi: &Rational) -> Vec<IsolatedRoot> {
    assert!(lo < hi, "empty interval");
    assert!(!p.is_zero(), "the zero polynomial has no isolated roots");
    if p.degree() == Some(0) {
        return Vec::new();
    }
    let q = p.square_free();
    let sturm = Sturm::new(&q);
    let mut found = Vec::new();
    let mut stack = vec![(lo.clone(), hi.clone())];
    while let Some((a, b)) = stack.pop() {
        match sturm.open_count(&q, &a, &b) {
            0 => {}
            1 => found.push(tighten(&sturm, &q, a, b, lo, hi)),
            _ => {
                let m = midpoint(&a, &b);
                if q.eval(&m).is_zero() {
                    found.push(RootLocation::Exact(m.clone()));
                }
                stack.push((m.clone(), b));
                stack.push((a, m));
            }
        }
    }
    found.sort_by(|x, y| x.lower().cmp(y.lower()));
    found
        .into_iter()
        .map(|location| {
            let sign_change = crosses(p, &sturm, &q, &location, lo, hi);
            IsolatedRoot { location, sign_change }
        })
        .collect()
}

// Shrinks an open interval holding exactly one root until neither endpoint
// is a root or an outer bound, or returns the root itself when it is hit.
fn tighten(
    sturm: &Sturm,
    q: &Polynomial,
    mut a: Rational,
    mut b: Rational,
    lo: &Rational,
    hi: &Rational,
) -> RootLocation {
    loop {
        let bad_a = a == *lo || q.eval(&a).is_zero();
        let bad_b = b == *hi || q.eval(&b).is_zero();
        if !bad_a && !bad_b {
            break;
        }
        let m = midpoint(&a, &b);
        if q.eval(&m).is_zero() {
            return RootLocation::Exact(m);
        }
        if sturm.open_count(q, &a, &m) == 1 {
            b = m;
        } else {
            a = m;
        }
    }
    let s = simplest_between(&a, &b);
    if q.eval(&s).is_zero() {
        return RootLocation::Exact(s);
    }
    RootLocation::Isolated { lo: a, hi: b }
}

fn crosses(p: &Polynomial, sturm: &Sturm, q: &Polynomial, loc: &RootLocation, lo: &Rational, hi: &Rational) -> bool {
    let (a, b) = samples_around(sturm, q, loc, lo, hi);
    signum(&p.eval(&a)) != signum(&p.eval(&b))
}

// Two non-root points inside (lo, hi) bracketing the root with no other root
// between them.
fn samples_around(
    sturm: &Sturm,
    q: &Polynomial,
    loc: &RootLocation,
    lo: &Rational,
    hi: &Rational,
) -> (Rational, Rational) {
    match loc {
        RootLocation::Isolated { lo: a, hi: b } => (a.clone(), b.clone()),
        RootLocation::Exact(r) => {
            let mut h = Rational::from_integer(1.into());
            loop {
                let a = r - &h;
                let b = r + &h;
                if a > *lo && b < *hi && !q.eval(&a).is_zero() && !q.eval(&b).is_zero() && sturm.count(&a, &b) == 1 {
                    return (a, b);
                }
                h /= Rational::from_integer(2.into());
            }
        }
    }
}

/// Exact sign classification of `p` on `(lo, hi)`; with `include_hi` the
/// value at `hi` is reported separately through `zero_at_hi`.
pub fn sign_on_interval(p: &Polynomial, lo: &Rational, hi: &Rational, include_hi: bool) -> SignReport {
    assert!(lo < hi, "sign analysis needs lo < hi");
    if p.is_zero() {
        return SignReport {
            interior: SignSummary::IdenticallyZero,
            zero_at_hi: include_hi,
        };
    }
    let zero_at_hi = include_hi && p.eval(hi).is_zero();
    let roots = isolate_roots(p, lo, hi);
    let interior = if roots.is_empty() {
        if signum(&p.eval(&midpoint(lo, hi))) > 0 {
            SignSummary::StrictlyPositive
        } else {
            SignSummary::StrictlyNegative
        }
    } else if roots.iter().any(|r| r.sign_change) {
        SignSummary::Mixed(roots)
    } else {
        let probe = match &roots[0].location {
            RootLocation::Isolated { lo: a, .. } => a.clone(),
            RootLocation::Exact(r) => midpoint(lo, r),
        };
        let locs = roots.into_iter().map(|r| r.location).collect();
        if signum(&p.eval(&probe)) > 0 {
            SignSummary::NonNegative(locs)
        } else {
            SignSummary::NonPositive(locs)
        }
    };
    SignReport { interior, zero_at_hi }
}

/// Maximal sign regions of `p` on `(lo, hi)` (or `(lo, hi]`), each given as
/// a closed sample interval where the sign is constant and nonzero. Regions
/// appear in order and are separated by the roots of `p`.
pub fn sign_regions(p: &Polynomial, lo: &Rational, hi: &Rational, include_hi: bool) -> Vec<SignRegion> {
    assert!(lo < hi);
    if p.is_zero() {
        return Vec::new();
    }
    let roots = isolate_roots(p, lo, hi);
    let q = p.square_free();
    let sturm = Sturm::new(&q);
    let brackets: Vec<(Rational, Rational)> = roots
        .iter()
        .map(|r| samples_around(&sturm, &q, &r.location, lo, hi))
        .collect();
    let mut spans: Vec<(Rational, Rational)> = Vec::with_capacity(brackets.len() + 1);
    if let Some((first, _)) = brackets.first() {
        spans.push((midpoint(lo, first), first.clone()));
    }
    for pair in brackets.windows(2) {
        let (x, y) = (&pair[0].1, &pair[1].0);
        spans.push(if x <= y {
            (x.clone(), y.clone())
        } else {
            (y.clone(), x.clone())
        });
    }
    let tail_start = brackets
        .last()
        .map(|(_, b)| b.clone())
        .unwrap_or_else(|| midpoint(lo, hi));
    let tail_end = if include_hi && !p.eval(hi).is_zero() {
        hi.clone()
    } else {
        midpoint(&tail_start, hi)
    };
    spans.push((tail_start, tail_end));
    spans
        .into_iter()
        .map(|(a, b)| {
            let sign = signum(&p.eval(&a));
            debug_assert_eq!(sign, signum(&p.eval(&b)));
            SignRegion { lo: a, hi: b, sign }
        })
        .collect()
}
