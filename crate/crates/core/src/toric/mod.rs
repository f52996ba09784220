//! Toric surfaces: lattice polygons, level sets P_x of toric subschemes,
//! piecewise-polynomial profiles, Donaldson's weights, Seshadri constants of
//! invariant divisors and a destabilizer scan.

mod polygon;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::engine::{futaki, normal_cone_weights, EngineError, Saturation, Seshadri, SlopeProfile, WeightPair};
use crate::exact::{interpolate, PiecewisePolynomial, Rational};

use polygon::{area, clip, dot, edges, integrate_affine, lattice_perimeter, sort_ccw, sub};
pub use polygon::{lattice_length, Point};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ToricError {
    #[error("only dimension 2 is supported, got {0}")]
    UnsupportedDimension(usize),
    #[error("facet normal {0:?} is not primitive integral")]
    NonPrimitive(Vec<i64>),
    #[error("polytope is empty, unbounded or not full-dimensional")]
    Degenerate,
    #[error("halfspace {0} does not define a facet")]
    Redundant(usize),
    #[error("facet index {index} out of range (polytope has {count} facets)")]
    BadFacet { index: usize, count: usize },
    #[error("multiplicities must be positive")]
    ZeroMultiplicity,
    #[error("the faces have no common point, so the subscheme is empty")]
    EmptySubscheme,
    #[error("Seshadri constants are only computed for a single boundary divisor")]
    NonDivisorial,
    #[error("Donaldson's boundary formula needs g with integral gradient, got {0:?}")]
    FractionalSlope(Vec<Rational>),
    #[error("the subscheme is not a torus-fixed point given by two adjacent facets")]
    NotAFixedPoint,
    #[error("moving the facet never leaves the nef cone")]
    UnboundedSeshadri,
    #[error(transparent)]
    Engine(Box<EngineError>),
}

impl From<EngineError> for ToricError {
    fn from(e: EngineError) -> Self {
        ToricError::Engine(Box::new(e))
    }
}

fn r(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// `normal · p ≥ offset`, normal primitive integral.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Halfspace {
    pub normal: Vec<i64>,
    pub offset: Rational,
}

impl Halfspace {
    pub fn new(normal: Vec<i64>, offset: Rational) -> Self {
        Halfspace { normal, offset }
    }

    fn normal_q(&self) -> Vec<Rational> {
        self.normal.iter().map(|&a| r(a)).collect()
    }

    /// The conormal functional f(p) = normal·p − offset.
    pub fn eval(&self, p: &[Rational]) -> Rational {
        dot(&self.normal_q(), p) - &self.offset
    }
}

/// A full-dimensional rational polygon with primitive integral facet
/// normals. Facets keep the order in which they were given.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polytope {
    dim: usize,
    halfspaces: Vec<Halfspace>,
    vertices: Vec<Point>,
}

impl Polytope {
    pub fn from_halfspaces(dim: usize, halfspaces: Vec<Halfspace>) -> Result<Self, ToricError> {
        if dim != 2 {
            return Err(ToricError::UnsupportedDimension(dim));
        }
        for h in &halfspaces {
            let g = h.normal.iter().fold(0i64, |acc, &a| num_integer::gcd(acc, a));
            if h.normal.len() != 2 || g != 1 {
                return Err(ToricError::NonPrimitive(h.normal.clone()));
            }
        }
        let mut verts: Vec<Point> = Vec::new();
        for i in 0..halfspaces.len() {
            for j in i + 1..halfspaces.len() {
                let (a, b) = (&halfspaces[i], &halfspaces[j]);
                let det = r(a.normal[0] * b.normal[1] - a.normal[1] * b.normal[0]);
                if det.is_zero() {
                    continue;
                }
                let x = (&a.offset * r(b.normal[1]) - &b.offset * r(a.normal[1])) / &det;
                let y = (&b.offset * r(a.normal[0]) - &a.offset * r(b.normal[0])) / &det;
                let p = [x, y];
                if halfspaces.iter().all(|h| !h.eval(&p).is_negative()) && !verts.contains(&p) {
                    verts.push(p);
                }
            }
        }
        if verts.len() < 3 {
            return Err(ToricError::Degenerate);
        }
        sort_ccw(&mut verts);
        if area(&verts).is_zero() {
            return Err(ToricError::Degenerate);
        }
        // bounded: every edge must lie on some facet, and the polygon closes
        for (i, h) in halfspaces.iter().enumerate() {
            if verts.iter().filter(|v| h.eval(&v[..]).is_zero()).count() < 2 {
                return Err(ToricError::Redundant(i));
            }
        }
        for (a, b) in edges(&verts) {
            if !halfspaces.iter().any(|h| h.eval(&a).is_zero() && h.eval(&b).is_zero()) {
                return Err(ToricError::Degenerate);
            }
        }
        Ok(Polytope {
            dim,
            halfspaces,
            vertices: verts,
        })
    }

    /// Convex hull of the given points; facets are numbered along the
    /// counterclockwise boundary starting at the edge leaving the lowest
    /// leftmost vertex.
    pub fn from_vertices(points: &[Point]) -> Result<Self, ToricError> {
        let mut pts: Vec<Point> = Vec::new();
        for p in points {
            if !pts.contains(p) {
                pts.push(p.clone());
            }
        }
        let hull = convex_hull(pts);
        if hull.len() < 3 {
            return Err(ToricError::Degenerate);
        }
        let mut hs = Vec::new();
        for (a, b) in edges(&hull) {
            let d = sub(&b, &a);
            let (u, _) = polygon::primitive(&[-d[1].clone(), d[0].clone()]).ok_or(ToricError::Degenerate)?;
            let normal: Vec<i64> = u.iter().map(|x| x.to_i64().expect("small normal")).collect();
            let offset = dot(&normal.iter().map(|&x| r(x)).collect::<Vec<_>>(), &a);
            hs.push(Halfspace::new(normal, offset));
        }
        Polytope::from_halfspaces(2, hs)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn halfspaces(&self) -> &[Halfspace] {
        &self.halfspaces
    }

    /// Vertices in counterclockwise order.
    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn area(&self) -> Rational {
        area(&self.vertices)
    }

    /// Pairs of facets meeting in a vertex, as sorted index pairs.
    pub fn adjacent_facets(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for v in &self.vertices {
            let on: Vec<usize> = (0..self.halfspaces.len())
                .filter(|&i| self.halfspaces[i].eval(&v[..]).is_zero())
                .collect();
            if on.len() == 2 {
                out.push((on[0], on[1]));
            }
        }
        out.sort();
        out
    }
}

fn convex_hull(mut pts: Vec<Point>) -> Vec<Point> {
    pts.sort();
    if pts.len() < 3 {
        return pts;
    }
    let turn = |o: &Point, a: &Point, b: &Point| polygon::cross(&sub(a, o), &sub(b, o));
    let mut lower: Vec<Point> = Vec::new();
    for p in &pts {
        while lower.len() >= 2 && !turn(&lower[lower.len() - 2], &lower[lower.len() - 1], p).is_positive() {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<Point> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2 && !turn(&upper[upper.len() - 2], &upper[upper.len() - 1], p).is_positive() {
            upper.pop();
        }
        upper.push(p.clone());
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// A facet with a multiplicity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct FaceSpec {
    pub facet: usize,
    pub multiplicity: u32,
}

/// The subscheme whose ideal is spanned by the monomials p with
/// Σ f_i(p)/m_i ≥ 1, where f_i is the conormal of facet i.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct ToricSubscheme {
    pub faces: Vec<FaceSpec>,
}

impl ToricSubscheme {
    pub fn new(faces: Vec<FaceSpec>) -> Self {
        ToricSubscheme { faces }
    }

    pub fn divisor(facet: usize, multiplicity: u32) -> Self {
        ToricSubscheme::new(vec![FaceSpec { facet, multiplicity }])
    }

    pub fn is_divisorial(&self) -> bool {
        self.faces.len() == 1
    }
}

impl fmt::Display for ToricSubscheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .faces
            .iter()
            .map(|s| format!("D{}^{}", s.facet, s.multiplicity))
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// The level function g(p) = Σ f_i(p)/m_i as an affine map a·p − b.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelFunction {
    pub linear: Vec<Rational>,
    pub constant: Rational,
}

impl LevelFunction {
    pub fn eval(&self, p: &[Rational]) -> Rational {
        dot(&self.linear, p) - &self.constant
    }
}

pub fn level_function(p: &Polytope, z: &ToricSubscheme) -> Result<LevelFunction, ToricError> {
    if z.faces.is_empty() {
        return Err(ToricError::EmptySubscheme);
    }
    let mut linear = vec![Rational::zero(); p.dim];
    let mut constant = Rational::zero();
    for f in &z.faces {
        let h = p.halfspaces.get(f.facet).ok_or(ToricError::BadFacet {
            index: f.facet,
            count: p.halfspaces.len(),
        })?;
        if f.multiplicity == 0 {
            return Err(ToricError::ZeroMultiplicity);
        }
        let m = r(f.multiplicity.into());
        for (l, &a) in linear.iter_mut().zip(&h.normal) {
            *l += r(a) / &m;
        }
        constant += &h.offset / &m;
    }
    let g = LevelFunction { linear, constant };
    if !p.vertices.iter().any(|v| g.eval(&v[..]).is_zero()) {
        return Err(ToricError::EmptySubscheme);
    }
    Ok(g)
}

/// Vertex g-values, sorted and deduplicated; the first is 0.
pub fn breakpoints(p: &Polytope, g: &LevelFunction) -> Vec<Rational> {
    let mut b: Vec<Rational> = p.vertices.iter().map(|v| g.eval(&v[..])).collect();
    b.sort();
    b.dedup();
    b
}

/// P_x = P ∩ {g ≥ x} as a vertex list; may be a segment, a point or empty.
pub fn slice(p: &Polytope, z: &ToricSubscheme, x: &Rational) -> Result<Vec<Point>, ToricError> {
    let g = level_function(p, z)?;
    Ok(clip(&p.vertices, &g.linear, &(&g.constant + x)))
}

fn slice_with(p: &Polytope, g: &LevelFunction, x: &Rational) -> Vec<Point> {
    clip(&p.vertices, &g.linear, &(&g.constant + x))
}

/// a₀(x) = area(P_x) and a₁(x) = ½·(lattice perimeter of P_x), as
/// piecewise polynomials on [0, max g]. The Seshadri data is left for the
/// caller.
pub fn toric_profile(
    p: &Polytope,
    z: &ToricSubscheme,
    seshadri: Seshadri,
    saturation: Saturation,
) -> Result<SlopeProfile, ToricError> {
    if p.dim != 2 {
        return Err(ToricError::UnsupportedDimension(p.dim));
    }
    let g = level_function(p, z)?;
    let bps = breakpoints(p, &g);
    let half = Rational::new(1.into(), 2.into());
    let mut p0 = Vec::new();
    let mut p1 = Vec::new();
    for w in bps.windows(2) {
        let (lo, hi) = (&w[0], &w[1]);
        let at = |k: i64| lo + (hi - lo) * Rational::new(k.into(), 5.into());
        let samples: Vec<(Rational, Vec<Point>)> = (1..=4).map(|k| (at(k), slice_with(p, &g, &at(k)))).collect();
        let areas: Vec<(Rational, Rational)> = samples.iter().map(|(x, s)| (x.clone(), area(s))).collect();
        let perims: Vec<(Rational, Rational)> = samples
            .iter()
            .map(|(x, s)| (x.clone(), lattice_perimeter(s) * &half))
            .collect();
        let a0 = interpolate(&areas[..3]);
        let a1 = interpolate(&perims[..2]);
        debug_assert_eq!(a0.eval(&areas[3].0), areas[3].1);
        debug_assert_eq!(a1.eval(&perims[3].0), perims[3].1);
        p0.push(a0);
        p1.push(a1);
    }
    let a0 = PiecewisePolynomial::new(bps.clone(), p0).map_err(EngineError::from)?;
    let a1 = PiecewisePolynomial::new(bps, p1).map_err(EngineError::from)?;
    Ok(SlopeProfile::new(2, a0, a1, seshadri, saturation)?)
}

/// Number of lattice points in kP.
pub fn lattice_count(p: &Polytope, k: u32) -> u64 {
    let kq = r(k.into());
    let (mut lo, mut hi) = (Vec::new(), Vec::new());
    for i in 0..p.dim {
        let xs = p.vertices.iter().map(|v| &v[i] * &kq);
        lo.push(xs.clone().min().map(|x| x.ceil().to_integer()).unwrap_or_default());
        hi.push(xs.max().map(|x| x.floor().to_integer()).unwrap_or_default());
    }
    let mut count = 0;
    let mut x = lo[0].clone();
    while x <= hi[0] {
        let mut y = lo[1].clone();
        while y <= hi[1] {
            let pt = [Rational::from_integer(x.clone()), Rational::from_integer(y.clone())];
            if p.halfspaces.iter().all(|h| dot(&h.normal_q(), &pt) >= &h.offset * &kq) {
                count += 1;
            }
            y += BigInt::one();
        }
        x += BigInt::one();
    }
    count
}

/// Lattice points of kP with g ≥ xk, which counts sections of
/// L^k ⊗ I_Z^{xk} (integral closure).
pub fn lattice_count_level(p: &Polytope, z: &ToricSubscheme, k: u32, x: &Rational) -> Result<u64, ToricError> {
    let g = level_function(p, z)?;
    let kq = r(k.into());
    let sl = slice_with(p, &g, x);
    if sl.is_empty() {
        return Ok(0);
    }
    let bound = |i: usize| {
        let xs = sl.iter().map(|v| &v[i] * &kq);
        (
            xs.clone().min().unwrap().ceil().to_integer(),
            xs.max().unwrap().floor().to_integer(),
        )
    };
    let ((x0, x1), (y0, y1)) = (bound(0), bound(1));
    let mut count = 0;
    let mut a = x0;
    while a <= x1 {
        let mut b = y0.clone();
        while b <= y1 {
            let pt = [Rational::from_integer(a.clone()), Rational::from_integer(b.clone())];
            let inside = p.halfspaces.iter().all(|h| dot(&h.normal_q(), &pt) >= &h.offset * &kq)
                && dot(&g.linear, &pt) - &g.constant * &kq >= x * &kq;
            if inside {
                count += 1;
            }
            b += BigInt::one();
        }
        a += BigInt::one();
    }
    Ok(count)
}

/// Donaldson's weights for f = min(c, g): b₀ = −∫_P f dμ and
/// b₁ = −½∫_∂P f dσ with the lattice-normalized boundary measure. The
/// formula is the Euler-Maclaurin expansion for f with integral slopes;
/// fractional gradients add a rounding term of the same order and are
/// rejected.
pub fn donaldson_weights(p: &Polytope, z: &ToricSubscheme, c: &Rational) -> Result<WeightPair, ToricError> {
    if p.dim != 2 {
        return Err(ToricError::UnsupportedDimension(p.dim));
    }
    let g = level_function(p, z)?;
    if !g.linear.iter().all(Rational::is_integer) {
        return Err(ToricError::FractionalSlope(g.linear.clone()));
    }
    let neg_linear: Vec<Rational> = g.linear.iter().map(|a| -a).collect();
    let low = clip(&p.vertices, &neg_linear, &(-(&g.constant + c)));
    let high = clip(&p.vertices, &g.linear, &(&g.constant + c));
    let geval = |q: &Point| g.eval(&q[..]);
    let int_p = integrate_affine(&low, &geval) + c * area(&high);

    let int_b: Rational = edges(&p.vertices)
        .iter()
        .map(|(a, b)| edge_integral(&lattice_length(&sub(b, a)), &geval(a), &geval(b), c))
        .sum();
    Ok(WeightPair::new(-int_p, -int_b / r(2)))
}

/// ∫ min(c, g) along an edge of lattice length `len` on which g runs
/// affinely from `ga` to `gb`.
fn edge_integral(len: &Rational, ga: &Rational, gb: &Rational, c: &Rational) -> Rational {
    let two = r(2);
    if ga <= c && gb <= c {
        len * (ga + gb) / two
    } else if ga >= c && gb >= c {
        len * c
    } else {
        let t = (c - ga) / (gb - ga);
        let (low, low_val) = if ga < c { (t, ga) } else { (Rational::one() - t, gb) };
        len * (&low * (low_val + c) / two + (Rational::one() - &low) * c)
    }
}

/// Donaldson's weights moved to the normal-cone convention:
/// (−b₀ − c·a₀, −b₁ − c·a₁).
pub fn donaldson_normal_cone(raw: &WeightPair, c: &Rational, a0: &Rational, a1: &Rational) -> WeightPair {
    WeightPair::new(-&raw.b0 - c * a0, -&raw.b1 - c * a1)
}

/// ε of Z = m·D_j: the largest c for which moving facet j inward by c·m
/// keeps every invariant curve degree (signed lattice edge length)
/// nonnegative.
pub fn toric_surface_seshadri(p: &Polytope, z: &ToricSubscheme) -> Result<Rational, ToricError> {
    if p.dim != 2 {
        return Err(ToricError::UnsupportedDimension(p.dim));
    }
    if !z.is_divisorial() {
        return Err(ToricError::NonDivisorial);
    }
    let face = z.faces[0];
    if face.facet >= p.halfspaces.len() {
        return Err(ToricError::BadFacet {
            index: face.facet,
            count: p.halfspaces.len(),
        });
    }
    if face.multiplicity == 0 {
        return Err(ToricError::ZeroMultiplicity);
    }
    let m = r(face.multiplicity.into());
    let mut order: Vec<usize> = (0..p.halfspaces.len()).collect();
    let npt = |i: usize| -> Point { [r(p.halfspaces[i].normal[0]), r(p.halfspaces[i].normal[1])] };
    order.sort_by(|&a, &b| polygon::angle_cmp(&npt(a), &npt(b)));
    let degrees = |c: &Rational| -> Vec<Rational> {
        let off = |i: usize| {
            if i == face.facet {
                &p.halfspaces[i].offset + c * &m
            } else {
                p.halfspaces[i].offset.clone()
            }
        };
        let meet = |i: usize, j: usize| -> Point {
            let (a, b) = (npt(i), npt(j));
            let det = polygon::cross(&a, &b);
            [
                (off(i) * &b[1] - off(j) * &a[1]) / &det,
                (off(j) * &a[0] - off(i) * &b[0]) / &det,
            ]
        };
        let k = order.len();
        (0..k)
            .map(|s| {
                let (prev, cur, next) = (order[(s + k - 1) % k], order[s], order[(s + 1) % k]);
                let t: Point = [npt(cur)[1].clone(), -&npt(cur)[0]];
                let d = sub(&meet(cur, next), &meet(prev, cur));
                dot(&d, &t) / dot(&t, &t)
            })
            .collect()
    };
    let d0 = degrees(&Rational::zero());
    let d1 = degrees(&Rational::one());
    let mut eps: Option<Rational> = None;
    for (a, b) in d0.iter().zip(&d1) {
        let slope = b - a;
        if slope.is_negative() {
            let c = -a / slope;
            if eps.as_ref().is_none_or(|e| c < *e) {
                eps = Some(c);
            }
        }
    }
    eps.ok_or(ToricError::UnboundedSeshadri)
}

/// ε of a torus-fixed point subscheme given by two adjacent facets. The
/// normalized blow-up is the weighted toric blow-up, and L − cE stays nef
/// until the cut {g = c} reaches the next vertex along either facet, so ε
/// is the smaller g-value of those two vertices.
pub fn toric_point_seshadri(p: &Polytope, z: &ToricSubscheme) -> Result<Rational, ToricError> {
    if p.dim != 2 {
        return Err(ToricError::UnsupportedDimension(p.dim));
    }
    let g = level_function(p, z)?;
    let (i, j) = match z.faces.as_slice() {
        [a, b]
            if p.adjacent_facets()
                .contains(&(a.facet.min(b.facet), a.facet.max(b.facet))) =>
        {
            (a.facet, b.facet)
        }
        _ => return Err(ToricError::NotAFixedPoint),
    };
    let on = |k: usize| -> Vec<&Point> {
        p.vertices
            .iter()
            .filter(|v| p.halfspaces[k].eval(&v[..]).is_zero())
            .collect()
    };
    [i, j]
        .into_iter()
        .flat_map(on)
        .map(|v| g.eval(&v[..]))
        .filter(|x| x.is_positive())
        .min()
        .ok_or(ToricError::Degenerate)
}

fn is_unimodular(p: &Polytope, i: usize, j: usize) -> bool {
    let (a, b) = (&p.halfspaces[i].normal, &p.halfspaces[j].normal);
    (a[0] * b[1] - a[1] * b[0]).abs() == 1
}

/// Profile with the Seshadri data filled in. Divisors: nef toric bundles
/// are globally generated, so sections saturate. Fixed points: saturation
/// is known only for the reduced point at a smooth vertex, where the
/// blow-up is smooth.
pub fn toric_profile_auto(p: &Polytope, z: &ToricSubscheme) -> Result<SlopeProfile, ToricError> {
    if z.is_divisorial() {
        let eps = toric_surface_seshadri(p, z)?;
        return toric_profile(p, z, Seshadri::Exact(eps), Saturation::Yes);
    }
    match toric_point_seshadri(p, z) {
        Ok(eps) => {
            let (a, b) = (z.faces[0], z.faces[1]);
            let sat = if a.multiplicity == 1 && b.multiplicity == 1 && is_unimodular(p, a.facet, b.facet) {
                Saturation::Yes
            } else {
                Saturation::Unknown
            };
            toric_profile(p, z, Seshadri::Exact(eps), sat)
        }
        Err(ToricError::NotAFixedPoint) => toric_profile(p, z, Seshadri::Unknown, Saturation::Unknown),
        Err(e) => Err(e),
    }
}

/// A scan result: the candidate, the c of its most negative Futaki value,
/// and that value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanHit {
    pub subscheme: ToricSubscheme,
    pub c: Rational,
    pub futaki: Rational,
    pub seshadri: Seshadri,
}

/// Enumerates boundary divisors with multiplicity ≤ `budget` and torus-fixed
/// points given by adjacent facet pairs with multiplicities ≤ `budget`,
/// sweeps the Futaki invariant over `grid` evenly spaced c in (0, ε] (or
/// (0, max g] when ε is unknown) and ranks by the most
/// negative value, ties broken by the candidate's face list.
pub fn destabilizer_scan(p: &Polytope, budget: u32, grid: u32) -> Result<Vec<ScanHit>, ToricError> {
    let mut candidates = Vec::new();
    for m in 1..=budget {
        for j in 0..p.halfspaces.len() {
            candidates.push(ToricSubscheme::divisor(j, m));
        }
    }
    for (i, j) in p.adjacent_facets() {
        for mi in 1..=budget {
            for mj in 1..=budget {
                candidates.push(ToricSubscheme::new(vec![
                    FaceSpec {
                        facet: i,
                        multiplicity: mi,
                    },
                    FaceSpec {
                        facet: j,
                        multiplicity: mj,
                    },
                ]));
            }
        }
    }
    let mut hits = Vec::new();
    for z in candidates {
        let profile = toric_profile_auto(p, &z)?;
        let top = match profile.seshadri() {
            Seshadri::Exact(e) => e.clone(),
            _ => profile.a0().end().cloned().expect("toric profiles are bounded"),
        };
        let (a0, a1) = (profile.a0_at_zero(), profile.a1_at_zero());
        let mut best: Option<(Rational, Rational)> = None;
        for k in 1..=grid.max(1) {
            let c = &top * Rational::new(k.into(), grid.max(1).into());
            let f = futaki(&a0, &a1, &normal_cone_weights(&profile, &c)?)?;
            if best.as_ref().is_none_or(|(_, bf)| f < *bf) {
                best = Some((c, f));
            }
        }
        let (c, f) = best.expect("grid is nonempty");
        hits.push(ScanHit {
            subscheme: z,
            c,
            futaki: f,
            seshadri: profile.seshadri().clone(),
        });
    }
    hits.sort_by(|a, b| a.futaki.cmp(&b.futaki).then_with(|| a.subscheme.cmp(&b.subscheme)));
    Ok(hits)
}
