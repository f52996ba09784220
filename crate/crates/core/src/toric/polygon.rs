//! Exact planar geometry over the rationals.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::exact::Rational;

pub type Point = [Rational; 2];

pub fn sub(a: &Point, b: &Point) -> Point {
    [&a[0] - &b[0], &a[1] - &b[1]]
}

pub fn cross(a: &Point, b: &Point) -> Rational {
    &a[0] * &b[1] - &a[1] * &b[0]
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Lattice length t of a rational vector v, meaning v = t·w for a
/// primitive integral w.
pub fn lattice_length(v: &Point) -> Rational {
    if v[0].is_zero() && v[1].is_zero() {
        return Rational::zero();
    }
    let l = v[0].denom().lcm(v[1].denom());
    let a = (&v[0] * Rational::from_integer(l.clone())).to_integer();
    let b = (&v[1] * Rational::from_integer(l.clone())).to_integer();
    Rational::new(a.gcd(&b), l)
}

/// Primitive integral vector u and λ > 0 with v = λu.
pub fn primitive(v: &[Rational]) -> Option<(Vec<BigInt>, Rational)> {
    if v.iter().all(Zero::is_zero) {
        return None;
    }
    let l = v.iter().fold(BigInt::from(1), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v
        .iter()
        .map(|x| (x * Rational::from_integer(l.clone())).to_integer())
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    let u = ints.iter().map(|x| x / &g).collect();
    Some((u, Rational::new(g, l)))
}

/// Twice the signed area (positive for counterclockwise order).
fn twice_area(poly: &[Point]) -> Rational {
    let n = poly.len();
    (0..n).map(|i| cross(&poly[i], &poly[(i + 1) % n])).sum()
}

pub fn area(poly: &[Point]) -> Rational {
    twice_area(poly).abs() / Rational::from_integer(2.into())
}

/// Area centroid of a nondegenerate polygon.
pub fn centroid(poly: &[Point]) -> Point {
    let n = poly.len();
    let a6 = twice_area(poly) * Rational::from_integer(3.into());
    let mut cx = Rational::zero();
    let mut cy = Rational::zero();
    for i in 0..n {
        let (p, q) = (&poly[i], &poly[(i + 1) % n]);
        let w = cross(p, q);
        cx += (&p[0] + &q[0]) * &w;
        cy += (&p[1] + &q[1]) * &w;
    }
    [cx / &a6, cy / a6]
}

/// Closed polygonal chain edges, including the closing edge. A segment
/// [A, B] yields A→B and B→A, so its boundary counts twice.
pub fn edges(poly: &[Point]) -> Vec<(Point, Point)> {
    let n = poly.len();
    if n < 2 {
        return Vec::new();
    }
    (0..n).map(|i| (poly[i].clone(), poly[(i + 1) % n].clone())).collect()
}

pub fn lattice_perimeter(poly: &[Point]) -> Rational {
    edges(poly).iter().map(|(a, b)| lattice_length(&sub(b, a))).sum()
}

fn dedupe(mut pts: Vec<Point>) -> Vec<Point> {
    pts.dedup();
    while pts.len() > 1 && pts.first() == pts.last() {
        pts.pop();
    }
    pts
}

/// Sutherland-Hodgman clip of a convex polygon by `a·p ≥ b`.
pub fn clip(poly: &[Point], a: &[Rational], b: &Rational) -> Vec<Point> {
    let n = poly.len();
    let val = |p: &Point| dot(a, p) - b;
    let mut out = Vec::new();
    for i in 0..n {
        let (p, q) = (&poly[i], &poly[(i + 1) % n]);
        let (vp, vq) = (val(p), val(q));
        if !vp.is_negative() {
            out.push(p.clone());
        }
        if (vp.is_negative() && vq.is_positive()) || (vp.is_positive() && vq.is_negative()) {
            let t = &vp / (&vp - &vq);
            out.push([&p[0] + &t * (&q[0] - &p[0]), &p[1] + &t * (&q[1] - &p[1])]);
        }
    }
    dedupe(out)
}

fn half(p: &Point) -> u8 {
    if p[1].is_positive() || (p[1].is_zero() && p[0].is_positive()) {
        0
    } else {
        1
    }
}

/// Sorts points counterclockwise around their average.
pub fn sort_ccw(pts: &mut [Point]) {
    if pts.is_empty() {
        return;
    }
    let n = Rational::from_integer(pts.len().into());
    let c: Point = [
        pts.iter().map(|p| p[0].clone()).sum::<Rational>() / &n,
        pts.iter().map(|p| p[1].clone()).sum::<Rational>() / &n,
    ];
    pts.sort_by(|p, q| {
        let (u, v) = (sub(p, &c), sub(q, &c));
        half(&u).cmp(&half(&v)).then_with(|| {
            let cr = cross(&u, &v);
            if cr.is_positive() {
                Ordering::Less
            } else if cr.is_negative() {
                Ordering::Greater
            } else {
                Ordering::Equal
            }
        })
    });
}

/// Counterclockwise angular order of integral normals.
pub fn angle_cmp(u: &Point, v: &Point) -> Ordering {
    half(u).cmp(&half(v)).then_with(|| {
        let cr = cross(u, v);
        if cr.is_positive() {
            Ordering::Less
        } else if cr.is_negative() {
            Ordering::Greater
        } else {
            Ordering::Equal
        }
    })
}

/// ∫ of the affine function `h` over the polygon, exactly.
pub fn integrate_affine(poly: &[Point], h: &dyn Fn(&Point) -> Rational) -> Rational {
    let a = area(poly);
    if a.is_zero() {
        return a;
    }
    h(&centroid(poly)) * a
}
