//! Dense univariate polynomials over [`Rational`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use super::rational::{int, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IntegrationError {
    #[error("integration bounds out of order: lo = {lo} > hi = {hi}")]
    Reversed { lo: Rational, hi: Rational },
    #[error("integration range [{lo}, {hi}] leaves the breakpoint span [{start}, {end}]")]
    OutOfSpan {
        lo: Rational,
        hi: Rational,
        start: Rational,
        end: Rational,
    },
}

/// Coefficients indexed by degree. The zero polynomial has no coefficients,
/// every other polynomial has a nonzero leading coefficient.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The identity polynomial `x`.
    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn monomial(c: Rational, degree: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); degree + 1];
        coeffs[degree] = c;
        Self::new(coeffs)
    }

    /// Builds from `(numerator, denominator)` pairs, lowest degree first.
    pub fn from_ratios(pairs: &[(i64, i64)]) -> Self {
        Self::new(pairs.iter().map(|&(n, d)| super::rational::rat(n, d)).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, degree: usize) -> Rational {
        self.coeffs.get(degree).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * int(i as i64))
                .collect(),
        )
    }

    /// Antiderivative vanishing at zero.
    pub fn antiderivative(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Rational::zero());
        coeffs.extend(self.coeffs.iter().enumerate().map(|(i, c)| c / int(i as i64 + 1)));
        Self::new(coeffs)
    }

    pub fn definite_integral(&self, lo: &Rational, hi: &Rational) -> Result<Rational, IntegrationError> {
        if lo > hi {
            return Err(IntegrationError::Reversed {
                lo: lo.clone(),
                hi: hi.clone(),
            });
        }
        Ok(self.integral_unchecked(lo, hi))
    }

    /// Signed integral; `lo > hi` yields the negated value.
    pub fn integral_unchecked(&self, lo: &Rational, hi: &Rational) -> Rational {
        if lo == hi {
            return Rational::zero();
        }
        let anti = self.antiderivative();
        anti.eval(hi) - anti.eval(lo)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// `p(a*x + b)`.
    pub fn compose_affine(&self, a: &Rational, b: &Rational) -> Self {
        let inner = Polynomial::new(vec![b.clone(), a.clone()]);
        self.coeffs.iter().rev().fold(Polynomial::zero(), |acc, c| {
            &(&acc * &inner) + &Polynomial::constant(c.clone())
        })
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Polynomial) -> (Polynomial, Polynomial) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree() else {
            return (Polynomial::zero(), Polynomial::zero());
        };
        if nd < dd {
            return (Polynomial::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); nd - dd + 1];
        for i in (0..=nd - dd).rev() {
            let c = &rem[i + dd] / &lead;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &c * d;
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        (Polynomial::new(quot), Polynomial::new(rem))
    }

    pub fn monic(&self) -> Polynomial {
        match self.leading() {
            Some(l) => self.scale(&l.recip()),
            None => Polynomial::zero(),
        }
    }

    /// Monic greatest common divisor (zero if both are zero).
    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// The product of the distinct irreducible factors, made monic.
    pub fn square_free(&self) -> Polynomial {
        if self.degree().unwrap_or(0) == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }

    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            if mono.is_empty() {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{mag}*{mono}"));
            }
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("x"))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({})", self.render("x"))
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

/// The unique polynomial of degree `< points.len()` through the given
/// points (Newton divided differences). Abscissae must be distinct.
pub fn interpolate(points: &[(Rational, Rational)]) -> Polynomial {
    let n = points.len();
    let xs: Vec<&Rational> = points.iter().map(|(x, _)| x).collect();
    let mut table: Vec<Rational> = points.iter().map(|(_, y)| y.clone()).collect();
    for level in 1..n {
        for i in (level..n).rev() {
            let denom = xs[i] - xs[i - level];
            assert!(!denom.is_zero(), "interpolation abscissae must be distinct");
            table[i] = (&table[i] - &table[i - 1]) / denom;
        }
    }
    let mut result = Polynomial::zero();
    for i in (0..n).rev() {
        let factor = Polynomial::new(vec![-xs[i].clone(), Rational::one()]);
        result = &(&result * &factor) + &Polynomial::constant(table[i].clone());
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rat;

    fn half_one_minus_x2() -> Polynomial {
        Polynomial::from_ratios(&[(1, 2), (0, 1), (-1, 2)])
    }

    #[test]
    fn evaluation() {
        let p = Polynomial::from_ratios(&[(3, 1), (-1, 1)]);
        assert_eq!(p.eval(&int(1)), int(2));
        assert_eq!(half_one_minus_x2().eval(&int(1)), int(0));
        assert_eq!(Polynomial::zero().eval(&rat(7, 3)), int(0));
    }

    #[test]
    fn derivative() {
        assert_eq!(
            half_one_minus_x2().derivative(),
            Polynomial::from_ratios(&[(0, 1), (-1, 1)])
        );
        assert!(Polynomial::constant(int(5)).derivative().is_zero());
        assert_eq!(
            Polynomial::monomial(int(1), 3).derivative(),
            Polynomial::monomial(int(3), 2)
        );
    }

    #[test]
    fn definite_integrals() {
        assert_eq!(
            half_one_minus_x2().definite_integral(&int(0), &int(1)).unwrap(),
            rat(1, 3)
        );
        let p = Polynomial::from_ratios(&[(3, 2), (-1, 1)]);
        assert_eq!(p.definite_integral(&int(0), &int(1)).unwrap(), int(1));
        assert_eq!(p.definite_integral(&rat(2, 3), &rat(2, 3)).unwrap(), int(0));
        assert!(matches!(
            p.definite_integral(&int(1), &int(0)),
            Err(IntegrationError::Reversed { .. })
        ));
    }

    #[test]
    fn zero_has_no_degree() {
        assert_eq!(Polynomial::new(vec![int(0), int(0)]), Polynomial::zero());
        assert_eq!(Polynomial::zero().degree(), None);
        assert_eq!(Polynomial::constant(int(2)).degree(), Some(0));
    }

    #[test]
    fn division_and_gcd() {
        // (x-1)^2 (x+2)
        let a = Polynomial::from_ratios(&[(2, 1), (-3, 1), (0, 1), (1, 1)]);
        let b = Polynomial::from_ratios(&[(-1, 1), (1, 1)]);
        let (q, r) = a.div_rem(&b);
        assert!(r.is_zero());
        assert_eq!(&q * &b, a);
        assert_eq!(a.gcd(&a.derivative()), b);
        assert_eq!(a.square_free(), Polynomial::from_ratios(&[(-2, 1), (1, 1), (1, 1)]));
    }

    #[test]
    fn affine_composition() {
        let p = half_one_minus_x2();
        let shifted = p.compose_affine(&int(1), &rat(1, 2));
        for x in [int(0), rat(1, 3), int(-2)] {
            assert_eq!(shifted.eval(&x), p.eval(&(&x + rat(1, 2))));
        }
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let p = Polynomial::from_ratios(&[(1, 3), (-2, 1), (0, 1), (5, 7)]);
        let pts: Vec<_> = (0..4).map(|i| (int(i), p.eval(&int(i)))).collect();
        assert_eq!(interpolate(&pts), p);
    }

    #[test]
    fn rendering() {
        let p = Polynomial::from_ratios(&[(0, 1), (-3, 32), (1, 8), (5, 24)]);
        assert_eq!(p.render("c"), "5/24*c^3 + 1/8*c^2 - 3/32*c");
        assert_eq!(Polynomial::zero().to_string(), "0");
        assert_eq!((-Polynomial::x()).to_string(), "-x");
    }
}
