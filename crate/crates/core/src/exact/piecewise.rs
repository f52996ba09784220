//! Piecewise polynomials on rational breakpoints.

use num_traits::Zero;

use super::polynomial::{IntegrationError, Polynomial};
use super::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PiecewiseError {
    #[error("need at least two breakpoints")]
    TooFewBreakpoints,
    #[error("breakpoints must be strictly increasing")]
    NotIncreasing,
    #[error("{pieces} pieces for {breakpoints} breakpoints")]
    PieceCount { pieces: usize, breakpoints: usize },
}

/// `pieces[i]` applies on `[breakpoints[i], breakpoints[i+1]]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PiecewisePolynomial {
    breakpoints: Vec<Rational>,
    pieces: Vec<Polynomial>,
}

impl PiecewisePolynomial {
    pub fn new(breakpoints: Vec<Rational>, pieces: Vec<Polynomial>) -> Result<Self, PiecewiseError> {
        if breakpoints.len() < 2 {
            return Err(PiecewiseError::TooFewBreakpoints);
        }
        if breakpoints.windows(2).any(|w| w[0] >= w[1]) {
            return Err(PiecewiseError::NotIncreasing);
        }
        if pieces.len() + 1 != breakpoints.len() {
            return Err(PiecewiseError::PieceCount {
                pieces: pieces.len(),
                breakpoints: breakpoints.len(),
            });
        }
        Ok(PiecewisePolynomial { breakpoints, pieces })
    }

    pub fn single(lo: Rational, hi: Rational, p: Polynomial) -> Result<Self, PiecewiseError> {
        Self::new(vec![lo, hi], vec![p])
    }

    pub fn breakpoints(&self) -> &[Rational] {
        &self.breakpoints
    }

    pub fn pieces(&self) -> &[Polynomial] {
        &self.pieces
    }

    pub fn start(&self) -> &Rational {
        &self.breakpoints[0]
    }

    pub fn end(&self) -> &Rational {
        self.breakpoints.last().unwrap()
    }

    /// `(lo, hi, piece)` triples.
    pub fn segments(&self) -> impl Iterator<Item = (&Rational, &Rational, &Polynomial)> {
        self.breakpoints
            .windows(2)
            .zip(&self.pieces)
            .map(|(w, p)| (&w[0], &w[1], p))
    }

    /// Index of the piece used at `x`; at an interior breakpoint the piece to
    /// the right is chosen, at the right end the last piece.
    pub fn piece_index(&self, x: &Rational) -> Option<usize> {
        if x < self.start() || x > self.end() {
            return None;
        }
        let idx = self.breakpoints[1..].partition_point(|b| b <= x);
        Some(idx.min(self.pieces.len() - 1))
    }

    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        self.piece_index(x).map(|i| self.pieces[i].eval(x))
    }

    /// Whether adjacent pieces agree at each interior breakpoint.
    pub fn continuity(&self) -> Vec<bool> {
        (1..self.pieces.len())
            .map(|i| {
                let b = &self.breakpoints[i];
                self.pieces[i - 1].eval(b) == self.pieces[i].eval(b)
            })
            .collect()
    }

    pub fn is_continuous(&self) -> bool {
        self.continuity().into_iter().all(|c| c)
    }

    pub fn integral(&self, lo: &Rational, hi: &Rational) -> Result<Rational, IntegrationError> {
        if lo > hi {
            return Err(IntegrationError::Reversed {
                lo: lo.clone(),
                hi: hi.clone(),
            });
        }
        if lo < self.start() || hi > self.end() {
            return Err(IntegrationError::OutOfSpan {
                lo: lo.clone(),
                hi: hi.clone(),
                start: self.start().clone(),
                end: self.end().clone(),
            });
        }
        let mut total = Rational::zero();
        for (a, b, p) in self.segments() {
            let s = if a > lo { a } else { lo };
            let e = if b < hi { b } else { hi };
            if s < e {
                total += p.integral_unchecked(s, e);
            }
        }
        Ok(total)
    }

    pub fn map_pieces(&self, f: impl Fn(&Polynomial) -> Polynomial) -> Self {
        PiecewisePolynomial {
            breakpoints: self.breakpoints.clone(),
            pieces: self.pieces.iter().map(f).collect(),
        }
    }

    pub fn derivative(&self) -> Self {
        self.map_pieces(Polynomial::derivative)
    }

    /// Restricts to `[lo, hi]`, splitting the boundary pieces.
    pub fn restrict(&self, lo: &Rational, hi: &Rational) -> Option<Self> {
        if lo >= hi || lo < self.start() || hi > self.end() {
            return None;
        }
        let mut bps = vec![lo.clone()];
        let mut pieces = Vec::new();
        for (a, b, p) in self.segments() {
            if b <= lo || a >= hi {
                continue;
            }
            pieces.push(p.clone());
            bps.push(if b < hi { b.clone() } else { hi.clone() });
        }
        Self::new(bps, pieces).ok()
    }
}
