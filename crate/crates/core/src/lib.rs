//! Non-developable ruled surfaces `X(u, v) = alpha(u) + v b(u)` in Minkowski
//! 3-space with signature (+, +, -).
//!
//! The crate builds the surface from symbolic component expressions, moves the
//! base curve onto the striction line, computes the director frame and
//! structure functions, and evaluates curvature both from the fundamental forms
//! and from published closed-form expressions so the two can be compared.

pub mod curvature;
pub mod error;
pub mod exprcurve;
pub mod framing;
pub mod lorentz;
pub mod numdiff;
pub mod ruled;

pub use error::GeometryError;

/// Closed parameter interval `[lo, hi]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

impl Interval {
    pub const fn new(lo: f64, hi: f64) -> Self {
        Self { lo, hi }
    }

    pub fn is_valid(&self) -> bool {
        self.lo.is_finite() && self.hi.is_finite() && self.lo < self.hi
    }

    pub fn contains(&self, t: f64) -> bool {
        self.lo <= t && t <= self.hi
    }

    /// `n` evenly spaced points including both ends. `n == 1` yields `lo`.
    pub fn samples(&self, n: usize) -> Vec<f64> {
        match n {
            0 => Vec::new(),
            1 => vec![self.lo],
            _ => {
                let step = (self.hi - self.lo) / (n - 1) as f64;
                (0..n)
                    .map(|i| if i + 1 == n { self.hi } else { self.lo + step * i as f64 })
                    .collect()
            }
        }
    }
}
