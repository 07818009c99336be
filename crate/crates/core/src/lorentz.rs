//! Linear algebra in Minkowski 3-space with signature (+, +, -).
//!
//! The third coordinate is the time axis. All operations are pure and work on
//! plain `Copy` values.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use thiserror::Error;

/// A vector of Minkowski 3-space.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Vec3L {
    pub c1: f64,
    pub c2: f64,
    pub c3: f64,
}

/// Causal character of a vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CausalClass {
    Spacelike,
    Timelike,
    Null,
}

#[derive(Debug, Clone, Copy, PartialEq, Error)]
#[error("NullVector: cannot normalize a null or zero vector")]
pub struct NullVector;

impl Vec3L {
    pub const ZERO: Vec3L = Vec3L::new(0.0, 0.0, 0.0);

    pub const fn new(c1: f64, c2: f64, c3: f64) -> Self {
        Self { c1, c2, c3 }
    }

    pub fn to_array(self) -> [f64; 3] {
        [self.c1, self.c2, self.c3]
    }

    pub fn is_finite(&self) -> bool {
        self.c1.is_finite() && self.c2.is_finite() && self.c3.is_finite()
    }

    pub fn is_zero(&self) -> bool {
        self.c1 == 0.0 && self.c2 == 0.0 && self.c3 == 0.0
    }

    /// Squared Euclidean length, used for tolerance scaling and residuals.
    pub fn euclid_sq(&self) -> f64 {
        self.c1 * self.c1 + self.c2 * self.c2 + self.c3 * self.c3
    }

    pub fn euclid_norm(&self) -> f64 {
        self.euclid_sq().sqrt()
    }

    pub fn inner(&self, other: &Vec3L) -> f64 {
        inner(*self, *other)
    }

    pub fn cross(&self, other: &Vec3L) -> Vec3L {
        cross(*self, *other)
    }
}

impl From<[f64; 3]> for Vec3L {
    fn from(c: [f64; 3]) -> Self {
        Vec3L::new(c[0], c[1], c[2])
    }
}

impl fmt::Display for Vec3L {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.c1, self.c2, self.c3)
    }
}

impl Add for Vec3L {
    type Output = Vec3L;
    fn add(self, rhs: Vec3L) -> Vec3L {
        Vec3L::new(self.c1 + rhs.c1, self.c2 + rhs.c2, self.c3 + rhs.c3)
    }
}

impl AddAssign for Vec3L {
    fn add_assign(&mut self, rhs: Vec3L) {
        *self = *self + rhs;
    }
}

impl Sub for Vec3L {
    type Output = Vec3L;
    fn sub(self, rhs: Vec3L) -> Vec3L {
        Vec3L::new(self.c1 - rhs.c1, self.c2 - rhs.c2, self.c3 - rhs.c3)
    }
}

impl Neg for Vec3L {
    type Output = Vec3L;
    fn neg(self) -> Vec3L {
        Vec3L::new(-self.c1, -self.c2, -self.c3)
    }
}

impl Mul<f64> for Vec3L {
    type Output = Vec3L;
    fn mul(self, s: f64) -> Vec3L {
        Vec3L::new(self.c1 * s, self.c2 * s, self.c3 * s)
    }
}

impl Mul<Vec3L> for f64 {
    type Output = Vec3L;
    fn mul(self, v: Vec3L) -> Vec3L {
        v * self
    }
}

/// Lorentzian inner product `x1 y1 + x2 y2 - x3 y3`.
pub fn inner(x: Vec3L, y: Vec3L) -> f64 {
    x.c1 * y.c1 + x.c2 * y.c2 - x.c3 * y.c3
}

/// Lorentzian vector product, characterised by `inner(x × y, z) = det(x, y, z)`.
///
/// This makes `x × y` orthogonal to both factors. Note the second component is
/// `x3 y1 - x1 y3`.
pub fn cross(x: Vec3L, y: Vec3L) -> Vec3L {
    Vec3L::new(
        x.c2 * y.c3 - x.c3 * y.c2,
        x.c3 * y.c1 - x.c1 * y.c3,
        x.c2 * y.c1 - x.c1 * y.c2,
    )
}

/// Ordinary 3x3 determinant with `x`, `y`, `z` as rows.
pub fn det(x: Vec3L, y: Vec3L, z: Vec3L) -> f64 {
    x.c1 * (y.c2 * z.c3 - y.c3 * z.c2) - x.c2 * (y.c1 * z.c3 - y.c3 * z.c1)
        + x.c3 * (y.c1 * z.c2 - y.c2 * z.c1)
}

/// Classifies `x` by the sign of `inner(x, x)`.
///
/// A vector is null when `|<x,x>| <= tol * max(1, |x|_E^2)`. The zero vector is
/// spacelike.
pub fn causal_class(x: Vec3L, tol: f64) -> CausalClass {
    if x.is_zero() {
        return CausalClass::Spacelike;
    }
    let q = inner(x, x);
    if q.abs() <= tol * x.euclid_sq().max(1.0) {
        CausalClass::Null
    } else if q > 0.0 {
        CausalClass::Spacelike
    } else {
        CausalClass::Timelike
    }
}

/// Pseudo-norm `sqrt(|<x,x>|)`.
pub fn norm(x: Vec3L) -> f64 {
    inner(x, x).abs().sqrt()
}

pub fn normalize(x: Vec3L, tol: f64) -> Result<Vec3L, NullVector> {
    if x.is_zero() || causal_class(x, tol) == CausalClass::Null {
        return Err(NullVector);
    }
    Ok(x * (1.0 / norm(x)))
}

/// Sign of `inner(x, x)` as `+1.0` / `-1.0`, or `None` for null vectors.
pub fn signature_sign(x: Vec3L, tol: f64) -> Option<f64> {
    match causal_class(x, tol) {
        CausalClass::Spacelike if !x.is_zero() => Some(1.0),
        CausalClass::Timelike => Some(-1.0),
        _ => None,
    }
}

/// A 3x3 linear map acting on column vectors, used for Lorentz isometries.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Lorentz3 {
    pub m: [[f64; 3]; 3],
}

impl Lorentz3 {
    pub fn identity() -> Self {
        Self {
            m: [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]],
        }
    }

    /// Rotation by `angle` in the spacelike (1,2)-plane, about the time axis.
    pub fn rotation(angle: f64) -> Self {
        let (s, c) = angle.sin_cos();
        Self {
            m: [[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]],
        }
    }

    /// Boost with rapidity `phi` in the (1,3)-plane.
    pub fn boost(phi: f64) -> Self {
        let (ch, sh) = (phi.cosh(), phi.sinh());
        Self {
            m: [[ch, 0.0, sh], [0.0, 1.0, 0.0], [sh, 0.0, ch]],
        }
    }

    pub fn compose(&self, rhs: &Lorentz3) -> Lorentz3 {
        let mut m = [[0.0; 3]; 3];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = (0..3).map(|k| self.m[i][k] * rhs.m[k][j]).sum();
            }
        }
        Lorentz3 { m }
    }

    pub fn apply(&self, x: Vec3L) -> Vec3L {
        let a = x.to_array();
        let row = |i: usize| self.m[i][0] * a[0] + self.m[i][1] * a[1] + self.m[i][2] * a[2];
        Vec3L::new(row(0), row(1), row(2))
    }
}
