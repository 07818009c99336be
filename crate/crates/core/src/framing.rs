//! Director frame `{x, a, y}` of a unit director curve `b(u)`.
//!
//! `x = b`, `a = b'` and `y = a × x`. For a unit-speed director on the de
//! Sitter sphere or the hyperbolic plane the frame is pseudo-orthonormal and
//! exactly one of its vectors is timelike.

use crate::error::GeometryError;
use crate::exprcurve::{CurveEval, EvalError, ExprCurve};
use crate::lorentz::{causal_class, cross, inner, signature_sign, CausalClass, Vec3L};
use crate::Interval;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrameSample {
    pub u: f64,
    pub x: Vec3L,
    pub a: Vec3L,
    pub y: Vec3L,
    pub eps_x: f64,
    pub eps_a: f64,
    pub eps_y: f64,
    /// x-coefficient of `a'`.
    pub cx_aprime: f64,
    /// y-coefficient of `a'`.
    pub cy_aprime: f64,
    /// Geodesic curvature of the director, `<a', y> / <y, y>`.
    pub k_g: f64,
}

impl FrameSample {
    /// Derivatives of `(x, a, y)` predicted by the frame equations:
    ///
    /// ```text
    /// x' = a
    /// a' = cx x + k_g y
    /// y' = -eps_y eps_a k_g a
    /// ```
    pub fn predicted_derivatives(&self) -> [Vec3L; 3] {
        [
            self.a,
            self.x * self.cx_aprime + self.y * self.k_g,
            self.a * (-self.eps_y * self.eps_a * self.k_g),
        ]
    }

    pub fn timelike_count(&self) -> usize {
        [self.eps_x, self.eps_a, self.eps_y]
            .iter()
            .filter(|&&e| e < 0.0)
            .count()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DirectorCheck {
    pub u_samples: Vec<f64>,
    pub max_dev_b: f64,
    pub max_dev_db: f64,
    pub director_class: CausalClass,
}

/// Checks that `b` is a unit director parametrised by arc length on `domain`.
///
/// `n` points are sampled uniformly including both endpoints.
pub fn check_director(
    b: &ExprCurve,
    domain: Interval,
    n: usize,
    tol: f64,
) -> Result<DirectorCheck, GeometryError> {
    if n < 2 {
        return Err(GeometryError::InvalidArgument(format!(
            "director check needs at least 2 samples, got {n}"
        )));
    }
    let u_samples = domain.samples(n);
    let mut max_dev_b: f64 = 0.0;
    let mut max_dev_db: f64 = 0.0;
    let mut classes: Option<(CausalClass, CausalClass)> = None;
    for &u in &u_samples {
        let p = b.eval_order(u, 0)?;
        let d = b.eval_order(u, 1)?;
        let class_d = causal_class(d, tol);
        if class_d == CausalClass::Null {
            return Err(GeometryError::NullDirectorDerivative { u });
        }
        let class_b = causal_class(p, tol);
        match classes {
            None => classes = Some((class_b, class_d)),
            Some((cb, cd)) => {
                if cb != class_b {
                    return Err(GeometryError::CausalClassChange { u, what: "b" });
                }
                if cd != class_d {
                    return Err(GeometryError::CausalClassChange { u, what: "b'" });
                }
            }
        }
        max_dev_b = max_dev_b.max((inner(p, p).abs() - 1.0).abs());
        max_dev_db = max_dev_db.max((inner(d, d).abs() - 1.0).abs());
    }
    if max_dev_b > tol {
        return Err(GeometryError::NotUnitDirector { max_dev: max_dev_b });
    }
    if max_dev_db > tol {
        return Err(GeometryError::NotArcLength { max_dev: max_dev_db });
    }
    Ok(DirectorCheck {
        u_samples,
        max_dev_b,
        max_dev_db,
        director_class: classes.expect("n >= 2").0,
    })
}

/// Frame of `b` at `u`.
pub fn frame(b: &ExprCurve, u: f64, tol: f64) -> Result<FrameSample, GeometryError> {
    frame_from_eval(&b.eval(u)?, tol)
}

/// Frame from an already evaluated director.
pub fn frame_from_eval(be: &CurveEval, tol: f64) -> Result<FrameSample, GeometryError> {
    let u = be.u;
    let (x, a) = (be.p, be.d1);
    let y = cross(a, x);
    let sign = |v: Vec3L, which| signature_sign(v, tol).ok_or(GeometryError::NullFrameVector { u, which });
    let eps_x = sign(x, "x")?;
    let eps_a = sign(a, "a")?;
    let eps_y = sign(y, "y")?;

    let a_prime = be.d2;
    let cx_aprime = inner(a_prime, x) / inner(x, x);
    let cy_aprime = inner(a_prime, y) / inner(y, y);
    let residual = (a_prime - x * cx_aprime - y * cy_aprime).euclid_norm();
    if residual > tol * a_prime.euclid_norm().max(1.0) {
        return Err(GeometryError::FrameResidual { u, residual });
    }
    Ok(FrameSample {
        u,
        x,
        a,
        y,
        eps_x,
        eps_a,
        eps_y,
        cx_aprime,
        cy_aprime,
        k_g: cy_aprime,
    })
}

/// Pitch `-<alpha'(u), b(u)>`.
pub fn pitch(alpha: &ExprCurve, b: &ExprCurve, u: f64) -> Result<f64, EvalError> {
    Ok(-inner(alpha.eval_order(u, 1)?, b.eval_order(u, 0)?))
}

/// Angle density `-<(b' × b)', b'>`, using `(b' × b)' = b'' × b`.
pub fn angle_density(b: &ExprCurve, u: f64) -> Result<f64, EvalError> {
    let e = b.eval(u)?;
    Ok(angle_density_from_eval(&e))
}

pub fn angle_density_from_eval(e: &CurveEval) -> f64 {
    -inner(cross(e.d2, e.p), e.d1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exprcurve::Params;
    use std::f64::consts::PI;

    fn curve(s: [&str; 3]) -> ExprCurve {
        ExprCurve::parse(&s, Params::new()).unwrap()
    }

    fn close(a: Vec3L, b: Vec3L) -> bool {
        (a - b).euclid_norm() < 1e-14
    }

    #[test]
    fn circle_director() {
        let b = curve(["cos(u)", "sin(u)", "0"]);
        let chk = check_director(&b, Interval::new(0.0, 2.0 * PI), 64, 1e-9).unwrap();
        assert!(chk.max_dev_b < 1e-15 && chk.max_dev_db < 1e-15);
        assert_eq!(chk.director_class, CausalClass::Spacelike);
        assert_eq!(chk.u_samples.len(), 64);

        let f = frame(&b, 0.0, 1e-9).unwrap();
        assert_eq!(f.x, Vec3L::new(1.0, 0.0, 0.0));
        assert_eq!(f.a, Vec3L::new(0.0, 1.0, 0.0));
        assert_eq!(f.y, Vec3L::new(0.0, 0.0, 1.0));
        assert_eq!((f.eps_x, f.eps_a, f.eps_y), (1.0, 1.0, -1.0));
        assert_eq!(f.cx_aprime, -1.0);
        assert_eq!(f.k_g, 0.0);
        for u in [0.3, 1.0, 2.5, 4.0] {
            assert!((frame(&b, u, 1e-9).unwrap().cx_aprime + 1.0).abs() < 1e-15);
        }
    }

    #[test]
    fn hyperbolic_director() {
        let b = curve(["sinh(u)", "0", "cosh(u)"]);
        let chk = check_director(&b, Interval::new(-1.0, 1.0), 64, 1e-9).unwrap();
        assert_eq!(chk.director_class, CausalClass::Timelike);
        assert!(chk.max_dev_b < 1e-14 && chk.max_dev_db < 1e-14);
        let f = frame(&b, 0.0, 1e-9).unwrap();
        assert!(close(f.x, Vec3L::new(0.0, 0.0, 1.0)));
        assert!(close(f.a, Vec3L::new(1.0, 0.0, 0.0)));
        assert!(close(f.y, Vec3L::new(0.0, -1.0, 0.0)));
        assert_eq!(f.eps_x, -1.0);
        assert_eq!(f.cx_aprime, 1.0);
        assert_eq!(f.k_g, 0.0);
    }

    #[test]
    fn director_errors() {
        let big = curve(["2*cos(u)", "2*sin(u)", "0"]);
        assert!(matches!(
            check_director(&big, Interval::new(0.0, 1.0), 8, 1e-9),
            Err(GeometryError::NotUnitDirector { .. })
        ));
        // unit but not arc length
        let slow = curve(["cos(2*u)", "sin(2*u)", "0"]);
        assert!(matches!(
            check_director(&slow, Interval::new(0.0, 1.0), 8, 1e-9),
            Err(GeometryError::NotArcLength { .. })
        ));
        // de Sitter null line: <b,b> = 1, b' = (0,1,1)
        let null = curve(["1", "u", "u"]);
        assert!(matches!(
            check_director(&null, Interval::new(0.0, 1.0), 8, 1e-9),
            Err(GeometryError::NullDirectorDerivative { .. })
        ));
        let cylinder = curve(["0", "0", "1"]);
        assert!(matches!(
            check_director(&cylinder, Interval::new(0.0, 1.0), 8, 1e-9),
            Err(GeometryError::NotArcLength { .. })
        ));
        // b' goes from spacelike to timelike across u = 1
        let flip = curve(["u", "0", "u^2/2"]);
        assert!(matches!(
            check_director(&flip, Interval::new(0.0, 2.0), 8, 1e-9),
            Err(GeometryError::CausalClassChange { what: "b'", .. })
        ));
        assert!(matches!(
            check_director(&big, Interval::new(0.0, 1.0), 1, 1e-9),
            Err(GeometryError::InvalidArgument(_))
        ));
    }

    #[test]
    fn null_frame_vector() {
        let b = curve(["1", "u", "u"]);
        assert!(matches!(
            frame(&b, 0.5, 1e-9),
            Err(GeometryError::NullFrameVector { which: "a", .. })
        ));
    }

    #[test]
    fn pitch_examples() {
        let circle = curve(["cos(u)", "sin(u)", "0"]);
        assert_eq!(pitch(&curve(["0", "0", "u"]), &circle, 1.0).unwrap(), 0.0);
        assert_eq!(pitch(&curve(["u", "0", "0"]), &curve(["1", "0", "0"]), 0.4).unwrap(), -1.0);
        assert_eq!(pitch(&curve(["0", "0", "u"]), &curve(["0", "0", "1"]), 0.4).unwrap(), 1.0);
    }

    #[test]
    fn angle_density_examples() {
        assert_eq!(angle_density(&curve(["cos(u)", "sin(u)", "0"]), 0.0).unwrap(), 0.0);
        assert_eq!(angle_density(&curve(["sinh(u)", "0", "cosh(u)"]), 0.0).unwrap(), 0.0);
        // b'' parallel to b
        assert_eq!(angle_density(&curve(["exp(u)", "2*exp(u)", "0"]), 0.3).unwrap(), 0.0);
    }
}
