//! Ruled surfaces `X(u, v) = sigma(u) + v b(u)` with `sigma` the striction line.
//!
//! The base curve supplied by the user is moved onto the striction line
//! symbolically: `sigma = alpha - s b` with `s = <alpha', b'> / <b', b'>`, so
//! `sigma` carries exact derivatives just like the input curves.

use std::fmt;

use crate::error::GeometryError;
use crate::exprcurve::{CurveEval, Expr, ExprCurve, Params};
use crate::framing::{self, angle_density_from_eval, frame_from_eval, DirectorCheck, FrameSample};
use crate::lorentz::{causal_class, cross, inner, CausalClass, Vec3L};
use crate::numdiff;
use crate::Interval;

/// Structure coefficients below this magnitude mark the surface developable.
pub const TOL_DEVELOPABLE: f64 = 1e-6;

/// Default step for numerical derivatives of the structure functions.
pub const DEFAULT_STEP: f64 = 1e-4;

const STRICTION_RESIDUAL_TOL: f64 = 1e-7;

/// Causal case of a non-developable ruled surface.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SurfaceCase {
    /// Timelike surface, spacelike ruling, timelike `a`.
    TlSpacelikeRulingATimelike,
    /// Timelike surface, spacelike ruling, spacelike `a` (so `y` timelike).
    TlSpacelikeRulingASpacelike,
    /// Timelike surface, timelike ruling.
    TlTimelikeRuling,
    /// Spacelike surface, timelike `y`.
    SlYTimelike,
    /// Spacelike surface, spacelike `y`.
    SlYSpacelike,
}

impl SurfaceCase {
    pub const ALL: [SurfaceCase; 5] = [
        SurfaceCase::TlSpacelikeRulingATimelike,
        SurfaceCase::TlSpacelikeRulingASpacelike,
        SurfaceCase::TlTimelikeRuling,
        SurfaceCase::SlYTimelike,
        SurfaceCase::SlYSpacelike,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SurfaceCase::TlSpacelikeRulingATimelike => "TL_SpacelikeRuling_ATimelike",
            SurfaceCase::TlSpacelikeRulingASpacelike => "TL_SpacelikeRuling_ASpacelike",
            SurfaceCase::TlTimelikeRuling => "TL_TimelikeRuling",
            SurfaceCase::SlYTimelike => "SL_YTimelike",
            SurfaceCase::SlYSpacelike => "SL_YSpacelike",
        }
    }

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn is_timelike_surface(self) -> bool {
        matches!(
            self,
            SurfaceCase::TlSpacelikeRulingATimelike
                | SurfaceCase::TlSpacelikeRulingASpacelike
                | SurfaceCase::TlTimelikeRuling
        )
    }
}

impl fmt::Display for SurfaceCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Per-case signs relating the canonical frame coefficients to the symbols
/// used by the closed-form curvature formulas: `lambda = lambda_sign * cx`
/// and `k_g(printed) = kg_sign * k_g(canonical)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SignTable {
    pub lambda: [f64; 5],
    pub kg: [f64; 5],
}

impl Default for SignTable {
    /// `sigma' = -lambda x + mu y` for the timelike-`a` case and
    /// `sigma' = lambda x + mu y` elsewhere; every printed frame system reads
    /// `a' = eps x - k_g y`, hence `kg_sign = -1`.
    fn default() -> Self {
        Self {
            lambda: [-1.0, 1.0, 1.0, 1.0, 1.0],
            kg: [-1.0; 5],
        }
    }
}

impl SignTable {
    pub fn uniform(lambda: f64, kg: f64) -> Self {
        Self {
            lambda: [lambda; 5],
            kg: [kg; 5],
        }
    }

    pub fn lambda_sign(&self, case: SurfaceCase) -> f64 {
        self.lambda[case.index()]
    }

    pub fn kg_sign(&self, case: SurfaceCase) -> f64 {
        self.kg[case.index()]
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RuledSurface {
    pub name: String,
    pub alpha: ExprCurve,
    pub b: ExprCurve,
    pub domain_u: Interval,
    pub domain_v: Interval,
    striction: ExprCurve,
    offset: Expr,
}

fn inner_expr(x: &[Expr; 3], y: &[Expr; 3]) -> Expr {
    Expr::sub(
        Expr::add(
            Expr::mul(x[0].clone(), y[0].clone()),
            Expr::mul(x[1].clone(), y[1].clone()),
        ),
        Expr::mul(x[2].clone(), y[2].clone()),
    )
}

/// Symbolic striction offset `<alpha', b'> / <b', b'>`.
pub fn striction_offset_expr(alpha: &ExprCurve, b: &ExprCurve) -> Expr {
    let (da, db) = (alpha.derivative(1), b.derivative(1));
    Expr::div(inner_expr(da, db), inner_expr(db, db))
}

impl RuledSurface {
    pub fn new(
        name: impl Into<String>,
        alpha: ExprCurve,
        b: ExprCurve,
        domain_u: Interval,
        domain_v: Interval,
    ) -> Self {
        let offset = striction_offset_expr(&alpha, &b);
        let comps = [0, 1, 2].map(|i| {
            Expr::sub(
                alpha.components()[i].clone(),
                Expr::mul(offset.clone(), b.components()[i].clone()),
            )
        });
        let mut params: Params = alpha.params().clone();
        params.extend(b.params().iter().map(|(k, v)| (k.clone(), *v)));
        let striction = ExprCurve::new(comps, params).expect("parameters bound on both input curves");
        Self {
            name: name.into(),
            alpha,
            b,
            domain_u,
            domain_v,
            striction,
            offset,
        }
    }

    /// Striction line `sigma(u)` as a symbolic curve.
    pub fn striction_curve(&self) -> &ExprCurve {
        &self.striction
    }

    pub fn offset_expr(&self) -> &Expr {
        &self.offset
    }

    pub fn check_director(&self, n: usize, tol: f64) -> Result<DirectorCheck, GeometryError> {
        framing::check_director(&self.b, self.domain_u, n, tol)
    }

    /// Same surface after applying the linear map `m` to both curves.
    pub fn transformed(&self, m: &crate::lorentz::Lorentz3) -> RuledSurface {
        RuledSurface::new(
            self.name.clone(),
            self.alpha.transformed(m),
            self.b.transformed(m),
            self.domain_u,
            self.domain_v,
        )
    }
}

/// Striction point and offset at `u`, computed numerically from the input curves.
pub fn striction(alpha: &ExprCurve, b: &ExprCurve, u: f64, tol: f64) -> Result<(Vec3L, f64), GeometryError> {
    let (ae, be) = (alpha.eval(u)?, b.eval(u)?);
    let bb = inner(be.d1, be.d1);
    if bb.abs() <= tol * be.d1.euclid_sq().max(1.0) {
        return Err(GeometryError::NullRulingDerivative { u });
    }
    let offset = inner(ae.d1, be.d1) / bb;
    Ok((ae.p - be.p * offset, offset))
}

/// Surface point on the striction-adjusted parametrisation.
pub fn evaluate(surface: &RuledSurface, u: f64, v: f64) -> Result<Vec3L, GeometryError> {
    Ok(surface.striction.position(u)? + surface.b.position(u)? * v)
}

/// Structure functions at one parameter value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StructureSample {
    pub u: f64,
    pub frame: FrameSample,
    /// Striction tangent.
    pub sigma_prime: Vec3L,
    /// `sigma' = cx x + cy y`.
    pub cx: f64,
    pub cy: f64,
    /// `mu = cy`.
    pub mu: f64,
    pub k_g: f64,
    /// Pitch of the striction line, `-<sigma', b>`.
    pub delta: f64,
    pub theta: f64,
    pub d_cx: f64,
    pub d2_cx: f64,
    pub d_cy: f64,
    pub d2_cy: f64,
    pub d_kg: f64,
}

impl StructureSample {
    pub fn lambda_printed(&self, case: SurfaceCase, signs: &SignTable) -> f64 {
        signs.lambda_sign(case) * self.cx
    }

    pub fn is_developable(&self) -> bool {
        self.cy.abs() <= TOL_DEVELOPABLE
    }
}

struct Coefficients {
    frame: FrameSample,
    be: CurveEval,
    sigma_prime: Vec3L,
    cx: f64,
    cy: f64,
}

fn coefficients(surface: &RuledSurface, u: f64, tol: f64) -> Result<Coefficients, GeometryError> {
    let be = surface.b.eval(u)?;
    let db = be.d1;
    if inner(db, db).abs() <= tol * db.euclid_sq().max(1.0) {
        return Err(GeometryError::NullRulingDerivative { u });
    }
    let frame = frame_from_eval(&be, tol)?;
    let sigma_prime = surface.striction.eval_order(u, 1)?;
    let cx = inner(sigma_prime, frame.x) / inner(frame.x, frame.x);
    let cy = inner(sigma_prime, frame.y) / inner(frame.y, frame.y);
    let residual = (sigma_prime - frame.x * cx - frame.y * cy).euclid_norm();
    if residual > STRICTION_RESIDUAL_TOL * sigma_prime.euclid_norm().max(1.0) {
        return Err(GeometryError::StrictionResidual { u, residual });
    }
    Ok(Coefficients {
        frame,
        be,
        sigma_prime,
        cx,
        cy,
    })
}

/// Structure sample at `u`; derivatives use Richardson-extrapolated central
/// differences with step `h`.
pub fn structure_sample(
    surface: &RuledSurface,
    u: f64,
    h: f64,
    tol: f64,
) -> Result<StructureSample, GeometryError> {
    if !(h > 0.0) {
        return Err(GeometryError::InvalidArgument(format!("derivative step must be positive, got {h}")));
    }
    let c0 = coefficients(surface, u, tol)?;
    let mut samples = [(0.0, 0.0, 0.0); 5];
    for (slot, k) in samples.iter_mut().zip([-2.0, -1.0, 0.0, 1.0, 2.0]) {
        *slot = if k == 0.0 {
            (c0.cx, c0.cy, c0.frame.k_g)
        } else {
            let c = coefficients(surface, u + k * h, tol)?;
            (c.cx, c.cy, c.frame.k_g)
        };
    }
    let pick = |f: fn(&(f64, f64, f64)) -> f64| samples.map(|s| f(&s));
    let (cxs, cys, kgs) = (pick(|s| s.0), pick(|s| s.1), pick(|s| s.2));
    let d1 = |s: [f64; 5]| numdiff::richardson_d1(s[0], s[1], s[3], s[4], h);
    let d2 = |s: [f64; 5]| numdiff::richardson_d2(s[0], s[1], s[2], s[3], s[4], h);

    Ok(StructureSample {
        u,
        frame: c0.frame,
        sigma_prime: c0.sigma_prime,
        cx: c0.cx,
        cy: c0.cy,
        mu: c0.cy,
        k_g: c0.frame.k_g,
        delta: -inner(c0.sigma_prime, c0.be.p),
        theta: angle_density_from_eval(&c0.be),
        d_cx: d1(cxs),
        d2_cx: d2(cxs),
        d_cy: d1(cys),
        d2_cy: d2(cys),
        d_kg: d1(kgs),
    })
}

/// Tangent vectors `X_u = sigma' + v b'` and `X_v = b` at `(u, v)`.
pub fn tangents(surface: &RuledSurface, u: f64, v: f64) -> Result<(Vec3L, Vec3L), GeometryError> {
    let sp = surface.striction.eval_order(u, 1)?;
    let be = surface.b.eval(u)?;
    Ok((sp + be.d1 * v, be.p))
}

/// Case selection from the frame signs and the causal class of the normal.
pub fn case_from_signs(frame: &FrameSample, normal_timelike: bool) -> Option<SurfaceCase> {
    if normal_timelike {
        if frame.eps_x < 0.0 {
            return None;
        }
        Some(if frame.eps_y < 0.0 {
            SurfaceCase::SlYTimelike
        } else {
            SurfaceCase::SlYSpacelike
        })
    } else if frame.eps_x < 0.0 {
        Some(SurfaceCase::TlTimelikeRuling)
    } else if frame.eps_a < 0.0 {
        Some(SurfaceCase::TlSpacelikeRulingATimelike)
    } else {
        Some(SurfaceCase::TlSpacelikeRulingASpacelike)
    }
}

/// Surface case at `(u, v)`. The surface is timelike iff `X_u × X_v` is spacelike.
pub fn classify(
    surface: &RuledSurface,
    u: f64,
    v: f64,
    tol_null: f64,
    tol_degenerate: f64,
) -> Result<SurfaceCase, GeometryError> {
    let frame = framing::frame(&surface.b, u, tol_null)?;
    let (xu, xv) = tangents(surface, u, v)?;
    let (e, f, g) = (inner(xu, xu), inner(xu, xv), inner(xv, xv));
    let det = e * g - f * f;
    if det.abs() <= tol_degenerate {
        return Err(GeometryError::DegenerateMetric { u, v, det });
    }
    let n_raw = cross(xu, xv);
    let class = causal_class(n_raw, tol_null);
    if class == CausalClass::Null {
        return Err(GeometryError::NullNormal { u, v });
    }
    case_from_signs(&frame, class == CausalClass::Timelike).ok_or(GeometryError::InconsistentCase { u, v })
}
