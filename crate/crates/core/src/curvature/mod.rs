//! Curvature of ruled surfaces and of their striction lines.
//!
//! The oracle route works directly from the fundamental forms of
//! `X(u, v) = sigma(u) + v b(u)`, with every partial derivative assembled from
//! exact symbolic derivatives. The closed-form route lives in [`printed`] and
//! the comparison between the two in [`audit`].

pub mod audit;
pub mod printed;

pub use audit::{audit, AuditConfig, AuditReport, FormulaAudit, Verdict};
pub use printed::{printed, printed_formulas, Formula, PrintedSet, PrintedValue, StructureInputs};

use crate::error::GeometryError;
use crate::exprcurve::ExprCurve;
use crate::lorentz::{causal_class, cross, inner, norm, CausalClass, Vec3L};
use crate::ruled::{case_from_signs, structure_sample, RuledSurface, SignTable, StructureSample, SurfaceCase};

/// First and second fundamental forms at one surface point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FundamentalForms {
    pub e: f64,
    pub f: f64,
    pub g: f64,
    pub l: f64,
    pub m: f64,
    pub n: f64,
    /// `EG - F^2`.
    pub det1: f64,
    pub n_unit: Vec3L,
    /// `<n, n>`: `-1` for a timelike normal, `+1` for a spacelike one.
    pub eps_n: f64,
    pub x_u: Vec3L,
    pub x_v: Vec3L,
}

impl FundamentalForms {
    pub fn normal_class(&self) -> CausalClass {
        if self.eps_n < 0.0 {
            CausalClass::Timelike
        } else {
            CausalClass::Spacelike
        }
    }
}

pub fn fundamental_forms(
    surface: &RuledSurface,
    u: f64,
    v: f64,
    tol_null: f64,
    tol_degenerate: f64,
) -> Result<FundamentalForms, GeometryError> {
    let se = surface.striction_curve().eval(u)?;
    let be = surface.b.eval(u)?;
    let x_u = se.d1 + be.d1 * v;
    let x_v = be.p;
    let x_uu = se.d2 + be.d2 * v;
    let x_uv = be.d1;

    let (e, f, g) = (inner(x_u, x_u), inner(x_u, x_v), inner(x_v, x_v));
    let det1 = e * g - f * f;
    if det1.abs() <= tol_degenerate {
        return Err(GeometryError::DegenerateMetric { u, v, det: det1 });
    }
    let n_raw = cross(x_u, x_v);
    let eps_n = match causal_class(n_raw, tol_null) {
        CausalClass::Null => return Err(GeometryError::NullNormal { u, v }),
        CausalClass::Spacelike => 1.0,
        CausalClass::Timelike => -1.0,
    };
    let n_unit = n_raw * (1.0 / norm(n_raw));
    Ok(FundamentalForms {
        e,
        f,
        g,
        l: inner(x_uu, n_unit),
        m: inner(x_uv, n_unit),
        // X_vv = 0 on a ruled surface
        n: 0.0,
        det1,
        n_unit,
        eps_n,
        x_u,
        x_v,
    })
}

/// Gauss and mean curvature from the fundamental forms,
/// `K = -eps (LN - M^2) / (EG - F^2)` and `H = eps (GL + EN - 2FM) / (2(EG - F^2))`
/// with `eps = <n, n>`.
pub fn gauss_mean_oracle(f: &FundamentalForms) -> (f64, f64) {
    let eps = f.eps_n;
    let k = -eps * (f.l * f.n - f.m * f.m) / f.det1;
    let h = eps * (f.g * f.l + f.e * f.n - 2.0 * f.f * f.m) / (2.0 * f.det1);
    (k, h)
}

/// Curvature and torsion of the striction line. `tau` is `None` where
/// `sigma' × sigma''` is null or zero.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KappaTau {
    pub kappa: f64,
    pub tau: Option<f64>,
}

pub fn kappa_tau_oracle(surface: &RuledSurface, u: f64, tol: f64) -> Result<KappaTau, GeometryError> {
    curve_kappa_tau(surface.striction_curve(), u, tol)
}

/// `kappa = |c' × c''| / |c'|^3` and `tau = <c', c'' × c'''> / |c' × c''|^2`
/// with pseudo-norms.
pub fn curve_kappa_tau(curve: &ExprCurve, u: f64, tol: f64) -> Result<KappaTau, GeometryError> {
    let s = curve.eval(u)?;
    if s.d1.is_zero() || causal_class(s.d1, tol) == CausalClass::Null {
        return Err(GeometryError::NullTangent { u });
    }
    let w = cross(s.d1, s.d2);
    let w_sq = inner(w, w).abs();
    let kappa = w_sq.sqrt() / norm(s.d1).powi(3);
    let tau = if w_sq <= tol * w.euclid_sq().max(1.0) {
        None
    } else {
        Some(inner(s.d1, cross(s.d2, s.d3)) / w_sq)
    };
    Ok(KappaTau { kappa, tau })
}

/// Oracle and closed-form values at one grid point.
#[derive(Debug, Clone, PartialEq)]
pub struct CurvatureRecord {
    pub u: f64,
    pub v: f64,
    pub case: SurfaceCase,
    pub structure: StructureSample,
    pub forms: FundamentalForms,
    pub k_oracle: f64,
    pub h_oracle: f64,
    /// `None` when the striction tangent is null.
    pub kappa_oracle: Option<f64>,
    pub tau_oracle: Option<f64>,
    pub printed: PrintedSet,
}

impl CurvatureRecord {
    /// Assembles a record from a structure sample already computed at `u`.
    pub fn at(
        surface: &RuledSurface,
        structure: &StructureSample,
        kappa_tau: Option<KappaTau>,
        v: f64,
        tol_null: f64,
        tol_degenerate: f64,
        signs: &SignTable,
    ) -> Result<CurvatureRecord, GeometryError> {
        let u = structure.u;
        let forms = fundamental_forms(surface, u, v, tol_null, tol_degenerate)?;
        let case = case_from_signs(&structure.frame, forms.eps_n < 0.0)
            .ok_or(GeometryError::InconsistentCase { u, v })?;
        let (k_oracle, h_oracle) = gauss_mean_oracle(&forms);
        Ok(CurvatureRecord {
            u,
            v,
            case,
            structure: *structure,
            forms,
            k_oracle,
            h_oracle,
            kappa_oracle: kappa_tau.map(|kt| kt.kappa),
            tau_oracle: kappa_tau.and_then(|kt| kt.tau),
            printed: printed_formulas(case, structure, v, signs),
        })
    }

    pub fn compute(
        surface: &RuledSurface,
        u: f64,
        v: f64,
        step: f64,
        tol_null: f64,
        tol_degenerate: f64,
        signs: &SignTable,
    ) -> Result<CurvatureRecord, GeometryError> {
        let s = structure_sample(surface, u, step, tol_null)?;
        let kt = match kappa_tau_oracle(surface, u, tol_null) {
            Ok(kt) => Some(kt),
            Err(GeometryError::NullTangent { .. }) => None,
            Err(e) => return Err(e),
        };
        Self::at(surface, &s, kt, v, tol_null, tol_degenerate, signs)
    }

    /// Oracle counterpart of a printed formula, if defined.
    pub fn oracle(&self, formula: Formula) -> Option<f64> {
        let f = &self.forms;
        match formula {
            Formula::K => Some(self.k_oracle),
            Formula::H => Some(self.h_oracle),
            Formula::KappaSq => self.kappa_oracle.map(|k| k * k),
            Formula::Tau => self.tau_oracle,
            Formula::E => Some(f.e),
            Formula::F => Some(f.f),
            Formula::G => Some(f.g),
            Formula::L => Some(f.l),
            Formula::M => Some(f.m),
            Formula::N => Some(f.n),
        }
    }

    pub fn abs_dev_k(&self) -> Option<f64> {
        self.printed.get(Formula::K).map(|p| (p.value - self.k_oracle).abs())
    }

    pub fn abs_dev_h(&self) -> Option<f64> {
        self.printed.get(Formula::H).map(|p| (p.value - self.h_oracle).abs())
    }
}
