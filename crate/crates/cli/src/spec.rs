//! Surface spec files and grid settings.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use mrs_core::exprcurve::{CurveError, ExprCurve, Params};
use mrs_core::ruled::{RuledSurface, DEFAULT_STEP};
use mrs_core::Interval;

use crate::CliError;

/// On-disk surface description.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SurfaceSpec {
    pub name: String,
    pub alpha: [String; 3],
    pub b: [String; 3],
    #[serde(default)]
    pub params: BTreeMap<String, f64>,
    pub domain_u: [f64; 2],
    pub domain_v: [f64; 2],
}

fn curve_error(which: &str, e: CurveError) -> CliError {
    match e {
        CurveError::Parse { component, source } => CliError::Spec(format!("{which}[{component}]: {source}")),
        other => CliError::Spec(format!("{which}: {other}")),
    }
}

impl SurfaceSpec {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Spec(format!("cannot read {}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Spec(format!("invalid spec JSON: {e}")))
    }

    pub fn to_value(&self) -> Value {
        json!({
            "name": self.name,
            "alpha": self.alpha,
            "b": self.b,
            "params": self.params,
            "domain_u": self.domain_u,
            "domain_v": self.domain_v,
        })
    }

    pub fn surface(&self) -> Result<RuledSurface, CliError> {
        let du = Interval::new(self.domain_u[0], self.domain_u[1]);
        let dv = Interval::new(self.domain_v[0], self.domain_v[1]);
        if !du.is_valid() {
            return Err(CliError::Spec(format!("domain_u {:?} must satisfy lo < hi", self.domain_u)));
        }
        if !dv.is_valid() {
            return Err(CliError::Spec(format!("domain_v {:?} must satisfy lo < hi", self.domain_v)));
        }
        if let Some((k, _)) = self.params.iter().find(|(_, v)| !v.is_finite()) {
            return Err(CliError::Spec(format!("parameter '{k}' is not finite")));
        }
        let params: Params = self.params.clone();
        let alpha = ExprCurve::parse(&self.alpha, params.clone()).map_err(|e| curve_error("alpha", e))?;
        let b = ExprCurve::parse(&self.b, params).map_err(|e| curve_error("b", e))?;
        Ok(RuledSurface::new(self.name.clone(), alpha, b, du, dv))
    }
}

/// Grid resolution, derivative step and tolerances shared by the commands.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridConfig {
    pub nu: usize,
    pub nv: usize,
    pub derivative_step: f64,
    pub tol_null: f64,
    pub tol_degenerate: f64,
}

impl Default for GridConfig {
    fn default() -> Self {
        Self {
            nu: 32,
            nv: 32,
            derivative_step: DEFAULT_STEP,
            tol_null: 1e-9,
            tol_degenerate: 1e-10,
        }
    }
}

impl GridConfig {
    pub fn validate(&self) -> Result<(), CliError> {
        if self.nu < 2 || self.nv < 2 {
            return Err(CliError::Usage(format!(
                "grid needs nu, nv >= 2 (got {} x {})",
                self.nu, self.nv
            )));
        }
        for (name, x) in [
            ("--step", self.derivative_step),
            ("--tol-null", self.tol_null),
            ("--tol-degenerate", self.tol_degenerate),
        ] {
            if !(x > 0.0 && x.is_finite()) {
                return Err(CliError::Usage(format!("{name} must be positive, got {x}")));
            }
        }
        Ok(())
    }
}
