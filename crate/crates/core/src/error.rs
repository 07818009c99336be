use thiserror::Error;

use crate::exprcurve::EvalError;

/// Geometric failures. Every message starts with the variant name so callers
/// can match on it in diagnostics.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeometryError {
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error("NotUnitDirector: max ||<b,b>| - 1| = {max_dev:e}")]
    NotUnitDirector { max_dev: f64 },
    #[error("NotArcLength: max ||<b',b'>| - 1| = {max_dev:e}")]
    NotArcLength { max_dev: f64 },
    #[error("CausalClassChange: causal class of {what} changes at u = {u}")]
    CausalClassChange { u: f64, what: &'static str },
    #[error("NullDirectorDerivative: b' is null at u = {u}")]
    NullDirectorDerivative { u: f64 },
    #[error("NullFrameVector: frame vector {which} is null at u = {u}")]
    NullFrameVector { u: f64, which: &'static str },
    #[error("FrameResidual: b'' decomposition residual {residual:e} at u = {u}")]
    FrameResidual { u: f64, residual: f64 },
    #[error("NullRulingDerivative: <b',b'> vanishes at u = {u}")]
    NullRulingDerivative { u: f64 },
    #[error("StrictionResidual: striction tangent residual {residual:e} at u = {u}")]
    StrictionResidual { u: f64, residual: f64 },
    #[error("DegenerateMetric: EG - F^2 = {det:e} at (u, v) = ({u}, {v})")]
    DegenerateMetric { u: f64, v: f64, det: f64 },
    #[error("NullNormal: surface normal is null at (u, v) = ({u}, {v})")]
    NullNormal { u: f64, v: f64 },
    #[error("InconsistentCase: spacelike surface with a timelike ruling at (u, v) = ({u}, {v})")]
    InconsistentCase { u: f64, v: f64 },
    #[error("NullTangent: striction tangent is null at u = {u}")]
    NullTangent { u: f64 },
    #[error("PrintedDenominatorZero: denominator of printed {formula} vanishes")]
    PrintedDenominatorZero { formula: &'static str },
    #[error("EmptyGrid: every grid point is degenerate")]
    EmptyGrid,
    #[error("InvalidArgument: {0}")]
    InvalidArgument(String),
}

impl GeometryError {
    /// Variant name, e.g. `"DegenerateMetric"`.
    pub fn code(&self) -> &'static str {
        match self {
            GeometryError::Eval(_) => "EvalError",
            GeometryError::NotUnitDirector { .. } => "NotUnitDirector",
            GeometryError::NotArcLength { .. } => "NotArcLength",
            GeometryError::CausalClassChange { .. } => "CausalClassChange",
            GeometryError::NullDirectorDerivative { .. } => "NullDirectorDerivative",
            GeometryError::NullFrameVector { .. } => "NullFrameVector",
            GeometryError::FrameResidual { .. } => "FrameResidual",
            GeometryError::NullRulingDerivative { .. } => "NullRulingDerivative",
            GeometryError::StrictionResidual { .. } => "StrictionResidual",
            GeometryError::DegenerateMetric { .. } => "DegenerateMetric",
            GeometryError::NullNormal { .. } => "NullNormal",
            GeometryError::InconsistentCase { .. } => "InconsistentCase",
            GeometryError::NullTangent { .. } => "NullTangent",
            GeometryError::PrintedDenominatorZero { .. } => "PrintedDenominatorZero",
            GeometryError::EmptyGrid => "EmptyGrid",
            GeometryError::InvalidArgument(_) => "InvalidArgument",
        }
    }
}
