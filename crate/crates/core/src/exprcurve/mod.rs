//! Symbolic curves `u -> (e1(u), e2(u), e3(u))` in Minkowski 3-space.
//!
//! Components are parsed once, differentiated symbolically up to order three
//! and the derivative trees are cached on the curve.

mod diff;
mod expr;
mod parse;

use thiserror::Error;

pub use diff::differentiate;
pub use expr::{EvalError, Expr, Func, Params};
pub use parse::{parse, ParseError};

use crate::lorentz::{Lorentz3, Vec3L};

/// Highest derivative order cached on an [`ExprCurve`].
pub const MAX_ORDER: usize = 3;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CurveError {
    #[error("component {component}: {source}")]
    Parse {
        component: usize,
        #[source]
        source: ParseError,
    },
    #[error("UnboundParameter: '{0}' is referenced but has no value")]
    UnboundParameter(String),
}

/// A parametrised curve with cached symbolic derivatives.
#[derive(Debug, Clone, PartialEq)]
pub struct ExprCurve {
    params: Params,
    // derivs[k][i] = d^k e_i / du^k
    derivs: [[Expr; 3]; MAX_ORDER + 1],
}

/// Position and derivatives of a curve at one parameter value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurveEval {
    pub u: f64,
    pub p: Vec3L,
    pub d1: Vec3L,
    pub d2: Vec3L,
    pub d3: Vec3L,
}

impl CurveEval {
    pub fn order(&self, k: usize) -> Vec3L {
        match k {
            0 => self.p,
            1 => self.d1,
            2 => self.d2,
            3 => self.d3,
            _ => panic!("derivative order {k} is not cached"),
        }
    }
}

impl ExprCurve {
    pub fn new(components: [Expr; 3], params: Params) -> Result<Self, CurveError> {
        for c in &components {
            if let Some(missing) = c.params().into_iter().find(|p| !params.contains_key(p)) {
                return Err(CurveError::UnboundParameter(missing));
            }
        }
        let d1 = components.clone().map(|e| differentiate(&e));
        let d2 = d1.clone().map(|e| differentiate(&e));
        let d3 = d2.clone().map(|e| differentiate(&e));
        Ok(Self {
            params,
            derivs: [components, d1, d2, d3],
        })
    }

    /// Parses three component strings.
    pub fn parse<S: AsRef<str>>(components: &[S; 3], params: Params) -> Result<Self, CurveError> {
        let mut parsed = Vec::with_capacity(3);
        for (i, text) in components.iter().enumerate() {
            parsed.push(parse(text.as_ref()).map_err(|source| CurveError::Parse { component: i, source })?);
        }
        let parsed: [Expr; 3] = parsed.try_into().expect("three components");
        Self::new(parsed, params)
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    pub fn components(&self) -> &[Expr; 3] {
        &self.derivs[0]
    }

    /// Cached symbolic derivative trees of order `k`.
    pub fn derivative(&self, k: usize) -> &[Expr; 3] {
        &self.derivs[k]
    }

    pub fn eval_order(&self, u: f64, k: usize) -> Result<Vec3L, EvalError> {
        let [a, b, c] = &self.derivs[k];
        Ok(Vec3L::new(
            a.eval(u, &self.params)?,
            b.eval(u, &self.params)?,
            c.eval(u, &self.params)?,
        ))
    }

    pub fn position(&self, u: f64) -> Result<Vec3L, EvalError> {
        self.eval_order(u, 0)
    }

    pub fn eval(&self, u: f64) -> Result<CurveEval, EvalError> {
        Ok(CurveEval {
            u,
            p: self.eval_order(u, 0)?,
            d1: self.eval_order(u, 1)?,
            d2: self.eval_order(u, 2)?,
            d3: self.eval_order(u, 3)?,
        })
    }

    /// The curve `u -> m · c(u)` for a constant linear map `m`.
    pub fn transformed(&self, m: &Lorentz3) -> ExprCurve {
        let c = &self.derivs[0];
        let row = |i: usize| {
            (0..3).fold(Expr::num(0.0), |acc, j| {
                Expr::add(acc, Expr::mul(Expr::num(m.m[i][j]), c[j].clone()))
            })
        };
        ExprCurve::new([row(0), row(1), row(2)], self.params.clone())
            .expect("parameters unchanged")
    }
}

/// Evaluates all three symbolic derivatives of `c` at `u`.
pub fn eval_curve(c: &ExprCurve, u: f64) -> Result<CurveEval, EvalError> {
    c.eval(u)
}
