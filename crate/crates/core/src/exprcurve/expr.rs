use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

/// Parameter bindings for expression evaluation.
pub type Params = BTreeMap<String, f64>;

/// Elementary functions understood by the grammar.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Func {
    Sin,
    Cos,
    Tan,
    Sinh,
    Cosh,
    Tanh,
    Exp,
    Ln,
    Sqrt,
}

impl Func {
    pub const ALL: [Func; 9] = [
        Func::Sin,
        Func::Cos,
        Func::Tan,
        Func::Sinh,
        Func::Cosh,
        Func::Tanh,
        Func::Exp,
        Func::Ln,
        Func::Sqrt,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Func::Sin => "sin",
            Func::Cos => "cos",
            Func::Tan => "tan",
            Func::Sinh => "sinh",
            Func::Cosh => "cosh",
            Func::Tanh => "tanh",
            Func::Exp => "exp",
            Func::Ln => "ln",
            Func::Sqrt => "sqrt",
        }
    }

    pub fn from_name(name: &str) -> Option<Func> {
        Func::ALL.into_iter().find(|f| f.name() == name)
    }

    fn apply(self, x: f64) -> Result<f64, EvalError> {
        let y = match self {
            Func::Sin => x.sin(),
            Func::Cos => x.cos(),
            Func::Tan => x.tan(),
            Func::Sinh => x.sinh(),
            Func::Cosh => x.cosh(),
            Func::Tanh => x.tanh(),
            Func::Exp => x.exp(),
            Func::Ln => {
                if x <= 0.0 {
                    return Err(EvalError::Domain { op: "ln", arg: x });
                }
                x.ln()
            }
            Func::Sqrt => {
                if x < 0.0 {
                    return Err(EvalError::Domain { op: "sqrt", arg: x });
                }
                x.sqrt()
            }
        };
        finite(y)
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EvalError {
    #[error("EvalError: {op} undefined at {arg}")]
    Domain { op: &'static str, arg: f64 },
    #[error("EvalError: division by zero")]
    DivisionByZero,
    #[error("EvalError: parameter '{0}' is not bound")]
    UnboundParameter(String),
    #[error("EvalError: non-finite intermediate value")]
    NonFinite,
}

fn finite(x: f64) -> Result<f64, EvalError> {
    if x.is_finite() {
        Ok(x)
    } else {
        Err(EvalError::NonFinite)
    }
}

/// Expression tree in the single variable `u`.
#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Num(f64),
    Var,
    Param(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, Box<Expr>),
    Call(Func, Box<Expr>),
}

// Constructors fold constants and drop neutral elements. Nothing else is
// simplified.
impl Expr {
    pub fn num(x: f64) -> Expr {
        Expr::Num(x)
    }

    pub fn param(name: &str) -> Expr {
        Expr::Param(name.to_string())
    }

    pub fn neg(a: Expr) -> Expr {
        match a {
            Expr::Num(x) => Expr::Num(-x),
            Expr::Neg(inner) => *inner,
            a => Expr::Neg(Box::new(a)),
        }
    }

    pub fn add(a: Expr, b: Expr) -> Expr {
        match (a, b) {
            (Expr::Num(x), Expr::Num(y)) => Expr::Num(x + y),
            (Expr::Num(z), b) if z == 0.0 => b,
            (a, Expr::Num(z)) if z == 0.0 => a,
            (a, b) => Expr::Add(Box::new(a), Box::new(b)),
        }
    }

    pub fn sub(a: Expr, b: Expr) -> Expr {
        match (a, b) {
            (Expr::Num(x), Expr::Num(y)) => Expr::Num(x - y),
            (a, Expr::Num(z)) if z == 0.0 => a,
            (Expr::Num(z), b) if z == 0.0 => Expr::neg(b),
            (a, b) => Expr::Sub(Box::new(a), Box::new(b)),
        }
    }

    pub fn mul(a: Expr, b: Expr) -> Expr {
        match (a, b) {
            (Expr::Num(x), Expr::Num(y)) => Expr::Num(x * y),
            (Expr::Num(z), _) | (_, Expr::Num(z)) if z == 0.0 => Expr::Num(0.0),
            (Expr::Num(one), b) if one == 1.0 => b,
            (a, Expr::Num(one)) if one == 1.0 => a,
            (Expr::Num(m), b) if m == -1.0 => Expr::neg(b),
            (a, Expr::Num(m)) if m == -1.0 => Expr::neg(a),
            (a, b) => Expr::Mul(Box::new(a), Box::new(b)),
        }
    }

    pub fn div(a: Expr, b: Expr) -> Expr {
        match (a, b) {
            (Expr::Num(x), Expr::Num(y)) if y != 0.0 && (x / y).is_finite() => Expr::Num(x / y),
            (Expr::Num(z), b) if z == 0.0 => {
                // 0 / b folds to 0 only when b is not literally zero.
                if b == Expr::Num(0.0) {
                    Expr::Div(Box::new(Expr::Num(0.0)), Box::new(b))
                } else {
                    Expr::Num(0.0)
                }
            }
            (a, Expr::Num(one)) if one == 1.0 => a,
            (a, b) => Expr::Div(Box::new(a), Box::new(b)),
        }
    }

    pub fn pow(a: Expr, b: Expr) -> Expr {
        match (a, b) {
            (Expr::Num(x), Expr::Num(y)) if x.powf(y).is_finite() && (x > 0.0 || y.fract() == 0.0) => {
                Expr::Num(x.powf(y))
            }
            (_, Expr::Num(z)) if z == 0.0 => Expr::Num(1.0),
            (a, Expr::Num(one)) if one == 1.0 => a,
            (a, b) => Expr::Pow(Box::new(a), Box::new(b)),
        }
    }

    pub fn call(f: Func, a: Expr) -> Expr {
        match a {
            Expr::Num(x) => match f.apply(x) {
                Ok(y) => Expr::Num(y),
                Err(_) => Expr::Call(f, Box::new(Expr::Num(x))),
            },
            a => Expr::Call(f, Box::new(a)),
        }
    }

    /// True when the tree references the variable `u`.
    pub fn depends_on_u(&self) -> bool {
        match self {
            Expr::Num(_) | Expr::Param(_) => false,
            Expr::Var => true,
            Expr::Neg(a) | Expr::Call(_, a) => a.depends_on_u(),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) | Expr::Pow(a, b) => {
                a.depends_on_u() || b.depends_on_u()
            }
        }
    }

    /// Names of all parameters referenced in the tree.
    pub fn params(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.collect_params(&mut out);
        out.sort();
        out.dedup();
        out
    }

    fn collect_params(&self, out: &mut Vec<String>) {
        match self {
            Expr::Num(_) | Expr::Var => {}
            Expr::Param(p) => out.push(p.clone()),
            Expr::Neg(a) | Expr::Call(_, a) => a.collect_params(out),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) | Expr::Pow(a, b) => {
                a.collect_params(out);
                b.collect_params(out);
            }
        }
    }

    pub fn node_count(&self) -> usize {
        match self {
            Expr::Num(_) | Expr::Var | Expr::Param(_) => 1,
            Expr::Neg(a) | Expr::Call(_, a) => 1 + a.node_count(),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) | Expr::Pow(a, b) => {
                1 + a.node_count() + b.node_count()
            }
        }
    }

    pub fn eval(&self, u: f64, params: &Params) -> Result<f64, EvalError> {
        match self {
            Expr::Num(x) => Ok(*x),
            Expr::Var => Ok(u),
            Expr::Param(p) => params
                .get(p)
                .copied()
                .ok_or_else(|| EvalError::UnboundParameter(p.clone())),
            Expr::Neg(a) => Ok(-a.eval(u, params)?),
            Expr::Add(a, b) => finite(a.eval(u, params)? + b.eval(u, params)?),
            Expr::Sub(a, b) => finite(a.eval(u, params)? - b.eval(u, params)?),
            Expr::Mul(a, b) => finite(a.eval(u, params)? * b.eval(u, params)?),
            Expr::Div(a, b) => {
                let (n, d) = (a.eval(u, params)?, b.eval(u, params)?);
                if d == 0.0 {
                    return Err(EvalError::DivisionByZero);
                }
                finite(n / d)
            }
            Expr::Pow(a, b) => {
                let (x, y) = (a.eval(u, params)?, b.eval(u, params)?);
                if x == 0.0 && y < 0.0 {
                    return Err(EvalError::DivisionByZero);
                }
                if x < 0.0 && y.fract() != 0.0 {
                    return Err(EvalError::Domain { op: "^", arg: x });
                }
                finite(x.powf(y))
            }
            Expr::Call(f, a) => f.apply(a.eval(u, params)?),
        }
    }
}

fn write_num(f: &mut fmt::Formatter<'_>, x: f64) -> fmt::Result {
    if x < 0.0 || (x == 0.0 && x.is_sign_negative()) {
        write!(f, "(-{:?})", -x)
    } else {
        write!(f, "{x:?}")
    }
}

/// Fully parenthesised rendering that parses back to an equivalent tree.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Num(x) => write_num(f, *x),
            Expr::Var => f.write_str("u"),
            Expr::Param(p) => f.write_str(p),
            Expr::Neg(a) => write!(f, "(-{a})"),
            Expr::Add(a, b) => write!(f, "({a} + {b})"),
            Expr::Sub(a, b) => write!(f, "({a} - {b})"),
            Expr::Mul(a, b) => write!(f, "({a} * {b})"),
            Expr::Div(a, b) => write!(f, "({a} / {b})"),
            Expr::Pow(a, b) => write!(f, "({a} ^ {b})"),
            Expr::Call(func, a) => write!(f, "{}({a})", func.name()),
        }
    }
}
