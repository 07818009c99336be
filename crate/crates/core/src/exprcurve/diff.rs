use super::expr::{Expr, Func};

/// Symbolic derivative with respect to `u`.
///
/// Powers with an exponent independent of `u` use the power rule, otherwise
/// `f^g` is differentiated as `exp(g ln f)`.
pub fn differentiate(e: &Expr) -> Expr {
    match e {
        Expr::Num(_) | Expr::Param(_) => Expr::num(0.0),
        Expr::Var => Expr::num(1.0),
        Expr::Neg(a) => Expr::neg(differentiate(a)),
        Expr::Add(a, b) => Expr::add(differentiate(a), differentiate(b)),
        Expr::Sub(a, b) => Expr::sub(differentiate(a), differentiate(b)),
        Expr::Mul(a, b) => Expr::add(
            Expr::mul(differentiate(a), (**b).clone()),
            Expr::mul((**a).clone(), differentiate(b)),
        ),
        Expr::Div(a, b) => {
            // (a'b - ab') / b^2
            let num = Expr::sub(
                Expr::mul(differentiate(a), (**b).clone()),
                Expr::mul((**a).clone(), differentiate(b)),
            );
            Expr::div(num, Expr::pow((**b).clone(), Expr::num(2.0)))
        }
        Expr::Pow(base, exponent) => {
            let db = differentiate(base);
            if !exponent.depends_on_u() {
                let reduced = Expr::sub((**exponent).clone(), Expr::num(1.0));
                Expr::mul(
                    Expr::mul((**exponent).clone(), Expr::pow((**base).clone(), reduced)),
                    db,
                )
            } else {
                // f^g (g' ln f + g f'/f)
                let de = differentiate(exponent);
                let inner = Expr::add(
                    Expr::mul(de, Expr::call(Func::Ln, (**base).clone())),
                    Expr::div(Expr::mul((**exponent).clone(), db), (**base).clone()),
                );
                Expr::mul(e.clone(), inner)
            }
        }
        Expr::Call(f, a) => {
            let da = differentiate(a);
            let a = (**a).clone();
            let outer = match f {
                Func::Sin => Expr::call(Func::Cos, a),
                Func::Cos => Expr::neg(Expr::call(Func::Sin, a)),
                Func::Tan => Expr::div(
                    Expr::num(1.0),
                    Expr::pow(Expr::call(Func::Cos, a), Expr::num(2.0)),
                ),
                Func::Sinh => Expr::call(Func::Cosh, a),
                Func::Cosh => Expr::call(Func::Sinh, a),
                Func::Tanh => Expr::sub(
                    Expr::num(1.0),
                    Expr::pow(Expr::call(Func::Tanh, a), Expr::num(2.0)),
                ),
                Func::Exp => Expr::call(Func::Exp, a),
                Func::Ln => return Expr::div(da, a),
                Func::Sqrt => {
                    return Expr::div(da, Expr::mul(Expr::num(2.0), Expr::call(Func::Sqrt, a)));
                }
            };
            Expr::mul(outer, da)
        }
    }
}
