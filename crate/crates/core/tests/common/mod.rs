#![allow(dead_code)]

use mrs_core::exprcurve::{ExprCurve, Params};
use mrs_core::ruled::RuledSurface;
use mrs_core::Interval;

pub fn curve(c: [&str; 3], params: &[(&str, f64)]) -> ExprCurve {
    let p: Params = params.iter().map(|(k, v)| (k.to_string(), *v)).collect();
    ExprCurve::parse(&c, p).unwrap()
}

pub fn surface(
    name: &str,
    alpha: [&str; 3],
    b: [&str; 3],
    params: &[(&str, f64)],
    du: (f64, f64),
    dv: (f64, f64),
) -> RuledSurface {
    RuledSurface::new(
        name,
        curve(alpha, params),
        curve(b, params),
        Interval::new(du.0, du.1),
        Interval::new(dv.0, dv.1),
    )
}

pub fn helicoid(h: f64) -> RuledSurface {
    surface(
        "helicoid",
        ["0", "0", "h*u"],
        ["cos(u)", "sin(u)", "0"],
        &[("h", h)],
        (0.0, std::f64::consts::TAU),
        (-0.9, 0.9),
    )
}

pub fn bscroll() -> RuledSurface {
    surface("bscroll", ["0", "u", "0"], ["sinh(u)", "0", "cosh(u)"], &[], (-1.0, 1.0), (-2.0, 2.0))
}

pub fn oblique_helicoid() -> RuledSurface {
    surface(
        "oblique",
        ["0", "c*u", "h*u"],
        ["cos(u)", "sin(u)", "0"],
        &[("c", 0.5), ("h", 1.0)],
        (0.0, std::f64::consts::TAU),
        (-0.9, 0.9),
    )
}

pub fn desitter_circle() -> RuledSurface {
    surface(
        "desitter",
        ["0", "0", "u"],
        ["r*cos(u/r)", "r*sin(u/r)", "z0"],
        &[("r", std::f64::consts::SQRT_2), ("z0", 1.0)],
        (0.0, 8.0),
        (-1.0, 1.0),
    )
}

pub fn hyperbolic_helicoid() -> RuledSurface {
    surface("hyperbolic", ["0", "h*u", "0"], ["cosh(u)", "0", "sinh(u)"], &[("h", 1.0)], (-1.0, 1.0), (1.1, 3.0))
}

pub fn all() -> Vec<RuledSurface> {
    vec![helicoid(1.0), bscroll(), oblique_helicoid(), desitter_circle(), hyperbolic_helicoid()]
}
