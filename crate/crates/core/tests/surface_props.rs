mod common;

use mrs_core::curvature::fundamental_forms;
use mrs_core::exprcurve::ExprCurve;
use mrs_core::lorentz::{inner, Lorentz3};
use mrs_core::ruled::{evaluate, structure_sample, RuledSurface};
use proptest::prelude::*;

const TOL: f64 = 1e-9;
const DEG: f64 = 1e-10;

#[test]
fn striction_tangent_is_orthogonal_to_ruling_derivative() {
    for s in common::all() {
        for u in s.domain_u.samples(50) {
            let sp = s.striction_curve().eval_order(u, 1).unwrap();
            let db = s.b.eval_order(u, 1).unwrap();
            assert!(inner(sp, db).abs() < 1e-10, "{} u={u}", s.name);
        }
    }
}

/// Richardson derivatives of cx, cy against derivatives of the symbolic striction line.
#[test]
fn structure_derivatives_match_symbolic() {
    for s in common::all() {
        for u in s.domain_u.samples(21).into_iter().skip(1).take(19) {
            let st = structure_sample(&s, u, 1e-3, TOL).unwrap();
            let se = s.striction_curve().eval(u).unwrap();
            let be = s.b.eval(u).unwrap();
            let f = st.frame;
            // x = b, y = a × x with a = b'; differentiate <sigma', x>/<x,x> and <sigma', y>/<y,y>
            let y_prime = f.a * (-f.eps_y * f.eps_a * f.k_g);
            let d_cx = (inner(se.d2, f.x) + inner(se.d1, be.d1)) / f.eps_x;
            let d_cy = (inner(se.d2, f.y) + inner(se.d1, y_prime)) / f.eps_y;
            assert!((st.d_cx - d_cx).abs() < 1e-6, "{} u={u}: {} vs {d_cx}", s.name, st.d_cx);
            assert!((st.d_cy - d_cy).abs() < 1e-6, "{} u={u}: {} vs {d_cy}", s.name, st.d_cy);
        }
    }
}

/// First fundamental form rebuilt from the structure functions.
#[test]
fn first_form_reconstruction() {
    for s in common::all() {
        for u in s.domain_u.samples(9) {
            let st = structure_sample(&s, u, 1e-4, TOL).unwrap();
            let f = st.frame;
            for v in s.domain_v.samples(7) {
                let ff = match fundamental_forms(&s, u, v, TOL, DEG) {
                    Ok(ff) => ff,
                    Err(_) => continue,
                };
                let e = f.eps_x * st.cx * st.cx + f.eps_y * st.cy * st.cy + f.eps_a * v * v;
                assert!((ff.e - e).abs() < 1e-9, "{} ({u},{v})", s.name);
                assert!((ff.f - f.eps_x * st.cx).abs() < 1e-9);
                assert!((ff.g - f.eps_x).abs() < 1e-12);
            }
        }
    }
}

#[test]
fn helicoid_family_and_bscroll_are_minimal() {
    for s in [common::helicoid(1.0), common::helicoid(2.5), common::bscroll(), common::hyperbolic_helicoid()] {
        for u in s.domain_u.samples(10) {
            for v in s.domain_v.samples(10) {
                if let Ok(ff) = fundamental_forms(&s, u, v, TOL, DEG) {
                    let (_, h) = mrs_core::curvature::gauss_mean_oracle(&ff);
                    assert!(h.abs() < 1e-9, "{} ({u},{v}) H={h}", s.name);
                }
            }
        }
    }
}

fn kh(s: &RuledSurface, u: f64, v: f64) -> (f64, f64) {
    mrs_core::curvature::gauss_mean_oracle(&fundamental_forms(s, u, v, TOL, DEG).unwrap())
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(1.0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn curvature_is_isometry_invariant(a in -3.0..3.0f64, phi in -1.5..1.5f64, u in 0.1..6.0f64, v in -0.8..0.8f64) {
        let s = common::oblique_helicoid();
        let m = Lorentz3::rotation(a).compose(&Lorentz3::boost(phi));
        let t = s.transformed(&m);
        let ((k0, h0), (k1, h1)) = (kh(&s, u, v), kh(&t, u, v));
        prop_assert!(rel(k1, k0) < 1e-8 && rel(h1, h0) < 1e-8);
    }

    #[test]
    fn curvature_ignores_base_curve_choice(u in 0.1..6.0f64, v in -0.8..0.8f64, c in -2.0..2.0f64) {
        let s = common::oblique_helicoid();
        // alpha + f b with f(u) = c sin(u); both share the striction line, so (u, v) is the same point
        let p = s.alpha.params().clone();
        let f = |i: usize| format!("({}) + c2*sin(u)*({})", s.alpha.components()[i], s.b.components()[i]);
        let mut p2 = p.clone();
        p2.insert("c2".into(), c);
        let alpha2 = ExprCurve::parse(&[f(0), f(1), f(2)], p2).unwrap();
        let s2 = RuledSurface::new("shifted", alpha2, s.b.clone(), s.domain_u, s.domain_v);
        let (k0, h0) = kh(&s, u, v);
        let (k1, h1) = kh(&s2, u, v);
        let (p0, p1) = (evaluate(&s, u, v).unwrap(), evaluate(&s2, u, v).unwrap());
        prop_assert!((p0 - p1).euclid_norm() < 1e-9);
        prop_assert!(rel(k1, k0) < 1e-8 && rel(h1, h0) < 1e-8, "{k0} {k1} {h0} {h1}");
    }
}
