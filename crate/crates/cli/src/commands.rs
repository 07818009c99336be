use std::fmt::Write as _;
use std::path::Path;

use serde_json::{json, Map, Value};

use mrs_core::curvature::{audit, AuditConfig, AuditReport, CurvatureRecord, Formula};
use mrs_core::lorentz::Vec3L;
use mrs_core::ruled::{evaluate, structure_sample, RuledSurface, SignTable, StructureSample};
use mrs_core::GeometryError;

use crate::json::{self, fmt_f64};
use crate::spec::{GridConfig, SurfaceSpec};
use crate::CliError;

/// Director samples used before any command touches the surface.
pub const DIRECTOR_SAMPLES: usize = 256;

fn vec_json(v: Vec3L) -> Value {
    json!(v.to_array())
}

fn opt(x: Option<f64>) -> Value {
    x.map_or(Value::Null, |x| json!(x))
}

fn load(spec_path: &Path, grid: &GridConfig) -> Result<(SurfaceSpec, RuledSurface), CliError> {
    grid.validate()?;
    let spec = SurfaceSpec::load(spec_path)?;
    let surface = spec.surface()?;
    surface.check_director(DIRECTOR_SAMPLES, grid.tol_null)?;
    Ok((spec, surface))
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    std::fs::write(path, contents).map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display())))
}

/// Single-point evaluation as a JSON document.
pub fn eval(spec_path: &Path, u: f64, v: f64, echo_spec: bool, grid: &GridConfig) -> Result<String, CliError> {
    let (spec, surface) = load(spec_path, grid)?;
    let signs = SignTable::default();
    let rec = CurvatureRecord::compute(
        &surface,
        u,
        v,
        grid.derivative_step,
        grid.tol_null,
        grid.tol_degenerate,
        &signs,
    )?;
    let s = &rec.structure;
    let fr = &s.frame;
    let fo = &rec.forms;
    let printed = |f: Formula| opt(rec.printed.get(f).map(|p| p.value));

    let mut out = Map::new();
    out.insert("u".into(), json!(u));
    out.insert("v".into(), json!(v));
    out.insert("position".into(), vec_json(evaluate(&surface, u, v)?));
    out.insert(
        "frame".into(),
        json!({
            "x": vec_json(fr.x), "a": vec_json(fr.a), "y": vec_json(fr.y),
            "eps_x": fr.eps_x as i64, "eps_a": fr.eps_a as i64, "eps_y": fr.eps_y as i64,
            "cx_aprime": fr.cx_aprime, "cy_aprime": fr.cy_aprime, "k_g": fr.k_g,
        }),
    );
    out.insert(
        "structure".into(),
        json!({
            "cx": s.cx, "cy": s.cy, "mu": s.mu, "k_g": s.k_g,
            "lambda_printed": s.lambda_printed(rec.case, &signs),
            "delta": s.delta, "theta": s.theta,
            "d_cx": s.d_cx, "d2_cx": s.d2_cx, "d_cy": s.d_cy, "d2_cy": s.d2_cy, "d_kg": s.d_kg,
            "sigma_prime": vec_json(s.sigma_prime),
        }),
    );
    out.insert("case".into(), json!(rec.case.as_str()));
    out.insert(
        "forms".into(),
        json!({
            "E": fo.e, "F": fo.f, "G": fo.g, "L": fo.l, "M": fo.m, "N": fo.n,
            "det1": fo.det1, "eps_n": fo.eps_n as i64, "n_unit": vec_json(fo.n_unit),
        }),
    );
    out.insert("K_oracle".into(), json!(rec.k_oracle));
    out.insert("H_oracle".into(), json!(rec.h_oracle));
    out.insert("kappa_oracle".into(), opt(rec.kappa_oracle));
    out.insert("tau_oracle".into(), opt(rec.tau_oracle));
    out.insert("K_printed".into(), printed(Formula::K));
    out.insert("H_printed".into(), printed(Formula::H));
    out.insert("kappa_sq_printed".into(), printed(Formula::KappaSq));
    out.insert("tau_printed".into(), printed(Formula::Tau));
    if echo_spec {
        out.insert("spec".into(), spec.to_value());
    }
    Ok(json::to_string(&Value::Object(out)))
}

pub fn report_json(report: &AuditReport) -> String {
    let formulas: Vec<Value> = report
        .formulas
        .iter()
        .map(|f| {
            json!({
                "name": f.formula.name(),
                "case": f.case.as_str(),
                "max_abs_dev": f.max_abs_dev,
                "mean_abs_dev": f.mean_abs_dev,
                "max_rel_dev": f.max_rel_dev,
                "verdict": f.verdict().as_str(),
            })
        })
        .collect();
    json::to_string(&json!({
        "surface": report.surface,
        "grid": {"nu": report.nu, "nv": report.nv, "skipped": report.skipped},
        "formulas": formulas,
        "notes": report.notes,
    }))
}

pub fn run_audit(spec_path: &Path, grid: &GridConfig) -> Result<AuditReport, CliError> {
    let (_, surface) = load(spec_path, grid)?;
    let cfg = AuditConfig {
        nu: grid.nu,
        nv: grid.nv,
        step: grid.derivative_step,
        tol_null: grid.tol_null,
        tol_degenerate: grid.tol_degenerate,
        signs: SignTable::default(),
    };
    Ok(audit(&surface, &cfg)?)
}

pub fn audit_to_file(spec_path: &Path, grid: &GridConfig, out: &Path) -> Result<AuditReport, CliError> {
    let report = run_audit(spec_path, grid)?;
    write_file(out, &report_json(&report))?;
    Ok(report)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    Obj,
    Csv,
}

impl std::str::FromStr for ExportFormat {
    type Err = CliError;
    fn from_str(s: &str) -> Result<Self, CliError> {
        match s {
            "obj" => Ok(ExportFormat::Obj),
            "csv" => Ok(ExportFormat::Csv),
            other => Err(CliError::Usage(format!("unknown export format '{other}' (expected obj or csv)"))),
        }
    }
}

pub const CSV_HEADER: &str = "u,v,x1,x2,x3,case,K_oracle,H_oracle,K_printed,H_printed,E,F,G,L,M,N";

pub fn export(spec_path: &Path, format: ExportFormat, grid: &GridConfig, out: &Path) -> Result<(), CliError> {
    let (_, surface) = load(spec_path, grid)?;
    let text = match format {
        ExportFormat::Obj => obj(&surface, grid)?,
        ExportFormat::Csv => csv(&surface, grid)?,
    };
    write_file(out, &text)
}

/// Vertices row-major over `(u, v)`; each grid quad becomes two triangles.
pub fn obj(surface: &RuledSurface, grid: &GridConfig) -> Result<String, CliError> {
    let mut s = String::new();
    let _ = writeln!(s, "# {}", surface.name);
    for u in surface.domain_u.samples(grid.nu) {
        for v in surface.domain_v.samples(grid.nv) {
            let p = evaluate(surface, u, v)?;
            let _ = writeln!(s, "v {} {} {}", fmt_f64(p.c1), fmt_f64(p.c2), fmt_f64(p.c3));
        }
    }
    let idx = |i: usize, j: usize| i * grid.nv + j + 1;
    for i in 0..grid.nu - 1 {
        for j in 0..grid.nv - 1 {
            let (a, b, c, d) = (idx(i, j), idx(i + 1, j), idx(i + 1, j + 1), idx(i, j + 1));
            let _ = writeln!(s, "f {a} {b} {c}");
            let _ = writeln!(s, "f {a} {c} {d}");
        }
    }
    Ok(s)
}

/// Curvature field; degenerate points keep their position and leave the
/// remaining cells empty.
pub fn csv(surface: &RuledSurface, grid: &GridConfig) -> Result<String, CliError> {
    let signs = SignTable::default();
    let mut s = String::new();
    s.push_str(CSV_HEADER);
    s.push('\n');
    let cell = |x: Option<f64>| x.map(fmt_f64).unwrap_or_default();
    for u in surface.domain_u.samples(grid.nu) {
        let st: StructureSample = structure_sample(surface, u, grid.derivative_step, grid.tol_null)?;
        for v in surface.domain_v.samples(grid.nv) {
            let p = evaluate(surface, u, v)?;
            let _ = write!(s, "{},{},{},{},{}", fmt_f64(u), fmt_f64(v), fmt_f64(p.c1), fmt_f64(p.c2), fmt_f64(p.c3));
            match CurvatureRecord::at(surface, &st, None, v, grid.tol_null, grid.tol_degenerate, &signs) {
                Ok(r) => {
                    let f = &r.forms;
                    let printed = |fm: Formula| cell(r.printed.get(fm).map(|p| p.value));
                    let _ = writeln!(
                        s,
                        ",{},{},{},{},{},{},{},{},{},{},{}",
                        r.case.as_str(),
                        fmt_f64(r.k_oracle),
                        fmt_f64(r.h_oracle),
                        printed(Formula::K),
                        printed(Formula::H),
                        fmt_f64(f.e),
                        fmt_f64(f.f),
                        fmt_f64(f.g),
                        fmt_f64(f.l),
                        fmt_f64(f.m),
                        fmt_f64(f.n),
                    );
                }
                Err(GeometryError::DegenerateMetric { .. }) | Err(GeometryError::NullNormal { .. }) => {
                    s.push_str(",,,,,,,,,,,\n");
                }
                Err(e) => return Err(e.into()),
            }
        }
    }
    Ok(s)
}

pub const FRAMES_HEADER: &str = "u,x1,x2,x3,a1,a2,a3,y1,y2,y3,eps_x,eps_a,eps_y,k_g,delta,theta,cx,cy";

/// Frame table at `n` evenly spaced parameters.
pub fn frames(spec_path: &Path, n: usize, grid: &GridConfig) -> Result<String, CliError> {
    if n == 0 {
        return Err(CliError::Usage("--n must be at least 1".into()));
    }
    let (_, surface) = load(spec_path, grid)?;
    let mut s = String::new();
    s.push_str(FRAMES_HEADER);
    s.push('\n');
    for u in surface.domain_u.samples(n) {
        let st = structure_sample(&surface, u, grid.derivative_step, grid.tol_null)?;
        let f = &st.frame;
        let mut row = vec![fmt_f64(u)];
        for vec in [f.x, f.a, f.y] {
            row.extend(vec.to_array().map(fmt_f64));
        }
        row.extend([f.eps_x, f.eps_a, f.eps_y].map(|e| (e as i64).to_string()));
        row.extend([st.k_g, st.delta, st.theta, st.cx, st.cy].map(fmt_f64));
        s.push_str(&row.join(","));
        s.push('\n');
    }
    Ok(s)
}
