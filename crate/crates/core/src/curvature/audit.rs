//! Grid comparison of the closed forms against the fundamental-forms oracle.
//!
//! For each `(formula, case)` pair the audit tracks three deviations: printed
//! against oracle, printed against the negated oracle, and the
//! squared-denominator variant of the printed value against the oracle.
//! Relative deviations are `|p - o| / max(1, |o|)`, so values near zero are
//! compared absolutely.

use std::collections::BTreeMap;

use crate::error::GeometryError;
use crate::lorentz::inner;
use crate::ruled::{structure_sample, RuledSurface, SignTable, StructureSample, SurfaceCase, DEFAULT_STEP};

use super::printed::{printed, Formula, PrintedValue, StructureInputs};
use super::{kappa_tau_oracle, CurvatureRecord, KappaTau};

/// Largest relative deviation still accepted as a match.
pub const VERDICT_TOL: f64 = 1e-6;

const DIRECTOR_SAMPLES: usize = 256;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Verdict {
    Matches,
    MatchesUpToSign,
    MatchesWithSquaredDenominator,
    Mismatch,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Matches => "Matches",
            Verdict::MatchesUpToSign => "MatchesUpToSign",
            Verdict::MatchesWithSquaredDenominator => "MatchesWithSquaredDenominator",
            Verdict::Mismatch => "Mismatch",
        }
    }

    /// First verdict, in declaration order, whose deviation is within
    /// [`VERDICT_TOL`].
    pub fn from_deviations(direct: f64, sign: f64, squared: f64) -> Verdict {
        [
            (direct, Verdict::Matches),
            (sign, Verdict::MatchesUpToSign),
            (squared, Verdict::MatchesWithSquaredDenominator),
        ]
        .into_iter()
        .find(|(d, _)| *d <= VERDICT_TOL)
        .map_or(Verdict::Mismatch, |(_, v)| v)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AuditConfig {
    pub nu: usize,
    pub nv: usize,
    pub step: f64,
    pub tol_null: f64,
    pub tol_degenerate: f64,
    pub signs: SignTable,
}

impl Default for AuditConfig {
    fn default() -> Self {
        Self {
            nu: 32,
            nv: 32,
            step: DEFAULT_STEP,
            tol_null: 1e-9,
            tol_degenerate: 1e-10,
            signs: SignTable::default(),
        }
    }
}

/// Deviation statistics for one closed form within one surface case.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FormulaAudit {
    pub formula: Formula,
    pub case: SurfaceCase,
    pub samples: usize,
    pub max_abs_dev: f64,
    pub mean_abs_dev: f64,
    pub max_rel_dev: f64,
    pub max_rel_dev_sign: f64,
    pub max_rel_dev_squared: f64,
}

impl FormulaAudit {
    pub fn verdict(&self) -> Verdict {
        Verdict::from_deviations(self.max_rel_dev, self.max_rel_dev_sign, self.max_rel_dev_squared)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct AuditReport {
    pub surface: String,
    pub nu: usize,
    pub nv: usize,
    pub skipped: usize,
    pub case_counts: BTreeMap<SurfaceCase, usize>,
    pub formulas: Vec<FormulaAudit>,
    pub notes: Vec<String>,
}

impl AuditReport {
    pub fn find(&self, formula: Formula, case: SurfaceCase) -> Option<&FormulaAudit> {
        self.formulas.iter().find(|f| f.formula == formula && f.case == case)
    }
}

fn rel(dev: f64, oracle: f64) -> f64 {
    dev / oracle.abs().max(1.0)
}

#[derive(Default, Clone, Copy)]
struct Accum {
    n: usize,
    max_abs: f64,
    sum_abs: f64,
    max_rel: f64,
    max_rel_sign: f64,
    max_rel_sq: f64,
    printed_undefined: usize,
    oracle_undefined: usize,
}

impl Accum {
    fn push(&mut self, printed: Option<PrintedValue>, oracle: Option<f64>) {
        match (printed, oracle) {
            (Some(p), Some(o)) => {
                let d = (p.value - o).abs();
                self.n += 1;
                self.max_abs = self.max_abs.max(d);
                self.sum_abs += d;
                self.max_rel = self.max_rel.max(rel(d, o));
                self.max_rel_sign = self.max_rel_sign.max(rel((p.value + o).abs(), o));
                self.max_rel_sq = self.max_rel_sq.max(rel((p.squared_denominator() - o).abs(), o));
            }
            (None, Some(_)) => self.printed_undefined += 1,
            (Some(_), None) => self.oracle_undefined += 1,
            (None, None) => {
                self.printed_undefined += 1;
                self.oracle_undefined += 1;
            }
        }
    }

    fn verdict(&self) -> Verdict {
        Verdict::from_deviations(self.max_rel, self.max_rel_sign, self.max_rel_sq)
    }
}

fn fmt_e(x: f64) -> String {
    format!("{x:.3e}")
}

fn sign_str(s: f64) -> char {
    if s < 0.0 {
        '-'
    } else {
        '+'
    }
}

/// Runs the audit on an `nu × nv` grid over the surface's domain.
pub fn audit(surface: &RuledSurface, cfg: &AuditConfig) -> Result<AuditReport, GeometryError> {
    if cfg.nu < 2 || cfg.nv < 2 {
        return Err(GeometryError::InvalidArgument(format!(
            "grid must be at least 2x2, got {}x{}",
            cfg.nu, cfg.nv
        )));
    }
    surface.check_director(DIRECTOR_SAMPLES, cfg.tol_null)?;

    let mut records: Vec<CurvatureRecord> = Vec::new();
    let mut skipped = 0usize;
    let mut null_tangent_rows = 0usize;
    let mut structures: Vec<StructureSample> = Vec::new();

    for u in surface.domain_u.samples(cfg.nu) {
        let s = structure_sample(surface, u, cfg.step, cfg.tol_null)?;
        let kt: Option<KappaTau> = match kappa_tau_oracle(surface, u, cfg.tol_null) {
            Ok(kt) => Some(kt),
            Err(GeometryError::NullTangent { .. }) => {
                null_tangent_rows += 1;
                None
            }
            Err(e) => return Err(e),
        };
        structures.push(s);
        for v in surface.domain_v.samples(cfg.nv) {
            match CurvatureRecord::at(surface, &s, kt, v, cfg.tol_null, cfg.tol_degenerate, &cfg.signs) {
                Ok(r) => records.push(r),
                Err(GeometryError::DegenerateMetric { .. }) | Err(GeometryError::NullNormal { .. }) => {
                    skipped += 1
                }
                Err(e) => return Err(e),
            }
        }
    }
    if records.is_empty() {
        return Err(GeometryError::EmptyGrid);
    }
    records.sort_by(|a, b| a.u.total_cmp(&b.u).then(a.v.total_cmp(&b.v)));

    let mut case_counts: BTreeMap<SurfaceCase, usize> = BTreeMap::new();
    let mut acc: BTreeMap<(SurfaceCase, Formula), Accum> = BTreeMap::new();
    for r in &records {
        *case_counts.entry(r.case).or_default() += 1;
        for f in Formula::ALL {
            acc.entry((r.case, f)).or_default().push(r.printed.get(f), r.oracle(f));
        }
    }

    let mut notes = vec![
        format!(
            "grid {}x{}: {} evaluated, {} skipped on the degenerate locus",
            cfg.nu,
            cfg.nv,
            records.len(),
            skipped
        ),
        format!(
            "samples per case: {}",
            case_counts
                .iter()
                .map(|(c, n)| format!("{c}={n}"))
                .collect::<Vec<_>>()
                .join(", ")
        ),
        "vector product uses <x × y, z> = det(x, y, z); the published component order \
         (x2y3 - x3y2, x1y3 - x3y1, x2y1 - x1y2) is not orthogonal to its factors"
            .to_string(),
        format!(
            "sign table: lambda = s*cx with s = [{}], printed k_g = s*k_g with s = [{}] (cases in order {})",
            cfg.signs.lambda.map(sign_str).iter().collect::<String>(),
            cfg.signs.kg.map(sign_str).iter().collect::<String>(),
            SurfaceCase::ALL.map(|c| c.as_str()).join(", ")
        ),
    ];
    if null_tangent_rows > 0 {
        notes.push(format!(
            "striction tangent null on {null_tangent_rows} u-rows; kappa and tau undefined there"
        ));
    }
    notes.extend(frame_identity_notes(&structures));

    let mut formulas = Vec::new();
    for ((case, formula), a) in &acc {
        if a.printed_undefined > 0 || a.oracle_undefined > 0 {
            notes.push(format!(
                "{} [{case}]: printed undefined at {} points, oracle undefined at {} points",
                formula.name(),
                a.printed_undefined,
                a.oracle_undefined
            ));
        }
        if a.n == 0 {
            notes.push(format!(
                "{} [{case}]: no point where both printed and oracle values are defined",
                formula.name()
            ));
            continue;
        }
        let fa = FormulaAudit {
            formula: *formula,
            case: *case,
            samples: a.n,
            max_abs_dev: a.max_abs,
            mean_abs_dev: a.sum_abs / a.n as f64,
            max_rel_dev: a.max_rel,
            max_rel_dev_sign: a.max_rel_sign,
            max_rel_dev_squared: a.max_rel_sq,
        };
        if fa.verdict() == Verdict::Mismatch {
            if let Some(note) = alternatives_note(&records, *case, *formula, &cfg.signs) {
                notes.push(note);
            }
        }
        formulas.push(fa);
    }

    Ok(AuditReport {
        surface: surface.name.clone(),
        nu: cfg.nu,
        nv: cfg.nv,
        skipped,
        case_counts,
        formulas,
        notes,
    })
}

/// Pitch and angle-density identities over the sampled rows.
fn frame_identity_notes(structures: &[StructureSample]) -> Vec<String> {
    let mut pitch_dev: f64 = 0.0;
    let mut theta_dev: f64 = 0.0;
    let mut theta_signs: Vec<f64> = Vec::new();
    for s in structures {
        let f = &s.frame;
        pitch_dev = pitch_dev.max((s.delta + f.eps_x * s.cx).abs());
        theta_dev = theta_dev.max((s.theta - f.eps_y * s.k_g).abs());
        if s.k_g.abs() > 1e-9 {
            theta_signs.push((s.theta / s.k_g).signum());
        }
    }
    theta_signs.dedup();
    let ratio = match theta_signs.as_slice() {
        [] => "k_g vanishes on every row".to_string(),
        [s] => format!("theta = {}k_g on every row with k_g != 0", sign_str(*s)),
        _ => "theta/k_g changes sign across rows".to_string(),
    };
    let spacelike_ruling = structures.iter().any(|s| inner(s.frame.x, s.frame.x) > 0.0);
    vec![
        format!("pitch identity delta = -eps_x*cx: max deviation {}", fmt_e(pitch_dev)),
        format!(
            "angle density theta = eps_y*k_g: max deviation {}; {ratio}{}",
            fmt_e(theta_dev),
            if spacelike_ruling { "" } else { " (timelike ruling)" }
        ),
    ]
}

/// Searches other case expressions and sign conventions for a `formula` that
/// mismatches as published.
fn alternatives_note(
    records: &[CurvatureRecord],
    case: SurfaceCase,
    formula: Formula,
    signs: &SignTable,
) -> Option<String> {
    let mut found: Vec<String> = Vec::new();
    for alt_case in SurfaceCase::ALL {
        let mut hits: Vec<String> = Vec::new();
        let mut verdicts: Vec<Verdict> = Vec::new();
        for ls in [1.0, -1.0] {
            for ks in [1.0, -1.0] {
                if alt_case == case && ls == signs.lambda_sign(case) && ks == signs.kg_sign(case) {
                    continue;
                }
                let table = SignTable::uniform(ls, ks);
                let mut a = Accum::default();
                for r in records.iter().filter(|r| r.case == case) {
                    let inputs = StructureInputs::new(&r.structure, alt_case, &table);
                    a.push(printed(alt_case, formula, &inputs, r.v).ok(), r.oracle(formula));
                }
                if a.n > 0 && a.verdict() != Verdict::Mismatch {
                    hits.push(format!("lambda={}cx k_g={}k_g", sign_str(ls), sign_str(ks)));
                    verdicts.push(a.verdict());
                }
            }
        }
        if !hits.is_empty() {
            verdicts.sort();
            verdicts.dedup();
            found.push(format!(
                "{} via the {alt_case} expression ({})",
                verdicts.iter().map(|v| v.as_str()).collect::<Vec<_>>().join("/"),
                hits.join(", ")
            ));
        }
    }
    let head = format!("{} [{case}]: Mismatch as published", formula.name());
    Some(if found.is_empty() {
        format!("{head}; no other case expression or sign convention matches")
    } else {
        format!("{head}; {}", found.join("; "))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdict_preference_order() {
        assert_eq!(Verdict::from_deviations(0.0, 0.0, 0.0), Verdict::Matches);
        assert_eq!(Verdict::from_deviations(1.0, 1e-9, 0.0), Verdict::MatchesUpToSign);
        assert_eq!(
            Verdict::from_deviations(1.0, 2.0, 1e-7),
            Verdict::MatchesWithSquaredDenominator
        );
        assert_eq!(Verdict::from_deviations(1.0, 2.0, 1e-5), Verdict::Mismatch);
    }

    #[test]
    fn relative_deviation_floor() {
        assert_eq!(rel(1e-9, 0.0), 1e-9);
        assert_eq!(rel(1.0, 4.0), 0.25);
    }
}
