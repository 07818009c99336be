//! Closed-form expressions for `K`, `H`, `kappa^2`, `tau` and the fundamental
//! quantities in terms of the structure functions, one set per surface case.
//!
//! The expressions are kept exactly as published, including terms that fail
//! hand checks; [`super::audit`] measures how they relate to the oracle.
//! Symbols: `l = lambda`, `m = mu`, `k = k_g`, a trailing digit is the
//! derivative order (`l1 = lambda'`, `m2 = mu''`, `k1 = k_g'`).

use crate::error::GeometryError;
use crate::ruled::{SignTable, StructureSample, SurfaceCase};

/// Denominators at or below this magnitude count as vanishing.
pub const DENOMINATOR_EPS: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Formula {
    K,
    H,
    KappaSq,
    Tau,
    E,
    F,
    G,
    L,
    M,
    N,
}

impl Formula {
    pub const ALL: [Formula; 10] = [
        Formula::K,
        Formula::H,
        Formula::KappaSq,
        Formula::Tau,
        Formula::E,
        Formula::F,
        Formula::G,
        Formula::L,
        Formula::M,
        Formula::N,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Formula::K => "K",
            Formula::H => "H",
            Formula::KappaSq => "kappa_sq",
            Formula::Tau => "tau",
            Formula::E => "E",
            Formula::F => "F",
            Formula::G => "G",
            Formula::L => "L",
            Formula::M => "M",
            Formula::N => "N",
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

/// A printed value together with the factor that appears once in its
/// denominator. Dividing by it once more yields the squared-denominator variant.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PrintedValue {
    pub value: f64,
    pub denominator: f64,
}

impl PrintedValue {
    fn plain(value: f64) -> Self {
        Self {
            value,
            denominator: 1.0,
        }
    }

    pub fn squared_denominator(&self) -> f64 {
        self.value / self.denominator
    }
}

/// Structure functions expressed in the symbols of the closed forms.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StructureInputs {
    pub lambda: f64,
    pub mu: f64,
    pub k_g: f64,
    pub d_lambda: f64,
    pub d2_lambda: f64,
    pub d_mu: f64,
    pub d2_mu: f64,
    pub d_kg: f64,
}

impl StructureInputs {
    pub fn new(s: &StructureSample, case: SurfaceCase, signs: &SignTable) -> Self {
        let ls = signs.lambda_sign(case);
        let ks = signs.kg_sign(case);
        Self {
            lambda: ls * s.cx,
            mu: s.mu,
            k_g: ks * s.k_g,
            d_lambda: ls * s.d_cx,
            d2_lambda: ls * s.d2_cx,
            d_mu: s.d_cy,
            d2_mu: s.d2_cy,
            d_kg: ks * s.d_kg,
        }
    }
}

fn ratio(formula: Formula, num: f64, den: f64, factor: f64) -> Result<PrintedValue, GeometryError> {
    if den.abs() <= DENOMINATOR_EPS {
        return Err(GeometryError::PrintedDenominatorZero {
            formula: formula.name(),
        });
    }
    Ok(PrintedValue {
        value: num / den,
        denominator: factor,
    })
}

/// Evaluates one closed form for `case` at ruling parameter `v`.
pub fn printed(
    case: SurfaceCase,
    formula: Formula,
    s: &StructureInputs,
    v: f64,
) -> Result<PrintedValue, GeometryError> {
    use SurfaceCase::*;
    let (l, m, k) = (s.lambda, s.mu, s.k_g);
    let (l1, l2, m1, m2, k1) = (s.d_lambda, s.d2_lambda, s.d_mu, s.d2_mu, s.d_kg);
    let ll_mm = l * l + m * m;
    let wr = m * l1 - l * m1;

    match formula {
        Formula::KappaSq => {
            let num = match case {
                TlSpacelikeRulingASpacelike => (m * k - l).powi(2) * ll_mm + (l * m1 - m * l1).powi(2),
                _ => (l + m * k).powi(2) * ll_mm + wr * wr,
            };
            let den = ll_mm.powi(3);
            ratio(formula, num, den, den)
        }
        Formula::Tau => {
            let (num, den) = match case {
                TlSpacelikeRulingATimelike => (
                    (l + m * k) * (l * l * k - l * m * k * k + l * m2 - l2 + l + m * k)
                        + (2.0 * l1 + k1 * m + 2.0 * k * m1) * wr,
                    ll_mm * (l + m * k).powi(2) + wr * wr,
                ),
                TlSpacelikeRulingASpacelike => (
                    (l - m * k) * (-l * l * k + l * m * k * k - l * m2 - l2 + l - m * k)
                        + (2.0 * l1 - k1 * m - 2.0 * k * m1) * wr,
                    ll_mm * (m * k - l).powi(2) + (l * m1 - m * l1).powi(2),
                ),
                TlTimelikeRuling => (
                    (l + m * k) * (l * l * k + l * m * k * k + l * m2 - l2 + l + m * k)
                        + (2.0 * l1 - k1 * m + 2.0 * k * m1) * wr,
                    ll_mm * (l + m * k).powi(2) + wr * wr,
                ),
                SlYTimelike | SlYSpacelike => (
                    (l + m * k) * (l * l * k - l * m * k * k + l * m2 - l2 + l + m * k)
                        + (2.0 * l1 - k1 * m + 2.0 * k * m1) * wr,
                    ll_mm * (l + m * k).powi(2) + wr * wr,
                ),
            };
            ratio(formula, num, den, den)
        }
        Formula::K => {
            let (num, den) = match case {
                TlSpacelikeRulingATimelike => (-m * m, m * m - v * v),
                TlSpacelikeRulingASpacelike => (-m * m, m * m + v * v - 2.0 * l * l),
                TlTimelikeRuling => (m * m, m * m + v * v),
                SlYTimelike => (m * m, m * m - v * v),
                SlYSpacelike => (m * m, m * m + v * v - 2.0 * l * l),
            };
            ratio(formula, num, den, den)
        }
        Formula::H => {
            let (num, d) = match case {
                TlSpacelikeRulingATimelike => (
                    -m * (l + m * k) - v * (m1 - v * k + 2.0 * l * m),
                    m * m - v * v,
                ),
                TlSpacelikeRulingASpacelike => (l * v - m * m1 + 2.0 * l * m, m * m + v * v - 2.0 * l * l),
                TlTimelikeRuling => (
                    m * (l - m * k) - v * (m1 - v * k - 2.0 * l * m),
                    m * m + v * v,
                ),
                SlYTimelike => (
                    m * (l + m * k) + v * (m1 - v * k - 2.0 * l * m),
                    m * m - v * v,
                ),
                SlYSpacelike => (m * m1 - l * v - 2.0 * l * m, m * m + v * v - 2.0 * l * l),
            };
            ratio(formula, num, 2.0 * d, d)
        }
        Formula::E => Ok(PrintedValue::plain(match case {
            TlSpacelikeRulingATimelike => l * l + m * m - v * v,
            TlSpacelikeRulingASpacelike | TlTimelikeRuling | SlYSpacelike => m * m - l * l + v * v,
            SlYTimelike => m * m + l * l - v * v,
        })),
        Formula::F => Ok(PrintedValue::plain(-l)),
        Formula::G => Ok(PrintedValue::plain(match case {
            TlTimelikeRuling => -1.0,
            _ => 1.0,
        })),
        Formula::L => Ok(PrintedValue::plain(match case {
            TlSpacelikeRulingATimelike | SlYTimelike => -m * (l + m * k) - v * (m1 - v * k),
            TlSpacelikeRulingASpacelike | SlYSpacelike => l * v - m * m1,
            TlTimelikeRuling => m * (l - m * k) - v * (m1 - v * k),
        })),
        Formula::M => Ok(PrintedValue::plain(m)),
        Formula::N => Ok(PrintedValue::plain(0.0)),
    }
}

/// All closed forms for one sample; entries whose denominator vanishes are `None`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PrintedSet {
    values: [Option<PrintedValue>; 10],
}

impl PrintedSet {
    pub fn get(&self, formula: Formula) -> Option<PrintedValue> {
        self.values[formula.index()]
    }
}

pub fn printed_formulas(case: SurfaceCase, s: &StructureSample, v: f64, signs: &SignTable) -> PrintedSet {
    let inputs = StructureInputs::new(s, case, signs);
    PrintedSet {
        values: Formula::ALL.map(|f| printed(case, f, &inputs, v).ok()),
    }
}
