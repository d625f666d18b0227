//! Weak Fano classification of blow-ups of space curves by `(g, d)`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numerics::{
    dim_anticanonical, k3, linkage_witness, mori_polynomial, CurveType, LinkageType, LinkageWitness,
};
use crate::reference::{self, table1_cell, ASetLabel, Column, LinkDescriptor};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    FanoConditional,
    WeakFanoConditional,
    WeakFanoUnconditional,
    NeverWeakFano,
    OutOfRange,
    NotInTable,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::FanoConditional => "fano-conditional",
            Verdict::WeakFanoConditional => "weak-fano-conditional",
            Verdict::WeakFanoUnconditional => "weak-fano-unconditional",
            Verdict::NeverWeakFano => "never-weak-fano",
            Verdict::OutOfRange => "out-of-range",
            Verdict::NotInTable => "not-in-table",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Condition {
    #[serde(rename = "no-4-secant-line")]
    No4SecantLine,
    #[serde(rename = "no-5-secant-line")]
    No5SecantLine,
    #[serde(rename = "no-9-secant-conic")]
    No9SecantConic,
    #[serde(rename = "no-13-secant-cubic")]
    No13SecantCubic,
    SmoothQuarticContainment,
}

impl Condition {
    pub fn as_str(self) -> &'static str {
        match self {
            Condition::No4SecantLine => "no-4-secant-line",
            Condition::No5SecantLine => "no-5-secant-line",
            Condition::No9SecantConic => "no-9-secant-conic",
            Condition::No13SecantCubic => "no-13-secant-cubic",
            Condition::SmoothQuarticContainment => "smooth-quartic-containment",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AnticanonicalType {
    Ample,
    Small,
    Divisorial,
}

/// How much of the Hilbert scheme satisfies the weak Fano conditions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Genericity {
    /// Every smooth curve of the type.
    Always,
    /// A non-empty Zariski open subset.
    OpenNonempty,
    /// No curve of the type.
    Empty,
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationRecord {
    pub curve_type: CurveType,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub aset: Option<ASetLabel>,
    pub k3: i64,
    pub dim_anti: i64,
    pub verdict: Verdict,
    /// Conditions for `−K_X` to be nef and big.
    pub conditions: Vec<Condition>,
    /// Conditions for `−K_X` to be ample; absent when never ample.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fano_conditions: Option<Vec<Condition>>,
    /// For a general member satisfying the conditions.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub anticanonical_type: Option<AnticanonicalType>,
    pub genericity: Genericity,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub link: Option<LinkDescriptor>,
    /// Liaison producing a forced bad secant or a contracted surface.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<LinkageWitness>,
}

impl ClassificationRecord {
    pub fn generic_open_nonempty(&self) -> bool {
        matches!(
            self.genericity,
            Genericity::Always | Genericity::OpenNonempty
        )
    }
}

pub fn aset(c: CurveType) -> Option<ASetLabel> {
    ASetLabel::ALL
        .into_iter()
        .find(|label| label.members().contains(&c))
}

/// `4d − 30 ≤ g ≤ 14`, or the complete intersection `(19, 12)`.
pub fn in_table_range(c: CurveType) -> bool {
    let (g, d) = (c.genus(), c.degree());
    (g, d) == (19, 12) || (4 * d - 30 <= g && g <= 14)
}

const DIVISORIAL: [CurveType; 5] = [
    CurveType::known(3, 4),
    CurveType::known(6, 7),
    CurveType::known(9, 8),
    CurveType::known(12, 10),
    CurveType::known(19, 12),
];

const FIFTEEN_ELEVEN: CurveType = CurveType::known(15, 11);
const TWELVE_TEN: CurveType = CurveType::known(12, 10);
const THREE_SIX: CurveType = CurveType::known(3, 6);

fn cubic_quartic() -> LinkageType {
    LinkageType::new(3, 4).expect("positive degrees")
}

pub fn classify(c: CurveType) -> ClassificationRecord {
    use Condition::*;
    let label = aset(c);
    let mut record = ClassificationRecord {
        curve_type: c,
        aset: label,
        k3: k3(c),
        dim_anti: dim_anticanonical(c),
        verdict: Verdict::OutOfRange,
        conditions: Vec::new(),
        fano_conditions: None,
        anticanonical_type: None,
        genericity: Genericity::Unknown,
        link: link_descriptor(c),
        witness: None,
    };
    match label {
        Some(ASetLabel::A0) => {
            record.verdict = Verdict::NeverWeakFano;
            record.genericity = Genericity::Empty;
        }
        Some(ASetLabel::A1) => {
            record.verdict = Verdict::WeakFanoUnconditional;
            record.fano_conditions = Some(Vec::new());
            record.anticanonical_type = Some(AnticanonicalType::Ample);
            record.genericity = Genericity::Always;
        }
        Some(ASetLabel::A2) => {
            record.verdict = Verdict::FanoConditional;
            record.fano_conditions = Some(vec![No4SecantLine]);
            if c != THREE_SIX {
                record.conditions = vec![No4SecantLine];
            }
            record.anticanonical_type = Some(AnticanonicalType::Ample);
            record.genericity = Genericity::OpenNonempty;
        }
        Some(set @ (ASetLabel::A3 | ASetLabel::A4)) => {
            record.verdict = Verdict::WeakFanoConditional;
            record.conditions = if set == ASetLabel::A3 {
                vec![No5SecantLine, SmoothQuarticContainment]
            } else {
                vec![
                    No5SecantLine,
                    No9SecantConic,
                    No13SecantCubic,
                    SmoothQuarticContainment,
                ]
            };
            record.anticanonical_type = Some(if DIVISORIAL.contains(&c) {
                AnticanonicalType::Divisorial
            } else {
                AnticanonicalType::Small
            });
            record.genericity = Genericity::OpenNonempty;
            if c == TWELVE_TEN {
                record.witness = linkage_witness(c, cubic_quartic()).ok();
            }
        }
        None if c == FIFTEEN_ELEVEN => {
            record.verdict = Verdict::NeverWeakFano;
            record.genericity = Genericity::Empty;
            record.witness = linkage_witness(c, cubic_quartic()).ok();
        }
        None if record.k3 <= 0 => {
            record.verdict = Verdict::NeverWeakFano;
            record.genericity = Genericity::Empty;
        }
        None if in_table_range(c) => record.verdict = Verdict::NotInTable,
        None => {}
    }
    record
}

pub fn link_descriptor(c: CurveType) -> Option<LinkDescriptor> {
    reference::link_entry(c).map(|e| e.descriptor())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SecantReason {
    /// Degree above the number of points the curve shares with every
    /// containing surface of the column degree.
    Bezout,
    /// The bad curve would complete `C` to a complete intersection in which
    /// the secancy is at most `4n`.
    CompleteIntersection,
    /// `P_{g,d}(n) ≤ 0` forbids the union on a smooth quartic.
    Mori,
    /// A plane conic meets `C` in at most `d` points.
    Plane,
    /// No numerical obstruction.
    Unobstructed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SecantVerdict {
    /// Degree `n` of the bad curve.
    pub degree: i64,
    /// `4n + 1`.
    pub secancy: i64,
    pub possible: bool,
    pub reason: SecantReason,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SecantReport {
    pub curve_type: CurveType,
    pub column: Column,
    pub verdicts: [SecantVerdict; 3],
}

impl SecantReport {
    pub fn line(&self) -> &SecantVerdict {
        &self.verdicts[0]
    }

    pub fn conic(&self) -> &SecantVerdict {
        &self.verdicts[1]
    }

    pub fn twisted_cubic(&self) -> &SecantVerdict {
        &self.verdicts[2]
    }
}

/// Whether a smooth rational `(4n + 1)`-secant curve of degree `n ≤ 3` can
/// occur for a curve of type `c` on a smooth quartic.
pub fn secant_possibility(c: CurveType) -> Result<SecantReport> {
    let column = match (aset(c), table1_cell(c)) {
        (Some(ASetLabel::A3 | ASetLabel::A4), Some(cell)) => cell.column,
        _ => {
            return Err(Error::Unsupported(format!(
                "secant analysis applies to A3 and A4 only, not {c}"
            )))
        }
    };
    let verdicts = [1, 2, 3].map(|n| secant_verdict(c, column, n));
    Ok(SecantReport {
        curve_type: c,
        column,
        verdicts,
    })
}

fn secant_verdict(c: CurveType, column: Column, n: i64) -> SecantVerdict {
    let verdict = |possible, reason| SecantVerdict {
        degree: n,
        secancy: 4 * n + 1,
        possible,
        reason,
    };
    let d = c.degree();
    let bound = if column == Column::Quartic {
        16 - d
    } else {
        12 - d
    };
    if n > bound {
        return verdict(false, SecantReason::Bezout);
    }
    for (t, residual_degree) in [((4, 4), 16 - d), ((3, 4), 12 - d)] {
        if n != residual_degree {
            continue;
        }
        let t = LinkageType::new(t.0, t.1).expect("positive degrees");
        if let Ok(w) = linkage_witness(c, t) {
            if w.residual.genus == 0 && w.secancy > 4 * n {
                return verdict(true, SecantReason::CompleteIntersection);
            }
        }
        // A residual of degree 16 − d always completes a [4,4] intersection
        // and one of degree 12 − d a [3,4] one for curves on a cubic; off the
        // cubic a non-complete-intersection union remains and goes to Mori.
        if (t.n1() == 4) == (column == Column::Quartic) {
            return verdict(false, SecantReason::CompleteIntersection);
        }
    }
    if mori_polynomial(c).eval(n) <= 0 {
        return verdict(false, SecantReason::Mori);
    }
    if n == 2 && d < 9 {
        return verdict(false, SecantReason::Plane);
    }
    verdict(true, SecantReason::Unobstructed)
}
