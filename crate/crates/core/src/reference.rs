//! Published data embedded as constants: the table of `(g, d)` pairs with the
//! minimal degree of a containing surface, the A-set partition, the link
//! catalog, the curve tables on the cubic and on the rational quartic, and the
//! factored Mori polynomials.
//!
//! Nothing here is computed; the rest of the crate is checked against it.

use serde::{Deserialize, Serialize};

use crate::numerics::CurveType;
use crate::surfaces::Category;

const fn ct(g: i64, d: i64) -> CurveType {
    CurveType::known(g, d)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ASetLabel {
    A0,
    A1,
    A2,
    A3,
    A4,
}

impl ASetLabel {
    pub const ALL: [ASetLabel; 5] = [
        ASetLabel::A0,
        ASetLabel::A1,
        ASetLabel::A2,
        ASetLabel::A3,
        ASetLabel::A4,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ASetLabel::A0 => "A0",
            ASetLabel::A1 => "A1",
            ASetLabel::A2 => "A2",
            ASetLabel::A3 => "A3",
            ASetLabel::A4 => "A4",
        }
    }

    pub fn members(self) -> &'static [CurveType] {
        match self {
            ASetLabel::A0 => &A0,
            ASetLabel::A1 => &A1,
            ASetLabel::A2 => &A2,
            ASetLabel::A3 => &A3,
            ASetLabel::A4 => &A4,
        }
    }
}

pub const A0: [CurveType; 4] = [ct(6, 5), ct(10, 6), ct(8, 8), ct(12, 9)];

pub const A1: [CurveType; 8] = [
    ct(0, 1),
    ct(0, 2),
    ct(0, 3),
    ct(0, 4),
    ct(1, 3),
    ct(1, 4),
    ct(2, 5),
    ct(4, 6),
];

pub const A2: [CurveType; 4] = [ct(1, 5), ct(3, 6), ct(5, 7), ct(10, 9)];

pub const A3: [CurveType; 14] = [
    ct(0, 5),
    ct(0, 6),
    ct(1, 6),
    ct(2, 6),
    ct(3, 4),
    ct(3, 7),
    ct(4, 7),
    ct(6, 7),
    ct(6, 8),
    ct(7, 8),
    ct(9, 8),
    ct(9, 9),
    ct(12, 10),
    ct(19, 12),
];

pub const A4: [CurveType; 13] = [
    ct(0, 7),
    ct(1, 7),
    ct(2, 7),
    ct(2, 8),
    ct(3, 8),
    ct(4, 8),
    ct(5, 8),
    ct(6, 9),
    ct(7, 9),
    ct(8, 9),
    ct(10, 10),
    ct(11, 10),
    ct(14, 11),
];

/// Minimal degree of a surface containing a general curve of the type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Column {
    Plane,
    Quadric,
    Cubic,
    Quartic,
}

impl Column {
    pub const ALL: [Column; 4] = [
        Column::Plane,
        Column::Quadric,
        Column::Cubic,
        Column::Quartic,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Column::Plane => "plane",
            Column::Quadric => "quadric",
            Column::Cubic => "cubic",
            Column::Quartic => "quartic",
        }
    }

    pub fn surface_degree(self) -> i64 {
        self as i64 + 1
    }
}

/// Typographic marker of a cell: bold (ample), crossed (not nef), starred
/// (divisorial) or plain (small).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Marker {
    Bold,
    Plain,
    Star,
    Crossed,
}

impl Marker {
    pub fn category(self) -> Category {
        match self {
            Marker::Bold => Category::Fano,
            Marker::Plain => Category::WeakFanoSmall,
            Marker::Star => Category::WeakFanoDivisorial,
            Marker::Crossed => Category::NotNef,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table1Cell {
    pub curve_type: CurveType,
    pub column: Column,
    pub marker: Marker,
}

const fn cell(g: i64, d: i64, column: Column, marker: Marker) -> Table1Cell {
    Table1Cell {
        curve_type: ct(g, d),
        column,
        marker,
    }
}

/// The 43 pairs with `4d − 30 ≤ g ≤ 14` or `(g, d) = (19, 12)` carried by a
/// smooth space curve, in row order (by genus, then column).
pub const TABLE1: [Table1Cell; 43] = {
    use Column::*;
    use Marker::*;
    [
        cell(0, 1, Plane, Bold),
        cell(0, 2, Plane, Bold),
        cell(0, 3, Quadric, Bold),
        cell(0, 4, Quadric, Bold),
        cell(0, 5, Cubic, Plain),
        cell(0, 6, Cubic, Plain),
        cell(0, 7, Quartic, Plain),
        cell(1, 3, Plane, Bold),
        cell(1, 4, Quadric, Bold),
        cell(1, 5, Cubic, Bold),
        cell(1, 6, Cubic, Plain),
        cell(1, 7, Quartic, Plain),
        cell(2, 5, Quadric, Bold),
        cell(2, 6, Cubic, Plain),
        cell(2, 7, Quartic, Plain),
        cell(2, 8, Quartic, Plain),
        cell(3, 4, Plane, Star),
        cell(3, 6, Cubic, Bold),
        cell(3, 7, Cubic, Plain),
        cell(3, 8, Quartic, Plain),
        cell(4, 6, Quadric, Bold),
        cell(4, 7, Cubic, Plain),
        cell(4, 8, Quartic, Plain),
        cell(5, 7, Cubic, Bold),
        cell(5, 8, Quartic, Plain),
        cell(6, 5, Plane, Crossed),
        cell(6, 7, Quadric, Star),
        cell(6, 8, Cubic, Plain),
        cell(6, 9, Quartic, Plain),
        cell(7, 8, Cubic, Plain),
        cell(7, 9, Quartic, Plain),
        cell(8, 8, Quadric, Crossed),
        cell(8, 9, Quartic, Plain),
        cell(9, 8, Quadric, Star),
        cell(9, 9, Cubic, Plain),
        cell(10, 6, Plane, Crossed),
        cell(10, 9, Cubic, Bold),
        cell(10, 10, Quartic, Plain),
        cell(11, 10, Quartic, Plain),
        cell(12, 9, Quadric, Crossed),
        cell(12, 10, Cubic, Star),
        cell(14, 11, Quartic, Plain),
        cell(19, 12, Cubic, Star),
    ]
};

pub fn table1_cell(c: CurveType) -> Option<&'static Table1Cell> {
    TABLE1.iter().find(|cell| cell.curve_type == c)
}

/// End product of the Sarkisov link starting with the blow-up.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinkDescriptor {
    pub target: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub target_curve: Option<CurveType>,
    pub has_flop: bool,
    pub source_citation: String,
}

pub(crate) struct LinkEntry {
    pub curve_type: CurveType,
    pub target: &'static str,
    pub target_curve: Option<CurveType>,
    pub has_flop: bool,
    pub citation: &'static str,
}

impl LinkEntry {
    pub fn descriptor(&self) -> LinkDescriptor {
        LinkDescriptor {
            target: self.target.to_string(),
            target_curve: self.target_curve,
            has_flop: self.has_flop,
            source_citation: self.citation.to_string(),
        }
    }
}

const fn link(
    g: i64,
    d: i64,
    target: &'static str,
    target_curve: Option<CurveType>,
    has_flop: bool,
    citation: &'static str,
) -> LinkEntry {
    LinkEntry {
        curve_type: ct(g, d),
        target,
        target_curve,
        has_flop,
        citation,
    }
}

/// Links for the weak Fano pairs with ample or small anticanonical model.
/// The five divisorial pairs and `A₀` have none.
pub(crate) const LINKS: &[LinkEntry] = &[
    // plane
    link(
        0,
        1,
        "P²-bundle over P¹",
        None,
        false,
        "planes through the line",
    ),
    link(
        0,
        2,
        "quadric threefold Q ⊂ P⁴",
        None,
        false,
        "plane contracted to a smooth point",
    ),
    link(
        1,
        3,
        "singular Fano threefold (E5 point)",
        None,
        false,
        "plane contracted to a terminal point",
    ),
    // smooth quadric and cone
    link(0, 3, "P¹-bundle over P²", None, false, "bisecant lines"),
    link(
        1,
        4,
        "del Pezzo fibration over P¹",
        None,
        false,
        "pencil of quadrics",
    ),
    link(
        0,
        4,
        "V₅ ⊂ P⁶, (−K)³ = 40",
        None,
        false,
        "quadric contracted onto a rational curve",
    ),
    link(
        2,
        5,
        "V₄ ⊂ P⁵, (−K)³ = 32",
        None,
        false,
        "quadric contracted onto a rational curve",
    ),
    link(
        4,
        6,
        "terminal Fano threefold (E3 or E4 point)",
        None,
        false,
        "quadric contracted to a terminal point",
    ),
    // cubic, ample
    link(
        1,
        5,
        "(1,5) ⊂ Q ⊂ P⁴",
        Some(ct(1, 5)),
        false,
        "Mori–Mukai p. 117",
    ),
    link(
        3,
        6,
        "(3,6) ⊂ P³ (cubo-cubic)",
        Some(ct(3, 6)),
        false,
        "Katz",
    ),
    link(
        5,
        7,
        "conic bundle",
        None,
        false,
        "Iskovskikh, Remark 2(ii)",
    ),
    link(
        10,
        9,
        "del Pezzo fibration of degree 3",
        None,
        false,
        "pencil of cubics",
    ),
    // cubic, small
    link(
        0,
        5,
        "(0,5) ⊂ P³",
        Some(ct(0, 5)),
        true,
        "Cutrone–Marshburn, Prop. 2.9",
    ),
    link(0, 6, "Y₂₂", None, true, "Takeuchi (2.8.1)"),
    link(
        1,
        6,
        "del Pezzo fibration of degree 6",
        None,
        true,
        "Jahnke–Peternell–Radloff, Prop. 6.5(27)",
    ),
    link(
        2,
        6,
        "conic bundle",
        None,
        true,
        "Jahnke–Peternell–Radloff, Thm. 7.14(16)",
    ),
    link(3, 7, "line ⊂ Y₁₆", Some(ct(0, 1)), true, "Iskovskikh (6.1)"),
    link(
        4,
        7,
        "del Pezzo fibration of degree 5",
        None,
        true,
        "Jahnke–Peternell–Radloff, Prop. 6.5(28)",
    ),
    link(
        6,
        8,
        "terminal Fano threefold (E3 point), (−K)³ = 12",
        None,
        true,
        "Cutrone–Marshburn 3.2, case 4",
    ),
    link(
        7,
        8,
        "del Pezzo fibration of degree 4",
        None,
        true,
        "Jahnke–Peternell–Radloff, Prop. 6.5(29)",
    ),
    link(
        9,
        9,
        "terminal Fano threefold (E5 point), (−K)³ = 21/2",
        None,
        true,
        "Cutrone–Marshburn 3.3, case 3",
    ),
    // quartic
    link(
        0,
        7,
        "(0,7) ⊂ P³",
        Some(ct(0, 7)),
        true,
        "Cutrone–Marshburn [90]",
    ),
    link(
        1,
        7,
        "(1,7) ⊂ X₂₂",
        Some(ct(1, 7)),
        true,
        "Cutrone–Marshburn [98]",
    ),
    link(
        2,
        7,
        "(0,5) ⊂ V₄",
        Some(ct(0, 5)),
        true,
        "Cutrone–Marshburn [103]",
    ),
    link(
        2,
        8,
        "(2,8) ⊂ P³",
        Some(ct(2, 8)),
        true,
        "Cutrone–Marshburn [49]",
    ),
    link(
        3,
        8,
        "(3,8) ⊂ P³",
        Some(ct(3, 8)),
        true,
        "Cutrone–Marshburn [75]",
    ),
    link(
        4,
        8,
        "(4,10) ⊂ V₅",
        Some(ct(4, 10)),
        true,
        "Cutrone–Marshburn [89]",
    ),
    link(
        5,
        8,
        "(5,8) ⊂ P³",
        Some(ct(5, 8)),
        true,
        "Cutrone–Marshburn [99]",
    ),
    link(
        6,
        9,
        "(6,9) ⊂ P³",
        Some(ct(6, 9)),
        true,
        "Cutrone–Marshburn [50]",
    ),
    link(
        7,
        9,
        "(0,3) ⊂ X₁₂",
        Some(ct(0, 3)),
        true,
        "Iskovskikh–Prokhorov p. 103",
    ),
    link(
        8,
        9,
        "del Pezzo fibration of degree 5 (dP5)",
        None,
        true,
        "Jahnke–Peternell–Radloff, Prop. 6.5(25)",
    ),
    link(
        10,
        10,
        "(10,10) ⊂ P³",
        Some(ct(10, 10)),
        true,
        "Cutrone–Marshburn [51]",
    ),
    link(
        11,
        10,
        "(11,10) ⊂ P³",
        Some(ct(11, 10)),
        true,
        "Cutrone–Marshburn [76]",
    ),
    link(
        14,
        11,
        "(14,11) ⊂ P³",
        Some(ct(14, 11)),
        true,
        "Cutrone–Marshburn [52]",
    ),
];

pub(crate) fn link_entry(c: CurveType) -> Option<&'static LinkEntry> {
    LINKS.iter().find(|e| e.curve_type == c)
}

/// Which of the three published tables of curves on the cubic a row is from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CubicTable {
    /// Ample.
    I,
    /// Small.
    Ii,
    /// Divisorial.
    Iii,
}

impl CubicTable {
    pub fn category(self) -> Category {
        match self {
            CubicTable::I => Category::Fano,
            CubicTable::Ii => Category::WeakFanoSmall,
            CubicTable::Iii => Category::WeakFanoDivisorial,
        }
    }

    pub fn rows(self) -> &'static [CubicRow] {
        match self {
            CubicTable::I => &CUBIC_I,
            CubicTable::Ii => &CUBIC_II,
            CubicTable::Iii => &CUBIC_III,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CubicRow {
    pub curve_type: CurveType,
    pub k: i64,
    pub mults: [i64; 6],
    /// Printed in the small and divisorial tables only.
    pub four_secants: Option<i64>,
    /// Printed in the ample and small tables only.
    pub dim_anti: Option<i64>,
}

const fn cubic(
    g: i64,
    d: i64,
    k: i64,
    mults: [i64; 6],
    four_secants: Option<i64>,
    dim_anti: Option<i64>,
) -> CubicRow {
    CubicRow {
        curve_type: ct(g, d),
        k,
        mults,
        four_secants,
        dim_anti,
    }
}

pub const CUBIC_I: [CubicRow; 4] = [
    cubic(1, 5, 3, [1, 1, 1, 1, 0, 0], None, Some(14)),
    cubic(3, 6, 4, [1, 1, 1, 1, 1, 1], None, Some(12)),
    cubic(5, 7, 6, [2, 2, 2, 2, 2, 1], None, Some(10)),
    cubic(10, 9, 9, [3, 3, 3, 3, 3, 3], None, Some(7)),
];

pub const CUBIC_II: [CubicRow; 9] = [
    cubic(0, 5, 2, [1, 0, 0, 0, 0, 0], Some(1), Some(13)),
    cubic(0, 6, 2, [0, 0, 0, 0, 0, 0], Some(6), Some(9)),
    cubic(1, 6, 3, [1, 1, 1, 0, 0, 0], Some(3), Some(10)),
    cubic(2, 6, 4, [2, 1, 1, 1, 1, 0], Some(1), Some(11)),
    cubic(3, 7, 4, [1, 1, 1, 1, 1, 0], Some(5), Some(8)),
    cubic(4, 7, 5, [2, 2, 1, 1, 1, 1], Some(2), Some(9)),
    cubic(6, 8, 6, [2, 2, 2, 2, 1, 1], Some(5), Some(7)),
    cubic(7, 8, 7, [3, 2, 2, 2, 2, 2], Some(1), Some(8)),
    cubic(9, 9, 7, [2, 2, 2, 2, 2, 2], Some(6), Some(6)),
];

pub const CUBIC_III: [CubicRow; 3] = [
    cubic(5, 8, 6, [2, 2, 2, 2, 2, 0], Some(10), None),
    cubic(12, 10, 9, [3, 3, 3, 3, 3, 2], Some(10), None),
    cubic(19, 12, 12, [4, 4, 4, 4, 4, 4], Some(27), None),
];

/// Curve classes on the rational quartic realising the pairs not on a cubic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuarticRow {
    pub curve_type: CurveType,
    pub k: i64,
    pub mults: [i64; 12],
    /// `k − m₁₁ − m₁₂`.
    pub conic_secancy: i64,
    /// `2k − Σ_{i=8}^{12} mᵢ`.
    pub cubic_secancy: i64,
}

const fn quartic(g: i64, d: i64, k: i64, mults: [i64; 12], conic: i64, cubic: i64) -> QuarticRow {
    QuarticRow {
        curve_type: ct(g, d),
        k,
        mults,
        conic_secancy: conic,
        cubic_secancy: cubic,
    }
}

pub const TABLE4: [QuarticRow; 13] = [
    quartic(0, 7, 6, [3, 2, 2, 2, 2, 2, 2, 2, 0, 0, 0, 0], 6, 10),
    quartic(1, 7, 6, [3, 2, 2, 2, 2, 2, 2, 1, 1, 0, 0, 0], 6, 10),
    quartic(2, 7, 6, [2, 2, 2, 2, 2, 2, 2, 2, 1, 0, 0, 0], 6, 9),
    quartic(2, 8, 7, [3, 3, 2, 2, 2, 2, 2, 2, 2, 0, 0, 0], 7, 10),
    quartic(3, 8, 7, [3, 3, 2, 2, 2, 2, 2, 2, 1, 1, 0, 0], 7, 10),
    quartic(4, 8, 7, [3, 2, 2, 2, 2, 2, 2, 2, 2, 1, 0, 0], 7, 9),
    quartic(5, 8, 7, [2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 0, 0], 7, 8),
    quartic(6, 9, 8, [3, 3, 3, 2, 2, 2, 2, 2, 2, 1, 1, 0], 7, 10),
    quartic(7, 9, 8, [3, 3, 2, 2, 2, 2, 2, 2, 2, 2, 1, 0], 7, 9),
    quartic(8, 9, 8, [3, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 0], 6, 8),
    quartic(10, 10, 9, [3, 3, 3, 3, 2, 2, 2, 2, 2, 2, 1, 1], 7, 10),
    quartic(11, 10, 9, [3, 3, 3, 2, 2, 2, 2, 2, 2, 2, 2, 1], 6, 9),
    quartic(14, 11, 10, [3, 3, 3, 3, 3, 2, 2, 2, 2, 2, 2, 2], 6, 10),
];

/// `P_{g,d}(n) = (n − a)(n − b) − c` as printed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactoredMori {
    pub curve_type: CurveType,
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

const fn mori(g: i64, d: i64, a: i64, b: i64, c: i64) -> FactoredMori {
    FactoredMori {
        curve_type: ct(g, d),
        a,
        b,
        c,
    }
}

/// Pairs of the cubic column (and `(12,10)`). The `(12,10)` entry is kept as
/// printed, `(n − 1)(n − 12) − 8`; the polynomial is `(n − 1)(n − 11) − 7`.
pub const MORI_CUBIC: [FactoredMori; 14] = [
    mori(0, 5, 2, 20, 15),
    mori(0, 6, 2, 18, 0),
    mori(1, 5, 1, 21, 4),
    mori(1, 6, 2, 18, 8),
    mori(2, 6, 2, 18, 16),
    mori(3, 6, 1, 19, 7),
    mori(3, 7, 2, 16, 7),
    mori(4, 7, 1, 17, 0),
    mori(5, 7, 1, 17, 8),
    mori(6, 8, 2, 14, 12),
    mori(7, 8, 1, 15, 7),
    mori(9, 9, 1, 13, 4),
    mori(10, 9, 1, 13, 12),
    mori(12, 10, 1, 12, 8),
];

/// Pairs of the quartic column, `(14,11)` included.
pub const MORI_QUARTIC: [FactoredMori; 13] = [
    mori(0, 7, 4, 14, 7),
    mori(1, 7, 3, 15, 4),
    mori(2, 7, 3, 15, 12),
    mori(2, 8, 4, 12, 0),
    mori(3, 8, 4, 12, 8),
    mori(4, 8, 3, 13, 7),
    mori(5, 8, 2, 14, 4),
    mori(6, 9, 3, 11, 0),
    mori(7, 9, 3, 11, 8),
    mori(8, 9, 2, 12, 7),
    mori(10, 10, 2, 10, 0),
    mori(11, 10, 2, 10, 8),
    mori(14, 11, 1, 9, 0),
];

/// Twisted-cubic class count on the rational quartic stated in the
/// literature; the lattice gives `C(12,5) = 792` classes `2L − E_{i₁} − … − E_{i₅}`.
pub const LITERATURE_TWISTED_CUBIC_COUNT: i64 = 5544;

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use super::*;

    #[test]
    fn partition_is_disjoint_and_covers_table() {
        let mut seen = HashSet::new();
        for label in ASetLabel::ALL {
            for c in label.members() {
                assert!(seen.insert(*c), "{c} appears twice");
            }
        }
        let cells: HashSet<_> = TABLE1.iter().map(|c| c.curve_type).collect();
        assert_eq!(seen, cells);
        assert_eq!(cells.len(), 43);
    }

    #[test]
    fn markers_match_asets() {
        for cell in TABLE1 {
            let c = cell.curve_type;
            let bold = A1.contains(&c) || A2.contains(&c);
            assert_eq!(cell.marker == Marker::Bold, bold, "{c}");
            assert_eq!(cell.marker == Marker::Crossed, A0.contains(&c), "{c}");
            if A4.contains(&c) {
                assert_eq!(cell.column, Column::Quartic);
            }
        }
    }

    #[test]
    fn table_range() {
        for cell in TABLE1 {
            let (g, d) = (cell.curve_type.genus(), cell.curve_type.degree());
            assert!((g, d) == (19, 12) || (4 * d - 30 <= g && g <= 14));
        }
    }

    #[test]
    fn printed_mori_polynomials() {
        use crate::numerics::mori_polynomial;
        for p in MORI_CUBIC.iter().chain(&MORI_QUARTIC) {
            let matches = mori_polynomial(p.curve_type).matches_shifted_product(p.a, p.b, p.c);
            assert_eq!(matches, p.curve_type != ct(12, 10), "{}", p.curve_type);
        }
        assert!(mori_polynomial(ct(12, 10)).matches_shifted_product(1, 11, 7));
    }

    #[test]
    fn links_unique_and_flop_for_quartic_column() {
        let mut seen = HashSet::new();
        for e in LINKS {
            assert!(seen.insert(e.curve_type));
            assert!(!e.target.is_empty());
        }
        for c in A4 {
            assert!(link_entry(c).unwrap().has_flop);
        }
        for c in A0 {
            assert!(link_entry(c).is_none());
        }
    }
}
