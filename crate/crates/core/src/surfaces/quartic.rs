//! Curves on the rational quartic `Q` with an elliptic singular point.
//!
//! A class `(k; m₁..m₁₂)` with `Σmᵢ = 3k − 1` meets `Γ` once and maps to a
//! smooth space curve of degree `k + 1`. The only lines, conics and twisted
//! cubics on `Q` are the images of `Eᵢ`, `L − Eᵢ − Eⱼ` and `2L − E_{i₁} − … −
//! E_{i₅}`, so bad secant curves on `Q` are read off the multiplicities.

use serde::{Deserialize, Serialize};

use super::{require_points, Category, ExtremalRay, SurfaceClassification};
use crate::error::{Error, Result};
use crate::lattice::{adjunction_genus, DivisorClass, LatticeModel};
use crate::numerics::{dim_anticanonical, CurveType};

const POINTS: usize = 12;

/// Largest secancy of a line, conic and twisted cubic of `Q` with the curve,
/// attained at the largest `mᵢ` and at the smallest two and five `mᵢ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuarticSecancy {
    pub line: i64,
    pub conic: i64,
    pub twisted_cubic: i64,
}

impl QuarticSecancy {
    /// No 5-secant line, 9-secant conic or 13-secant twisted cubic.
    pub fn admissible(&self) -> bool {
        self.line <= 4 && self.conic <= 8 && self.twisted_cubic <= 12
    }

    /// The worst of the three curve families as a ray `m·l − n·f`.
    fn worst_ray(&self) -> ExtremalRay {
        // compare n/m by cross-multiplication
        [
            ExtremalRay::new(1, self.line),
            ExtremalRay::new(2, self.conic),
            ExtremalRay::new(3, self.twisted_cubic),
        ]
        .into_iter()
        .reduce(|best, r| if r.n * best.m > best.n * r.m { r } else { best })
        .expect("three candidates")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuarticReport {
    pub classification: SurfaceClassification,
    pub secancy: QuarticSecancy,
    pub admissible: bool,
}

/// Checks the numerical admissibility of a curve class on `Q`.
///
/// Admissible classes are reported as `weak-fano-small`: all of them have
/// `(g, d)` among the curves not on a cubic whose general blow-up has a small
/// anticanonical morphism. The existence of an actual smooth member of the
/// class is not checked.
pub fn classify_quartic_model(c: &DivisorClass) -> Result<QuarticReport> {
    require_points(c, POINTS)?;
    let k = c.degree();
    let sum: i64 = c.mults().iter().sum();
    if sum != 3 * k - 1 {
        return Err(Error::NonSmoothImage {
            sum,
            expected: 3 * k - 1,
        });
    }
    if c.mults().iter().any(|&m| m < 0) {
        return Err(Error::InvalidClass(format!(
            "{c} has a negative multiplicity"
        )));
    }
    let model = LatticeModel::rational_quartic();
    let degree = model.embedded_degree(c)?;
    let genus = adjunction_genus(c, &model)?;
    let curve_type = CurveType::new(genus, degree)?;

    let sorted = c.sorted();
    let m = sorted.mults();
    let secancy = QuarticSecancy {
        line: m[0],
        conic: k - m[10] - m[11],
        twisted_cubic: 2 * k - m[7..].iter().sum::<i64>(),
    };
    let admissible = secancy.admissible();
    let classification = SurfaceClassification {
        curve_type,
        category: if admissible {
            Category::WeakFanoSmall
        } else {
            Category::NotNef
        },
        extremal_ray: secancy.worst_ray(),
        four_secant_count: None,
        covering_family: false,
        dim_anti_lower: dim_anticanonical(curve_type),
        witnesses: Vec::new(),
        class: Some(sorted.clone()),
    };
    Ok(QuarticReport {
        classification,
        secancy,
        admissible,
    })
}

/// The columns `k − m₁₁ − m₁₂` and `2k − Σ_{i=8}^{12} mᵢ` of a class whose
/// multiplicities are sorted non-increasingly.
pub fn printed_columns(c: &DivisorClass) -> (i64, i64) {
    let k = c.degree();
    let m = c.mults();
    (k - m[10] - m[11], 2 * k - m[7..12].iter().sum::<i64>())
}

/// All admissible classes with non-increasing multiplicities realising
/// `(g, d)` on `Q`, in decreasing lexicographic order of multiplicities.
pub fn quartic_search(c: CurveType) -> Vec<DivisorClass> {
    let k = c.degree() - 1;
    let total = 3 * k - 1;
    if k < 1 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut buf = Vec::with_capacity(POINTS);
    partitions(total, 4, &mut buf, &mut |mults| {
        let class = DivisorClass::new(k, mults.to_vec());
        if let Ok(report) = classify_quartic_model(&class) {
            if report.admissible && report.classification.curve_type == c {
                out.push(class);
            }
        }
    });
    out
}

/// Non-increasing sequences of exactly 12 entries in `0..=cap` summing to `rest`.
fn partitions(rest: i64, cap: i64, buf: &mut Vec<i64>, f: &mut impl FnMut(&[i64])) {
    let slots = (POINTS - buf.len()) as i64;
    if slots == 0 {
        if rest == 0 {
            f(buf);
        }
        return;
    }
    if rest < 0 || rest > slots * cap {
        return;
    }
    for v in (0..=cap.min(rest)).rev() {
        buf.push(v);
        partitions(rest - v, v, buf, f);
        buf.pop();
    }
}
