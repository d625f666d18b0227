//! Classification of the blow-up along a curve lying on a low-degree surface:
//! plane, smooth quadric, quadric cone, normal cubic, and the rational quartic
//! with an elliptic singularity.
//!
//! In every case the extremal ray `r = m·l − n·f` of the cone of curves of the
//! blow-up comes from curves on the ambient surface, and `−K_X·r = 4m − n`
//! decides ampleness (`n < 4m`), nefness (`n ≤ 4m`) or neither.

mod cubic;
mod quadric;
mod quartic;

use serde::{Deserialize, Serialize};

pub use cubic::{classify_cubic, enumerate_cubic_cases, restricted_anticanonical_square};
pub use quadric::{classify_cone, classify_plane, classify_quadric};
pub use quartic::{
    classify_quartic_model, printed_columns, quartic_search, QuarticReport, QuarticSecancy,
};

use crate::error::{Error, Result};
use crate::lattice::DivisorClass;
use crate::numerics::CurveType;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Category {
    Fano,
    WeakFanoSmall,
    WeakFanoDivisorial,
    NotNef,
}

impl Category {
    pub fn as_str(self) -> &'static str {
        match self {
            Category::Fano => "fano",
            Category::WeakFanoSmall => "weak-fano-small",
            Category::WeakFanoDivisorial => "weak-fano-divisorial",
            Category::NotNef => "not-nef",
        }
    }

    pub fn is_weak_fano(self) -> bool {
        !matches!(self, Category::NotNef)
    }

    /// Category of a ray `l − n·f` whose curves sweep out the surface.
    pub(crate) fn of_covering_ray(n: i64) -> Self {
        match n {
            ..=3 => Category::Fano,
            4 => Category::WeakFanoDivisorial,
            _ => Category::NotNef,
        }
    }
}

/// `r = m·l − n·f`: pull-back of a degree-`m` curve meeting the blown-up curve
/// in `n` points.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ExtremalRay {
    pub m: i64,
    pub n: i64,
}

impl ExtremalRay {
    pub fn new(m: i64, n: i64) -> Self {
        Self { m, n }
    }

    /// `−K_X · r = 4m − n`.
    pub fn anticanonical_degree(self) -> i64 {
        4 * self.m - self.n
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceClassification {
    pub curve_type: CurveType,
    pub category: Category,
    pub extremal_ray: ExtremalRay,
    /// Number of 4-secant lines on the surface, when finite and computed.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub four_secant_count: Option<i64>,
    /// Whether the curves of class `r` cover the ambient surface.
    pub covering_family: bool,
    /// `33 − 4d + g`.
    pub dim_anti_lower: i64,
    /// Curves on the surface realising the maximal secancy.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub witnesses: Vec<DivisorClass>,
    /// Canonical lattice representative, for the lattice models.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub class: Option<DivisorClass>,
}

/// A smooth curve together with the surface carrying it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "surface", rename_all = "kebab-case")]
pub enum AmbientCurve {
    Plane {
        d: i64,
    },
    /// Bidegree `(a, b)` with `a ≥ b ≥ 1`, `a ≥ 2`.
    SmoothQuadric {
        a: i64,
        b: i64,
    },
    /// `C ~ a·s + (2a + e)·f₀` on the resolution `F₂` of the cone.
    QuadricCone {
        a: i64,
        e: i64,
    },
    NormalCubic {
        class: DivisorClass,
    },
    RationalQuartic {
        class: DivisorClass,
    },
}

impl AmbientCurve {
    pub fn classify(&self) -> Result<SurfaceClassification> {
        match self {
            AmbientCurve::Plane { d } => classify_plane(*d),
            AmbientCurve::SmoothQuadric { a, b } => classify_quadric(*a, *b),
            AmbientCurve::QuadricCone { a, e } => classify_cone(*a, *e),
            AmbientCurve::NormalCubic { class } => classify_cubic(class),
            AmbientCurve::RationalQuartic { class } => {
                classify_quartic_model(class).map(|r| r.classification)
            }
        }
    }
}

pub(crate) fn require_points(c: &DivisorClass, n: usize) -> Result<()> {
    if c.n_points() != n {
        return Err(Error::DimensionMismatch {
            left: c.n_points(),
            right: n,
        });
    }
    Ok(())
}
