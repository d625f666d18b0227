use super::{Category, ExtremalRay, SurfaceClassification};
use crate::error::{Error, Result};
use crate::numerics::{dim_anticanonical, CurveType};

fn covering(curve_type: CurveType, ray_n: i64, covering_family: bool) -> SurfaceClassification {
    SurfaceClassification {
        curve_type,
        category: Category::of_covering_ray(ray_n),
        extremal_ray: ExtremalRay::new(1, ray_n),
        four_secant_count: None,
        covering_family,
        dim_anti_lower: dim_anticanonical(curve_type),
        witnesses: Vec::new(),
        class: None,
    }
}

/// Smooth plane curve of degree `d`: `r = l − d·f`, swept by the lines of the
/// plane.
pub fn classify_plane(d: i64) -> Result<SurfaceClassification> {
    if d < 1 {
        return Err(Error::InvalidCurve {
            genus: 0,
            degree: d,
            reason: "plane curve degree must be positive",
        });
    }
    let curve_type = CurveType::new((d - 1) * (d - 2) / 2, d)?;
    Ok(covering(curve_type, d, d >= 2))
}

/// Curve of bidegree `(a, b)` on a smooth quadric: `g = (a−1)(b−1)`,
/// `d = a + b`, `r = l − a·f` (a ruling).
pub fn classify_quadric(a: i64, b: i64) -> Result<SurfaceClassification> {
    if !(b >= 1 && a >= b && a >= 2) {
        return Err(Error::InvalidBidegree { a, b });
    }
    let curve_type = CurveType::new((a - 1) * (b - 1), a + b)?;
    Ok(covering(curve_type, a, true))
}

/// Curve `a·s + (2a + e)·f₀` on the cone, `e ∈ {0, 1}`, not on another
/// quadric: `g = (a−1)(a+e−1)`, `d = 2a + e`, `r = l − (a+e)·f`.
pub fn classify_cone(a: i64, e: i64) -> Result<SurfaceClassification> {
    let admissible = (e == 0 || e == 1) && ((a, e) == (2, 1) || a >= 3);
    if !admissible {
        return Err(Error::InvalidConeClass { a, e });
    }
    let curve_type = CurveType::new((a - 1) * (a + e - 1), 2 * a + e)?;
    Ok(covering(curve_type, a + e, true))
}
