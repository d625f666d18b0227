//! Curves on a normal rational cubic, modelled on the blow-up of six points.
//!
//! Curves on the cubic with negative `−K_X`-degree are sums of lines, so the
//! extremal ray is `l − a·f` with `a` the largest secancy of one of the 27
//! lines. When `a = 4` the restriction `A = −4K − C` of `−K_X` to the surface
//! decides the anticanonical morphism: `A² > 0` leaves finitely many
//! `K`-trivial curves (small), `A² = 0` contracts the surface (divisorial).

use super::{require_points, Category, ExtremalRay, SurfaceClassification};
use crate::error::{Error, Result};
use crate::lattice::{
    adjunction_genus, cremona_normalize, intersect, is_effective_cubic, twenty_seven_lines,
    DivisorClass, LatticeModel,
};
use crate::numerics::{dim_anticanonical, CurveType};

/// `(−4K − C)²`, which equals `46 − 7d + 2g`.
pub fn restricted_anticanonical_square(c: &DivisorClass) -> Result<i64> {
    require_points(c, 6)?;
    let minus_four_k = 4 * &DivisorClass::anticanonical(6);
    Ok(minus_four_k.checked_sub(c)?.self_intersection())
}

pub fn classify_cubic(c: &DivisorClass) -> Result<SurfaceClassification> {
    require_points(c, 6)?;
    let class = cremona_normalize(c)?;
    let model = LatticeModel::cubic();
    let anti = model.hyperplane();
    let degree = intersect(&class, anti)?;
    if degree < 1 {
        return Err(Error::InvalidClass(format!(
            "{c} has degree {degree} on the cubic"
        )));
    }
    let residual = (2 * anti).checked_sub(&class)?;
    if is_effective_cubic(&residual)? {
        return Err(Error::QuadricContainment);
    }
    let genus = adjunction_genus(&class, &model)?;
    if genus < 0 {
        return Err(Error::InvalidClass(format!(
            "{c} has negative arithmetic genus {genus}"
        )));
    }
    let curve_type = CurveType::new(genus, degree)?;

    let lines = twenty_seven_lines();
    let secancies = lines
        .iter()
        .map(|line| intersect(line, &class))
        .collect::<Result<Vec<_>>>()?;
    let max = secancies.iter().copied().max().unwrap_or(0);
    let category = match max {
        ..=3 => Category::Fano,
        4 if restricted_anticanonical_square(&class)? > 0 => Category::WeakFanoSmall,
        4 => Category::WeakFanoDivisorial,
        _ => Category::NotNef,
    };
    let witnesses = lines
        .iter()
        .zip(&secancies)
        .filter(|(_, &s)| s == max)
        .map(|(line, _)| line.clone())
        .collect();

    Ok(SurfaceClassification {
        curve_type,
        category,
        extremal_ray: ExtremalRay::new(1, max),
        four_secant_count: Some(secancies.iter().filter(|&&s| s == 4).count() as i64),
        covering_family: category == Category::WeakFanoDivisorial,
        dim_anti_lower: dim_anticanonical(curve_type),
        witnesses,
        class: Some(class),
    })
}

/// All canonical classes `(k; m₁ ≥ … ≥ m₆ ≥ 0)`, `k ≥ m₁ + m₂ + m₃`, with no
/// line of the normal form meeting the curve more than four times
/// (`m₁ ≤ 4`, `k − m₅ − m₆ ≤ 4`, `2k − m₂ − … − m₆ ≤ 4`) and the curve not on
/// a quadric.
///
/// Output is ordered by category (fano, small, divisorial), then `(g, d)`.
pub fn enumerate_cubic_cases() -> Vec<SurfaceClassification> {
    let mut out = Vec::new();
    // k − m₅ − m₆ ≤ 4 with mᵢ ≤ 4 bounds k by 12.
    for k in 0..=12 {
        for_each_non_increasing(6, 4, &mut |mults| {
            let m = mults;
            if k < m[0] + m[1] + m[2] || k - m[4] - m[5] > 4 {
                return;
            }
            if 2 * k - m[1..].iter().sum::<i64>() > 4 {
                return;
            }
            if 3 * k - m.iter().sum::<i64>() < 1 {
                return;
            }
            match classify_cubic(&DivisorClass::new(k, m.to_vec())) {
                Ok(c) => out.push(c),
                Err(Error::QuadricContainment) => {}
                Err(e) => unreachable!("enumerated class failed to classify: {e}"),
            }
        });
    }
    out.sort_by(|a, b| {
        (a.category, a.curve_type, &a.class).cmp(&(b.category, b.curve_type, &b.class))
    });
    out
}

/// Calls `f` on every non-increasing sequence of `len` integers in `0..=max`.
fn for_each_non_increasing(len: usize, max: i64, f: &mut impl FnMut(&[i64])) {
    fn rec(buf: &mut Vec<i64>, len: usize, cap: i64, f: &mut impl FnMut(&[i64])) {
        if buf.len() == len {
            f(buf);
            return;
        }
        for v in (0..=cap).rev() {
            buf.push(v);
            rec(buf, len, v, f);
            buf.pop();
        }
    }
    rec(&mut Vec::with_capacity(len), len, max, f);
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cls(s: &str) -> DivisorClass {
        s.parse().unwrap()
    }

    #[test]
    fn fano_cubic_example() {
        let c = classify_cubic(&cls("4;1,1,1,1,1,1")).unwrap();
        assert_eq!(c.category, Category::Fano);
        assert_eq!(c.curve_type, CurveType::new(3, 6).unwrap());
        assert_eq!(c.dim_anti_lower, 12);
        assert_eq!(c.extremal_ray, ExtremalRay::new(1, 3));
    }

    #[test]
    fn small_cubic_example() {
        let c = classify_cubic(&cls("2;1,0,0,0,0,0")).unwrap();
        assert_eq!(c.category, Category::WeakFanoSmall);
        assert_eq!(c.curve_type, CurveType::new(0, 5).unwrap());
        assert_eq!(c.four_secant_count, Some(1));
        assert_eq!(c.witnesses, vec![cls("2;0,1,1,1,1,1")]);
    }

    #[test]
    fn divisorial_cubic_example() {
        let c = classify_cubic(&cls("12;4,4,4,4,4,4")).unwrap();
        assert_eq!(c.category, Category::WeakFanoDivisorial);
        assert_eq!(c.curve_type, CurveType::new(19, 12).unwrap());
        assert_eq!(c.four_secant_count, Some(27));
        assert!(c.covering_family);
        assert_eq!(
            restricted_anticanonical_square(&cls("12;4,4,4,4,4,4")).unwrap(),
            0
        );
    }

    #[test]
    fn five_secant_line() {
        // The (15,11) curve of degree 10 with multiplicities (4,3,3,3,3,3).
        let c = classify_cubic(&cls("10;4,3,3,3,3,3")).unwrap();
        assert_eq!(c.curve_type, CurveType::new(15, 11).unwrap());
        assert_eq!(c.category, Category::NotNef);
        assert_eq!(c.extremal_ray, ExtremalRay::new(1, 5));
        // (3,3,3,3,2,2) in degree 9 gives (14,11) with a 5-secant line too.
        let c = classify_cubic(&cls("9;3,3,3,3,2,2")).unwrap();
        assert_eq!(c.curve_type, CurveType::new(14, 11).unwrap());
        assert_eq!(c.category, Category::NotNef);
    }

    #[test]
    fn rejections() {
        assert_eq!(
            classify_cubic(&cls("1;1,0,0,0,0,0")),
            Err(Error::QuadricContainment)
        );
        assert_eq!(
            classify_cubic(&cls("1;0,0,0,0,0,0")),
            Err(Error::QuadricContainment)
        );
        assert!(classify_cubic(&cls("3;1,1,1,1,0,0")).is_ok());
        assert!(matches!(
            classify_cubic(&cls("0;0,0,0,0,0,0")),
            Err(Error::InvalidClass(_))
        ));
        assert!(matches!(
            classify_cubic(&cls("4;1,1,1")),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn normalization_before_classification() {
        let a = classify_cubic(&cls("3;2,1,1,0,0,0")).unwrap();
        let b = classify_cubic(&cls("2;0,0,0,0,0,1")).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn restricted_square_formula() {
        for row in enumerate_cubic_cases() {
            let (g, d) = (row.curve_type.genus(), row.curve_type.degree());
            let class = row.class.as_ref().unwrap();
            assert_eq!(
                restricted_anticanonical_square(class).unwrap(),
                46 - 7 * d + 2 * g
            );
        }
    }

    #[test]
    fn enumeration_size() {
        let rows = enumerate_cubic_cases();
        assert_eq!(rows.len(), 16);
        let count = |cat| rows.iter().filter(|r| r.category == cat).count();
        assert_eq!(count(Category::Fano), 4);
        assert_eq!(count(Category::WeakFanoSmall), 9);
        assert_eq!(count(Category::WeakFanoDivisorial), 3);
    }
}
