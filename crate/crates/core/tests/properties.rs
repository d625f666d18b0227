use proptest::prelude::*;
use wfano_core::lattice::{adjunction_genus, cremona_normalize, intersect, quadratic_move};
use wfano_core::numerics::{ci_genus, k3, linkage_residual};
use wfano_core::surfaces::{classify_cubic, classify_quartic_model};
use wfano_core::{ArithmeticCurve, CurveType, DivisorClass, LatticeModel, LinkageType};

fn class(n: usize, range: std::ops::RangeInclusive<i64>) -> impl Strategy<Value = DivisorClass> {
    (range.clone(), prop::collection::vec(range, n))
        .prop_map(|(k, mults)| DivisorClass::new(k, mults))
}

fn cubic_class() -> impl Strategy<Value = DivisorClass> {
    class(6, -6..=12)
}

proptest! {
    #[test]
    fn intersection_is_symmetric_and_bilinear(
        a in class(6, -9..=9),
        b in class(6, -9..=9),
        c in class(6, -9..=9),
        s in -5i64..=5,
    ) {
        let ab = intersect(&a, &b).unwrap();
        prop_assert_eq!(ab, intersect(&b, &a).unwrap());
        let lhs = intersect(&(&(s * &a) + &c), &b).unwrap();
        prop_assert_eq!(lhs, s * ab + intersect(&c, &b).unwrap());
    }

    #[test]
    fn quadratic_move_is_an_isometry_fixing_k(a in cubic_class(), b in cubic_class()) {
        let k = DivisorClass::canonical(6);
        let (qa, qb) = (quadratic_move(&a), quadratic_move(&b));
        prop_assert_eq!(intersect(&qa, &qb).unwrap(), intersect(&a, &b).unwrap());
        prop_assert_eq!(intersect(&qa, &k).unwrap(), intersect(&a, &k).unwrap());
        prop_assert_eq!(quadratic_move(&qa), a);
    }

    #[test]
    fn cremona_normal_form_is_canonical(a in cubic_class(), perm in Just((0..6).collect::<Vec<usize>>()).prop_shuffle()) {
        let model = LatticeModel::cubic();
        let k = DivisorClass::canonical(6);
        let n = cremona_normalize(&a).unwrap();
        let m = n.mults();
        prop_assert!(m.windows(2).all(|w| w[0] >= w[1]));
        prop_assert!(n.degree() >= m[0] + m[1] + m[2]);
        prop_assert_eq!(n.self_intersection(), a.self_intersection());
        prop_assert_eq!(intersect(&n, &k).unwrap(), intersect(&a, &k).unwrap());
        prop_assert_eq!(
            adjunction_genus(&n, &model).unwrap(),
            adjunction_genus(&a, &model).unwrap()
        );
        let shuffled = DivisorClass::new(a.degree(), perm.iter().map(|&i| a.mults()[i]).collect());
        prop_assert_eq!(cremona_normalize(&shuffled).unwrap(), n.clone());
        prop_assert_eq!(cremona_normalize(&quadratic_move(&a)).unwrap(), n);
    }

    #[test]
    fn adjunction_genus_is_integral(a in cubic_class()) {
        let model = LatticeModel::cubic();
        let k = DivisorClass::canonical(6);
        let twice = a.self_intersection() + intersect(&a, &k).unwrap();
        prop_assert_eq!(twice % 2, 0);
        prop_assert_eq!(adjunction_genus(&a, &model).unwrap(), twice / 2 + 1);
    }

    #[test]
    fn cubic_classification_is_cremona_invariant(a in class(6, 0..=12)) {
        let direct = classify_cubic(&a);
        let moved = classify_cubic(&quadratic_move(&a));
        match (direct, moved) {
            (Ok(x), Ok(y)) => {
                prop_assert_eq!(x.category, y.category);
                prop_assert_eq!(x.curve_type, y.curve_type);
                prop_assert_eq!(x.four_secant_count, y.four_secant_count);
                prop_assert_eq!(x.class, y.class);
            }
            (Err(x), Err(y)) => {
                prop_assert_eq!(std::mem::discriminant(&x), std::mem::discriminant(&y))
            }
            (x, y) => prop_assert!(false, "{:?} vs {:?}", x, y),
        }
    }

    #[test]
    fn linkage_is_an_involution(g in -1i64..=40, d in 0i64..=30, a in 1i64..=8, b in 1i64..=8) {
        let t = LinkageType::new(a, b).unwrap();
        let c = ArithmeticCurve::new(g, d);
        if let Ok(r) = linkage_residual(c, t) {
            prop_assert_eq!(r.degree + c.degree, a * b);
            if let Ok(back) = linkage_residual(r, t) {
                prop_assert_eq!(back, c);
            }
        }
    }

    #[test]
    fn ci_genus_is_symmetric(a in 1i64..=12, b in 1i64..=12) {
        let ab = ci_genus(LinkageType::new(a, b).unwrap()).unwrap();
        prop_assert_eq!(ab, ci_genus(LinkageType::new(b, a).unwrap()).unwrap());
        prop_assert_eq!(2 * (ab - 1), a * b * (a + b - 4));
    }

    #[test]
    fn k3_sign_moves_with_degree_and_genus(g in 0i64..=60, d in 1i64..=40) {
        let c = CurveType::new(g, d).unwrap();
        prop_assert_eq!(k3(c), 62 - 8 * d + 2 * g);
        prop_assert!(k3(CurveType::new(g, d + 1).unwrap()) < k3(c));
        prop_assert!(k3(CurveType::new(g + 1, d).unwrap()) > k3(c));
    }

    #[test]
    fn quartic_model_genus_and_degree(k in 1i64..=12, seed in prop::collection::vec(0i64..=4, 12)) {
        // force Σm = 3k − 1 by adjusting the multiplicities
        let mut mults = seed;
        let target = 3 * k - 1;
        let mut sum: i64 = mults.iter().sum();
        let mut i = 0;
        while sum != target && i < 200 {
            let j = i % 12;
            if sum < target && mults[j] < 4 {
                mults[j] += 1;
                sum += 1;
            } else if sum > target && mults[j] > 0 {
                mults[j] -= 1;
                sum -= 1;
            }
            i += 1;
        }
        prop_assume!(sum == target);
        let c = DivisorClass::new(k, mults.clone());
        if let Ok(report) = classify_quartic_model(&c) {
            let ct = report.classification.curve_type;
            prop_assert_eq!(ct.degree(), k + 1);
            let squares: i64 = mults.iter().map(|m| m * m).sum();
            prop_assert_eq!(2 * ct.genus() - 2, k * k - squares - 3 * k + target);
        }
    }
}
