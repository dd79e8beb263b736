use std::collections::BTreeSet;

use gcq_core::polytope::{
    contains, contains_interior, count_integral_points, count_interior_points, dual_weight,
    enumerate_integral_points, enumerate_interior_points_capped, weyl_dim, DominantWeight,
    RationalPoint, DEFAULT_CAP,
};
use num_bigint::BigUint;
use proptest::prelude::*;

fn weight_strategy() -> impl Strategy<Value = DominantWeight> {
    proptest::collection::vec(-4i64..=4, 1..=4).prop_map(|mut a| {
        a.sort_by(|x, y| y.cmp(x));
        DominantWeight::new(a).unwrap()
    })
}

/// Independent oracle: every integer vector in the bounding box, filtered
/// by the interlacing inequalities.
fn brute_force_points(alpha: &DominantWeight, strict: bool) -> BTreeSet<Vec<i64>> {
    let n = alpha.n();
    let dim = n * (n - 1) / 2;
    let lo = *alpha.entries().last().unwrap();
    let hi = alpha.entries()[0];
    let mut out = BTreeSet::new();
    let mut cur = vec![lo; dim];
    loop {
        let p = RationalPoint::from_ints(&cur);
        let inside = if strict {
            contains_interior(alpha, &p).unwrap()
        } else {
            contains(alpha, &p).unwrap()
        };
        if inside {
            out.insert(cur.clone());
        }
        let mut k = dim;
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            if cur[k] < hi {
                cur[k] += 1;
                for c in cur[k + 1..].iter_mut() {
                    *c = lo;
                }
                break;
            }
        }
    }
}

#[test]
fn enumeration_matches_brute_force_box() {
    for a in [
        vec![2, 1, 0],
        vec![2, 0, -1],
        vec![1, 1, 0],
        vec![3, 0],
        vec![1, 0, 0, -1],
    ] {
        let alpha = DominantWeight::new(a).unwrap();
        let got: Vec<Vec<i64>> = enumerate_integral_points(&alpha)
            .unwrap()
            .iter()
            .map(|p| p.lower())
            .collect();
        let want: Vec<Vec<i64>> = brute_force_points(&alpha, false).into_iter().collect();
        assert_eq!(got, want);

        let interior: Vec<Vec<i64>> = enumerate_interior_points_capped(&alpha, DEFAULT_CAP)
            .unwrap()
            .iter()
            .map(|p| p.lower())
            .collect();
        let want: Vec<Vec<i64>> = brute_force_points(&alpha, true).into_iter().collect();
        assert_eq!(interior, want);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn count_equals_weyl(alpha in weight_strategy()) {
        prop_assert_eq!(count_integral_points(&alpha), weyl_dim(&alpha));
    }

    #[test]
    fn dual_is_an_involution(alpha in weight_strategy()) {
        prop_assert_eq!(dual_weight(&dual_weight(&alpha)), alpha.clone());
        prop_assert_eq!(count_integral_points(&dual_weight(&alpha)), count_integral_points(&alpha));
    }

    #[test]
    fn translation_invariance(alpha in weight_strategy(), c in -5i64..=5) {
        prop_assert_eq!(count_integral_points(&alpha.shifted(c)), count_integral_points(&alpha));
    }

    #[test]
    fn enumeration_agrees_with_count(alpha in weight_strategy()) {
        let pats = enumerate_integral_points(&alpha).unwrap();
        prop_assert_eq!(BigUint::from(pats.len()), count_integral_points(&alpha));
        let interior = enumerate_interior_points_capped(&alpha, DEFAULT_CAP).unwrap();
        prop_assert_eq!(BigUint::from(interior.len()), count_interior_points(&alpha));
        for p in &pats {
            let point = RationalPoint::from_ints(&p.lower());
            prop_assert!(contains(&alpha, &point).unwrap());
            let strict = p.rows().windows(2).all(|w| {
                (0..w[1].len()).all(|k| w[0][k] > w[1][k] && w[1][k] > w[0][k + 1])
            });
            prop_assert_eq!(contains_interior(&alpha, &point).unwrap(), strict);
        }
        let mut sorted: Vec<Vec<i64>> = pats.iter().map(|p| p.lower()).collect();
        let original = sorted.clone();
        sorted.sort();
        prop_assert_eq!(original, sorted);
    }
}
