use proptest::prelude::*;

use svreg::{
    cm_regularity, cohomology_x, euler_characteristic, in_regularity_set, is_l_regular_formula,
    is_l_regular_oracle, m_tilde, p_minus, p_plus, regularity_corners, serre_dual, EmbeddingData,
    MultiDegree,
};

fn embedding() -> impl Strategy<Value = EmbeddingData> {
    (1usize..=4).prop_flat_map(|r| {
        (
            prop::collection::vec(1i64..=4, r),
            prop::collection::vec(1i64..=4, r),
        )
            .prop_map(|(l, d)| EmbeddingData::new(l, d).unwrap())
    })
}

fn degree(r: usize, range: i64) -> impl Strategy<Value = MultiDegree> {
    prop::collection::vec(-range..=range, r).prop_map(MultiDegree)
}

fn with_twist_and_point() -> impl Strategy<Value = (EmbeddingData, MultiDegree, MultiDegree)> {
    embedding().prop_flat_map(|e| {
        let r = e.rank();
        (Just(e), degree(r, 12), degree(r, 12))
    })
}

proptest! {
    #[test]
    fn formula_matches_oracle((e, m, p) in with_twist_and_point()) {
        prop_assert_eq!(
            is_l_regular_formula(&e, &m, &p).unwrap(),
            is_l_regular_oracle(&e, &m, &p).unwrap()
        );
    }

    #[test]
    fn corners_match_formula((e, m, p) in with_twist_and_point()) {
        prop_assert_eq!(
            in_regularity_set(&e, &m, &p).unwrap(),
            is_l_regular_formula(&e, &m, &p).unwrap()
        );
    }

    #[test]
    fn corners_are_regular((e, m, _p) in with_twist_and_point()) {
        for c in regularity_corners(&e, &m, false).unwrap() {
            prop_assert!(is_l_regular_oracle(&e, &m, &c.corner).unwrap());
        }
    }

    #[test]
    fn regularity_set_is_upward_closed((e, m, p) in with_twist_and_point()) {
        if is_l_regular_formula(&e, &m, &p).unwrap() {
            for k in 0..e.rank() {
                let mut q = p.clone();
                q.0[k] += 1;
                prop_assert!(is_l_regular_formula(&e, &m, &q).unwrap());
            }
        }
    }

    #[test]
    fn cm_regularity_is_minimal((e, m, _p) in with_twist_and_point()) {
        let reg = cm_regularity(&e, &m).unwrap();
        let at = |q: i64| MultiDegree(e.degrees().iter().map(|d| q * d).collect());
        prop_assert!(is_l_regular_oracle(&e, &m, &at(reg)).unwrap());
        prop_assert!(!is_l_regular_oracle(&e, &m, &at(reg - 1)).unwrap());
        for q in reg..reg + 4 {
            prop_assert!(is_l_regular_oracle(&e, &m, &at(q)).unwrap());
        }
    }

    #[test]
    fn cohomology_duality_and_euler((e, a, _p) in with_twist_and_point()) {
        let h = cohomology_x(&e, &a).unwrap();
        let dual = cohomology_x(&e, &serre_dual(&e, &a).unwrap()).unwrap();
        for i in 0..=e.n() {
            prop_assert_eq!(h.h(i), dual.h(e.n() - i));
        }
        prop_assert_eq!(h.signed_total(), euler_characteristic(&e, &a).unwrap());
    }

    #[test]
    fn endpoint_duality((e, m, _p) in with_twist_and_point()) {
        let dual = m_tilde(&e, &m).unwrap();
        prop_assert_eq!(m_tilde(&e, &dual).unwrap(), m.clone());
        prop_assert_eq!(p_minus(&e, &m).unwrap(), -p_plus(&e, &dual).unwrap());
        prop_assert!(p_minus(&e, &m).unwrap() < p_plus(&e, &m).unwrap());
    }

    #[test]
    fn regularity_is_subadditive((e, m, m2) in with_twist_and_point()) {
        let sum = m.checked_add(&m2).unwrap();
        prop_assert!(
            cm_regularity(&e, &m).unwrap() + cm_regularity(&e, &m2).unwrap()
                >= cm_regularity(&e, &sum).unwrap()
        );
    }
}
