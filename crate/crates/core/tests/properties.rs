use lieq_core::characters::{
    adjoint_character, dual_character, hom_dim, irreducible_character, tensor_decompose, weyl_dim,
};
use lieq_core::poset::{self, LambdaPoint};
use lieq_core::{LieType, RootSystem, Weight};
use proptest::prelude::*;

const TYPES: &[&str] = &[
    "A1", "A2", "A3", "B2", "B3", "C3", "D4", "D5", "G2", "F4", "E6",
];
const SMALL: &[&str] = &["A1", "A2", "A3", "B2", "C3", "D4", "G2"];

fn lie(s: &str) -> LieType {
    s.parse().unwrap()
}

fn typed_weight(
    types: &'static [&'static str],
    lo: i32,
    hi: i32,
) -> impl Strategy<Value = (RootSystem, Weight)> {
    prop::sample::select(types).prop_flat_map(move |t| {
        let n = lie(t).rank();
        prop::collection::vec(lo..=hi, n)
            .prop_map(move |l| (RootSystem::new(lie(t)), Weight::new(&l)))
    })
}

fn typed_pair(
    types: &'static [&'static str],
    hi: i32,
) -> impl Strategy<Value = (RootSystem, Weight, Weight)> {
    prop::sample::select(types).prop_flat_map(move |t| {
        let n = lie(t).rank();
        (
            prop::collection::vec(0..=hi, n),
            prop::collection::vec(0..=hi, n),
        )
            .prop_map(move |(a, b)| (RootSystem::new(lie(t)), Weight::new(&a), Weight::new(&b)))
    })
}

fn typed_point(types: &'static [&'static str]) -> impl Strategy<Value = (RootSystem, LambdaPoint)> {
    prop::sample::select(types).prop_flat_map(|t| {
        let n = lie(t).rank();
        (prop::collection::vec(0..=2, n), 0u32..=2).prop_map(move |(l, g)| {
            (
                RootSystem::new(lie(t)),
                LambdaPoint::new(Weight::new(&l), g),
            )
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn dominant_representative_is_idempotent_and_orbit_constant((rs, w) in typed_weight(TYPES, -3, 3)) {
        let d = rs.dominant_representative(&w);
        prop_assert!(d.weight.is_dominant());
        prop_assert_eq!(rs.dominant_representative(&d.weight).weight, d.weight);
        prop_assert_eq!(rs.dominant_representative(&d.weight).steps, 0);
        for i in 0..rs.rank() {
            let mut v = w;
            rs.reflect(i, &mut v);
            prop_assert_eq!(rs.dominant_representative(&v).weight, d.weight);
        }
    }

    #[test]
    fn orbit_size_divides_weyl_order((rs, w) in typed_weight(TYPES, 0, 2)) {
        let orbit = rs.weyl_orbit(&w).unwrap();
        prop_assert_eq!(orbit.len() as u64, rs.orbit_size(&w));
        prop_assert_eq!(rs.weyl_order() % orbit.len() as u64, 0);
        let distinct: std::collections::BTreeSet<_> = orbit.iter().collect();
        prop_assert_eq!(distinct.len(), orbit.len());
    }

    #[test]
    fn dual_weight_is_an_involution((rs, w) in typed_weight(TYPES, 0, 3)) {
        let d = rs.dual_weight(&w);
        prop_assert!(d.is_dominant());
        prop_assert_eq!(rs.dual_weight(&d), w);
    }

    #[test]
    fn freudenthal_dimension_matches_weyl((rs, w) in typed_weight(SMALL, 0, 2)) {
        let c = irreducible_character(&rs, &w).unwrap();
        prop_assert_eq!(c.dim(&rs) as u128, weyl_dim(&rs, &w).unwrap());
        prop_assert_eq!(c.get(&w), 1);
    }

    #[test]
    fn tensor_products_commute((rs, a, b) in typed_pair(SMALL, 2)) {
        let va = irreducible_character(&rs, &a).unwrap();
        let vb = irreducible_character(&rs, &b).unwrap();
        prop_assert_eq!(tensor_decompose(&rs, &va, &b).unwrap(), tensor_decompose(&rs, &vb, &a).unwrap());
    }

    #[test]
    fn k_lambda_identity((rs, w) in typed_weight(SMALL, 0, 3)) {
        let g = adjoint_character(&rs);
        prop_assert_eq!(hom_dim(&rs, &w, &g, &w).unwrap(), w.support_size() as u64);
    }

    #[test]
    fn hom_dim_dualities((rs, a, b) in typed_pair(&["A2", "A3", "D5", "E6"], 2)) {
        let x = irreducible_character(&rs, &Weight::fundamental(rs.rank(), 1)).unwrap();
        let xd = dual_character(&rs, &x);
        let h = hom_dim(&rs, &a, &x, &b).unwrap();
        prop_assert_eq!(h, hom_dim(&rs, &b, &xd, &a).unwrap());
        prop_assert_eq!(h, hom_dim(&rs, &rs.dual_weight(&a), &xd, &rs.dual_weight(&b)).unwrap());
    }

    #[test]
    fn covers_and_cocovers_are_adjoint((rs, p) in typed_point(TYPES)) {
        for q in poset::covers(&rs, &p) {
            prop_assert!(poset::cocovers(&rs, &q).contains(&p));
            prop_assert!(poset::leq(&rs, &p, &q));
        }
        for q in poset::cocovers(&rs, &p) {
            prop_assert!(poset::covers(&rs, &q).contains(&p));
        }
        prop_assert_eq!(poset::cocovers(&rs, &p).is_empty(), p.grade == 0);
    }

    #[test]
    fn leq_is_a_partial_order((rs, p) in typed_point(SMALL), seed in any::<u64>()) {
        // walk up twice to get p ≤ q ≤ s
        let walk = |start: LambdaPoint, mut x: u64| {
            let mut cur = start;
            for _ in 0..2 {
                let up = poset::covers(&rs, &cur);
                cur = up[(x % up.len() as u64) as usize];
                x /= 7;
            }
            cur
        };
        let q = walk(p, seed);
        let s = walk(q, seed / 49);
        prop_assert!(poset::leq(&rs, &p, &p));
        prop_assert!(poset::leq(&rs, &p, &q) && poset::leq(&rs, &q, &s) && poset::leq(&rs, &p, &s));
        prop_assert!(!poset::leq(&rs, &q, &p));
        let iv = poset::interval(&rs, &p, &s).unwrap();
        prop_assert!(iv.contains(&q));
        prop_assert!(iv.iter().all(|x| x.grade >= p.grade && x.grade <= s.grade));
        let closed = lieq_core::GammaSet::new(rs.lie_type(), iv).unwrap();
        prop_assert!(poset::is_interval_closed(&rs, &closed));
    }

    #[test]
    fn sharp_reverses_the_order((rs, p) in typed_point(&["A2", "A3", "D5", "E6", "B2"]), seed in any::<u64>()) {
        let up = poset::covers(&rs, &p);
        let q = up[(seed % up.len() as u64) as usize];
        let k = q.grade + 1;
        let (sp, sq) = (poset::sharp_point(&rs, &p, k), poset::sharp_point(&rs, &q, k));
        prop_assert!(poset::leq(&rs, &sq, &sp));
        prop_assert!(!poset::leq(&rs, &sp, &sq));
        prop_assert_eq!(poset::sharp_point(&rs, &sp, k), p);
    }
}
