//! Property tests for the object algebra and the code arithmetic.

use std::collections::BTreeSet;

use proptest::prelude::*;

use fusion_atlas::atlas::w2;
use fusion_atlas::codes::{admissible, lowest_weight_x1s, BinaryCode};
use fusion_atlas::{Label, ObjectSum};

const W2_NAMES: [&str; 6] = ["X_1^+", "X_1^-", "X_2^+", "X_2^-", "P_1^+", "P_1^-"];

fn w2_label() -> impl Strategy<Value = Label> {
    (0usize..6).prop_map(|i| Label::atom(W2_NAMES[i]).unwrap())
}

fn w2_sum() -> impl Strategy<Value = ObjectSum> {
    proptest::collection::vec((0usize..6, 1u64..4), 0..5).prop_map(|terms| {
        terms
            .into_iter()
            .map(|(i, m)| (Label::atom(W2_NAMES[i]).unwrap(), m))
            .collect()
    })
}

fn subset(d: usize) -> impl Strategy<Value = BTreeSet<usize>> {
    proptest::collection::btree_set(1..=d, 0..=d)
}

proptest! {
    #[test]
    fn sum_addition_is_commutative_and_associative(
        a in w2_sum(), b in w2_sum(), c in w2_sum()
    ) {
        prop_assert_eq!(a.clone() + b.clone(), b.clone() + a.clone());
        prop_assert_eq!((a.clone() + b.clone()) + c.clone(), a + (b + c));
    }

    #[test]
    fn scalar_multiplication_distributes(a in w2_sum(), b in w2_sum(), k in 0u64..5) {
        prop_assert_eq!((a.clone() + b.clone()).scaled(k), a.scaled(k) + b.scaled(k));
    }

    #[test]
    fn fuse_is_commutative_and_bilinear(a in w2_sum(), b in w2_sum(), c in w2_sum()) {
        let cat = w2();
        prop_assert_eq!(cat.fuse(&a, &b).unwrap(), cat.fuse(&b, &a).unwrap());
        let joint = cat.fuse(&(a.clone() + b.clone()), &c).unwrap();
        let split = cat.fuse(&a, &c).unwrap() + cat.fuse(&b, &c).unwrap();
        prop_assert_eq!(joint, split);
    }

    #[test]
    fn fuse_is_associative_on_sums(a in w2_sum(), b in w2_sum(), c in w2_sum()) {
        let cat = w2();
        let left = cat.fuse(&cat.fuse(&a, &b).unwrap(), &c).unwrap();
        let right = cat.fuse(&a, &cat.fuse(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn dual_is_an_involution_on_sums(a in w2_sum()) {
        let cat = w2();
        prop_assert_eq!(cat.dual(&cat.dual(&a).unwrap()).unwrap(), a);
    }

    #[test]
    fn gr_preserves_length_and_is_additive(a in w2_sum(), b in w2_sum()) {
        let cat = w2();
        let ga = cat.gr(&a).unwrap();
        prop_assert_eq!(ga.total_multiplicity(), cat.length(&a).unwrap());
        let joint = cat.gr(&(a.clone() + b.clone())).unwrap();
        prop_assert_eq!(joint, ga + cat.gr(&b).unwrap());
    }

    #[test]
    fn monodromy_is_bilinear_in_the_current(s in w2_label()) {
        let cat = w2();
        let data = cat.indecomposable(&s).unwrap().clone();
        prop_assume!(data.is_simple);
        let plus = Label::atom("X_1^+").unwrap();
        let minus = Label::atom("X_1^-").unwrap();
        for g1 in [&plus, &minus] {
            for g2 in [&plus, &minus] {
                let g12 = cat.fuse_labels(g1, g2).unwrap();
                let g12 = g12.as_single_label().unwrap().clone();
                let lhs = cat.monodromy(&g12, &s).unwrap();
                let rhs = cat.monodromy(g1, &s).unwrap() + cat.monodromy(g2, &s).unwrap();
                prop_assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn span_is_idempotent(gens in proptest::collection::vec(subset(6), 0..4)) {
        let code = BinaryCode::span(6, &gens).unwrap();
        let regenerated = BinaryCode::span(
            6,
            &code
                .codewords()
                .into_iter()
                .map(|w| w.into_iter().collect())
                .collect::<Vec<_>>(),
        )
        .unwrap();
        prop_assert_eq!(code, regenerated);
    }

    #[test]
    fn even_codes_span_to_even_codes(
        a in proptest::collection::vec(subset(5), 0..4),
        b in proptest::collection::vec(subset(5), 0..4),
    ) {
        let ca = BinaryCode::span(5, &a).unwrap();
        let cb = BinaryCode::span(5, &b).unwrap();
        prop_assume!(ca.is_even() && cb.is_even());
        let mut gens = a;
        gens.extend(b);
        prop_assert!(BinaryCode::span(5, &gens).unwrap().is_even());
    }

    #[test]
    fn all_two_admissibility_equals_evenness(gens in proptest::collection::vec(subset(5), 0..4)) {
        let code = BinaryCode::span(5, &gens).unwrap();
        let report = admissible(&code, &[2; 5]).unwrap();
        prop_assert_eq!(report.admissible(), code.is_even());
    }

    #[test]
    fn lowest_weight_is_additive_on_disjoint_sets(
        s in subset(6),
        t in subset(6),
        p in proptest::collection::vec(2i64..8, 6),
    ) {
        prop_assume!(s.is_disjoint(&t));
        let union: BTreeSet<usize> = s.union(&t).copied().collect();
        let ws = lowest_weight_x1s(&p, &s).unwrap();
        let wt = lowest_weight_x1s(&p, &t).unwrap();
        prop_assert_eq!(ws + wt, lowest_weight_x1s(&p, &union).unwrap());
    }

    #[test]
    fn tuple_labels_round_trip_through_parse(
        parts in proptest::collection::vec("[A-Za-z][A-Za-z0-9_^+-]{0,6}", 1..4)
    ) {
        let label = Label::tuple(parts.clone()).unwrap();
        let reparsed = Label::parse(label.name()).unwrap();
        prop_assert_eq!(reparsed.parts(), &parts[..]);
    }
}
