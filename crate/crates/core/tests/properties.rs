//! Property tests for the algebraic, topological and combinatorial invariants.

use g2skein::acceptance::random_word;
use g2skein::enumerate::{
    berele, enumerate_acyclic, enumerate_nonpositive_curvature, freeway_to_matching,
    matching_to_freeway, max_rows, Matching,
};
use g2skein::planar::{braid_closure, rotate_boundary, Diagram, MoveKind};
use g2skein::skein::{reduce_closed, RuleSet};
use g2skein::{Exponent, Scalar};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn laurent() -> impl Strategy<Value = Scalar> {
    prop::collection::vec((-3i64..=3, -4i64..=4), 0..4).prop_map(|terms| {
        terms.into_iter().fold(Scalar::zero(), |acc, (c, e)| {
            &acc + &(&Scalar::int(c) * &Scalar::q_pow(Exponent::from_integer(e)))
        })
    })
}

fn scalar() -> impl Strategy<Value = Scalar> {
    (
        laurent(),
        laurent().prop_filter("nonzero", |d| !d.is_zero()),
    )
        .prop_map(|(n, d)| n.div(&d).unwrap())
}

fn closed_diagram() -> impl Strategy<Value = Diagram> {
    (any::<u64>(), 2usize..=3, any::<bool>()).prop_map(|(seed, width, verts)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        braid_closure(width, &random_word(&mut rng, width, 3, verts)).unwrap()
    })
}

fn matching(max_pairs: usize) -> impl Strategy<Value = Matching> {
    (0..=max_pairs).prop_flat_map(matching_of)
}

fn matching_of(n: usize) -> impl Strategy<Value = Matching> {
    Just((1..=2 * n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|p| {
            let pairs: Vec<(usize, usize)> = p.chunks(2).map(|c| (c[0], c[1])).collect();
            Matching::from_pairs(p.len(), &pairs).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            prop_assert!(a.div(&a).unwrap().is_one());
        }
    }

    #[test]
    fn bar_is_an_involutive_automorphism(a in scalar(), b in scalar()) {
        prop_assert_eq!(a.bar().bar(), a.clone());
        prop_assert_eq!((&a * &b).bar(), &a.bar() * &b.bar());
        prop_assert_eq!((&a + &b).bar(), &a.bar() + &b.bar());
    }

    #[test]
    fn parse_display_round_trip(a in scalar()) {
        prop_assert_eq!(Scalar::parse(&a.to_string()).unwrap(), a);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn diagrams_are_planar_and_codes_are_isomorphism_invariants(d in closed_diagram()) {
        prop_assert!(d.check_planar().is_ok());
        let m = d.mirror().mirror();
        prop_assert!(m.isomorphic(&d));
        prop_assert_eq!(m.canonical_code(), d.canonical_code());
    }

    #[test]
    fn moves_preserve_the_bracket(d in closed_diagram(), seed in any::<u64>()) {
        let rs = RuleSet::g2();
        let v = reduce_closed(&d, &rs).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for kind in MoveKind::ALL {
            let sites = d.move_sites(kind);
            if sites.is_empty() || d.count_kind(g2skein::planar::VertexKind::Crossing) > 3 {
                continue;
            }
            let m = &sites[rng.gen_range(0..sites.len())];
            let e = d.apply_move(m).unwrap();
            prop_assert!(e.check_planar().is_ok());
            prop_assert_eq!(reduce_closed(&e, &rs).unwrap(), v.clone(), "{:?}", kind);
        }
    }

    #[test]
    fn mirror_is_bar(d in closed_diagram()) {
        let rs = RuleSet::g2();
        prop_assert_eq!(reduce_closed(&d.mirror(), &rs).unwrap(), reduce_closed(&d, &rs).unwrap().bar());
    }

    #[test]
    fn bracket_is_multiplicative(a in closed_diagram(), b in closed_diagram()) {
        let rs = RuleSet::g2();
        let ab = reduce_closed(&a.disjoint_union(&b), &rs).unwrap();
        prop_assert_eq!(ab, &reduce_closed(&a, &rs).unwrap() * &reduce_closed(&b, &rs).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn berele_rows_detect_sixpoint(m in matching(6)) {
        prop_assert_eq!(max_rows(&berele(&m)) <= 2, m.satisfies_sixpoint());
    }

    #[test]
    fn berele_is_injective(pair in (0usize..=5).prop_flat_map(|n| (matching_of(n), matching_of(n)))) {
        let (m1, m2) = pair;
        prop_assert_eq!(berele(&m1) == berele(&m2), m1 == m2);
    }

    #[test]
    fn freeway_round_trip(m in matching(5)) {
        match matching_to_freeway(&m) {
            Ok(d) => {
                prop_assert!(m.satisfies_sixpoint());
                prop_assert_eq!(freeway_to_matching(&d).unwrap(), m);
            }
            Err(_) => prop_assert!(!m.satisfies_sixpoint()),
        }
    }
}

#[test]
fn nonpositive_curvature_equals_acyclic_for_small_boundaries() {
    for n in 0..=5 {
        let a: Vec<_> = enumerate_acyclic(n)
            .iter()
            .map(|s| s.diagram.canonical_code())
            .collect();
        let b: Vec<_> = enumerate_nonpositive_curvature(n)
            .iter()
            .map(|s| s.diagram.canonical_code())
            .collect();
        let (mut a, mut b) = (a, b);
        a.sort();
        b.sort();
        assert_eq!(a, b, "n = {n}");
    }
}

#[test]
fn web_lists_are_closed_under_rotation() {
    for n in 3..=6 {
        let ws = enumerate_nonpositive_curvature(n);
        let codes: std::collections::HashSet<_> =
            ws.iter().map(|s| s.diagram.canonical_code()).collect();
        assert_eq!(codes.len(), ws.len());
        for w in &ws {
            assert!(codes.contains(&rotate_boundary(&w.diagram, 1).canonical_code()));
        }
    }
}

#[test]
fn shipped_rule_files_match_the_builtins() {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("rules");
    let g2 = RuleSet::from_json(&std::fs::read_to_string(dir.join("g2.rules")).unwrap()).unwrap();
    assert_eq!(g2, RuleSet::g2());
    let a1 = RuleSet::from_json(&std::fs::read_to_string(dir.join("a1.rules")).unwrap()).unwrap();
    assert_eq!(a1, RuleSet::a1());
}
