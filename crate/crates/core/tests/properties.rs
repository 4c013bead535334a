mod common;

use std::collections::BTreeSet;
use std::sync::OnceLock;

use proptest::prelude::*;
use common::{desugar_commutes, small_representatives, term};
use ternalg::classical::classify;
use ternalg::par::Execution;
use ternalg::search::{canonical_form, canonical_system, enumerate_models, SearchConfig, SlotOrder};
use ternalg::structures::{
    check_axiom, find_isomorphism, is_homomorphism, satisfies_all, AxiomId, TernarySystem, BASE_AXIOMS,
    DE_MORGAN_AXIOMS, TERNARY_MV_AXIOMS,
};
use ternalg::terms::parse_term;

fn size_four_models() -> &'static [TernarySystem] {
    static MODELS: OnceLock<Vec<TernarySystem>> = OnceLock::new();
    MODELS.get_or_init(|| {
        [&BASE_AXIOMS[..], &DE_MORGAN_AXIOMS[..], &TERNARY_MV_AXIOMS[..]]
            .iter()
            .flat_map(|ax| enumerate_models(&SearchConfig::new(4, ax)).unwrap().representatives)
            .collect()
    })
}

fn representatives() -> &'static [TernarySystem] {
    static REPS: OnceLock<Vec<TernarySystem>> = OnceLock::new();
    REPS.get_or_init(small_representatives)
}

fn model() -> impl Strategy<Value = TernarySystem> {
    prop::sample::select(size_four_models().to_vec())
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

/// All tables with the search seating that satisfy `axioms`, with no
/// propagation: every completion of the T1-T3 cells is checked directly.
fn unpropagated(n: usize, axioms: &[AxiomId]) -> BTreeSet<Vec<usize>> {
    let (zero, one) = (0, n - 1);
    let idx = |a: usize, b: usize, c: usize| (a * n + b) * n + c;
    let mut pinned = vec![None; n * n * n];
    for a in 0..n {
        for c in 0..n {
            pinned[idx(a, zero, c)] = Some(a);
            pinned[idx(c, one, a)] = Some(a);
            pinned[idx(a, c, a)] = Some(a);
            pinned[idx(zero, a, one)] = Some(a);
        }
    }
    let free: Vec<usize> = (0..n * n * n).filter(|&i| pinned[i].is_none()).collect();
    let base: Vec<usize> = pinned.iter().map(|v| v.unwrap_or(0)).collect();
    (0..n.pow(free.len() as u32))
        .filter_map(|code| {
            let mut t = base.clone();
            let mut k = code;
            for &s in &free {
                t[s] = k % n;
                k /= n;
            }
            let sys = TernarySystem::new(n, zero, one, t).unwrap();
            satisfies_all(&sys, axioms).then(|| sys.table())
        })
        .collect()
}

const EXTRAS: [AxiomId; 10] = [
    AxiomId::T4,
    AxiomId::T5DM,
    AxiomId::BRING,
    AxiomId::T4_1,
    AxiomId::T4_2,
    AxiomId::TMV,
    AxiomId::IDEMP_DOT,
    AxiomId::COMM_DOT,
    AxiomId::PLUS_NILP,
    AxiomId::LEFT_DIST,
];

proptest! {
    #![proptest_config(ProptestConfig { cases: 256, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn print_then_parse_is_identity(t in term(6)) {
        prop_assert_eq!(parse_term(&t.to_string()).unwrap(), t);
    }

    #[test]
    fn desugaring_preserves_values(t in term(5)) {
        for s in representatives() {
            prop_assert!(desugar_commutes(&t, s), "{}", t);
        }
    }

    #[test]
    fn desugar_step_removes_derived_nodes(t in term(5)) {
        let before = t.derived_nodes();
        let after = t.desugar_step().derived_nodes();
        prop_assert!(before == 0 && after == 0 || after < before);
        prop_assert_eq!(t.desugar().derived_nodes(), 0);
    }

    #[test]
    fn canonical_form_is_relabelling_invariant(m in model(), perm in permutation(4)) {
        let image = m.relabel(&perm);
        prop_assert_eq!(canonical_form(&image), canonical_form(&m));
        prop_assert!(find_isomorphism(&canonical_system(&m), &m).is_some());
    }

    #[test]
    fn isomorphism_is_symmetric(a in model(), b in model(), perm in permutation(4)) {
        let ab = find_isomorphism(&a, &b).map(|f| f.map.clone());
        let ba = find_isomorphism(&b, &a).map(|f| f.map.clone());
        prop_assert_eq!(ab.is_some(), ba.is_some());
        prop_assert_eq!(ab.is_some(), canonical_form(&a) == canonical_form(&b));
        if let Some(map) = ab {
            prop_assert!(is_homomorphism(&a, &b, &map));
        }
        let image = a.relabel(&perm);
        let f = find_isomorphism(&a, &image).expect("relabelling is an isomorphism");
        prop_assert!(is_homomorphism(&a, &image, &f.map));
    }

    #[test]
    fn propagation_never_loses_models(mask in 0u16..(1 << EXTRAS.len()), n in 2usize..=3) {
        let mut axioms = vec![AxiomId::T1, AxiomId::T2, AxiomId::T3];
        axioms.extend(EXTRAS.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &a)| a));
        let census = enumerate_models(&SearchConfig::new(n, &axioms)).unwrap();
        prop_assert!(census.complete);
        let found: BTreeSet<Vec<usize>> = census.representatives.iter().map(|s| s.table()).collect();
        prop_assert_eq!(found, unpropagated(n, &axioms));
    }

    #[test]
    fn classify_agrees_with_axiom_checks(m in model()) {
        let row = classify(&m).row();
        let h = |a| check_axiom(&m, a).holds;
        prop_assert_eq!(row, [
            h(AxiomId::T1) && h(AxiomId::T2) && h(AxiomId::T3),
            h(AxiomId::T4),
            h(AxiomId::BOOL_COMPL),
            h(AxiomId::IDEMP_DOT),
            h(AxiomId::LEFT_DIST),
        ]);
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn census_ignores_execution_order_and_split(
        which in 0usize..3,
        order in prop::sample::select(vec![SlotOrder::Planes, SlotOrder::Lex, SlotOrder::MiddleFirst]),
        split in 0usize..4,
        iso in any::<bool>(),
    ) {
        let axioms = [&BASE_AXIOMS[..], &DE_MORGAN_AXIOMS[..], &TERNARY_MV_AXIOMS[..]][which];
        let n = if which == 2 && order != SlotOrder::Planes { 3 } else { 4 };
        let cfg = SearchConfig::new(n, axioms).up_to_iso(iso).order(order).split_depth(split);
        let par = enumerate_models(&cfg.clone().execution(Execution::Parallel)).unwrap();
        let seq = enumerate_models(&cfg.execution(Execution::Sequential)).unwrap();
        let reference = enumerate_models(&SearchConfig::new(n, axioms).up_to_iso(iso)).unwrap();
        prop_assert_eq!(&par.representatives, &seq.representatives);
        prop_assert_eq!((par.total_models, par.iso_classes), (reference.total_models, reference.iso_classes));
        prop_assert_eq!(par.stats.nodes, seq.stats.nodes);
    }
}

#[test]
fn size_two_census_matches_brute_force() {
    for axioms in [&BASE_AXIOMS[..], &DE_MORGAN_AXIOMS[..], &TERNARY_MV_AXIOMS[..]] {
        let brute: BTreeSet<Vec<usize>> = (0..256usize)
            .map(|code| TernarySystem::new(2, 0, 1, (0..8).map(|i| (code >> i) & 1).collect()).unwrap())
            .filter(|s| satisfies_all(s, axioms))
            .map(|s| s.table())
            .collect();
        let census = enumerate_models(&SearchConfig::new(2, axioms)).unwrap();
        let found: BTreeSet<Vec<usize>> = census.representatives.iter().map(|s| s.table()).collect();
        assert_eq!(found, brute, "{axioms:?}");
    }
}
