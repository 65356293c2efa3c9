mod common;

use halin_core::chordal::{chordal_completion, peo_halin, replay_trace, treewidth_from_peo, verify_peo};
use halin_core::coloring::{color_halin, color_halin_traced, fan_runs, is_even_wheel, ColoringCase};
use halin_core::generators::{make_necklace, make_wheel, Variant};
use halin_core::oracles::{chromatic_number_bruteforce, is_chordal_bruteforce};
use halin_core::recognition::{recognize, verify_halin, HalinCertificate, RejectReason};
use halin_core::{generate, GenSpec, Graph, GraphDoc};
use proptest::prelude::*;

fn variant() -> impl Strategy<Value = Variant> {
    prop_oneof![Just(Variant::Halin), Just(Variant::HalinCubic), Just(Variant::Wheel), Just(Variant::Necklace)]
}

fn spec() -> impl Strategy<Value = GenSpec> {
    (variant(), 3usize..120, any::<u64>()).prop_map(|(variant, half, seed)| {
        let n = match variant {
            Variant::Halin | Variant::Wheel => half + 1,
            Variant::HalinCubic => 2 * half,
            Variant::Necklace => 2 * half,
        };
        GenSpec::new(variant, n, seed)
    })
}

fn edge_list(max_n: usize) -> impl Strategy<Value = (usize, Vec<(usize, usize)>)> {
    (1..max_n).prop_flat_map(|n| (Just(n), prop::collection::vec((0..n, 0..n), 0..3 * n)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn adjacency_stays_symmetric((n, edges) in edge_list(20), removals in prop::collection::vec(0usize..20, 0..4)) {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            let _ = g.add_edge(u, v);
        }
        for v in removals {
            let _ = g.remove_vertex(v);
        }
        let degree_sum: usize = g.live_vertices().map(|v| g.neighbors(v).len()).sum();
        prop_assert_eq!(degree_sum, 2 * g.edge_count());
        for u in g.live_vertices() {
            for &v in g.neighbors(u) {
                prop_assert!(g.is_live(v) && v != u);
                prop_assert!(g.neighbors(v).contains(&u));
            }
        }
    }

    #[test]
    fn graph_json_round_trip((n, edges) in edge_list(30)) {
        let g = Graph::from_edges(n, edges.into_iter().filter(|(u, v)| u != v)).unwrap();
        let json = serde_json::to_string(&g.to_doc(None)).unwrap();
        let back: GraphDoc = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back.to_graph().unwrap(), g);
    }

    #[test]
    fn generated_graphs_verify(spec in spec()) {
        let gen = generate(&spec).unwrap();
        prop_assert_eq!(gen.graph.n(), spec.n);
        prop_assert_eq!(gen.graph.edge_count(), spec.n - 1 + gen.outer.len());
        prop_assert!(verify_halin(&gen.graph, &gen.outer).is_ok());
        if matches!(spec.variant, Variant::HalinCubic | Variant::Necklace) {
            prop_assert!((0..spec.n).all(|v| gen.graph.neighbors(v).len() == 3));
        }
        prop_assert_eq!(generate(&spec).unwrap(), gen);
    }

    #[test]
    fn recognition_round_trip(spec in spec()) {
        let gen = generate(&spec).unwrap();
        let cert = recognize(&gen.graph).unwrap();
        prop_assert!(verify_halin(&gen.graph, &cert.outer).is_ok());
        cert.validate(&gen.graph).unwrap();
        prop_assert_eq!(cert.parent.iter().filter(|p| p.is_some()).count(), spec.n - 1);
        if spec.n > 4 && matches!(spec.variant, Variant::Wheel | Variant::Necklace) {
            let mut expected = gen.outer.clone();
            expected.sort_unstable();
            prop_assert_eq!(cert.outer, expected);
        }
    }

    #[test]
    fn deleting_a_cycle_edge_is_rejected(spec in spec(), pick in any::<prop::sample::Index>()) {
        let mut gen = generate(&spec).unwrap();
        let i = pick.index(gen.outer.len());
        let (a, b) = (gen.outer[i], gen.outer[(i + 1) % gen.outer.len()]);
        prop_assert!(gen.graph.remove_edge(a, b));
        let rejection = recognize(&gen.graph).unwrap_err();
        prop_assert_eq!(rejection.reason, RejectReason::LowDegree);
    }

    #[test]
    fn coloring_is_proper_with_three_colors(spec in spec()) {
        let gen = generate(&spec).unwrap();
        let cert = HalinCertificate::from_outer(&gen.graph, &gen.outer).unwrap();
        let coloring = color_halin(&gen.graph, &cert).unwrap();
        prop_assert!(coloring.is_proper(&gen.graph));
        let expected = if is_even_wheel(&gen.graph, &cert) { 4 } else { 3 };
        prop_assert_eq!(coloring.num_colors(), expected);
        prop_assert_eq!(coloring.color[cert.root], 0);
    }

    #[test]
    fn peo_invariants(spec in spec()) {
        let gen = generate(&spec).unwrap();
        let cert = HalinCertificate::from_outer(&gen.graph, &gen.outer).unwrap();
        let peo = peo_halin(&gen.graph, &cert).unwrap();
        let mut sorted = peo.order.clone();
        sorted.sort_unstable();
        prop_assert_eq!(sorted, (0..spec.n).collect::<Vec<_>>());
        prop_assert!(peo.fill_edges.iter().all(|&(u, v)| !gen.graph.has_edge(u, v)));
        let filled = chordal_completion(&gen.graph, &peo);
        prop_assert_eq!(filled.edge_count(), gen.graph.edge_count() + peo.fill_edges.len());
        prop_assert!(verify_peo(&filled, &peo.order).unwrap());
        prop_assert_eq!(treewidth_from_peo(&filled, &peo.order).unwrap(), 3);
        let tail = &peo.order[spec.n - 4..];
        for (i, &a) in tail.iter().enumerate() {
            for &b in &tail[i + 1..] {
                prop_assert!(filled.has_edge(a, b));
            }
        }
        let (order, fills) = replay_trace(&gen.graph, &peo.trace).unwrap();
        prop_assert_eq!(order, peo.order);
        prop_assert_eq!(fills, peo.fill_edges);
    }

    #[test]
    fn chromatic_number_monotone_under_edge_addition((n, edges) in edge_list(9), extra in (0usize..9, 0usize..9)) {
        let g = Graph::from_edges(n, edges.into_iter().filter(|(u, v)| u != v)).unwrap();
        let before = chromatic_number_bruteforce(&g, 5).unwrap().unwrap_or(6);
        let mut h = g.clone();
        let (u, v) = (extra.0 % n, extra.1 % n);
        if u != v {
            h.add_edge(u, v).unwrap();
        }
        let after = chromatic_number_bruteforce(&h, 5).unwrap().unwrap_or(6);
        prop_assert!(after >= before);
    }
}

fn has_some_peo(g: &Graph) -> bool {
    let n = g.n();
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        if verify_peo(g, &perm).unwrap() {
            return true;
        }
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| perm[i] < perm[i + 1]) else {
            return false;
        };
        let j = (i + 1..n).rev().find(|&j| perm[j] > perm[i]).unwrap();
        perm.swap(i, j);
        perm[i + 1..].reverse();
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn chordality_oracles_agree((n, edges) in edge_list(8)) {
        let g = Graph::from_edges(n, edges.into_iter().filter(|(u, v)| u != v)).unwrap();
        prop_assert_eq!(is_chordal_bruteforce(&g).unwrap(), has_some_peo(&g));
    }
}

#[test]
fn cross_oracle_agreement_on_small_halin_completions() {
    for (_, gen) in common::small_corpus(8, 3) {
        let cert = HalinCertificate::from_outer(&gen.graph, &gen.outer).unwrap();
        let filled = chordal_completion(&gen.graph, &peo_halin(&gen.graph, &cert).unwrap());
        assert!(is_chordal_bruteforce(&filled).unwrap());
        assert!(has_some_peo(&filled));
        assert!(!is_chordal_bruteforce(&gen.graph).unwrap() || gen.graph.n() == 4);
    }
}

#[test]
fn necklace_of_two_is_the_prism() {
    let prism = Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)]).unwrap();
    assert!(common::isomorphic(&make_necklace(2).unwrap().graph, &prism));
    assert!(!common::isomorphic(&make_wheel(6).unwrap().graph, &prism));
}

#[test]
fn necklace_of_three_verifies() {
    let gen = make_necklace(3).unwrap();
    assert!(verify_halin(&gen.graph, &gen.outer).is_ok());
    assert!((0..8).all(|v| gen.graph.neighbors(v).len() == 3));
}

#[test]
fn generated_halin_ten_seven() {
    let gen = generate(&GenSpec::new(Variant::Halin, 10, 7)).unwrap();
    assert!(verify_halin(&gen.graph, &gen.outer).is_ok());
    let cert = recognize(&gen.graph).unwrap();
    assert_eq!(cert.parent.iter().flatten().count(), 9);
    let filled = chordal_completion(&gen.graph, &peo_halin(&gen.graph, &cert).unwrap());
    assert!(is_chordal_bruteforce(&filled).unwrap());
    let cubic = generate(&GenSpec::new(Variant::HalinCubic, 10, 1)).unwrap();
    assert!((0..10).all(|v| cubic.graph.neighbors(v).len() == 3));
    assert!(verify_halin(&cubic.graph, &cubic.outer).is_ok());
}

#[test]
fn pseudo_fan_is_chosen_when_all_fans_are_even() {
    let gen = common::pseudo_fan_example();
    assert_eq!(gen.outer.len(), 11);
    let cert = recognize(&gen.graph).unwrap();
    let runs = fan_runs(&cert);
    assert_eq!(runs.iter().filter(|r| r.is_fan).count(), 4);
    assert!(runs.iter().filter(|r| r.is_fan).all(|r| r.run.len() % 2 == 0));
    let traced = color_halin_traced(&gen.graph, &cert).unwrap();
    assert_eq!(traced.case, ColoringCase::MonochromeOddCycle);
    let run = traced.run.unwrap();
    assert!(!run.is_fan);
    assert_eq!((run.center, run.run.len()), (1, 3));
    assert_eq!(traced.coloring.color[1], 2);
    assert!(traced.coloring.is_proper(&gen.graph));
    assert_eq!(traced.coloring.num_colors(), 3);
    assert_eq!(chromatic_number_bruteforce(&gen.graph, 5), Err(halin_core::oracles::OracleError::TooLarge(18)));
}

#[test]
fn w5_completion_is_chordal() {
    let w5 = make_wheel(5).unwrap();
    let cert = recognize(&w5.graph).unwrap();
    let peo = peo_halin(&w5.graph, &cert).unwrap();
    assert_eq!(peo.fill_edges, vec![(0, 2)]);
    let filled = chordal_completion(&w5.graph, &peo);
    assert!(is_chordal_bruteforce(&filled).unwrap());
    assert!(verify_peo(&filled, &peo.order).unwrap());
}
