mod common;

use burling_core::oracle::{oracle_contains, oracle_count_holes};
use burling_core::{
    chromatic_number, clique_number, find_fan, find_guarded_fan, find_hole, find_mountable_path,
    find_non_rainbow_coloring, find_theta, find_triangle, find_wheel, graft_isomorphic,
    graph_isomorphic, is_clean, is_graft_isomorphism, validate_witness, Graft, Graph, PatternKind,
    Witness,
};
use common::{arb_graft, arb_graph, each_assignment, permutations};
use proptest::prelude::*;

fn agrees(
    g: &Graph,
    tips: Option<&burling_core::VertexSet>,
    kind: PatternKind,
    k: usize,
    found: Option<Witness>,
) -> bool {
    let expected = oracle_contains(g, tips, kind, k).unwrap().is_some();
    expected == found.is_some() && found.is_none_or(|w| validate_witness(g, tips, &w).unwrap())
}

fn permuted(g: &Graph, perm: &[usize]) -> Graph {
    Graph::from_edges(g.n(), g.edges().map(|(u, v)| (perm[u], perm[v]))).unwrap()
}

fn colourable(g: &Graph, c: usize) -> bool {
    if c == 0 {
        return g.n() == 0;
    }
    each_assignment(g.n(), c, |col| g.edges().all(|(u, v)| col[u] != col[v]))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn graph_detectors_match_the_oracle(g in arb_graph(9)) {
        prop_assert!(agrees(&g, None, PatternKind::Triangle, 0, find_triangle(&g)));
        let holes: Vec<_> = find_hole(&g, 4).map(Result::unwrap).collect();
        prop_assert_eq!(holes.len(), oracle_count_holes(&g, 4).unwrap());
        prop_assert!(holes.iter().all(|w| validate_witness(&g, None, w).unwrap()));
        prop_assert!(agrees(&g, None, PatternKind::Hole, 0, holes.into_iter().next()));
        for k in 3..=5 {
            prop_assert!(agrees(&g, None, PatternKind::Wheel, k, find_wheel(&g, k).unwrap()));
            prop_assert!(agrees(&g, None, PatternKind::Fan, k, find_fan(&g, k).unwrap()));
        }
        prop_assert!(agrees(&g, None, PatternKind::Theta, 0, find_theta(&g)));
    }

    #[test]
    fn graft_detectors_match_the_oracle(gf in arb_graft(9, 5)) {
        let (g, t) = (gf.graph(), gf.tips());
        prop_assert!(agrees(g, Some(t), PatternKind::GuardedFan, 3, find_guarded_fan(&gf)));
        prop_assert!(agrees(g, Some(t), PatternKind::MountablePath, 0, find_mountable_path(&gf)));
        let r = is_clean(&gf);
        for (_, v) in &r.verdicts {
            if let Some(w) = v.witness() {
                prop_assert!(validate_witness(g, Some(t), w).unwrap());
            }
        }
    }

    #[test]
    fn isomorphism_matches_brute_force(a in arb_graft(6, 3), b in arb_graft(6, 3)) {
        let found = graft_isomorphic(&a, &b);
        if let Some(f) = &found {
            prop_assert!(is_graft_isomorphism(&a, &b, f));
        }
        let brute = a.n() == b.n()
            && permutations(a.n()).iter().any(|f| is_graft_isomorphism(&a, &b, f));
        prop_assert_eq!(found.is_some(), brute);
    }

    #[test]
    fn relabelled_graphs_are_isomorphic(g in arb_graph(12), seed in any::<u64>()) {
        let n = g.n();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let h = permuted(&g, &perm);
        let f = graph_isomorphic(&g, &h).expect("relabelling is an isomorphism");
        prop_assert!(g.edges().all(|(u, v)| h.has_edge(f[u], f[v])));
    }

    #[test]
    fn chromatic_number_matches_brute_force(g in arb_graph(8)) {
        let cert = chromatic_number(&g).unwrap();
        prop_assert!(cert.witness_coloring.is_valid_for(&g));
        prop_assert!(cert.chi == 0 || !colourable(&g, cert.chi - 1));
    }

    #[test]
    fn clique_number_matches_brute_force(g in arb_graph(10)) {
        let n = g.n();
        let brute = (0u32..1 << n)
            .filter(|s| (0..n).all(|u| (u + 1..n).all(|v| s & (1 << u) == 0 || s & (1 << v) == 0 || g.has_edge(u, v))))
            .map(u32::count_ones)
            .max()
            .unwrap() as usize;
        prop_assert_eq!(clique_number(&g).unwrap(), brute);
    }

    #[test]
    fn rainbow_search_matches_brute_force(gf in arb_graft(7, 3), k in 1usize..4, c in 1usize..4) {
        let g = gf.graph();
        let tips = gf.tip_list();
        let brute = each_assignment(g.n(), c, |col| {
            g.edges().all(|(u, v)| col[u] != col[v])
                && tips.iter().all(|&t| {
                    let seen: std::collections::BTreeSet<_> = g.neighbors(t).iter().map(|u| col[u]).collect();
                    seen.len() < k
                })
        });
        let found = find_non_rainbow_coloring(&gf, k, c).unwrap();
        prop_assert_eq!(found.is_some(), brute);
        if let Some(col) = found {
            prop_assert!(col.is_valid_for(g) && col.count <= c);
            for &t in &tips {
                let seen: std::collections::BTreeSet<_> = g.neighbors(t).iter().map(|u| col.colors[u]).collect();
                prop_assert!(seen.len() < k);
            }
        }
    }
}

#[test]
fn cleanness_is_inherited_by_induced_subgrafts() {
    let (g3, _) = burling_core::build_graft(3).unwrap();
    let mut state = 12345u64;
    for _ in 0..200 {
        let mut keep = burling_core::VertexSet::new(g3.n());
        for v in 0..g3.n() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1);
            if state >> 62 != 0 {
                keep.insert(v);
            }
        }
        let sub: Graft = g3.induced_on(&keep);
        assert!(is_clean(&sub).is_clean());
    }
}
