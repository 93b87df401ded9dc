//! Randomized invariants, backed by the independent oracles in `common`.

// assertions keep the shape of the inequalities they verify
#![allow(clippy::int_plus_one)]

mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;

use common::{
    cycle_sets, oracle_chordless_cycles, oracle_contract, oracle_hadwiger,
    oracle_nonseparating_cycles, oracle_three_connected, reference_graph6, to_matrix,
};
use lambda_lab::connectivity::{is_three_connected, three_connectivity_witness};
use lambda_lab::cycles::{
    characteristic, cycle_space_rank_check, induced_cycles, nonseparating_induced_cycles, Cycle,
};
use lambda_lab::generators::{
    exhaustive_catalog, lex_edges, make_family, random_3_connected, FamilySpec,
};
use lambda_lab::graph::{Graph, VertexId};
use lambda_lab::graph6::{parse_graph6, write_graph6};
use lambda_lab::minors::hadwiger_number;
use lambda_lab::structure::{clique_sum, decompose_at_triangle, triangles, TriangleGluing};
use lambda_lab::theorem::{certify, verify_certificate};

/// An arbitrary graph on up to `max_n` vertices, as (n, edge bitmask).
fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let bits = n * n.saturating_sub(1) / 2;
        let top = if bits == 0 { 1 } else { 1u64 << bits };
        (Just(n), 0..top).prop_map(|(n, mask)| {
            let edges: Vec<(usize, usize)> = lex_edges(n)
                .into_iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, e)| e)
                .collect();
            Graph::new(n, &edges).unwrap()
        })
    })
}

/// A seeded 3-connected graph in a small size range.
fn arb_three_connected() -> impl Strategy<Value = Graph> {
    (4usize..=9, 0usize..=3, any::<u64>()).prop_map(|(n, extra, seed)| {
        let m = (3 * n).div_ceil(2) + extra;
        random_3_connected(n, m.min(n * (n - 1) / 2), seed).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn contraction_edge_count_identity(g in arb_graph(8)) {
        for e in g.edges() {
            let common_nbrs = g
                .neighbors(e.a())
                .filter(|w| g.has_edge(*w, e.b()))
                .count();
            let (contracted, _) = g.contract_edge(e).unwrap();
            prop_assert_eq!(g.edge_count() - contracted.edge_count(), common_nbrs + 1);
        }
    }

    #[test]
    fn contraction_matches_matrix_oracle(g in arb_graph(7)) {
        for e in g.edges() {
            let (contracted, _) = g.contract_edge(e).unwrap();
            let expect = oracle_contract(&to_matrix(&g), e.a().index(), e.b().index());
            prop_assert_eq!(to_matrix(&contracted), expect);
        }
    }

    #[test]
    fn deletion_composes(g in arb_graph(8), a_mask in any::<u32>(), b_mask in any::<u32>()) {
        let n = g.vertex_count();
        let a: Vec<VertexId> = (0..n).filter(|v| a_mask >> v & 1 == 1).map(VertexId::new).collect();
        let once = g.delete_vertices(&a).unwrap();
        // survivors of the first deletion, in their new indexing
        let survivors: Vec<usize> = (0..n).filter(|v| a_mask >> v & 1 == 0).collect();
        let b_new: Vec<VertexId> = survivors
            .iter()
            .enumerate()
            .filter(|(_, &old)| b_mask >> old & 1 == 1)
            .map(|(new, _)| VertexId::new(new))
            .collect();
        let twice = once.delete_vertices(&b_new).unwrap();
        let both: Vec<VertexId> = (0..n)
            .filter(|v| a_mask >> v & 1 == 1 || b_mask >> v & 1 == 1)
            .map(VertexId::new)
            .collect();
        prop_assert_eq!(twice, g.delete_vertices(&both).unwrap());
    }

    #[test]
    fn graph6_round_trip_and_reference_encoder(g in arb_graph(10)) {
        let line = write_graph6(&g);
        prop_assert_eq!(&line, &reference_graph6(&to_matrix(&g)));
        prop_assert_eq!(parse_graph6(&line).unwrap(), g);
    }

    #[test]
    fn three_connectivity_matches_naive_oracle(g in arb_graph(7)) {
        let ours = is_three_connected(&g);
        prop_assert_eq!(ours, oracle_three_connected(&to_matrix(&g)));
        if let Some(w) = three_connectivity_witness(&g) {
            prop_assert!(w.vertices.len() <= 2);
            let rest = g.delete_vertices(&w.vertices).unwrap();
            prop_assert!(!lambda_lab::is_connected(&rest));
        } else {
            prop_assert!(ours);
        }
    }

    #[test]
    fn induced_cycles_match_path_oracle(g in arb_graph(7)) {
        let m = to_matrix(&g);
        prop_assert_eq!(cycle_sets(&induced_cycles(&g)), oracle_chordless_cycles(&m));
        prop_assert_eq!(
            cycle_sets(&nonseparating_induced_cycles(&g)),
            oracle_nonseparating_cycles(&m)
        );
    }

    #[test]
    fn cycle_count_is_isomorphism_invariant(g in arb_graph(7), seed in any::<u64>()) {
        // relabel by a seeded permutation and compare cycle statistics
        let n = g.vertex_count();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut state = seed;
        for i in (1..n).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let j = (state >> 33) as usize % (i + 1);
            perm.swap(i, j);
        }
        let edges: Vec<(usize, usize)> = g
            .edges()
            .iter()
            .map(|e| (perm[e.a().index()], perm[e.b().index()]))
            .collect();
        let relabeled = Graph::new(n, &edges).unwrap();
        let ours = nonseparating_induced_cycles(&g);
        let theirs = nonseparating_induced_cycles(&relabeled);
        prop_assert_eq!(ours.len(), theirs.len());
        // the permutation must map cycle sets to cycle sets, one by one
        let mapped: BTreeSet<Vec<usize>> = ours
            .iter()
            .map(|c| {
                let mut v: Vec<usize> = c.vertices().iter().map(|x| perm[x.index()]).collect();
                v.sort_unstable();
                v
            })
            .collect();
        prop_assert_eq!(mapped, cycle_sets(&theirs));
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, ..ProptestConfig::default() })]

    #[test]
    fn lambda_at_least_one_on_random_three_connected(g in arb_three_connected()) {
        let c = characteristic(&g);
        prop_assert!(c.lambda >= 1, "lambda = {} on {}", c.lambda, write_graph6(&g));
        prop_assert!(c.cycle_count >= c.edge_count - c.vertex_count + 1);
        prop_assert!(cycle_space_rank_check(&g).unwrap().spans);
    }

    #[test]
    fn hadwiger_is_minor_monotone(g in arb_three_connected()) {
        if g.vertex_count() <= 7 {
            let h = hadwiger_number(&g).unwrap().h;
            prop_assert_eq!(h, oracle_hadwiger(&to_matrix(&g)));
            let n = g.vertex_count();
            for e in g.edges() {
                let (contracted, _) = g.contract_edge(e).unwrap();
                prop_assert!(hadwiger_number(&contracted).unwrap().h <= h);
                // deletion is a minor operation too
                let remaining: Vec<(usize, usize)> = g
                    .edges()
                    .iter()
                    .filter(|f| **f != e)
                    .map(|f| (f.a().index(), f.b().index()))
                    .collect();
                let deleted = Graph::new(n, &remaining).unwrap();
                prop_assert!(hadwiger_number(&deleted).unwrap().h <= h);
            }
        }
    }

    #[test]
    fn certificates_replay_on_random_graphs(g in arb_three_connected()) {
        if g.vertex_count() <= 8 {
            let cert = certify(&g).unwrap();
            prop_assert!(verify_certificate(&g, &cert).unwrap().valid);
        }
    }

    #[test]
    fn clique_sum_cycles_embed(a_seed in any::<u64>(), b_seed in any::<u64>()) {
        // wheels always carry triangles; glue two random wheels
        let na = 5 + (a_seed % 3) as usize;
        let nb = 5 + (b_seed % 3) as usize;
        let g1 = make_family(&FamilySpec::Wheel(na)).unwrap();
        let g2 = make_family(&FamilySpec::Wheel(nb)).unwrap();
        let t1 = triangles(&g1)[(a_seed % 7) as usize % triangles(&g1).len()];
        let t2 = triangles(&g2)[(b_seed % 7) as usize % triangles(&g2).len()];
        let glued = clique_sum(&g1, &g2, &TriangleGluing { left: t1, right: t2 }).unwrap();
        prop_assert!(is_three_connected(&glued));

        let dec = decompose_at_triangle(&glued, t1).unwrap();
        prop_assert!(dec.factors.len() >= 2);
        prop_assert!(dec.factors.iter().all(|f| is_three_connected(&f.graph)));
        // contracting the rest of a factor onto the triangle gives K_4
        for f in &dec.factors {
            prop_assert!(hadwiger_number(&f.graph).unwrap().h >= 4);
        }

        // every factor cycle other than the shared triangle appears in C(G),
        // and distinct factors contribute disjoint cycles
        let host_cycles = nonseparating_induced_cycles(&glued);
        let tri = Cycle::from_sequence(&t1).unwrap();
        let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
        let mut lambda_sum = 0i64;
        for f in &dec.factors {
            lambda_sum += characteristic(&f.graph).lambda;
            for c in nonseparating_induced_cycles(&f.graph).iter() {
                let mapped: Vec<VertexId> = c
                    .vertices()
                    .iter()
                    .map(|v| f.vertex_map[v.index()])
                    .collect();
                let mapped = Cycle::from_sequence(&mapped).unwrap();
                if mapped == tri {
                    continue;
                }
                prop_assert!(
                    host_cycles.contains(&mapped),
                    "factor cycle missing from the clique-sum"
                );
                prop_assert!(seen.insert(mapped.sorted_indices()), "factor images overlap");
            }
        }
        let r = dec.factors.len() as i64;
        prop_assert!(characteristic(&glued).lambda >= lambda_sum - 2 * (r - 1));
    }
}

#[test]
fn catalog_matches_naive_filter_on_small_sizes() {
    for n in [4usize, 5, 6] {
        let edges = lex_edges(n);
        let mut expected = Vec::new();
        for mask in 0..1u64 << edges.len() {
            let chosen: Vec<(usize, usize)> = edges
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> (edges.len() - 1 - k) & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let g = Graph::new(n, &chosen).unwrap();
            if oracle_three_connected(&to_matrix(&g)) {
                expected.push(g);
            }
        }
        let emitted: Vec<Graph> = exhaustive_catalog(n).unwrap().collect();
        assert_eq!(emitted.len(), expected.len(), "catalog count at n = {n}");
        assert_eq!(emitted, expected, "catalog graphs or order differ at n = {n}");
        let distinct: BTreeSet<String> = emitted.iter().map(write_graph6).collect();
        assert_eq!(distinct.len(), emitted.len(), "no duplicates at n = {n}");
    }
}

#[test]
fn lift_bundle_holds_for_every_small_catalog_pair() {
    // every catalog graph at n = 4, 5 and every edge whose contraction
    // stays 3-connected
    for n in [4usize, 5] {
        for g in exhaustive_catalog(n).unwrap() {
            for e in g.edges() {
                let (contracted, map) = g.contract_edge(e).unwrap();
                if !is_three_connected(&contracted) {
                    continue;
                }
                let lift = lambda_lab::structure::cycle_lift(&g, e).unwrap();
                let targets = nonseparating_induced_cycles(&contracted);
                assert_eq!(lift.len(), targets.len());
                let te = lambda_lab::structure::triangles_through_edge(&g, e).unwrap();
                for (src, dst) in lift.iter() {
                    assert_eq!(
                        lambda_lab::structure::reduce_cycle(dst, &map).as_ref(),
                        Some(src)
                    );
                }
                assert!(nonseparating_induced_cycles(&g).len() >= targets.len() + te.len());
            }
        }
    }
}

#[test]
fn wheel_lifts_are_tight_for_every_rim_edge() {
    // contracting any rim edge of a wheel leaves a smaller wheel; the lift
    // must be injective into a cycle set exactly one triangle larger
    for n in 6..=9 {
        let g = make_family(&FamilySpec::Wheel(n)).unwrap();
        let e = g.edge(1, 2).unwrap();
        let lift = lambda_lab::structure::cycle_lift(&g, e).unwrap();
        let host = nonseparating_induced_cycles(&g);
        assert_eq!(lift.len() + 1, host.len());
    }
}
