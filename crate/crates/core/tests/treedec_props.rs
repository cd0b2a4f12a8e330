mod common;

use hadwiger_core::sample::{random_decomposition, random_graph, random_tree};
use hadwiger_core::treedec::{exact_treewidth, td_format, width_with_limit};
use hadwiger_core::{decompose, tree_path_set, verify_decomposition, width, Strategy, VertexSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const STRATEGIES: [Strategy; 3] = [Strategy::Exact, Strategy::MinFill, Strategy::MinDegree];

#[test]
fn path_sets_match_definition() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..100 {
        let draw_a = rng.gen_range(1..12);
        let tree = random_tree(&mut rng, draw_a);
        for t1 in 0..tree.len() {
            for t2 in 0..tree.len() {
                assert_eq!(
                    tree_path_set(&tree, t1, t2).unwrap(),
                    common::literal_path_set(&tree, t1, t2)
                );
                assert_eq!(tree.infimum(t1, t2), common::infimum(&tree, t1, t2));
            }
        }
    }
}

#[test]
fn decompositions_of_random_graphs_are_valid() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for i in 0..1000 {
        let n = rng.gen_range(0..=12);
        let g = random_graph(&mut rng, n, [0.2, 0.5, 0.8][i % 3]);
        // the exact dynamic program is the slow one; run it on every fourth graph
        for s in STRATEGIES.iter().filter(|&&s| s != Strategy::Exact || i % 4 == 0) {
            let td = decompose(&g, *s).unwrap();
            let report = verify_decomposition(&g, &td);
            assert!(report.all_pass(), "{s} on {g:?}: {report:?}");
        }
    }
}

#[test]
fn verifier_agrees_with_literal_axioms() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut rejected = 0;
    for _ in 0..300 {
        let draw_a = rng.gen_range(1..8);
        let (g, td) = random_decomposition(&mut rng, 7, draw_a, 2, 0.7);
        // random bag damage
        let t = rng.gen_range(0..td.tree().len());
        let bag = VertexSet::from_bits(td.bag(t).bits() ^ (1 << rng.gen_range(0..7)));
        let td = if rng.gen_bool(0.5) {
            td.with_bag(t, bag).unwrap()
        } else {
            td
        };
        let report = verify_decomposition(&g, &td);
        let literal = common::literal_is_valid(&g, &td);
        assert_eq!(report.w1.passed() && report.w2.passed(), literal, "{g:?} {td:?}");
        assert!(report.w3.passed());
        rejected += (!literal) as usize;
    }
    assert!(rejected > 30);
}

#[test]
fn exact_strategy_matches_elimination_order_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for i in 0..60 {
        let n = rng.gen_range(1..=8);
        let g = random_graph(&mut rng, n, [0.2, 0.5, 0.8][i % 3]);
        let tw = common::brute_force_treewidth(&g);
        assert_eq!(exact_treewidth(&g).unwrap().0 as usize, tw);
        assert_eq!(decompose(&g, Strategy::Exact).unwrap().bag_width(), tw + 1, "{g:?}");
        for s in [Strategy::MinFill, Strategy::MinDegree] {
            assert!(decompose(&g, s).unwrap().bag_width() > tw);
        }
    }
}

#[test]
fn chain_width_equals_bag_width() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..200 {
        let nodes = rng.gen_range(1..=12);
        let (_, td) = random_decomposition(&mut rng, 10, nodes, 3, 0.5);
        let w = width(&td);
        assert!(w.chain_width_exact);
        assert_eq!(w.chain_width, w.bag_width);
        let literal = common::all_chains(td.tree())
            .iter()
            .map(|c| common::literal_chain_value(&td, c))
            .max()
            .unwrap();
        assert_eq!(literal, w.chain_width);
    }
}

#[test]
fn chain_width_lower_bound_mode() {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for _ in 0..20 {
        let (_, td) = random_decomposition(&mut rng, 12, 30, 4, 0.5);
        let w = width_with_limit(&td, 20);
        assert!(!w.chain_width_exact);
        assert_eq!(w.chain_width, w.bag_width);
    }
}

#[test]
fn rerooting_preserves_verdicts() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..100 {
        let draw_a = rng.gen_range(1..8);
        let (g, td) = random_decomposition(&mut rng, 6, draw_a, 2, 0.6);
        let t = rng.gen_range(0..td.tree().len());
        let damaged = if rng.gen_bool(0.5) {
            td.with_bag(t, VertexSet::from_bits(td.bag(t).bits() >> 1)).unwrap()
        } else {
            td
        };
        let base = verify_decomposition(&g, &damaged);
        for root in 0..damaged.tree().len() {
            let rerooted = verify_decomposition(&g, &damaged.rerooted(root).unwrap());
            assert_eq!(rerooted.w1.passed(), base.w1.passed());
            assert_eq!(rerooted.w2.passed(), base.w2.passed());
            assert_eq!(rerooted.w3.passed(), base.w3.passed());
        }
    }
}

#[test]
fn td_files_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..200 {
        let draw_a = rng.gen_range(1..15);
        let draw_b = rng.gen_range(1..15);
        let (_, td) = random_decomposition(&mut rng, draw_a, draw_b, 3, 0.5);
        let text = td_format::encode(&td);
        let back = td_format::decode(&text).unwrap();
        assert_eq!(back.bags(), td.bags());
        assert_eq!(back.tree().edges(), td.tree().edges());
        assert_eq!(back.tree().root(), 0);
        assert_eq!(td_format::encode(&back), text);
    }
}

#[test]
fn simplify_keeps_validity_and_width() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for _ in 0..100 {
        let draw_a = rng.gen_range(1..10);
        let g = random_graph(&mut rng, draw_a, 0.4);
        let td = decompose(&g, Strategy::MinFill).unwrap();
        let s = td.simplify();
        assert!(verify_decomposition(&g, &s).all_pass());
        assert_eq!(s.bag_width(), td.bag_width());
        for (a, b) in s.tree().edges() {
            assert!(!s.bag(a).is_subset(s.bag(b)) && !s.bag(b).is_subset(s.bag(a)));
        }
    }
}
