mod common;

use hadwiger_core::sample::{random_decomposition, random_graph};
use hadwiger_core::treedec::exact_treewidth;
use hadwiger_core::{
    chromatic_number, color_by_decomposition, decompose, enumerate_graphs, order_vertices, verify_proper, Generator,
    Strategy,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn assert_bag_injective(td: &hadwiger_core::TreeDecomposition, colors: &[usize]) {
    for bag in td.bags() {
        let mut seen: Vec<usize> = bag.iter().map(|v| colors[v]).collect();
        seen.sort_unstable();
        seen.dedup();
        assert_eq!(seen.len(), bag.len(), "bag {bag:?} repeats a color");
    }
}

#[test]
fn coloring_is_injective_on_bags_for_random_decompositions() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for _ in 0..1000 {
        let vertices = rng.gen_range(1..=12);
        let draw_a = rng.gen_range(1..=10);
        let draw_b = rng.gen_range(0.2..1.0);
        let (g, td) = random_decomposition(&mut rng, vertices, draw_a, 3, draw_b);
        let c = color_by_decomposition(&g, &td).unwrap();
        assert_bag_injective(&td, &c.colors);
        assert!(verify_proper(&g, &c).unwrap());
        assert!(c.num_colors() <= td.bag_width());
    }
}

#[test]
fn first_node_is_minimal_and_extension_respects_ancestry() {
    let mut rng = ChaCha8Rng::seed_from_u64(32);
    for _ in 0..300 {
        let draw_a = rng.gen_range(1..=9);
        let (g, td) = random_decomposition(&mut rng, 9, draw_a, 3, 0.6);
        let order = order_vertices(&g, &td).unwrap();
        for x in 0..g.n() {
            let m = order.first_node[x];
            assert!(td.bag(m).contains(x));
            for t in 0..td.tree().len() {
                if td.bag(t).contains(x) {
                    assert!(order.position[m] <= order.position[t]);
                }
            }
        }
        let tree = td.tree();
        for a in 0..tree.len() {
            for b in 0..tree.len() {
                if a != b && common::leq(tree, a, b) {
                    assert!(order.position[a] < order.position[b]);
                }
            }
        }
        for t in 0..tree.len() {
            let mut ranks: Vec<usize> = td.bag(t).iter().map(|x| order.phi(t, x).unwrap()).collect();
            ranks.sort_unstable();
            assert_eq!(ranks, (0..td.bag(t).len()).collect::<Vec<_>>());
        }
        let keys: Vec<(usize, usize)> = order
            .sequence
            .iter()
            .map(|&x| {
                (
                    order.position[order.first_node[x]],
                    order.phi(order.first_node[x], x).unwrap(),
                )
            })
            .collect();
        assert!(keys.windows(2).all(|w| w[0] < w[1]));
    }
}

#[test]
fn strategies_give_proper_colorings_within_bag_width() {
    let mut rng = ChaCha8Rng::seed_from_u64(33);
    for i in 0..300 {
        let draw_a = rng.gen_range(1..=12);
        let g = random_graph(&mut rng, draw_a, [0.2, 0.5, 0.8][i % 3]);
        for s in [Strategy::Exact, Strategy::MinFill, Strategy::MinDegree] {
            if s == Strategy::Exact && i % 3 != 0 {
                continue;
            }
            let td = decompose(&g, s).unwrap();
            let c = color_by_decomposition(&g, &td).unwrap();
            assert_bag_injective(&td, &c.colors);
            assert!(verify_proper(&g, &c).unwrap());
            assert!(c.num_colors() <= td.bag_width());
        }
    }
}

#[test]
fn chromatic_number_at_most_treewidth_plus_one() {
    for n in 1..=6 {
        for g in enumerate_graphs(n).unwrap() {
            let (chi, _) = chromatic_number(&g).unwrap();
            let tw = exact_treewidth(&g).unwrap().0 as usize;
            assert!(chi <= tw + 1, "{g:?}");
            let c = color_by_decomposition(&g, &decompose(&g, Strategy::Exact).unwrap()).unwrap();
            assert!(c.num_colors() >= chi && c.num_colors() <= tw + 1);
        }
    }
}

#[test]
fn chromatic_number_matches_assignment_oracle() {
    for n in 1..=6 {
        for g in enumerate_graphs(n).unwrap() {
            let oracle = common::naive_chromatic_number(&g);
            if oracle > 4 {
                continue;
            }
            let (chi, c) = chromatic_number(&g).unwrap();
            assert_eq!(chi, oracle, "{g:?}");
            assert!(verify_proper(&g, &c).unwrap());
            assert_eq!(c.num_colors(), chi);
        }
    }
}

#[test]
fn petersen_three_colorable_by_brute_force() {
    let pet = Generator::Petersen.build(0).unwrap();
    let oracle = common::naive_chromatic_number(&pet);
    assert_eq!(oracle, 3);
    assert_eq!(chromatic_number(&pet).unwrap().0, oracle);
    let c = color_by_decomposition(&pet, &decompose(&pet, Strategy::Exact).unwrap()).unwrap();
    assert!(verify_proper(&pet, &c).unwrap());
}
