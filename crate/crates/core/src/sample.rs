//! Random graphs and random valid tree decompositions.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::{Graph, VertexSet};
use crate::treedec::{RootedTree, TreeDecomposition};

/// Erdős–Rényi graph `G(n, p)`.
pub fn random_graph<R: Rng + ?Sized>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n).expect("caller keeps n small");
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).expect("in range");
            }
        }
    }
    g
}

/// Uniformly random recursive tree with shuffled node ids.
pub fn random_tree<R: Rng + ?Sized>(rng: &mut R, len: usize) -> RootedTree {
    let mut labels: Vec<usize> = (0..len).collect();
    labels.shuffle(rng);
    let mut parent = vec![None; len];
    for i in 1..len {
        parent[labels[i]] = Some(labels[rng.gen_range(0..i)]);
    }
    RootedTree::from_parents(parent).expect("recursive tree")
}

/// A random decomposition that is valid for the returned graph.
///
/// Each vertex occupies a random connected subtree (a random start node
/// grown by up to `spread` adjacent nodes), so bag occupancy is connected by
/// construction. Each pair of vertices sharing a bag becomes an edge with
/// probability `edge_prob`.
pub fn random_decomposition<R: Rng + ?Sized>(
    rng: &mut R,
    vertices: usize,
    nodes: usize,
    spread: usize,
    edge_prob: f64,
) -> (Graph, TreeDecomposition) {
    let tree = random_tree(rng, nodes);
    let mut nbrs = vec![Vec::new(); nodes];
    for (a, b) in tree.edges() {
        nbrs[a].push(b);
        nbrs[b].push(a);
    }
    let mut bags = vec![VertexSet::empty(); nodes];
    for v in 0..vertices {
        let mut occupied = vec![rng.gen_range(0..nodes)];
        for _ in 0..rng.gen_range(0..=spread) {
            let frontier: Vec<usize> = occupied
                .iter()
                .flat_map(|&t| nbrs[t].iter().copied())
                .filter(|t| !occupied.contains(t))
                .collect();
            match frontier.choose(rng) {
                Some(&t) => occupied.push(t),
                None => break,
            }
        }
        for t in occupied {
            bags[t].insert(v);
        }
    }
    let mut g = Graph::empty(vertices).expect("caller keeps n small");
    for u in 0..vertices {
        for w in u + 1..vertices {
            if bags.iter().any(|b| b.contains(u) && b.contains(w)) && rng.gen_bool(edge_prob) {
                g.add_edge(u, w).expect("in range");
            }
        }
    }
    let td = TreeDecomposition::new(tree, bags, vertices).expect("bags in range");
    (g, td)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::treedec::verify_decomposition;
    use rand::SeedableRng;

    #[test]
    fn generated_decompositions_are_valid() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for _ in 0..50 {
            let (g, td) = random_decomposition(&mut rng, 8, 6, 2, 0.6);
            assert!(verify_decomposition(&g, &td).all_pass());
        }
    }
}
