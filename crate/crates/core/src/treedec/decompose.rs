use std::fmt;
use std::str::FromStr;

use super::{RootedTree, TreeDecomposition};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Largest graph accepted by the exact subset dynamic program.
pub const MAX_EXACT_VERTICES: usize = 13;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Exact,
    MinFill,
    MinDegree,
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Strategy::Exact => "exact",
            Strategy::MinFill => "min-fill",
            Strategy::MinDegree => "min-degree",
        })
    }
}

impl FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace('_', "-").as_str() {
            "exact" => Ok(Strategy::Exact),
            "min-fill" => Ok(Strategy::MinFill),
            "min-degree" => Ok(Strategy::MinDegree),
            other => Err(Error::BadParameter(format!("unknown strategy `{other}`"))),
        }
    }
}

pub fn decompose(g: &Graph, strategy: Strategy) -> Result<TreeDecomposition> {
    let order = elimination_order(g, strategy)?;
    Ok(from_elimination_order(g, &order))
}

pub fn elimination_order(g: &Graph, strategy: Strategy) -> Result<Vec<usize>> {
    match strategy {
        Strategy::Exact => Ok(exact_treewidth(g)?.1),
        Strategy::MinFill => Ok(greedy_order(g, fill_in)),
        Strategy::MinDegree => Ok(greedy_order(g, |_, _, nbrs| nbrs.len())),
    }
}

/// Repeatedly eliminates the vertex with the smallest score (lowest id on ties).
fn greedy_order(g: &Graph, score: impl Fn(&[VertexSet], usize, VertexSet) -> usize) -> Vec<usize> {
    let n = g.n();
    let mut adj: Vec<VertexSet> = (0..n).map(|v| g.neighbors(v)).collect();
    let mut remaining = g.vertices();
    let mut order = Vec::with_capacity(n);
    while !remaining.is_empty() {
        let v = remaining
            .iter()
            .min_by_key(|&v| (score(&adj, v, adj[v].intersection(remaining)), v))
            .expect("nonempty");
        eliminate(&mut adj, v, remaining);
        remaining.remove(v);
        order.push(v);
    }
    order
}

fn fill_in(adj: &[VertexSet], _v: usize, nbrs: VertexSet) -> usize {
    let missing: usize = nbrs.iter().map(|u| nbrs.difference(adj[u]).len() - 1).sum();
    missing / 2
}

/// Turns the remaining neighborhood of `v` into a clique.
fn eliminate(adj: &mut [VertexSet], v: usize, remaining: VertexSet) {
    let nbrs = adj[v].intersection(remaining);
    for u in nbrs.iter() {
        let mut grown = adj[u].union(nbrs);
        grown.remove(u);
        adj[u] = grown;
    }
}

/// Builds the decomposition of an elimination order: the bag of `v` is `v`
/// with its later neighbors in the filled graph, hung below the bag of the
/// earliest of those neighbors. Node ids run backwards through the order, so
/// the last eliminated vertex owns node 0, the root. Components other than
/// the last one are hung directly below the root.
pub fn from_elimination_order(g: &Graph, order: &[usize]) -> TreeDecomposition {
    let n = g.n();
    debug_assert_eq!(order.len(), n);
    if n == 0 {
        return TreeDecomposition::new(RootedTree::singleton(), vec![VertexSet::empty()], 0).expect("empty bag");
    }
    let mut position = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    let node_of = |v: usize| n - 1 - position[v];
    let mut adj: Vec<VertexSet> = (0..n).map(|v| g.neighbors(v)).collect();
    let mut remaining = g.vertices();
    let mut bags = vec![VertexSet::empty(); n];
    let mut parent = vec![None; n];
    for &v in order {
        let later = adj[v].intersection(remaining).difference(VertexSet::singleton(v));
        let mut bag = later;
        bag.insert(v);
        bags[node_of(v)] = bag;
        let next = later.iter().min_by_key(|&u| position[u]);
        parent[node_of(v)] = match next {
            Some(u) => Some(node_of(u)),
            None if node_of(v) != 0 => Some(0),
            None => None,
        };
        eliminate(&mut adj, v, remaining);
        remaining.remove(v);
    }
    let tree = RootedTree::from_parents(parent).expect("elimination forest hung from node 0");
    TreeDecomposition::new(tree, bags, n).expect("bags within the graph")
}

/// Exact treewidth and an optimal elimination order, by dynamic programming
/// over vertex subsets: `tw(S) = min_{v in S} max(tw(S - v), |Q(S - v, v)|)`
/// where `Q(S, v)` is the set of vertices outside `S + v` reachable from `v`
/// through `S`. Subsets are processed in ascending mask order and ties go
/// to the lowest vertex id.
///
/// Returns `-1` treewidth for the empty graph.
pub fn exact_treewidth(g: &Graph) -> Result<(i32, Vec<usize>)> {
    let n = g.n();
    if n > MAX_EXACT_VERTICES {
        return Err(Error::TooLargeForExact {
            n,
            max: MAX_EXACT_VERTICES,
        });
    }
    let subsets = 1usize << n;
    let mut tw = vec![i32::MAX; subsets];
    let mut last = vec![0u8; subsets];
    tw[0] = -1;
    for mask in 1..subsets {
        let set = VertexSet::from_bits(mask as u64);
        for v in set {
            let rest = set.difference(VertexSet::singleton(v));
            let prev = tw[rest.bits() as usize];
            if prev >= tw[mask] {
                continue;
            }
            let q = later_neighbors(g, rest, v).len() as i32;
            let value = prev.max(q);
            if value < tw[mask] {
                tw[mask] = value;
                last[mask] = v as u8;
            }
        }
    }
    let mut order = Vec::with_capacity(n);
    let mut mask = subsets - 1;
    while mask != 0 {
        let v = last[mask] as usize;
        order.push(v);
        mask &= !(1 << v);
    }
    order.reverse();
    Ok((tw[subsets - 1], order))
}

/// `Q(earlier, v)`: vertices outside `earlier + v` reachable from `v` through `earlier`.
fn later_neighbors(g: &Graph, earlier: VertexSet, v: usize) -> VertexSet {
    let mut room = earlier;
    room.insert(v);
    let comp = g.component_within(v, room);
    g.neighborhood(comp).difference(room)
}
