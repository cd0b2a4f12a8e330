//! Decomposition-driven coloring and an exact chromatic-number solver.
//!
//! Given a valid tree decomposition, vertices are ordered by the first node
//! (in a breadth-first linear extension of the tree order) whose bag holds
//! them, ties broken by rank inside that bag. Each vertex then takes the
//! least color not already used inside the bag of its first node. The
//! result is injective on every bag, hence proper, and never needs more
//! colors than the largest bag.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::minors::greedy_clique_number;
use crate::treedec::{verify_coverage, verify_decomposition, TreeDecomposition, Verdict};

/// A total map from vertex ids to color indices.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    pub colors: Vec<usize>,
}

impl Coloring {
    pub fn new(colors: Vec<usize>) -> Self {
        Coloring { colors }
    }

    /// `1 + max color`, or 0 for the empty coloring.
    pub fn num_colors(&self) -> usize {
        self.colors.iter().max().map_or(0, |&c| c + 1)
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }
}

/// The vertex order that drives [`color_by_decomposition`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexOrder {
    /// Vertices sorted by `(position of first_node, rank in that bag)`.
    pub sequence: Vec<usize>,
    /// `first_node[x]`: earliest node in `linear_extension` whose bag contains `x`.
    pub first_node: Vec<usize>,
    /// Tree nodes in breadth-first order from the root, children by ascending id.
    pub linear_extension: Vec<usize>,
    /// `position[t]`: index of node `t` in `linear_extension`.
    pub position: Vec<usize>,
    bags: Vec<VertexSet>,
}

impl VertexOrder {
    /// Rank of `x` among the members of bag `t` (ascending ids), if present.
    pub fn phi(&self, t: usize, x: usize) -> Option<usize> {
        let bag = *self.bags.get(t)?;
        bag.contains(x).then(|| bag.iter().take_while(|&v| v < x).count())
    }
}

pub fn order_vertices(g: &Graph, td: &TreeDecomposition) -> Result<VertexOrder> {
    let n = g.n();
    let stray = td
        .bags()
        .iter()
        .fold(VertexSet::empty(), |a, b| a.union(*b))
        .difference(g.vertices());
    if let Some(v) = stray.first() {
        return Err(Error::ImproperDecomposition(format!(
            "bag vertex {v} is not in the graph"
        )));
    }
    let linear_extension = td.tree().bfs_order();
    let mut position = vec![0; linear_extension.len()];
    for (i, &t) in linear_extension.iter().enumerate() {
        position[t] = i;
    }
    let mut first_node = vec![usize::MAX; n];
    for &t in &linear_extension {
        for x in td.bag(t) {
            if first_node[x] == usize::MAX {
                first_node[x] = t;
            }
        }
    }
    if let Some(x) = first_node.iter().position(|&t| t == usize::MAX) {
        return Err(Error::UncoveredVertex(x));
    }
    if cfg!(debug_assertions) {
        let report = verify_decomposition(g, td);
        if let Verdict::Fail(w) = &report.w1 {
            return Err(Error::ImproperDecomposition(w.to_string()));
        }
        if let Verdict::Fail(w) = &report.w2 {
            return Err(Error::ImproperDecomposition(w.to_string()));
        }
    }
    let rank = |t: usize, x: usize| td.bag(t).iter().take_while(|&v| v < x).count();
    let mut sequence: Vec<usize> = (0..n).collect();
    sequence.sort_by_key(|&x| (position[first_node[x]], rank(first_node[x], x)));
    Ok(VertexOrder {
        sequence,
        first_node,
        linear_extension,
        position,
        bags: td.bags().to_vec(),
    })
}

/// Colors `g` greedily along [`order_vertices`], giving each vertex the least
/// color unused by the already-colored members of its first node's bag.
pub fn color_by_decomposition(g: &Graph, td: &TreeDecomposition) -> Result<Coloring> {
    let order = order_vertices(g, td)?;
    if let Verdict::Fail(w) = verify_coverage(g, td) {
        return Err(Error::ImproperDecomposition(w.to_string()));
    }
    let mut colors = vec![0; g.n()];
    let mut done = VertexSet::empty();
    for &x in &order.sequence {
        let peers = td.bag(order.first_node[x]).intersection(done);
        let taken: Vec<usize> = peers.iter().map(|z| colors[z]).collect();
        colors[x] = (0..).find(|c| !taken.contains(c)).expect("finitely many taken");
        done.insert(x);
    }
    // Release builds skip the path axiom; a violation of it can only show up
    // as an improper coloring.
    if let Some((u, v)) = g.edges().into_iter().find(|&(u, v)| colors[u] == colors[v]) {
        return Err(Error::ImproperDecomposition(format!(
            "edge {{{u},{v}}} is not covered consistently by the bags"
        )));
    }
    Ok(Coloring::new(colors))
}

pub fn verify_proper(g: &Graph, c: &Coloring) -> Result<bool> {
    if c.colors.len() != g.n() {
        return Err(Error::PartialColoring {
            expected: g.n(),
            got: c.colors.len(),
        });
    }
    Ok(g.edges().into_iter().all(|(u, v)| c.colors[u] != c.colors[v]))
}

/// Exact chromatic number with a witness coloring.
///
/// Tries `k` upward from a greedy clique bound; each attempt backtracks over
/// vertices in descending degree order (lowest id on ties), never opening
/// more than one new color at a time.
pub fn chromatic_number(g: &Graph) -> Result<(usize, Coloring)> {
    let n = g.n();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut colors = vec![usize::MAX; n];
    for k in greedy_clique_number(g).max(1)..=n {
        if color_with(g, &order, 0, k, 0, &mut colors) {
            return Ok((k, Coloring::new(colors)));
        }
    }
    unreachable!("n colors always suffice")
}

fn color_with(g: &Graph, order: &[usize], idx: usize, k: usize, used: usize, colors: &mut [usize]) -> bool {
    let Some(&v) = order.get(idx) else {
        return true;
    };
    for c in 0..k.min(used + 1) {
        if g.neighbors(v).iter().any(|u| colors[u] == c) {
            continue;
        }
        colors[v] = c;
        if color_with(g, order, idx + 1, k, used.max(c + 1), colors) {
            return true;
        }
    }
    colors[v] = usize::MAX;
    false
}
