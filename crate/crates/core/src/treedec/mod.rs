//! Finite well-founded trees and tree decompositions.
//!
//! A finite poset in which every pair has an infimum and every principal
//! down-set is a chain is a rooted tree ordered by ancestry, so trees are
//! stored as parent arrays: `a <= b` iff `a` lies on the root path of `b`.

mod decompose;
pub mod td_format;

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

pub use decompose::{
    decompose, elimination_order, exact_treewidth, from_elimination_order, Strategy, MAX_EXACT_VERTICES,
};

/// A rooted tree on nodes `0..len`, ordered by ancestry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootedTree {
    parent: Vec<Option<usize>>,
    root: usize,
    children: Vec<Vec<usize>>,
    depth: Vec<usize>,
}

impl RootedTree {
    /// Validates a parent array: exactly one root, links in range, no cycles.
    pub fn from_parents(parent: Vec<Option<usize>>) -> Result<Self> {
        let len = parent.len();
        if len == 0 {
            return Err(Error::InvalidTree("a tree needs at least one node".into()));
        }
        let roots: Vec<usize> = (0..len).filter(|&t| parent[t].is_none()).collect();
        if roots.len() != 1 {
            return Err(Error::InvalidTree(format!("expected one root, found {}", roots.len())));
        }
        let mut children = vec![Vec::new(); len];
        for (t, p) in parent.iter().enumerate() {
            if let Some(p) = *p {
                if p >= len {
                    return Err(Error::InvalidTree(format!("parent {p} of node {t} out of range")));
                }
                children[p].push(t);
            }
        }
        let root = roots[0];
        let mut depth = vec![usize::MAX; len];
        depth[root] = 0;
        let mut queue = VecDeque::from([root]);
        let mut seen = 1;
        while let Some(t) = queue.pop_front() {
            for &c in &children[t] {
                depth[c] = depth[t] + 1;
                seen += 1;
                queue.push_back(c);
            }
        }
        if seen != len {
            return Err(Error::InvalidTree("some node does not reach the root".into()));
        }
        Ok(RootedTree {
            parent,
            root,
            children,
            depth,
        })
    }

    /// A single-node tree.
    pub fn singleton() -> Self {
        RootedTree::from_parents(vec![None]).expect("one root")
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn parent(&self, t: usize) -> Option<usize> {
        self.parent[t]
    }

    pub fn parents(&self) -> &[Option<usize>] {
        &self.parent
    }

    /// Children in ascending id order.
    pub fn children(&self, t: usize) -> &[usize] {
        &self.children[t]
    }

    pub fn depth(&self, t: usize) -> usize {
        self.depth[t]
    }

    fn check(&self, t: usize) -> Result<()> {
        if t < self.len() {
            Ok(())
        } else {
            Err(Error::BadNode(t))
        }
    }

    /// `a <= b` in the tree order: `a` is `b` or one of its ancestors.
    pub fn is_ancestor(&self, a: usize, b: usize) -> bool {
        let mut t = b;
        while self.depth[t] > self.depth[a] {
            t = self.parent[t].expect("non-root has a parent");
        }
        t == a
    }

    /// Infimum of two nodes (their lowest common ancestor).
    pub fn infimum(&self, a: usize, b: usize) -> usize {
        let (mut a, mut b) = (a, b);
        while self.depth[a] > self.depth[b] {
            a = self.parent[a].expect("non-root");
        }
        while self.depth[b] > self.depth[a] {
            b = self.parent[b].expect("non-root");
        }
        while a != b {
            a = self.parent[a].expect("non-root");
            b = self.parent[b].expect("non-root");
        }
        a
    }

    /// Nodes from the root down to `t`, inclusive.
    pub fn root_path(&self, t: usize) -> Vec<usize> {
        let mut path = vec![t];
        let mut cur = t;
        while let Some(p) = self.parent[cur] {
            path.push(p);
            cur = p;
        }
        path.reverse();
        path
    }

    /// Breadth-first order from the root, children by ascending id. Every
    /// ancestor precedes its descendants, so this is a linear extension of
    /// the tree order.
    pub fn bfs_order(&self) -> Vec<usize> {
        let mut order = Vec::with_capacity(self.len());
        let mut queue = VecDeque::from([self.root]);
        while let Some(t) = queue.pop_front() {
            order.push(t);
            queue.extend(self.children[t].iter().copied());
        }
        order
    }

    /// Undirected edges `(a, b)` with `a < b`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut edges: Vec<_> = (0..self.len())
            .filter_map(|t| self.parent[t].map(|p| (t.min(p), t.max(p))))
            .collect();
        edges.sort_unstable();
        edges
    }

    pub fn leaves(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(|&t| self.children[t].is_empty())
    }

    /// The same underlying tree, rooted at `new_root`.
    pub fn reroot(&self, new_root: usize) -> Result<RootedTree> {
        self.check(new_root)?;
        RootedTree::from_undirected(self.len(), &self.edges(), new_root)
    }

    /// Roots an undirected tree given by its edge list.
    pub fn from_undirected(len: usize, edges: &[(usize, usize)], root: usize) -> Result<RootedTree> {
        if root >= len {
            return Err(Error::BadNode(root));
        }
        if edges.len() + 1 != len {
            return Err(Error::InvalidTree(format!(
                "{} edges cannot form a tree on {len} nodes",
                edges.len()
            )));
        }
        let mut nbrs = vec![Vec::new(); len];
        for &(a, b) in edges {
            if a >= len || b >= len || a == b {
                return Err(Error::InvalidTree(format!("bad tree edge {a}-{b}")));
            }
            nbrs[a].push(b);
            nbrs[b].push(a);
        }
        let mut parent = vec![None; len];
        let mut seen = vec![false; len];
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(t) = queue.pop_front() {
            for &u in &nbrs[t] {
                if !seen[u] {
                    seen[u] = true;
                    parent[u] = Some(t);
                    queue.push_back(u);
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::InvalidTree("tree edges do not connect all nodes".into()));
        }
        RootedTree::from_parents(parent)
    }
}

/// The node set `T[t1, t2]`: every node above `inf(t1, t2)` that lies below
/// `t1` or below `t2`, i.e. the tree path between them. Sorted ascending.
pub fn tree_path_set(tree: &RootedTree, t1: usize, t2: usize) -> Result<Vec<usize>> {
    tree.check(t1)?;
    tree.check(t2)?;
    let meet = tree.infimum(t1, t2);
    let mut nodes = Vec::new();
    for start in [t1, t2] {
        let mut t = start;
        while t != meet {
            nodes.push(t);
            t = tree.parent(t).expect("below the meet");
        }
    }
    nodes.push(meet);
    nodes.sort_unstable();
    nodes.dedup();
    Ok(nodes)
}

/// A rooted tree with one bag of graph vertices per node.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeDecomposition {
    tree: RootedTree,
    bags: Vec<VertexSet>,
    vertex_count: usize,
}

impl TreeDecomposition {
    /// Structural checks only: one bag per node, bag members below `vertex_count`.
    /// The decomposition axioms are checked by [`verify_decomposition`].
    pub fn new(tree: RootedTree, bags: Vec<VertexSet>, vertex_count: usize) -> Result<Self> {
        if bags.len() != tree.len() {
            return Err(Error::InvalidTree(format!(
                "{} bags for {} tree nodes",
                bags.len(),
                tree.len()
            )));
        }
        let allowed = VertexSet::full(vertex_count);
        if let Some(v) = bags.iter().find_map(|b| b.difference(allowed).first()) {
            return Err(Error::OutOfRange {
                vertex: v,
                n: vertex_count,
            });
        }
        Ok(TreeDecomposition {
            tree,
            bags,
            vertex_count,
        })
    }

    pub fn tree(&self) -> &RootedTree {
        &self.tree
    }

    pub fn bags(&self) -> &[VertexSet] {
        &self.bags
    }

    pub fn bag(&self, t: usize) -> VertexSet {
        self.bags[t]
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn bag_width(&self) -> usize {
        self.bags.iter().map(|b| b.len()).max().unwrap_or(0)
    }

    /// Same bags, tree re-rooted at `root`.
    pub fn rerooted(&self, root: usize) -> Result<TreeDecomposition> {
        Ok(TreeDecomposition {
            tree: self.tree.reroot(root)?,
            bags: self.bags.clone(),
            vertex_count: self.vertex_count,
        })
    }

    /// Contracts every tree edge whose two bags are nested, keeping the larger
    /// bag, until no adjacent pair is nested. Nodes are renumbered in
    /// ascending order of their surviving ids; the result is rooted at node 0.
    pub fn simplify(&self) -> TreeDecomposition {
        let len = self.tree.len();
        let mut alive = vec![true; len];
        let mut bags = self.bags.clone();
        let mut nbrs: Vec<Vec<usize>> = vec![Vec::new(); len];
        for (a, b) in self.tree.edges() {
            nbrs[a].push(b);
            nbrs[b].push(a);
        }
        'outer: loop {
            for a in (0..len).filter(|&a| alive[a]) {
                for &b in &nbrs[a] {
                    if bags[a].is_subset(bags[b]) {
                        // fold a into b
                        let moved = std::mem::take(&mut nbrs[a]);
                        for &c in &moved {
                            nbrs[c].retain(|&x| x != a);
                            if c != b {
                                nbrs[c].push(b);
                                nbrs[b].push(c);
                            }
                        }
                        alive[a] = false;
                        continue 'outer;
                    } else if bags[b].is_subset(bags[a]) {
                        bags[b] = bags[a];
                        let moved = std::mem::take(&mut nbrs[a]);
                        for &c in &moved {
                            nbrs[c].retain(|&x| x != a);
                            if c != b {
                                nbrs[c].push(b);
                                nbrs[b].push(c);
                            }
                        }
                        alive[a] = false;
                        continue 'outer;
                    }
                }
            }
            break;
        }
        let survivors: Vec<usize> = (0..len).filter(|&t| alive[t]).collect();
        let mut new_id = vec![usize::MAX; len];
        for (i, &t) in survivors.iter().enumerate() {
            new_id[t] = i;
        }
        let mut edges = Vec::new();
        for &a in &survivors {
            for &b in &nbrs[a] {
                if a < b {
                    edges.push((new_id[a], new_id[b]));
                }
            }
        }
        let tree = RootedTree::from_undirected(survivors.len(), &edges, 0).expect("contraction keeps a tree");
        let bags = survivors.iter().map(|&t| bags[t]).collect();
        TreeDecomposition::new(tree, bags, self.vertex_count).expect("same vertices")
    }

    /// Copy with `bag(t)` replaced.
    pub fn with_bag(&self, t: usize, bag: VertexSet) -> Result<TreeDecomposition> {
        self.tree.check(t)?;
        let mut bags = self.bags.clone();
        bags[t] = bag;
        TreeDecomposition::new(self.tree.clone(), bags, self.vertex_count)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict<W> {
    Pass,
    Fail(W),
}

impl<W> Verdict<W> {
    pub fn passed(&self) -> bool {
        matches!(self, Verdict::Pass)
    }
}

impl<W: fmt::Display> fmt::Display for Verdict<W> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Pass => f.write_str("pass"),
            Verdict::Fail(w) => write!(f, "FAIL ({w})"),
        }
    }
}

/// Coverage failure: a vertex or an edge lies in no bag.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoverageWitness {
    Vertex(usize),
    Edge(usize, usize),
    OutOfRange(usize),
}

impl fmt::Display for CoverageWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoverageWitness::Vertex(v) => write!(f, "vertex {v} in no bag"),
            CoverageWitness::Edge(u, v) => write!(f, "edge {{{u},{v}}} in no bag"),
            CoverageWitness::OutOfRange(v) => write!(f, "bag vertex {v} not in the graph"),
        }
    }
}

/// `vertex` lies in `bag(t1)` and `bag(t2)` but not in `bag(between)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PathWitness {
    pub t1: usize,
    pub t2: usize,
    pub between: usize,
    pub vertex: usize,
}

impl fmt::Display for PathWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "vertex {} in bags {} and {} but not in bag {}",
            self.vertex, self.t1, self.t2, self.between
        )
    }
}

/// `vertex` lies in every bag of `chain` but not in the bag of its supremum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainWitness {
    pub chain: Vec<usize>,
    pub vertex: usize,
}

impl fmt::Display for ChainWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "vertex {} in every bag of chain {:?} but not at its supremum",
            self.vertex, self.chain
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionReport {
    /// Vertex and edge coverage.
    pub w1: Verdict<CoverageWitness>,
    /// Bag intersections persist along tree paths.
    pub w2: Verdict<PathWitness>,
    /// Chain intersections land in the supremum's bag.
    pub w3: Verdict<ChainWitness>,
}

impl DecompositionReport {
    pub fn all_pass(&self) -> bool {
        self.w1.passed() && self.w2.passed() && self.w3.passed()
    }
}

/// Checks the three decomposition axioms, each with a concrete witness on failure.
pub fn verify_decomposition(g: &Graph, td: &TreeDecomposition) -> DecompositionReport {
    DecompositionReport {
        w1: verify_coverage(g, td),
        w2: check_paths(td),
        w3: check_chains(td),
    }
}

/// The vertex and edge coverage axiom on its own.
pub fn verify_coverage(g: &Graph, td: &TreeDecomposition) -> Verdict<CoverageWitness> {
    let all = td.bags.iter().fold(VertexSet::empty(), |acc, b| acc.union(*b));
    if let Some(v) = all.difference(g.vertices()).first() {
        return Verdict::Fail(CoverageWitness::OutOfRange(v));
    }
    if let Some(v) = g.vertices().difference(all).first() {
        return Verdict::Fail(CoverageWitness::Vertex(v));
    }
    for (u, v) in g.edges() {
        if !td.bags.iter().any(|b| b.contains(u) && b.contains(v)) {
            return Verdict::Fail(CoverageWitness::Edge(u, v));
        }
    }
    Verdict::Pass
}

fn check_paths(td: &TreeDecomposition) -> Verdict<PathWitness> {
    let tree = &td.tree;
    for t1 in 0..tree.len() {
        for t2 in t1 + 1..tree.len() {
            let shared = td.bags[t1].intersection(td.bags[t2]);
            if shared.is_empty() {
                continue;
            }
            let path = tree_path_set(tree, t1, t2).expect("valid nodes");
            for between in path {
                if let Some(vertex) = shared.difference(td.bags[between]).first() {
                    return Verdict::Fail(PathWitness {
                        t1,
                        t2,
                        between,
                        vertex,
                    });
                }
            }
        }
    }
    Verdict::Pass
}

/// Every finite chain has its supremum as its maximum, so this holds for any
/// finite tree; it is still evaluated literally on every downward-closed
/// chain (each root path).
fn check_chains(td: &TreeDecomposition) -> Verdict<ChainWitness> {
    for t in 0..td.tree.len() {
        let chain = td.tree.root_path(t);
        let meet = chain
            .iter()
            .fold(VertexSet::full(td.vertex_count), |acc, &c| acc.intersection(td.bags[c]));
        let sup = *chain.last().expect("nonempty");
        if let Some(vertex) = meet.difference(td.bags[sup]).first() {
            return Verdict::Fail(ChainWitness { chain, vertex });
        }
    }
    Verdict::Pass
}

/// Trees with at most this many nodes get exhaustive chain enumeration.
pub const DEFAULT_CHAIN_NODE_LIMIT: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WidthReport {
    /// Largest bag cardinality.
    pub bag_width: usize,
    /// Largest `|U_{t in C} (intersection of bag(t') for t' in C, t' >= t)|` over chains `C`.
    pub chain_width: usize,
    /// False when the tree was too large for exhaustive chains; `chain_width`
    /// is then a lower bound from singletons and root-to-leaf chains.
    pub chain_width_exact: bool,
}

pub fn width(td: &TreeDecomposition) -> WidthReport {
    width_with_limit(td, DEFAULT_CHAIN_NODE_LIMIT)
}

/// Like [`width`], enumerating every chain only when the tree has at most
/// `node_limit` nodes.
pub fn width_with_limit(td: &TreeDecomposition, node_limit: usize) -> WidthReport {
    let bag_width = td.bag_width();
    let exact = td.tree.len() <= node_limit;
    let mut chain_width = bag_width;
    if exact {
        for t in 0..td.tree.len() {
            let mut above = td.tree.root_path(t);
            above.pop();
            above.reverse();
            let bag = td.bags[t];
            chain_width = chain_width.max(best_chain_below(td, &above, bag, bag));
        }
    } else {
        for leaf in td.tree.leaves() {
            let chain = td.tree.root_path(leaf);
            chain_width = chain_width.max(chain_value(td, &chain));
        }
    }
    WidthReport {
        bag_width,
        chain_width,
        chain_width_exact: exact,
    }
}

/// Maximum chain value over all subsets of `above` (nearest ancestor first)
/// added to a chain whose suffix intersection is `meet` and value set `union`.
fn best_chain_below(td: &TreeDecomposition, above: &[usize], meet: VertexSet, union: VertexSet) -> usize {
    match above.split_first() {
        None => union.len(),
        Some((&a, rest)) => {
            let skip = best_chain_below(td, rest, meet, union);
            let m = meet.intersection(td.bags[a]);
            skip.max(best_chain_below(td, rest, m, union.union(m)))
        }
    }
}

/// Value of one chain, given in ascending tree order.
pub fn chain_value(td: &TreeDecomposition, chain: &[usize]) -> usize {
    let mut meet = VertexSet::full(td.vertex_count);
    let mut union = VertexSet::empty();
    for &t in chain.iter().rev() {
        meet = meet.intersection(td.bags[t]);
        union = union.union(meet);
    }
    union.len()
}
