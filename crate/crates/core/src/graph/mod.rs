//! Finite simple undirected graphs on dense vertex ids `0..n`.
//!
//! Adjacency is one `u64` bitset per vertex, so graphs are capped at
//! [`MAX_VERTICES`] vertices. Every workload in this crate (exhaustive scans,
//! exact minor search, exact treewidth) lives far below that cap.

mod enumerate;
mod generators;
pub mod graph6;

use std::collections::VecDeque;
use std::fmt;

use serde::de::Deserializer;
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use enumerate::{canonical_code, canonical_form, enumerate_graphs, MAX_ENUMERATION_ORDER};
pub use generators::Generator;

pub const MAX_VERTICES: usize = 64;

/// A set of vertex ids below [`MAX_VERTICES`], stored as a bitmask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const fn empty() -> Self {
        VertexSet(0)
    }

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1 << v)
    }

    /// The set `{0, 1, .., n-1}`.
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1 << v);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    /// Smallest member, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::empty();
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;

    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for VertexIter {}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len()))?;
        for v in self.iter() {
            seq.serialize_element(&v)?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let ids = Vec::<usize>::deserialize(deserializer)?;
        if let Some(&v) = ids.iter().find(|&&v| v >= MAX_VERTICES) {
            return Err(serde::de::Error::custom(format!("vertex id {v} out of range")));
        }
        Ok(ids.into_iter().collect())
    }
}

/// A finite simple undirected graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooLarge { n, max: MAX_VERTICES });
        }
        Ok(Graph {
            n,
            adj: vec![VertexSet::empty(); n],
        })
    }

    /// Builds a graph from unordered pairs. Repeated edges are merged.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        for x in [u, v] {
            if x >= self.n {
                return Err(Error::OutOfRange { vertex: x, n: self.n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        if u < self.n && v < self.n {
            self.adj[u].remove(v);
            self.adj[v].remove(u);
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.adj[u].iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    /// Union of the neighborhoods of every vertex in `s`.
    pub fn neighborhood(&self, s: VertexSet) -> VertexSet {
        s.iter().fold(VertexSet::empty(), |acc, v| acc.union(self.adj[v]))
    }

    /// The connected component of `start` inside the subgraph induced on `within`.
    pub fn component_within(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut reached = VertexSet::singleton(start);
        let mut frontier = reached;
        while !frontier.is_empty() {
            let next = self.neighborhood(frontier).intersection(within).difference(reached);
            reached = reached.union(next);
            frontier = next;
        }
        reached
    }

    /// Whether `s` induces a connected subgraph. A single vertex counts as connected.
    pub fn is_connected_subset(&self, s: VertexSet) -> Result<bool> {
        self.check_set(s)?;
        let start = s.first().ok_or(Error::EmptySet)?;
        Ok(self.component_within(start, s) == s)
    }

    /// Whether some edge joins `s` and `t`.
    pub fn connected_to_each_other(&self, s: VertexSet, t: VertexSet) -> Result<bool> {
        self.check_set(s)?;
        self.check_set(t)?;
        if s.is_empty() || t.is_empty() {
            return Err(Error::EmptySet);
        }
        if !s.is_disjoint(t) {
            return Err(Error::Overlap);
        }
        Ok(!self.neighborhood(s).is_disjoint(t))
    }

    /// Whether the whole graph is connected. The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.component_within(0, self.vertices()) == self.vertices()
    }

    /// Breadth-first distances from `start`; unreachable vertices get `None`.
    pub fn bfs_distances(&self, start: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        let mut queue = VecDeque::from([start]);
        dist[start] = Some(0);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap_or(0);
            for v in self.adj[u] {
                if dist[v].is_none() {
                    dist[v] = Some(d + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Applies `perm`, which maps old ids to new ids.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let mut adj = vec![VertexSet::empty(); self.n];
        for (u, v) in self.edges() {
            adj[perm[u]].insert(perm[v]);
            adj[perm[v]].insert(perm[u]);
        }
        Graph { n: self.n, adj }
    }

    pub fn check_set(&self, s: VertexSet) -> Result<()> {
        match s.difference(self.vertices()).first() {
            Some(v) => Err(Error::OutOfRange { vertex: v, n: self.n }),
            None => Ok(()),
        }
    }

    pub fn to_graph6(&self) -> Result<String> {
        graph6::encode(self)
    }

    pub fn from_graph6(line: &str) -> Result<Graph> {
        graph6::decode(line)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges())
            .finish()
    }
}
