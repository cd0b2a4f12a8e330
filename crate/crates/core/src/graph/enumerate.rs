//! Isomorphism-free enumeration of small graphs.
//!
//! The canonical form of a graph is the relabeling whose adjacency bit-string
//! (graph6 pair order) is lexicographically smallest over all vertex
//! permutations. The minimum is found by a depth-first search over
//! permutations that abandons any prefix already larger than the best string
//! seen, which returns exactly the full-minimization result.

use std::collections::BTreeSet;
use std::sync::OnceLock;

use super::{Graph, VertexSet};
use crate::error::{Error, Result};

pub const MAX_ENUMERATION_ORDER: usize = 7;

/// Largest order whose adjacency bit-string fits in a `u64` code.
const MAX_CANONICAL_ORDER: usize = 11;

/// Canonical code: bit string with the pair `(0,1)` as most significant bit.
pub fn canonical_code(g: &Graph) -> Result<u64> {
    Ok(canonize(g)?.0)
}

/// The canonical relabeling of `g`.
pub fn canonical_form(g: &Graph) -> Result<Graph> {
    let (_, order) = canonize(g)?;
    let mut perm = vec![0; g.n()];
    for (pos, &v) in order.iter().enumerate() {
        perm[v] = pos;
    }
    Ok(g.relabel(&perm))
}

fn canonize(g: &Graph) -> Result<(u64, Vec<usize>)> {
    let n = g.n();
    if n > MAX_CANONICAL_ORDER {
        return Err(Error::TooLarge {
            n,
            max: MAX_CANONICAL_ORDER,
        });
    }
    let total = n * n.saturating_sub(1) / 2;
    let mut search = CanonSearch {
        g,
        total_bits: total,
        order: Vec::with_capacity(n),
        best: None,
    };
    search.extend(VertexSet::empty(), 0, 0);
    Ok(search.best.unwrap_or((0, Vec::new())))
}

struct CanonSearch<'a> {
    g: &'a Graph,
    total_bits: usize,
    order: Vec<usize>,
    best: Option<(u64, Vec<usize>)>,
}

impl CanonSearch<'_> {
    fn extend(&mut self, used: VertexSet, prefix: u64, prefix_len: usize) {
        let n = self.g.n();
        if self.order.len() == n {
            if self.best.as_ref().is_none_or(|(b, _)| prefix < *b) {
                self.best = Some((prefix, self.order.clone()));
            }
            return;
        }
        for v in VertexSet::full(n).difference(used) {
            let mut code = prefix;
            for &u in &self.order {
                code = code << 1 | self.g.has_edge(u, v) as u64;
            }
            let len = prefix_len + self.order.len();
            if let Some((best, _)) = &self.best {
                if code > best >> (self.total_bits - len) {
                    continue;
                }
            }
            self.order.push(v);
            let mut next = used;
            next.insert(v);
            self.extend(next, code, len);
            self.order.pop();
        }
    }
}

fn graph_from_code(n: usize, code: u64) -> Graph {
    let total = n * n.saturating_sub(1) / 2;
    let mut g = Graph::empty(n).expect("enumeration order is tiny");
    let mut bit = 0;
    for j in 1..n {
        for i in 0..j {
            if code >> (total - 1 - bit) & 1 == 1 {
                g.add_edge(i, j).expect("ids in range");
            }
            bit += 1;
        }
    }
    g
}

static CACHE: [OnceLock<Vec<u64>>; MAX_ENUMERATION_ORDER + 1] = [const { OnceLock::new() }; MAX_ENUMERATION_ORDER + 1];

fn codes(n: usize) -> &'static [u64] {
    CACHE[n].get_or_init(|| {
        if n == 0 {
            return vec![0];
        }
        // Every graph on n vertices is a graph on n-1 vertices plus one vertex.
        let mut found = BTreeSet::new();
        for &code in codes(n - 1) {
            let base = graph_from_code(n - 1, code);
            for nbrs in 0..1u64 << (n - 1) {
                let mut g = Graph::empty(n).expect("tiny");
                for (u, v) in base.edges() {
                    g.add_edge(u, v).expect("in range");
                }
                for u in VertexSet::from_bits(nbrs) {
                    g.add_edge(u, n - 1).expect("in range");
                }
                found.insert(canonical_code(&g).expect("tiny"));
            }
        }
        found.into_iter().collect()
    })
}

/// One canonical representative per isomorphism class of graphs on `n`
/// vertices, in ascending canonical-code order.
pub fn enumerate_graphs(n: usize) -> Result<Vec<Graph>> {
    if n > MAX_ENUMERATION_ORDER {
        return Err(Error::TooLarge {
            n,
            max: MAX_ENUMERATION_ORDER,
        });
    }
    Ok(codes(n).iter().map(|&c| graph_from_code(n, c)).collect())
}
