//! Brute-force oracles. Each one works straight from the definitions and
//! shares no code path with the library routine it checks.
#![allow(dead_code)]

use hadwiger_core::{Graph, RootedTree, TreeDecomposition, VertexSet};

pub fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, n: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for v in 0..n {
            if !prefix.contains(&v) {
                prefix.push(v);
                rec(prefix, n, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), n, &mut out);
    out
}

/// Edge set as a sorted list, after relabeling by `perm` (old -> new).
fn relabeled_edges(edges: &[(usize, usize)], perm: &[usize]) -> Vec<(usize, usize)> {
    let mut out: Vec<_> = edges
        .iter()
        .map(|&(u, v)| (perm[u].min(perm[v]), perm[u].max(perm[v])))
        .collect();
    out.sort_unstable();
    out
}

pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return false;
    }
    let target = b.edges();
    all_permutations(a.n())
        .iter()
        .any(|p| relabeled_edges(&a.edges(), p) == target)
}

/// Number of isomorphism classes of graphs on `n` vertices, by listing all
/// `2^(n choose 2)` labeled graphs and keeping the smallest relabeled edge
/// list of each.
pub fn brute_force_class_count(n: usize) -> usize {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let perms = all_permutations(n);
    let mut seen = std::collections::BTreeSet::new();
    for mask in 0u64..1 << pairs.len() {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &p)| p)
            .collect();
        let canon = perms.iter().map(|p| relabeled_edges(&edges, p)).min().unwrap();
        seen.insert(canon);
    }
    seen.len()
}

/// Whether some assignment of vertices to `k` labeled parts or "unused"
/// satisfies the branch-set definition.
pub fn naive_has_clique_minor(g: &Graph, k: usize) -> bool {
    let n = g.n();
    let mut assign = vec![0usize; n];
    loop {
        let mut parts = vec![Vec::new(); k];
        for (v, &a) in assign.iter().enumerate() {
            if a < k {
                parts[a].push(v);
            }
        }
        if parts.iter().all(|p| !p.is_empty() && naive_connected(g, p))
            && (0..k).all(|i| (i + 1..k).all(|j| parts[i].iter().any(|&u| parts[j].iter().any(|&w| g.has_edge(u, w)))))
        {
            return true;
        }
        // next assignment in base k+1
        let mut i = 0;
        loop {
            if i == n {
                return false;
            }
            assign[i] += 1;
            if assign[i] <= k {
                break;
            }
            assign[i] = 0;
            i += 1;
        }
    }
}

fn naive_connected(g: &Graph, part: &[usize]) -> bool {
    let mut reached = vec![part[0]];
    let mut grew = true;
    while grew {
        grew = false;
        for &v in part {
            if !reached.contains(&v) && reached.iter().any(|&r| g.has_edge(r, v)) {
                reached.push(v);
                grew = true;
            }
        }
    }
    reached.len() == part.len()
}

/// Connectivity by depth-first search over an explicit adjacency list.
pub fn dfs_connected(g: &Graph) -> bool {
    let n = g.n();
    if n == 0 {
        return true;
    }
    let adj: Vec<Vec<usize>> = (0..n).map(|u| (0..n).filter(|&v| g.has_edge(u, v)).collect()).collect();
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(u) = stack.pop() {
        for &v in &adj[u] {
            if !seen[v] {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Treewidth as the minimum over all elimination orders of the largest
/// number of later neighbors in the filled graph.
pub fn brute_force_treewidth(g: &Graph) -> usize {
    let n = g.n();
    all_permutations(n)
        .into_iter()
        .map(|order| {
            let mut adj: Vec<Vec<bool>> = (0..n).map(|u| (0..n).map(|v| g.has_edge(u, v)).collect()).collect();
            let mut gone = vec![false; n];
            let mut worst = 0;
            for &v in &order {
                let later: Vec<usize> = (0..n).filter(|&u| !gone[u] && adj[v][u]).collect();
                worst = worst.max(later.len());
                for &a in &later {
                    for &b in &later {
                        if a != b {
                            adj[a][b] = true;
                        }
                    }
                }
                gone[v] = true;
            }
            worst
        })
        .min()
        .unwrap_or(0)
}

/// Least `k` such that some of the `k^n` assignments is proper.
pub fn naive_chromatic_number(g: &Graph) -> usize {
    let n = g.n();
    for k in 1..=n {
        let total = (k as u64).pow(n as u32);
        for code in 0..total {
            let mut c = code;
            let colors: Vec<u64> = (0..n)
                .map(|_| {
                    let x = c % k as u64;
                    c /= k as u64;
                    x
                })
                .collect();
            if g.edges().iter().all(|&(u, v)| colors[u] != colors[v]) {
                return k;
            }
        }
    }
    0
}

/// `a <= b` in the tree order, read off the parent pointers directly.
pub fn leq(tree: &RootedTree, a: usize, b: usize) -> bool {
    let mut t = Some(b);
    while let Some(x) = t {
        if x == a {
            return true;
        }
        t = tree.parent(x);
    }
    false
}

/// The infimum as the greatest common lower bound, by scanning every node.
pub fn infimum(tree: &RootedTree, a: usize, b: usize) -> usize {
    let lower: Vec<usize> = (0..tree.len())
        .filter(|&t| leq(tree, t, a) && leq(tree, t, b))
        .collect();
    *lower
        .iter()
        .find(|&&t| lower.iter().all(|&s| leq(tree, s, t)))
        .expect("infimum exists")
}

/// `T[t1,t2]` exactly as defined: nodes above the infimum and below t1 or t2.
pub fn literal_path_set(tree: &RootedTree, t1: usize, t2: usize) -> Vec<usize> {
    let meet = infimum(tree, t1, t2);
    (0..tree.len())
        .filter(|&t| leq(tree, meet, t) && (leq(tree, t, t1) || leq(tree, t, t2)))
        .collect()
}

/// Decomposition validity straight from the coverage and path axioms.
pub fn literal_is_valid(g: &Graph, td: &TreeDecomposition) -> bool {
    let bags = td.bags();
    let covered = (0..g.n()).all(|v| bags.iter().any(|b| b.contains(v)))
        && g.edges()
            .iter()
            .all(|&(u, v)| bags.iter().any(|b| b.contains(u) && b.contains(v)));
    let tree = td.tree();
    let paths_ok = (0..tree.len()).all(|t1| {
        (0..tree.len()).all(|t2| {
            let shared = bags[t1].intersection(bags[t2]);
            literal_path_set(tree, t1, t2)
                .iter()
                .all(|&t| shared.is_subset(bags[t]))
        })
    });
    covered && paths_ok
}

/// All chains of the tree: every nonempty subset of some root path.
pub fn all_chains(tree: &RootedTree) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for t in 0..tree.len() {
        let above: Vec<usize> = (0..tree.len()).filter(|&s| s != t && leq(tree, s, t)).collect();
        for mask in 0u64..1 << above.len() {
            let mut chain: Vec<usize> = above
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &s)| s)
                .collect();
            chain.push(t);
            out.push(chain);
        }
    }
    out
}

/// `|U_{t in C} (intersection of W(t') for t' in C with t' >= t)|`.
pub fn literal_chain_value(td: &TreeDecomposition, chain: &[usize]) -> usize {
    let tree = td.tree();
    let mut union = VertexSet::empty();
    for &t in chain {
        let mut meet = VertexSet::full(td.vertex_count());
        for &s in chain {
            if leq(tree, t, s) {
                meet = meet.intersection(td.bag(s));
            }
        }
        union = union.union(meet);
    }
    union.len()
}
