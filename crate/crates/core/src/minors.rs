//! Clique minors and clique subdivisions.
//!
//! A `K_k` minor is witnessed by `k` nonempty, pairwise disjoint branch sets,
//! each inducing a connected subgraph, with an edge between every two of
//! them. A `K_k` subdivision is witnessed by `k` branch vertices joined
//! pairwise by internally disjoint paths.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Largest clique order accepted by [`find_subdivision`].
pub const MAX_SUBDIVISION_ORDER: usize = 6;

/// Node cap applied by [`SearchBudget::default_for`] to graphs above ten vertices.
pub const DEFAULT_NODE_CAP: u64 = 10_000_000;

/// Optional cap on the number of search nodes a single exact search may visit.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchBudget(Option<u64>);

impl SearchBudget {
    pub const fn unlimited() -> Self {
        SearchBudget(None)
    }

    pub const fn nodes(cap: u64) -> Self {
        SearchBudget(Some(cap))
    }

    /// Uncapped up to ten vertices, [`DEFAULT_NODE_CAP`] above.
    pub fn default_for(g: &Graph) -> Self {
        if g.n() <= 10 {
            SearchBudget(None)
        } else {
            SearchBudget(Some(DEFAULT_NODE_CAP))
        }
    }

    pub fn cap(self) -> Option<u64> {
        self.0
    }
}

/// Result of a budgeted exact search. `Exhausted` never means absent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome<T> {
    Found(T),
    Absent,
    Exhausted { nodes: u64 },
}

impl<T> SearchOutcome<T> {
    /// `Ok(Some)` / `Ok(None)` for decided searches, an error otherwise.
    pub fn decided(self) -> Result<Option<T>> {
        match self {
            SearchOutcome::Found(t) => Ok(Some(t)),
            SearchOutcome::Absent => Ok(None),
            SearchOutcome::Exhausted { nodes } => Err(Error::SearchExhausted(nodes)),
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self, SearchOutcome::Found(_))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinorCertificate {
    pub parts: Vec<VertexSet>,
}

impl MinorCertificate {
    pub fn new(parts: Vec<VertexSet>) -> Self {
        MinorCertificate { parts }
    }

    pub fn order(&self) -> usize {
        self.parts.len()
    }

    /// The certificate formed by the first `k` parts, which witnesses `K_k`.
    pub fn truncated(&self, k: usize) -> MinorCertificate {
        MinorCertificate {
            parts: self.parts.iter().take(k).copied().collect(),
        }
    }
}

/// Which certificate condition failed first.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MinorClause {
    OutOfRange,
    EmptyPart,
    Overlap,
    Disconnected,
    NotAdjacent,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MinorVerdict {
    Valid,
    Violation { clause: MinorClause, parts: Vec<usize> },
}

impl MinorVerdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, MinorVerdict::Valid)
    }
}

impl fmt::Display for MinorVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MinorVerdict::Valid => f.write_str("valid"),
            MinorVerdict::Violation { clause, parts } => {
                let what = match clause {
                    MinorClause::OutOfRange => "has a vertex id out of range",
                    MinorClause::EmptyPart => "is empty",
                    MinorClause::Overlap => "overlap",
                    MinorClause::Disconnected => "does not induce a connected subgraph",
                    MinorClause::NotAdjacent => "are not connected to each other",
                };
                let ids: Vec<_> = parts.iter().map(|p| p.to_string()).collect();
                let noun = if parts.len() == 1 { "part" } else { "parts" };
                write!(f, "violation: {noun} {} {what}", ids.join(","))
            }
        }
    }
}

/// Checks the branch-set conditions in order: range, nonempty, disjoint,
/// connected, pairwise adjacent.
pub fn verify_clique_minor(g: &Graph, cert: &MinorCertificate) -> MinorVerdict {
    let violation = |clause, parts| MinorVerdict::Violation { clause, parts };
    let parts = &cert.parts;
    if let Some(i) = parts.iter().position(|p| g.check_set(*p).is_err()) {
        return violation(MinorClause::OutOfRange, vec![i]);
    }
    if let Some(i) = parts.iter().position(|p| p.is_empty()) {
        return violation(MinorClause::EmptyPart, vec![i]);
    }
    for i in 0..parts.len() {
        for j in i + 1..parts.len() {
            if !parts[i].is_disjoint(parts[j]) {
                return violation(MinorClause::Overlap, vec![i, j]);
            }
        }
    }
    for (i, p) in parts.iter().enumerate() {
        if g.component_within(p.first().unwrap_or(0), *p) != *p {
            return violation(MinorClause::Disconnected, vec![i]);
        }
    }
    for (i, &p) in parts.iter().enumerate() {
        let reach = g.neighborhood(p);
        for (j, &q) in parts.iter().enumerate().skip(i + 1) {
            if reach.is_disjoint(q) {
                return violation(MinorClause::NotAdjacent, vec![i, j]);
            }
        }
    }
    MinorVerdict::Valid
}

/// Exact search for a `K_k` minor using [`SearchBudget::default_for`].
pub fn find_clique_minor(g: &Graph, k: usize) -> Result<Option<MinorCertificate>> {
    find_clique_minor_with_budget(g, k, SearchBudget::default_for(g))?.decided()
}

/// Exact branch-and-bound search for a `K_k` minor.
///
/// Vertices are visited in ascending order and each is placed into an
/// existing branch set, a new branch set, or left unused. Branch sets are
/// opened in order of their smallest vertex, so no two search paths produce
/// the same partition up to part order.
pub fn find_clique_minor_with_budget(
    g: &Graph,
    k: usize,
    budget: SearchBudget,
) -> Result<SearchOutcome<MinorCertificate>> {
    if k == 0 {
        return Err(Error::BadParameter("clique order must be at least 1".into()));
    }
    if k > g.n() || k * (k - 1) / 2 > g.edge_count() {
        return Ok(SearchOutcome::Absent);
    }
    if let Some(clique) = greedy_clique(g, k) {
        return Ok(SearchOutcome::Found(singletons(&clique)));
    }
    let mut search = MinorSearch {
        g,
        k,
        edges: g.edge_count(),
        parts: Vec::with_capacity(k),
        budget: budget.cap(),
        nodes: 0,
    };
    Ok(match search.place(0) {
        Step::Found => SearchOutcome::Found(MinorCertificate::new(search.parts)),
        Step::Absent => SearchOutcome::Absent,
        Step::Exhausted => SearchOutcome::Exhausted { nodes: search.nodes },
    })
}

enum Step {
    Found,
    Absent,
    Exhausted,
}

struct MinorSearch<'a> {
    g: &'a Graph,
    k: usize,
    edges: usize,
    parts: Vec<VertexSet>,
    budget: Option<u64>,
    nodes: u64,
}

impl MinorSearch<'_> {
    fn place(&mut self, v: usize) -> Step {
        self.nodes += 1;
        if self.budget.is_some_and(|cap| self.nodes > cap) {
            return Step::Exhausted;
        }
        if self.parts.len() == self.k && self.is_complete() {
            return Step::Found;
        }
        let n = self.g.n();
        if v == n || !self.feasible(v) {
            return Step::Absent;
        }
        for i in 0..self.parts.len() {
            self.parts[i].insert(v);
            let step = self.place(v + 1);
            if !matches!(step, Step::Absent) {
                return step;
            }
            self.parts[i].remove(v);
        }
        if self.parts.len() < self.k {
            self.parts.push(VertexSet::singleton(v));
            let step = self.place(v + 1);
            if !matches!(step, Step::Absent) {
                return step;
            }
            self.parts.pop();
        }
        self.place(v + 1)
    }

    fn is_complete(&self) -> bool {
        self.parts
            .iter()
            .all(|p| self.g.component_within(p.first().unwrap_or(0), *p) == *p)
            && self.all_pairs_adjacent()
    }

    fn all_pairs_adjacent(&self) -> bool {
        (0..self.parts.len()).all(|i| {
            let reach = self.g.neighborhood(self.parts[i]);
            self.parts[i + 1..].iter().all(|q| !reach.is_disjoint(*q))
        })
    }

    /// Necessary conditions for completing the current partial assignment
    /// using only vertices `>= v`.
    fn feasible(&self, v: usize) -> bool {
        let future = VertexSet::full(self.g.n()).difference(VertexSet::full(v));
        let missing = self.k - self.parts.len();
        if missing > future.len() {
            return false;
        }
        // A K_k minor needs C(k,2) cross edges plus a spanning tree per part.
        let internal: usize = self.parts.iter().map(|p| p.len() - 1).sum();
        if self.k * (self.k - 1) / 2 + internal > self.edges {
            return false;
        }
        let reach: Vec<VertexSet> = self.parts.iter().map(|p| self.g.neighborhood(*p)).collect();
        for (i, p) in self.parts.iter().enumerate() {
            let grows = !reach[i].is_disjoint(future);
            // Parts that still need a new partner must be able to grow toward it.
            if missing > 0 && !grows {
                return false;
            }
            let mut rest = *p;
            let first = self.g.component_within(p.first().unwrap_or(0), *p);
            if first != *p {
                // A disconnected part can only be joined through future vertices.
                while let Some(start) = rest.first() {
                    let comp = self.g.component_within(start, *p);
                    if self.g.neighborhood(comp).is_disjoint(future) {
                        return false;
                    }
                    rest = rest.difference(comp);
                }
            }
            for j in i + 1..self.parts.len() {
                if reach[i].is_disjoint(self.parts[j]) && !grows && reach[j].is_disjoint(future) {
                    return false;
                }
            }
        }
        true
    }
}

fn singletons(vertices: &[usize]) -> MinorCertificate {
    MinorCertificate::new(vertices.iter().map(|&v| VertexSet::singleton(v)).collect())
}

/// Greedily grows a clique from each start vertex (ascending, lowest-id
/// extension first) and returns the first one reaching `k` vertices.
fn greedy_clique(g: &Graph, k: usize) -> Option<Vec<usize>> {
    (0..g.n()).find_map(|start| {
        let clique = grow_clique(g, start);
        (clique.len() >= k).then(|| clique[..k].to_vec())
    })
}

fn grow_clique(g: &Graph, start: usize) -> Vec<usize> {
    let mut clique = vec![start];
    let mut candidates = g.neighbors(start);
    while let Some(v) = candidates
        .iter()
        .max_by_key(|&v| (g.neighbors(v).intersection(candidates).len(), std::cmp::Reverse(v)))
    {
        clique.push(v);
        candidates = candidates.intersection(g.neighbors(v));
    }
    clique
}

/// Size of the largest clique found by greedy growth from every vertex.
pub fn greedy_clique_number(g: &Graph) -> usize {
    (0..g.n()).map(|v| grow_clique(g, v).len()).max().unwrap_or(0)
}

/// Outcome of the Hadwiger-number search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HadwigerSearch {
    /// Largest `k` with a certified `K_k` minor.
    pub order: usize,
    pub certificate: MinorCertificate,
    /// False when the search for `K_{order+1}` ran out of budget.
    pub exact: bool,
}

/// Largest `k` such that `K_k` is a minor of `g`.
pub fn hadwiger_number(g: &Graph) -> Result<usize> {
    let found = hadwiger_search(g, SearchBudget::default_for(g))?;
    if !found.exact {
        return Err(Error::SearchExhausted(SearchBudget::default_for(g).cap().unwrap_or(0)));
    }
    Ok(found.order)
}

/// Searches upward from the greedy clique bound until some order fails.
pub fn hadwiger_search(g: &Graph, budget: SearchBudget) -> Result<HadwigerSearch> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    let start = greedy_clique_number(g);
    let mut best = HadwigerSearch {
        order: start,
        certificate: singletons(&greedy_clique(g, start).unwrap_or_default()),
        exact: true,
    };
    loop {
        match find_clique_minor_with_budget(g, best.order + 1, budget)? {
            SearchOutcome::Found(cert) => {
                best.order += 1;
                best.certificate = cert;
            }
            SearchOutcome::Absent => return Ok(best),
            SearchOutcome::Exhausted { .. } => {
                best.exact = false;
                return Ok(best);
            }
        }
    }
}

/// Branch vertices plus one path per branch pair (keys ordered `(a, b)` with `a < b`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubdivisionCertificate {
    pub branch_vertices: Vec<usize>,
    pub paths: BTreeMap<(usize, usize), Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct SubdivisionJson {
    branch: Vec<usize>,
    paths: BTreeMap<String, Vec<usize>>,
}

impl Serialize for SubdivisionCertificate {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SubdivisionJson {
            branch: self.branch_vertices.clone(),
            paths: self
                .paths
                .iter()
                .map(|(&(a, b), p)| (format!("{a}-{b}"), p.clone()))
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SubdivisionCertificate {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = SubdivisionJson::deserialize(d)?;
        let mut paths = BTreeMap::new();
        for (key, path) in raw.paths {
            let pair = key
                .split_once('-')
                .and_then(|(a, b)| Some((a.parse().ok()?, b.parse().ok()?)))
                .ok_or_else(|| serde::de::Error::custom(format!("bad path key `{key}`")))?;
            paths.insert(pair, path);
        }
        Ok(SubdivisionCertificate {
            branch_vertices: raw.branch,
            paths,
        })
    }
}

impl SubdivisionCertificate {
    /// Contracts every path onto its smaller branch vertex, giving a minor
    /// certificate of the same order.
    pub fn to_minor_certificate(&self) -> MinorCertificate {
        let mut parts: Vec<VertexSet> = self.branch_vertices.iter().map(|&v| VertexSet::singleton(v)).collect();
        for (&(a, _), path) in &self.paths {
            if let Some(idx) = self.branch_vertices.iter().position(|&v| v == a) {
                for &x in path.iter().skip(1).take(path.len().saturating_sub(2)) {
                    parts[idx].insert(x);
                }
            }
        }
        MinorCertificate::new(parts)
    }
}

/// Checks a subdivision certificate, returning a description of the first defect.
pub fn verify_subdivision(g: &Graph, cert: &SubdivisionCertificate) -> std::result::Result<(), String> {
    let branch: VertexSet = cert.branch_vertices.iter().copied().collect();
    if branch.len() != cert.branch_vertices.len() {
        return Err("repeated branch vertex".into());
    }
    if let Err(e) = g.check_set(branch) {
        return Err(e.to_string());
    }
    let k = branch.len();
    if cert.paths.len() != k * (k - 1) / 2 {
        return Err(format!(
            "expected {} paths, found {}",
            k * (k - 1) / 2,
            cert.paths.len()
        ));
    }
    let mut interiors = VertexSet::empty();
    for (i, &a) in cert.branch_vertices.iter().enumerate() {
        for &b in &cert.branch_vertices[i + 1..] {
            let key = (a.min(b), a.max(b));
            let path = cert
                .paths
                .get(&key)
                .ok_or(format!("missing path {}-{}", key.0, key.1))?;
            let ends = (path.first().copied(), path.last().copied());
            if ends != (Some(key.0), Some(key.1)) && ends != (Some(key.1), Some(key.0)) {
                return Err(format!("path {}-{} has wrong endpoints", key.0, key.1));
            }
            if path.windows(2).any(|w| !g.has_edge(w[0], w[1])) {
                return Err(format!("path {}-{} uses a non-edge", key.0, key.1));
            }
            for &x in &path[1..path.len() - 1] {
                if branch.contains(x) || interiors.contains(x) {
                    return Err(format!("interior vertex {x} is reused"));
                }
                interiors.insert(x);
            }
        }
    }
    Ok(())
}

/// Exact search for a `K_k` subdivision using [`SearchBudget::default_for`].
pub fn find_subdivision(g: &Graph, k: usize) -> Result<Option<SubdivisionCertificate>> {
    find_subdivision_with_budget(g, k, SearchBudget::default_for(g))?.decided()
}

/// Chooses `k` branch vertices of degree at least `k-1` (ascending
/// combinations), then routes the `C(k,2)` paths one pair at a time by
/// backtracking over simple paths through unused vertices.
pub fn find_subdivision_with_budget(
    g: &Graph,
    k: usize,
    budget: SearchBudget,
) -> Result<SearchOutcome<SubdivisionCertificate>> {
    if k == 0 {
        return Err(Error::BadParameter("clique order must be at least 1".into()));
    }
    if k > MAX_SUBDIVISION_ORDER {
        return Err(Error::BadParameter(format!(
            "subdivision search supports k <= {MAX_SUBDIVISION_ORDER}, got {k}"
        )));
    }
    let candidates: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) + 1 >= k).collect();
    let mut search = SubdivisionSearch {
        g,
        budget: budget.cap(),
        nodes: 0,
        branch: Vec::with_capacity(k),
        pairs: Vec::new(),
        paths: Vec::new(),
    };
    Ok(match search.choose(&candidates, 0, k) {
        Step::Found => {
            let paths = search.pairs.iter().copied().zip(search.paths).collect();
            SearchOutcome::Found(SubdivisionCertificate {
                branch_vertices: search.branch,
                paths,
            })
        }
        Step::Absent => SearchOutcome::Absent,
        Step::Exhausted => SearchOutcome::Exhausted { nodes: search.nodes },
    })
}

struct SubdivisionSearch<'a> {
    g: &'a Graph,
    budget: Option<u64>,
    nodes: u64,
    branch: Vec<usize>,
    pairs: Vec<(usize, usize)>,
    paths: Vec<Vec<usize>>,
}

impl SubdivisionSearch<'_> {
    fn tick(&mut self) -> bool {
        self.nodes += 1;
        self.budget.is_some_and(|cap| self.nodes > cap)
    }

    fn choose(&mut self, candidates: &[usize], from: usize, k: usize) -> Step {
        if self.branch.len() == k {
            self.pairs = (0..k)
                .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
                .map(|(i, j)| (self.branch[i], self.branch[j]))
                .collect();
            let branch: VertexSet = self.branch.iter().copied().collect();
            return self.route(0, branch);
        }
        let need = k - self.branch.len();
        for idx in from..candidates.len() {
            if candidates.len() - idx < need {
                break;
            }
            self.branch.push(candidates[idx]);
            let step = self.choose(candidates, idx + 1, k);
            if !matches!(step, Step::Absent) {
                return step;
            }
            self.branch.pop();
        }
        Step::Absent
    }

    /// Routes pair `idx` onward; `blocked` holds branch vertices and used interiors.
    fn route(&mut self, idx: usize, blocked: VertexSet) -> Step {
        if self.tick() {
            return Step::Exhausted;
        }
        if idx == self.pairs.len() {
            return Step::Found;
        }
        if !self.routable(idx, blocked) {
            return Step::Absent;
        }
        let (a, b) = self.pairs[idx];
        let mut path = vec![a];
        self.extend_path(idx, b, &mut path, blocked)
    }

    fn extend_path(&mut self, idx: usize, target: usize, path: &mut Vec<usize>, blocked: VertexSet) -> Step {
        if self.tick() {
            return Step::Exhausted;
        }
        let tip = *path.last().expect("path starts at a branch vertex");
        if self.g.has_edge(tip, target) {
            path.push(target);
            self.paths.push(path.clone());
            let step = self.route(idx + 1, blocked);
            if !matches!(step, Step::Absent) {
                return step;
            }
            self.paths.pop();
            path.pop();
        }
        for next in self.g.neighbors(tip).difference(blocked) {
            let mut b = blocked;
            b.insert(next);
            // The rest of the path must still reach the target.
            let free = VertexSet::full(self.g.n()).difference(b);
            let reach = self.g.component_within(next, free.union(VertexSet::singleton(next)));
            if reach.is_disjoint(self.g.neighbors(target)) {
                continue;
            }
            path.push(next);
            let step = self.extend_path(idx, target, path, b);
            if !matches!(step, Step::Absent) {
                return step;
            }
            path.pop();
        }
        Step::Absent
    }

    /// Degree and reachability checks for the pairs not yet routed.
    fn routable(&self, idx: usize, blocked: VertexSet) -> bool {
        let free = VertexSet::full(self.g.n()).difference(blocked);
        for &a in &self.branch {
            let pending: Vec<usize> = self.pairs[idx..]
                .iter()
                .filter_map(|&(x, y)| (x == a).then_some(y).or((y == a).then_some(x)))
                .collect();
            let direct = pending.iter().filter(|&&o| self.g.has_edge(a, o)).count();
            let exits = self.g.neighbors(a).intersection(free).len();
            if pending.len() > direct + exits {
                return false;
            }
        }
        self.pairs[idx..].iter().all(|&(a, b)| {
            let room = free.union(VertexSet::singleton(a)).union(VertexSet::singleton(b));
            self.g.component_within(a, room).contains(b)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Generator;

    fn set(ids: &[usize]) -> VertexSet {
        ids.iter().copied().collect()
    }

    #[test]
    fn verify_examples() {
        let k4 = Generator::Complete.build(4).unwrap();
        let cert = MinorCertificate::new((0..4).map(VertexSet::singleton).collect());
        assert!(verify_clique_minor(&k4, &cert).is_valid());

        let pet = Generator::Petersen.build(0).unwrap();
        let spokes = MinorCertificate::new((0..5).map(|i| set(&[i, i + 5])).collect());
        assert!(verify_clique_minor(&pet, &spokes).is_valid());

        let p3 = Generator::Path.build(3).unwrap();
        let cert = MinorCertificate::new(vec![set(&[0]), set(&[2])]);
        let verdict = verify_clique_minor(&p3, &cert);
        assert_eq!(
            verdict,
            MinorVerdict::Violation {
                clause: MinorClause::NotAdjacent,
                parts: vec![0, 1]
            }
        );
        assert_eq!(
            verdict.to_string(),
            "violation: parts 0,1 are not connected to each other"
        );
    }

    #[test]
    fn verify_reports_first_clause() {
        let p3 = Generator::Path.build(3).unwrap();
        let check = |parts: Vec<VertexSet>| match verify_clique_minor(&p3, &MinorCertificate::new(parts)) {
            MinorVerdict::Violation { clause, parts } => (clause, parts),
            MinorVerdict::Valid => panic!("expected a violation"),
        };
        assert_eq!(check(vec![set(&[0]), set(&[7])]), (MinorClause::OutOfRange, vec![1]));
        assert_eq!(check(vec![set(&[0]), set(&[])]), (MinorClause::EmptyPart, vec![1]));
        assert_eq!(check(vec![set(&[0, 1]), set(&[1])]), (MinorClause::Overlap, vec![0, 1]));
        assert_eq!(
            check(vec![set(&[0, 2]), set(&[1])]),
            (MinorClause::Disconnected, vec![0])
        );
    }

    #[test]
    fn petersen_minors() {
        let pet = Generator::Petersen.build(0).unwrap();
        let cert = find_clique_minor(&pet, 5).unwrap().expect("K5 minor");
        assert!(verify_clique_minor(&pet, &cert).is_valid());
        assert_eq!(cert.order(), 5);
        assert_eq!(find_clique_minor(&pet, 6).unwrap(), None);
        assert_eq!(hadwiger_number(&pet).unwrap(), 5);
    }

    #[test]
    fn trivial_orders() {
        let g = Generator::Empty.build(3).unwrap();
        let cert = find_clique_minor(&g, 1).unwrap().unwrap();
        assert_eq!(cert.parts.len(), 1);
        assert_eq!(find_clique_minor(&g, 2).unwrap(), None);
        assert!(matches!(find_clique_minor(&g, 0), Err(Error::BadParameter(_))));
        assert_eq!(hadwiger_number(&g).unwrap(), 1);
        assert!(matches!(
            hadwiger_number(&Graph::empty(0).unwrap()),
            Err(Error::EmptyGraph)
        ));
    }

    #[test]
    fn named_hadwiger_numbers() {
        assert_eq!(hadwiger_number(&Generator::Complete.build(5).unwrap()).unwrap(), 5);
        assert_eq!(hadwiger_number(&Generator::Cycle.build(5).unwrap()).unwrap(), 3);
        assert_eq!(hadwiger_number(&Generator::Path.build(6).unwrap()).unwrap(), 2);
    }

    #[test]
    fn budget_exhaustion_is_not_absence() {
        let pet = Generator::Petersen.build(0).unwrap();
        // Greedy clique finds only K2 on the Petersen graph, so K3 needs real search.
        let out = find_clique_minor_with_budget(&pet, 4, SearchBudget::nodes(3)).unwrap();
        assert!(matches!(out, SearchOutcome::Exhausted { .. }));
        assert!(matches!(out.decided(), Err(Error::SearchExhausted(_))));
    }

    #[test]
    fn subdivision_examples() {
        let c5 = Generator::Cycle.build(5).unwrap();
        let cert = find_subdivision(&c5, 3).unwrap().expect("the cycle subdivides K3");
        verify_subdivision(&c5, &cert).unwrap();

        let pet = Generator::Petersen.build(0).unwrap();
        assert_eq!(find_subdivision(&pet, 5).unwrap(), None);
        // Petersen is 3-connected and cubic; it does contain a subdivided K4.
        let k4 = find_subdivision(&pet, 4).unwrap().expect("K4 subdivision");
        verify_subdivision(&pet, &k4).unwrap();

        let k4g = Generator::Complete.build(4).unwrap();
        let cert = find_subdivision(&k4g, 4).unwrap().unwrap();
        assert!(cert.paths.values().all(|p| p.len() == 2));
        assert!(verify_clique_minor(&k4g, &cert.to_minor_certificate()).is_valid());

        assert!(matches!(find_subdivision(&k4g, 0), Err(Error::BadParameter(_))));
        assert!(matches!(find_subdivision(&k4g, 7), Err(Error::BadParameter(_))));
    }

    #[test]
    fn certificate_json_shapes() {
        let cert = MinorCertificate::new(vec![set(&[0, 5]), set(&[1])]);
        assert_eq!(serde_json::to_string(&cert).unwrap(), r#"{"parts":[[0,5],[1]]}"#);

        let c5 = Generator::Cycle.build(5).unwrap();
        let sub = find_subdivision(&c5, 3).unwrap().unwrap();
        let json = serde_json::to_string(&sub).unwrap();
        assert!(
            json.starts_with(r#"{"branch":[0,1,2],"paths":{"0-1":[0,1],"0-2":[0,4,3,2],"1-2":[1,2]}"#),
            "{json}"
        );
        let back: SubdivisionCertificate = serde_json::from_str(&json).unwrap();
        assert_eq!(back, sub);
    }
}
