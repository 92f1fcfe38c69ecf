//! Maximum matching, perfect-matching existence and counting, and the
//! definitional deciders for n-extendability and k-factor-criticality.
//!
//! All verdicts are deterministic: sweeps run in lexicographic order and a
//! reported witness is always the lexicographically first failure, so runs
//! are reproducible bit for bit.

use std::collections::HashMap;
use std::collections::VecDeque;

use itertools::Itertools;
use thiserror::Error;

use crate::graph::{induced_neighborhood, Graph, Matching, VertexSet};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MatchingError {
    #[error("graph is not connected")]
    NotConnected,
    #[error("graph has {actual} vertices, needs at least {required}")]
    TooFewVertices { required: usize, actual: usize },
    #[error("graph has no {0}-matching")]
    NoNMatching(usize),
    #[error("|V| + k must be even (|V| = {order}, k = {k})")]
    ParityMismatch { order: usize, k: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("search budget of {0} nodes exhausted")]
    ResourceLimit(u64),
}

/// Outcome of an n-extendability sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtendabilityVerdict {
    pub extendable: bool,
    /// Lexicographically first n-matching with no perfect-matching
    /// extension; present iff `extendable` is false.
    pub witness: Option<Matching>,
    /// Number of n-matchings examined before the verdict was reached.
    pub checked_count: u64,
}

/// Outcome of a k-factor-criticality sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriticalityVerdict {
    pub critical: bool,
    /// Lexicographically first k-set whose removal leaves no perfect
    /// matching; present iff `critical` is false.
    pub witness: Option<VertexSet>,
}

/// A vertex of degree n + t whose neighborhood graph contains a t-matching.
/// Certifies that the graph is not n-extendable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeanCertificate {
    pub vertex: usize,
    /// t = deg(vertex) - n.
    pub t: usize,
    /// Matching of size >= t whose edges lie inside N(vertex); edge ids
    /// refer to the original graph.
    pub matching_in_neighborhood: Matching,
}

/// Maximum-cardinality matching via augmenting paths with blossom
/// contraction. Deterministic: vertices and adjacency are scanned in id
/// order, so the same graph always yields the same matching.
pub fn maximum_matching(g: &Graph) -> Matching {
    let n = g.vertex_count();
    const NONE: usize = usize::MAX;
    let mut mate = vec![NONE; n];
    // greedy seed keeps the augmenting phase short
    for &(u, v) in g.edges() {
        if mate[u] == NONE && mate[v] == NONE {
            mate[u] = v;
            mate[v] = u;
        }
    }
    for root in 0..n {
        if mate[root] != NONE {
            continue;
        }
        // BFS for an augmenting path from `root`, contracting blossoms.
        let mut parent = vec![NONE; n];
        let mut base: Vec<usize> = (0..n).collect();
        let mut in_queue = vec![false; n];
        let mut queue = VecDeque::new();
        queue.push_back(root);
        in_queue[root] = true;
        let mut finish = NONE;

        'bfs: while let Some(v) = queue.pop_front() {
            for u in g.neighbors(v) {
                if base[v] == base[u] || mate[v] == u {
                    continue;
                }
                if u == root || (mate[u] != NONE && parent[mate[u]] != NONE) {
                    // odd cycle: contract the blossom at the common base
                    let b = lca(&mate, &parent, &base, v, u);
                    let mut blossom = vec![false; n];
                    mark_path(&mate, &mut parent, &base, &mut blossom, v, b, u);
                    mark_path(&mate, &mut parent, &base, &mut blossom, u, b, v);
                    for i in 0..n {
                        if blossom[base[i]] {
                            base[i] = b;
                            if !in_queue[i] {
                                in_queue[i] = true;
                                queue.push_back(i);
                            }
                        }
                    }
                } else if parent[u] == NONE {
                    parent[u] = v;
                    if mate[u] == NONE {
                        finish = u;
                        break 'bfs;
                    }
                    if !in_queue[mate[u]] {
                        in_queue[mate[u]] = true;
                        queue.push_back(mate[u]);
                    }
                }
            }
        }

        if finish != NONE {
            // flip matched/unmatched along the alternating path
            let mut u = finish;
            while u != NONE {
                let pv = parent[u];
                let next = mate[pv];
                mate[u] = pv;
                mate[pv] = u;
                u = next;
            }
        }
    }

    let mut ids = Vec::new();
    for (id, &(u, v)) in g.edges().iter().enumerate() {
        // one edge per matched pair in a simple graph
        if mate[u] == v {
            ids.push(id);
        }
    }
    Matching::from_sorted_unchecked(ids)
}

fn lca(mate: &[usize], parent: &[usize], base: &[usize], mut a: usize, mut b: usize) -> usize {
    let mut used = vec![false; mate.len()];
    loop {
        a = base[a];
        used[a] = true;
        if mate[a] == usize::MAX {
            break;
        }
        a = parent[mate[a]];
    }
    loop {
        b = base[b];
        if used[b] {
            return b;
        }
        b = parent[mate[b]];
    }
}

fn mark_path(
    mate: &[usize],
    parent: &mut [usize],
    base: &[usize],
    blossom: &mut [bool],
    mut v: usize,
    b: usize,
    mut child: usize,
) {
    while base[v] != b {
        blossom[base[v]] = true;
        blossom[base[mate[v]]] = true;
        parent[v] = child;
        child = mate[v];
        v = parent[mate[v]];
    }
}

/// True iff a maximum matching covers every vertex.
pub fn has_perfect_matching(g: &Graph) -> bool {
    let n = g.vertex_count();
    if n % 2 == 1 {
        return false;
    }
    if n > 0 && (0..n).any(|v| g.degree(v) == 0) {
        return false;
    }
    maximum_matching(g).len() * 2 == n
}

/// Default node budget for [`count_perfect_matchings`].
pub const DEFAULT_COUNT_BUDGET: u64 = 5_000_000;

/// Exact perfect-matching count, branching on a minimum-degree vertex with
/// memoization keyed by the residual vertex set.
pub fn count_perfect_matchings(g: &Graph) -> Result<u64, MatchingError> {
    count_perfect_matchings_with_budget(g, DEFAULT_COUNT_BUDGET)
}

/// As [`count_perfect_matchings`], aborting once more than `max_nodes`
/// branch nodes have been expanded.
pub fn count_perfect_matchings_with_budget(g: &Graph, max_nodes: u64) -> Result<u64, MatchingError> {
    let n = g.vertex_count();
    if n % 2 == 1 {
        return Ok(0);
    }
    let mut active = ActiveSet::full(n);
    let mut memo: HashMap<ActiveSet, u64> = HashMap::new();
    let mut nodes: u64 = 0;
    count_rec(g, &mut active, &mut memo, &mut nodes, max_nodes)
}

fn count_rec(
    g: &Graph,
    active: &mut ActiveSet,
    memo: &mut HashMap<ActiveSet, u64>,
    nodes: &mut u64,
    max_nodes: u64,
) -> Result<u64, MatchingError> {
    *nodes += 1;
    if *nodes > max_nodes {
        return Err(MatchingError::ResourceLimit(max_nodes));
    }
    if active.count == 0 {
        return Ok(1);
    }
    if let Some(&c) = memo.get(active) {
        return Ok(c);
    }
    // branch on a minimum-degree active vertex (smallest id on ties)
    let mut pick = usize::MAX;
    let mut pick_deg = usize::MAX;
    for v in 0..g.vertex_count() {
        if !active.contains(v) {
            continue;
        }
        let d = g.neighbors(v).filter(|&w| active.contains(w)).count();
        if d < pick_deg {
            pick_deg = d;
            pick = v;
        }
    }
    if pick_deg == 0 {
        memo.insert(active.clone(), 0);
        return Ok(0);
    }
    let v = pick;
    let mut total: u64 = 0;
    let nbrs: Vec<usize> = g.neighbors(v).filter(|&w| active.contains(w)).collect();
    for w in nbrs {
        active.remove(v);
        active.remove(w);
        let sub = count_rec(g, active, memo, nodes, max_nodes);
        active.insert(v);
        active.insert(w);
        total += sub?;
    }
    memo.insert(active.clone(), total);
    Ok(total)
}

/// Bitset over vertex ids, usable as a memo key.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
struct ActiveSet {
    words: Vec<u64>,
    count: usize,
}

impl ActiveSet {
    fn full(n: usize) -> ActiveSet {
        let mut words = vec![u64::MAX; n.div_ceil(64)];
        if n % 64 != 0 {
            *words.last_mut().unwrap() = (1u64 << (n % 64)) - 1;
        }
        ActiveSet { words, count: n }
    }

    fn contains(&self, v: usize) -> bool {
        self.words[v / 64] >> (v % 64) & 1 == 1
    }

    fn remove(&mut self, v: usize) {
        debug_assert!(self.contains(v));
        self.words[v / 64] &= !(1u64 << (v % 64));
        self.count -= 1;
    }

    fn insert(&mut self, v: usize) {
        debug_assert!(!self.contains(v));
        self.words[v / 64] |= 1u64 << (v % 64);
        self.count += 1;
    }
}

/// Streams every n-matching of `g` exactly once, in lexicographic order of
/// sorted edge ids. The 0-matching enumeration yields one empty matching.
pub fn enumerate_n_matchings(g: &Graph, n: usize) -> NMatchings<'_> {
    NMatchings {
        g,
        target: n,
        chosen: Vec::with_capacity(n),
        covered: vec![false; g.vertex_count()],
        cursor: 0,
        done: false,
        started: false,
    }
}

/// Iterator behind [`enumerate_n_matchings`].
pub struct NMatchings<'a> {
    g: &'a Graph,
    target: usize,
    chosen: Vec<usize>,
    covered: Vec<bool>,
    cursor: usize,
    done: bool,
    started: bool,
}

impl<'a> NMatchings<'a> {
    fn cover(&mut self, e: usize, on: bool) {
        let (u, v) = self.g.endpoints(e);
        self.covered[u] = on;
        self.covered[v] = on;
    }

    /// Pops the deepest choice and moves the cursor past it; false when the
    /// whole search tree is exhausted.
    fn backtrack(&mut self) -> bool {
        match self.chosen.pop() {
            Some(e) => {
                self.cover(e, false);
                self.cursor = e + 1;
                true
            }
            None => false,
        }
    }
}

impl<'a> Iterator for NMatchings<'a> {
    type Item = Matching;

    fn next(&mut self) -> Option<Matching> {
        if self.done {
            return None;
        }
        if self.target == 0 {
            self.done = true;
            return Some(Matching::from_sorted_unchecked(Vec::new()));
        }
        if self.started && !self.backtrack() {
            self.done = true;
            return None;
        }
        self.started = true;
        let m = self.g.edge_count();
        loop {
            // not enough edges left to complete the matching
            if self.chosen.len() + (m - self.cursor.min(m)) < self.target {
                if !self.backtrack() {
                    self.done = true;
                    return None;
                }
                continue;
            }
            if self.cursor >= m {
                if !self.backtrack() {
                    self.done = true;
                    return None;
                }
                continue;
            }
            let e = self.cursor;
            let (u, v) = self.g.endpoints(e);
            if self.covered[u] || self.covered[v] {
                self.cursor += 1;
                continue;
            }
            self.chosen.push(e);
            self.cover(e, true);
            if self.chosen.len() == self.target {
                return Some(Matching::from_sorted_unchecked(self.chosen.clone()));
            }
            self.cursor = e + 1;
        }
    }
}

/// Decides n-extendability: every n-matching must extend to a perfect
/// matching. Preconditions follow the definition — the graph must be
/// connected, have at least 2n+2 vertices and admit an n-matching; there is
/// no vacuous verdict for graphs without an n-matching.
pub fn is_n_extendable(g: &Graph, n: usize) -> Result<ExtendabilityVerdict, MatchingError> {
    if !g.is_connected() {
        return Err(MatchingError::NotConnected);
    }
    if g.vertex_count() < 2 * n + 2 {
        return Err(MatchingError::TooFewVertices {
            required: 2 * n + 2,
            actual: g.vertex_count(),
        });
    }
    if enumerate_n_matchings(g, n).next().is_none() {
        return Err(MatchingError::NoNMatching(n));
    }
    let mut checked: u64 = 0;
    for m in enumerate_n_matchings(g, n) {
        checked += 1;
        let residual = g.without_vertices(&m.vertices(g));
        if !has_perfect_matching(&residual.graph) {
            return Ok(ExtendabilityVerdict {
                extendable: false,
                witness: Some(m),
                checked_count: checked,
            });
        }
    }
    Ok(ExtendabilityVerdict {
        extendable: true,
        witness: None,
        checked_count: checked,
    })
}

/// Decides k-factor-criticality: removing any k vertices must leave a graph
/// with a perfect matching.
pub fn is_k_factor_critical(g: &Graph, k: usize) -> Result<CriticalityVerdict, MatchingError> {
    let n = g.vertex_count();
    if k >= n {
        return Err(MatchingError::InvalidParameter(format!(
            "k = {k} must be smaller than the order {n}"
        )));
    }
    if (n + k) % 2 != 0 {
        return Err(MatchingError::ParityMismatch { order: n, k });
    }
    for subset in (0..n).combinations(k) {
        let removed = VertexSet::new(subset);
        let residual = g.without_vertices(&removed);
        if !has_perfect_matching(&residual.graph) {
            return Ok(CriticalityVerdict {
                critical: false,
                witness: Some(removed),
            });
        }
    }
    Ok(CriticalityVerdict {
        critical: true,
        witness: None,
    })
}

/// Scans vertices in id order for one of degree n + t whose neighborhood
/// graph contains a t-matching; such a vertex certifies that `g` is not
/// n-extendable. Absence of a certificate proves nothing.
pub fn dean_certificate(g: &Graph, n: usize) -> Option<DeanCertificate> {
    for v in 0..g.vertex_count() {
        let d = g.degree(v);
        if d < n {
            continue;
        }
        let t = d - n;
        let sub = induced_neighborhood(g, v).expect("vertex id in range");
        let mm = maximum_matching(&sub.graph);
        if mm.len() >= t {
            let original_ids: Vec<usize> =
                mm.edge_ids().iter().map(|&e| sub.edge_map[e]).collect();
            let matching = Matching::new(g, original_ids).expect("mapped matching stays disjoint");
            return Some(DeanCertificate {
                vertex: v,
                t,
                matching_in_neighborhood: matching,
            });
        }
    }
    None
}

/// Largest k compatible with the degree and parity obstructions to
/// k-factor-criticality: k must match the order's parity and satisfy
/// delta >= k + 1, strengthened to delta >= k + 2 when k + 1 is odd and all
/// degrees are even. Returns 0 when no k qualifies.
pub fn criticality_upper_bound(g: &Graph, degrees_even: bool) -> usize {
    let n = g.vertex_count();
    let delta = g.min_degree();
    if delta == 0 {
        return 0;
    }
    let mut k = delta - 1;
    loop {
        let parity_ok = k % 2 == n % 2;
        let even_rule_ok = !(degrees_even && (k + 1) % 2 == 1) || k + 2 <= delta;
        if parity_ok && even_rule_ok {
            return k;
        }
        if k == 0 {
            return 0;
        }
        k -= 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn petersen() -> Graph {
        let mut edges: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        edges.extend((0..5).map(|i| (i, i + 5)));
        edges.extend((0..5).map(|i| (5 + i, 5 + (i + 2) % 5)));
        Graph::new(10, edges).unwrap()
    }

    /// Exhaustive maximum-matching oracle, independent of the blossom code:
    /// recursion over the lowest uncovered vertex.
    fn brute_max_matching_size(g: &Graph) -> usize {
        fn rec(g: &Graph, covered: &mut Vec<bool>, from: usize) -> usize {
            let mut v = from;
            while v < g.vertex_count() && covered[v] {
                v += 1;
            }
            if v >= g.vertex_count() {
                return 0;
            }
            // either v stays unmatched...
            covered[v] = true;
            let mut best = rec(g, covered, v + 1);
            // ...or v is matched to some free neighbor
            for w in g.neighbors(v) {
                if !covered[w] {
                    covered[w] = true;
                    best = best.max(1 + rec(g, covered, v + 1));
                    covered[w] = false;
                }
            }
            covered[v] = false;
            best
        }
        rec(g, &mut vec![false; g.vertex_count()], 0)
    }

    /// Exhaustive perfect-matching counter, independent of the memoized
    /// implementation: always matches the lowest uncovered vertex.
    fn brute_count_pm(g: &Graph) -> u64 {
        fn rec(g: &Graph, covered: &mut Vec<bool>) -> u64 {
            let v = match (0..g.vertex_count()).find(|&v| !covered[v]) {
                Some(v) => v,
                None => return 1,
            };
            covered[v] = true;
            let mut total = 0;
            for w in g.neighbors(v) {
                if !covered[w] {
                    covered[w] = true;
                    total += rec(g, covered);
                    covered[w] = false;
                }
            }
            covered[v] = false;
            total
        }
        if g.vertex_count() % 2 == 1 {
            return 0;
        }
        rec(g, &mut vec![false; g.vertex_count()])
    }

    #[test]
    fn maximum_matching_on_small_graphs() {
        assert_eq!(maximum_matching(&Graph::cycle(5)).len(), 2);
        assert_eq!(maximum_matching(&Graph::complete(4)).len(), 2);
    }

    #[test]
    fn maximum_matching_on_petersen_graph() {
        // oracle: exhaustive search
        let g = petersen();
        assert_eq!(brute_max_matching_size(&g), 5);
        assert_eq!(maximum_matching(&g).len(), 5);
    }

    #[test]
    fn maximum_matching_matches_brute_force_on_random_graphs() {
        let mut state = 0x853c49e6748fea9bu64;
        for round in 0..300 {
            let n = 4 + (round % 7);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in (u + 1)..n {
                    state = state
                        .wrapping_mul(6364136223846793005)
                        .wrapping_add(1442695040888963407);
                    if state >> 32 & 3 != 0 {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::new(n, edges).unwrap();
            let got = maximum_matching(&g);
            Matching::new(&g, got.edge_ids().to_vec()).expect("valid matching");
            assert_eq!(got.len(), brute_max_matching_size(&g), "{:?}", g.edges());
        }
    }

    #[test]
    fn perfect_matching_existence() {
        assert!(has_perfect_matching(&Graph::complete(4)));
        assert!(!has_perfect_matching(&Graph::cycle(5)));
        // star K_{1,3}
        let star = Graph::new(4, vec![(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(!has_perfect_matching(&star));
    }

    #[test]
    fn perfect_matching_counts() {
        assert_eq!(count_perfect_matchings(&Graph::complete(4)).unwrap(), 3);
        assert_eq!(count_perfect_matchings(&Graph::cycle(6)).unwrap(), 2);
        // oracle for complete graphs: (2k-1)!!
        assert_eq!(count_perfect_matchings(&Graph::complete(6)).unwrap(), 15);
        assert_eq!(count_perfect_matchings(&Graph::complete(8)).unwrap(), 105);
    }

    #[test]
    fn perfect_matching_count_matches_enumeration() {
        let g = petersen();
        assert_eq!(brute_count_pm(&g), 6);
        assert_eq!(count_perfect_matchings(&g).unwrap(), 6);
    }

    #[test]
    fn count_honors_budget() {
        let g = Graph::complete(12);
        assert_eq!(
            count_perfect_matchings_with_budget(&g, 10),
            Err(MatchingError::ResourceLimit(10))
        );
    }

    #[test]
    fn n_matching_enumeration_counts() {
        let c4 = Graph::cycle(4);
        assert_eq!(enumerate_n_matchings(&c4, 1).count(), 4);
        assert_eq!(enumerate_n_matchings(&c4, 2).count(), 2);
        assert_eq!(enumerate_n_matchings(&Graph::complete(4), 2).count(), 3);
        assert_eq!(enumerate_n_matchings(&c4, 0).count(), 1);
        assert_eq!(enumerate_n_matchings(&c4, 3).count(), 0);
    }

    #[test]
    fn n_matchings_are_lexicographic_and_distinct() {
        let g = Graph::complete(6);
        let all: Vec<Matching> = enumerate_n_matchings(&g, 2).collect();
        for w in all.windows(2) {
            assert!(w[0] < w[1], "not strictly increasing: {:?}", w);
        }
        for m in &all {
            Matching::new(&g, m.edge_ids().to_vec()).expect("valid");
        }
    }

    #[test]
    fn k4_is_1_extendable() {
        let v = is_n_extendable(&Graph::complete(4), 1).unwrap();
        assert!(v.extendable);
        assert_eq!(v.witness, None);
        assert_eq!(v.checked_count, 6);
    }

    #[test]
    fn c8_is_not_2_extendable_with_lex_first_witness() {
        // oracle: brute force over all 2-matchings of C8 says {e0, e3} is the
        // first failure ({v0v1, v3v4} leaves v2 isolated)
        let g = Graph::cycle(8);
        let v = is_n_extendable(&g, 2).unwrap();
        assert!(!v.extendable);
        let w = v.witness.unwrap();
        assert_eq!(w.edge_ids(), &[0, 3]);
        assert_eq!(v.checked_count, 2); // {e0,e2} extends, {e0,e3} fails
    }

    #[test]
    fn cocktail_party_graph_is_not_3_extendable() {
        let g = Graph::complete_multipartite(&[2, 2, 2, 2]);
        let v = is_n_extendable(&g, 3).unwrap();
        assert!(!v.extendable);
        let w = v.witness.unwrap();
        // the witness must be a real failure
        let residual = g.without_vertices(&w.vertices(&g));
        assert!(!has_perfect_matching(&residual.graph));
    }

    #[test]
    fn extendability_preconditions() {
        assert_eq!(
            is_n_extendable(&Graph::path(4), 2),
            Err(MatchingError::TooFewVertices {
                required: 6,
                actual: 4
            })
        );
        let disconnected = Graph::new(4, vec![(0, 1), (2, 3)]).unwrap();
        assert_eq!(
            is_n_extendable(&disconnected, 1),
            Err(MatchingError::NotConnected)
        );
        // star: connected, 2n+2 vertices, but no 2-matching
        let star = Graph::new(6, vec![(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)]).unwrap();
        assert_eq!(is_n_extendable(&star, 2), Err(MatchingError::NoNMatching(2)));
    }

    #[test]
    fn odd_cycle_is_factor_critical() {
        assert!(is_k_factor_critical(&Graph::cycle(5), 1).unwrap().critical);
        assert!(is_k_factor_critical(&Graph::complete(5), 3).unwrap().critical);
    }

    #[test]
    fn c6_is_not_2_factor_critical() {
        // oracle: brute force over 2-subsets; {v0, v2} isolates v1
        let v = is_k_factor_critical(&Graph::cycle(6), 2).unwrap();
        assert!(!v.critical);
        assert_eq!(v.witness.unwrap().ids(), &[0, 2]);
    }

    #[test]
    fn criticality_preconditions() {
        assert_eq!(
            is_k_factor_critical(&Graph::cycle(6), 1),
            Err(MatchingError::ParityMismatch { order: 6, k: 1 })
        );
        assert!(matches!(
            is_k_factor_critical(&Graph::cycle(6), 6),
            Err(MatchingError::InvalidParameter(_))
        ));
    }

    #[test]
    fn dean_certificate_on_cocktail_party_graph() {
        // derived: G[N(v)] is the octahedron, which has a perfect matching
        let g = Graph::complete_multipartite(&[2, 2, 2, 2]);
        let cert = dean_certificate(&g, 3).unwrap();
        assert_eq!(cert.vertex, 0);
        assert_eq!(cert.t, 3);
        assert_eq!(cert.matching_in_neighborhood.len(), 3);
        // all matched endpoints lie in N(0)
        let nbrs: Vec<usize> = g.neighbors(0).collect();
        for &e in cert.matching_in_neighborhood.edge_ids() {
            let (u, v) = g.endpoints(e);
            assert!(nbrs.contains(&u) && nbrs.contains(&v));
        }
    }

    #[test]
    fn dean_certificate_absent_on_k4() {
        // t = 2 but K3 has matching number 1
        assert_eq!(dean_certificate(&Graph::complete(4), 1), None);
    }

    #[test]
    fn dean_certificate_at_wheel_hub() {
        // W6 hub: degree 6, t = 1, rim C6 contains an edge
        let g = Graph::wheel(6);
        let cert = dean_certificate(&g, 5).unwrap();
        assert_eq!(cert.vertex, 6);
        assert_eq!(cert.t, 1);
    }

    #[test]
    fn criticality_bound_examples() {
        // delta = 7, odd order, general degrees -> 5
        let g = Graph::complete(8); // delta 7, |V| even; adjust with a helper below
        assert_eq!(criticality_upper_bound(&g, false), 6);
        let g9 = Graph::complete(9); // delta 8, |V| odd -> k <= 7, odd -> 7
        assert_eq!(criticality_upper_bound(&g9, false), 7);
        assert_eq!(criticality_upper_bound(&Graph::complete(4), false), 2);
    }

    #[test]
    fn criticality_bound_parity_and_even_degree_rule() {
        // delta = 7, |V| odd, no even-degree assumption -> 5
        let mut edges = Vec::new();
        for u in 0..8 {
            for v in (u + 1)..8 {
                edges.push((u, v));
            }
        }
        edges.extend((1..8).map(|v| (8, v))); // vertex 8 with degree 7
        let g = Graph::new(9, edges).unwrap();
        assert_eq!(g.min_degree(), 7);
        assert_eq!(criticality_upper_bound(&g, false), 5);

        // delta = 6, |V| even, all degrees even -> 4
        let g2 = Graph::complete_multipartite(&[2, 2, 2, 2]); // 6-regular, 8 vertices
        assert_eq!(criticality_upper_bound(&g2, true), 4);
    }
}
