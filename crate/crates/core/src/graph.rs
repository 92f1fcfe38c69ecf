//! Simple undirected graphs with the connectivity and component-parity
//! primitives the rest of the workbench is built on.
//!
//! Vertices are dense 0-based ids. Edge identity is input order: edge `i`
//! is the i-th pair handed to [`Graph::new`], and every other structure in
//! this crate (crossing pairs, rotations, matchings) refers to edges by
//! that id.

use std::collections::HashMap;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {0} out of range (graph has {1} vertices)")]
    VertexOutOfRange(usize, usize),
    #[error("edge id {0} out of range (graph has {1} edges)")]
    EdgeOutOfRange(usize, usize),
    #[error("invalid vertex {0}")]
    InvalidVertex(usize),
    #[error("operation requires at least 2 vertices")]
    DegenerateGraph,
    #[error("edges {0} and {1} share endpoint {2}")]
    MatchingConflict(usize, usize, usize),
}

/// Simple undirected graph. Immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    /// Per vertex: (neighbor, edge id), sorted by neighbor id.
    adj: Vec<Vec<(usize, usize)>>,
}

impl Graph {
    /// Builds a graph, rejecting self-loops and duplicate edges.
    /// Multigraph inputs are an error, not silently deduplicated: duplicate
    /// edges are a failure signal for the optimal-drawing construction.
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Graph, GraphError> {
        let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); vertex_count];
        let mut seen: HashMap<(usize, usize), ()> = HashMap::new();
        for (id, &(u, v)) in edges.iter().enumerate() {
            if u >= vertex_count {
                return Err(GraphError::VertexOutOfRange(u, vertex_count));
            }
            if v >= vertex_count {
                return Err(GraphError::VertexOutOfRange(v, vertex_count));
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            let key = (u.min(v), u.max(v));
            if seen.insert(key, ()).is_some() {
                return Err(GraphError::DuplicateEdge(key.0, key.1));
            }
            adj[u].push((v, id));
            adj[v].push((u, id));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph {
            vertex_count,
            edges,
            adj,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edge list in id order; endpoints as given at construction.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn endpoints(&self, edge: usize) -> (usize, usize) {
        self.edges[edge]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Minimum degree; 0 for the empty graph.
    pub fn min_degree(&self) -> usize {
        (0..self.vertex_count)
            .map(|v| self.degree(v))
            .min()
            .unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.vertex_count)
            .map(|v| self.degree(v))
            .max()
            .unwrap_or(0)
    }

    /// Neighbors of `v` in ascending id order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().map(|&(w, _)| w)
    }

    /// (neighbor, edge id) pairs at `v`, sorted by neighbor.
    pub fn incidences(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[v]
    }

    /// Edge ids incident to `v`, ascending.
    pub fn incident_edges(&self, v: usize) -> Vec<usize> {
        let mut ids: Vec<usize> = self.adj[v].iter().map(|&(_, e)| e).collect();
        ids.sort_unstable();
        ids
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_between(u, v).is_some()
    }

    pub fn edge_between(&self, u: usize, v: usize) -> Option<usize> {
        if u >= self.vertex_count || v >= self.vertex_count {
            return None;
        }
        self.adj[u]
            .binary_search_by_key(&v, |&(w, _)| w)
            .ok()
            .map(|i| self.adj[u][i].1)
    }

    pub fn is_connected(&self) -> bool {
        if self.vertex_count <= 1 {
            return true;
        }
        let mut seen = vec![false; self.vertex_count];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for w in self.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.vertex_count
    }

    /// Complete graph K_n.
    pub fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                edges.push((u, v));
            }
        }
        Graph::new(n, edges).expect("complete graph is simple")
    }

    /// Cycle C_n (n >= 3).
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let edges = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, edges).expect("cycle is simple")
    }

    /// Path on n vertices.
    pub fn path(n: usize) -> Graph {
        let edges = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
        Graph::new(n, edges).expect("path is simple")
    }

    /// Wheel: rim cycle 0..rim-1 plus hub `rim` joined to every rim vertex.
    pub fn wheel(rim: usize) -> Graph {
        assert!(rim >= 3);
        let mut edges: Vec<(usize, usize)> = (0..rim).map(|i| (i, (i + 1) % rim)).collect();
        edges.extend((0..rim).map(|i| (i, rim)));
        Graph::new(rim + 1, edges).expect("wheel is simple")
    }

    /// Complete multipartite graph with the given part sizes.
    pub fn complete_multipartite(parts: &[usize]) -> Graph {
        let n: usize = parts.iter().sum();
        let mut part_of = Vec::with_capacity(n);
        for (p, &size) in parts.iter().enumerate() {
            part_of.extend(std::iter::repeat(p).take(size));
        }
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                if part_of[u] != part_of[v] {
                    edges.push((u, v));
                }
            }
        }
        Graph::new(n, edges).expect("multipartite graph is simple")
    }

    /// Induced subgraph on `keep` (ascending, distinct), with maps back to
    /// the original vertex and edge ids.
    pub fn induced(&self, keep: &[usize]) -> InducedSubgraph {
        let mut new_id = vec![usize::MAX; self.vertex_count];
        for (i, &v) in keep.iter().enumerate() {
            new_id[v] = i;
        }
        let mut edges = Vec::new();
        let mut edge_map = Vec::new();
        for (id, &(u, v)) in self.edges.iter().enumerate() {
            if new_id[u] != usize::MAX && new_id[v] != usize::MAX {
                edges.push((new_id[u], new_id[v]));
                edge_map.push(id);
            }
        }
        let graph = Graph::new(keep.len(), edges).expect("induced subgraph of simple is simple");
        InducedSubgraph {
            graph,
            vertex_map: keep.to_vec(),
            edge_map,
        }
    }

    /// Induced subgraph after deleting `removed`.
    pub fn without_vertices(&self, removed: &VertexSet) -> InducedSubgraph {
        let keep: Vec<usize> = (0..self.vertex_count)
            .filter(|v| !removed.contains(*v))
            .collect();
        self.induced(&keep)
    }
}

/// Sorted set of distinct vertex ids.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new(mut ids: Vec<usize>) -> VertexSet {
        ids.sort_unstable();
        ids.dedup();
        VertexSet(ids)
    }

    pub fn empty() -> VertexSet {
        VertexSet(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn ids(&self) -> &[usize] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        VertexSet::new(iter.into_iter().collect())
    }
}

/// A matching: edge ids with pairwise disjoint endpoints, kept sorted so
/// matchings compare lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Matching(Vec<usize>);

impl Matching {
    /// Validates edge ids and endpoint disjointness against `g`.
    pub fn new(g: &Graph, mut edge_ids: Vec<usize>) -> Result<Matching, GraphError> {
        edge_ids.sort_unstable();
        edge_ids.dedup();
        let mut owner = vec![usize::MAX; g.vertex_count()];
        for &e in &edge_ids {
            if e >= g.edge_count() {
                return Err(GraphError::EdgeOutOfRange(e, g.edge_count()));
            }
            let (u, v) = g.endpoints(e);
            for w in [u, v] {
                if owner[w] != usize::MAX {
                    return Err(GraphError::MatchingConflict(owner[w], e, w));
                }
                owner[w] = e;
            }
        }
        Ok(Matching(edge_ids))
    }

    /// Wraps already-validated, sorted, disjoint edge ids.
    pub(crate) fn from_sorted_unchecked(edge_ids: Vec<usize>) -> Matching {
        debug_assert!(edge_ids.windows(2).all(|w| w[0] < w[1]));
        Matching(edge_ids)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn edge_ids(&self) -> &[usize] {
        &self.0
    }

    /// Vertices covered by the matching.
    pub fn vertices(&self, g: &Graph) -> VertexSet {
        self.0
            .iter()
            .flat_map(|&e| {
                let (u, v) = g.endpoints(e);
                [u, v]
            })
            .collect()
    }
}

/// Induced subgraph together with maps back to the parent graph.
#[derive(Debug, Clone)]
pub struct InducedSubgraph {
    pub graph: Graph,
    /// New vertex id -> original vertex id.
    pub vertex_map: Vec<usize>,
    /// New edge id -> original edge id.
    pub edge_map: Vec<usize>,
}

/// Connected components of `g - removed`, each flagged odd iff its order is
/// odd, ordered by smallest contained vertex id.
pub fn components_with_parity(
    g: &Graph,
    removed: &VertexSet,
) -> Result<Vec<(VertexSet, bool)>, GraphError> {
    for v in removed.iter() {
        if v >= g.vertex_count() {
            return Err(GraphError::InvalidVertex(v));
        }
    }
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    for v in removed.iter() {
        seen[v] = true;
    }
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(v) = stack.pop() {
            for w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                    stack.push(w);
                }
            }
        }
        let odd = comp.len() % 2 == 1;
        out.push((VertexSet::new(comp), odd));
    }
    Ok(out)
}

/// Induced subgraph on the neighborhood N(v), with the map back to original
/// ids. The result has exactly deg(v) vertices.
pub fn induced_neighborhood(g: &Graph, v: usize) -> Result<InducedSubgraph, GraphError> {
    if v >= g.vertex_count() {
        return Err(GraphError::InvalidVertex(v));
    }
    let nbrs: Vec<usize> = g.neighbors(v).collect();
    Ok(g.induced(&nbrs))
}

/// Vertex connectivity via Menger: minimum over the required pairs of the
/// maximum number of internally vertex-disjoint paths, computed by max flow
/// on the unit-capacity vertex-split digraph. Complete graphs yield n - 1.
///
/// Pair selection is the classical reduction: fix a minimum-degree vertex u;
/// any minimum cut either avoids u (then u is separated from some
/// non-neighbor) or contains u (then two neighbors of u are separated).
pub fn vertex_connectivity(g: &Graph) -> Result<usize, GraphError> {
    let n = g.vertex_count();
    if n < 2 {
        return Err(GraphError::DegenerateGraph);
    }
    let u = (0..n).min_by_key(|&v| (g.degree(v), v)).unwrap();
    let mut best = g.degree(u);
    if best == 0 {
        return Ok(0); // isolated vertex
    }
    let mut checked_any = false;
    for t in 0..n {
        if t != u && !g.has_edge(u, t) {
            checked_any = true;
            best = best.min(max_disjoint_paths(g, u, t, best));
            if best == 0 {
                return Ok(0);
            }
        }
    }
    let nbrs: Vec<usize> = g.neighbors(u).collect();
    for (i, &x) in nbrs.iter().enumerate() {
        for &y in &nbrs[i + 1..] {
            if !g.has_edge(x, y) {
                checked_any = true;
                best = best.min(max_disjoint_paths(g, x, y, best));
                if best == 0 {
                    return Ok(0);
                }
            }
        }
    }
    if !checked_any {
        // No non-adjacent pair among the candidates: complete graph.
        return Ok(n - 1);
    }
    Ok(best)
}

/// Max internally vertex-disjoint s-t paths, capped at `cap` (the flow search
/// stops once it cannot improve the caller's current best cut).
fn max_disjoint_paths(g: &Graph, s: usize, t: usize, cap: usize) -> usize {
    debug_assert!(!g.has_edge(s, t));
    let n = g.vertex_count();
    // Split vertex v into in-node 2v and out-node 2v+1 joined by a unit arc.
    // Each undirected edge (a,b) becomes out_a -> in_b and out_b -> in_a.
    let mut net = FlowNet::new(2 * n);
    for v in 0..n {
        net.arc(2 * v, 2 * v + 1, 1);
    }
    for &(a, b) in g.edges() {
        net.arc(2 * a + 1, 2 * b, 1);
        net.arc(2 * b + 1, 2 * a, 1);
    }
    net.max_flow(2 * s + 1, 2 * t, cap)
}

struct FlowNet {
    // arcs stored as (to, cap); arc i and i^1 are a residual pair
    head: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<i32>,
}

impl FlowNet {
    fn new(nodes: usize) -> FlowNet {
        FlowNet {
            head: vec![Vec::new(); nodes],
            to: Vec::new(),
            cap: Vec::new(),
        }
    }

    fn arc(&mut self, from: usize, to: usize, cap: i32) {
        self.head[from].push(self.to.len());
        self.to.push(to);
        self.cap.push(cap);
        self.head[to].push(self.to.len());
        self.to.push(from);
        self.cap.push(0);
    }

    /// Edmonds-Karp, augmenting unit paths until `cap` is reached or no path
    /// remains.
    fn max_flow(&mut self, s: usize, t: usize, cap: usize) -> usize {
        let mut flow = 0;
        while flow < cap {
            let mut parent_arc = vec![usize::MAX; self.head.len()];
            let mut queue = std::collections::VecDeque::new();
            queue.push_back(s);
            parent_arc[s] = usize::MAX - 1;
            let mut reached = false;
            'bfs: while let Some(v) = queue.pop_front() {
                for &a in &self.head[v] {
                    let w = self.to[a];
                    if self.cap[a] > 0 && parent_arc[w] == usize::MAX {
                        parent_arc[w] = a;
                        if w == t {
                            reached = true;
                            break 'bfs;
                        }
                        queue.push_back(w);
                    }
                }
            }
            if !reached {
                break;
            }
            let mut v = t;
            while v != s {
                let a = parent_arc[v];
                self.cap[a] -= 1;
                self.cap[a ^ 1] += 1;
                v = self.to[a ^ 1];
            }
            flow += 1;
        }
        flow
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    use itertools::Itertools;

    /// Brute-force connectivity oracle: smallest vertex set whose removal
    /// disconnects the graph, n-1 if none exists.
    fn brute_connectivity(g: &Graph) -> usize {
        let n = g.vertex_count();
        assert!(n >= 2);
        for k in 0..n - 1 {
            for subset in (0..n).combinations(k) {
                let removed = VertexSet::new(subset);
                if components_with_parity(g, &removed).unwrap().len() >= 2 {
                    return k;
                }
            }
        }
        n - 1
    }

    #[test]
    fn connectivity_matches_known_values() {
        assert_eq!(vertex_connectivity(&Graph::complete(5)).unwrap(), 4);
        assert_eq!(vertex_connectivity(&Graph::cycle(6)).unwrap(), 2);
        assert_eq!(vertex_connectivity(&Graph::path(5)).unwrap(), 1);
    }

    #[test]
    fn connectivity_of_cocktail_party_graph() {
        // K_{2,2,2,2}: oracle = brute force over vertex cuts.
        let g = Graph::complete_multipartite(&[2, 2, 2, 2]);
        assert_eq!(brute_connectivity(&g), 6);
        assert_eq!(vertex_connectivity(&g).unwrap(), 6);
    }

    #[test]
    fn connectivity_rejects_degenerate() {
        let g = Graph::new(1, vec![]).unwrap();
        assert_eq!(vertex_connectivity(&g), Err(GraphError::DegenerateGraph));
    }

    #[test]
    fn connectivity_matches_brute_force_on_small_graphs() {
        // deterministic family: all graphs on 5 vertices with edge sets
        // drawn from a fixed pseudo-random sequence
        let mut state = 0x9e3779b97f4a7c15u64;
        for _ in 0..200 {
            let mut edges = Vec::new();
            for u in 0..5 {
                for v in (u + 1)..5usize {
                    state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    if state >> 33 & 1 == 1 {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::new(5, edges).unwrap();
            assert_eq!(
                vertex_connectivity(&g).unwrap(),
                brute_connectivity(&g),
                "mismatch on {:?}",
                g.edges()
            );
        }
    }

    #[test]
    fn components_of_path_after_removing_middle() {
        let g = Graph::path(3);
        let comps = components_with_parity(&g, &VertexSet::new(vec![1])).unwrap();
        assert_eq!(comps.len(), 2);
        assert!(comps.iter().all(|(c, odd)| c.len() == 1 && *odd));
    }

    #[test]
    fn components_of_cycle_after_removing_opposite_pair() {
        let g = Graph::cycle(6);
        let comps = components_with_parity(&g, &VertexSet::new(vec![0, 3])).unwrap();
        assert_eq!(comps.len(), 2);
        assert!(comps.iter().all(|(c, odd)| c.len() == 2 && !*odd));
    }

    #[test]
    fn components_of_k4_without_removal() {
        let g = Graph::complete(4);
        let comps = components_with_parity(&g, &VertexSet::empty()).unwrap();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].0.len(), 4);
        assert!(!comps[0].1);
    }

    #[test]
    fn components_reject_out_of_range() {
        let g = Graph::complete(4);
        assert_eq!(
            components_with_parity(&g, &VertexSet::new(vec![9])),
            Err(GraphError::InvalidVertex(9))
        );
    }

    #[test]
    fn neighborhood_of_wheel_hub_is_rim_cycle() {
        let g = Graph::wheel(6);
        let sub = induced_neighborhood(&g, 6).unwrap();
        assert_eq!(sub.graph.vertex_count(), 6);
        assert_eq!(sub.graph.edge_count(), 6);
        assert!((0..6).all(|v| sub.graph.degree(v) == 2));
        assert!(sub.graph.is_connected());
    }

    #[test]
    fn neighborhood_in_k4_is_triangle() {
        let g = Graph::complete(4);
        let sub = induced_neighborhood(&g, 0).unwrap();
        assert_eq!(sub.graph.vertex_count(), 3);
        assert_eq!(sub.graph.edge_count(), 3);
    }

    #[test]
    fn neighborhood_in_cocktail_party_is_octahedron() {
        let g = Graph::complete_multipartite(&[2, 2, 2, 2]);
        for v in 0..8 {
            let sub = induced_neighborhood(&g, v).unwrap();
            assert_eq!(sub.graph.vertex_count(), 6);
            assert_eq!(sub.graph.edge_count(), 12);
            assert!((0..6).all(|w| sub.graph.degree(w) == 4));
        }
    }

    #[test]
    fn rejects_multigraph_and_loops() {
        assert_eq!(
            Graph::new(3, vec![(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert_eq!(Graph::new(3, vec![(2, 2)]), Err(GraphError::SelfLoop(2)));
    }

    #[test]
    fn matching_rejects_shared_endpoint() {
        let g = Graph::path(3);
        assert_eq!(
            Matching::new(&g, vec![0, 1]),
            Err(GraphError::MatchingConflict(0, 1, 1))
        );
    }
}
