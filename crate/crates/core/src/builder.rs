//! Optimal 1-planar drawings from 3-connected quadrangulations, fixture
//! generators, barrier-cycle search, and witness extraction.
//!
//! The construction adds both diagonals inside every quadrilateral face and
//! records each face's diagonal pair as a crossing. The inverse direction
//! deletes all crossing edges (`q_of`). A barrier cycle is a separating
//! cycle of non-crossing edges whose removal leaves exactly two odd
//! components, one in each region of the cycle on the sphere.

use std::collections::HashSet;

use thiserror::Error;

use crate::drawing::{
    build_associated, drawing_edge_rotation, validate_drawing, AssociatedPlaneGraph, DrawingError,
    EdgeOrigin, OnePlanarDrawing,
};
use crate::embed::{is_sphere_embedding, trace_faces, FaceStructure, RotationSystem};
use crate::graph::{components_with_parity, vertex_connectivity, Graph, GraphError, Matching, VertexSet};
use crate::matching::has_perfect_matching;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BuilderError {
    #[error(transparent)]
    Drawing(#[from] DrawingError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("not a quadrangulation: {0}")]
    NotQuadrangulation(String),
    #[error("quadrangulation is only {connectivity}-connected; the construction needs 3")]
    NotThreeConnected { connectivity: usize },
    #[error("construction would create a second {u}-{v} edge")]
    MultiEdge { u: usize, v: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("cycle budget of {0} exhausted")]
    ResourceLimit(u64),
    #[error("no degree-6 vertex; not a simple optimal drawing")]
    NoDegreeSixVertex,
    #[error("precondition failed: {0}")]
    PreconditionFailed(Precondition),
    #[error("classification contradicts the barrier-cycle characterization: {0}")]
    TheoremViolation(String),
    #[error("model inconsistency: {0}")]
    ModelInconsistency(String),
}

/// Which classify precondition was violated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Precondition {
    Optimal,
    EvenOrder,
    FiveConnected { connectivity: usize },
    MatchingSize { got: usize },
}

impl std::fmt::Display for Precondition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Precondition::Optimal => write!(f, "drawing is not optimal"),
            Precondition::EvenOrder => write!(f, "order is odd"),
            Precondition::FiveConnected { connectivity } => {
                write!(f, "connectivity {connectivity} < 5")
            }
            Precondition::MatchingSize { got } => write!(f, "matching has {got} edges, needs 3"),
        }
    }
}

/// A sphere quadrangulation: plane graph whose faces are all 4-cycles.
#[derive(Debug, Clone)]
pub struct Quadrangulation {
    graph: Graph,
    rotation: RotationSystem,
    faces: FaceStructure,
}

impl Quadrangulation {
    /// Validates a graph plus neighbor rotation as a sphere quadrangulation:
    /// connected, Euler identity, every face a cycle of length 4.
    pub fn new(graph: Graph, order: Vec<Vec<usize>>) -> Result<Quadrangulation, BuilderError> {
        let rotation = RotationSystem::new(&graph, order)
            .map_err(|e| BuilderError::NotQuadrangulation(e.to_string()))?;
        if !graph.is_connected() {
            return Err(BuilderError::NotQuadrangulation("graph is disconnected".into()));
        }
        let faces = trace_faces(&graph, &rotation);
        if !is_sphere_embedding(&graph, &faces) {
            return Err(BuilderError::NotQuadrangulation(
                "rotation is not a sphere embedding".into(),
            ));
        }
        for f in &faces.faces {
            if f.degree() != 4 {
                return Err(BuilderError::NotQuadrangulation(format!(
                    "face {:?} has degree {}",
                    f.vertices(),
                    f.degree()
                )));
            }
            let mut distinct = f.vertices().to_vec();
            distinct.sort_unstable();
            distinct.dedup();
            if distinct.len() != 4 {
                return Err(BuilderError::NotQuadrangulation(format!(
                    "face walk {:?} is not a cycle",
                    f.vertices()
                )));
            }
        }
        Ok(Quadrangulation {
            graph,
            rotation,
            faces,
        })
    }

    /// Reads a crossing-free drawing with rotation as a quadrangulation.
    pub fn from_plane_drawing(d: &OnePlanarDrawing) -> Result<Quadrangulation, BuilderError> {
        if !d.crossings().is_empty() {
            return Err(BuilderError::NotQuadrangulation(
                "drawing has crossings".into(),
            ));
        }
        let rot = d.rotation().ok_or_else(|| {
            BuilderError::NotQuadrangulation("quadrangulation input needs rotation lines".into())
        })?;
        let g = d.graph();
        let order: Vec<Vec<usize>> = (0..g.vertex_count())
            .map(|v| {
                rot[v]
                    .iter()
                    .map(|&e| {
                        let (a, b) = g.endpoints(e);
                        if a == v {
                            b
                        } else {
                            a
                        }
                    })
                    .collect()
            })
            .collect();
        Quadrangulation::new(g.clone(), order)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn rotation(&self) -> &RotationSystem {
        &self.rotation
    }

    pub fn face_count(&self) -> usize {
        self.faces.faces.len()
    }
}

/// Fixture families for [`generate_quadrangulation`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuadFamily {
    Cube,
    /// Cycle x_1..x_2n plus two poles joined to alternating cycle vertices.
    PseudoDoubleWheel(usize),
}

/// Deterministic generators for the fixture families; both outputs are
/// simple 3-connected quadrangulations.
pub fn generate_quadrangulation(family: QuadFamily) -> Result<Quadrangulation, BuilderError> {
    match family {
        QuadFamily::Cube => {
            let mut edges = vec![(0, 1), (1, 2), (2, 3), (3, 0)];
            edges.extend([(4, 5), (5, 6), (6, 7), (7, 4)]);
            edges.extend([(0, 4), (1, 5), (2, 6), (3, 7)]);
            let graph = Graph::new(8, edges).expect("cube is simple");
            let order = vec![
                vec![1, 4, 3],
                vec![0, 2, 5],
                vec![3, 6, 1],
                vec![0, 7, 2],
                vec![0, 5, 7],
                vec![4, 1, 6],
                vec![7, 5, 2],
                vec![4, 6, 3],
            ];
            Quadrangulation::new(graph, order)
        }
        QuadFamily::PseudoDoubleWheel(n) => {
            if n < 3 {
                return Err(BuilderError::InvalidParameter(format!(
                    "pseudo-double-wheel needs n >= 3, got {n}"
                )));
            }
            let cyc = 2 * n;
            let a = cyc; // pole on the even cycle vertices
            let b = cyc + 1; // pole on the odd cycle vertices
            let mut edges: Vec<(usize, usize)> = (0..cyc).map(|i| (i, (i + 1) % cyc)).collect();
            edges.extend((0..n).map(|i| (a, 2 * i)));
            edges.extend((0..n).map(|i| (b, 2 * i + 1)));
            let graph = Graph::new(cyc + 2, edges).expect("pseudo-double-wheel is simple");
            let mut order: Vec<Vec<usize>> = Vec::with_capacity(cyc + 2);
            for i in 0..cyc {
                let prev = (i + cyc - 1) % cyc;
                let next = (i + 1) % cyc;
                if i % 2 == 0 {
                    order.push(vec![next, a, prev]);
                } else {
                    order.push(vec![next, prev, b]);
                }
            }
            order.push((0..n).map(|i| 2 * i).collect());
            order.push((0..n).rev().map(|i| 2 * i + 1).collect());
            Quadrangulation::new(graph, order)
        }
    }
}

/// Builds the optimal 1-planar drawing over a 3-connected quadrangulation:
/// both diagonals are added inside every face and marked as a crossing
/// pair. Diagonal edge ids follow the quadrangulation's edges in face
/// order, so deleting the crossing edges recovers the input exactly.
pub fn optimal_from_quadrangulation(h: &Quadrangulation) -> Result<OnePlanarDrawing, BuilderError> {
    let g = h.graph();
    let kappa = vertex_connectivity(g)?;
    if kappa < 3 {
        return Err(BuilderError::NotThreeConnected {
            connectivity: kappa,
        });
    }
    let n = g.vertex_count();
    let m = g.edge_count();
    let mut edges: Vec<(usize, usize)> = g.edges().to_vec();
    let mut seen: HashSet<(usize, usize)> =
        g.edges().iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
    let mut crossings = Vec::with_capacity(h.faces.faces.len());
    for (fi, f) in h.faces.faces.iter().enumerate() {
        let c = f.vertices();
        // endpoint order fixes the rotation at the crossing point: the
        // convention (i.first, j.first, i.second, j.second) must walk the
        // face boundary against its trace direction
        for (x, y) in [(c[0], c[2]), (c[3], c[1])] {
            if !seen.insert((x.min(y), x.max(y))) {
                return Err(BuilderError::MultiEdge {
                    u: x.min(y),
                    v: x.max(y),
                });
            }
            edges.push((x, y));
        }
        crossings.push((m + 2 * fi, m + 2 * fi + 1));
    }
    let graph = Graph::new(n, edges).expect("diagonal duplicates checked above");

    // interleave each vertex's quadrangulation spokes with the diagonal of
    // the face at the corner between consecutive spokes
    let mut rotation: Vec<Vec<usize>> = Vec::with_capacity(n);
    for v in 0..n {
        let spokes = h.rotation.at(v);
        let mut list = Vec::with_capacity(2 * spokes.len());
        for (t, &w) in spokes.iter().enumerate() {
            let _ = t;
            list.push(g.edge_between(v, w).expect("spoke is an edge"));
            let fi = h.faces.face_of_dart(w, v);
            let walk = h.faces.faces[fi].vertices();
            let p = walk
                .iter()
                .position(|&x| x == v)
                .expect("corner face contains the vertex");
            list.push(m + 2 * fi + (p % 2));
        }
        rotation.push(list);
    }
    let drawing = OnePlanarDrawing::new(graph, crossings, Some(rotation))?;
    Ok(drawing)
}

/// Deletes every crossing edge of the drawing: the quadrangulation Q(G)
/// when `d` is optimal. Non-crossing edges keep their relative order, so a
/// drawing produced by [`optimal_from_quadrangulation`] round-trips to its
/// quadrangulation's graph exactly.
pub fn q_of(d: &OnePlanarDrawing) -> Graph {
    let keep: Vec<(usize, usize)> = d
        .graph()
        .edges()
        .iter()
        .enumerate()
        .filter(|&(e, _)| !d.is_crossing_edge(e))
        .map(|(_, &pair)| pair)
        .collect();
    Graph::new(d.graph().vertex_count(), keep).expect("subgraph of simple is simple")
}

/// A separating cycle of non-crossing edges leaving two odd components, one
/// in each region of the cycle. On the sphere neither region is canonical;
/// `inside` is deterministically the component with the smallest vertex id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BarrierCycle {
    /// Cycle vertices, smallest first, in the lexicographically smaller
    /// direction.
    pub cycle: Vec<usize>,
    pub inside: VertexSet,
    pub outside: VertexSet,
}

/// Default cycle budget for [`barrier_cycle_search`].
pub const DEFAULT_CYCLE_BUDGET: u64 = 1_000_000;

/// Enumerates barrier cycles of length <= max_len, in deterministic order
/// (shortest first, then lexicographic).
pub fn barrier_cycle_search(
    d: &OnePlanarDrawing,
    max_len: usize,
) -> Result<Vec<BarrierCycle>, BuilderError> {
    barrier_cycle_search_with_budget(d, max_len, DEFAULT_CYCLE_BUDGET)
}

pub fn barrier_cycle_search_with_budget(
    d: &OnePlanarDrawing,
    max_len: usize,
    max_cycles: u64,
) -> Result<Vec<BarrierCycle>, BuilderError> {
    if max_len < 3 {
        return Err(BuilderError::InvalidParameter(format!(
            "max_len must be at least 3, got {max_len}"
        )));
    }
    let a = build_associated(d)?;
    let g = d.graph();
    let n = g.vertex_count();
    // adjacency restricted to non-crossing edges
    let mut nc_adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if !d.is_crossing_edge(e) {
            nc_adj[u].push(v);
            nc_adj[v].push(u);
        }
    }
    for list in &mut nc_adj {
        list.sort_unstable();
    }

    let mut found = Vec::new();
    let mut budget: u64 = 0;
    // canonical enumeration: cycles rooted at their smallest vertex, second
    // vertex smaller than the last to fix the direction
    let mut path: Vec<usize> = Vec::new();
    let mut on_path = vec![false; n];
    for root in 0..n {
        path.push(root);
        on_path[root] = true;
        dfs_cycles(
            &nc_adj,
            root,
            max_len,
            &mut path,
            &mut on_path,
            &mut budget,
            max_cycles,
            &mut |cycle| {
                if let Some(b) = verify_barrier(g, &a, d, cycle) {
                    found.push(b);
                }
            },
        )?;
        path.pop();
        on_path[root] = false;
    }
    found.sort_by(|x, y| (x.cycle.len(), &x.cycle).cmp(&(y.cycle.len(), &y.cycle)));
    Ok(found)
}

#[allow(clippy::too_many_arguments)]
fn dfs_cycles(
    nc_adj: &[Vec<usize>],
    root: usize,
    max_len: usize,
    path: &mut Vec<usize>,
    on_path: &mut Vec<bool>,
    budget: &mut u64,
    max_cycles: u64,
    emit: &mut impl FnMut(&[usize]),
) -> Result<(), BuilderError> {
    let v = *path.last().unwrap();
    for &w in &nc_adj[v] {
        if w == root && path.len() >= 3 {
            // close the cycle; fix direction by requiring second < last
            if path[1] < *path.last().unwrap() {
                *budget += 1;
                if *budget > max_cycles {
                    return Err(BuilderError::ResourceLimit(max_cycles));
                }
                emit(path);
            }
            continue;
        }
        if w <= root || on_path[w] || path.len() == max_len {
            continue;
        }
        path.push(w);
        on_path[w] = true;
        dfs_cycles(nc_adj, root, max_len, path, on_path, budget, max_cycles, emit)?;
        path.pop();
        on_path[w] = false;
    }
    Ok(())
}

/// Checks the barrier conditions for one candidate cycle: exactly two odd
/// components after deleting V(C), lying in the two distinct regions of C
/// on the sphere. Region classification is combinatorial: the dual edges
/// crossing C form a minimal cut of the face-adjacency graph, so cutting
/// them leaves exactly two face groups.
fn verify_barrier(
    g: &Graph,
    a: &AssociatedPlaneGraph,
    d: &OnePlanarDrawing,
    cycle: &[usize],
) -> Option<BarrierCycle> {
    let removed: VertexSet = cycle.iter().copied().collect();
    let comps = components_with_parity(g, &removed).expect("cycle vertices in range");
    if comps.len() != 2 || comps.iter().any(|(_, odd)| !*odd) {
        return None;
    }
    // map cycle edges to their (whole) edges in the associated graph
    let mut whole_of_original = vec![usize::MAX; g.edge_count()];
    for (gx_e, origin) in a.edge_origin().iter().enumerate() {
        if let EdgeOrigin::Whole(e) = origin {
            whole_of_original[*e] = gx_e;
        }
    }
    let len = cycle.len();
    let mut cycle_gx_edges = HashSet::new();
    for k in 0..len {
        let (u, v) = (cycle[k], cycle[(k + 1) % len]);
        let e = g.edge_between(u, v).expect("cycle edge exists");
        debug_assert!(!d.is_crossing_edge(e));
        cycle_gx_edges.insert(whole_of_original[e]);
    }
    // group faces, ignoring adjacencies across the cycle
    let face_count = a.faces().len();
    let mut dsu = Dsu::new(face_count);
    for (gx_e, &(u, v)) in a.graph().edges().iter().enumerate() {
        if cycle_gx_edges.contains(&gx_e) {
            continue;
        }
        dsu.union(a.face_of_dart(u, v), a.face_of_dart(v, u));
    }
    let (c0, c1) = (cycle[0], cycle[1]);
    let side_a = dsu.find(a.face_of_dart(c0, c1));
    let side_b = dsu.find(a.face_of_dart(c1, c0));
    if side_a == side_b {
        return None; // cycle does not separate the sphere locally
    }
    let mut regions = Vec::new();
    for (comp, _) in &comps {
        let mut comp_region = None;
        for v in comp.iter() {
            let corner = a.corner_faces(v);
            let r = dsu.find(corner[0]);
            if r != side_a && r != side_b {
                return None; // component floats in neither region
            }
            match comp_region {
                None => comp_region = Some(r),
                Some(prev) if prev != r => return None,
                _ => {}
            }
        }
        regions.push(comp_region.expect("component is non-empty"));
    }
    if regions[0] == regions[1] {
        return None; // both odd components on the same side
    }
    Some(BarrierCycle {
        cycle: canonical_cycle(cycle),
        inside: comps[0].0.clone(),
        outside: comps[1].0.clone(),
    })
}

fn canonical_cycle(cycle: &[usize]) -> Vec<usize> {
    let n = cycle.len();
    let start = (0..n).min_by_key(|&i| cycle[i]).unwrap();
    let fwd: Vec<usize> = (0..n).map(|k| cycle[(start + k) % n]).collect();
    let bwd: Vec<usize> = (0..n).map(|k| cycle[(start + n - k) % n]).collect();
    fwd.min(bwd)
}

struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Dsu {
        Dsu {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let r = self.find(self.parent[x]);
            self.parent[x] = r;
        }
        self.parent[x]
    }

    fn union(&mut self, x: usize, y: usize) {
        let (rx, ry) = (self.find(x), self.find(y));
        if rx != ry {
            self.parent[rx.max(ry)] = rx.min(ry);
        }
    }
}

/// Extracts the non-extendable 3-matching of a simple optimal drawing: the
/// first degree-6 vertex exists (minimum degree is at most 7, degrees are
/// even, and degree 4 would force a multi-edge), and pairing its six
/// rotation-ordered neighbors yields a 3-matching covering N(v), which
/// isolates v once removed.
pub fn three_matching_witness(d: &OnePlanarDrawing) -> Result<Matching, BuilderError> {
    let report = validate_drawing(d);
    if !report.is_valid() {
        return Err(DrawingError::InvalidDrawing(report.violations).into());
    }
    let g = d.graph();
    let n = g.vertex_count();
    let required = if n >= 2 { 4 * n - 8 } else { 0 };
    if g.edge_count() != required {
        return Err(DrawingError::NotOptimal {
            edges: g.edge_count(),
            required,
        }
        .into());
    }
    let v = (0..n)
        .find(|&v| g.degree(v) == 6)
        .ok_or(BuilderError::NoDegreeSixVertex)?;
    let (rot, _) = drawing_edge_rotation(d)?;
    let nbrs: Vec<usize> = rot[v]
        .iter()
        .map(|&e| {
            let (a, b) = g.endpoints(e);
            if a == v {
                b
            } else {
                a
            }
        })
        .collect();
    let mut ids = Vec::with_capacity(3);
    for pair in nbrs.chunks(2) {
        let e = g.edge_between(pair[0], pair[1]).ok_or_else(|| {
            BuilderError::ModelInconsistency(format!(
                "rotation-consecutive neighbors {} and {} of vertex {v} are not adjacent",
                pair[0], pair[1]
            ))
        })?;
        ids.push(e);
    }
    Matching::new(g, ids).map_err(BuilderError::Graph)
}

/// Verdict of [`classify_3matching`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ThreeMatchingClass {
    Extendable,
    BlockedByBarrier(BarrierCycle),
}

/// Classifies a 3-matching of a 5-connected optimal drawing of even order:
/// either it extends to a perfect matching, or the drawing contains a
/// barrier 6-cycle on exactly the matched vertices. A non-extendable
/// matching with no such cycle contradicts the characterization and is
/// reported as `TheoremViolation`.
pub fn classify_3matching(
    d: &OnePlanarDrawing,
    m: &Matching,
) -> Result<ThreeMatchingClass, BuilderError> {
    if m.len() != 3 {
        return Err(BuilderError::PreconditionFailed(Precondition::MatchingSize {
            got: m.len(),
        }));
    }
    let report = validate_drawing(d);
    if !report.is_valid() {
        return Err(DrawingError::InvalidDrawing(report.violations).into());
    }
    if !d.is_optimal() {
        return Err(BuilderError::PreconditionFailed(Precondition::Optimal));
    }
    let g = d.graph();
    if g.vertex_count() % 2 != 0 {
        return Err(BuilderError::PreconditionFailed(Precondition::EvenOrder));
    }
    let kappa = vertex_connectivity(g)?;
    if kappa < 5 {
        return Err(BuilderError::PreconditionFailed(Precondition::FiveConnected {
            connectivity: kappa,
        }));
    }
    let covered = m.vertices(g);
    let residual = g.without_vertices(&covered);
    if has_perfect_matching(&residual.graph) {
        return Ok(ThreeMatchingClass::Extendable);
    }
    // hunt for a barrier 6-cycle through exactly the matched vertices
    let a = build_associated(d)?;
    let verts: Vec<usize> = covered.ids().to_vec();
    debug_assert_eq!(verts.len(), 6);
    let mut best: Option<BarrierCycle> = None;
    let mut order = vec![verts[0]];
    let rest: Vec<usize> = verts[1..].to_vec();
    permute_cycles(&rest, &mut order, &mut |cycle| {
        // direction dedupe: second vertex smaller than last
        if cycle[1] > *cycle.last().unwrap() {
            return;
        }
        let len = cycle.len();
        let closed = (0..len).all(|k| {
            let (u, v) = (cycle[k], cycle[(k + 1) % len]);
            match g.edge_between(u, v) {
                Some(e) => !d.is_crossing_edge(e),
                None => false,
            }
        });
        if !closed {
            return;
        }
        if let Some(b) = verify_barrier(g, &a, d, cycle) {
            match &best {
                Some(prev) if prev.cycle <= b.cycle => {}
                _ => best = Some(b),
            }
        }
    });
    match best {
        Some(b) => Ok(ThreeMatchingClass::BlockedByBarrier(b)),
        None => Err(BuilderError::TheoremViolation(format!(
            "3-matching {:?} does not extend and no barrier 6-cycle covers its vertices",
            m.edge_ids()
        ))),
    }
}

/// All cyclic orders of `rest` appended to the fixed prefix.
fn permute_cycles(rest: &[usize], order: &mut Vec<usize>, visit: &mut impl FnMut(&[usize])) {
    if rest.is_empty() {
        visit(order);
        return;
    }
    for (i, &x) in rest.iter().enumerate() {
        let mut remaining = rest.to_vec();
        remaining.remove(i);
        order.push(x);
        permute_cycles(&remaining, order, visit);
        order.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::drawing::{alternation_check, build_associated, validate_drawing};
    use crate::matching::is_n_extendable;

    fn cube_optimal() -> OnePlanarDrawing {
        let h = generate_quadrangulation(QuadFamily::Cube).unwrap();
        optimal_from_quadrangulation(&h).unwrap()
    }

    #[test]
    fn generators_have_expected_counts() {
        let cube = generate_quadrangulation(QuadFamily::Cube).unwrap();
        assert_eq!(cube.graph().vertex_count(), 8);
        assert_eq!(cube.graph().edge_count(), 12);
        assert_eq!(cube.face_count(), 6);
        for (n, v, e, f) in [(3usize, 8usize, 12usize, 6usize), (5, 12, 20, 10)] {
            let q = generate_quadrangulation(QuadFamily::PseudoDoubleWheel(n)).unwrap();
            assert_eq!(q.graph().vertex_count(), v);
            assert_eq!(q.graph().edge_count(), e);
            assert_eq!(q.face_count(), f);
        }
        assert!(matches!(
            generate_quadrangulation(QuadFamily::PseudoDoubleWheel(2)),
            Err(BuilderError::InvalidParameter(_))
        ));
    }

    #[test]
    fn pseudo_double_wheel_is_3_connected() {
        // brute-force cut check on the n = 5 instance
        let q = generate_quadrangulation(QuadFamily::PseudoDoubleWheel(5)).unwrap();
        let g = q.graph();
        use itertools::Itertools;
        let mut brute = g.vertex_count() - 1;
        'outer: for k in 0..g.vertex_count() - 1 {
            for subset in (0..g.vertex_count()).combinations(k) {
                let removed: VertexSet = subset.into_iter().collect();
                if components_with_parity(g, &removed).unwrap().len() >= 2 {
                    brute = k;
                    break 'outer;
                }
            }
        }
        assert_eq!(brute, 3);
        assert_eq!(vertex_connectivity(g).unwrap(), 3);
    }

    #[test]
    fn cube_construction_yields_cocktail_party_graph() {
        let d = cube_optimal();
        let g = d.graph();
        assert_eq!(g.vertex_count(), 8);
        assert_eq!(g.edge_count(), 24); // 4*8 - 8
        assert_eq!(d.crossings().len(), 6);
        assert!((0..8).all(|v| g.degree(v) == 6));
        // complement is a perfect matching of antipodal pairs
        let non_edges: Vec<(usize, usize)> = (0..8)
            .flat_map(|u| ((u + 1)..8).map(move |v| (u, v)))
            .filter(|&(u, v)| !g.has_edge(u, v))
            .collect();
        assert_eq!(non_edges.len(), 4);
        let mut seen = HashSet::new();
        for (u, v) in non_edges {
            assert!(seen.insert(u) && seen.insert(v));
        }
        assert!(validate_drawing(&d).is_valid());
    }

    #[test]
    fn cube_construction_builds_all_false_triangles() {
        let d = cube_optimal();
        let a = build_associated(&d).unwrap();
        assert_eq!(a.graph().vertex_count(), 14);
        assert_eq!(a.graph().edge_count(), 36);
        assert_eq!(a.faces().len(), 24);
        assert!(a.faces().iter().all(|f| f.degree() == 3 && f.is_false()));
    }

    #[test]
    fn cube_construction_passes_alternation() {
        let d = cube_optimal();
        let report = alternation_check(&d).unwrap();
        assert!(report.passed(), "offender: {:?}", report.first_offender);
        assert!((0..8).all(|v| d.graph().degree(v) % 2 == 0));
    }

    #[test]
    fn pseudo_double_wheel_constructions() {
        for n in 3..=8 {
            let h = generate_quadrangulation(QuadFamily::PseudoDoubleWheel(n)).unwrap();
            let d = optimal_from_quadrangulation(&h).unwrap();
            let v = d.graph().vertex_count();
            assert_eq!(v, 2 * n + 2);
            assert_eq!(d.graph().edge_count(), 4 * v - 8);
            assert!(validate_drawing(&d).is_valid());
            assert!(alternation_check(&d).unwrap().passed());
            assert_eq!(q_of(&d), *h.graph());
        }
    }

    #[test]
    fn q_of_round_trips_on_cube() {
        let h = generate_quadrangulation(QuadFamily::Cube).unwrap();
        let d = optimal_from_quadrangulation(&h).unwrap();
        assert_eq!(q_of(&d), *h.graph());
        // crossing-free drawing: q_of is the identity
        let plain = OnePlanarDrawing::new(h.graph().clone(), vec![], None).unwrap();
        assert_eq!(q_of(&plain), *h.graph());
    }

    #[test]
    fn k23_quadrangulation_is_rejected() {
        // K_{2,3}: parts {0,1} and {2,3,4}; faces (0,2,1,3),(0,3,1,4),(0,4,1,2)
        let g = Graph::new(5, vec![(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
        let order = vec![
            vec![2, 3, 4],
            vec![4, 3, 2],
            vec![0, 1],
            vec![0, 1],
            vec![0, 1],
        ];
        let q = Quadrangulation::new(g, order).unwrap();
        assert_eq!(
            optimal_from_quadrangulation(&q).unwrap_err(),
            BuilderError::NotThreeConnected { connectivity: 2 }
        );
    }

    #[test]
    fn barrier_search_on_cube_drawing() {
        let d = cube_optimal();
        // 6-connected: no 4 vertices can separate
        assert_eq!(barrier_cycle_search(&d, 4).unwrap(), vec![]);
        let sixes = barrier_cycle_search(&d, 6).unwrap();
        assert!(!sixes.is_empty());
        for b in &sixes {
            assert_eq!(b.cycle.len(), 6);
            assert_eq!(b.inside.len(), 1);
            assert_eq!(b.outside.len(), 1);
            // the two singletons are a non-adjacent (antipodal) pair
            let (x, y) = (b.inside.ids()[0], b.outside.ids()[0]);
            assert!(!d.graph().has_edge(x, y));
        }
    }

    #[test]
    fn crossing_free_cycle_has_no_barrier() {
        let g = Graph::cycle(6);
        let rot = (0..6)
            .map(|v| g.incident_edges(v))
            .collect::<Vec<_>>();
        let d = OnePlanarDrawing::new(g, vec![], Some(rot)).unwrap();
        assert_eq!(barrier_cycle_search(&d, 6).unwrap(), vec![]);
    }

    #[test]
    fn witness_isolates_a_vertex() {
        let d = cube_optimal();
        let m = three_matching_witness(&d).unwrap();
        assert_eq!(m.len(), 3);
        let g = d.graph();
        let residual = g.without_vertices(&m.vertices(g));
        assert!(!has_perfect_matching(&residual.graph));
        // cross-check against the sweep
        let verdict = is_n_extendable(g, 3).unwrap();
        assert!(!verdict.extendable);
    }

    #[test]
    fn witness_on_pseudo_double_wheel() {
        let h = generate_quadrangulation(QuadFamily::PseudoDoubleWheel(4)).unwrap();
        let d = optimal_from_quadrangulation(&h).unwrap();
        // cycle vertices have degree 6, poles degree 8
        let m = three_matching_witness(&d).unwrap();
        let g = d.graph();
        let residual = g.without_vertices(&m.vertices(g));
        assert!(!has_perfect_matching(&residual.graph));
    }

    #[test]
    fn witness_rejects_non_optimal() {
        let h = generate_quadrangulation(QuadFamily::Cube).unwrap();
        let plain = OnePlanarDrawing::new(h.graph().clone(), vec![], None).unwrap();
        assert!(matches!(
            three_matching_witness(&plain),
            Err(BuilderError::Drawing(DrawingError::NotOptimal { .. }))
        ));
    }

    #[test]
    fn classify_blocks_witness_with_matching_barrier() {
        let d = cube_optimal();
        let m = three_matching_witness(&d).unwrap();
        match classify_3matching(&d, &m).unwrap() {
            ThreeMatchingClass::BlockedByBarrier(b) => {
                let mut cycle_set: Vec<usize> = b.cycle.clone();
                cycle_set.sort_unstable();
                assert_eq!(cycle_set, m.vertices(d.graph()).ids());
            }
            other => panic!("expected barrier, got {other:?}"),
        }
    }

    #[test]
    fn classify_extendable_sub_matching_of_perfect_matching() {
        let d = cube_optimal();
        let g = d.graph();
        let pm = crate::matching::maximum_matching(g);
        assert_eq!(pm.len(), 4);
        let m = Matching::new(g, pm.edge_ids()[0..3].to_vec()).unwrap();
        assert_eq!(classify_3matching(&d, &m).unwrap(), ThreeMatchingClass::Extendable);
    }

    #[test]
    fn classify_rejects_wrong_size() {
        let d = cube_optimal();
        let g = d.graph();
        let pm = crate::matching::maximum_matching(g);
        let m = Matching::new(g, pm.edge_ids()[0..2].to_vec()).unwrap();
        assert_eq!(
            classify_3matching(&d, &m).unwrap_err(),
            BuilderError::PreconditionFailed(Precondition::MatchingSize { got: 2 })
        );
    }

    #[test]
    fn cube_drawing_face_profiles() {
        let d = cube_optimal();
        let a = build_associated(&d).unwrap();
        let profiles = crate::drawing::face_profile(&a).unwrap();
        for p in &profiles {
            if a.is_false_vertex(p.vertex) {
                assert_eq!((p.true3, p.false3, p.max_false_run), (0, 4, 4));
            } else {
                assert_eq!((p.true3, p.false3, p.max_false_run), (0, 6, 6));
            }
        }
    }

    #[test]
    fn cube_drawing_triggers_lemma_scan_everywhere() {
        let d = cube_optimal();
        let a = build_associated(&d).unwrap();
        let hits = crate::drawing::lemma_2_2_scan(&a, d.graph()).unwrap();
        // every true vertex is triggered and yields an edge between two of
        // its neighbors
        assert_eq!(hits.len(), 8);
        for (v, hit) in hits.iter().enumerate() {
            assert_eq!(hit.vertex, v);
            let (x, y) = d.graph().endpoints(hit.edge);
            assert!(d.graph().has_edge(v, x));
            assert!(d.graph().has_edge(v, y));
        }
    }

    #[test]
    fn corrupted_crossing_list_fails_alternation() {
        let d = cube_optimal();
        let mut crossings = d.crossings().to_vec();
        crossings.pop();
        let corrupted = OnePlanarDrawing::new(
            d.graph().clone(),
            crossings,
            d.rotation().cloned(),
        )
        .unwrap();
        let report = alternation_check(&corrupted).unwrap();
        assert!(report.first_offender.is_some());
    }
}
