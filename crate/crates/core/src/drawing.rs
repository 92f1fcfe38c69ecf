//! 1-planar drawings and their associated plane graphs.
//!
//! A drawing is a simple graph plus a set of crossing pairs (edge ids) and,
//! optionally, a rotation: the cyclic order of incident edge ids at every
//! vertex. The associated plane graph replaces each crossing by a new
//! "false" vertex of degree four; original vertices are "true". A face is
//! false iff its boundary touches a false vertex.
//!
//! Rotations at false vertices are never stored. The crossing pair (i, j)
//! fixes them by convention: the cyclic order at the new vertex is
//! (first endpoint of i, first endpoint of j, second endpoint of i, second
//! endpoint of j), endpoints as written in the edge list. Constructions
//! that need the mirrored orientation swap an edge's endpoints instead.
//! When no rotation is given, a planar embedding of the associated graph is
//! computed; a wheel gadget at each crossing forces the two halves of a
//! crossed edge to stay opposite, so the computed embedding is always
//! realizable as an actual drawing.

use thiserror::Error;

use crate::embed::{
    is_sphere_embedding, planar_embedding, trace_faces, EmbedError, FaceStructure, FaceWalk,
    RotationSystem,
};
use crate::graph::{Graph, GraphError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DrawingError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("drawing fails validation: {0:?}")]
    InvalidDrawing(Vec<Violation>),
    #[error("crossing data admits no planar realization")]
    NotPlanarizable,
    #[error("malformed rotation at vertex {vertex}: {reason}")]
    MalformedRotation { vertex: usize, reason: String },
    #[error("drawing is not optimal: {edges} edges, 4|V|-8 = {required}")]
    NotOptimal { edges: usize, required: usize },
    #[error("model inconsistency: {0}")]
    ModelInconsistency(String),
    #[error("parity violation at vertex {vertex}: a 7-vertex with seven false 3-faces")]
    ParityViolation { vertex: usize },
}

/// One structural defect found by [`validate_drawing`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// An edge appears in more than one crossing pair.
    DoubleCrossed { edge: usize },
    /// A crossing pair lists the same edge twice.
    SelfPaired { edge: usize },
    /// Crossing partners share an endpoint.
    CrossingSharesEndpoint {
        first: usize,
        second: usize,
        vertex: usize,
    },
    /// Every 1-planar graph has a vertex of degree at most 7.
    MinDegreeAboveSeven { min_degree: usize },
    /// A rotation list is not a permutation of the vertex's incident edges.
    RotationMismatch { vertex: usize },
    /// The supplied rotation does not describe a sphere embedding of the
    /// associated plane graph.
    RotationNotPlanar,
}

/// Validation outcome: empty list means the drawing is valid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidityReport {
    pub violations: Vec<Violation>,
}

impl ValidityReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// A 1-planar drawing: graph, crossing pairs, optional rotation (cyclic
/// incident edge ids per vertex).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OnePlanarDrawing {
    graph: Graph,
    crossings: Vec<(usize, usize)>,
    rotation: Option<Vec<Vec<usize>>>,
}

impl OnePlanarDrawing {
    /// Wraps the parts, rejecting only unrepresentable data (ids out of
    /// range, rotation of the wrong shape). Structural defects like
    /// double-crossed edges stay representable and are reported by
    /// [`validate_drawing`].
    pub fn new(
        graph: Graph,
        crossings: Vec<(usize, usize)>,
        rotation: Option<Vec<Vec<usize>>>,
    ) -> Result<OnePlanarDrawing, DrawingError> {
        for &(i, j) in &crossings {
            for e in [i, j] {
                if e >= graph.edge_count() {
                    return Err(GraphError::EdgeOutOfRange(e, graph.edge_count()).into());
                }
            }
        }
        if let Some(rot) = &rotation {
            if rot.len() != graph.vertex_count() {
                return Err(DrawingError::MalformedRotation {
                    vertex: rot.len(),
                    reason: format!(
                        "rotation covers {} vertices, graph has {}",
                        rot.len(),
                        graph.vertex_count()
                    ),
                });
            }
            for list in rot {
                for &e in list {
                    if e >= graph.edge_count() {
                        return Err(GraphError::EdgeOutOfRange(e, graph.edge_count()).into());
                    }
                }
            }
        }
        Ok(OnePlanarDrawing {
            graph,
            crossings,
            rotation,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn crossings(&self) -> &[(usize, usize)] {
        &self.crossings
    }

    pub fn rotation(&self) -> Option<&Vec<Vec<usize>>> {
        self.rotation.as_ref()
    }

    /// Index of the crossing containing edge `e`, for well-formed crossing
    /// data.
    pub fn crossing_of_edge(&self, e: usize) -> Option<usize> {
        self.crossings
            .iter()
            .position(|&(i, j)| i == e || j == e)
    }

    pub fn is_crossing_edge(&self, e: usize) -> bool {
        self.crossing_of_edge(e).is_some()
    }

    /// |E| = 4|V| - 8, the maximum edge count of a 1-planar graph.
    pub fn is_optimal(&self) -> bool {
        let n = self.graph.vertex_count();
        n >= 2 && self.graph.edge_count() == 4 * n - 8
    }
}

/// Crossing-pair and rotation well-formedness; no planarity.
fn structural_violations(d: &OnePlanarDrawing) -> Vec<Violation> {
    let mut violations = Vec::new();
    let mut seen = vec![0usize; d.graph.edge_count()];
    for &(i, j) in &d.crossings {
        if i == j {
            violations.push(Violation::SelfPaired { edge: i });
            continue;
        }
        seen[i] += 1;
        seen[j] += 1;
        let (a, b) = d.graph.endpoints(i);
        let (c, e) = d.graph.endpoints(j);
        for v in [a, b] {
            if v == c || v == e {
                violations.push(Violation::CrossingSharesEndpoint {
                    first: i,
                    second: j,
                    vertex: v,
                });
            }
        }
    }
    for (e, &count) in seen.iter().enumerate() {
        if count > 1 {
            violations.push(Violation::DoubleCrossed { edge: e });
        }
    }
    if let Some(rot) = &d.rotation {
        for (v, list) in rot.iter().enumerate() {
            let mut sorted = list.clone();
            sorted.sort_unstable();
            if sorted != d.graph.incident_edges(v) {
                violations.push(Violation::RotationMismatch { vertex: v });
            }
        }
    }
    violations
}

/// Full validity audit: simplicity is enforced by [`Graph`] itself, so this
/// checks crossing-pair disjointness, non-adjacency of crossing partners,
/// the degree bound delta <= 7 that every 1-planar graph satisfies, and —
/// when a rotation is supplied — that the induced associated plane graph is
/// actually planar.
pub fn validate_drawing(d: &OnePlanarDrawing) -> ValidityReport {
    let mut violations = structural_violations(d);
    if d.graph.vertex_count() > 0 && d.graph.min_degree() > 7 {
        violations.push(Violation::MinDegreeAboveSeven {
            min_degree: d.graph.min_degree(),
        });
    }
    if violations.is_empty() && d.rotation.is_some() {
        // derive the associated rotation and check Euler's identity
        match supplied_gx_rotation(d) {
            Ok((gx, rot)) => {
                let faces = trace_faces(&gx, &rot);
                if !is_sphere_embedding(&gx, &faces) {
                    violations.push(Violation::RotationNotPlanar);
                }
            }
            Err(_) => violations.push(Violation::RotationNotPlanar),
        }
    }
    ValidityReport { violations }
}

/// True/false vertex label in the associated plane graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VertexKind {
    True,
    False,
}

/// Face label: false iff the boundary touches at least one false vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FaceKind {
    True,
    False,
}

/// A face of the associated plane graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub boundary: FaceWalk,
    pub kind: FaceKind,
}

impl Face {
    pub fn degree(&self) -> usize {
        self.boundary.degree()
    }

    pub fn is_false(&self) -> bool {
        self.kind == FaceKind::False
    }
}

/// Where an edge of the associated graph came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeOrigin {
    /// An uncrossed original edge.
    Whole(usize),
    /// One half of a crossed edge; half 0 touches the endpoint written
    /// first in the edge list.
    Segment { edge: usize, half: u8 },
}

/// Whether the embedding came with the input or was computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EmbeddingMode {
    Supplied,
    Computed,
}

/// The associated plane graph: crossings replaced by false vertices, with a
/// concrete sphere embedding and traced faces.
#[derive(Debug, Clone)]
pub struct AssociatedPlaneGraph {
    graph: Graph,
    rotation: RotationSystem,
    labels: Vec<VertexKind>,
    faces: Vec<Face>,
    face_structure: FaceStructure,
    edge_origin: Vec<EdgeOrigin>,
    original_vertex_count: usize,
    crossings: Vec<(usize, usize)>,
    embedding_mode: EmbeddingMode,
}

impl AssociatedPlaneGraph {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn rotation(&self) -> &RotationSystem {
        &self.rotation
    }

    pub fn labels(&self) -> &[VertexKind] {
        &self.labels
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn edge_origin(&self) -> &[EdgeOrigin] {
        &self.edge_origin
    }

    pub fn embedding_mode(&self) -> EmbeddingMode {
        self.embedding_mode
    }

    pub fn is_false_vertex(&self, v: usize) -> bool {
        self.labels[v] == VertexKind::False
    }

    /// Number of true vertices; false vertex k has id
    /// `original_vertex_count + k`.
    pub fn original_vertex_count(&self) -> usize {
        self.original_vertex_count
    }

    /// Crossing index of a false vertex.
    pub fn crossing_of_false_vertex(&self, v: usize) -> usize {
        debug_assert!(self.is_false_vertex(v));
        v - self.original_vertex_count
    }

    /// Face indices around `v` in rotation order, one per corner.
    pub fn corner_faces(&self, v: usize) -> Vec<usize> {
        self.face_structure.corner_faces(&self.rotation, v)
    }

    /// Face index of the dart (u, v).
    pub fn face_of_dart(&self, u: usize, v: usize) -> usize {
        self.face_structure.face_of_dart(u, v)
    }

    /// Rebuilds the original graph and crossing set by contracting false
    /// vertices: the opposite rotation pairs at each false vertex are the
    /// two crossed edges. Exact inverse of [`build_associated`].
    pub fn recover_drawing(&self) -> Result<(Graph, Vec<(usize, usize)>), DrawingError> {
        let n = self.original_vertex_count;
        let original_edge_count = self
            .edge_origin
            .iter()
            .map(|o| match o {
                EdgeOrigin::Whole(e) | EdgeOrigin::Segment { edge: e, .. } => e + 1,
            })
            .max()
            .unwrap_or(0);
        let mut endpoints: Vec<(Option<usize>, Option<usize>)> =
            vec![(None, None); original_edge_count];
        for (gx_edge, origin) in self.edge_origin.iter().enumerate() {
            let (a, b) = self.graph.endpoints(gx_edge);
            match *origin {
                EdgeOrigin::Whole(e) => endpoints[e] = (Some(a), Some(b)),
                EdgeOrigin::Segment { edge, half } => {
                    let true_end = if self.is_false_vertex(a) { b } else { a };
                    if half == 0 {
                        endpoints[edge].0 = Some(true_end);
                    } else {
                        endpoints[edge].1 = Some(true_end);
                    }
                }
            }
        }
        let edges: Vec<(usize, usize)> = endpoints
            .into_iter()
            .map(|(a, b)| (a.expect("edge reconstructed"), b.expect("edge reconstructed")))
            .collect();
        let graph = Graph::new(n, edges).map_err(DrawingError::Graph)?;
        // crossings from rotation structure: opposite spokes at a false
        // vertex belong to the same original edge
        let mut crossings = Vec::new();
        for f in n..self.graph.vertex_count() {
            let spokes = self.rotation.at(f);
            if spokes.len() != 4 {
                return Err(DrawingError::ModelInconsistency(format!(
                    "false vertex {f} has degree {}",
                    spokes.len()
                )));
            }
            let edge_through = |x: usize, y: usize| -> Result<usize, DrawingError> {
                graph.edge_between(x, y).ok_or_else(|| {
                    DrawingError::ModelInconsistency(format!(
                        "opposite spokes {x},{y} at false vertex {f} are not an edge"
                    ))
                })
            };
            let e1 = edge_through(spokes[0], spokes[2])?;
            let e2 = edge_through(spokes[1], spokes[3])?;
            crossings.push((e1.min(e2), e1.max(e2)));
        }
        Ok((graph, crossings))
    }
}

/// G-multiplied graph parts shared by both embedding paths.
struct GxParts {
    graph: Graph,
    edge_origin: Vec<EdgeOrigin>,
    /// Per crossing: the four true endpoints in convention order
    /// (i.first, j.first, i.second, j.second).
    corner_targets: Vec<[usize; 4]>,
}

fn gx_parts(d: &OnePlanarDrawing) -> GxParts {
    let g = d.graph();
    let n = g.vertex_count();
    let mut crossing_of = vec![usize::MAX; g.edge_count()];
    for (k, &(i, j)) in d.crossings().iter().enumerate() {
        crossing_of[i] = k;
        crossing_of[j] = k;
    }
    let mut edges = Vec::new();
    let mut edge_origin = Vec::new();
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let k = crossing_of[e];
        if k == usize::MAX {
            edges.push((u, v));
            edge_origin.push(EdgeOrigin::Whole(e));
        } else {
            let f = n + k;
            edges.push((u, f));
            edge_origin.push(EdgeOrigin::Segment { edge: e, half: 0 });
            edges.push((f, v));
            edge_origin.push(EdgeOrigin::Segment { edge: e, half: 1 });
        }
    }
    let graph = Graph::new(n + d.crossings().len(), edges)
        .expect("associated graph of a structurally valid drawing is simple");
    let corner_targets = d
        .crossings()
        .iter()
        .map(|&(i, j)| {
            let (ui, vi) = g.endpoints(i);
            let (uj, vj) = g.endpoints(j);
            [ui, uj, vi, vj]
        })
        .collect();
    GxParts {
        graph,
        edge_origin,
        corner_targets,
    }
}

/// Associated rotation derived from a supplied edge rotation.
fn supplied_gx_rotation(
    d: &OnePlanarDrawing,
) -> Result<(Graph, RotationSystem), DrawingError> {
    let rot = d.rotation().expect("caller checked rotation presence");
    let g = d.graph();
    let n = g.vertex_count();
    let parts = gx_parts(d);
    let mut crossing_of = vec![usize::MAX; g.edge_count()];
    for (k, &(i, j)) in d.crossings().iter().enumerate() {
        crossing_of[i] = k;
        crossing_of[j] = k;
    }
    let mut order: Vec<Vec<usize>> = Vec::with_capacity(parts.graph.vertex_count());
    for v in 0..n {
        let list = rot[v]
            .iter()
            .map(|&e| {
                let k = crossing_of[e];
                if k == usize::MAX {
                    let (a, b) = g.endpoints(e);
                    if a == v {
                        b
                    } else {
                        a
                    }
                } else {
                    n + k
                }
            })
            .collect();
        order.push(list);
    }
    for targets in &parts.corner_targets {
        order.push(targets.to_vec());
    }
    let rotation = RotationSystem::new(&parts.graph, order).map_err(|err| match err {
        EmbedError::MalformedRotation { vertex, reason } => {
            DrawingError::MalformedRotation { vertex, reason }
        }
        EmbedError::NotPlanar => DrawingError::NotPlanarizable,
    })?;
    Ok((parts.graph, rotation))
}

/// Associated rotation computed from scratch. Each crossing is expanded to
/// a wheel gadget whose rim fixes the interleaving (i, j, i, j); wheels are
/// 3-connected, so any planar embedding of the gadget graph keeps the two
/// halves of a crossed edge opposite, and the projected rotation realizes
/// the drawing.
fn computed_gx_rotation(d: &OnePlanarDrawing) -> Result<(Graph, RotationSystem), DrawingError> {
    let parts = gx_parts(d);
    let gx = &parts.graph;
    let n = d.graph().vertex_count();
    let n_gx = gx.vertex_count();
    let crossings = d.crossings().len();

    let mut gadget_edges: Vec<(usize, usize)> = Vec::new();
    for (e, &(u, v)) in gx.edges().iter().enumerate() {
        let _ = e;
        if v < n || u < n {
            // keep edges between true vertices; segment edges are rebuilt
            // through the rim below
            if u < n && v < n {
                gadget_edges.push((u, v));
            }
        }
    }
    // rim vertex t of crossing k gets id n_gx + 4k + t
    for k in 0..crossings {
        let hub = n + k;
        let rim = |t: usize| n_gx + 4 * k + t;
        for t in 0..4 {
            gadget_edges.push((rim(t), rim((t + 1) % 4)));
            gadget_edges.push((hub, rim(t)));
            gadget_edges.push((rim(t), parts.corner_targets[k][t]));
        }
    }
    let gadget = Graph::new(n_gx + 4 * crossings, gadget_edges)
        .expect("gadget graph of a structurally valid drawing is simple");
    let embedding = planar_embedding(&gadget).map_err(|_| DrawingError::NotPlanarizable)?;

    // project: rim vertices stand for their hub at true vertices, and for
    // their attachment target at the hub
    let rim_owner = |r: usize| n + (r - n_gx) / 4;
    let rim_target = |r: usize| parts.corner_targets[(r - n_gx) / 4][(r - n_gx) % 4];
    let mut order: Vec<Vec<usize>> = Vec::with_capacity(n_gx);
    for v in 0..n {
        let list = embedding
            .at(v)
            .iter()
            .map(|&w| if w >= n_gx { rim_owner(w) } else { w })
            .collect();
        order.push(list);
    }
    for k in 0..crossings {
        let hub = n + k;
        let list = embedding.at(hub).iter().map(|&r| rim_target(r)).collect();
        order.push(list);
    }
    let rotation = RotationSystem::new(gx, order)
        .map_err(|_| DrawingError::NotPlanarizable)?;
    Ok((parts.graph, rotation))
}

/// Builds the associated plane graph of a valid drawing, taking the
/// embedding from the input rotation or computing one.
pub fn build_associated(d: &OnePlanarDrawing) -> Result<AssociatedPlaneGraph, DrawingError> {
    let report = validate_drawing(d);
    if !report.is_valid() {
        return Err(DrawingError::InvalidDrawing(report.violations));
    }
    let n = d.graph().vertex_count();
    let (mode, (gx, rotation)) = match d.rotation() {
        Some(_) => (EmbeddingMode::Supplied, supplied_gx_rotation(d)?),
        None => (EmbeddingMode::Computed, computed_gx_rotation(d)?),
    };
    let face_structure = trace_faces(&gx, &rotation);
    if !is_sphere_embedding(&gx, &face_structure) {
        return Err(DrawingError::NotPlanarizable);
    }
    let labels: Vec<VertexKind> = (0..gx.vertex_count())
        .map(|v| {
            if v < n {
                VertexKind::True
            } else {
                VertexKind::False
            }
        })
        .collect();
    let faces: Vec<Face> = face_structure
        .faces
        .iter()
        .map(|w| {
            let kind = if w.vertices().iter().any(|&v| v >= n) {
                FaceKind::False
            } else {
                FaceKind::True
            };
            Face {
                boundary: w.clone(),
                kind,
            }
        })
        .collect();
    let parts = gx_parts(d);
    Ok(AssociatedPlaneGraph {
        graph: gx,
        rotation,
        labels,
        faces,
        face_structure,
        edge_origin: parts.edge_origin,
        original_vertex_count: n,
        crossings: d.crossings().to_vec(),
        embedding_mode: mode,
    })
}

/// Cyclic incident-edge order of the original graph at every vertex, taken
/// from the drawing or projected out of a computed embedding.
pub fn drawing_edge_rotation(
    d: &OnePlanarDrawing,
) -> Result<(Vec<Vec<usize>>, EmbeddingMode), DrawingError> {
    if let Some(rot) = d.rotation() {
        return Ok((rot.clone(), EmbeddingMode::Supplied));
    }
    let (gx, rotation) = computed_gx_rotation(d)?;
    let g = d.graph();
    let n = g.vertex_count();
    let mut order = Vec::with_capacity(n);
    for v in 0..n {
        let list = rotation
            .at(v)
            .iter()
            .map(|&w| {
                if w < n {
                    g.edge_between(v, w).expect("true-true edge exists in G")
                } else {
                    let (i, j) = d.crossings()[w - n];
                    let (ui, vi) = g.endpoints(i);
                    if ui == v || vi == v {
                        i
                    } else {
                        j
                    }
                }
            })
            .collect();
        order.push(list);
    }
    let _ = gx;
    Ok((order, EmbeddingMode::Computed))
}

/// Per-vertex alternation audit for optimal drawings: around every vertex,
/// crossing and non-crossing edges must alternate, which forces all degrees
/// even.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlternationReport {
    /// Smallest vertex id violating alternation (or even degree), if any.
    pub first_offender: Option<usize>,
    pub embedding_mode: EmbeddingMode,
}

impl AlternationReport {
    pub fn passed(&self) -> bool {
        self.first_offender.is_none()
    }
}

pub fn alternation_check(d: &OnePlanarDrawing) -> Result<AlternationReport, DrawingError> {
    let violations = structural_violations(d);
    if !violations.is_empty() {
        return Err(DrawingError::InvalidDrawing(violations));
    }
    let n = d.graph().vertex_count();
    let required = if n >= 2 { 4 * n - 8 } else { 0 };
    if d.graph().edge_count() != required {
        return Err(DrawingError::NotOptimal {
            edges: d.graph().edge_count(),
            required,
        });
    }
    let (rot, mode) = drawing_edge_rotation(d)?;
    let mut first_offender = None;
    'vertices: for v in 0..n {
        let list = &rot[v];
        if list.len() % 2 != 0 {
            first_offender = Some(v);
            break;
        }
        for k in 0..list.len() {
            let here = d.is_crossing_edge(list[k]);
            let next = d.is_crossing_edge(list[(k + 1) % list.len()]);
            if here == next {
                first_offender = Some(v);
                break 'vertices;
            }
        }
    }
    Ok(AlternationReport {
        first_offender,
        embedding_mode: mode,
    })
}

/// Corner statistics at one vertex of the associated plane graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceProfile {
    pub vertex: usize,
    /// Incident true 3-faces, counted per corner.
    pub true3: usize,
    /// Incident false 3-faces, counted per corner.
    pub false3: usize,
    /// Longest run of consecutive false 3-face corners in rotation order.
    pub max_false_run: usize,
}

fn longest_cyclic_run(flags: &[bool]) -> usize {
    let n = flags.len();
    if n == 0 {
        return 0;
    }
    if flags.iter().all(|&b| b) {
        return n;
    }
    let mut best = 0;
    let mut run = 0;
    for k in 0..2 * n {
        if flags[k % n] {
            run += 1;
            best = best.max(run.min(n));
        } else {
            run = 0;
        }
    }
    best
}

/// Per-vertex face profiles. Also asserts the parity fact that holds in
/// every realizable drawing: no 7-vertex is incident with seven false
/// 3-faces (true and false vertices would have to alternate around an odd
/// cycle of spokes).
pub fn face_profile(a: &AssociatedPlaneGraph) -> Result<Vec<FaceProfile>, DrawingError> {
    let mut out = Vec::with_capacity(a.graph().vertex_count());
    for v in 0..a.graph().vertex_count() {
        let corners = a.corner_faces(v);
        let mut true3 = 0;
        let mut false3 = 0;
        let flags: Vec<bool> = corners
            .iter()
            .map(|&fi| {
                let f = &a.faces()[fi];
                let is_false3 = f.degree() == 3 && f.is_false();
                if f.degree() == 3 {
                    if f.is_false() {
                        false3 += 1;
                    } else {
                        true3 += 1;
                    }
                }
                is_false3
            })
            .collect();
        let max_false_run = longest_cyclic_run(&flags);
        if a.graph().degree(v) == 7 && false3 == 7 {
            return Err(DrawingError::ParityViolation { vertex: v });
        }
        out.push(FaceProfile {
            vertex: v,
            true3,
            false3,
            max_false_run,
        });
    }
    Ok(out)
}

/// One finding of the consecutive-false-3-face scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lemma22Hit {
    pub vertex: usize,
    /// Edge of the original graph with both endpoints in N(vertex).
    pub edge: usize,
}

/// For every true vertex incident with three consecutive false 3-faces,
/// exhibits the edge of G between two of its neighbors that this
/// configuration forces: of the four consecutive spokes, one of the middle
/// two is a crossing point, and the edge passing through it joins two
/// neighbors of the vertex. Failure to find that edge means the drawing
/// data is corrupted, never a valid counterexample.
pub fn lemma_2_2_scan(
    a: &AssociatedPlaneGraph,
    g: &Graph,
) -> Result<Vec<Lemma22Hit>, DrawingError> {
    let n = a.original_vertex_count();
    let mut hits = Vec::new();
    for v in 0..n {
        let deg = a.graph().degree(v);
        if deg < 3 {
            continue;
        }
        let corners = a.corner_faces(v);
        let flags: Vec<bool> = corners
            .iter()
            .map(|&fi| {
                let f = &a.faces()[fi];
                f.degree() == 3 && f.is_false()
            })
            .collect();
        if longest_cyclic_run(&flags) < 3 {
            continue;
        }
        let spokes = a.rotation().at(v);
        let window = (0..deg)
            .find(|&k| flags[k] && flags[(k + 1) % deg] && flags[(k + 2) % deg])
            .expect("run of length >= 3 exists");
        // spokes bounding the three consecutive corners
        let s = |t: usize| spokes[(window + t) % deg];
        let mid_false = if a.is_false_vertex(s(1)) {
            s(1)
        } else if a.is_false_vertex(s(2)) {
            s(2)
        } else {
            return Err(DrawingError::ModelInconsistency(format!(
                "no crossing point among the middle spokes at vertex {v}"
            )));
        };
        let k = a.crossing_of_false_vertex(mid_false);
        let (i, j) = a.crossings[k];
        let (ui, vi) = g.endpoints(i);
        let through = if ui == v || vi == v { j } else { i };
        let (x, y) = g.endpoints(through);
        if !g.has_edge(v, x) || !g.has_edge(v, y) {
            return Err(DrawingError::ModelInconsistency(format!(
                "edge {through} through the crossing at vertex {v} does not join two neighbors"
            )));
        }
        hits.push(Lemma22Hit { vertex: v, edge: through });
    }
    Ok(hits)
}
