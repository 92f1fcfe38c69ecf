//! Rotation systems, face tracing and planar embedding.
//!
//! An embedding is a cyclic order of neighbors at each vertex. Faces are
//! traced with the next-dart rule: the dart (u, v) is followed by
//! (v, successor of u in the rotation at v). A rotation system is a sphere
//! embedding iff V - E + F = 2 holds on every connected component.
//!
//! Embeddings are computed with the Demoucron–Malgrange–Pertuiset method:
//! start from a cycle, then repeatedly route a path of an unembedded
//! fragment through a face whose boundary contains all of the fragment's
//! attachment vertices. Quadratic, exact, and deterministic, which is all
//! the workbench needs at its working scale.

use std::collections::{HashMap, HashSet, VecDeque};

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EmbedError {
    #[error("malformed rotation at vertex {vertex}: {reason}")]
    MalformedRotation { vertex: usize, reason: String },
    #[error("graph admits no planar embedding")]
    NotPlanar,
}

/// Cyclic neighbor order per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotationSystem {
    order: Vec<Vec<usize>>,
}

impl RotationSystem {
    /// Validates that every list is a permutation of the vertex's neighbors.
    pub fn new(g: &Graph, order: Vec<Vec<usize>>) -> Result<RotationSystem, EmbedError> {
        if order.len() != g.vertex_count() {
            return Err(EmbedError::MalformedRotation {
                vertex: order.len(),
                reason: format!(
                    "rotation covers {} vertices, graph has {}",
                    order.len(),
                    g.vertex_count()
                ),
            });
        }
        for (v, list) in order.iter().enumerate() {
            let mut sorted = list.clone();
            sorted.sort_unstable();
            let nbrs: Vec<usize> = g.neighbors(v).collect();
            if sorted != nbrs {
                return Err(EmbedError::MalformedRotation {
                    vertex: v,
                    reason: "list is not a permutation of the neighbor set".into(),
                });
            }
        }
        Ok(RotationSystem { order })
    }

    pub fn at(&self, v: usize) -> &[usize] {
        &self.order[v]
    }

    /// Neighbor following `u` in the cyclic order at `v`.
    pub fn successor(&self, v: usize, u: usize) -> usize {
        let list = &self.order[v];
        let i = list
            .iter()
            .position(|&w| w == u)
            .expect("u is a neighbor of v");
        list[(i + 1) % list.len()]
    }
}

/// A face: closed directed walk, stored in canonical rotation (the
/// lexicographically smallest of its cyclic shifts).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct FaceWalk {
    walk: Vec<usize>,
}

impl FaceWalk {
    fn canonical(mut walk: Vec<usize>) -> FaceWalk {
        let n = walk.len();
        let mut best = 0;
        for s in 1..n {
            for k in 0..n {
                let a = walk[(s + k) % n];
                let b = walk[(best + k) % n];
                if a != b {
                    if a < b {
                        best = s;
                    }
                    break;
                }
            }
        }
        walk.rotate_left(best);
        FaceWalk { walk }
    }

    /// Directed boundary walk; consecutive entries (cyclically) are darts.
    pub fn vertices(&self) -> &[usize] {
        &self.walk
    }

    /// Face degree: length of the closed boundary walk.
    pub fn degree(&self) -> usize {
        self.walk.len()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.walk.contains(&v)
    }
}

/// Faces of an embedded graph plus the dart -> face index map.
#[derive(Debug, Clone)]
pub struct FaceStructure {
    pub faces: Vec<FaceWalk>,
    dart_face: HashMap<(usize, usize), usize>,
}

impl FaceStructure {
    /// Index of the face on which the dart (u, v) lies.
    pub fn face_of_dart(&self, u: usize, v: usize) -> usize {
        self.dart_face[&(u, v)]
    }

    /// Faces incident to `v` in rotation order, one per corner: corner k
    /// lies between the spokes rot[v][k] and rot[v][k+1] and is the face of
    /// the dart (rot[v][k], v). A face incident to `v` several times along
    /// its boundary shows up once per corner.
    pub fn corner_faces(&self, rot: &RotationSystem, v: usize) -> Vec<usize> {
        rot.at(v)
            .iter()
            .map(|&w| self.face_of_dart(w, v))
            .collect()
    }
}

/// Traces every face of the embedding; every dart ends up on exactly one
/// face. Faces are reported in canonical sorted order (by degree, then
/// boundary walk).
pub fn trace_faces(g: &Graph, rot: &RotationSystem) -> FaceStructure {
    let mut pending: HashSet<(usize, usize)> = HashSet::new();
    for &(u, v) in g.edges() {
        pending.insert((u, v));
        pending.insert((v, u));
    }
    let mut raw: Vec<Vec<usize>> = Vec::new();
    // deterministic start order: darts sorted
    let mut darts: Vec<(usize, usize)> = pending.iter().copied().collect();
    darts.sort_unstable();
    for &start in &darts {
        if !pending.contains(&start) {
            continue;
        }
        let mut walk = Vec::new();
        let mut dart = start;
        loop {
            pending.remove(&dart);
            walk.push(dart.0);
            let next = (dart.1, rot.successor(dart.1, dart.0));
            if next == start {
                break;
            }
            dart = next;
        }
        raw.push(walk);
    }
    let mut faces: Vec<FaceWalk> = raw.into_iter().map(FaceWalk::canonical).collect();
    faces.sort_by(|a, b| (a.degree(), &a.walk).cmp(&(b.degree(), &b.walk)));
    let mut dart_face = HashMap::new();
    for (idx, f) in faces.iter().enumerate() {
        let w = &f.walk;
        for k in 0..w.len() {
            dart_face.insert((w[k], w[(k + 1) % w.len()]), idx);
        }
    }
    FaceStructure { faces, dart_face }
}

/// Checks V - E + F = 2 on every connected component (isolated vertices
/// count as a component with one face).
pub fn is_sphere_embedding(g: &Graph, faces: &FaceStructure) -> bool {
    let n = g.vertex_count();
    let mut comp = vec![usize::MAX; n];
    let mut comps = 0;
    for start in 0..n {
        if comp[start] != usize::MAX {
            continue;
        }
        let id = comps;
        comps += 1;
        comp[start] = id;
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for w in g.neighbors(v) {
                if comp[w] == usize::MAX {
                    comp[w] = id;
                    stack.push(w);
                }
            }
        }
    }
    let mut v_cnt = vec![0isize; comps];
    let mut e_cnt = vec![0isize; comps];
    let mut f_cnt = vec![0isize; comps];
    for v in 0..n {
        v_cnt[comp[v]] += 1;
        if g.degree(v) == 0 {
            f_cnt[comp[v]] += 1; // isolated vertex: one face
        }
    }
    for &(u, _) in g.edges() {
        e_cnt[comp[u]] += 1;
    }
    for f in &faces.faces {
        f_cnt[comp[f.walk[0]]] += 1;
    }
    (0..comps).all(|c| v_cnt[c] - e_cnt[c] + f_cnt[c] == 2)
}

/// Computes a planar rotation system for `g`, or reports that none exists.
///
/// Embeds each biconnected block with the Demoucron method and concatenates
/// block rotations at cut vertices. Deterministic throughout, so on a
/// 3-connected graph the result is the unique embedding up to reflection.
pub fn planar_embedding(g: &Graph) -> Result<RotationSystem, EmbedError> {
    let n = g.vertex_count();
    let mut rotation: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut blocks = biconnected_components(g);
    blocks.sort_by_key(|edges| edges.iter().copied().min());
    for edge_ids in blocks {
        if edge_ids.len() == 1 {
            let (u, v) = g.endpoints(edge_ids[0]);
            rotation[u].push(v);
            rotation[v].push(u);
            continue;
        }
        let block_rot = dmp_embed_block(g, &edge_ids)?;
        let mut keys: Vec<usize> = block_rot.keys().copied().collect();
        keys.sort_unstable();
        for v in keys {
            rotation[v].extend(&block_rot[&v]);
        }
    }
    RotationSystem::new(g, rotation)
}

/// Biconnected components as lists of edge ids (Tarjan, edge stack).
fn biconnected_components(g: &Graph) -> Vec<Vec<usize>> {
    struct State<'a> {
        g: &'a Graph,
        disc: Vec<usize>,
        low: Vec<usize>,
        time: usize,
        stack: Vec<usize>,
        out: Vec<Vec<usize>>,
    }
    const UNSET: usize = usize::MAX;
    fn dfs(st: &mut State, u: usize, parent_edge: usize) {
        st.disc[u] = st.time;
        st.low[u] = st.time;
        st.time += 1;
        for &(v, eid) in st.g.incidences(u) {
            if eid == parent_edge {
                continue;
            }
            if st.disc[v] == UNSET {
                st.stack.push(eid);
                dfs(st, v, eid);
                st.low[u] = st.low[u].min(st.low[v]);
                if st.low[v] >= st.disc[u] {
                    let mut comp = Vec::new();
                    while let Some(e) = st.stack.pop() {
                        comp.push(e);
                        if e == eid {
                            break;
                        }
                    }
                    st.out.push(comp);
                }
            } else if st.disc[v] < st.disc[u] {
                st.stack.push(eid);
                st.low[u] = st.low[u].min(st.disc[v]);
            }
        }
    }
    let mut st = State {
        g,
        disc: vec![UNSET; g.vertex_count()],
        low: vec![0; g.vertex_count()],
        time: 0,
        stack: Vec::new(),
        out: Vec::new(),
    };
    for v in 0..g.vertex_count() {
        if st.disc[v] == UNSET {
            dfs(&mut st, v, usize::MAX);
        }
    }
    for comp in &mut st.out {
        comp.sort_unstable();
    }
    st.out
}

/// Demoucron embedding of one 2-connected block; returns the rotation at
/// each block vertex.
fn dmp_embed_block(g: &Graph, edge_ids: &[usize]) -> Result<HashMap<usize, Vec<usize>>, EmbedError> {
    let mut adj: HashMap<usize, Vec<usize>> = HashMap::new();
    for &e in edge_ids {
        let (u, v) = g.endpoints(e);
        adj.entry(u).or_default().push(v);
        adj.entry(v).or_default().push(u);
    }
    for list in adj.values_mut() {
        list.sort_unstable();
    }
    let mut vertices: Vec<usize> = adj.keys().copied().collect();
    vertices.sort_unstable();

    let norm = |u: usize, v: usize| (u.min(v), u.max(v));
    let mut embedded_edges: HashSet<(usize, usize)> = HashSet::new();
    let mut in_h: HashSet<usize> = HashSet::new();
    // faces as directed simple cycles; H stays 2-connected so boundaries
    // remain simple
    let mut faces: Vec<Vec<usize>> = Vec::new();

    let cycle = find_cycle(&adj, vertices[0]);
    for w in cycle.windows(2) {
        embedded_edges.insert(norm(w[0], w[1]));
    }
    embedded_edges.insert(norm(cycle[0], *cycle.last().unwrap()));
    in_h.extend(cycle.iter().copied());
    let mut rev = cycle.clone();
    rev.reverse();
    faces.push(cycle);
    faces.push(rev);

    let total_edges = edge_ids.len();
    while embedded_edges.len() < total_edges {
        let fragments = compute_fragments(&adj, &embedded_edges, &in_h, norm);
        debug_assert!(!fragments.is_empty());
        // admissible faces per fragment
        let mut chosen: Option<(usize, usize)> = None; // (fragment idx, face idx)
        let mut fallback: Option<(usize, usize)> = None;
        for (fi, frag) in fragments.iter().enumerate() {
            let admissible: Vec<usize> = faces
                .iter()
                .enumerate()
                .filter(|(_, f)| frag.attachments.iter().all(|a| f.contains(a)))
                .map(|(i, _)| i)
                .collect();
            if admissible.is_empty() {
                return Err(EmbedError::NotPlanar);
            }
            if admissible.len() == 1 {
                chosen = Some((fi, admissible[0]));
                break;
            }
            if fallback.is_none() {
                fallback = Some((fi, admissible[0]));
            }
        }
        let (fi, face_idx) = chosen.or(fallback).expect("some fragment exists");
        let path = alpha_path(&adj, &fragments[fi], &in_h);
        // split the face along the path
        let face = faces.swap_remove(face_idx);
        let i = face.iter().position(|&v| v == path[0]).expect("attachment on face");
        let j = face
            .iter()
            .position(|&v| v == *path.last().unwrap())
            .expect("attachment on face");
        let len = face.len();
        let mut side1 = Vec::new(); // a .. b along the face direction
        let mut k = i;
        loop {
            side1.push(face[k]);
            if k == j {
                break;
            }
            k = (k + 1) % len;
        }
        let mut side2 = Vec::new(); // b .. a along the face direction
        let mut k = j;
        loop {
            side2.push(face[k]);
            if k == i {
                break;
            }
            k = (k + 1) % len;
        }
        let interior = &path[1..path.len() - 1];
        let mut face1 = side1;
        face1.extend(interior.iter().rev());
        let mut face2 = side2;
        face2.extend(interior.iter());
        faces.push(face1);
        faces.push(face2);
        for w in path.windows(2) {
            embedded_edges.insert(norm(w[0], w[1]));
        }
        in_h.extend(path.iter().copied());
    }

    // rotation from faces: in a face ... u, v, w ... the successor of u at v
    // is w, matching the next-dart tracing rule
    let mut succ: HashMap<(usize, usize), usize> = HashMap::new();
    for f in &faces {
        let len = f.len();
        for k in 0..len {
            let u = f[k];
            let v = f[(k + 1) % len];
            let w = f[(k + 2) % len];
            succ.insert((u, v), w);
        }
    }
    let mut rotation = HashMap::new();
    for &v in &vertices {
        let nbrs = &adj[&v];
        let first = nbrs[0];
        let mut order = vec![first];
        let mut cur = succ[&(first, v)];
        while cur != first {
            order.push(cur);
            cur = succ[&(cur, v)];
        }
        if order.len() != nbrs.len() {
            return Err(EmbedError::NotPlanar);
        }
        rotation.insert(v, order);
    }
    Ok(rotation)
}

/// Some cycle through `start`'s component, as a vertex list.
fn find_cycle(adj: &HashMap<usize, Vec<usize>>, start: usize) -> Vec<usize> {
    let mut path = vec![start];
    let mut on_path: HashMap<usize, usize> = HashMap::new();
    on_path.insert(start, 0);
    loop {
        let v = *path.last().unwrap();
        let prev = if path.len() >= 2 {
            path[path.len() - 2]
        } else {
            usize::MAX
        };
        // walk to the smallest neighbor that is not where we came from
        let mut next = usize::MAX;
        for &w in &adj[&v] {
            if w != prev {
                next = w;
                break;
            }
        }
        debug_assert!(next != usize::MAX, "2-connected block has min degree 2");
        if let Some(&pos) = on_path.get(&next) {
            return path[pos..].to_vec();
        }
        on_path.insert(next, path.len());
        path.push(next);
    }
}

struct Fragment {
    /// H-vertices where the fragment attaches; sorted.
    attachments: Vec<usize>,
    /// Interior vertices (not in H); empty for a chord fragment.
    interior: Vec<usize>,
    /// A chord (u, v) when the fragment is a single unembedded edge.
    chord: Option<(usize, usize)>,
}

fn compute_fragments(
    adj: &HashMap<usize, Vec<usize>>,
    embedded_edges: &HashSet<(usize, usize)>,
    in_h: &HashSet<usize>,
    norm: impl Fn(usize, usize) -> (usize, usize),
) -> Vec<Fragment> {
    let mut fragments = Vec::new();
    // chords: unembedded edges with both ends in H
    let mut chord_list: Vec<(usize, usize)> = Vec::new();
    for (&u, nbrs) in adj.iter() {
        for &v in nbrs {
            if u < v && in_h.contains(&u) && in_h.contains(&v) && !embedded_edges.contains(&norm(u, v))
            {
                chord_list.push((u, v));
            }
        }
    }
    chord_list.sort_unstable();
    for (u, v) in chord_list {
        fragments.push(Fragment {
            attachments: vec![u, v],
            interior: Vec::new(),
            chord: Some((u, v)),
        });
    }
    // components of (block minus H) with their attachments
    let mut seen: HashSet<usize> = HashSet::new();
    let mut outside: Vec<usize> = adj.keys().filter(|v| !in_h.contains(v)).copied().collect();
    outside.sort_unstable();
    for &start in &outside {
        if seen.contains(&start) {
            continue;
        }
        let mut comp = vec![start];
        let mut attach = HashSet::new();
        let mut stack = vec![start];
        seen.insert(start);
        while let Some(v) = stack.pop() {
            for &w in &adj[&v] {
                if in_h.contains(&w) {
                    attach.insert(w);
                } else if !seen.contains(&w) {
                    seen.insert(w);
                    comp.push(w);
                    stack.push(w);
                }
            }
        }
        comp.sort_unstable();
        let mut attachments: Vec<usize> = attach.into_iter().collect();
        attachments.sort_unstable();
        fragments.push(Fragment {
            attachments,
            interior: comp,
            chord: None,
        });
    }
    // deterministic processing order
    fragments.sort_by(|a, b| {
        (&a.attachments, &a.interior, a.chord).cmp(&(&b.attachments, &b.interior, b.chord))
    });
    fragments
}

/// A path through the fragment between two distinct attachment vertices.
fn alpha_path(
    adj: &HashMap<usize, Vec<usize>>,
    frag: &Fragment,
    in_h: &HashSet<usize>,
) -> Vec<usize> {
    if let Some((u, v)) = frag.chord {
        return vec![u, v];
    }
    // BFS from the smallest attachment through interior vertices to any
    // other attachment
    let source = frag.attachments[0];
    let interior: HashSet<usize> = frag.interior.iter().copied().collect();
    let mut parent: HashMap<usize, usize> = HashMap::new();
    let mut queue = VecDeque::new();
    for &w in &adj[&source] {
        if interior.contains(&w) && !parent.contains_key(&w) {
            parent.insert(w, source);
            queue.push_back(w);
        }
    }
    while let Some(v) = queue.pop_front() {
        for &w in &adj[&v] {
            if w != source && in_h.contains(&w) {
                // reached another attachment
                let mut path = vec![w, v];
                let mut cur = v;
                while cur != source {
                    cur = parent[&cur];
                    path.push(cur);
                }
                path.reverse();
                return path;
            }
            if interior.contains(&w) && !parent.contains_key(&w) {
                parent.insert(w, v);
                queue.push_back(w);
            }
        }
    }
    unreachable!("fragment of a 2-connected block has at least two attachments");
}

#[cfg(test)]
mod tests {
    use super::*;

    fn embed_and_trace(g: &Graph) -> (RotationSystem, FaceStructure) {
        let rot = planar_embedding(g).expect("planar");
        let faces = trace_faces(g, &rot);
        assert!(is_sphere_embedding(g, &faces), "euler check");
        (rot, faces)
    }

    #[test]
    fn embeds_k4_with_four_triangles() {
        let (_, faces) = embed_and_trace(&Graph::complete(4));
        assert_eq!(faces.faces.len(), 4);
        assert!(faces.faces.iter().all(|f| f.degree() == 3));
    }

    #[test]
    fn embeds_cube_with_six_quadrilaterals() {
        let mut edges = vec![(0, 1), (1, 2), (2, 3), (3, 0)];
        edges.extend([(4, 5), (5, 6), (6, 7), (7, 4)]);
        edges.extend([(0, 4), (1, 5), (2, 6), (3, 7)]);
        let g = Graph::new(8, edges).unwrap();
        let (_, faces) = embed_and_trace(&g);
        assert_eq!(faces.faces.len(), 6);
        assert!(faces.faces.iter().all(|f| f.degree() == 4));
    }

    #[test]
    fn rejects_nonplanar_graphs() {
        assert_eq!(planar_embedding(&Graph::complete(5)), Err(EmbedError::NotPlanar));
        let k33 = Graph::complete_multipartite(&[3, 3]);
        assert_eq!(planar_embedding(&k33), Err(EmbedError::NotPlanar));
        // Petersen graph
        let mut edges: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        edges.extend((0..5).map(|i| (i, i + 5)));
        edges.extend((0..5).map(|i| (5 + i, 5 + (i + 2) % 5)));
        let petersen = Graph::new(10, edges).unwrap();
        assert_eq!(planar_embedding(&petersen), Err(EmbedError::NotPlanar));
    }

    #[test]
    fn embeds_trees_and_cut_vertices() {
        let (_, faces) = embed_and_trace(&Graph::path(5));
        assert_eq!(faces.faces.len(), 1);
        // two triangles sharing one vertex
        let g = Graph::new(5, vec![(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap();
        let (_, faces) = embed_and_trace(&g);
        assert_eq!(faces.faces.len(), 3);
    }

    #[test]
    fn embeds_disconnected_graphs() {
        let g = Graph::new(7, vec![(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        let (rot, faces) = embed_and_trace(&g);
        assert_eq!(rot.at(6), &[] as &[usize]);
        // two triangle components: 2 faces each, plus the isolated vertex
        assert_eq!(faces.faces.len(), 4);
    }

    #[test]
    fn embeds_maximal_planar_graph() {
        // octahedron: 4-regular maximal planar, 8 triangular faces
        let g = Graph::complete_multipartite(&[2, 2, 2]);
        let (_, faces) = embed_and_trace(&g);
        assert_eq!(faces.faces.len(), 8);
        assert!(faces.faces.iter().all(|f| f.degree() == 3));
    }

    #[test]
    fn sum_of_face_degrees_is_twice_edges() {
        for g in [Graph::complete(4), Graph::wheel(6), Graph::path(6)] {
            let (_, faces) = embed_and_trace(&g);
            let total: usize = faces.faces.iter().map(|f| f.degree()).sum();
            assert_eq!(total, 2 * g.edge_count());
        }
    }

    #[test]
    fn rotation_validation_rejects_bad_lists() {
        let g = Graph::cycle(3);
        let bad = RotationSystem::new(&g, vec![vec![1], vec![0, 2], vec![0, 1]]);
        assert!(matches!(bad, Err(EmbedError::MalformedRotation { vertex: 0, .. })));
    }
}
