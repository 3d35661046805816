//! Structural analysis of extremal drawings: quadrangulation and
//! biconnectivity of G', the face-adjacency graph F over right edges, the
//! simple-edge graph P, the strips-and-rings decomposition with boundaries
//! and corners, the parts chain L, and the forbidden double-crossing
//! pattern scanner.

use crate::drawing::{Drawing, EdgeClass, EdgeClassification, GpEdgeClass, Gprime};
use crate::embed::{twin, Dart, Embedding};
use crate::graph::{EdgeId, Vertex};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum StructureError {
    /// The input does not have the structure of an extremal regular drawing;
    /// the failures say which invariant broke.
    #[error("not an extremal structure: {0:?}")]
    NotExtremalStructure(Vec<String>),
}

// ---------------------------------------------------------------------------
// Quadrangulation

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct QuadrangulationReport {
    pub is_quadrangulation: bool,
    pub is_biconnected: bool,
    pub face_count: usize,
    /// Faces as vertex cycles (tails of the face darts).
    pub faces: Vec<Vec<Vertex>>,
    pub failures: Vec<String>,
}

/// Check that every face of a plane embedding is a simple 4-cycle and that
/// the graph is biconnected.
pub fn check_quadrangulation_embedding(emb: &Embedding) -> QuadrangulationReport {
    let mut failures = Vec::new();
    let faces_darts = match emb.trace_faces() {
        Ok(f) => f,
        Err(e) => {
            return QuadrangulationReport {
                is_quadrangulation: false,
                is_biconnected: false,
                face_count: 0,
                faces: vec![],
                failures: vec![e.to_string()],
            }
        }
    };
    let faces: Vec<Vec<Vertex>> = faces_darts
        .iter()
        .map(|f| f.iter().map(|&d| emb.dart_tail(d)).collect())
        .collect();
    let mut is_quad = true;
    for (i, f) in faces.iter().enumerate() {
        if f.len() != 4 {
            is_quad = false;
            failures.push(format!("face {i} has length {}", f.len()));
        } else if f.iter().collect::<std::collections::BTreeSet<_>>().len() != 4 {
            is_quad = false;
            failures.push(format!("face {i} is not a simple cycle: {f:?}"));
        }
    }
    let is_biconnected = biconnected(emb);
    if !is_biconnected {
        failures.push("graph is not biconnected".into());
    }
    QuadrangulationReport {
        is_quadrangulation: is_quad,
        is_biconnected,
        face_count: faces.len(),
        faces,
        failures,
    }
}

/// Quadrangulation check for a G' extracted from a drawing.
pub fn check_quadrangulation(gp: &Gprime) -> QuadrangulationReport {
    check_quadrangulation_embedding(gp.drawing.embedding())
}

fn biconnected(emb: &Embedding) -> bool {
    let n = emb.n;
    if n < 3 {
        return false;
    }
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in &emb.edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    // DFS from 0; articulation test; graph must also be connected.
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut parent = vec![usize::MAX; n];
    let mut timer = 0;
    let mut stack = vec![(0usize, 0usize)];
    let mut order = Vec::new();
    disc[0] = timer;
    low[0] = timer;
    timer += 1;
    while let Some(&mut (v, ref mut cursor)) = stack.last_mut() {
        if *cursor < adj[v].len() {
            let w = adj[v][*cursor];
            *cursor += 1;
            if disc[w] == usize::MAX {
                parent[w] = v;
                disc[w] = timer;
                low[w] = timer;
                timer += 1;
                stack.push((w, 0));
            } else if w != parent[v] {
                low[v] = low[v].min(disc[w]);
            }
        } else {
            stack.pop();
            order.push(v);
            if let Some(&(p, _)) = stack.last() {
                low[p] = low[p].min(low[v]);
            }
        }
    }
    if disc.contains(&usize::MAX) {
        return false; // disconnected
    }
    let root_children = (1..n).filter(|&w| parent[w] == 0).count();
    if root_children > 1 {
        return false;
    }
    #[allow(clippy::needless_range_loop)]
    for v in 1..n {
        if (1..n).any(|w| parent[w] == v && low[w] >= disc[v]) {
            return false;
        }
    }
    true
}

// ---------------------------------------------------------------------------
// Right edges on faces

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct FaceRightReport {
    pub face: usize,
    pub right_count: usize,
    /// When two right edges lie on the boundary: whether they are opposite.
    pub opposite: Option<bool>,
    pub violation: bool,
}

/// Per face of G': how many right edges lie on its boundary (at most two is
/// legal, and two only when opposite).
pub fn right_edge_positions(gp: &Gprime) -> Vec<FaceRightReport> {
    let emb = gp.drawing.embedding();
    let faces = gp.drawing.faces();
    let mut out = Vec::new();
    for (fi, face) in faces.iter().enumerate() {
        let right_pos: Vec<usize> = face
            .iter()
            .enumerate()
            .filter(|(_, &d)| gp.classes[emb.dart_edge(d)] == GpEdgeClass::Right)
            .map(|(i, _)| i)
            .collect();
        let (opposite, violation) = match right_pos.len() {
            0 | 1 => (None, false),
            2 if face.len() == 4 => {
                let opp = (right_pos[1] - right_pos[0]) == 2;
                (Some(opp), !opp)
            }
            _ => (Some(false), true),
        };
        out.push(FaceRightReport {
            face: fi,
            right_count: right_pos.len(),
            opposite,
            violation,
        });
    }
    out
}

// ---------------------------------------------------------------------------
// Strips and rings

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PartKind {
    Strip,
    Ring,
}

/// One boundary of a part: a closed walk of halves of simple edges.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Boundary {
    /// The traversed darts (each is one half of a simple edge).
    pub halves: Vec<Dart>,
    /// Vertex cycle (tails of the halves).
    pub vertices: Vec<Vertex>,
    /// Underlying simple edges, as a sorted set.
    pub edge_cycle: Vec<EdgeId>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Part {
    pub kind: PartKind,
    /// Face ids (indices into the G' face list), ordered along the part.
    pub faces: Vec<usize>,
    pub boundaries: Vec<Boundary>,
    /// The four corner vertices (strips only).
    pub corners: Vec<Vertex>,
}

/// Edge list of a small auxiliary graph.
#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
pub struct AuxGraph {
    pub nodes: usize,
    pub edges: Vec<(usize, usize)>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct PartsDecomposition {
    pub parts: Vec<Part>,
    /// F: nodes are G' faces, edges join faces sharing a right edge.
    pub f_graph: AuxGraph,
    /// P: nodes are the vertices of G, edges are the simple edges (ids refer
    /// to G' edge ids).
    pub p_graph: AuxGraph,
    /// L: nodes are parts, edges join parts with congruent boundaries.
    pub l_graph: AuxGraph,
    /// Faces per strip (equal for both strips).
    pub strip_face_count: usize,
    /// Common boundary length.
    pub boundary_length: usize,
}

/// Decompose a quadrangulated biconnected G' into strips and rings by
/// cutting along all simple edges. Any failed invariant rejects the input as
/// not coming from an extremal regular drawing.
pub fn decompose(gp: &Gprime) -> Result<PartsDecomposition, StructureError> {
    let mut failures = Vec::new();
    let quad = check_quadrangulation(gp);
    if !quad.is_quadrangulation {
        failures.push("G' is not a quadrangulation".into());
    }
    if !quad.is_biconnected {
        failures.push("G' is not biconnected".into());
    }
    if !failures.is_empty() {
        return Err(StructureError::NotExtremalStructure(failures));
    }
    let emb = gp.drawing.embedding();
    let faces = gp.drawing.faces();
    let g = gp.drawing.graph();
    let is_right = |d: Dart| gp.classes[emb.dart_edge(d)] == GpEdgeClass::Right;

    // F: faces adjacent via right edges.
    let mut face_of_dart = vec![usize::MAX; 2 * emb.edges.len()];
    for (fi, face) in faces.iter().enumerate() {
        for &d in face {
            face_of_dart[d] = fi;
        }
    }
    let mut f_edges: Vec<(usize, usize)> = Vec::new();
    for (eid, class) in gp.classes.iter().enumerate() {
        if *class == GpEdgeClass::Right {
            let fa = face_of_dart[2 * eid];
            let fb = face_of_dart[2 * eid + 1];
            if fa == fb {
                failures.push(format!("right edge {eid} borders one face twice"));
            }
            f_edges.push((fa.min(fb), fa.max(fb)));
        }
    }
    f_edges.sort_unstable();
    if f_edges.windows(2).any(|w| w[0] == w[1]) {
        failures.push("two faces share more than one right edge".into());
        return Err(StructureError::NotExtremalStructure(failures));
    }
    let f_graph = AuxGraph {
        nodes: faces.len(),
        edges: f_edges.clone(),
    };
    let mut f_deg = vec![0usize; faces.len()];
    let mut f_adj = vec![Vec::new(); faces.len()];
    for &(a, b) in &f_edges {
        f_deg[a] += 1;
        f_deg[b] += 1;
        f_adj[a].push(b);
        f_adj[b].push(a);
    }
    if let Some(f) = f_deg.iter().position(|&d| d > 2) {
        failures.push(format!(
            "face {f} has {} right edges on its boundary",
            f_deg[f]
        ));
        return Err(StructureError::NotExtremalStructure(failures));
    }

    // Components of F: paths become strips, cycles rings. Order parts by
    // smallest contained face id.
    let mut comp = vec![usize::MAX; faces.len()];
    let mut part_faces: Vec<Vec<usize>> = Vec::new();
    for start in 0..faces.len() {
        if comp[start] != usize::MAX {
            continue;
        }
        let id = part_faces.len();
        // Walk the path/cycle in order, starting from an endpoint if any.
        let mut members = vec![start];
        comp[start] = id;
        let mut frontier = vec![start];
        while let Some(v) = frontier.pop() {
            for &w in &f_adj[v] {
                if comp[w] == usize::MAX {
                    comp[w] = id;
                    members.push(w);
                    frontier.push(w);
                }
            }
        }
        let degree_one: Vec<usize> = members.iter().copied().filter(|&m| f_deg[m] <= 1).collect();
        let ordered = if degree_one.is_empty() {
            order_along(&f_adj, *members.iter().min().unwrap(), members.len())
        } else {
            order_along(&f_adj, *degree_one.iter().min().unwrap(), members.len())
        };
        part_faces.push(ordered);
    }
    part_faces.sort_by_key(|faces| *faces.iter().min().unwrap());

    // Boundaries: walk boundary darts (halves of simple edges), continuing
    // through right edges into the adjacent face of the same part.
    let face_next: Vec<Dart> = {
        let mut nxt = vec![0usize; 2 * emb.edges.len()];
        for face in faces {
            for (i, &d) in face.iter().enumerate() {
                nxt[d] = face[(i + 1) % face.len()];
            }
        }
        nxt
    };
    let mut half_seen = vec![false; 2 * emb.edges.len()];
    let mut parts = Vec::new();
    for ordered in &part_faces {
        let kind = if is_cycle(&f_deg, ordered) {
            PartKind::Ring
        } else {
            PartKind::Strip
        };
        let mut boundaries = Vec::new();
        for &fi in ordered {
            for &d0 in &faces[fi] {
                if is_right(d0) || half_seen[d0] {
                    continue;
                }
                // New boundary walk starting at d0.
                let mut halves = Vec::new();
                let mut d = d0;
                loop {
                    half_seen[d] = true;
                    halves.push(d);
                    let mut nxt = face_next[d];
                    while is_right(nxt) {
                        nxt = face_next[twin(nxt)];
                    }
                    d = nxt;
                    if d == d0 {
                        break;
                    }
                }
                let vertices: Vec<Vertex> = halves.iter().map(|&h| emb.dart_tail(h)).collect();
                let mut edge_cycle: Vec<EdgeId> =
                    halves.iter().map(|&h| emb.dart_edge(h)).collect();
                edge_cycle.sort_unstable();
                if edge_cycle.windows(2).any(|w| w[0] == w[1]) {
                    failures.push(format!(
                        "a boundary of the part with faces {ordered:?} contains both halves of one simple edge"
                    ));
                }
                boundaries.push(Boundary {
                    halves,
                    vertices,
                    edge_cycle,
                });
            }
        }
        boundaries.sort_by_key(|b| *b.halves.iter().min().unwrap());
        // Corners: vertices of a face whose both incident face edges are
        // simple (possible only on extreme faces of strips).
        let mut corners = Vec::new();
        if kind == PartKind::Strip {
            for &fi in ordered {
                let face = &faces[fi];
                for (i, &d) in face.iter().enumerate() {
                    let prev = face[(i + face.len() - 1) % face.len()];
                    if !is_right(d) && !is_right(prev) {
                        corners.push(emb.dart_tail(d));
                    }
                }
            }
            corners.sort_unstable();
            if corners.len() != 4 {
                failures.push(format!(
                    "strip with faces {ordered:?} has {} corners, want 4",
                    corners.len()
                ));
            }
        }
        let expected_boundaries = if kind == PartKind::Strip { 1 } else { 2 };
        if boundaries.len() != expected_boundaries {
            failures.push(format!(
                "part with faces {ordered:?} has {} boundaries, want {expected_boundaries}",
                boundaries.len()
            ));
        }
        let face_count = ordered.len();
        for b in &boundaries {
            let want = if kind == PartKind::Strip {
                2 * face_count + 2
            } else {
                face_count
            };
            if b.halves.len() != want {
                failures.push(format!(
                    "boundary length {} on a {kind:?} with {face_count} faces, want {want}",
                    b.halves.len()
                ));
            }
        }
        parts.push(Part {
            kind,
            faces: ordered.clone(),
            boundaries,
            corners,
        });
    }

    // P: simple edges on V(G); every component must be a simple cycle.
    let simple_edges: Vec<EdgeId> = (0..gp.classes.len())
        .filter(|&e| gp.classes[e] == GpEdgeClass::Simple)
        .collect();
    let p_graph = AuxGraph {
        nodes: g.n(),
        edges: simple_edges.iter().map(|&e| g.edge(e)).collect(),
    };
    {
        let mut deg = vec![0usize; g.n()];
        for &(a, b) in &p_graph.edges {
            deg[a] += 1;
            deg[b] += 1;
        }
        if let Some(v) = deg.iter().position(|&d| d != 2) {
            failures.push(format!(
                "vertex {v} lies on {} simple edges, so P is not a disjoint union of cycles",
                deg[v]
            ));
        }
    }

    // Congruent boundaries: equal simple-edge cycles, paired up. The pairs
    // define L.
    let mut by_cycle: std::collections::BTreeMap<Vec<EdgeId>, Vec<usize>> = Default::default();
    for (pi, part) in parts.iter().enumerate() {
        for b in &part.boundaries {
            by_cycle.entry(b.edge_cycle.clone()).or_default().push(pi);
        }
    }
    let mut l_edges = Vec::new();
    for (cycle, owners) in &by_cycle {
        if owners.len() != 2 {
            failures.push(format!(
                "boundary cycle {cycle:?} occurs in {} boundaries, want a congruent pair",
                owners.len()
            ));
            continue;
        }
        if owners[0] == owners[1] {
            failures.push(format!(
                "both congruent boundaries of {cycle:?} lie on one part"
            ));
            continue;
        }
        l_edges.push((owners[0].min(owners[1]), owners[0].max(owners[1])));
    }
    l_edges.sort_unstable();
    l_edges.dedup();
    let l_graph = AuxGraph {
        nodes: parts.len(),
        edges: l_edges.clone(),
    };

    // L must be a path whose two endpoints are the two strips.
    let strips: Vec<usize> = (0..parts.len())
        .filter(|&i| parts[i].kind == PartKind::Strip)
        .collect();
    if strips.len() != 2 {
        failures.push(format!(
            "{} strips among the parts, want exactly 2",
            strips.len()
        ));
    }
    {
        let mut deg = vec![0usize; parts.len()];
        for &(a, b) in &l_edges {
            deg[a] += 1;
            deg[b] += 1;
        }
        let path_ok = l_edges.len() + 1 == parts.len()
            && deg.iter().filter(|&&d| d == 1).count() == 2
            && deg.iter().all(|&d| (1..=2).contains(&d))
            && connected(parts.len(), &l_edges);
        if !path_ok {
            failures.push("parts chain L is not a path".into());
        } else if strips.len() == 2 && !(deg[strips[0]] == 1 && deg[strips[1]] == 1) {
            failures.push("the strips are not the two leaves of L".into());
        }
    }

    // All boundaries have the same length; vertex count identity.
    let boundary_length = parts
        .first()
        .and_then(|p| p.boundaries.first())
        .map_or(0, |b| b.halves.len());
    for part in &parts {
        for b in &part.boundaries {
            if b.halves.len() != boundary_length {
                failures.push(format!(
                    "boundary lengths differ: {} vs {boundary_length}",
                    b.halves.len()
                ));
            }
        }
    }
    let strip_face_count = strips.first().map(|&s| parts[s].faces.len()).unwrap_or(0);
    if strips.len() == 2 && parts[strips[0]].faces.len() != parts[strips[1]].faces.len() {
        failures.push("the two strips have different face counts".into());
    }
    if boundary_length * l_edges.len() != g.n() {
        failures.push(format!(
            "vertex count identity fails: boundary length {boundary_length} times e(L) {} is not v = {}",
            l_edges.len(),
            g.n()
        ));
    }

    if !failures.is_empty() {
        return Err(StructureError::NotExtremalStructure(failures));
    }
    Ok(PartsDecomposition {
        parts,
        f_graph,
        p_graph,
        l_graph,
        strip_face_count,
        boundary_length,
    })
}

fn is_cycle(f_deg: &[usize], members: &[usize]) -> bool {
    members.iter().all(|&m| f_deg[m] == 2)
}

fn connected(n: usize, edges: &[(usize, usize)]) -> bool {
    if n == 0 {
        return true;
    }
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    let mut count = 1;
    while let Some(v) = stack.pop() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    count == n
}

/// Order the members of a path/cycle component of F starting from `start`.
fn order_along(f_adj: &[Vec<usize>], start: usize, len: usize) -> Vec<usize> {
    let mut ordered = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while ordered.len() < len {
        let next = f_adj[cur]
            .iter()
            .copied()
            .find(|&w| w != prev)
            .expect("path/cycle component continues");
        ordered.push(next);
        prev = cur;
        cur = next;
    }
    ordered
}

// ---------------------------------------------------------------------------
// Corner census

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CornerCensus {
    /// Per vertex: number of (strip, corner) incidences.
    pub counts: Vec<usize>,
    /// Per vertex: the predicted count `4 - deg_{G'}(x)`.
    pub expected: Vec<usize>,
    pub deviations: Vec<Vertex>,
}

/// Count for every vertex how often it is a corner of a strip and compare
/// with `4 - deg_{G'}(x)`.
pub fn corner_census(decomp: &PartsDecomposition, gp: &Gprime) -> CornerCensus {
    let g = gp.drawing.graph();
    let mut counts = vec![0usize; g.n()];
    for part in &decomp.parts {
        if part.kind == PartKind::Strip {
            for &c in &part.corners {
                counts[c] += 1;
            }
        }
    }
    let expected: Vec<usize> = g
        .degrees()
        .iter()
        .map(|&d| 4usize.saturating_sub(d))
        .collect();
    let deviations = (0..g.n()).filter(|&v| counts[v] != expected[v]).collect();
    CornerCensus {
        counts,
        expected,
        deviations,
    }
}

// ---------------------------------------------------------------------------
// Forbidden double-crossing pattern

/// A hit of the forbidden configuration: two crossings whose left edges
/// share an endpoint `u` and whose right edges share an endpoint `v`, with
/// `u` and `v` of different colors. Any maximal graph containing it has at
/// most `3v - 11` edges.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct PatternHit {
    pub crossing_a: usize,
    pub crossing_b: usize,
    pub shared_left_endpoint: Vertex,
    pub shared_right_endpoint: Vertex,
    pub edges: [EdgeId; 4],
}

/// Scan all pairs of crossings for the forbidden pattern. The scan reports
/// configurations only; it never asserts the edge bound on the scanned graph
/// itself.
pub fn double_crossing_scan(d: &Drawing, cls: &EdgeClassification) -> Vec<PatternHit> {
    let g = d.graph();
    let crossings = d.crossings();
    let oriented: Vec<(EdgeId, EdgeId)> = crossings
        .iter()
        .map(|&(a, b)| {
            if cls.classes[a] == EdgeClass::Left {
                (a, b)
            } else {
                (b, a)
            }
        })
        .collect();
    let mut hits = Vec::new();
    for i in 0..oriented.len() {
        for j in i + 1..oriented.len() {
            let (la, ra) = oriented[i];
            let (lb, rb) = oriented[j];
            let shared_left = common_endpoint(g.edge(la), g.edge(lb));
            let shared_right = common_endpoint(g.edge(ra), g.edge(rb));
            if let (Some(u), Some(v)) = (shared_left, shared_right) {
                if u != v && g.color(u) != g.color(v) {
                    hits.push(PatternHit {
                        crossing_a: i,
                        crossing_b: j,
                        shared_left_endpoint: u,
                        shared_right_endpoint: v,
                        edges: [la, ra, lb, rb],
                    });
                }
            }
        }
    }
    hits
}

fn common_endpoint(a: (Vertex, Vertex), b: (Vertex, Vertex)) -> Option<Vertex> {
    if a.0 == b.0 || a.0 == b.1 {
        Some(a.0)
    } else if a.1 == b.0 || a.1 == b.1 {
        Some(a.1)
    } else {
        None
    }
}

// ---------------------------------------------------------------------------
// Aggregate report

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct StructureReport {
    pub is_quadrangulation: bool,
    pub is_biconnected: bool,
    pub max_degree_gprime: usize,
    pub quadrangulation: QuadrangulationReport,
    pub right_edge_faces: Vec<FaceRightReport>,
    pub decomposition: Option<PartsDecomposition>,
    pub corner_census: Option<CornerCensus>,
    pub pattern_hits: Vec<PatternHit>,
    /// Asserted only when all prerequisite checks pass: the drawing has the
    /// extremal structure, hence an even vertex count.
    pub parity_conclusion: bool,
    pub failures: Vec<String>,
}

/// Run the full structural analysis of a drawing: extract G', check the
/// quadrangulation, decompose into strips and rings, count corners and scan
/// for the forbidden pattern.
pub fn analyze(d: &Drawing) -> StructureReport {
    let cls = d.classify_edges();
    let gp = d.derive_gprime();
    let quad = check_quadrangulation(&gp);
    let right_faces = right_edge_positions(&gp);
    let max_degree_gprime = gp.drawing.graph().degrees().into_iter().max().unwrap_or(0);
    let mut failures: Vec<String> = quad.failures.clone();
    for fr in &right_faces {
        if fr.violation {
            failures.push(format!(
                "face {} violates the right-edge position rule",
                fr.face
            ));
        }
    }
    let decomposition = match decompose(&gp) {
        Ok(dec) => Some(dec),
        Err(StructureError::NotExtremalStructure(mut f)) => {
            failures.append(&mut f);
            None
        }
    };
    let corner = decomposition.as_ref().map(|dec| corner_census(dec, &gp));
    if let Some(c) = &corner {
        if !c.deviations.is_empty() {
            failures.push(format!(
                "corner census deviates at vertices {:?}",
                c.deviations
            ));
        }
    }
    let hits = double_crossing_scan(d, &cls);
    let parity_conclusion = failures.is_empty() && d.graph().n().is_multiple_of(2);
    StructureReport {
        is_quadrangulation: quad.is_quadrangulation,
        is_biconnected: quad.is_biconnected,
        max_degree_gprime,
        quadrangulation: quad,
        right_edge_faces: right_faces,
        decomposition,
        corner_census: corner,
        pattern_hits: hits,
        parity_conclusion,
        failures,
    }
}
