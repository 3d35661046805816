//! Rotation systems over arbitrary simple graphs: face tracing and the Euler
//! certificate that a rotation system describes a sphere embedding.
//!
//! A *dart* is a directed edge-end: dart `2*e` points from the stored tail of
//! edge `e` to its head, dart `2*e + 1` the other way. Rotations store, for
//! each node, the cyclic counterclockwise order of its outgoing darts.
//!
//! Faces are traced with `next(d) = predecessor of twin(d) in the rotation at
//! head(d)`, which walks each face counterclockwise (interior on the left).

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type Node = usize;
pub type Dart = usize;

pub fn twin(d: Dart) -> Dart {
    d ^ 1
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum EmbedError {
    #[error("malformed rotation: {0}")]
    MalformedRotation(String),
    #[error("not an embedding: face trace violates Euler's formula ({0})")]
    NotAnEmbedding(String),
}

/// A graph together with a rotation system.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Embedding {
    pub n: usize,
    /// Edge list; edge `e` contributes darts `2e` (tail->head) and `2e+1`.
    pub edges: Vec<(Node, Node)>,
    /// Per node, outgoing darts in counterclockwise order.
    pub rotations: Vec<Vec<Dart>>,
}

impl Embedding {
    pub fn dart_tail(&self, d: Dart) -> Node {
        let (t, h) = self.edges[d / 2];
        if d.is_multiple_of(2) {
            t
        } else {
            h
        }
    }

    pub fn dart_head(&self, d: Dart) -> Node {
        self.dart_tail(twin(d))
    }

    pub fn dart_edge(&self, d: Dart) -> usize {
        d / 2
    }

    /// Check that the rotation lists form a permutation of all darts and that
    /// every dart sits at its tail node.
    pub fn validate_rotations(&self) -> Result<(), EmbedError> {
        if self.rotations.len() != self.n {
            return Err(EmbedError::MalformedRotation(format!(
                "expected {} rotation lists, got {}",
                self.n,
                self.rotations.len()
            )));
        }
        let dart_count = 2 * self.edges.len();
        let mut seen = vec![false; dart_count];
        for (node, rot) in self.rotations.iter().enumerate() {
            for &d in rot {
                if d >= dart_count {
                    return Err(EmbedError::MalformedRotation(format!(
                        "dart {d} out of range at node {node}"
                    )));
                }
                if seen[d] {
                    return Err(EmbedError::MalformedRotation(format!(
                        "dart {d} appears twice"
                    )));
                }
                seen[d] = true;
                if self.dart_tail(d) != node {
                    return Err(EmbedError::MalformedRotation(format!(
                        "dart {d} has tail {} but is listed at node {node}",
                        self.dart_tail(d)
                    )));
                }
            }
        }
        if let Some(missing) = seen.iter().position(|&s| !s) {
            return Err(EmbedError::MalformedRotation(format!(
                "dart {missing} missing"
            )));
        }
        Ok(())
    }

    /// Trace all faces. Each face is the dart cycle of one orbit of the
    /// permutation `twin-then-rotation-predecessor`, rotated so that it starts
    /// at its smallest dart; faces are listed by that canonical dart.
    pub fn trace_faces(&self) -> Result<Vec<Vec<Dart>>, EmbedError> {
        self.validate_rotations()?;
        let dart_count = 2 * self.edges.len();
        // pos[d] = index of d within the rotation list at its tail.
        let mut pos = vec![0usize; dart_count];
        for rot in &self.rotations {
            for (i, &d) in rot.iter().enumerate() {
                pos[d] = i;
            }
        }
        let next = |d: Dart| -> Dart {
            let t = twin(d);
            let rot = &self.rotations[self.dart_tail(t)];
            let i = pos[t];
            rot[(i + rot.len() - 1) % rot.len()]
        };
        let mut seen = vec![false; dart_count];
        let mut faces = Vec::new();
        for start in 0..dart_count {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut d = start;
            loop {
                if seen[d] {
                    // A dart revisited before closing the orbit means `next`
                    // is not a permutation, which validate_rotations excludes.
                    return Err(EmbedError::MalformedRotation(format!(
                        "face trace re-entered dart {d}"
                    )));
                }
                seen[d] = true;
                cycle.push(d);
                d = next(d);
                if d == start {
                    break;
                }
            }
            faces.push(cycle);
        }
        Ok(faces)
    }

    /// Connected components over nodes (edges connect; isolated nodes are
    /// their own components). Returns a component id per node.
    pub fn components(&self) -> Vec<usize> {
        let mut comp = vec![usize::MAX; self.n];
        let mut adj = vec![Vec::new(); self.n];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut c = 0;
        for start in 0..self.n {
            if comp[start] != usize::MAX {
                continue;
            }
            let mut stack = vec![start];
            comp[start] = c;
            while let Some(v) = stack.pop() {
                for &w in &adj[v] {
                    if comp[w] == usize::MAX {
                        comp[w] = c;
                        stack.push(w);
                    }
                }
            }
            c += 1;
        }
        comp
    }

    /// Verify the Euler certificate: on every connected component with at
    /// least one edge, `V - E + F = 2` where `F` counts traced orbits of the
    /// component (each component is embedded on its own sphere). Components
    /// without edges hold trivially.
    pub fn euler_check(&self) -> Result<EulerReport, EmbedError> {
        let faces = self.trace_faces()?;
        let comp = self.components();
        let comp_count = comp.iter().copied().max().map_or(0, |m| m + 1);
        let mut verts = vec![0usize; comp_count];
        let mut edges = vec![0usize; comp_count];
        let mut orbits = vec![0usize; comp_count];
        for v in 0..self.n {
            verts[comp[v]] += 1;
        }
        for &(a, _) in &self.edges {
            edges[comp[a]] += 1;
        }
        for f in &faces {
            orbits[comp[self.dart_tail(f[0])]] += 1;
        }
        for c in 0..comp_count {
            if edges[c] == 0 {
                continue;
            }
            let lhs = verts[c] as i64 - edges[c] as i64 + orbits[c] as i64;
            if lhs != 2 {
                return Err(EmbedError::NotAnEmbedding(format!(
                    "component {c}: V={} E={} F={} gives {lhs}, want 2",
                    verts[c], edges[c], orbits[c]
                )));
            }
        }
        // Planar face count with a shared unbounded face: each extra
        // component merges one sphere face into the outer face. Every
        // component contributes at least one sphere face (isolated nodes
        // count one), so the subtraction cannot underflow.
        let traced: usize = faces.len();
        let isolated = (0..comp_count).filter(|&c| edges[c] == 0).count();
        let plane_faces = traced + isolated - comp_count.saturating_sub(1);
        Ok(EulerReport {
            nodes: self.n,
            edges: self.edges.len(),
            traced_faces: traced,
            components: comp_count,
            plane_faces,
        })
    }

    /// Mirror image: every rotation list reversed.
    pub fn mirrored(&self) -> Embedding {
        let rotations = self
            .rotations
            .iter()
            .map(|r| r.iter().rev().copied().collect())
            .collect();
        Embedding {
            n: self.n,
            edges: self.edges.clone(),
            rotations,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct EulerReport {
    pub nodes: usize,
    pub edges: usize,
    /// Orbits of the face-trace permutation (one sphere per component).
    pub traced_faces: usize,
    pub components: usize,
    /// Face count in the plane with the unbounded face shared, so that
    /// `V - E + F = 1 + c`.
    pub plane_faces: usize,
}

/// Reconstruct the rotation system from a set of consistently oriented face
/// cycles (given as node cycles). Every directed edge must appear in exactly
/// one face. Fails if the reconstruction does not give a single cyclic order
/// at some node.
pub fn rotations_from_faces(
    n: usize,
    edges: &[(Node, Node)],
    faces: &[Vec<Node>],
) -> Result<Vec<Vec<Dart>>, EmbedError> {
    use std::collections::BTreeMap;
    let mut dart_of: BTreeMap<(Node, Node), Dart> = BTreeMap::new();
    for (e, &(t, h)) in edges.iter().enumerate() {
        dart_of.insert((t, h), 2 * e);
        dart_of.insert((h, t), 2 * e + 1);
    }
    // Face-consecutive darts (u->v),(v->w) mean the rotation at v maps the
    // neighbor w to successor u (counterclockwise faces, interior left).
    let mut succ: Vec<BTreeMap<Dart, Dart>> = vec![BTreeMap::new(); n];
    for face in faces {
        let k = face.len();
        for i in 0..k {
            let u = face[i];
            let v = face[(i + 1) % k];
            let w = face[(i + 2) % k];
            let into = *dart_of.get(&(v, w)).ok_or_else(|| {
                EmbedError::MalformedRotation(format!("face uses non-edge ({v},{w})"))
            })?;
            let back = *dart_of.get(&(v, u)).ok_or_else(|| {
                EmbedError::MalformedRotation(format!("face uses non-edge ({v},{u})"))
            })?;
            if succ[v].insert(into, back).is_some() {
                return Err(EmbedError::MalformedRotation(format!(
                    "dart {into} assigned two rotation successors at node {v}"
                )));
            }
        }
    }
    let mut rotations = vec![Vec::new(); n];
    for v in 0..n {
        let map = &succ[v];
        if map.is_empty() {
            continue;
        }
        let start = *map.keys().next().unwrap();
        let mut order = vec![start];
        let mut cur = start;
        loop {
            let nxt = *map.get(&cur).ok_or_else(|| {
                EmbedError::MalformedRotation(format!("rotation chain broken at node {v}"))
            })?;
            if nxt == start {
                break;
            }
            order.push(nxt);
            cur = nxt;
            if order.len() > map.len() {
                return Err(EmbedError::MalformedRotation(format!(
                    "rotation at node {v} does not close"
                )));
            }
        }
        if order.len() != map.len() {
            return Err(EmbedError::MalformedRotation(format!(
                "rotation at node {v} splits into several cycles"
            )));
        }
        rotations[v] = order;
    }
    Ok(rotations)
}
