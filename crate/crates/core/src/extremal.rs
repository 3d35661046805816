//! Certified generators for the extremal families of bipartite 1-planar
//! graphs and for the 1-planar complete bipartite graphs.
//!
//! The box and two-strip families are built in two stages: first the plane
//! quadrangulation (the eventual G') as an explicit set of consistently
//! oriented quad faces on a sphere, then one crossing edge per interior
//! "rung" edge of each strip or ring. The diagonal pattern inside each part
//! is found by constrained backtracking over the two possible slants per
//! part, rejecting duplicate edges; the drawing validator is the ground
//! truth for every completion. Generators are deterministic: choices are
//! explored in a fixed canonical order and the result is mirror-normalized
//! so that the added edges classify as left.

use crate::drawing::{Drawing, EdgeClass, Planarization};
use crate::embed::{rotations_from_faces, Dart, Embedding};
use crate::graph::{beta, Color, ColoredGraph, EdgeId, Vertex};
use crate::search::{planarity_test, PlanarityResult, SimpleGraph};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum ExtremalError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("K_{{{a},{b}}} is not 1-planar: {reason}")]
    UnsupportedPair {
        a: usize,
        b: usize,
        reason: UnsupportedReason,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum UnsupportedReason {
    /// The edge count exceeds the closed-form maximum.
    BoundViolation { edges: usize, max_edges: usize },
    /// Contains K_{3,7}, refuted by the counting certificate.
    ContainsK37,
}

impl std::fmt::Display for UnsupportedReason {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            UnsupportedReason::BoundViolation { edges, max_edges } => {
                write!(f, "{edges} edges exceed the maximum {max_edges}")
            }
            UnsupportedReason::ContainsK37 => {
                write!(f, "contains K_{{3,7}}, which has no 1-planar drawing")
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Quadrangulated sphere scaffolding

/// A plane quadrangulation given by consistently oriented quad faces.
struct QuadSurface {
    n: usize,
    colors: Vec<Color>,
    /// Sorted normalized edge list; ids are positions.
    edges: Vec<(Vertex, Vertex)>,
    faces: Vec<[Vertex; 4]>,
    /// Rotation system over the surface edges (dart = 2*edge + dir).
    rotations: Vec<Vec<Dart>>,
    /// For every surface dart, the face on its left (its orbit).
    face_of_dart: Vec<usize>,
}

impl QuadSurface {
    fn from_faces(n: usize, colors: Vec<Color>, faces: Vec<[Vertex; 4]>) -> QuadSurface {
        let mut edge_set: BTreeSet<(Vertex, Vertex)> = BTreeSet::new();
        for q in &faces {
            for i in 0..4 {
                let (a, b) = (q[i], q[(i + 1) % 4]);
                edge_set.insert((a.min(b), a.max(b)));
            }
        }
        let edges: Vec<(Vertex, Vertex)> = edge_set.into_iter().collect();
        let face_lists: Vec<Vec<Vertex>> = faces.iter().map(|q| q.to_vec()).collect();
        let rotations = rotations_from_faces(n, &edges, &face_lists)
            .expect("quad faces must be consistently oriented");
        let mut face_of_dart = vec![usize::MAX; 2 * edges.len()];
        let dart_of = |a: Vertex, b: Vertex| -> Dart {
            let key = (a.min(b), a.max(b));
            let e = edges.binary_search(&key).expect("face edge exists");
            if a < b {
                2 * e
            } else {
                2 * e + 1
            }
        };
        for (fi, q) in faces.iter().enumerate() {
            for i in 0..4 {
                face_of_dart[dart_of(q[i], q[(i + 1) % 4])] = fi;
            }
        }
        debug_assert!(face_of_dart.iter().all(|&f| f != usize::MAX));
        let surface = QuadSurface {
            n,
            colors,
            edges,
            faces,
            rotations,
            face_of_dart,
        };
        debug_assert!(surface.embedding().euler_check().is_ok());
        surface
    }

    fn embedding(&self) -> Embedding {
        Embedding {
            n: self.n,
            edges: self.edges.clone(),
            rotations: self.rotations.clone(),
        }
    }

    fn edge_id(&self, a: Vertex, b: Vertex) -> EdgeId {
        self.edges
            .binary_search(&(a.min(b), a.max(b)))
            .expect("surface edge exists")
    }

    /// The surface dart of `eid` whose left face is `face`.
    fn dart_with_left_face(&self, eid: EdgeId, face: usize) -> Dart {
        if self.face_of_dart[2 * eid] == face {
            2 * eid
        } else {
            debug_assert_eq!(self.face_of_dart[2 * eid + 1], face);
            2 * eid + 1
        }
    }
}

/// One strip or ring of the planned decomposition: the ordered face list and
/// the interior "rung" edges each of which will be crossed by one new edge.
/// `rungs[i]` separates `faces[i]` from `faces[i + 1]` (indices mod len for
/// rings, where `rungs.len() == faces.len()`).
struct PartPlan {
    is_ring: bool,
    faces: Vec<usize>,
    rungs: Vec<EdgeId>,
}

/// A planned crossing: the rung, the new edge's endpoints (`p` on the
/// previous face, `q` on the next face), and those two faces.
#[derive(Clone, Copy, Debug)]
struct DiagonalPlan {
    rung: EdgeId,
    p: Vertex,
    q: Vertex,
    face_p: usize,
    face_q: usize,
}

fn opposite_corner(quad: &[Vertex; 4], v: Vertex) -> Vertex {
    let i = quad.iter().position(|&w| w == v).expect("corner of quad");
    quad[(i + 2) % 4]
}

/// The two color-consistent diagonal candidates for a rung, ordered.
fn diagonal_candidates(s: &QuadSurface, plan: &PartPlan, i: usize) -> Vec<DiagonalPlan> {
    let rung = plan.rungs[i];
    let face_p = plan.faces[i];
    let face_q = plan.faces[(i + 1) % plan.faces.len()];
    let (x, y) = s.edges[rung];
    let rest = |f: usize| -> Vec<Vertex> {
        s.faces[f]
            .iter()
            .copied()
            .filter(|&w| w != x && w != y)
            .collect()
    };
    let mut cands = Vec::new();
    for &p in &rest(face_p) {
        for &q in &rest(face_q) {
            if s.colors[p] != s.colors[q] {
                cands.push(DiagonalPlan {
                    rung,
                    p,
                    q,
                    face_p,
                    face_q,
                });
            }
        }
    }
    cands.sort_by_key(|d| (d.p, d.q));
    debug_assert_eq!(cands.len(), 2);
    cands
}

/// All internally consistent diagonal assignments for one part (at most two:
/// one per slant of the first rung). Consistency: two crossing halves inside
/// one quad face must attach at opposite corners, which chains the slant
/// choice along the part and around rings.
fn part_chains(s: &QuadSurface, plan: &PartPlan) -> Vec<Vec<DiagonalPlan>> {
    if plan.rungs.is_empty() {
        return vec![Vec::new()];
    }
    let mut chains = Vec::new();
    'slant: for first in diagonal_candidates(s, plan, 0) {
        let mut chain = vec![first];
        for i in 1..plan.rungs.len() {
            let shared = plan.faces[i]; // next face of rung i-1, prev face of rung i
            let prev_attach = chain[i - 1].q;
            let want_p = opposite_corner(&s.faces[shared], prev_attach);
            let Some(next) = diagonal_candidates(s, plan, i)
                .into_iter()
                .find(|d| d.p == want_p)
            else {
                continue 'slant;
            };
            chain.push(next);
        }
        if plan.is_ring {
            // Wrap-around: the last rung's q and the first rung's p share faces[0].
            let shared = plan.faces[0];
            if chain[0].p != opposite_corner(&s.faces[shared], chain.last().unwrap().q) {
                continue 'slant;
            }
        }
        chains.push(chain);
    }
    chains
}

/// Complete a quadrangulated surface into a drawing by choosing a diagonal
/// chain per part. Deterministic first-fit backtracking over the slant
/// choices; a completion is accepted when it has no duplicate edges, passes
/// drawing validation, and all added edges classify uniformly (then they are
/// normalized to left by mirroring if needed).
fn complete_surface(s: &QuadSurface, parts: &[PartPlan]) -> Drawing {
    let options: Vec<Vec<Vec<DiagonalPlan>>> = parts.iter().map(|p| part_chains(s, p)).collect();
    assert!(
        options.iter().all(|o| !o.is_empty()),
        "every part admits a diagonal slant"
    );
    let grid: BTreeSet<(Vertex, Vertex)> = s.edges.iter().copied().collect();
    let mut chosen: Vec<DiagonalPlan> = Vec::new();
    let mut chosen_pairs: BTreeSet<(Vertex, Vertex)> = BTreeSet::new();

    fn dfs(
        s: &QuadSurface,
        options: &[Vec<Vec<DiagonalPlan>>],
        part: usize,
        grid: &BTreeSet<(Vertex, Vertex)>,
        chosen: &mut Vec<DiagonalPlan>,
        chosen_pairs: &mut BTreeSet<(Vertex, Vertex)>,
    ) -> Option<Drawing> {
        if part == options.len() {
            return try_assignment(s, chosen);
        }
        'chain: for chain in &options[part] {
            let mut added = Vec::new();
            for d in chain {
                let key = (d.p.min(d.q), d.p.max(d.q));
                if grid.contains(&key) || !chosen_pairs.insert(key) {
                    for k in added {
                        chosen_pairs.remove(&k);
                    }
                    continue 'chain;
                }
                added.push(key);
            }
            let len_before = chosen.len();
            chosen.extend(chain.iter().copied());
            if let Some(d) = dfs(s, options, part + 1, grid, chosen, chosen_pairs) {
                return Some(d);
            }
            chosen.truncate(len_before);
            for k in added {
                chosen_pairs.remove(&k);
            }
        }
        None
    }

    dfs(s, &options, 0, &grid, &mut chosen, &mut chosen_pairs)
        .expect("some slant assignment completes the construction")
}

/// Build and validate the drawing for one full diagonal assignment; check
/// the added edges classify uniformly and normalize them to left.
fn try_assignment(s: &QuadSurface, diagonals: &[DiagonalPlan]) -> Option<Drawing> {
    let mut diagonals: Vec<DiagonalPlan> = diagonals.to_vec();
    diagonals.sort_by_key(|d| d.rung);
    let grid_count = s.edges.len();
    let mut all_edges = s.edges.clone();
    let mut crossings = Vec::with_capacity(diagonals.len());
    for (i, d) in diagonals.iter().enumerate() {
        all_edges.push((d.p.min(d.q), d.p.max(d.q)));
        crossings.push((d.rung, grid_count + i));
    }
    let graph = ColoredGraph::new(s.n, s.colors.clone(), &all_edges).ok()?;
    let plan = Planarization::build(&graph, &crossings);
    let mut rotations: Vec<Vec<Dart>> = vec![Vec::new(); plan.node_count];
    for (v, surface_rot) in s.rotations.iter().enumerate() {
        debug_assert!(surface_rot.iter().all(|&d| d_tail(s, d) == v));
        rotations[v] = surface_rot
            .iter()
            .map(|&d| plan.dart_from(d_tail(s, d), d / 2))
            .collect();
    }
    for (i, d) in diagonals.iter().enumerate() {
        let diag_eid = grid_count + i;
        // Insert the new darts at p and q inside the corners of their faces:
        // immediately after the face's outgoing dart at that vertex.
        for (vert, face) in [(d.p, d.face_p), (d.q, d.face_q)] {
            let quad = &s.faces[face];
            let pos = quad
                .iter()
                .position(|&w| w == vert)
                .expect("endpoint on face");
            let anchor_edge = s.edge_id(quad[pos], quad[(pos + 1) % 4]);
            let anchor = plan.dart_from(vert, anchor_edge);
            let new_dart = plan.dart_from(vert, diag_eid);
            let rot = &mut rotations[vert];
            let at = rot
                .iter()
                .position(|&x| x == anchor)
                .expect("anchor in rotation");
            rot.insert(at + 1, new_dart);
        }
        // Dummy rotation: counterclockwise [toward head, toward p, toward
        // tail, toward q] of the rung dart whose left face holds p's half.
        let rung_dart = s.dart_with_left_face(d.rung, d.face_p);
        let (tail, head) = dart_ends(s, rung_dart);
        let dummy = plan.dummies[i];
        rotations[dummy] = vec![
            dummy_dart_toward(&plan, d.rung, head),
            dummy_dart_toward(&plan, diag_eid, d.p),
            dummy_dart_toward(&plan, d.rung, tail),
            dummy_dart_toward(&plan, diag_eid, d.q),
        ];
    }
    let drawing = Drawing::new(graph, crossings, rotations).ok()?;
    let cls = drawing.classify_edges();
    let added = &cls.classes[grid_count..];
    if added.iter().all(|&c| c == EdgeClass::Left) {
        Some(drawing)
    } else if added.iter().all(|&c| c == EdgeClass::Right) {
        Some(drawing.mirrored())
    } else {
        None
    }
}

fn d_tail(s: &QuadSurface, d: Dart) -> Vertex {
    let (a, b) = s.edges[d / 2];
    if d.is_multiple_of(2) {
        a
    } else {
        b
    }
}

fn dart_ends(s: &QuadSurface, d: Dart) -> (Vertex, Vertex) {
    let (a, b) = s.edges[d / 2];
    if d.is_multiple_of(2) {
        (a, b)
    } else {
        (b, a)
    }
}

/// Dart leaving the dummy of crossed edge `eid` toward original `endpoint`.
fn dummy_dart_toward(plan: &Planarization, eid: EdgeId, endpoint: Vertex) -> Dart {
    match plan.edge_segments[eid] {
        crate::drawing::EdgeSegments::Split { low, high, .. } => {
            if plan.segments[low].tail == endpoint {
                2 * low + 1
            } else {
                debug_assert_eq!(plan.segments[high].head, endpoint);
                2 * high
            }
        }
        crate::drawing::EdgeSegments::Whole(_) => unreachable!("edge {eid} is crossed"),
    }
}

// ---------------------------------------------------------------------------
// Box surfaces (slabs of unit thickness)

/// Surface grid of a `1 x b x c` slab: every lattice point of the slab lies
/// on the boundary, colored by coordinate parity.
struct Slab {
    b: usize,
    c: usize,
}

impl Slab {
    fn vid(&self, x: usize, y: usize, z: usize) -> Vertex {
        x * (self.b + 1) * (self.c + 1) + y * (self.c + 1) + z
    }

    fn n(&self) -> usize {
        2 * (self.b + 1) * (self.c + 1)
    }

    fn colors(&self) -> Vec<Color> {
        let mut colors = vec![Color::One; self.n()];
        for x in 0..2 {
            for y in 0..=self.b {
                for z in 0..=self.c {
                    colors[self.vid(x, y, z)] = if (x + y + z) % 2 == 0 {
                        Color::One
                    } else {
                        Color::Two
                    };
                }
            }
        }
        colors
    }

    /// All faces with consistent (outward) orientation, in a fixed order.
    fn faces(&self) -> Vec<[Vertex; 4]> {
        let (b, c) = (self.b, self.c);
        let v = |x, y, z| self.vid(x, y, z);
        let mut faces = Vec::new();
        for y in 0..b {
            for z in 0..c {
                faces.push([
                    v(0, y, z),
                    v(0, y, z + 1),
                    v(0, y + 1, z + 1),
                    v(0, y + 1, z),
                ]);
                faces.push([
                    v(1, y, z),
                    v(1, y + 1, z),
                    v(1, y + 1, z + 1),
                    v(1, y, z + 1),
                ]);
            }
        }
        for z in 0..c {
            faces.push([v(0, 0, z), v(1, 0, z), v(1, 0, z + 1), v(0, 0, z + 1)]);
            faces.push([v(0, b, z), v(0, b, z + 1), v(1, b, z + 1), v(1, b, z)]);
        }
        for y in 0..b {
            faces.push([v(0, y, 0), v(0, y + 1, 0), v(1, y + 1, 0), v(1, y, 0)]);
            faces.push([v(0, y, c), v(1, y, c), v(1, y + 1, c), v(0, y + 1, c)]);
        }
        faces
    }

    /// Rim of the `y`-cross-section (constant z walls): cyclic (x, y) list.
    fn rim_xy(&self) -> Vec<(usize, usize)> {
        let mut rim: Vec<(usize, usize)> = (0..=self.b).map(|y| (0, y)).collect();
        rim.extend((0..=self.b).rev().map(|y| (1, y)));
        rim
    }

    /// Rim of the `z`-cross-section (used when b == 1): cyclic (x, z) list.
    fn rim_xz(&self) -> Vec<(usize, usize)> {
        let mut rim: Vec<(usize, usize)> = (0..=self.c).map(|z| (0, z)).collect();
        rim.extend((0..=self.c).rev().map(|z| (1, z)));
        rim
    }
}

fn surface_face_index(s: &QuadSurface, quad_sorted: &[Vertex; 4]) -> usize {
    s.faces
        .iter()
        .position(|q| {
            let mut sorted = *q;
            sorted.sort_unstable();
            sorted == *quad_sorted
        })
        .expect("face present on surface")
}

fn face_index_of(s: &QuadSurface, a: Vertex, b: Vertex, c: Vertex, d: Vertex) -> usize {
    let mut q = [a, b, c, d];
    q.sort_unstable();
    surface_face_index(s, &q)
}

/// Box-style decomposition of a `1 x b x c` slab: two strips of `b` faces on
/// the z = 0 and z = c walls, and `c` rings of `2b + 2` faces.
fn slab_box_parts(slab: &Slab, s: &QuadSurface) -> Vec<PartPlan> {
    let v = |x, y, z| slab.vid(x, y, z);
    let mut parts = Vec::new();
    for z in [0, slab.c] {
        let faces: Vec<usize> = (0..slab.b)
            .map(|y| face_index_of(s, v(0, y, z), v(0, y + 1, z), v(1, y + 1, z), v(1, y, z)))
            .collect();
        let rungs: Vec<EdgeId> = (1..slab.b)
            .map(|y| s.edge_id(v(0, y, z), v(1, y, z)))
            .collect();
        parts.push(PartPlan {
            is_ring: false,
            faces,
            rungs,
        });
    }
    let rim = slab.rim_xy();
    let len = rim.len();
    for r in 0..slab.c {
        let mut faces = Vec::with_capacity(len);
        let mut rungs = Vec::with_capacity(len);
        for m in 0..len {
            let (x0, y0) = rim[m];
            let (x1, y1) = rim[(m + 1) % len];
            faces.push(face_index_of(
                s,
                v(x0, y0, r),
                v(x0, y0, r + 1),
                v(x1, y1, r),
                v(x1, y1, r + 1),
            ));
            // The rung after face m sits at rim position m + 1.
            let (xr, yr) = rim[(m + 1) % len];
            rungs.push(s.edge_id(v(xr, yr, r), v(xr, yr, r + 1)));
        }
        parts.push(PartPlan {
            is_ring: true,
            faces,
            rungs,
        });
    }
    parts
}

/// Tube-style decomposition of a `1 x 1 x c` slab: two strips of `c` faces
/// on the y = 0 and y = 1 walls, and one ring of `2c + 2` faces around the
/// long axis.
fn slab_tube_parts(slab: &Slab, s: &QuadSurface) -> Vec<PartPlan> {
    assert_eq!(slab.b, 1);
    let v = |x, y, z| slab.vid(x, y, z);
    let mut parts = Vec::new();
    for y in [0, 1] {
        let faces: Vec<usize> = (0..slab.c)
            .map(|z| face_index_of(s, v(0, y, z), v(1, y, z), v(1, y, z + 1), v(0, y, z + 1)))
            .collect();
        let rungs: Vec<EdgeId> = (1..slab.c)
            .map(|z| s.edge_id(v(0, y, z), v(1, y, z)))
            .collect();
        parts.push(PartPlan {
            is_ring: false,
            faces,
            rungs,
        });
    }
    let rim = slab.rim_xz();
    let len = rim.len();
    let mut faces = Vec::with_capacity(len);
    let mut rungs = Vec::with_capacity(len);
    for m in 0..len {
        let (x0, z0) = rim[m];
        let (x1, z1) = rim[(m + 1) % len];
        faces.push(face_index_of(
            s,
            v(x0, 0, z0),
            v(x0, 1, z0),
            v(x1, 0, z1),
            v(x1, 1, z1),
        ));
        let (xr, zr) = rim[(m + 1) % len];
        rungs.push(s.edge_id(v(xr, 0, zr), v(xr, 1, zr)));
    }
    parts.push(PartPlan {
        is_ring: true,
        faces,
        rungs,
    });
    parts
}

// ---------------------------------------------------------------------------
// Public generators

/// The tube family: the surface grid of a `1 x 1 x k` box drawn with two
/// strips (the long side walls) and one ring around the long axis.
/// `v = 4k + 4`, `e = 3v - 8`; the drawing is regular (passes level 5).
pub fn gen_tube(k: usize) -> Result<Drawing, ExtremalError> {
    if k < 1 {
        return Err(ExtremalError::Domain("tube family needs k >= 1".into()));
    }
    let slab = Slab { b: 1, c: k };
    let s = QuadSurface::from_faces(slab.n(), slab.colors(), slab.faces());
    let parts = slab_tube_parts(&slab, &s);
    Ok(complete_surface(&s, &parts))
}

/// The box family: the surface grid of a `1 x k x n` box drawn with two
/// strips of `k` faces and `n` rings. `v = 2(k+1)(n+1)`, `e = 3v - 8`.
pub fn gen_box(k: usize, n: usize) -> Result<Drawing, ExtremalError> {
    if k < 1 || n < 1 {
        return Err(ExtremalError::Domain(
            "box family needs k >= 1 and n >= 1".into(),
        ));
    }
    let slab = Slab { b: k, c: n };
    let s = QuadSurface::from_faces(slab.n(), slab.colors(), slab.faces());
    let parts = slab_box_parts(&slab, &s);
    Ok(complete_surface(&s, &parts))
}

/// The two-strip family on `4k + 6` vertices: two strips of `2k + 2` faces
/// glued along their boundary cycles with an offset that identifies exactly
/// two pairs of corners. `e = 3v - 8`, no rings in the decomposition.
pub fn gen_two_strips(k: usize) -> Result<Drawing, ExtremalError> {
    if k < 1 {
        return Err(ExtremalError::Domain(
            "two-strip family needs k >= 1 (k = 0 would force multiple edges)".into(),
        ));
    }
    let s_faces = 2 * k + 2; // faces per strip
    let n = 4 * k + 6; // boundary cycle length = vertex count
    let colors: Vec<Color> = (0..n)
        .map(|i| if i % 2 == 0 { Color::One } else { Color::Two })
        .collect();
    let period = n;
    let shift = |i: usize| (i + s_faces) % period;
    let mut faces = Vec::new();
    let mut strip_a = Vec::new();
    let mut strip_b = Vec::new();
    for j in 0..s_faces {
        strip_a.push(faces.len());
        faces.push([j, j + 1, 2 * s_faces - j, 2 * s_faces + 1 - j]);
    }
    for j in 0..s_faces {
        strip_b.push(faces.len());
        // Second strip glued from the other side: orientation reversed.
        faces.push([
            shift(2 * s_faces + 1 - j),
            shift(2 * s_faces - j),
            shift(j + 1),
            shift(j),
        ]);
    }
    let s = QuadSurface::from_faces(n, colors, faces);
    let part_a = PartPlan {
        is_ring: false,
        faces: strip_a,
        rungs: (1..s_faces)
            .map(|j| s.edge_id(j, 2 * s_faces + 1 - j))
            .collect(),
    };
    let part_b = PartPlan {
        is_ring: false,
        faces: strip_b,
        rungs: (1..s_faces)
            .map(|j| s.edge_id(shift(j), shift(2 * s_faces + 1 - j)))
            .collect(),
    };
    Ok(complete_surface(&s, &[part_a, part_b]))
}

/// Extremal drawing for odd vertex counts: take the even extremal drawing on
/// `v - 1` vertices and insert one new vertex into the central region of a
/// quadrangular planarization face bounded by two crossing halves, joined to
/// that face's two same-colored original vertices. `e = 3v - 9`.
pub fn gen_odd(v: usize) -> Result<Drawing, ExtremalError> {
    if v.is_multiple_of(2) || v < 9 {
        return Err(ExtremalError::Domain(
            "odd augmentation needs odd v >= 9".into(),
        ));
    }
    let base = if (v - 1).is_multiple_of(4) {
        gen_tube((v - 5) / 4)?
    } else {
        gen_two_strips((v - 7) / 4)?
    };
    Ok(insert_degree_two_vertex(&base))
}

/// Insert a new vertex into the first planarization face of the form
/// (original, dummy, original, dummy) whose two originals share a color,
/// joining it to those two vertices.
fn insert_degree_two_vertex(base: &Drawing) -> Drawing {
    let g = base.graph();
    let n = g.n();
    let emb = base.embedding();
    let (face, p, q) = base
        .faces()
        .iter()
        .filter_map(|face| {
            if face.len() != 4 {
                return None;
            }
            let nodes: Vec<usize> = face.iter().map(|&d| emb.dart_tail(d)).collect();
            let (orig, dummy): (Vec<usize>, Vec<usize>) = nodes.iter().partition(|&&x| x < n);
            if orig.len() == 2 && dummy.len() == 2 && g.color(orig[0]) == g.color(orig[1]) {
                Some((face.clone(), orig[0], orig[1]))
            } else {
                None
            }
        })
        .next()
        .expect("extremal drawings contain a central quad region");
    let new_vertex = n;
    let mut colors = g.colors().to_vec();
    colors.push(g.color(p).other());
    let mut edges = g.edges().to_vec();
    let e_p = edges.len();
    edges.push((p, new_vertex));
    let e_q = edges.len();
    edges.push((q, new_vertex));
    let graph = ColoredGraph::new(n + 1, colors, &edges).expect("augmented graph is valid");
    let crossings = base.crossings().to_vec();
    let plan = Planarization::build(&graph, &crossings);
    // Node ids: originals keep 0..n, the new vertex is n, dummies shift by 1.
    // Segment ids of existing edges are unchanged (same crossing statuses).
    let mut rotations: Vec<Vec<Dart>> = vec![Vec::new(); plan.node_count];
    rotations[..n].clone_from_slice(&base.rotations()[..n]);
    for (ci, _) in crossings.iter().enumerate() {
        rotations[n + 1 + ci] = base.rotations()[n + ci].clone();
    }
    rotations[new_vertex] = vec![
        plan.dart_from(new_vertex, e_p),
        plan.dart_from(new_vertex, e_q),
    ];
    for (vert, eid) in [(p, e_p), (q, e_q)] {
        let anchor = *face
            .iter()
            .find(|&&d| emb.dart_tail(d) == vert)
            .expect("face passes through the chosen vertex");
        let rot = &mut rotations[vert];
        let at = rot
            .iter()
            .position(|&x| x == anchor)
            .expect("anchor in rotation");
        rot.insert(at + 1, plan.dart_from(vert, eid));
    }
    Drawing::new(graph, crossings, rotations).expect("augmentation preserves validity")
}

/// The 1-planar complete bipartite graphs. Supported pairs (order
/// insensitive): K_{1,n}, K_{2,n}, K_{3,3}, K_{3,4}, K_{3,5}, K_{3,6} and
/// K_{4,4}. Everything else is rejected with the reason: an edge-bound
/// violation or containment of K_{3,7}.
pub fn gen_complete_bipartite(a: usize, b: usize) -> Result<Drawing, ExtremalError> {
    let (a, b) = (a.min(b), a.max(b));
    if a == 0 {
        return Err(ExtremalError::Domain("parts must be nonempty".into()));
    }
    match (a, b) {
        (1, _) | (2, _) => Ok(planar_book(a, b)),
        (3, 3) => {
            let k44 = gen_tube(1)?;
            let g = k44.graph();
            let u = (0..g.n()).find(|&v| g.color(v) == Color::One).unwrap();
            let w = (0..g.n()).find(|&v| g.color(v) == Color::Two).unwrap();
            let d = k44
                .delete_vertices(&BTreeSet::from([u, w]))
                .expect("valid subdrawing");
            debug_assert_eq!(d.crossing_count(), 1);
            Ok(d)
        }
        (3, 4) => {
            let k44 = gen_tube(1)?;
            let g = k44.graph();
            let u = (0..g.n()).find(|&v| g.color(v) == Color::One).unwrap();
            Ok(k44
                .delete_vertices(&BTreeSet::from([u]))
                .expect("valid subdrawing"))
        }
        (3, 5) => {
            let k36 = gen_complete_bipartite(3, 6)?;
            let last = k36.graph().n() - 1;
            Ok(k36
                .delete_vertices(&BTreeSet::from([last]))
                .expect("valid subdrawing"))
        }
        (3, 6) => Ok(k36_drawing()),
        (4, 4) => gen_tube(1),
        _ => {
            let v = a + b;
            let edges = a * b;
            let max_edges = beta(v).expect("v >= 4 here");
            let reason = if edges > max_edges {
                UnsupportedReason::BoundViolation { edges, max_edges }
            } else {
                UnsupportedReason::ContainsK37
            };
            Err(ExtremalError::UnsupportedPair { a, b, reason })
        }
    }
}

/// Plane drawing of the even cycle C_k.
pub fn plane_cycle(k: usize) -> Result<Drawing, ExtremalError> {
    let g = ColoredGraph::even_cycle(k).map_err(|e| ExtremalError::Domain(e.to_string()))?;
    // Edge i joins i and i+1 except the wrap edge k-1, stored as (0, k-1).
    let mut rotations = Vec::with_capacity(k);
    for i in 0..k {
        let fwd = if i < k - 1 { 2 * i } else { 2 * (k - 1) + 1 };
        let j = (i + k - 1) % k;
        let bwd = if j < k - 1 { 2 * j + 1 } else { 2 * (k - 1) };
        rotations.push(vec![fwd, bwd]);
    }
    Ok(Drawing::new(g, Vec::new(), rotations).expect("plane cycle is valid"))
}

/// Plane drawing of K_{1,n} or K_{2,n}: a fan, or two fans glued into a book
/// of quadrilateral pages.
fn planar_book(a: usize, b: usize) -> Drawing {
    let g = ColoredGraph::complete_bipartite(a, b);
    let mut rotations: Vec<Vec<Dart>> = vec![Vec::new(); g.n()];
    // Edge ids are row-major: (i, a + j) has id i * b + j.
    for j in 0..b {
        rotations[0].push(2 * j); // vertex 0 is the smaller endpoint
    }
    if a == 2 {
        for j in (0..b).rev() {
            rotations[1].push(2 * (b + j));
        }
        for j in 0..b {
            rotations[2 + j] = vec![2 * j + 1, 2 * (b + j) + 1];
        }
    } else {
        for j in 0..b {
            rotations[1 + j] = vec![2 * j + 1];
        }
    }
    Drawing::new(g, Vec::new(), rotations).expect("book drawing is plane")
}

/// A 1-planar drawing of K_{3,6} with 6 crossings. The crossing pattern was
/// found by exhaustive search over disjoint edge-pair matchings and is
/// validated at construction: the planarization is embedded by the planarity
/// test and the result re-checked by the drawing validator.
fn k36_drawing() -> Drawing {
    let g = ColoredGraph::complete_bipartite(3, 6);
    let by_endpoints: [((usize, usize), (usize, usize)); 6] = [
        ((0, 3), (1, 4)),
        ((0, 5), (1, 6)),
        ((0, 7), (2, 4)),
        ((0, 8), (2, 6)),
        ((1, 7), (2, 3)),
        ((1, 8), (2, 5)),
    ];
    let index = g.edge_index();
    let mut crossings: Vec<(EdgeId, EdgeId)> = by_endpoints
        .iter()
        .map(|&(e, f)| {
            let (x, y) = (index[&e], index[&f]);
            (x.min(y), x.max(y))
        })
        .collect();
    crossings.sort_unstable();
    let plan = Planarization::build(&g, &crossings);
    let sg = SimpleGraph::new(plan.node_count, plan.segment_endpoints());
    let PlanarityResult::Planar(emb) = planarity_test(&sg) else {
        unreachable!("the stored K_{{3,6}} crossing pattern planarizes");
    };
    Drawing::new(g, crossings, emb.rotations).expect("stored pattern yields a valid drawing")
}

/// Families named by [`beta_witness`].
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessFamily {
    CompleteBipartite,
    Tube,
    TwoStrips,
    OddAugmentation,
}

/// A drawing attaining `beta(v)` edges, for any `v >= 4`: small cases are
/// complete bipartite, even cases come from the tube or two-strip family,
/// odd cases from the augmentation.
pub fn beta_witness(v: usize) -> Result<(WitnessFamily, Drawing), ExtremalError> {
    match v {
        0..=3 => Err(ExtremalError::Domain("witnesses exist for v >= 4".into())),
        4 => Ok((
            WitnessFamily::CompleteBipartite,
            gen_complete_bipartite(2, 2)?,
        )),
        5 => Ok((
            WitnessFamily::CompleteBipartite,
            gen_complete_bipartite(2, 3)?,
        )),
        6 => Ok((
            WitnessFamily::CompleteBipartite,
            gen_complete_bipartite(3, 3)?,
        )),
        7 => Ok((
            WitnessFamily::CompleteBipartite,
            gen_complete_bipartite(3, 4)?,
        )),
        v if v % 2 == 0 => {
            if v % 4 == 0 {
                Ok((WitnessFamily::Tube, gen_tube((v - 4) / 4)?))
            } else {
                Ok((WitnessFamily::TwoStrips, gen_two_strips((v - 6) / 4)?))
            }
        }
        v => Ok((WitnessFamily::OddAugmentation, gen_odd(v)?)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_extremal(d: &Drawing, v: usize) {
        assert_eq!(d.graph().n(), v);
        assert_eq!(d.graph().edge_count(), 3 * v - 8);
        let report = d.verify(5);
        assert!(report.passed, "level-5 verification failed: {report:?}");
        let cls = d.classify_edges();
        assert_eq!(cls.crossing_count, v - 4);
        assert_eq!(cls.simple_count, v);
    }

    #[test]
    fn tube_counts_and_regularity() {
        for k in 1..=4 {
            let d = gen_tube(k).unwrap();
            check_extremal(&d, 4 * k + 4);
        }
        assert!(gen_tube(0).is_err());
    }

    #[test]
    fn tube_of_one_is_k44() {
        let d = gen_tube(1).unwrap();
        assert_eq!(d.graph().n(), 8);
        assert_eq!(d.graph().edge_count(), 16);
        assert_eq!(d.crossing_count(), 4);
        let sg = SimpleGraph::new(8, d.graph().edges().to_vec());
        let k44 = ColoredGraph::complete_bipartite(4, 4);
        let sk = SimpleGraph::new(8, k44.edges().to_vec());
        assert!(crate::search::isomorphic(&sg, &sk));
    }

    #[test]
    fn tube_one_census_and_planarization() {
        let d = gen_tube(1).unwrap();
        // Every vertex sees exactly two simple, one left and one right edge.
        let cls = d.classify_edges();
        for c in d.vertex_census(&cls) {
            assert_eq!((c.simple, c.left, c.right), (2, 1, 1));
        }
        // Planarization: v + t nodes, e + 2t segments.
        let plan = d.planarization();
        assert_eq!(plan.node_count, 12);
        assert_eq!(plan.segments.len(), 24);
        // A crossing-free drawing planarizes to itself.
        let c4 = plane_cycle(4).unwrap();
        assert_eq!(c4.planarization().node_count, 4);
        assert_eq!(c4.planarization().segments.len(), 4);
    }

    #[test]
    fn box_counts() {
        for (k, n) in [(1, 1), (2, 1), (3, 2)] {
            let d = gen_box(k, n).unwrap();
            check_extremal(&d, 2 * (k + 1) * (n + 1));
        }
    }

    #[test]
    fn two_strips_counts_and_degrees() {
        for k in 1..=3 {
            let d = gen_two_strips(k).unwrap();
            check_extremal(&d, 4 * k + 6);
        }
        // Degree profile of G' for k = 1: two vertices of degree 2 with
        // different colors, four of degree 3, the rest degree 4.
        let d = gen_two_strips(1).unwrap();
        let gp = d.derive_gprime();
        let degs = gp.drawing.graph().degrees();
        let two: Vec<usize> = (0..degs.len()).filter(|&v| degs[v] == 2).collect();
        assert_eq!(two.len(), 2);
        assert_ne!(
            gp.drawing.graph().color(two[0]),
            gp.drawing.graph().color(two[1])
        );
        assert_eq!(degs.iter().filter(|&&d| d == 3).count(), 4);
        assert_eq!(degs.iter().filter(|&&d| d == 4).count(), 4);
    }

    #[test]
    fn odd_augmentation_counts() {
        for v in [9usize, 11, 13] {
            let d = gen_odd(v).unwrap();
            assert_eq!(d.graph().n(), v);
            assert_eq!(d.graph().edge_count(), 3 * v - 9);
            assert!(d.verify(4).passed);
        }
        assert!(gen_odd(8).is_err());
        assert!(gen_odd(7).is_err());
    }

    #[test]
    fn complete_bipartite_supported() {
        let d = gen_complete_bipartite(2, 5).unwrap();
        assert_eq!(d.crossing_count(), 0);
        assert!(d.verify(4).passed);

        let d = gen_complete_bipartite(4, 4).unwrap();
        assert_eq!(
            (d.graph().n(), d.graph().edge_count(), d.crossing_count()),
            (8, 16, 4)
        );

        let d = gen_complete_bipartite(3, 3).unwrap();
        assert_eq!(
            (d.graph().n(), d.graph().edge_count(), d.crossing_count()),
            (6, 9, 1)
        );
        assert!(d.verify(4).passed);

        let d = gen_complete_bipartite(3, 4).unwrap();
        assert_eq!(
            (d.graph().n(), d.graph().edge_count(), d.crossing_count()),
            (7, 12, 2)
        );

        let d = gen_complete_bipartite(3, 6).unwrap();
        assert_eq!(
            (d.graph().n(), d.graph().edge_count(), d.crossing_count()),
            (9, 18, 6)
        );
        assert!(d.verify(4).passed);

        let d = gen_complete_bipartite(3, 5).unwrap();
        assert_eq!(
            (d.graph().n(), d.graph().edge_count(), d.crossing_count()),
            (8, 15, 4)
        );
        assert!(d.verify(4).passed);
    }

    #[test]
    fn complete_bipartite_rejections() {
        match gen_complete_bipartite(4, 5).unwrap_err() {
            ExtremalError::UnsupportedPair { reason, .. } => {
                assert_eq!(
                    reason,
                    UnsupportedReason::BoundViolation {
                        edges: 20,
                        max_edges: 18
                    }
                );
            }
            other => panic!("unexpected {other:?}"),
        }
        match gen_complete_bipartite(7, 3).unwrap_err() {
            ExtremalError::UnsupportedPair { a: 3, b: 7, reason } => {
                assert_eq!(reason, UnsupportedReason::ContainsK37);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn beta_witness_covers_all_small_v() {
        for v in 4..=30 {
            let (_, d) = beta_witness(v).unwrap();
            assert_eq!(d.graph().n(), v);
            assert_eq!(d.graph().edge_count(), beta(v).unwrap(), "v = {v}");
            assert!(d.verify(4).passed);
        }
    }

    #[test]
    fn no_generator_violates_one_planar_bounds() {
        let mut drawings = vec![
            gen_tube(2).unwrap(),
            gen_box(2, 2).unwrap(),
            gen_two_strips(2).unwrap(),
            gen_odd(11).unwrap(),
        ];
        drawings.push(gen_complete_bipartite(3, 6).unwrap());
        for d in &drawings {
            for verdict in crate::graph::bound_check(d.graph()) {
                if verdict.bound_name.certifies_non_one_planar() {
                    assert!(!verdict.violated);
                }
            }
        }
    }

    #[test]
    fn tube_and_box_agree_on_k44() {
        let t = gen_tube(1).unwrap();
        let b = gen_box(1, 1).unwrap();
        let ts = SimpleGraph::new(t.graph().n(), t.graph().edges().to_vec());
        let bs = SimpleGraph::new(b.graph().n(), b.graph().edges().to_vec());
        assert!(crate::search::isomorphic(&ts, &bs));
    }
}
