//! Loopless simple bipartite graphs with an explicit 2-coloring, plus the
//! closed-form edge bounds used everywhere else in the crate.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use thiserror::Error;

/// Vertex index, dense in `0..n`.
pub type Vertex = usize;
/// Edge identifier: the position of the edge in the graph's edge list.
/// All other modules refer to edges by id, never by endpoint pair.
pub type EdgeId = usize;

/// One of the two sides of the bipartition.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "u8", into = "u8")]
pub enum Color {
    One,
    Two,
}

impl Color {
    pub fn other(self) -> Color {
        match self {
            Color::One => Color::Two,
            Color::Two => Color::One,
        }
    }
}

impl From<Color> for u8 {
    fn from(c: Color) -> u8 {
        match c {
            Color::One => 1,
            Color::Two => 2,
        }
    }
}

impl TryFrom<u8> for Color {
    type Error = String;
    fn try_from(v: u8) -> Result<Color, String> {
        match v {
            1 => Ok(Color::One),
            2 => Ok(Color::Two),
            other => Err(format!("vertex color must be 1 or 2, got {other}")),
        }
    }
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("loop edge at vertex {0}")]
    LoopEdge(Vertex),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(Vertex, Vertex),
    #[error("monochromatic edge ({0}, {1}): both endpoints have color {2:?}")]
    MonochromaticEdge(Vertex, Vertex, Color),
    #[error("bad color list: expected {expected} entries, got {got}")]
    BadColor { expected: usize, got: usize },
    #[error("edge ({0}, {1}) references a vertex outside 0..{2}")]
    VertexOutOfRange(Vertex, Vertex, usize),
    #[error("domain error: {0}")]
    Domain(String),
}

/// A loopless simple bipartite graph with a fixed proper 2-coloring.
///
/// The coloring is part of the data model: the left/right edge calculus on
/// drawings needs a fixed coloring, so colors are explicit input rather than
/// inferred. Edge ids are positional and stable.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(try_from = "GraphJson", into = "GraphJson")]
pub struct ColoredGraph {
    n: usize,
    colors: Vec<Color>,
    edges: Vec<(Vertex, Vertex)>,
}

/// External JSON schema: `{"n": int, "colors": [int], "edges": [[int,int]]}`.
#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    colors: Vec<Color>,
    edges: Vec<(Vertex, Vertex)>,
}

impl TryFrom<GraphJson> for ColoredGraph {
    type Error = GraphError;
    fn try_from(j: GraphJson) -> Result<ColoredGraph, GraphError> {
        ColoredGraph::new(j.n, j.colors, &j.edges)
    }
}

impl From<ColoredGraph> for GraphJson {
    fn from(g: ColoredGraph) -> GraphJson {
        GraphJson {
            n: g.n,
            colors: g.colors,
            edges: g.edges,
        }
    }
}

impl ColoredGraph {
    /// Build and validate a graph. Edge ids are assigned in input order;
    /// endpoint pairs are normalized to `(min, max)`.
    pub fn new(
        n: usize,
        colors: Vec<Color>,
        edge_pairs: &[(Vertex, Vertex)],
    ) -> Result<ColoredGraph, GraphError> {
        if colors.len() != n {
            return Err(GraphError::BadColor {
                expected: n,
                got: colors.len(),
            });
        }
        let mut seen = std::collections::BTreeSet::new();
        let mut edges = Vec::with_capacity(edge_pairs.len());
        for &(a, b) in edge_pairs {
            if a >= n || b >= n {
                return Err(GraphError::VertexOutOfRange(a, b, n));
            }
            if a == b {
                return Err(GraphError::LoopEdge(a));
            }
            let (u, v) = (a.min(b), a.max(b));
            if !seen.insert((u, v)) {
                return Err(GraphError::DuplicateEdge(u, v));
            }
            if colors[u] == colors[v] {
                return Err(GraphError::MonochromaticEdge(u, v, colors[u]));
            }
            edges.push((u, v));
        }
        Ok(ColoredGraph { n, colors, edges })
    }

    /// The complete bipartite graph `K_{a,b}`: vertices `0..a` get color 1,
    /// `a..a+b` color 2, edges in row-major order.
    pub fn complete_bipartite(a: usize, b: usize) -> ColoredGraph {
        let mut colors = vec![Color::One; a];
        colors.extend(std::iter::repeat_n(Color::Two, b));
        let mut edges = Vec::with_capacity(a * b);
        for i in 0..a {
            for j in 0..b {
                edges.push((i, a + j));
            }
        }
        ColoredGraph::new(a + b, colors, &edges).expect("complete bipartite graph is valid")
    }

    /// The even cycle `C_k` on vertices `0..k` in cyclic order, colored by parity.
    pub fn even_cycle(k: usize) -> Result<ColoredGraph, GraphError> {
        if k < 4 || !k.is_multiple_of(2) {
            return Err(GraphError::Domain(format!(
                "even cycle needs even length >= 4, got {k}"
            )));
        }
        let colors = (0..k)
            .map(|i| if i % 2 == 0 { Color::One } else { Color::Two })
            .collect();
        let edges: Vec<_> = (0..k).map(|i| (i, (i + 1) % k)).collect();
        ColoredGraph::new(k, colors, &edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn color(&self, v: Vertex) -> Color {
        self.colors[v]
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> (Vertex, Vertex) {
        self.edges[id]
    }

    /// The endpoint of `id` with the given color.
    pub fn endpoint_of_color(&self, id: EdgeId, c: Color) -> Vertex {
        let (u, v) = self.edges[id];
        if self.colors[u] == c {
            u
        } else {
            v
        }
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for &(a, b) in &self.edges {
            d[a] += 1;
            d[b] += 1;
        }
        d
    }

    /// Lookup map from normalized endpoint pair to edge id.
    pub fn edge_index(&self) -> BTreeMap<(Vertex, Vertex), EdgeId> {
        self.edges
            .iter()
            .enumerate()
            .map(|(i, &e)| (e, i))
            .collect()
    }

    pub fn has_edge(&self, a: Vertex, b: Vertex) -> bool {
        let key = (a.min(b), a.max(b));
        self.edges.contains(&key)
    }

    /// Adjacency lists carrying edge ids, neighbors sorted ascending.
    pub fn adjacency(&self) -> Vec<Vec<(Vertex, EdgeId)>> {
        let mut adj = vec![Vec::new(); self.n];
        for (id, &(a, b)) in self.edges.iter().enumerate() {
            adj[a].push((b, id));
            adj[b].push((a, id));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }
}

/// Maximal edge count of a bipartite 1-planar graph on `v` vertices:
/// `3v - 8` for even `v != 6`, and `3v - 9` for odd `v` and for `v = 6`.
pub fn beta(v: usize) -> Result<usize, GraphError> {
    if v < 4 {
        return Err(GraphError::Domain(format!(
            "beta(v) is defined for v >= 4, got {v}"
        )));
    }
    if v.is_multiple_of(2) && v != 6 {
        Ok(3 * v - 8)
    } else {
        Ok(3 * v - 9)
    }
}

/// The closed-form edge bounds checked by [`bound_check`].
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundKind {
    /// Planar: `e <= 3v - 6`.
    Planar3v6,
    /// Bipartite planar: `e <= 2v - 4`.
    BipartitePlanar2v4,
    /// 1-planar: `e <= 4v - 8`.
    Oneplanar4v8,
    /// Bipartite 1-planar: `e <= beta(v)`.
    BipartiteOneplanarBeta,
}

impl BoundKind {
    /// Whether a violated verdict of this bound certifies non-1-planarity.
    /// The planar bounds only certify non-planarity.
    pub fn certifies_non_one_planar(self) -> bool {
        matches!(
            self,
            BoundKind::Oneplanar4v8 | BoundKind::BipartiteOneplanarBeta
        )
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct BoundVerdict {
    pub bound_name: BoundKind,
    pub max_edges: usize,
    pub edges: usize,
    pub violated: bool,
}

/// Evaluate every applicable closed-form bound on `g`. A violated
/// `oneplanar_4v8` or `bipartite_oneplanar_beta` verdict is a certificate of
/// non-1-planarity; violated planar bounds only certify non-planarity.
///
/// Graphs on fewer than 3 vertices get no verdicts (nothing to violate).
pub fn bound_check(g: &ColoredGraph) -> Vec<BoundVerdict> {
    let v = g.n();
    let e = g.edge_count();
    let mut out = Vec::new();
    let mut push = |bound_name: BoundKind, max_edges: usize| {
        out.push(BoundVerdict {
            bound_name,
            max_edges,
            edges: e,
            violated: e > max_edges,
        });
    };
    if v >= 3 {
        push(BoundKind::Planar3v6, 3 * v - 6);
        push(BoundKind::BipartitePlanar2v4, 2 * v - 4);
        push(BoundKind::Oneplanar4v8, 4 * v - 8);
    }
    if v >= 4 {
        push(BoundKind::BipartiteOneplanarBeta, beta(v).expect("v >= 4"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn four_cycle_builds() {
        let g = ColoredGraph::new(
            4,
            vec![Color::One, Color::Two, Color::One, Color::Two],
            &[(0, 1), (1, 2), (2, 3), (3, 0)],
        )
        .unwrap();
        assert_eq!(g.edge_count(), 4);
        assert_eq!(g.degrees(), vec![2, 2, 2, 2]);
    }

    #[test]
    fn k33_has_nine_edges() {
        let g = ColoredGraph::complete_bipartite(3, 3);
        assert_eq!(g.n(), 6);
        assert_eq!(g.edge_count(), 9);
    }

    #[test]
    fn monochromatic_edge_rejected() {
        let err =
            ColoredGraph::new(3, vec![Color::One, Color::Two, Color::One], &[(0, 2)]).unwrap_err();
        assert_eq!(err, GraphError::MonochromaticEdge(0, 2, Color::One));
    }

    #[test]
    fn loops_and_duplicates_rejected() {
        let colors = vec![Color::One, Color::Two];
        assert_eq!(
            ColoredGraph::new(2, colors.clone(), &[(0, 0)]).unwrap_err(),
            GraphError::LoopEdge(0)
        );
        assert_eq!(
            ColoredGraph::new(2, colors, &[(0, 1), (1, 0)]).unwrap_err(),
            GraphError::DuplicateEdge(0, 1)
        );
    }

    #[test]
    fn beta_values() {
        assert_eq!(beta(8).unwrap(), 16);
        assert_eq!(beta(6).unwrap(), 9);
        assert_eq!(beta(7).unwrap(), 12);
        assert_eq!(beta(4).unwrap(), 4);
        assert_eq!(beta(5).unwrap(), 6);
        assert!(beta(3).is_err());
    }

    #[test]
    fn beta_never_exceeds_3v_minus_8() {
        for v in 4..=64 {
            let b = beta(v).unwrap();
            assert!(b <= 3 * v - 8);
            let deficit_case = v % 2 == 1 || v == 6;
            assert_eq!(b == 3 * v - 9, deficit_case);
        }
    }

    #[test]
    fn bound_check_k45_violates_beta() {
        let g = ColoredGraph::complete_bipartite(4, 5);
        let verdicts = bound_check(&g);
        let beta_v = verdicts
            .iter()
            .find(|b| b.bound_name == BoundKind::BipartiteOneplanarBeta)
            .unwrap();
        assert_eq!(beta_v.max_edges, 18);
        assert_eq!(beta_v.edges, 20);
        assert!(beta_v.violated);
    }

    #[test]
    fn bound_check_k44_and_c4_pass_one_planar_bounds() {
        for g in [
            ColoredGraph::complete_bipartite(4, 4),
            ColoredGraph::even_cycle(4).unwrap(),
        ] {
            for v in bound_check(&g) {
                if v.bound_name.certifies_non_one_planar() {
                    assert!(!v.violated, "{v:?} on {} vertices", g.n());
                }
            }
        }
        // C4 is planar: no verdict of any kind is violated.
        for v in bound_check(&ColoredGraph::even_cycle(4).unwrap()) {
            assert!(!v.violated);
        }
    }

    #[test]
    fn json_round_trip_is_identity() {
        let g = ColoredGraph::complete_bipartite(3, 4);
        let s = serde_json::to_string(&g).unwrap();
        let back: ColoredGraph = serde_json::from_str(&s).unwrap();
        assert_eq!(g, back);
        assert_eq!(serde_json::to_string(&back).unwrap(), s);
    }

    #[test]
    fn json_rejects_invalid() {
        let s = r#"{"n":2,"colors":[1,1],"edges":[[0,1]]}"#;
        assert!(serde_json::from_str::<ColoredGraph>(s).is_err());
    }
}
