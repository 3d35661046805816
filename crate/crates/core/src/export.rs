//! Presentation-only exports: SVG via a barycentric layout of the
//! planarization, and Graphviz dot. The layout carries no correctness
//! weight; the JSON schemas on the drawing types are the contract.

use crate::drawing::{Drawing, EdgeClass, EdgeSegments};
use crate::embed::Dart;
use crate::structure::PartsDecomposition;

/// Straight-line coordinates for the planarization: the largest face is
/// pinned as a convex polygon and interior nodes iterate to the barycenter
/// of their neighbors. Deterministic (fixed iteration count, no randomness).
pub fn layout(d: &Drawing) -> Vec<(f64, f64)> {
    let emb = d.embedding();
    let n = emb.n;
    let faces = d.faces();
    let outer = faces
        .iter()
        .enumerate()
        .max_by_key(|(i, f)| (f.len(), usize::MAX - i))
        .map(|(_, f)| f.clone())
        .unwrap_or_default();
    let mut fixed = vec![false; n];
    let mut pos = vec![(0.0f64, 0.0f64); n];
    let outer_nodes: Vec<usize> = outer.iter().map(|&dart| emb.dart_tail(dart)).collect();
    let m = outer_nodes.len().max(1);
    for (i, &v) in outer_nodes.iter().enumerate() {
        let angle = 2.0 * std::f64::consts::PI * i as f64 / m as f64;
        pos[v] = (angle.cos(), angle.sin());
        fixed[v] = true;
    }
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in &emb.edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    for _ in 0..400 {
        for v in 0..n {
            if fixed[v] || adj[v].is_empty() {
                continue;
            }
            let (mut x, mut y) = (0.0, 0.0);
            for &w in &adj[v] {
                x += pos[w].0;
                y += pos[w].1;
            }
            let k = adj[v].len() as f64;
            pos[v] = (x / k, y / k);
        }
    }
    pos
}

fn fmt(v: f64) -> String {
    format!("{:.4}", v)
}

/// Render the drawing as SVG. Original vertices are circles filled by
/// color class, dummy crossing points are small diamonds; edges are styled
/// by classification (simple solid, right dashed, left dotted).
pub fn drawing_to_svg(d: &Drawing) -> String {
    svg_with_part_colors(d, None)
}

/// Render with faces tinted by decomposition part (strips and rings in
/// distinct layers). The decomposition must come from this drawing's G';
/// part faces are indexed against the G' face list, which coincides with
/// the planarization faces of a crossing-free drawing.
pub fn gprime_parts_svg(gp_drawing: &Drawing, decomp: &PartsDecomposition) -> String {
    svg_with_part_colors(gp_drawing, Some(decomp))
}

fn svg_with_part_colors(d: &Drawing, decomp: Option<&PartsDecomposition>) -> String {
    let emb = d.embedding();
    let pos = layout(d);
    let scale = 240.0;
    let off = 260.0;
    let px = |p: (f64, f64)| (off + scale * p.0, off + scale * p.1);
    let cls = d.classify_edges();
    let mut out = String::new();
    out.push_str(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 520 520\" width=\"520\" height=\"520\">\n",
    );
    out.push_str("<rect width=\"520\" height=\"520\" fill=\"white\"/>\n");
    if let Some(decomp) = decomp {
        let palette = [
            "#dbeafe", "#dcfce7", "#fef9c3", "#fde2e2", "#ede9fe", "#f0fdfa",
        ];
        let faces = d.faces();
        for (pi, part) in decomp.parts.iter().enumerate() {
            let fill = palette[pi % palette.len()];
            out.push_str(&format!(
                "<g data-part=\"{pi}\" data-kind=\"{:?}\">\n",
                part.kind
            ));
            for &fi in &part.faces {
                let pts: Vec<String> = faces[fi]
                    .iter()
                    .map(|&dart: &Dart| {
                        let (x, y) = px(pos[emb.dart_tail(dart)]);
                        format!("{},{}", fmt(x), fmt(y))
                    })
                    .collect();
                out.push_str(&format!(
                    "<polygon points=\"{}\" fill=\"{fill}\" stroke=\"none\"/>\n",
                    pts.join(" ")
                ));
            }
            out.push_str("</g>\n");
        }
    }
    for (seg_idx, seg) in d.planarization().segments.iter().enumerate() {
        let _ = seg_idx;
        let (x1, y1) = px(pos[seg.tail]);
        let (x2, y2) = px(pos[seg.head]);
        let style = match cls.classes[seg.edge] {
            EdgeClass::Simple => "stroke=\"#1f2937\"",
            EdgeClass::Right => "stroke=\"#b45309\" stroke-dasharray=\"7 3\"",
            EdgeClass::Left => "stroke=\"#1d4ed8\" stroke-dasharray=\"2 3\"",
        };
        out.push_str(&format!(
            "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" {style} stroke-width=\"1.5\"/>\n",
            fmt(x1),
            fmt(y1),
            fmt(x2),
            fmt(y2)
        ));
    }
    let n = d.graph().n();
    #[allow(clippy::needless_range_loop)]
    for v in 0..emb.n {
        let (x, y) = px(pos[v]);
        if v < n {
            let fill = match d.graph().color(v) {
                crate::graph::Color::One => "#111827",
                crate::graph::Color::Two => "#f9fafb",
            };
            out.push_str(&format!(
                "<circle cx=\"{}\" cy=\"{}\" r=\"7\" fill=\"{fill}\" stroke=\"#111827\"/>\n",
                fmt(x),
                fmt(y)
            ));
            out.push_str(&format!(
                "<text x=\"{}\" y=\"{}\" font-size=\"9\" text-anchor=\"middle\" dy=\"3\" fill=\"{}\">{v}</text>\n",
                fmt(x),
                fmt(y),
                if d.graph().color(v) == crate::graph::Color::One { "#f9fafb" } else { "#111827" },
            ));
        } else {
            out.push_str(&format!(
                "<rect x=\"{}\" y=\"{}\" width=\"6\" height=\"6\" transform=\"rotate(45 {} {})\" fill=\"#dc2626\"/>\n",
                fmt(x - 3.0),
                fmt(y - 3.0),
                fmt(x),
                fmt(y)
            ));
        }
    }
    out.push_str("</svg>\n");
    out
}

/// Graphviz dot: the abstract graph with edge classes as attributes.
pub fn drawing_to_dot(d: &Drawing) -> String {
    let cls = d.classify_edges();
    let mut out = String::from("graph drawing {\n");
    for v in 0..d.graph().n() {
        let shade = match d.graph().color(v) {
            crate::graph::Color::One => "filled",
            crate::graph::Color::Two => "solid",
        };
        out.push_str(&format!("  {v} [style={shade}];\n"));
    }
    for (eid, &(a, b)) in d.graph().edges().iter().enumerate() {
        let style = match cls.classes[eid] {
            EdgeClass::Simple => "solid",
            EdgeClass::Right => "dashed",
            EdgeClass::Left => "dotted",
        };
        let crossing = d
            .crossing_of_edge(eid)
            .map(|c| format!(", label=\"x{c}\""))
            .unwrap_or_default();
        out.push_str(&format!("  {a} -- {b} [style={style}{crossing}];\n"));
    }
    out.push_str("}\n");
    out
}

/// Sanity marker used by tests: whether an edge is drawn split in SVG.
pub fn segment_count(d: &Drawing, eid: usize) -> usize {
    match d.planarization().edge_segments[eid] {
        EdgeSegments::Whole(_) => 1,
        EdgeSegments::Split { .. } => 2,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extremal::{gen_tube, plane_cycle};

    #[test]
    fn svg_is_deterministic_and_well_formed() {
        let d = gen_tube(1).unwrap();
        let a = drawing_to_svg(&d);
        let b = drawing_to_svg(&d);
        assert_eq!(a, b);
        assert!(a.starts_with("<svg"));
        assert!(a.ends_with("</svg>\n"));
        assert_eq!(a.matches("<circle").count(), 8);
        assert_eq!(a.matches("<rect x=").count(), 4); // dummies
    }

    #[test]
    fn parts_svg_has_layers() {
        let d = gen_tube(1).unwrap();
        let gp = d.derive_gprime();
        let dec = crate::structure::decompose(&gp).unwrap();
        let svg = gprime_parts_svg(&gp.drawing, &dec);
        assert_eq!(svg.matches("data-part=").count(), 3);
    }

    #[test]
    fn dot_mentions_every_edge() {
        let d = plane_cycle(6).unwrap();
        let dot = drawing_to_dot(&d);
        assert_eq!(dot.matches(" -- ").count(), 6);
    }
}
