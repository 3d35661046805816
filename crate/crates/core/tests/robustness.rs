//! Adversarial and randomized checks beyond the acceptance criteria:
//! planarity on randomized families too large for the exhaustive oracle,
//! structural analysis of mirrored drawings (which exercises the
//! decomposition on the conjugate quadrangulation), and malformed input.

use biplanar::drawing::drawing_from_json_str;
use biplanar::extremal::{gen_box, gen_odd, gen_tube, gen_two_strips};
use biplanar::search::{planarity_test, PlanarityResult, SimpleGraph};
use biplanar::structure::analyze;
use proptest::prelude::*;

/// Random planar triangulation: repeatedly place a new vertex inside a
/// triangular face, connecting it to the three corners.
fn apollonian(picks: &[usize]) -> SimpleGraph {
    let mut edges = vec![(0, 1), (0, 2), (1, 2)];
    let mut faces = vec![[0usize, 1, 2], [0, 1, 2]]; // inner and outer
    let mut n = 3;
    for &p in picks {
        // The picked face is split into three; it must not be reused.
        let f = faces.swap_remove(p % faces.len());
        faces.extend([[f[0], f[1], n], [f[1], f[2], n], [f[0], f[2], n]]);
        edges.extend([(f[0], n), (f[1], n), (f[2], n)]);
        n += 1;
    }
    SimpleGraph::new(n, edges)
}

/// Subdivide each edge of `g` the given number of times.
fn subdivide(g: &SimpleGraph, cuts: &[usize]) -> SimpleGraph {
    let mut n = g.n;
    let mut edges = Vec::new();
    for (i, &(a, b)) in g.edges.iter().enumerate() {
        let k = cuts[i % cuts.len()] % 3;
        let mut prev = a;
        for _ in 0..k {
            edges.push((prev, n));
            prev = n;
            n += 1;
        }
        edges.push((prev, b));
    }
    SimpleGraph::new(n, edges)
}

fn k5() -> SimpleGraph {
    let mut edges = Vec::new();
    for i in 0..5 {
        for j in i + 1..5 {
            edges.push((i, j));
        }
    }
    SimpleGraph::new(5, edges)
}

fn k33_uncolored() -> SimpleGraph {
    let mut edges = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            edges.push((i, 3 + j));
        }
    }
    SimpleGraph::new(6, edges)
}

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 300,
        failure_persistence: None,
        ..ProptestConfig::default()
    })]

    /// Planar by construction: triangulations with random edges removed
    /// must be certified planar.
    #[test]
    fn random_planar_graphs_certified(
        picks in proptest::collection::vec(0usize..100, 1..12),
        drop in proptest::collection::vec(0usize..64, 0..8),
    ) {
        let mut g = apollonian(&picks);
        let mut dropped: Vec<usize> = drop.iter().map(|d| d % g.edges.len()).collect();
        dropped.sort_unstable();
        dropped.dedup();
        for &d in dropped.iter().rev() {
            g.edges.remove(d);
        }
        match planarity_test(&g) {
            PlanarityResult::Planar(emb) => prop_assert!(emb.euler_check().is_ok()),
            PlanarityResult::NonPlanar => prop_assert!(false, "planar graph rejected"),
        }
    }

    /// Nonplanar by construction: subdivisions of K5 and K_{3,3} stay
    /// nonplanar no matter how the edges are subdivided.
    #[test]
    fn subdivisions_of_kuratowski_graphs_rejected(
        cuts in proptest::collection::vec(0usize..3, 1..10),
        base in 0usize..2,
    ) {
        let core = if base == 0 { k5() } else { k33_uncolored() };
        let g = subdivide(&core, &cuts);
        prop_assert!(!planarity_test(&g).is_planar());
    }
}

/// Mirroring an extremal drawing swaps left and right, so the mirrored
/// drawing's plane subgraph is the conjugate quadrangulation (grid edges
/// that were crossed are replaced by the diagonals). The whole structure
/// theory is mirror-symmetric, so the analysis must pass on it too.
#[test]
fn mirrored_extremal_drawings_analyze_cleanly() {
    for d in [
        gen_tube(2).unwrap(),
        gen_box(2, 3).unwrap(),
        gen_two_strips(2).unwrap(),
    ] {
        let m = d.mirrored();
        assert!(m.verify(5).passed);
        let report = analyze(&m);
        assert!(report.failures.is_empty(), "{:?}", report.failures);
        assert!(report.parity_conclusion);
        let dec = report.decomposition.unwrap();
        assert_eq!(
            dec.parts
                .iter()
                .filter(|p| p.kind == biplanar::structure::PartKind::Strip)
                .count(),
            2
        );
    }
    // The odd augmentation mirrors cleanly as a drawing as well.
    let m = gen_odd(11).unwrap().mirrored();
    assert!(m.verify(4).passed);
}

#[test]
fn malformed_drawing_json_rejected() {
    // Rotation map too short for the planarization.
    let err = drawing_from_json_str(
        r#"{"n":2,"colors":[1,2],"edges":[[0,1]],"crossings":[],"rotations":{"0":[[0,0]]}}"#,
    )
    .unwrap_err();
    assert!(err.contains("expected 2 rotation lists"), "{err}");
    // Rotation map with a gap in the node keys.
    let err = drawing_from_json_str(
        r#"{"n":2,"colors":[1,2],"edges":[[0,1]],"crossings":[],"rotations":{"0":[[0,0]],"2":[[0,1]]}}"#,
    )
    .unwrap_err();
    assert!(err.contains("misses node"), "{err}");
    // Dart out of range.
    let err = drawing_from_json_str(
        r#"{"n":2,"colors":[1,2],"edges":[[0,1]],"crossings":[],"rotations":{"0":[[7,0]],"1":[[0,1]]}}"#,
    )
    .unwrap_err();
    assert!(err.contains("out of range"), "{err}");
    // Crossing referencing a missing edge.
    let err = drawing_from_json_str(
        r#"{"n":2,"colors":[1,2],"edges":[[0,1]],"crossings":[[0,5]],"rotations":{"0":[[0,0]],"1":[[0,1]]}}"#,
    )
    .unwrap_err();
    assert!(err.contains("outside"), "{err}");
    // Monochromatic edge caught by the graph layer.
    let err = drawing_from_json_str(
        r#"{"n":2,"colors":[1,1],"edges":[[0,1]],"crossings":[],"rotations":{"0":[[0,0]],"1":[[0,1]]}}"#,
    )
    .unwrap_err();
    assert!(err.contains("monochromatic"), "{err}");
}

/// The drawing validator rejects rotation lists of the wrong shape.
#[test]
fn rotation_vector_shape_checked() {
    let g = biplanar::graph::ColoredGraph::even_cycle(4).unwrap();
    let err = biplanar::drawing::Drawing::new(g, vec![], vec![vec![]; 3]).unwrap_err();
    assert!(matches!(
        err,
        biplanar::drawing::DrawingError::MalformedRotation(_)
    ));
}
