//! Exhaustive desk-scale oracles: 1-planarity decision with witness
//! drawings, minimal 1-planar crossing counts, exhaustive confirmation of
//! the bipartite edge bound, and counting-based crossing-number bounds.
//!
//! The search space is matchings of vertex-disjoint edge pairs: a drawing
//! with every edge crossed at most once pairs up its crossed edges, crossing
//! pairs never share an endpoint, and any such drawing can be normalized to
//! this form. A candidate matching is accepted iff its planarization is
//! planar; the reconstructed drawing re-validates, so witnesses are sound.

pub mod canon;
pub mod counting;
pub mod planarity;

pub use canon::{canonical_form, canonical_form_classed, isomorphic, CanonKey};
pub use counting::{
    binomial, cr_counting_bound, cr_counting_chain, refute_k37, CrBoundDerivation, CrStep, Frac,
    K37Certificate,
};
pub use planarity::{planarity_test, PlanarityResult, SimpleGraph};

use crate::drawing::{Drawing, Planarization};
use crate::graph::{bound_check, BoundVerdict, Color, ColoredGraph, EdgeId};
use serde::{Deserialize, Serialize};
use std::time::{Duration, Instant};

#[derive(Clone, Debug, Default)]
pub struct SearchOptions {
    /// Largest matching size to try; defaults to `e/2` (complete search).
    pub max_crossings: Option<usize>,
    /// Wall-clock budget for the enumeration.
    pub deadline: Option<Duration>,
    /// Memoize planarity verdicts on the planarization's canonical form.
    /// Off by default: at these sizes the canonical form costs more than
    /// the planarity test it would save.
    pub memoize: bool,
}

/// A 1-planar drawing found by search: the crossing matching together with
/// the drawing reconstructed from a planar embedding of the planarization.
#[derive(Clone, Debug)]
pub struct OnePlanarWitness {
    pub matching: Vec<(EdgeId, EdgeId)>,
    pub drawing: Drawing,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub enum RefutationReason {
    /// A closed-form bound already excludes 1-planarity.
    BoundViolation { verdicts: Vec<BoundVerdict> },
    /// Every matching up to `searched_up_to` pairs was planarized and
    /// rejected. `complete` is true when that covers all of `e/2`.
    ExhaustedMatchings {
        searched_up_to: usize,
        complete: bool,
    },
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Refutation {
    pub reason: RefutationReason,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SearchTimeout {
    /// Largest matching size that was fully exhausted before the deadline.
    pub largest_exhausted: Option<usize>,
    pub in_progress: usize,
}

#[derive(Clone, Debug)]
pub enum DecideOutcome {
    Witness(Box<OnePlanarWitness>),
    Refuted(Refutation),
    Timeout(SearchTimeout),
}

impl DecideOutcome {
    pub fn witness(&self) -> Option<&OnePlanarWitness> {
        match self {
            DecideOutcome::Witness(w) => Some(w),
            _ => None,
        }
    }

    pub fn is_refuted(&self) -> bool {
        matches!(self, DecideOutcome::Refuted(_))
    }
}

/// All vertex-disjoint edge pairs `(e1 < e2)` in lexicographic order.
pub fn disjoint_edge_pairs(g: &ColoredGraph) -> Vec<(EdgeId, EdgeId)> {
    let edges = g.edges();
    let mut pairs = Vec::new();
    #[allow(clippy::needless_range_loop)]
    for a in 0..edges.len() {
        let (a1, a2) = edges[a];
        for b in a + 1..edges.len() {
            let (b1, b2) = edges[b];
            if a1 != b1 && a1 != b2 && a2 != b1 && a2 != b2 {
                pairs.push((a, b));
            }
        }
    }
    pairs
}

/// Largest edge count of a planar bipartite graph on `v` vertices.
fn bipartite_planar_max(v: usize) -> usize {
    if v >= 3 {
        2 * v - 4
    } else {
        v.saturating_sub(1)
    }
}

/// Decide whether `g` has a drawing with every edge crossed at most once.
///
/// Matchings of vertex-disjoint edge pairs are enumerated in increasing
/// size, starting at `ceil((e - (2v - 4)) / 2)` (uncrossed edges form a
/// planar bipartite graph, so smaller matchings cannot work). The first
/// matching whose planarization is planar yields a witness with minimal
/// crossing count.
pub fn decide_one_planar(g: &ColoredGraph, opts: &SearchOptions) -> DecideOutcome {
    assert!(
        g.edge_count() <= 128,
        "matching enumeration uses a 128-bit edge mask"
    );
    let violated: Vec<BoundVerdict> = bound_check(g)
        .into_iter()
        .filter(|b| b.violated && b.bound_name.certifies_non_one_planar())
        .collect();
    if !violated.is_empty() {
        return DecideOutcome::Refuted(Refutation {
            reason: RefutationReason::BoundViolation { verdicts: violated },
        });
    }
    let e = g.edge_count();
    let t_floor = (e.saturating_sub(bipartite_planar_max(g.n()))).div_ceil(2);
    let t_ceiling = e / 2;
    let t_max = opts.max_crossings.map_or(t_ceiling, |m| m.min(t_ceiling));
    let pairs = disjoint_edge_pairs(g);
    let deadline = opts.deadline.map(|d| Instant::now() + d);
    let mut memo: std::collections::HashMap<CanonKey, bool> = Default::default();

    let mut state = Enumeration {
        graph: g,
        pairs: &pairs,
        deadline,
        memoize: opts.memoize,
        memo: &mut memo,
        checked_since_clock: 0,
    };
    for t in t_floor..=t_max {
        let mut chosen = Vec::with_capacity(t);
        match state.run(t, 0, 0u128, &mut chosen) {
            RunResult::Found(witness) => return DecideOutcome::Witness(witness),
            RunResult::TimedOut => {
                return DecideOutcome::Timeout(SearchTimeout {
                    largest_exhausted: t.checked_sub(1),
                    in_progress: t,
                })
            }
            RunResult::Exhausted => {}
        }
    }
    DecideOutcome::Refuted(Refutation {
        reason: RefutationReason::ExhaustedMatchings {
            searched_up_to: t_max,
            complete: t_max == t_ceiling,
        },
    })
}

enum RunResult {
    Found(Box<OnePlanarWitness>),
    Exhausted,
    TimedOut,
}

struct Enumeration<'a> {
    graph: &'a ColoredGraph,
    pairs: &'a [(EdgeId, EdgeId)],
    deadline: Option<Instant>,
    memoize: bool,
    memo: &'a mut std::collections::HashMap<CanonKey, bool>,
    checked_since_clock: usize,
}

impl Enumeration<'_> {
    fn run(
        &mut self,
        remaining: usize,
        from: usize,
        used_edges: u128,
        chosen: &mut Vec<(EdgeId, EdgeId)>,
    ) -> RunResult {
        if remaining == 0 {
            return match self.try_matching(chosen) {
                Some(true) => {
                    let matching = chosen.clone();
                    match reconstruct_witness(self.graph, matching) {
                        Some(w) => RunResult::Found(Box::new(w)),
                        None => RunResult::Exhausted,
                    }
                }
                Some(false) => RunResult::Exhausted,
                None => RunResult::TimedOut,
            };
        }
        if self.pairs.len().saturating_sub(from) < remaining {
            return RunResult::Exhausted;
        }
        for i in from..self.pairs.len() {
            let (a, b) = self.pairs[i];
            if used_edges & (1 << a) != 0 || used_edges & (1 << b) != 0 {
                continue;
            }
            chosen.push((a, b));
            let res = self.run(
                remaining - 1,
                i + 1,
                used_edges | (1 << a) | (1 << b),
                chosen,
            );
            chosen.pop();
            match res {
                RunResult::Exhausted => {}
                other => return other,
            }
        }
        RunResult::Exhausted
    }

    /// Planarity of the planarization; None on deadline expiry.
    fn try_matching(&mut self, matching: &[(EdgeId, EdgeId)]) -> Option<bool> {
        self.checked_since_clock += 1;
        if self.checked_since_clock >= 512 {
            self.checked_since_clock = 0;
            if let Some(deadline) = self.deadline {
                if Instant::now() >= deadline {
                    return None;
                }
            }
        } else if self.checked_since_clock == 1 {
            // Always honor an already-expired deadline on the first probe.
            if let Some(deadline) = self.deadline {
                if Instant::now() >= deadline {
                    return None;
                }
            }
        }
        let plan = Planarization::build(self.graph, matching);
        let sg = SimpleGraph::new(plan.node_count, plan.segment_endpoints());
        if self.memoize {
            let key = canonical_form(&sg);
            if let Some(&hit) = self.memo.get(&key) {
                return Some(hit);
            }
            let planar = planarity_test(&sg).is_planar();
            self.memo.insert(key, planar);
            Some(planar)
        } else {
            Some(planarity_test(&sg).is_planar())
        }
    }
}

/// Rebuild a drawing from a planar embedding of the planarization. At the
/// minimal matching size every dummy alternates automatically (otherwise a
/// smaller matching would already have been planar), so this only fails on
/// non-minimal calls; a failure is treated as a rejection.
fn reconstruct_witness(
    g: &ColoredGraph,
    matching: Vec<(EdgeId, EdgeId)>,
) -> Option<OnePlanarWitness> {
    let plan = Planarization::build(g, &matching);
    let sg = SimpleGraph::new(plan.node_count, plan.segment_endpoints());
    let PlanarityResult::Planar(emb) = planarity_test(&sg) else {
        return None;
    };
    match Drawing::new(g.clone(), matching.clone(), emb.rotations) {
        Ok(drawing) => Some(OnePlanarWitness { matching, drawing }),
        Err(crate::drawing::DrawingError::NonAlternatingDummy(_)) => None,
        Err(other) => panic!("witness reconstruction failed structurally: {other}"),
    }
}

#[derive(Clone, Debug)]
pub enum MinCrossings {
    Crossings(usize, Box<OnePlanarWitness>),
    NotOnePlanar(Refutation),
    Timeout(SearchTimeout),
}

/// The minimal number of crossing pairs over all drawings of `g` in which
/// every edge is crossed at most once. This equals the crossing number only
/// when the latter is attained by such a drawing, so reports label it the
/// "1-planar crossing number".
pub fn min_one_planar_crossings(g: &ColoredGraph, opts: &SearchOptions) -> MinCrossings {
    match decide_one_planar(g, opts) {
        DecideOutcome::Witness(w) => MinCrossings::Crossings(w.matching.len(), w),
        DecideOutcome::Refuted(r) => MinCrossings::NotOnePlanar(r),
        DecideOutcome::Timeout(t) => MinCrossings::Timeout(t),
    }
}

/// Log of an exhaustive beta confirmation.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct BetaSearchLog {
    /// Per edge count m (descending): how many canonical graphs were tried
    /// and how they were refuted.
    pub levels: Vec<BetaLevelLog>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BetaLevelLog {
    pub edge_count: usize,
    pub candidates: usize,
    pub bound_refuted: usize,
    pub search_refuted: usize,
}

#[derive(Clone, Debug)]
pub struct BetaSearchOutcome {
    pub v: usize,
    pub beta: usize,
    pub witness_graph: ColoredGraph,
    pub witness: OnePlanarWitness,
    pub log: BetaSearchLog,
}

#[derive(Clone, Debug)]
pub enum BetaSearchResult {
    Done(Box<BetaSearchOutcome>),
    Timeout {
        partial_log: BetaSearchLog,
        timeout: SearchTimeout,
    },
}

/// Confirm the edge bound exhaustively: for m descending from the bipartite
/// maximum, enumerate bipartite graphs on `v` vertices with m edges up to
/// isomorphism (over all bipartitions) and search each for a witness. The
/// first m admitting one is beta(v).
pub fn beta_exhaustive(v: usize, opts: &SearchOptions) -> BetaSearchResult {
    assert!(v >= 4, "beta search needs v >= 4");
    let max_m = (v / 2) * v.div_ceil(2);
    let mut log = BetaSearchLog::default();
    for m in (1..=max_m).rev() {
        let reps = bipartite_representatives(v, m);
        let mut level = BetaLevelLog {
            edge_count: m,
            candidates: reps.len(),
            bound_refuted: 0,
            search_refuted: 0,
        };
        for g in reps {
            match decide_one_planar(&g, opts) {
                DecideOutcome::Witness(w) => {
                    log.levels.push(level);
                    return BetaSearchResult::Done(Box::new(BetaSearchOutcome {
                        v,
                        beta: m,
                        witness_graph: g,
                        witness: *w,
                        log,
                    }));
                }
                DecideOutcome::Refuted(r) => match r.reason {
                    RefutationReason::BoundViolation { .. } => level.bound_refuted += 1,
                    RefutationReason::ExhaustedMatchings { .. } => level.search_refuted += 1,
                },
                DecideOutcome::Timeout(t) => {
                    log.levels.push(level);
                    return BetaSearchResult::Timeout {
                        partial_log: log,
                        timeout: t,
                    };
                }
            }
        }
        log.levels.push(level);
    }
    unreachable!("every graph with one edge is 1-planar, so some m succeeds")
}

/// All bipartite graphs on `v` vertices with `m` edges, one representative
/// per isomorphism class (deduplicated over all bipartitions).
pub fn bipartite_representatives(v: usize, m: usize) -> Vec<ColoredGraph> {
    let mut seen: std::collections::BTreeSet<CanonKey> = Default::default();
    let mut reps = Vec::new();
    for a in 1..=v / 2 {
        let b = v - a;
        if a * b < m {
            continue;
        }
        let grid: Vec<(usize, usize)> = (0..a)
            .flat_map(|i| (0..b).map(move |j| (i, a + j)))
            .collect();
        let mut colors = vec![Color::One; a];
        colors.extend(std::iter::repeat_n(Color::Two, b));
        let mut selector: Vec<usize> = (0..m).collect();
        loop {
            let edges: Vec<(usize, usize)> = selector.iter().map(|&i| grid[i]).collect();
            let key = canonical_form(&SimpleGraph::new(v, edges.clone()));
            if seen.insert(key) {
                reps.push(
                    ColoredGraph::new(v, colors.clone(), &edges).expect("grid subsets are valid"),
                );
            }
            if !next_combination(&mut selector, grid.len()) {
                break;
            }
        }
    }
    reps
}

/// Advance a sorted index combination; false when done.
fn next_combination(sel: &mut [usize], n: usize) -> bool {
    let m = sel.len();
    if m == 0 {
        return false;
    }
    let mut i = m;
    while i > 0 {
        i -= 1;
        if sel[i] < n - (m - i) {
            sel[i] += 1;
            for j in i + 1..m {
                sel[j] = sel[j - 1] + 1;
            }
            return true;
        }
    }
    false
}
