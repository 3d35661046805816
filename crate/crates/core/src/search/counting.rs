//! Crossing-number lower bounds for complete bipartite graphs by subgraph
//! counting, and the counting refutation of 1-planarity for K_{3,7}.
//!
//! All arithmetic is exact: intermediate bounds are kept as integer
//! fractions and rounded up only where a step's conclusion is an integer.

use super::planarity::{planarity_test, PlanarityResult, SimpleGraph};
use crate::graph::{ColoredGraph, GraphError};
use serde::{Deserialize, Serialize};

/// An exact nonnegative fraction, kept as computed (no reduction) so that
/// certificates show the counting arithmetic verbatim.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Frac {
    pub num: u64,
    pub den: u64,
}

impl Frac {
    pub fn new(num: u64, den: u64) -> Frac {
        assert!(den > 0);
        Frac { num, den }
    }

    pub fn ceil(self) -> u64 {
        self.num.div_ceil(self.den)
    }

    pub fn gt_int(self, k: u64) -> bool {
        self.num > k * self.den
    }
}

pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut num: u128 = 1;
    for i in 0..k {
        num = num * (n - i) as u128 / (i + 1) as u128;
    }
    num as u64
}

/// One counting step: every drawing of K_{3,host_n} contains `copies`
/// subgraphs K_{3,base_m}, each with at least `base_lb` crossings, and each
/// crossing lies in `multiplicity` of those subgraphs.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CrStep {
    pub base_m: usize,
    pub base_lb: u64,
    pub host_n: usize,
    pub copies: u64,
    pub multiplicity: u64,
    /// `base_lb * copies / multiplicity`, before rounding.
    pub raw_bound: Frac,
    /// `ceil(raw_bound)`.
    pub resulting_lb: u64,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CrBoundDerivation {
    pub steps: Vec<CrStep>,
}

impl CrBoundDerivation {
    pub fn final_lb(&self) -> u64 {
        self.steps.last().map_or(0, |s| s.resulting_lb)
    }

    pub fn final_raw(&self) -> Frac {
        self.steps.last().map_or(Frac::new(0, 1), |s| s.raw_bound)
    }
}

/// Lift a crossing-number lower bound `cr(K_{3,m}) >= lb` to `K_{3,n}`:
/// the host contains C(n, m) copies of the base and each crossing belongs to
/// C(n-2, m-2) copies (the two crossing edges end at two distinct vertices
/// of the size-n side).
pub fn cr_counting_bound(base: (usize, u64), n: usize) -> Result<CrBoundDerivation, GraphError> {
    let (m, lb) = base;
    if m < 3 || n <= m {
        return Err(GraphError::Domain(format!(
            "counting step needs 3 <= m < n, got m={m}, n={n}"
        )));
    }
    let copies = binomial(n, m);
    let multiplicity = binomial(n - 2, m - 2);
    let raw = Frac::new(lb * copies, multiplicity);
    Ok(CrBoundDerivation {
        steps: vec![CrStep {
            base_m: m,
            base_lb: lb,
            host_n: n,
            copies,
            multiplicity,
            raw_bound: raw,
            resulting_lb: raw.ceil(),
        }],
    })
}

/// Chain counting steps through successive hosts, feeding each step's
/// rounded bound into the next.
pub fn cr_counting_chain(
    base: (usize, u64),
    hosts: &[usize],
) -> Result<CrBoundDerivation, GraphError> {
    let mut steps = Vec::new();
    let mut current = base;
    for &n in hosts {
        let one = cr_counting_bound(current, n)?;
        let step = one.steps.into_iter().next().unwrap();
        current = (n, step.resulting_lb);
        steps.push(step);
    }
    Ok(CrBoundDerivation { steps })
}

/// The structured refutation of 1-planarity for K_{3,7}:
///
/// 1. `e = 21 > 3v - 10 = 20`, so in a regular drawing every vertex has at
///    least `ceil(d/3)` incident simple edges;
/// 2. the three degree-7 vertices force at least 9 simple edges, hence at
///    most `(21 - 9) / 2 = 6` crossings;
/// 3. the counting chain from `cr(K_{3,3}) >= 1` (derived from the planarity
///    test, not assumed) gives `cr(K_{3,5}) >= ceil(10/3) = 4` and then
///    `cr(K_{3,7}) >= 84/10 > 6`. Contradiction.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct K37Certificate {
    pub vertices: usize,
    pub edges: usize,
    /// `3v - 10`; the per-vertex simple-edge floor applies because e exceeds it.
    pub simple_floor_threshold: usize,
    pub simple_floor_applies: bool,
    /// `ceil(7/3)` simple edges at each degree-7 vertex.
    pub degree7_simple_floor: usize,
    pub simple_edges_floor: usize,
    pub max_crossings: u64,
    /// Whether `cr(K_{3,3}) >= 1` was established by the planarity test.
    pub base_derived_from_planarity: bool,
    pub chain: CrBoundDerivation,
    pub lower_bound: Frac,
    pub lower_bound_ceil: u64,
    pub contradiction: bool,
    pub verdict: String,
}

pub fn refute_k37() -> K37Certificate {
    let k33 = ColoredGraph::complete_bipartite(3, 3);
    let k33_simple = SimpleGraph::new(k33.n(), k33.edges().to_vec());
    let base_nonplanar = matches!(planarity_test(&k33_simple), PlanarityResult::NonPlanar);
    assert!(base_nonplanar, "K_{{3,3}} must be non-planar");

    let vertices = 10;
    let edges = 21;
    let simple_floor_threshold = 3 * vertices - 10;
    let degree7_simple_floor = 7usize.div_ceil(3);
    let simple_edges_floor = 3 * degree7_simple_floor;
    let max_crossings = ((edges - simple_edges_floor) / 2) as u64;

    let chain = cr_counting_chain((3, 1), &[5, 7]).expect("valid chain");
    let lower_bound = chain.final_raw();
    let contradiction = lower_bound.gt_int(max_crossings);

    K37Certificate {
        vertices,
        edges,
        simple_floor_threshold,
        simple_floor_applies: edges > simple_floor_threshold,
        degree7_simple_floor,
        simple_edges_floor,
        max_crossings,
        base_derived_from_planarity: base_nonplanar,
        chain,
        lower_bound,
        lower_bound_ceil: lower_bound.ceil(),
        contradiction,
        verdict: if contradiction {
            "not_one_planar".into()
        } else {
            "inconclusive".into()
        },
    }
}
