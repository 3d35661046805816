//! Python bindings: the graph and drawing types plus the generator,
//! verification, analysis and search entry points. Structured reports are
//! returned as JSON strings (parse with `json.loads`).

use biplanar::drawing::{self, Drawing as CoreDrawing};
use biplanar::extremal;
use biplanar::graph::{Color, ColoredGraph};
use biplanar::search::{self, DecideOutcome, SearchOptions};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use std::collections::BTreeSet;
use std::time::Duration;

fn err<E: std::fmt::Display>(e: E) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn json_of<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("reports serialize")
}

/// A loopless simple bipartite graph with an explicit 2-coloring.
#[pyclass(name = "Graph", from_py_object)]
#[derive(Clone)]
struct PyGraph {
    inner: ColoredGraph,
}

#[pymethods]
impl PyGraph {
    /// Graph(n, colors, edges): colors are 1 or 2 per vertex, edges are
    /// (u, v) pairs. Edge ids follow the input order.
    #[new]
    fn new(n: usize, colors: Vec<u8>, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        let colors: Result<Vec<Color>, _> = colors.into_iter().map(Color::try_from).collect();
        let inner = ColoredGraph::new(n, colors.map_err(err)?, &edges).map_err(err)?;
        Ok(PyGraph { inner })
    }

    #[staticmethod]
    fn complete_bipartite(a: usize, b: usize) -> PyGraph {
        PyGraph {
            inner: ColoredGraph::complete_bipartite(a, b),
        }
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<PyGraph> {
        Ok(PyGraph {
            inner: serde_json::from_str(text).map_err(err)?,
        })
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&self.inner).expect("graphs serialize")
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn edge_count(&self) -> usize {
        self.inner.edge_count()
    }

    #[getter]
    fn colors(&self) -> Vec<u8> {
        self.inner.colors().iter().map(|&c| u8::from(c)).collect()
    }

    #[getter]
    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().to_vec()
    }

    fn degrees(&self) -> Vec<usize> {
        self.inner.degrees()
    }

    /// All applicable closed-form edge bounds, as JSON.
    fn bound_check(&self) -> String {
        json_of(&biplanar::graph::bound_check(&self.inner))
    }

    fn __repr__(&self) -> String {
        format!(
            "Graph(n={}, edges={})",
            self.inner.n(),
            self.inner.edge_count()
        )
    }
}

/// A validated combinatorial drawing: graph, crossing pairs, and the
/// rotation system of the planarization.
#[pyclass(name = "Drawing", from_py_object)]
#[derive(Clone)]
struct PyDrawing {
    inner: CoreDrawing,
}

#[pymethods]
impl PyDrawing {
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<PyDrawing> {
        Ok(PyDrawing {
            inner: drawing::drawing_from_json_str(text).map_err(err)?,
        })
    }

    fn to_json(&self) -> String {
        self.inner.to_json_string()
    }

    #[getter]
    fn graph(&self) -> PyGraph {
        PyGraph {
            inner: self.inner.graph().clone(),
        }
    }

    #[getter]
    fn crossings(&self) -> Vec<(usize, usize)> {
        self.inner.crossings().to_vec()
    }

    #[getter]
    fn crossing_count(&self) -> usize {
        self.inner.crossing_count()
    }

    /// Planarization size: (nodes, segments).
    fn planarization_size(&self) -> (usize, usize) {
        let plan = self.inner.planarization();
        (plan.node_count, plan.segments.len())
    }

    /// Per-edge classification: "simple", "left" or "right".
    fn classify(&self) -> Vec<String> {
        self.inner
            .classify_edges()
            .classes
            .iter()
            .map(|c| format!("{c:?}").to_lowercase())
            .collect()
    }

    /// Verification report for the drawing conditions, as JSON. Level 5
    /// adds the regularity test.
    #[pyo3(signature = (level = 4))]
    fn verify(&self, level: u8) -> PyResult<String> {
        if !(1..=5).contains(&level) {
            return Err(err("level must be between 1 and 5"));
        }
        Ok(json_of(&self.inner.verify(level)))
    }

    /// Per-vertex census diagnostics, as JSON.
    fn census(&self) -> String {
        json_of(&self.inner.census_check())
    }

    /// Full structural analysis (quadrangulation, decomposition, corner
    /// census, forbidden-pattern scan), as JSON.
    fn analyze(&self) -> String {
        json_of(&biplanar::structure::analyze(&self.inner))
    }

    fn mirrored(&self) -> PyDrawing {
        PyDrawing {
            inner: self.inner.mirrored(),
        }
    }

    fn delete_vertices(&self, dead: Vec<usize>) -> PyResult<PyDrawing> {
        let dead: BTreeSet<usize> = dead.into_iter().collect();
        Ok(PyDrawing {
            inner: self.inner.delete_vertices(&dead).map_err(err)?,
        })
    }

    fn to_svg(&self) -> String {
        biplanar::export::drawing_to_svg(&self.inner)
    }

    fn to_dot(&self) -> String {
        biplanar::export::drawing_to_dot(&self.inner)
    }

    fn __repr__(&self) -> String {
        format!(
            "Drawing(n={}, edges={}, crossings={})",
            self.inner.graph().n(),
            self.inner.graph().edge_count(),
            self.inner.crossing_count()
        )
    }
}

/// beta(v): the maximal edge count of a bipartite 1-planar graph.
#[pyfunction]
fn beta(v: usize) -> PyResult<usize> {
    biplanar::graph::beta(v).map_err(err)
}

#[pyfunction]
fn gen_tube(k: usize) -> PyResult<PyDrawing> {
    Ok(PyDrawing {
        inner: extremal::gen_tube(k).map_err(err)?,
    })
}

#[pyfunction]
fn gen_box(k: usize, n: usize) -> PyResult<PyDrawing> {
    Ok(PyDrawing {
        inner: extremal::gen_box(k, n).map_err(err)?,
    })
}

#[pyfunction]
fn gen_two_strips(k: usize) -> PyResult<PyDrawing> {
    Ok(PyDrawing {
        inner: extremal::gen_two_strips(k).map_err(err)?,
    })
}

#[pyfunction]
fn gen_odd(v: usize) -> PyResult<PyDrawing> {
    Ok(PyDrawing {
        inner: extremal::gen_odd(v).map_err(err)?,
    })
}

#[pyfunction]
fn gen_complete_bipartite(a: usize, b: usize) -> PyResult<PyDrawing> {
    Ok(PyDrawing {
        inner: extremal::gen_complete_bipartite(a, b).map_err(err)?,
    })
}

#[pyfunction]
fn plane_cycle(k: usize) -> PyResult<PyDrawing> {
    Ok(PyDrawing {
        inner: extremal::plane_cycle(k).map_err(err)?,
    })
}

/// A drawing attaining beta(v) edges; returns (family_name, Drawing).
#[pyfunction]
fn beta_witness(v: usize) -> PyResult<(String, PyDrawing)> {
    let (family, d) = extremal::beta_witness(v).map_err(err)?;
    Ok((format!("{family:?}"), PyDrawing { inner: d }))
}

/// Decide 1-planarity by exhaustive matching search. Returns a JSON
/// certificate; witnesses embed the drawing, refutations name the violated
/// bound or the exhausted search space.
#[pyfunction]
#[pyo3(signature = (graph, max_crossings = None, timeout = None, memo = false))]
fn decide_one_planar(
    graph: &PyGraph,
    max_crossings: Option<usize>,
    timeout: Option<f64>,
    memo: bool,
) -> String {
    let opts = SearchOptions {
        max_crossings,
        deadline: timeout.map(Duration::from_secs_f64),
        memoize: memo,
    };
    match search::decide_one_planar(&graph.inner, &opts) {
        DecideOutcome::Witness(w) => serde_json::to_string_pretty(&serde_json::json!({
            "verdict": "one_planar",
            "crossings": w.matching.len(),
            "matching": w.matching,
            "drawing": serde_json::from_str::<serde_json::Value>(&w.drawing.to_json_string()).unwrap(),
        }))
        .unwrap(),
        DecideOutcome::Refuted(r) => serde_json::to_string_pretty(&serde_json::json!({
            "verdict": "not_one_planar",
            "refutation": serde_json::to_value(&r).unwrap(),
        }))
        .unwrap(),
        DecideOutcome::Timeout(t) => serde_json::to_string_pretty(&serde_json::json!({
            "verdict": "timeout",
            "timeout": serde_json::to_value(&t).unwrap(),
        }))
        .unwrap(),
    }
}

/// Exhaustive confirmation of beta(v) (practical for v <= 8); JSON report.
#[pyfunction]
#[pyo3(signature = (v, timeout = None))]
fn beta_exhaustive(v: usize, timeout: Option<f64>) -> PyResult<String> {
    let opts = SearchOptions {
        deadline: timeout.map(Duration::from_secs_f64),
        ..Default::default()
    };
    match search::beta_exhaustive(v, &opts) {
        search::BetaSearchResult::Done(o) => Ok(json_of(&serde_json::json!({
            "v": o.v,
            "beta": o.beta,
            "witness_graph": serde_json::to_value(&o.witness_graph).unwrap(),
            "log": serde_json::to_value(&o.log).unwrap(),
        }))),
        search::BetaSearchResult::Timeout { .. } => Err(err("beta search timed out")),
    }
}

/// Chain counting lower bounds for cr(K_{3,n}); JSON derivation.
#[pyfunction]
fn cr_counting_chain(base_m: usize, base_lb: u64, hosts: Vec<usize>) -> PyResult<String> {
    let d = search::cr_counting_chain((base_m, base_lb), &hosts).map_err(err)?;
    Ok(json_of(&d))
}

/// The structured counting refutation of 1-planarity for K_{3,7}; JSON.
#[pyfunction]
fn refute_k37() -> String {
    json_of(&search::refute_k37())
}

#[pymodule]
fn biplanar_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_class::<PyDrawing>()?;
    m.add_function(wrap_pyfunction!(beta, m)?)?;
    m.add_function(wrap_pyfunction!(gen_tube, m)?)?;
    m.add_function(wrap_pyfunction!(gen_box, m)?)?;
    m.add_function(wrap_pyfunction!(gen_two_strips, m)?)?;
    m.add_function(wrap_pyfunction!(gen_odd, m)?)?;
    m.add_function(wrap_pyfunction!(gen_complete_bipartite, m)?)?;
    m.add_function(wrap_pyfunction!(plane_cycle, m)?)?;
    m.add_function(wrap_pyfunction!(beta_witness, m)?)?;
    m.add_function(wrap_pyfunction!(decide_one_planar, m)?)?;
    m.add_function(wrap_pyfunction!(beta_exhaustive, m)?)?;
    m.add_function(wrap_pyfunction!(cr_counting_chain, m)?)?;
    m.add_function(wrap_pyfunction!(refute_k37, m)?)?;
    Ok(())
}
