//! Python bindings: `Graph`, `TreeDecomposition` and the main searches.

use std::collections::BTreeMap;

use hadwiger_core::harness::{evaluate as evaluate_graph, VerdictRecord};
use hadwiger_core::treedec::{exact_treewidth as exact_tw, td_format};
use hadwiger_core::{self as core, Error, Generator, MinorCertificate, RootedTree, SearchBudget, Strategy, VertexSet};
use pyo3::exceptions::{PyIOError, PyValueError};
use pyo3::prelude::*;

fn to_py(e: Error) -> PyErr {
    match e {
        Error::Io(e) => PyIOError::new_err(e.to_string()),
        other => PyValueError::new_err(other.to_string()),
    }
}

fn parse_strategy(s: &str) -> PyResult<Strategy> {
    s.parse().map_err(to_py)
}

fn vertex_set(ids: &[usize]) -> PyResult<VertexSet> {
    if let Some(&v) = ids.iter().find(|&&v| v >= core::graph::MAX_VERTICES) {
        return Err(PyValueError::new_err(format!("vertex {v} out of range")));
    }
    Ok(ids.iter().copied().collect())
}

#[pyclass(name = "Graph", module = "hadwiger", eq, from_py_object)]
#[derive(Clone, PartialEq)]
struct PyGraph {
    inner: core::Graph,
}

#[pymethods]
impl PyGraph {
    #[new]
    #[pyo3(signature = (n, edges = Vec::new()))]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        Ok(PyGraph {
            inner: core::Graph::from_edge_list(n, &edges).map_err(to_py)?,
        })
    }

    #[staticmethod]
    fn from_graph6(text: &str) -> PyResult<Self> {
        Ok(PyGraph {
            inner: core::Graph::from_graph6(text).map_err(to_py)?,
        })
    }

    /// Named family member: complete, cycle, path, empty or petersen.
    #[staticmethod]
    #[pyo3(signature = (name, k = 0))]
    fn generate(name: &str, k: usize) -> PyResult<Self> {
        let g: Generator = name.parse().map_err(to_py)?;
        Ok(PyGraph {
            inner: g.build(k).map_err(to_py)?,
        })
    }

    fn to_graph6(&self) -> PyResult<String> {
        self.inner.to_graph6().map_err(to_py)
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    fn edge_count(&self) -> usize {
        self.inner.edge_count()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges()
    }

    fn add_edge(&mut self, u: usize, v: usize) -> PyResult<()> {
        self.inner.add_edge(u, v).map_err(to_py)
    }

    fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.inner.n() && v < self.inner.n() && self.inner.has_edge(u, v)
    }

    fn neighbors(&self, v: usize) -> PyResult<Vec<usize>> {
        self.check(v)?;
        Ok(self.inner.neighbors(v).to_vec())
    }

    fn degree(&self, v: usize) -> PyResult<usize> {
        self.check(v)?;
        Ok(self.inner.degree(v))
    }

    fn is_connected(&self) -> bool {
        self.inner.is_connected()
    }

    fn __len__(&self) -> usize {
        self.inner.n()
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, m={})", self.inner.n(), self.inner.edge_count())
    }
}

impl PyGraph {
    fn check(&self, v: usize) -> PyResult<()> {
        if v >= self.inner.n() {
            return Err(to_py(Error::OutOfRange {
                vertex: v,
                n: self.inner.n(),
            }));
        }
        Ok(())
    }
}

#[pyclass(name = "TreeDecomposition", module = "hadwiger", from_py_object)]
#[derive(Clone)]
struct PyTreeDecomposition {
    inner: core::TreeDecomposition,
}

#[pymethods]
impl PyTreeDecomposition {
    /// `parents[t]` is the parent node of `t`, `None` for the root.
    #[new]
    fn new(parents: Vec<Option<usize>>, bags: Vec<Vec<usize>>, vertex_count: usize) -> PyResult<Self> {
        let tree = RootedTree::from_parents(parents).map_err(to_py)?;
        let bags = bags.iter().map(|b| vertex_set(b)).collect::<PyResult<Vec<_>>>()?;
        Ok(PyTreeDecomposition {
            inner: core::TreeDecomposition::new(tree, bags, vertex_count).map_err(to_py)?,
        })
    }

    /// Parses PACE `.td` text.
    #[staticmethod]
    fn from_td(text: &str) -> PyResult<Self> {
        Ok(PyTreeDecomposition {
            inner: td_format::decode(text).map_err(to_py)?,
        })
    }

    fn to_td(&self) -> String {
        td_format::encode(&self.inner)
    }

    #[getter]
    fn parents(&self) -> Vec<Option<usize>> {
        self.inner.tree().parents().to_vec()
    }

    #[getter]
    fn bags(&self) -> Vec<Vec<usize>> {
        self.inner.bags().iter().map(|b| b.to_vec()).collect()
    }

    #[getter]
    fn vertex_count(&self) -> usize {
        self.inner.vertex_count()
    }

    fn bag_width(&self) -> usize {
        self.inner.bag_width()
    }

    /// `(bag_width, chain_width, chain_width_exact)`.
    fn width(&self) -> (usize, usize, bool) {
        let w = core::width(&self.inner);
        (w.bag_width, w.chain_width, w.chain_width_exact)
    }

    /// Maps "W1", "W2", "W3" to `None` on success or a witness description.
    fn verify(&self, graph: &PyGraph) -> BTreeMap<&'static str, Option<String>> {
        let report = core::verify_decomposition(&graph.inner, &self.inner);
        let text = |passed: bool, s: String| if passed { None } else { Some(s) };
        BTreeMap::from([
            ("W1", text(report.w1.passed(), report.w1.to_string())),
            ("W2", text(report.w2.passed(), report.w2.to_string())),
            ("W3", text(report.w3.passed(), report.w3.to_string())),
        ])
    }

    fn simplify(&self) -> Self {
        PyTreeDecomposition {
            inner: self.inner.simplify(),
        }
    }

    fn __repr__(&self) -> String {
        format!(
            "TreeDecomposition(nodes={}, bag_width={})",
            self.inner.tree().len(),
            self.inner.bag_width()
        )
    }
}

#[pyfunction]
#[pyo3(signature = (graph, strategy = "min-fill"))]
fn decompose(graph: &PyGraph, strategy: &str) -> PyResult<PyTreeDecomposition> {
    let td = core::decompose(&graph.inner, parse_strategy(strategy)?).map_err(to_py)?;
    Ok(PyTreeDecomposition { inner: td })
}

/// Treewidth and an optimal elimination order.
#[pyfunction]
fn exact_treewidth(graph: &PyGraph) -> PyResult<(i32, Vec<usize>)> {
    exact_tw(&graph.inner).map_err(to_py)
}

#[pyfunction]
fn color_by_decomposition(graph: &PyGraph, td: &PyTreeDecomposition) -> PyResult<Vec<usize>> {
    Ok(core::color_by_decomposition(&graph.inner, &td.inner)
        .map_err(to_py)?
        .colors)
}

/// `(chi, colors)` with an optimal proper coloring.
#[pyfunction]
fn chromatic_number(graph: &PyGraph) -> PyResult<(usize, Vec<usize>)> {
    let (chi, c) = core::chromatic_number(&graph.inner).map_err(to_py)?;
    Ok((chi, c.colors))
}

/// Branch sets of a `K_k` minor, or `None`.
#[pyfunction]
fn find_clique_minor(graph: &PyGraph, k: usize) -> PyResult<Option<Vec<Vec<usize>>>> {
    let found = core::find_clique_minor(&graph.inner, k).map_err(to_py)?;
    Ok(found.map(|c| c.parts.iter().map(|p| p.to_vec()).collect()))
}

/// `None` when the branch sets form a `K_k` minor, else the violated clause.
#[pyfunction]
fn verify_clique_minor(graph: &PyGraph, parts: Vec<Vec<usize>>) -> PyResult<Option<String>> {
    let parts = parts.iter().map(|p| vertex_set(p)).collect::<PyResult<Vec<_>>>()?;
    let verdict = core::verify_clique_minor(&graph.inner, &MinorCertificate::new(parts));
    Ok(if verdict.is_valid() {
        None
    } else {
        Some(verdict.to_string())
    })
}

/// `(branch_vertices, {(i, j): path})` for a `K_k` subdivision, or `None`.
#[pyfunction]
#[allow(clippy::type_complexity)]
fn find_subdivision(graph: &PyGraph, k: usize) -> PyResult<Option<(Vec<usize>, BTreeMap<(usize, usize), Vec<usize>>)>> {
    let found = core::find_subdivision(&graph.inner, k).map_err(to_py)?;
    Ok(found.map(|s| (s.branch_vertices, s.paths)))
}

#[pyfunction]
fn hadwiger_number(graph: &PyGraph) -> PyResult<usize> {
    core::hadwiger_number(&graph.inner).map_err(to_py)
}

fn record_to_dict<'py>(py: Python<'py>, rec: &VerdictRecord) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(rec).map_err(|e| PyValueError::new_err(e.to_string()))?;
    py.import("json")?.call_method1("loads", (text,))
}

/// The per-graph verdict record as a dict; `budget` caps each minor search.
#[pyfunction]
#[pyo3(signature = (graph, budget = None))]
fn evaluate<'py>(py: Python<'py>, graph: &PyGraph, budget: Option<u64>) -> PyResult<Bound<'py, PyAny>> {
    let budget = budget.map_or_else(|| SearchBudget::default_for(&graph.inner), SearchBudget::nodes);
    let rec = evaluate_graph(&graph.inner, budget).map_err(to_py)?;
    record_to_dict(py, &rec)
}

/// One representative per isomorphism class on `n` vertices.
#[pyfunction]
fn enumerate_graphs(n: usize) -> PyResult<Vec<PyGraph>> {
    let graphs = core::enumerate_graphs(n).map_err(to_py)?;
    Ok(graphs.into_iter().map(|inner| PyGraph { inner }).collect())
}

#[pyfunction]
fn canonical_form(graph: &PyGraph) -> PyResult<PyGraph> {
    Ok(PyGraph {
        inner: core::graph::canonical_form(&graph.inner).map_err(to_py)?,
    })
}

#[pymodule]
fn hadwiger(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_class::<PyTreeDecomposition>()?;
    m.add_function(wrap_pyfunction!(decompose, m)?)?;
    m.add_function(wrap_pyfunction!(exact_treewidth, m)?)?;
    m.add_function(wrap_pyfunction!(color_by_decomposition, m)?)?;
    m.add_function(wrap_pyfunction!(chromatic_number, m)?)?;
    m.add_function(wrap_pyfunction!(find_clique_minor, m)?)?;
    m.add_function(wrap_pyfunction!(verify_clique_minor, m)?)?;
    m.add_function(wrap_pyfunction!(find_subdivision, m)?)?;
    m.add_function(wrap_pyfunction!(hadwiger_number, m)?)?;
    m.add_function(wrap_pyfunction!(evaluate, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_graphs, m)?)?;
    m.add_function(wrap_pyfunction!(canonical_form, m)?)?;
    Ok(())
}
