//! Python bindings for the lexdom toolkit: the bitset graph type, the exact
//! invariant solvers, lexicographic products, closed formulas, bounds, the
//! path scheme construction and the verification harness.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};

use lexdom::constructions::{default_dominating_pair, path_scheme_gamma2};
use lexdom::formulas::{classify_small_value, gamma_x2_lex_bounds, gamma_x2_lex_formula};
use lexdom::graph::{self, FamilySpec, VertexSet};
use lexdom::product;
use lexdom::solvers::{self, InvariantKind, WeightFn, Witness};
use lexdom::verify::{self, CheckId, CorpusSpec};

fn value_error(message: impl ToString) -> PyErr {
    PyValueError::new_err(message.to_string())
}

fn parse_kind(code: &str) -> PyResult<InvariantKind> {
    InvariantKind::from_code(code)
        .ok_or_else(|| value_error(format!("unknown invariant kind `{code}`")))
}

/// An immutable simple undirected graph on at most 64 vertices.
#[pyclass(name = "Graph", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyGraph {
    inner: graph::Graph,
}

#[pymethods]
impl PyGraph {
    /// Graph(n, edges): build from an explicit edge list.
    #[new]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        let inner = graph::Graph::from_edges(n, &edges).map_err(value_error)?;
        Ok(PyGraph { inner })
    }

    /// Parse a graph6 line.
    #[staticmethod]
    fn from_graph6(line: &str) -> PyResult<Self> {
        Ok(PyGraph { inner: graph::parse_graph6(line).map_err(value_error)? })
    }

    /// Build a named family, e.g. `path:7`, `cycle:5`, `hk:4:3,2,3,2`.
    #[staticmethod]
    fn from_family(spec: &str) -> PyResult<Self> {
        let spec: FamilySpec = spec.parse().map_err(value_error)?;
        Ok(PyGraph { inner: spec.build().map_err(value_error)? })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges()
    }

    fn graph6(&self) -> String {
        graph::write_graph6(&self.inner)
    }

    fn degree(&self, v: usize) -> PyResult<usize> {
        if v >= self.inner.n() {
            return Err(value_error(format!("vertex {v} out of range")));
        }
        Ok(self.inner.degree(v))
    }

    fn min_degree(&self) -> usize {
        self.inner.min_degree()
    }

    fn universal_vertices(&self) -> Vec<usize> {
        self.inner.universal_vertices().to_vec()
    }

    fn has_isolated_vertex(&self) -> bool {
        self.inner.has_isolated_vertex()
    }

    fn is_connected(&self) -> bool {
        self.inner.is_connected()
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, graph6={:?})", self.inner.n(), graph::write_graph6(&self.inner))
    }

    fn __eq__(&self, other: &PyGraph) -> bool {
        self.inner == other.inner
    }
}

fn witness_to_list(witness: &Witness) -> Vec<usize> {
    match witness {
        Witness::Set(s) => s.to_vec(),
        Witness::Function(f) => f.values().iter().map(|&v| v as usize).collect(),
    }
}

/// Exact value of an invariant: kinds g, gt, gx2, g2t, rho, gtr, gtr2.
#[pyfunction]
fn exact_invariant(g: &PyGraph, kind: &str) -> PyResult<usize> {
    solvers::exact_invariant(&g.inner, parse_kind(kind)?).map_err(value_error)
}

/// Optimal witness: member list for set-valued kinds, per-vertex value
/// vector for the total Roman kinds.
#[pyfunction]
fn min_witness(g: &PyGraph, kind: &str) -> PyResult<Vec<usize>> {
    let witness = solvers::min_witness(&g.inner, parse_kind(kind)?).map_err(value_error)?;
    Ok(witness_to_list(&witness))
}

/// Number of optimal witnesses.
#[pyfunction]
fn count_minimum_witnesses(g: &PyGraph, kind: &str) -> PyResult<usize> {
    let all = solvers::enumerate_minimum_sets(&g.inner, parse_kind(kind)?).map_err(value_error)?;
    Ok(all.len())
}

/// Test the defining predicate of a kind against a witness, encoded as for
/// `min_witness`.
#[pyfunction]
fn validate(g: &PyGraph, kind: &str, witness: Vec<usize>) -> PyResult<bool> {
    let kind = parse_kind(kind)?;
    let witness = if kind.is_function_valued() {
        if witness.iter().any(|&v| v > 2) {
            return Ok(false);
        }
        let values: Vec<u8> = witness.iter().map(|&v| v as u8).collect();
        match WeightFn::new(values) {
            Ok(f) => Witness::Function(f),
            Err(_) => return Ok(false),
        }
    } else {
        Witness::Set(witness.into_iter().collect::<VertexSet>())
    };
    Ok(solvers::validate(&g.inner, kind, &witness))
}

/// Lexicographic product with row-major indexing: (u, v) -> u * h.n + v.
#[pyfunction]
fn lex_product(g: &PyGraph, h: &PyGraph) -> PyResult<PyGraph> {
    let (product, _) = product::lex_product(&g.inner, &h.inner).map_err(value_error)?;
    Ok(PyGraph { inner: product })
}

/// Rooted product: copy i of h is glued to vertex i of g at `root`.
#[pyfunction]
fn rooted_product(g: &PyGraph, h: &PyGraph, root: usize) -> PyResult<PyGraph> {
    Ok(PyGraph { inner: graph::rooted_product(&g.inner, &h.inner, root).map_err(value_error)? })
}

fn json_to_py<'py>(py: Python<'py>, value: &serde_json::Value) -> PyResult<Bound<'py, PyAny>> {
    use serde_json::Value as J;
    Ok(match value {
        J::Null => py.None().into_bound(py),
        J::Bool(b) => b.into_pyobject(py)?.to_owned().into_any(),
        J::Number(num) => {
            if let Some(i) = num.as_i64() {
                i.into_pyobject(py)?.into_any()
            } else if let Some(u) = num.as_u64() {
                u.into_pyobject(py)?.into_any()
            } else {
                num.as_f64().unwrap_or(f64::NAN).into_pyobject(py)?.into_any()
            }
        }
        J::String(s) => s.into_pyobject(py)?.into_any(),
        J::Array(items) => {
            let list = PyList::empty(py);
            for item in items {
                list.append(json_to_py(py, item)?)?;
            }
            list.into_any()
        }
        J::Object(map) => {
            let dict = PyDict::new(py);
            for (key, item) in map {
                dict.set_item(key, json_to_py(py, item)?)?;
            }
            dict.into_any()
        }
    })
}

fn to_py_dict<'py, T: serde::Serialize>(py: Python<'py>, value: &T) -> PyResult<Bound<'py, PyAny>> {
    let json = serde_json::to_value(value).map_err(value_error)?;
    json_to_py(py, &json)
}

/// Closed product formula for a family first factor; returns a dict with
/// value, rule and the verified assumptions.
#[pyfunction]
fn gamma_x2_formula<'py>(py: Python<'py>, family: &str, h: &PyGraph) -> PyResult<Bound<'py, PyAny>> {
    let spec: FamilySpec = family.parse().map_err(value_error)?;
    let result = gamma_x2_lex_formula(&spec, &h.inner).map_err(value_error)?;
    to_py_dict(py, &result)
}

/// Every applicable product bound with provenance.
#[pyfunction]
fn gamma_x2_bounds<'py>(py: Python<'py>, g: &PyGraph, h: &PyGraph) -> PyResult<Bound<'py, PyAny>> {
    let report = gamma_x2_lex_bounds(&g.inner, &h.inner).map_err(value_error)?;
    to_py_dict(py, &report)
}

/// Small-value classification of the product: "2", "3 (condition k)" or ">=4".
#[pyfunction]
fn classify_product_value(g: &PyGraph, h: &PyGraph) -> PyResult<String> {
    let class = classify_small_value(&g.inner, &h.inner).map_err(value_error)?;
    Ok(class.to_string())
}

/// Double dominating set of the path product from the periodic scheme, using
/// the smallest dominating pair of h.
#[pyfunction]
fn path_scheme(n: usize, h: &PyGraph) -> PyResult<Vec<usize>> {
    let (pair, single) = default_dominating_pair(&h.inner).map_err(value_error)?;
    let set = path_scheme_gamma2(n, &h.inner, pair, single).map_err(value_error)?;
    Ok(set.to_vec())
}

/// Run one verification check (`"V1"` to `"V16"`) over a scaled-down default
/// corpus; returns the report as a dict.
#[pyfunction]
#[pyo3(signature = (check, single_max=4, pair_g_max=3, pair_h_max=2, grid_max=5))]
fn run_check<'py>(
    py: Python<'py>,
    check: &str,
    single_max: usize,
    pair_g_max: usize,
    pair_h_max: usize,
    grid_max: usize,
) -> PyResult<Bound<'py, PyAny>> {
    let id: CheckId = check.parse().map_err(value_error)?;
    let spec = CorpusSpec { single_max, pair_g_max, pair_h_max, grid_max, ..CorpusSpec::default() };
    let corpus = spec.build().map_err(value_error)?;
    let report = verify::run_check(id, &corpus);
    to_py_dict(py, &report)
}

#[pymodule]
fn lexdom_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(exact_invariant, m)?)?;
    m.add_function(wrap_pyfunction!(min_witness, m)?)?;
    m.add_function(wrap_pyfunction!(count_minimum_witnesses, m)?)?;
    m.add_function(wrap_pyfunction!(validate, m)?)?;
    m.add_function(wrap_pyfunction!(lex_product, m)?)?;
    m.add_function(wrap_pyfunction!(rooted_product, m)?)?;
    m.add_function(wrap_pyfunction!(gamma_x2_formula, m)?)?;
    m.add_function(wrap_pyfunction!(gamma_x2_bounds, m)?)?;
    m.add_function(wrap_pyfunction!(classify_product_value, m)?)?;
    m.add_function(wrap_pyfunction!(path_scheme, m)?)?;
    m.add_function(wrap_pyfunction!(run_check, m)?)?;
    m.add("INVARIANT_KINDS", InvariantKind::ALL.map(|k| k.code()))?;
    Ok(())
}
