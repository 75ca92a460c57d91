//! Python bindings. The module mirrors the library surface: `Graph`,
//! `Polynomial`, and `Root` types plus functions for matching
//! polynomials, vertex classification, criticality, families,
//! enumeration, and the claim harness.
//!
//! Library errors surface as `ValueError`; the wrappers validate
//! arguments that the Rust constructors treat as program constants.

use num_bigint::BigInt;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use matchcrit::canon::canonical_code;
use matchcrit::crit::{
    classify_vertices_with_engine, is_theta_critical_with_engine, multiplicity_with_engine,
    VertexKind,
};
use matchcrit::enumerate::{compute_n_theta, enum_connected, enum_trees};
use matchcrit::families::FamilySpec;
use matchcrit::graph6::{parse_graph6, write_graph6};
use matchcrit::matching::{
    global_engine, max_nonzero_root_multiplicity, verify_path_tree_divisibility,
    DEFAULT_PATH_TREE_LIMIT,
};
use matchcrit::poly::IntPolynomial;
use matchcrit::root::AlgebraicRoot;
use matchcrit::verify::{run_claim, RunOptions};

fn val_err(e: impl ToString) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// A simple undirected graph on vertices 0..n.
#[pyclass(name = "Graph", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyGraph {
    inner: matchcrit::Graph,
}

#[pymethods]
impl PyGraph {
    #[new]
    #[pyo3(signature = (n, edges=Vec::new()))]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        for &(u, v) in &edges {
            if u >= n || v >= n {
                return Err(val_err(format!(
                    "edge ({u},{v}) out of range for a graph on {n} vertices"
                )));
            }
            if u == v {
                return Err(val_err(format!("self-loops are not allowed (vertex {u})")));
            }
        }
        Ok(PyGraph {
            inner: matchcrit::Graph::from_edges(n, &edges),
        })
    }

    /// Parse a graph6 code (a leading ">>graph6<<" header is allowed).
    #[staticmethod]
    fn from_graph6(code: &str) -> PyResult<Self> {
        let code = code.trim();
        let code = code.strip_prefix(">>graph6<<").unwrap_or(code);
        Ok(PyGraph {
            inner: parse_graph6(code).map_err(val_err)?,
        })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn m(&self) -> usize {
        self.inner.m()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges()
    }

    fn graph6(&self) -> String {
        write_graph6(&self.inner)
    }

    fn has_edge(&self, u: usize, v: usize) -> PyResult<bool> {
        let n = self.inner.n();
        if u >= n || v >= n {
            return Err(val_err(format!("vertex out of range for n = {n}")));
        }
        Ok(u != v && self.inner.has_edge(u, v))
    }

    fn degree(&self, v: usize) -> PyResult<usize> {
        if v >= self.inner.n() {
            return Err(val_err(format!(
                "vertex {v} out of range for a graph on {} vertices",
                self.inner.n()
            )));
        }
        Ok(self.inner.degree(v))
    }

    fn is_connected(&self) -> bool {
        self.inner.is_connected()
    }

    fn is_tree(&self) -> bool {
        self.inner.is_tree()
    }

    fn connectivity(&self) -> usize {
        self.inner.connectivity()
    }

    fn delete_vertex(&self, v: usize) -> PyResult<Self> {
        Ok(PyGraph {
            inner: self.inner.delete_vertex(v).map_err(val_err)?,
        })
    }

    fn add_edge(&self, u: usize, v: usize) -> PyResult<Self> {
        Ok(PyGraph {
            inner: self.inner.add_edge(u, v).map_err(val_err)?,
        })
    }

    fn disjoint_union(&self, other: &PyGraph) -> Self {
        PyGraph {
            inner: self.inner.disjoint_union(&other.inner),
        }
    }

    /// Label-independent certificate; equal bytes mean isomorphic graphs.
    fn canonical_code(&self) -> Vec<u8> {
        canonical_code(&self.inner).0
    }

    fn is_isomorphic(&self, other: &PyGraph) -> bool {
        canonical_code(&self.inner) == canonical_code(&other.inner)
    }

    fn __repr__(&self) -> String {
        format!(
            "Graph(n={}, m={}, graph6={:?})",
            self.inner.n(),
            self.inner.m(),
            write_graph6(&self.inner)
        )
    }

    fn __eq__(&self, other: &PyGraph) -> bool {
        self.inner == other.inner
    }

    fn __hash__(&self) -> u64 {
        use std::hash::{Hash, Hasher};
        let mut h = std::collections::hash_map::DefaultHasher::new();
        self.inner.hash(&mut h);
        h.finish()
    }
}

/// An integer polynomial in one variable.
#[pyclass(name = "Polynomial", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyPolynomial {
    inner: IntPolynomial,
}

#[pymethods]
impl PyPolynomial {
    /// Parse from text such as "x^2-3" or "x^6-5x^4+4x^2".
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        Ok(PyPolynomial {
            inner: text.trim().parse().map_err(val_err)?,
        })
    }

    /// Build from coefficients in ascending degree order.
    #[staticmethod]
    fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        PyPolynomial {
            inner: IntPolynomial::from_coeffs(coeffs),
        }
    }

    #[getter]
    fn degree(&self) -> Option<usize> {
        self.inner.degree()
    }

    fn coeffs(&self) -> Vec<BigInt> {
        self.inner.coeffs().to_vec()
    }

    fn __call__(&self, x: BigInt) -> BigInt {
        self.inner.evaluate_int(&x)
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Polynomial({:?})", self.inner.to_string())
    }

    fn __eq__(&self, other: &PyPolynomial) -> bool {
        self.inner == other.inner
    }
}

/// An algebraic number, given by a monic squarefree defining polynomial.
#[pyclass(name = "Root", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyRoot {
    inner: AlgebraicRoot,
}

#[pymethods]
impl PyRoot {
    #[new]
    fn new(minpoly: &str) -> PyResult<Self> {
        let p: IntPolynomial = minpoly.trim().parse().map_err(val_err)?;
        Ok(PyRoot {
            inner: AlgebraicRoot::new(p).map_err(val_err)?,
        })
    }

    #[staticmethod]
    fn integer(k: i64) -> Self {
        PyRoot {
            inner: AlgebraicRoot::integer(k),
        }
    }

    #[staticmethod]
    fn sqrt(k: u64) -> PyResult<Self> {
        Ok(PyRoot {
            inner: AlgebraicRoot::sqrt(k).map_err(val_err)?,
        })
    }

    #[getter]
    fn minpoly(&self) -> PyPolynomial {
        PyPolynomial {
            inner: self.inner.minpoly().clone(),
        }
    }

    fn __repr__(&self) -> String {
        format!("Root({:?})", self.inner.minpoly().to_string())
    }
}

/// mu(G, x), exactly.
#[pyfunction]
fn matching_polynomial(g: &PyGraph) -> PyPolynomial {
    PyPolynomial {
        inner: global_engine().matching_polynomial(&g.inner),
    }
}

/// Matching counts p(G, k) for k = 0..floor(n/2).
#[pyfunction]
fn matching_counts(g: &PyGraph) -> Vec<BigInt> {
    global_engine().matching_counts(&g.inner)
}

/// m(theta, G): the multiplicity of theta as a root of mu(G, x).
#[pyfunction]
fn multiplicity(g: &PyGraph, theta: &PyRoot) -> usize {
    multiplicity_with_engine(global_engine(), &g.inner, &theta.inner)
}

/// Classify every vertex of G relative to theta. Returns a dict with
/// keys graph6, minpoly, is_root, multiplicity, classes, critical.
#[pyfunction]
fn classify<'py>(py: Python<'py>, g: &PyGraph, theta: &PyRoot) -> PyResult<Bound<'py, PyDict>> {
    let verdict = classify_vertices_with_engine(global_engine(), &g.inner, &theta.inner);
    let out = PyDict::new(py);
    out.set_item("graph6", &verdict.graph6)?;
    out.set_item("minpoly", &verdict.minpoly)?;
    out.set_item("is_root", verdict.is_root)?;
    out.set_item("multiplicity", verdict.multiplicity)?;
    out.set_item("critical", verdict.critical)?;
    let classes: Vec<Bound<'py, PyDict>> = verdict
        .classes
        .iter()
        .map(|c| {
            let row = PyDict::new(py);
            let kind = match c.kind {
                VertexKind::Essential => "Essential",
                VertexKind::Neutral => "Neutral",
                VertexKind::Positive => "Positive",
            };
            row.set_item("vertex", c.vertex)?;
            row.set_item("kind", kind)?;
            row.set_item("special", c.special)?;
            Ok(row)
        })
        .collect::<PyResult<_>>()?;
    out.set_item("classes", classes)?;
    Ok(out)
}

/// Whether connected G is theta-critical. Raises ValueError on a
/// disconnected graph.
#[pyfunction]
fn is_critical(g: &PyGraph, theta: &PyRoot) -> PyResult<bool> {
    is_theta_critical_with_engine(global_engine(), &g.inner, &theta.inner).map_err(val_err)
}

/// Maximum multiplicity over nonzero roots of mu(G), with the
/// squarefree product of the factors attaining it.
#[pyfunction]
fn max_multiplicity(g: &PyGraph) -> (usize, Option<PyPolynomial>) {
    let (m, part) = max_nonzero_root_multiplicity(global_engine(), &g.inner);
    (m, part.map(|inner| PyPolynomial { inner }))
}

/// Build a named family member, e.g. family("W", 6) or
/// family("Fhub", 7, "both,1,1").
#[pyfunction]
#[pyo3(signature = (name, n=None, pattern=None))]
fn family(name: &str, n: Option<usize>, pattern: Option<&str>) -> PyResult<PyGraph> {
    let spec = FamilySpec::parse(name, n, pattern).map_err(val_err)?;
    Ok(PyGraph {
        inner: spec.build().map_err(val_err)?,
    })
}

/// All connected graphs of order n, pairwise non-isomorphic.
#[pyfunction]
fn connected_graphs(n: usize) -> PyResult<Vec<PyGraph>> {
    Ok(enum_connected(n)
        .map_err(val_err)?
        .map(|inner| PyGraph { inner })
        .collect())
}

/// All trees of order n, pairwise non-isomorphic.
#[pyfunction]
fn trees(n: usize) -> PyResult<Vec<PyGraph>> {
    Ok(enum_trees(n)
        .map_err(val_err)?
        .map(|inner| PyGraph { inner })
        .collect())
}

/// Least order with a connected graph where m(theta, G) = 1, together
/// with every realizer at that order.
#[pyfunction]
#[pyo3(signature = (theta, n_max=9))]
fn n_theta(theta: &PyRoot, n_max: usize) -> PyResult<(usize, Vec<PyGraph>)> {
    let r = compute_n_theta(&theta.inner, n_max).map_err(val_err)?;
    Ok((
        r.n_theta,
        r.members.into_iter().map(|inner| PyGraph { inner }).collect(),
    ))
}

/// Grow the path tree T(G, root) and check both divisibility
/// identities. Returns a dict with nodes, divisible, ratio_identity,
/// quotient.
#[pyfunction]
#[pyo3(signature = (g, root=0, limit=DEFAULT_PATH_TREE_LIMIT))]
fn path_tree_check<'py>(
    py: Python<'py>,
    g: &PyGraph,
    root: usize,
    limit: u64,
) -> PyResult<Bound<'py, PyDict>> {
    if root >= g.inner.n() {
        return Err(val_err(format!(
            "root vertex {root} out of range for a graph on {} vertices",
            g.inner.n()
        )));
    }
    let check = verify_path_tree_divisibility(global_engine(), &g.inner, root, limit)
        .map_err(val_err)?;
    let out = PyDict::new(py);
    out.set_item("nodes", check.nodes)?;
    out.set_item("divisible", check.quotient.is_some())?;
    out.set_item("ratio_identity", check.ratio_identity)?;
    out.set_item(
        "quotient",
        check.quotient.map(|inner| PyPolynomial { inner }),
    )?;
    Ok(out)
}

/// Run a registered verification claim; returns the census report as a
/// JSON string. See the CLI's `verify --list` for the claim ids.
#[pyfunction]
#[pyo3(signature = (claim, n=None, theta=None, t=None, jobs=1))]
fn verify_claim(
    claim: &str,
    n: Option<usize>,
    theta: Option<&PyRoot>,
    t: Option<usize>,
    jobs: usize,
) -> PyResult<String> {
    let opts = RunOptions {
        n,
        theta: theta.map(|r| r.inner.clone()),
        t,
        jobs,
    };
    let report = run_claim(claim, &opts).map_err(val_err)?;
    Ok(report.to_json())
}

#[pymodule]
fn matchcrit_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_class::<PyPolynomial>()?;
    m.add_class::<PyRoot>()?;
    m.add_function(wrap_pyfunction!(matching_polynomial, m)?)?;
    m.add_function(wrap_pyfunction!(matching_counts, m)?)?;
    m.add_function(wrap_pyfunction!(multiplicity, m)?)?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(is_critical, m)?)?;
    m.add_function(wrap_pyfunction!(max_multiplicity, m)?)?;
    m.add_function(wrap_pyfunction!(family, m)?)?;
    m.add_function(wrap_pyfunction!(connected_graphs, m)?)?;
    m.add_function(wrap_pyfunction!(trees, m)?)?;
    m.add_function(wrap_pyfunction!(n_theta, m)?)?;
    m.add_function(wrap_pyfunction!(path_tree_check, m)?)?;
    m.add_function(wrap_pyfunction!(verify_claim, m)?)?;
    Ok(())
}
