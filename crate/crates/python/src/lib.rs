//! Python bindings for the `nbhd_perfect` crate.

use nbhd_perfect::family::FamilySpec;
use nbhd_perfect::graph::{parse_text, write_text, Graph};
use nbhd_perfect::hardness;
use nbhd_perfect::optimal::{self, OptimalLists};
use nbhd_perfect::oracle::{self, OracleError, ParamKind};
use nbhd_perfect::recognition::{self, RecognitionError};
use nbhd_perfect::sets::{Element, MixedSet};
use pyo3::create_exception;
use pyo3::exceptions::{PyException, PyValueError};
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList, PyTuple};

create_exception!(pynbhd, UnsupportedClassError, PyException);
create_exception!(pynbhd, SizeGuardError, PyException);

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn recognition_err(e: RecognitionError) -> PyErr {
    match e {
        RecognitionError::UnsupportedClass => UnsupportedClassError::new_err(e.to_string()),
        other => value_err(other),
    }
}

fn oracle_err(e: OracleError) -> PyErr {
    match e {
        OracleError::SizeGuard { .. } => SizeGuardError::new_err(e.to_string()),
        other => value_err(other),
    }
}

/// Simple undirected graph on vertices `0..n`.
#[pyclass(name = "Graph", module = "pynbhd")]
pub struct PyGraph {
    inner: Graph,
}

#[pymethods]
impl PyGraph {
    #[new]
    #[pyo3(signature = (n, edges = Vec::new()))]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<PyGraph> {
        Ok(PyGraph { inner: Graph::from_edges(n, edges).map_err(value_err)? })
    }

    /// Parses the `p n m` / `e u v` text format.
    #[staticmethod]
    fn from_text(text: &str) -> PyResult<PyGraph> {
        Ok(PyGraph { inner: parse_text(text).map_err(value_err)? })
    }

    /// Builds a family member such as `starfish(4,path(4))`.
    #[staticmethod]
    #[pyo3(signature = (spec, seed = None))]
    fn generate(spec: &str, seed: Option<u64>) -> PyResult<PyGraph> {
        let spec = FamilySpec::parse(spec, seed).map_err(value_err)?;
        Ok(PyGraph { inner: spec.generate().map_err(value_err)? })
    }

    fn to_text(&self) -> String {
        write_text(&self.inner, &[])
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
        self.inner.edges().map(|e| (e.u, e.v)).collect()
    }

    fn has_edge(&self, u: usize, v: usize) -> bool {
        self.inner.has_edge(u, v)
    }

    fn complement(&self) -> PyGraph {
        PyGraph { inner: self.inner.complement() }
    }

    fn __len__(&self) -> usize {
        self.inner.n()
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, m={})", self.inner.n(), self.inner.m())
    }
}

/// Returns `(class, perfect, witness)`; the witness is a string or None.
#[pyfunction]
fn recognize(g: PyRef<'_, PyGraph>) -> PyResult<(String, bool, Option<String>)> {
    let (class, v) = recognition::recognize(&g.inner).map_err(recognition_err)?;
    Ok((class.to_string(), v.perfect, v.witness.map(|w| w.to_string())))
}

fn mixed_to_list<'py>(py: Python<'py>, set: &MixedSet) -> PyResult<Bound<'py, PyList>> {
    let list = PyList::empty(py);
    for x in set.elements() {
        match x {
            Element::Vertex(v) => list.append(v)?,
            Element::Edge(e) => list.append(PyTuple::new(py, [e.u, e.v])?)?,
        }
    }
    Ok(list)
}

fn lists_to_dict<'py>(py: Python<'py>, l: &OptimalLists) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("a_n", mixed_to_list(py, &l.a_n)?)?;
    d.set_item("r_n", l.r_n.clone())?;
    d.set_item("a_2", l.a_2.clone())?;
    d.set_item("d", l.d.clone())?;
    Ok(d)
}

/// The four optimal lists: `a_n` (vertices as ints, edges as pairs), `r_n`,
/// `a_2` and `d`.
#[pyfunction]
fn optimal_lists<'py>(py: Python<'py>, g: PyRef<'py, PyGraph>) -> PyResult<Bound<'py, PyDict>> {
    let l = optimal::optimal_lists(&g.inner).map_err(recognition_err)?;
    lists_to_dict(py, &l)
}

/// Lengths of the optimal lists keyed by `rho_n`, `alpha_n`, `alpha_2`, `gamma`.
#[pyfunction]
fn params<'py>(py: Python<'py>, g: PyRef<'py, PyGraph>) -> PyResult<Bound<'py, PyDict>> {
    let l = optimal::optimal_lists(&g.inner).map_err(recognition_err)?;
    let d = PyDict::new(py);
    d.set_item("rho_n", l.r_n.len())?;
    d.set_item("alpha_n", l.a_n.len())?;
    d.set_item("alpha_2", l.a_2.len())?;
    d.set_item("gamma", l.d.len())?;
    Ok(d)
}

/// Brute-force value of `param` (`pn`, `an`, `a2`, `gamma`, `gamma_t`, `tau`,
/// `nu`, `alpha`).
#[pyfunction]
#[pyo3(signature = (g, param, max_n = None))]
fn brute_param(g: PyRef<'_, PyGraph>, param: &str, max_n: Option<usize>) -> PyResult<usize> {
    let kind: ParamKind = param.parse().map_err(oracle_err)?;
    let limit = max_n.unwrap_or(kind.default_limit());
    Ok(oracle::brute_param_with_limit(&g.inner, kind, limit).map_err(oracle_err)?.value)
}

#[pyfunction]
fn brute_is_np(g: PyRef<'_, PyGraph>) -> PyResult<bool> {
    oracle::brute_is_np(&g.inner).map_err(oracle_err)
}

/// Co-bipartite instance with αn equal to the independence number of `h`.
/// Returns `(graph, x, y)`.
#[pyfunction]
fn reduce_alpha_to_an(h: PyRef<'_, PyGraph>) -> (PyGraph, Vec<usize>, Vec<usize>) {
    let r = hardness::reduce_alpha_to_an(&h.inner);
    (PyGraph { inner: r.graph }, r.x, r.y)
}

/// Vertex-incidence co-bipartite instance of `h`. Returns `(graph, x, y)`.
#[pyfunction]
fn reduce_vc_to_pn(h: PyRef<'_, PyGraph>) -> PyResult<(PyGraph, Vec<usize>, Vec<usize>)> {
    let r = hardness::reduce_vc_to_pn(&h.inner).map_err(value_err)?;
    Ok((PyGraph { inner: r.graph }, r.x, r.y))
}

#[pymodule]
fn pynbhd(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(recognize, m)?)?;
    m.add_function(wrap_pyfunction!(optimal_lists, m)?)?;
    m.add_function(wrap_pyfunction!(params, m)?)?;
    m.add_function(wrap_pyfunction!(brute_param, m)?)?;
    m.add_function(wrap_pyfunction!(brute_is_np, m)?)?;
    m.add_function(wrap_pyfunction!(reduce_alpha_to_an, m)?)?;
    m.add_function(wrap_pyfunction!(reduce_vc_to_pn, m)?)?;
    m.add("UnsupportedClassError", m.py().get_type::<UnsupportedClassError>())?;
    m.add("SizeGuardError", m.py().get_type::<SizeGuardError>())?;
    Ok(())
}
