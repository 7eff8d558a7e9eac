//! Python bindings: a `Graph` class wrapping the core library plus the
//! expression evaluator and the product-identity checks. Exact rationals
//! cross the boundary as `fractions.Fraction`.
//!
//! Build with `cargo build -p whitney-py --release`; the smoke test under
//! `python/` copies the resulting `libwhitney_py.so` next to itself as
//! `whitney_py.so` and imports it.

use std::collections::HashMap;
use std::path::PathBuf;

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use whitney::graph::VertexId;
use whitney::homology::GraphEndomorphism;
use whitney::morse;
use whitney::rational::Rational;
use whitney::{generators, Limits};

fn to_py_err(e: whitney::Error) -> PyErr {
    match e {
        whitney::Error::Budget { .. } => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn fraction<'py>(py: Python<'py>, r: &Rational) -> PyResult<Bound<'py, PyAny>> {
    let ctor = py.import("fractions")?.getattr("Fraction")?;
    ctor.call1((r.numer().clone(), r.denom().clone()))
}

/// A finite simple graph over named vertices.
#[pyclass(frozen, from_py_object, module = "whitney_py")]
#[derive(Clone)]
pub struct Graph {
    inner: whitney::Graph,
}

impl Graph {
    fn wrap(inner: whitney::Graph) -> Graph {
        Graph { inner }
    }

    fn vertex(&self, name: &str) -> PyResult<VertexId> {
        self.inner
            .vertex_by_name(name)
            .ok_or_else(|| PyValueError::new_err(format!("unknown vertex {name:?}")))
    }

    fn endomorphism(&self, mapping: HashMap<String, String>) -> PyResult<GraphEndomorphism> {
        let text = serde_json_like(&mapping);
        whitney::io::endomorphism_from_json(&self.inner, &text).map_err(to_py_err)
    }
}

fn serde_json_like(mapping: &HashMap<String, String>) -> String {
    // tiny encoder; vertex names never need escaping beyond quotes
    let body: Vec<String> = mapping
        .iter()
        .map(|(k, v)| {
            format!(
                "\"{}\":\"{}\"",
                k.replace('"', "\\\""),
                v.replace('"', "\\\"")
            )
        })
        .collect();
    format!("{{{}}}", body.join(","))
}

#[pymethods]
impl Graph {
    /// Graph from a vertex-name list and edges given as name pairs.
    #[new]
    fn new(vertices: Vec<String>, edges: Vec<(String, String)>) -> PyResult<Graph> {
        let refs: Vec<&str> = vertices.iter().map(|s| s.as_str()).collect();
        let edge_refs: Vec<(&str, &str)> = edges
            .iter()
            .map(|(a, b)| (a.as_str(), b.as_str()))
            .collect();
        whitney::graph::graph_from_names(&refs, &edge_refs)
            .map(Graph::wrap)
            .map_err(to_py_err)
    }

    #[staticmethod]
    fn complete(n: u32) -> PyResult<Graph> {
        if n < 1 {
            return Err(PyValueError::new_err("complete graph needs n >= 1"));
        }
        Ok(Graph::wrap(generators::complete(n)))
    }

    #[staticmethod]
    fn cycle(n: u32) -> PyResult<Graph> {
        if n < 3 {
            return Err(PyValueError::new_err("cycle needs n >= 3"));
        }
        Ok(Graph::wrap(generators::cycle(n)))
    }

    #[staticmethod]
    fn path(n: u32) -> PyResult<Graph> {
        if n < 1 {
            return Err(PyValueError::new_err("path needs n >= 1"));
        }
        Ok(Graph::wrap(generators::path(n)))
    }

    #[staticmethod]
    fn star(k: u32) -> PyResult<Graph> {
        if k < 1 {
            return Err(PyValueError::new_err("star needs k >= 1"));
        }
        Ok(Graph::wrap(generators::star(k)))
    }

    #[staticmethod]
    fn octahedron() -> Graph {
        Graph::wrap(generators::octahedron())
    }

    #[staticmethod]
    fn random(n: u32, m: u64, seed: u64) -> PyResult<Graph> {
        generators::random_graph(n, m, seed)
            .map(Graph::wrap)
            .map_err(to_py_err)
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Graph> {
        whitney::io::graph_from_json(text)
            .map(Graph::wrap)
            .map_err(to_py_err)
    }

    #[staticmethod]
    fn load(path: PathBuf) -> PyResult<Graph> {
        whitney::io::load_graph(&path)
            .map(Graph::wrap)
            .map_err(to_py_err)
    }

    fn vertex_count(&self) -> usize {
        self.inner.vertex_count()
    }

    fn edge_count(&self) -> usize {
        self.inner.edge_count()
    }

    fn vertices(&self) -> Vec<String> {
        self.inner.labels().iter().map(|l| l.to_string()).collect()
    }

    fn edges(&self) -> Vec<(String, String)> {
        self.inner
            .edges()
            .iter()
            .map(|&(a, b)| {
                (
                    self.inner.label(a).to_string(),
                    self.inner.label(b).to_string(),
                )
            })
            .collect()
    }

    fn to_json(&self) -> String {
        whitney::io::graph_to_json(&self.inner)
    }

    /// Strong product; pair vertices print as "(a,b)".
    fn strong(&self, other: &Graph) -> Graph {
        Graph::wrap(self.inner.strong_product(&other.inner))
    }

    /// Zykov join.
    fn join(&self, other: &Graph) -> Graph {
        Graph::wrap(self.inner.zykov_join(&other.inner))
    }

    /// Disjoint union.
    fn union(&self, other: &Graph) -> Graph {
        Graph::wrap(self.inner.disjoint_union(&other.inner))
    }

    fn unit_sphere(&self, vertex: &str) -> PyResult<Graph> {
        let v = self.vertex(vertex)?;
        self.inner
            .unit_sphere(v)
            .map(Graph::wrap)
            .map_err(to_py_err)
    }

    fn unit_ball(&self, vertex: &str) -> PyResult<Graph> {
        let v = self.vertex(vertex)?;
        self.inner.unit_ball(v).map(Graph::wrap).map_err(to_py_err)
    }

    fn induced(&self, vertices: Vec<String>) -> PyResult<Graph> {
        let ids: PyResult<Vec<VertexId>> =
            vertices.iter().map(|name| self.vertex(name)).collect();
        self.inner
            .induced_subgraph(&ids?)
            .map(Graph::wrap)
            .map_err(to_py_err)
    }

    fn f_vector(&self) -> PyResult<Vec<u64>> {
        whitney::simplicial::f_vector(&self.inner)
            .map(|fv| fv.counts().to_vec())
            .map_err(to_py_err)
    }

    /// Coefficients [1, f0, f1, ...] of the simplex generating function.
    fn generating_function(&self) -> PyResult<Vec<u64>> {
        whitney::simplicial::generating_function(&self.inner)
            .map(|p| p.coefficients().to_vec())
            .map_err(to_py_err)
    }

    /// Same polynomial through the sphere recursion, no clique search.
    fn generating_function_recursive(&self) -> PyResult<Vec<u64>> {
        whitney::simplicial::generating_function_recursive(&self.inner)
            .map(|p| p.coefficients().to_vec())
            .map_err(to_py_err)
    }

    fn euler_characteristic(&self) -> PyResult<i64> {
        whitney::simplicial::euler_characteristic(&self.inner).map_err(to_py_err)
    }

    fn curvature<'py>(&self, py: Python<'py>, vertex: &str) -> PyResult<Bound<'py, PyAny>> {
        let v = self.vertex(vertex)?;
        let k = whitney::curvature::curvature(&self.inner, v).map_err(to_py_err)?;
        fraction(py, &k)
    }

    fn curvatures<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let map = whitney::curvature::curvatures(&self.inner).map_err(to_py_err)?;
        let dict = PyDict::new(py);
        for v in self.inner.vertices() {
            dict.set_item(self.inner.label(v).to_string(), fraction(py, map.get(v))?)?;
        }
        Ok(dict)
    }

    /// Gauss-Bonnet evidence as (curvature total, chi, equal).
    fn gauss_bonnet<'py>(&self, py: Python<'py>) -> PyResult<(Bound<'py, PyAny>, i64, bool)> {
        let r = whitney::curvature::gauss_bonnet_report(&self.inner).map_err(to_py_err)?;
        Ok((fraction(py, &r.sum)?, r.chi, r.equal))
    }

    fn betti(&self) -> PyResult<Vec<i64>> {
        whitney::homology::betti(&self.inner)
            .map(|p| p.coefficients().to_vec())
            .map_err(to_py_err)
    }

    fn wu(&self) -> PyResult<i64> {
        whitney::wu::wu_characteristic(&self.inner).map_err(to_py_err)
    }

    fn wu_curvatures<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let r = whitney::wu::wu_curvatures(&self.inner).map_err(to_py_err)?;
        let dict = PyDict::new(py);
        for v in self.inner.vertices() {
            dict.set_item(
                self.inner.label(v).to_string(),
                fraction(py, &r.curvatures[v.index()])?,
            )?;
        }
        Ok(dict)
    }

    fn random_coloring<'py>(&self, py: Python<'py>, seed: u64) -> PyResult<Bound<'py, PyDict>> {
        let f = morse::random_coloring(&self.inner, seed).map_err(to_py_err)?;
        let dict = PyDict::new(py);
        for v in self.inner.vertices() {
            dict.set_item(self.inner.label(v).to_string(), fraction(py, f.get(v))?)?;
        }
        Ok(dict)
    }

    /// (indices by vertex, sum, chi, equal) for a seeded random coloring.
    fn ph_report<'py>(
        &self,
        py: Python<'py>,
        seed: u64,
    ) -> PyResult<(Bound<'py, PyDict>, i64, i64, bool)> {
        let f = morse::random_coloring(&self.inner, seed).map_err(to_py_err)?;
        let r = morse::ph_report(&self.inner, &f).map_err(to_py_err)?;
        let dict = PyDict::new(py);
        for (v, idx) in self.inner.vertices().zip(&r.indices) {
            dict.set_item(self.inner.label(v).to_string(), *idx)?;
        }
        Ok((dict, r.sum, r.chi, r.equal))
    }

    /// (exact estimate, stderr) for the Monte-Carlo index expectation.
    fn index_expectation<'py>(
        &self,
        py: Python<'py>,
        vertex: &str,
        samples: u64,
        seed: u64,
    ) -> PyResult<(Bound<'py, PyAny>, f64)> {
        if samples < 1 {
            return Err(PyValueError::new_err("samples must be at least 1"));
        }
        let v = self.vertex(vertex)?;
        let e = morse::index_expectation(&self.inner, v, samples, seed).map_err(to_py_err)?;
        Ok((fraction(py, &e.estimate)?, e.stderr))
    }

    /// Chain-level Lefschetz number of a vertex map given as a dict.
    fn lefschetz(&self, mapping: HashMap<String, String>) -> PyResult<i64> {
        let t = self.endomorphism(mapping)?;
        whitney::homology::lefschetz_number(&self.inner, &t).map_err(to_py_err)
    }

    /// Σ over setwise-fixed simplices of (−1)^dim · sign.
    fn fixed_simplex_index_sum(&self, mapping: HashMap<String, String>) -> PyResult<i64> {
        let t = self.endomorphism(mapping)?;
        whitney::homology::fixed_simplex_index_sum(&self.inner, &t).map_err(to_py_err)
    }

    fn __repr__(&self) -> String {
        format!(
            "Graph({} vertices, {} edges)",
            self.inner.vertex_count(),
            self.inner.edge_count()
        )
    }

    fn __eq__(&self, other: &Graph) -> bool {
        self.inner == other.inner
    }
}

/// Evaluates a graph-algebra expression, returning (coefficient, Graph)
/// terms of the resulting ring element.
#[pyfunction]
fn eval_expression(src: &str) -> PyResult<Vec<(i64, Graph)>> {
    let ast = whitney::expr::parse(src).map_err(to_py_err)?;
    let element = whitney::expr::evaluate(&ast).map_err(to_py_err)?;
    Ok(element
        .terms()
        .iter()
        .map(|(c, g)| (*c, Graph::wrap(g.clone())))
        .collect())
}

/// Checks K_{G*H}(x,y) = K_G(x)·K_H(y) at every product vertex; returns
/// (all_equal, mismatches) with each mismatch as (vertex, product, tensor).
#[pyfunction]
#[allow(clippy::type_complexity)]
fn verify_curvature_product(g: &Graph, h: &Graph) -> PyResult<(bool, Vec<(String, String, String)>)> {
    let report =
        whitney::curvature::verify_curvature_product(&g.inner, &h.inner).map_err(to_py_err)?;
    let mismatches = report
        .vertices
        .iter()
        .filter(|v| !v.equal())
        .map(|v| {
            (
                v.label.clone(),
                v.product_value.to_string(),
                v.tensor_value.to_string(),
            )
        })
        .collect();
    Ok((report.all_equal, mismatches))
}

/// Checks the Poincaré–Hopf index product identity for seeded random
/// colorings of both factors; returns all_equal.
#[pyfunction]
fn verify_index_product(g: &Graph, h: &Graph, seed: u64) -> PyResult<bool> {
    let f = morse::random_coloring_stream(&g.inner, seed, 0).map_err(to_py_err)?;
    let k = morse::random_coloring_stream(&h.inner, seed, 1).map_err(to_py_err)?;
    let report =
        morse::verify_index_product(&g.inner, &h.inner, &f, &k).map_err(to_py_err)?;
    Ok(report.all_equal)
}

/// Poincaré polynomial multiplicativity under the strong product:
/// returns (equal, p_G, p_H, p_{G*H}).
#[pyfunction]
#[allow(clippy::type_complexity)]
fn verify_kunneth(g: &Graph, h: &Graph) -> PyResult<(bool, Vec<i64>, Vec<i64>, Vec<i64>)> {
    let r = whitney::homology::verify_kunneth(&g.inner, &h.inner).map_err(to_py_err)?;
    Ok((
        r.equal,
        r.p_g.coefficients().to_vec(),
        r.p_h.coefficients().to_vec(),
        r.p_product.coefficients().to_vec(),
    ))
}

/// Pointwise Wu-curvature survey on G*H: (multiplicative_characteristic,
/// number_of_pointwise_mismatches, vertices_checked).
#[pyfunction]
fn wu_product_survey(g: &Graph, h: &Graph) -> PyResult<(bool, usize, usize)> {
    let s = whitney::wu::wu_product_survey(&g.inner, &h.inner).map_err(to_py_err)?;
    Ok((
        s.characteristic_multiplicative,
        s.mismatches.len(),
        s.vertices_checked,
    ))
}

/// The default simplex budget, for reference from Python.
#[pyfunction]
fn default_simplex_budget() -> u64 {
    Limits::DEFAULT_MAX_SIMPLICES
}

#[pymodule]
fn whitney_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Graph>()?;
    m.add_function(wrap_pyfunction!(eval_expression, m)?)?;
    m.add_function(wrap_pyfunction!(verify_curvature_product, m)?)?;
    m.add_function(wrap_pyfunction!(verify_index_product, m)?)?;
    m.add_function(wrap_pyfunction!(verify_kunneth, m)?)?;
    m.add_function(wrap_pyfunction!(wu_product_survey, m)?)?;
    m.add_function(wrap_pyfunction!(default_simplex_budget, m)?)?;
    Ok(())
}
