//! Python bindings: the main types and operations of the toolkit, with
//! rationals crossing the boundary as `"num/den"` strings and structured
//! results as JSON-compatible dicts (serialized through the same wire
//! formats as the command line).

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyModule;
use pyo3::IntoPyObjectExt;

use psd3::classify::classify_form;
use psd3::families::{self, FsParam};
use psd3::io::FormJson;
use psd3::scalar::{parse_rat, rat_to_string, Rat};
use psd3::{Form, Var};

fn perr(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn rat_arg(s: &str) -> PyResult<Rat> {
    parse_rat(s).map_err(perr)
}

/// A sparse homogeneous trivariate form over exact rationals.
#[pyclass(name = "Form")]
#[derive(Clone)]
struct PyForm {
    inner: Form<Rat>,
}

#[pymethods]
impl PyForm {
    /// Builds a form from its degree and `{(i, j, k): "coeff"}` terms.
    #[new]
    fn new(degree: u32, terms: std::collections::BTreeMap<(u32, u32, u32), String>) -> PyResult<Self> {
        let parsed: Vec<_> = terms
            .into_iter()
            .map(|((i, j, k), c)| Ok((psd3::Exp(i, j, k), rat_arg(&c)?)))
            .collect::<PyResult<_>>()?;
        Ok(PyForm { inner: Form::from_terms(degree, parsed).map_err(perr)? })
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let fj: FormJson = serde_json::from_str(text).map_err(perr)?;
        Ok(PyForm { inner: fj.to_form().map_err(perr)? })
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&FormJson::from_form(&self.inner)).expect("serializable")
    }

    #[getter]
    fn degree(&self) -> u32 {
        self.inner.degree()
    }

    fn terms(&self) -> Vec<((u32, u32, u32), String)> {
        self.inner
            .terms()
            .map(|(e, c)| ((e.0, e.1, e.2), rat_to_string(c)))
            .collect()
    }

    /// Exact evaluation at a rational point.
    fn eval(&self, x: &str, y: &str, z: &str) -> PyResult<String> {
        let p = [rat_arg(x)?, rat_arg(y)?, rat_arg(z)?];
        Ok(rat_to_string(&self.inner.eval(&p)))
    }

    /// Iterated partial derivative; `var` is "x", "y" or "z".
    fn partial(&self, var: &str, order: u32) -> PyResult<PyForm> {
        let v = match var {
            "x" => Var::X,
            "y" => Var::Y,
            "z" => Var::Z,
            _ => return Err(PyValueError::new_err("var must be x, y or z")),
        };
        Ok(PyForm { inner: self.inner.partial(v, order) })
    }

    /// The square-substitution lift `f(x^2, y^2, z^2)`.
    fn square_substitute(&self) -> PyForm {
        PyForm { inner: self.inner.square_substitute() }
    }

    fn is_even(&self) -> bool {
        self.inner.is_even()
    }

    fn add(&self, other: &PyForm) -> PyResult<PyForm> {
        Ok(PyForm { inner: self.inner.add(&other.inner).map_err(perr)? })
    }

    fn mul(&self, other: &PyForm) -> PyForm {
        PyForm { inner: self.inner.mul(&other.inner) }
    }

    fn scale(&self, c: &str) -> PyResult<PyForm> {
        Ok(PyForm { inner: self.inner.scale(&rat_arg(c)?) })
    }

    fn __eq__(&self, other: &PyForm) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!("{}", self.inner)
    }
}

/// The ten-coefficient family with zeros (1:1:1), (0:p:1), (1:0:q), (r:1:0).
#[pyfunction]
fn make_f_pqr(p: &str, q: &str, r: &str) -> PyResult<PyForm> {
    Ok(PyForm { inner: families::make_f_pqr(&rat_arg(p)?, &rat_arg(q)?, &rat_arg(r)?) })
}

/// The eight-term family with zeros (1:1:1), (0:1:p), (1:0:q) and both
/// vertices off the z-edge.
#[pyfunction]
fn make_g_pq(p: &str, q: &str) -> PyResult<PyForm> {
    Ok(PyForm { inner: families::make_g_pq(&rat_arg(p)?, &rat_arg(q)?) })
}

/// The cusp family, built as the kernel of its nine defining conditions.
#[pyfunction]
fn make_h_pq(p: &str, q: &str) -> PyResult<PyForm> {
    Ok(PyForm { inner: families::make_h_pq(&rat_arg(p)?, &rat_arg(q)?).map_err(perr)? })
}

/// The cyclic family; pass "inf" for the infinite-parameter member.
#[pyfunction]
fn make_fs(s: &str) -> PyResult<PyForm> {
    let param = if s == "inf" { FsParam::Infinity } else { FsParam::Finite(rat_arg(s)?) };
    Ok(PyForm { inner: families::make_fs(&param) })
}

fn json_to_py(py: Python<'_>, value: &serde_json::Value) -> PyResult<Py<PyAny>> {
    use pyo3::types::{PyDict, PyList};
    Ok(match value {
        serde_json::Value::Null => py.None(),
        serde_json::Value::Bool(b) => b.into_py_any(py)?,
        serde_json::Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                i.into_py_any(py)?
            } else {
                n.as_f64().unwrap().into_py_any(py)?
            }
        }
        serde_json::Value::String(s) => s.into_py_any(py)?,
        serde_json::Value::Array(items) => {
            let list = PyList::empty(py);
            for it in items {
                list.append(json_to_py(py, it)?)?;
            }
            list.into_py_any(py)?
        }
        serde_json::Value::Object(map) => {
            let dict = PyDict::new(py);
            for (k, v) in map {
                dict.set_item(k, json_to_py(py, v)?)?;
            }
            dict.into_py_any(py)?
        }
    })
}

fn to_py_json<T: serde::Serialize>(py: Python<'_>, value: &T) -> PyResult<Py<PyAny>> {
    let v = serde_json::to_value(value).map_err(perr)?;
    json_to_py(py, &v)
}

/// Certify or refute octant nonnegativity of the first family member.
#[pyfunction]
fn certify_f(py: Python<'_>, p: &str, q: &str, r: &str) -> PyResult<Py<PyAny>> {
    let out = psd3::certify::certify_f(&rat_arg(p)?, &rat_arg(q)?, &rat_arg(r)?).map_err(perr)?;
    to_py_json(py, &out)
}

#[pyfunction]
fn certify_g(py: Python<'_>, p: &str, q: &str) -> PyResult<Py<PyAny>> {
    let out = psd3::certify::certify_g(&rat_arg(p)?, &rat_arg(q)?).map_err(perr)?;
    to_py_json(py, &out)
}

#[pyfunction]
fn certify_h(py: Python<'_>, p: &str, q: &str) -> PyResult<Py<PyAny>> {
    let out = psd3::certify::certify_h(&rat_arg(p)?, &rat_arg(q)?).map_err(perr)?;
    to_py_json(py, &out)
}

/// Exhaustive exact simplex-grid search for a negative value.
#[pyfunction]
fn refute_by_grid(f: &PyForm, depth: u32) -> Option<(Vec<String>, String)> {
    psd3::certify::refute_by_grid(&f.inner, depth)
        .map(|(pt, v)| (pt.iter().map(rat_to_string).collect(), rat_to_string(&v)))
}

/// The weighted octant zero count with its per-point breakdown.
#[pyfunction]
fn count_n(f: &PyForm) -> PyResult<(u32, Vec<u32>)> {
    let n = psd3::geometry::count_n(&f.inner).map_err(perr)?;
    Ok((n.total, n.breakdown))
}

/// Extremality classification; returns the same structure as the CLI.
#[pyfunction]
fn classify(py: Python<'_>, f: &PyForm) -> PyResult<Py<PyAny>> {
    let r = classify_form(&f.inner).map_err(perr)?;
    to_py_json(py, &r)
}

/// Lift a cubic and verify the kernel of its lifted zero conditions.
#[pyfunction]
fn lift_verify(py: Python<'_>, f: &PyForm) -> PyResult<Py<PyAny>> {
    let inv = psd3::geometry::boundary_zeros(&f.inner).map_err(perr)?;
    let report = psd3::lift::lift_with_orbits(&f.inner, &inv).map_err(perr)?;
    let (v, _) = psd3::lift::verify_lift_extremal(&report).map_err(perr)?;
    to_py_json(py, &v)
}

/// Kernel verification of the explicit degree-8 construction.
#[pyfunction]
fn verify_octic(py: Python<'_>) -> PyResult<Py<PyAny>> {
    to_py_json(py, &psd3::appendix::verify_octic().map_err(perr)?)
}

/// Kernel verification of the explicit degree-10 construction.
#[pyfunction]
fn verify_decic(py: Python<'_>) -> PyResult<Py<PyAny>> {
    to_py_json(py, &psd3::appendix::verify_decic().map_err(perr)?)
}

/// Exact identity suite at seeded parameter tuples; returns failures.
#[pyfunction]
#[pyo3(signature = (seed=24229, tuples=20))]
fn verify_identities(seed: u64, tuples: usize) -> Vec<String> {
    families::verify_family_identities(seed, tuples)
        .checks
        .iter()
        .filter(|c| !c.ok)
        .map(|c| format!("{} at {}", c.name, c.params))
        .collect()
}

#[pymodule]
fn psd3py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyForm>()?;
    m.add_function(wrap_pyfunction!(make_f_pqr, m)?)?;
    m.add_function(wrap_pyfunction!(make_g_pq, m)?)?;
    m.add_function(wrap_pyfunction!(make_h_pq, m)?)?;
    m.add_function(wrap_pyfunction!(make_fs, m)?)?;
    m.add_function(wrap_pyfunction!(certify_f, m)?)?;
    m.add_function(wrap_pyfunction!(certify_g, m)?)?;
    m.add_function(wrap_pyfunction!(certify_h, m)?)?;
    m.add_function(wrap_pyfunction!(refute_by_grid, m)?)?;
    m.add_function(wrap_pyfunction!(count_n, m)?)?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(lift_verify, m)?)?;
    m.add_function(wrap_pyfunction!(verify_octic, m)?)?;
    m.add_function(wrap_pyfunction!(verify_decic, m)?)?;
    m.add_function(wrap_pyfunction!(verify_identities, m)?)?;
    Ok(())
}
