use pyo3::create_exception;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use semihyp::algebra::{contracted_algebra, radical, RadicalReport};
use semihyp::classify::analyze;
use semihyp::rees::fixture_names;
use semihyp::semigroup::enumerate_semigroups;
use semihyp::{block_structure, classify, fixture, isomorphic, Error, FieldSpec, FiniteSemigroup};

create_exception!(pysemihyp, SemigroupError, PyValueError);
create_exception!(pysemihyp, InconsistencyError, PyRuntimeError);

fn to_py(e: Error) -> PyErr {
    match e {
        Error::InternalInconsistency(_) => InconsistencyError::new_err(e.to_string()),
        _ => SemigroupError::new_err(e.to_string()),
    }
}

/// Parses a JSON document into Python objects.
fn loads<'py>(py: Python<'py>, text: &str) -> PyResult<Bound<'py, PyAny>> {
    py.import("json")?.call_method1("loads", (text,))
}

fn value<'py>(py: Python<'py>, v: &impl serde::Serialize) -> PyResult<Bound<'py, PyAny>> {
    loads(py, &serde_json::to_string(v).map_err(|e| PyValueError::new_err(e.to_string()))?)
}

/// A finite semigroup given by its Cayley table.
#[pyclass(name = "Semigroup", module = "pysemihyp", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PySemigroup {
    inner: FiniteSemigroup,
}

#[pymethods]
impl PySemigroup {
    #[new]
    #[pyo3(signature = (table, names=None))]
    fn new(table: Vec<Vec<usize>>, names: Option<Vec<String>>) -> PyResult<Self> {
        FiniteSemigroup::new(table, names).map(|inner| PySemigroup { inner }).map_err(to_py)
    }

    /// JSON or plain-text Cayley table.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        FiniteSemigroup::parse_any(text).map(|inner| PySemigroup { inner }).map_err(to_py)
    }

    #[staticmethod]
    fn fixture(name: &str) -> PyResult<Self> {
        fixture(name).map(|inner| PySemigroup { inner }).map_err(to_py)
    }

    #[getter]
    fn order(&self) -> usize {
        self.inner.order()
    }

    #[getter]
    fn table(&self) -> Vec<Vec<usize>> {
        self.inner.rows()
    }

    #[getter]
    fn zero(&self) -> Option<usize> {
        self.inner.zero()
    }

    #[getter]
    fn identity(&self) -> Option<usize> {
        self.inner.identity()
    }

    fn mul(&self, a: usize, b: usize) -> PyResult<usize> {
        if a >= self.inner.order() || b >= self.inner.order() {
            return Err(SemigroupError::new_err(format!("element out of range for order {}", self.inner.order())));
        }
        Ok(self.inner.mul(a, b))
    }

    fn label(&self, x: usize) -> String {
        self.inner.label(x)
    }

    fn to_json(&self) -> String {
        self.inner.to_json()
    }

    fn adjoin_identity(&self) -> Self {
        PySemigroup { inner: self.inner.with_identity().0 }
    }

    fn is_isomorphic(&self, other: &PySemigroup) -> bool {
        isomorphic(&self.inner, &other.inner).is_some()
    }

    /// Verdict over the rationals, or over Q(sqrt(-d)) when `d` is given.
    #[pyo3(signature = (d=None))]
    fn classify<'py>(&self, py: Python<'py>, d: Option<i64>) -> PyResult<Bound<'py, PyAny>> {
        let field = match d {
            Some(d) => FieldSpec::quadratic(d).map_err(to_py)?,
            None => FieldSpec::Rationals,
        };
        let v = classify(&self.inner, field).map_err(to_py)?;
        loads(py, &v.to_json())
    }

    /// Principal series as `(J-class labels, factor kind)` pairs, top first.
    fn series(&self) -> PyResult<Vec<(Vec<String>, String)>> {
        let a = analyze(&self.inner).map_err(to_py)?;
        let t = &a.series.semigroup;
        Ok(a.series
            .factors
            .iter()
            .map(|f| (f.elements.iter().map(|&x| t.label(x)).collect(), f.kind.short()))
            .collect())
    }

    /// Radical of the contracted algebra of `S` with a zero adjoined if needed.
    fn radical<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        let (t, _) = self.inner.with_zero();
        let a = contracted_algebra(&t).map_err(to_py)?;
        value(py, &RadicalReport::from(&radical(&a)))
    }

    fn block<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        value(py, &block_structure(&self.inner).map_err(to_py)?)
    }

    fn __len__(&self) -> usize {
        self.inner.order()
    }

    fn __eq__(&self, other: &PySemigroup) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!("Semigroup(order={}, table={:?})", self.inner.order(), self.inner.rows())
    }
}

#[pyfunction]
fn fixtures() -> Vec<String> {
    fixture_names()
}

/// Representatives of every semigroup of the given order (at most 5), up to isomorphism.
#[pyfunction]
fn enumerate(order: usize) -> PyResult<Vec<PySemigroup>> {
    let mut out = Vec::new();
    enumerate_semigroups(order, |s| out.push(PySemigroup { inner: s.clone() })).map_err(to_py)?;
    Ok(out)
}

#[pymodule]
fn pysemihyp(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PySemigroup>()?;
    m.add_function(wrap_pyfunction!(fixtures, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate, m)?)?;
    m.add("SemigroupError", m.py().get_type::<SemigroupError>())?;
    m.add("InconsistencyError", m.py().get_type::<InconsistencyError>())?;
    Ok(())
}
