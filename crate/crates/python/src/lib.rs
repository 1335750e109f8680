//! Python bindings. Rationals cross the boundary as `"p/q"` strings; Python
//! ints and `fractions.Fraction` are accepted wherever a rational is expected.

use std::collections::BTreeMap;

use algsoliton_core::catalog::{self, SpaceType};
use algsoliton_core::report::{analyze, SpaceFile};
use algsoliton_core::{checks, GeometryReport, Matrix, Rational, ReductiveMetricSpace};
use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};

create_exception!(algsoliton, AlgSolitonError, PyValueError);

fn err(e: impl std::fmt::Display) -> PyErr {
    AlgSolitonError::new_err(e.to_string())
}

fn rational(v: &Bound<'_, PyAny>) -> PyResult<Rational> {
    v.str()?.to_cow()?.trim().parse::<Rational>().map_err(err)
}

fn matrix_rows(m: &Matrix) -> Vec<Vec<String>> {
    m.to_rows()
        .iter()
        .map(|r| r.iter().map(ToString::to_string).collect())
        .collect()
}

fn json_to_py<'py>(py: Python<'py>, text: &str) -> PyResult<Bound<'py, PyAny>> {
    py.import("json")?.call_method1("loads", (text,))
}

/// A reductive homogeneous space g = m ⊕ h with an ad(h)-invariant metric on m.
#[pyclass(name = "Space", module = "algsoliton", frozen)]
struct PySpace {
    name: String,
    parameters: BTreeMap<String, Rational>,
    inner: ReductiveMetricSpace,
}

#[pymethods]
impl PySpace {
    /// Builds a catalog family: `Space.catalog("A", delta="3/2")`.
    #[staticmethod]
    #[pyo3(signature = (space, **params))]
    fn catalog(space: &str, params: Option<&Bound<'_, PyDict>>) -> PyResult<Self> {
        let ty: SpaceType = space.parse().map_err(err)?;
        let mut given = BTreeMap::new();
        if let Some(d) = params {
            for (k, v) in d.iter() {
                given.insert(k.extract::<String>()?, rational(&v)?);
            }
        }
        let inner = catalog::build(ty, &given).map_err(err)?;
        Ok(PySpace {
            name: ty.to_string(),
            parameters: given,
            inner,
        })
    }

    /// Parses the JSON space description used by the command-line tool.
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let file = SpaceFile::from_json(text).map_err(err)?;
        let inner = file.to_space().map_err(err)?;
        Ok(PySpace {
            name: file.name,
            parameters: BTreeMap::new(),
            inner,
        })
    }

    fn to_json(&self) -> String {
        SpaceFile::from_space(&self.name, &self.inner).to_json()
    }

    #[getter]
    fn name(&self) -> &str {
        &self.name
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    #[getter]
    fn m_dim(&self) -> usize {
        self.inner.m_dim()
    }

    #[getter]
    fn metric(&self) -> Vec<Vec<String>> {
        matrix_rows(self.inner.metric())
    }

    /// `None` if the Jacobi identity holds, else `((i, j, k), jacobiator)`.
    fn check_jacobi(&self) -> Option<((usize, usize, usize), Vec<String>)> {
        self.inner.algebra().check_jacobi().err().map(|f| {
            (
                (f.i, f.j, f.k),
                f.jacobiator.iter().map(ToString::to_string).collect(),
            )
        })
    }

    fn bracket(&self, x: Vec<Bound<'_, PyAny>>, y: Vec<Bound<'_, PyAny>>) -> PyResult<Vec<String>> {
        let x: Vec<Rational> = x.iter().map(rational).collect::<PyResult<_>>()?;
        let y: Vec<Rational> = y.iter().map(rational).collect::<PyResult<_>>()?;
        let z = self.inner.algebra().bracket(&x, &y).map_err(err)?;
        Ok(z.iter().map(ToString::to_string).collect())
    }

    fn ricci_operator(&self) -> Vec<Vec<String>> {
        matrix_rows(&GeometryReport::compute(&self.inner).ricci.operator)
    }

    fn scalar_curvature(&self) -> String {
        GeometryReport::compute(&self.inner)
            .ricci
            .scalar
            .to_string()
    }

    /// Basis of Der(g), each element an n×n matrix whose column l is D(x_l).
    fn derivations(&self) -> PyResult<Vec<Vec<Vec<String>>>> {
        let der = self.inner.algebra().derivation_space().map_err(err)?;
        Ok(der.basis.iter().map(matrix_rows).collect())
    }

    /// Full analysis report as a dict, with the same keys as the JSON report.
    fn analyze<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        let report = analyze(&self.name, self.parameters.clone(), &self.inner).map_err(err)?;
        json_to_py(py, &report.to_json())
    }

    /// The soliton part of `analyze()`.
    fn solve<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        self.analyze(py)?.get_item("soliton")
    }

    /// Runs the invariant suite; returns a list of (name, passed, detail).
    fn verify(&self) -> Vec<(String, bool, Option<String>)> {
        checks::run_all(&self.inner)
            .into_iter()
            .map(|o| (o.invariant.name().to_string(), o.passed(), o.result.err()))
            .collect()
    }

    fn __repr__(&self) -> String {
        let params: Vec<String> = self
            .parameters
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        format!(
            "Space({:?}, dim={}, m_dim={}{}{})",
            self.name,
            self.inner.dim(),
            self.inner.m_dim(),
            if params.is_empty() { "" } else { ", " },
            params.join(", ")
        )
    }
}

/// The catalog families with their parameters and domains.
#[pyfunction]
fn catalog_types<'py>(py: Python<'py>) -> PyResult<Bound<'py, PyList>> {
    let out = PyList::empty(py);
    for ty in SpaceType::ALL {
        let d = PyDict::new(py);
        d.set_item("space", ty.to_string())?;
        d.set_item("signature", ty.signature())?;
        let params = PyList::empty(py);
        for p in ty.params() {
            params.append((p.name, p.domain))?;
        }
        d.set_item("parameters", params)?;
        out.append(d)?;
    }
    Ok(out)
}

#[pymodule]
pub fn algsoliton(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PySpace>()?;
    m.add_function(wrap_pyfunction!(catalog_types, m)?)?;
    m.add("AlgSolitonError", m.py().get_type::<AlgSolitonError>())?;
    Ok(())
}
