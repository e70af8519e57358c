use std::collections::BTreeMap;

use ::elnet::exactla::{fmt_rational, parse_rational};
use ::elnet::groves::groves;
use ::elnet::lamdimer::{build_bipartite, matchings_delta};
use ::elnet::netmodel::{generate, Kind};
use ::elnet::partitions::{catalan, enumerate_nc};
use ::elnet::report::{Status, VerificationReport};
use ::elnet::response::response_matrix;
use ::elnet::suite::{verify_network, verify_rep};
use ::elnet::sympl::{omega_of, q_kernel};
use ::elnet::{ElectricalNetwork, Move, RatMatrix, Rational};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyTuple};

fn err(e: ::elnet::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// Accepts anything whose `str()` is `"p/q"` or `"p"`: ints, strings and
/// `fractions.Fraction`.
fn rational(obj: &Bound<'_, PyAny>) -> PyResult<Rational> {
    parse_rational(&obj.str()?.to_cow()?).map_err(err)
}

type StringMatrix = Vec<Vec<String>>;

fn strings(m: &RatMatrix) -> StringMatrix {
    (0..m.rows())
        .map(|i| m.row(i).iter().map(fmt_rational).collect())
        .collect()
}

fn report_dict<'py>(py: Python<'py>, r: &VerificationReport) -> PyResult<Bound<'py, PyDict>> {
    let out = PyDict::new(py);
    out.set_item("subject", &r.subject)?;
    out.set_item("verdict", r.verdict)?;
    let checks = PyDict::new(py);
    for c in &r.checks {
        let status = match c.status {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Error => "error",
            Status::Skipped => "skipped",
        };
        let entry = PyDict::new(py);
        entry.set_item("status", status)?;
        entry.set_item("witness", c.witness.as_ref().map(|w| w.to_string()))?;
        entry.set_item("detail", c.detail.clone())?;
        checks.set_item(&c.name, entry)?;
    }
    out.set_item("checks", checks)?;
    Ok(out)
}

/// A circular planar electrical network with exact rational weights.
#[pyclass(name = "Network", frozen)]
struct PyNetwork {
    inner: ElectricalNetwork,
}

#[pymethods]
impl PyNetwork {
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let inner = ElectricalNetwork::from_json(text).map_err(err)?;
        Ok(PyNetwork { inner })
    }

    #[staticmethod]
    fn empty(n: usize) -> PyResult<Self> {
        Ok(PyNetwork {
            inner: ElectricalNetwork::empty(n).map_err(err)?,
        })
    }

    /// `kind` is one of empty, star, triangle, moves.
    #[staticmethod]
    #[pyo3(signature = (kind, n, seed = 0, moves = 0, weights = None))]
    fn generate(
        kind: &str,
        n: usize,
        seed: u64,
        moves: usize,
        weights: Option<Vec<Bound<'_, PyAny>>>,
    ) -> PyResult<Self> {
        let kind: Kind = kind.parse().map_err(err)?;
        let weights = weights
            .map(|ws| ws.iter().map(rational).collect::<PyResult<Vec<_>>>())
            .transpose()?;
        let inner = generate(kind, n, seed, moves, weights.as_deref()).map_err(err)?;
        Ok(PyNetwork { inner })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    fn to_json(&self) -> String {
        self.inner.to_json()
    }

    fn add_bridge(&self, k: usize, t: &Bound<'_, PyAny>) -> PyResult<Self> {
        let inner = self.inner.add_bridge(k, &rational(t)?).map_err(err)?;
        Ok(PyNetwork { inner })
    }

    fn add_spike(&self, k: usize, t: &Bound<'_, PyAny>) -> PyResult<Self> {
        let inner = self.inner.add_spike(k, &rational(t)?).map_err(err)?;
        Ok(PyNetwork { inner })
    }

    /// Applies a move written as `spike:k:t` or `bridge:k:t`.
    fn apply(&self, mv: &str) -> PyResult<Self> {
        let mv: Move = mv.parse().map_err(err)?;
        Ok(PyNetwork {
            inner: self.inner.apply(&mv).map_err(err)?,
        })
    }

    fn response(&self) -> Vec<Vec<String>> {
        strings(response_matrix(&self.inner).matrix())
    }

    /// Grove measurements keyed by partition, e.g. `"1 2|3"`.
    fn groves(&self) -> PyResult<BTreeMap<String, String>> {
        let t = groves(&self.inner).map_err(err)?;
        Ok(t.noncrossing_entries()
            .into_iter()
            .map(|(s, v)| (s.to_string(), fmt_rational(&v)))
            .collect())
    }

    /// Nonzero matching measurements keyed by index tuple.
    fn delta<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let d = matchings_delta(&build_bipartite(&self.inner)).map_err(err)?;
        let out = PyDict::new(py);
        for (s, v) in d.support() {
            out.set_item(PyTuple::new(py, s)?, fmt_rational(&v))?;
        }
        Ok(out)
    }

    /// `(omega, omega_tilde)` as nested lists of strings.
    fn omega(&self) -> PyResult<(StringMatrix, StringMatrix)> {
        let p = omega_of(&self.inner).map_err(err)?;
        Ok((strings(&p.omega), strings(&p.omega_tilde)))
    }

    /// All Plücker coordinates in lexicographic order, from `Ω` or from
    /// matchings.
    #[pyo3(signature = (method = "omega"))]
    fn pluecker(&self, method: &str) -> PyResult<Vec<String>> {
        let p = match method {
            "omega" => omega_of(&self.inner).map_err(err)?.pluecker(),
            "matching" => matchings_delta(&build_bipartite(&self.inner)).map_err(err)?,
            other => return Err(PyValueError::new_err(format!("unknown method {other:?}"))),
        };
        Ok(p.coords.iter().map(fmt_rational).collect())
    }

    #[pyo3(signature = (checks = None, seed = 0))]
    fn verify<'py>(
        &self,
        py: Python<'py>,
        checks: Option<Vec<String>>,
        seed: u64,
    ) -> PyResult<Bound<'py, PyDict>> {
        let r = verify_network(&self.inner, "network", &checks.unwrap_or_default(), seed)
            .map_err(err)?;
        report_dict(py, &r)
    }

    fn __repr__(&self) -> String {
        format!(
            "Network(n={}, internal={}, edges={})",
            self.inner.n(),
            self.inner.internal().len(),
            self.inner.edges().len()
        )
    }
}

/// Network-independent representation checks.
#[pyfunction]
#[pyo3(signature = (n, checks = None, seed = 0))]
fn rep<'py>(
    py: Python<'py>,
    n: usize,
    checks: Option<Vec<String>>,
    seed: u64,
) -> PyResult<Bound<'py, PyDict>> {
    let r = verify_rep(n, &checks.unwrap_or_default(), seed).map_err(err)?;
    report_dict(py, &r)
}

#[pyfunction]
fn kernel_dimension(n: usize) -> PyResult<usize> {
    Ok(q_kernel(n).map_err(err)?.len())
}

#[pyfunction]
fn noncrossing_partitions(n: usize) -> PyResult<Vec<String>> {
    Ok(enumerate_nc(n)
        .map_err(err)?
        .iter()
        .map(|p| p.to_string())
        .collect())
}

#[pymodule]
#[pyo3(name = "elnet")]
fn elnet_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyNetwork>()?;
    m.add_function(wrap_pyfunction!(rep, m)?)?;
    m.add_function(wrap_pyfunction!(kernel_dimension, m)?)?;
    m.add_function(wrap_pyfunction!(noncrossing_partitions, m)?)?;
    m.add("catalan_numbers", (1..=8).map(catalan).collect::<Vec<_>>())?;
    Ok(())
}
