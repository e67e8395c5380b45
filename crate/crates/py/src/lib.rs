//! Python bindings: theories, cube maps, hom-sets, decomposition cubes,
//! finite cubical sets, invariant sweeps and filling certificates.

use std::sync::Arc;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use cubeset::anodyne::{certify as certify_rs, verify_json, CertifyRequest, SubcomplexSpec};
use cubeset::checks;
use cubeset::comparison::left_extend as left_extend_rs;
use cubeset::cube_theory::{self as ct, active_face_factor, enumerate_hom, is_member as is_member_rs};
use cubeset::decomposition::{standard_decomposition as standard_decomposition_rs, stats as stats_rs, Flavor};
use cubeset::{cubical_set as cs, Error};

fn py_err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse<T: std::str::FromStr<Err = Error>>(s: &str) -> PyResult<T> {
    s.parse().map_err(py_err)
}

/// A subset of {meet, join, sigma, rho, delta}.
#[pyclass(name = "Theory", frozen, eq, hash, from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyTheory(ct::Theory);

#[pymethods]
impl PyTheory {
    /// Parse `none`, `meet,sigma`, `meetjoin`, `poset`, `full`, ...
    #[new]
    fn new(spec: &str) -> PyResult<Self> {
        Ok(PyTheory(parse(spec)?))
    }

    fn names(&self) -> Vec<&'static str> {
        self.0.names()
    }

    fn is_subtheory_of(&self, other: &PyTheory) -> bool {
        self.0.is_subtheory_of(other.0)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Theory({:?})", self.0.names().join(","))
    }
}

/// A map {0,1}^m → {0,1}^n given by its table of n-bit strings.
#[pyclass(name = "CubeMap", frozen, eq, hash, from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyCubeMap(ct::CubeMap);

#[pymethods]
impl PyCubeMap {
    #[new]
    fn new(m: usize, n: usize, table: Vec<String>) -> PyResult<Self> {
        Ok(PyCubeMap(ct::CubeMap::from_strings(m, n, &table).map_err(py_err)?))
    }

    #[staticmethod]
    fn identity(n: usize) -> Self {
        PyCubeMap(ct::CubeMap::identity(n))
    }

    /// Parse `{"m", "n", "table"}`.
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        serde_json::from_str(text).map(PyCubeMap).map_err(|e| PyValueError::new_err(e.to_string()))
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&self.0).expect("maps serialize")
    }

    #[getter]
    fn m(&self) -> usize {
        self.0.dom()
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.cod()
    }

    #[getter]
    fn table(&self) -> Vec<String> {
        self.0.table_strings()
    }

    /// `self ∘ other`.
    fn after(&self, other: &PyCubeMap) -> PyResult<Self> {
        self.0.after(&other.0).map(PyCubeMap).map_err(py_err)
    }

    fn tensor(&self, other: &PyCubeMap) -> Self {
        PyCubeMap(self.0.tensor(&other.0))
    }

    fn is_active(&self) -> bool {
        ct::is_active(&self.0)
    }

    fn fixed_coordinates(&self) -> Vec<(usize, u8)> {
        ct::fixed_coordinates(&self.0)
    }

    /// `(kappa, psi)` with `self = faces(kappa) ∘ psi` and `psi` active.
    fn active_face_factor(&self) -> (Vec<(usize, u8)>, PyCubeMap) {
        let (kappa, psi) = active_face_factor(&self.0);
        (kappa.entries().to_vec(), PyCubeMap(psi))
    }

    /// `(base_dimension, tail_length)`.
    fn stats(&self) -> (usize, usize) {
        let s = stats_rs(&self.0);
        (s.base_dimension, s.tail_length)
    }

    fn __repr__(&self) -> String {
        format!("CubeMap({}, {}, {:?})", self.0.dom(), self.0.cod(), self.0.table_strings())
    }
}

/// Every map ◻^m → ◻^n of a theory, in canonical order.
#[pyfunction]
fn hom(theory: &PyTheory, m: usize, n: usize) -> PyResult<Vec<PyCubeMap>> {
    Ok(enumerate_hom(theory.0, m, n).map_err(py_err)?.maps().iter().cloned().map(PyCubeMap).collect())
}

#[pyfunction]
fn hom_count(theory: &PyTheory, m: usize, n: usize) -> PyResult<usize> {
    Ok(enumerate_hom(theory.0, m, n).map_err(py_err)?.len())
}

#[pyfunction]
fn is_member(theory: &PyTheory, f: &PyCubeMap) -> PyResult<bool> {
    is_member_rs(theory.0, &f.0).map_err(py_err)
}

/// A generator by kind name: face, diagonal, projection, connection,
/// transposition or reversal.
#[pyfunction]
#[pyo3(signature = (theory, kind, n, i, eps=None))]
fn generator(theory: &PyTheory, kind: &str, n: usize, i: usize, eps: Option<u8>) -> PyResult<PyCubeMap> {
    let kind: ct::GeneratorKind = parse(kind)?;
    ct::generator(theory.0, kind, n, i, eps).map(PyCubeMap).map_err(py_err)
}

/// `N_k(phi)` for the `meet` or `join` flavor.
#[pyfunction]
#[pyo3(signature = (phi, k, flavor="meet"))]
fn standard_decomposition(phi: &PyCubeMap, k: usize, flavor: &str) -> PyResult<PyCubeMap> {
    let fl: Flavor = parse(flavor)?;
    standard_decomposition_rs(&phi.0, k, fl).map(PyCubeMap).map_err(py_err)
}

/// A finite cubical set truncated at some dimension.
#[pyclass(name = "CubicalSet", frozen)]
struct PyCubicalSet(Arc<cs::CubicalSet>);

#[pymethods]
impl PyCubicalSet {
    #[getter]
    fn theory(&self) -> PyTheory {
        PyTheory(self.0.theory())
    }

    #[getter]
    fn truncation(&self) -> usize {
        self.0.truncation()
    }

    /// Number of cubes in each dimension.
    fn counts(&self) -> Vec<usize> {
        self.0.counts()
    }

    fn nondegenerate_counts(&self) -> PyResult<Vec<usize>> {
        self.0.nondegenerate_counts().map_err(py_err)
    }

    /// Index of the cube `x · f`.
    fn act(&self, d: usize, x: usize, f: &PyCubeMap) -> PyResult<usize> {
        self.0.act(d, x, &f.0).map_err(py_err)
    }

    fn __repr__(&self) -> String {
        format!("CubicalSet({}, counts={:?})", self.0.theory(), self.0.counts())
    }
}

#[pyfunction]
#[pyo3(signature = (theory, n, truncation=3))]
fn representable(theory: &PyTheory, n: usize, truncation: usize) -> PyResult<PyCubicalSet> {
    cs::representable(theory.0, n, truncation).map(PyCubicalSet).map_err(py_err)
}

#[pyfunction]
#[pyo3(signature = (theory, n, truncation=3))]
fn boundary(theory: &PyTheory, n: usize, truncation: usize) -> PyResult<PyCubicalSet> {
    let sub = cs::boundary(theory.0, n, truncation).map_err(py_err)?;
    Ok(PyCubicalSet(sub.to_set().map_err(py_err)?.0))
}

#[pyfunction]
#[pyo3(signature = (theory, n, i, eps, truncation=3))]
fn open_box(theory: &PyTheory, n: usize, i: usize, eps: u8, truncation: usize) -> PyResult<PyCubicalSet> {
    let sub = cs::open_box(theory.0, n, i, eps, truncation).map_err(py_err)?;
    Ok(PyCubicalSet(sub.to_set().map_err(py_err)?.0))
}

#[pyfunction]
fn cartesian_product(x: &PyCubicalSet, y: &PyCubicalSet) -> PyResult<PyCubicalSet> {
    Ok(PyCubicalSet(cs::cartesian_product(&x.0, &y.0).map_err(py_err)?.set))
}

#[pyfunction]
fn geometric_product(x: &PyCubicalSet, y: &PyCubicalSet) -> PyResult<PyCubicalSet> {
    Ok(PyCubicalSet(cs::geometric_product(&x.0, &y.0).map_err(py_err)?.set))
}

/// The left Kan extension of `x` along its theory's inclusion into `b`.
#[pyfunction]
fn left_extend(x: &PyCubicalSet, b: &PyTheory) -> PyResult<PyCubicalSet> {
    Ok(PyCubicalSet(left_extend_rs(&x.0, b.0).map_err(py_err)?.set))
}

/// Run an invariant sweep; returns the report as JSON.
#[pyfunction]
#[pyo3(signature = (suite, max_dim=None, max_k=None, theory=None, flavor="meet"))]
fn run_check(
    suite: &str,
    max_dim: Option<usize>,
    max_k: Option<usize>,
    theory: Option<&PyTheory>,
    flavor: &str,
) -> PyResult<String> {
    let d = checks::default_bounds(suite).map_err(py_err)?;
    let bounds = checks::Bounds {
        max_dim: max_dim.unwrap_or(d.max_dim),
        max_k: max_k.unwrap_or(d.max_k),
        theory: theory.map(|t| t.0),
        flavor: parse(flavor)?,
    };
    let report = checks::run(suite, &bounds).map_err(py_err)?;
    Ok(serde_json::to_string(&report).expect("reports serialize"))
}

#[pyfunction]
fn check_suites() -> Vec<&'static str> {
    checks::SUITES.iter().map(|s| s.id).collect()
}

/// A filling certificate as JSON.
#[pyfunction]
#[pyo3(signature = (theory_a, theory_b, n, truncation=3, source="unit", target="full", flavor="meet"))]
fn certify(
    theory_a: &PyTheory,
    theory_b: &PyTheory,
    n: usize,
    truncation: usize,
    source: &str,
    target: &str,
    flavor: &str,
) -> PyResult<String> {
    let req = CertifyRequest {
        theory_a: theory_a.0,
        theory_b: theory_b.0,
        n,
        truncation,
        source: parse::<SubcomplexSpec>(source)?,
        target: parse::<SubcomplexSpec>(target)?,
        flavor: parse(flavor)?,
    };
    let c = certify_rs(&req).map_err(py_err)?;
    Ok(serde_json::to_string(&c.certificate).expect("certificates serialize"))
}

/// `(exit_code, report_json)` for a certificate given as JSON.
#[pyfunction]
fn verify(certificate: &str) -> (i32, String) {
    let report = verify_json(certificate);
    (report.outcome.exit_code(), serde_json::to_string(&report).expect("reports serialize"))
}

#[pymodule]
fn pycubeset(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyTheory>()?;
    m.add_class::<PyCubeMap>()?;
    m.add_class::<PyCubicalSet>()?;
    m.add_function(wrap_pyfunction!(hom, m)?)?;
    m.add_function(wrap_pyfunction!(hom_count, m)?)?;
    m.add_function(wrap_pyfunction!(is_member, m)?)?;
    m.add_function(wrap_pyfunction!(generator, m)?)?;
    m.add_function(wrap_pyfunction!(standard_decomposition, m)?)?;
    m.add_function(wrap_pyfunction!(representable, m)?)?;
    m.add_function(wrap_pyfunction!(boundary, m)?)?;
    m.add_function(wrap_pyfunction!(open_box, m)?)?;
    m.add_function(wrap_pyfunction!(cartesian_product, m)?)?;
    m.add_function(wrap_pyfunction!(geometric_product, m)?)?;
    m.add_function(wrap_pyfunction!(left_extend, m)?)?;
    m.add_function(wrap_pyfunction!(run_check, m)?)?;
    m.add_function(wrap_pyfunction!(check_suites, m)?)?;
    m.add_function(wrap_pyfunction!(certify, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
