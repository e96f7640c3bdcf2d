//! Python bindings for ropebound-core.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use ropebound_core::bounds::{self, BoundsCertificate, CertifyConfig};
use ropebound_core::cord::CordDiagram;
use ropebound_core::diagram;
use ropebound_core::family::{self, FamilySpec};
use ropebound_core::homfly::{self as hf, HomflyConfig, DEFAULT_CAP};
use ropebound_core::lattice::{self, OrientationAssignment};
use ropebound_core::{projection, seifert, Error};

fn err(e: Error) -> PyErr {
    if e.is_internal() {
        PyRuntimeError::new_err(e.to_string())
    } else {
        PyValueError::new_err(e.to_string())
    }
}

fn config(cap: usize, parallel: bool) -> HomflyConfig {
    HomflyConfig { cap, parallel, ..HomflyConfig::default() }
}

fn orientation(bits: Option<&str>, components: usize) -> PyResult<OrientationAssignment> {
    match bits {
        None => Ok(OrientationAssignment::forward(components)),
        Some(b) => {
            let o = OrientationAssignment::parse(b).map_err(err)?;
            if o.len() != components {
                return Err(PyValueError::new_err(format!("expected {components} orientation bits")));
            }
            Ok(o)
        }
    }
}

/// A polygonal link on the integer lattice.
#[pyclass(name = "LatticeLink", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyLatticeLink(lattice::LatticeLink);

#[pymethods]
impl PyLatticeLink {
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        lattice::parse_lattice_link(text).map(Self).map_err(err)
    }

    #[staticmethod]
    fn load(path: &str) -> PyResult<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| PyValueError::new_err(format!("{path}: {e}")))?;
        Self::parse(&text)
    }

    fn to_text(&self) -> String {
        self.0.to_text()
    }

    #[getter]
    fn length(&self) -> usize {
        self.0.length()
    }

    #[getter]
    fn components(&self) -> usize {
        self.0.num_components()
    }

    /// `(x, y, z)` step counts.
    fn step_counts(&self) -> (usize, usize, usize) {
        let c = self.0.step_counts();
        (c.x_steps, c.y_steps, c.z_steps)
    }

    /// Violations as strings; empty when the link is valid.
    fn violations(&self) -> Vec<String> {
        self.0.validate().violations.iter().map(|v| v.to_string()).collect()
    }

    /// PD code and cord-diagram texts of the regular projection.
    #[pyo3(signature = (orientation=None, seed=0))]
    fn project(&self, orientation: Option<&str>, seed: u64) -> PyResult<(PyDiagram, Vec<String>)> {
        let o = self::orientation(orientation, self.0.num_components())?;
        let p = projection::project_seeded(&self.0, &o, seed).map_err(err)?;
        Ok((PyDiagram(p.diagram), p.cord_diagrams.iter().map(|c| c.to_text()).collect()))
    }

    fn __repr__(&self) -> String {
        format!("LatticeLink(length={}, components={})", self.0.length(), self.0.num_components())
    }
}

/// An oriented planar diagram in PD notation.
#[pyclass(name = "PlanarDiagram", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyDiagram(diagram::PlanarDiagram);

#[pymethods]
impl PyDiagram {
    #[staticmethod]
    fn from_pd(text: &str) -> PyResult<Self> {
        diagram::PlanarDiagram::from_pd(text).map(Self).map_err(err)
    }

    #[staticmethod]
    fn braid_closure(strands: usize, word: Vec<i32>) -> PyResult<Self> {
        diagram::braid_closure(strands, &word).map(Self).map_err(err)
    }

    fn to_pd(&self) -> String {
        self.0.to_pd()
    }

    #[getter]
    fn crossings(&self) -> usize {
        self.0.num_crossings()
    }

    #[getter]
    fn components(&self) -> usize {
        self.0.num_components()
    }

    fn writhe(&self) -> i64 {
        self.0.writhe() as i64
    }

    fn mirror(&self) -> Self {
        Self(self.0.mirror())
    }

    fn reoriented(&self, bits: &str) -> PyResult<Self> {
        let o = orientation(Some(bits), self.0.num_components())?;
        Ok(Self(self.0.with_reversed(o.flags())))
    }

    fn seifert_circles(&self) -> usize {
        seifert::smooth(&self.0).closed
    }

    #[pyo3(signature = (cap=DEFAULT_CAP, parallel=false))]
    fn homfly(&self, cap: usize, parallel: bool) -> PyResult<String> {
        hf::homfly_with(&self.0, &config(cap, parallel)).map(|p| p.to_string()).map_err(err)
    }

    /// Largest Morton–Franks–Williams bound over orientations, with its witness.
    #[pyo3(signature = (cap=DEFAULT_CAP, parallel=false))]
    fn absolute_mfw(&self, cap: usize, parallel: bool) -> PyResult<(i32, String)> {
        let r = hf::absolute_mfw(&self.0, &config(cap, parallel)).map_err(err)?;
        Ok((r.b0_max, r.witness.to_string()))
    }

    fn __repr__(&self) -> String {
        self.0.to_pd()
    }
}

/// A lower-bound certificate.
#[pyclass(name = "Certificate", frozen)]
struct PyCertificate(BoundsCertificate);

#[pymethods]
impl PyCertificate {
    #[staticmethod]
    fn from_toml(text: &str) -> PyResult<Self> {
        BoundsCertificate::from_toml(text).map(Self).map_err(err)
    }

    fn to_toml(&self) -> PyResult<String> {
        self.0.to_toml().map_err(err)
    }

    fn summary(&self) -> String {
        self.0.summary()
    }

    #[getter]
    fn b0(&self) -> i32 {
        self.0.b0()
    }

    #[getter]
    fn length(&self) -> usize {
        self.0.length
    }

    #[getter]
    fn seifert_circles(&self) -> usize {
        self.0.seifert.rewritten
    }

    #[getter]
    fn homfly(&self) -> String {
        self.0.homfly.rewritten.clone()
    }

    /// `(p, q)` with ropelength > p/q.
    #[getter]
    fn ropelength_bound(&self) -> PyResult<(i64, i64)> {
        let r = bounds::ropelength_lower(self.0.b0() as i64).map_err(err)?;
        Ok((*r.numer(), *r.denom()))
    }

    fn all_pass(&self) -> bool {
        self.0.all_pass()
    }

    /// Discrepancies found when re-deriving every check; empty means consistent.
    fn recheck(&self) -> Vec<String> {
        self.0.recheck()
    }

    fn __repr__(&self) -> String {
        self.0.summary()
    }
}

#[pyfunction]
#[pyo3(signature = (link, cap=DEFAULT_CAP, parallel=false))]
fn certify(link: &PyLatticeLink, cap: usize, parallel: bool) -> PyResult<PyCertificate> {
    bounds::certify(&link.0, &CertifyConfig { homfly: config(cap, parallel) }).map(PyCertificate).map_err(err)
}

/// `B/14` as `(p, q)`.
#[pyfunction]
fn ropelength_lower(b: i64) -> PyResult<(i64, i64)> {
    let r = bounds::ropelength_lower(b).map_err(err)?;
    Ok((*r.numer(), *r.denom()))
}

/// Morton–Franks–Williams bound of a polynomial in the text format.
#[pyfunction]
fn mfw_bound(poly: &str) -> PyResult<i32> {
    let p = hf::LaurentPoly2::parse(poly).map_err(err)?;
    hf::mfw_bound(&p).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (spec, cap=DEFAULT_CAP))]
fn family_pd(spec: &str, cap: usize) -> PyResult<PyDiagram> {
    let f: FamilySpec = spec.parse().map_err(err)?;
    family::family_pd(&f, cap).map(PyDiagram).map_err(err)
}

#[pyfunction]
fn family_braid_index(spec: &str) -> PyResult<usize> {
    let f: FamilySpec = spec.parse().map_err(err)?;
    family::family_braid_index(&f).map_err(err)
}

/// Coherent rewriting of a cord diagram given in text form.
/// Returns `(closed circles, matching)`.
#[pyfunction]
fn make_coherent(cord_text: &str) -> PyResult<(usize, Vec<(usize, usize)>)> {
    let cd = CordDiagram::parse(cord_text).map_err(err)?;
    let r = seifert::make_coherent(&cd).map_err(err)?;
    if !seifert::is_coherent(&r.realization).map_err(err)? {
        return Err(PyRuntimeError::new_err("rewritten realization is not coherent"));
    }
    Ok((r.closed, r.matching))
}

#[pymodule]
fn ropebound(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyLatticeLink>()?;
    m.add_class::<PyDiagram>()?;
    m.add_class::<PyCertificate>()?;
    m.add_function(wrap_pyfunction!(certify, m)?)?;
    m.add_function(wrap_pyfunction!(ropelength_lower, m)?)?;
    m.add_function(wrap_pyfunction!(mfw_bound, m)?)?;
    m.add_function(wrap_pyfunction!(family_pd, m)?)?;
    m.add_function(wrap_pyfunction!(family_braid_index, m)?)?;
    m.add_function(wrap_pyfunction!(make_coherent, m)?)?;
    m.add("DEFAULT_CAP", DEFAULT_CAP)?;
    Ok(())
}
