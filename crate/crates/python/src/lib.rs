//! Python bindings for the hyperring engine.
//!
//! Exposes a `Hyperring` class wrapping the validated tables plus the
//! ideal calculus, classification, and the theorem suite. Structured
//! reports cross the boundary as JSON strings; index sets as lists.

use std::sync::Arc;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use hyperring::classify::{classify, find_one_triple_zeros};
use hyperring::construct::{matrix_ring, product_ring, quotient_ring, z4h, zn_template};
use hyperring::gamma::gamma_star;
use hyperring::harness::{builtin_catalog, run_theorem_suite, Limits, Mode};
use hyperring::ideal::{
    colon_element, colon_set, d_set, enumerate_hyperideals, generate_hyperideal, is_c_hyperideal,
    is_hyperideal, radical, ring_flags,
};
use hyperring::ring::{validate_from_json, Ring};
use hyperring::set::ElemSet;

fn err<E: std::fmt::Display>(e: E) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_set(ring: &Ring, members: &[usize]) -> PyResult<ElemSet> {
    if members.iter().any(|&i| i >= ring.n) {
        return Err(PyValueError::new_err(format!(
            "index out of range for n={}",
            ring.n
        )));
    }
    Ok(ElemSet::from_indices(members.iter().copied()))
}

fn require_ideal(ring: &Ring, set: &ElemSet) -> PyResult<()> {
    if !is_hyperideal(ring, set) {
        return Err(PyValueError::new_err(format!(
            "{{{}}} is not a hyperideal",
            set.csv()
        )));
    }
    Ok(())
}

/// A finite multiplicative hyperring with validated tables.
#[pyclass]
struct Hyperring {
    ring: Ring,
}

#[pymethods]
impl Hyperring {
    /// Validate a table document (the same JSON the CLI reads).
    #[staticmethod]
    fn from_json(doc: &str) -> PyResult<Hyperring> {
        Ok(Hyperring { ring: Arc::new(validate_from_json(doc).map_err(err)?) })
    }

    /// The 4-element example ring with set-valued multiplication.
    #[staticmethod]
    fn z4h() -> Hyperring {
        Hyperring { ring: z4h() }
    }

    /// `Z_n` with `x∘y = {x·a·y mod n : a in multipliers}`.
    #[staticmethod]
    fn template_zn(n: usize, multipliers: Vec<u64>) -> PyResult<Hyperring> {
        if n == 0 || multipliers.is_empty() {
            return Err(PyValueError::new_err("need n >= 1 and nonempty multipliers"));
        }
        Ok(Hyperring { ring: zn_template(n, &multipliers).map_err(err)? })
    }

    fn product(&self, other: &Hyperring) -> PyResult<Hyperring> {
        Ok(Hyperring { ring: product_ring(&self.ring, &other.ring).map_err(err)? })
    }

    fn quotient(&self, ideal: Vec<usize>) -> PyResult<Hyperring> {
        let set = to_set(&self.ring, &ideal)?;
        require_ideal(&self.ring, &set)?;
        Ok(Hyperring { ring: quotient_ring(&self.ring, &set).map_err(err)?.ring })
    }

    /// The 2x2 hypermatrix ring (base carrier at most 4 elements).
    fn matrix(&self) -> PyResult<Hyperring> {
        Ok(Hyperring { ring: matrix_ring(&self.ring, 2).map_err(err)? })
    }

    #[getter]
    fn name(&self) -> String {
        self.ring.name.clone()
    }

    #[getter]
    fn n(&self) -> usize {
        self.ring.n
    }

    #[getter]
    fn zero(&self) -> usize {
        self.ring.zero
    }

    fn add(&self, a: usize, b: usize) -> PyResult<usize> {
        if a >= self.ring.n || b >= self.ring.n {
            return Err(PyValueError::new_err("index out of range"));
        }
        Ok(self.ring.add(a, b))
    }

    /// The set `a∘b` as a sorted list.
    fn mul(&self, a: usize, b: usize) -> PyResult<Vec<usize>> {
        if a >= self.ring.n || b >= self.ring.n {
            return Err(PyValueError::new_err("index out of range"));
        }
        Ok(self.ring.mul(a, b).to_vec())
    }

    fn to_json(&self) -> String {
        self.ring.to_json()
    }

    fn identities(&self) -> Vec<usize> {
        self.ring.units().identities.to_vec()
    }

    fn units(&self) -> Vec<usize> {
        self.ring.units().units.to_vec()
    }

    fn strongly_distributive(&self) -> bool {
        self.ring.strongly_distributive()
    }

    /// Whole-ring predicates as a dict.
    fn flags<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, pyo3::types::PyDict>> {
        let f = ring_flags(&self.ring).map_err(err)?;
        let d = pyo3::types::PyDict::new(py);
        d.set_item("strongly_distributive", f.strongly_distributive)?;
        d.set_item("reduced", f.reduced)?;
        d.set_item("integral_hyperdomain", f.integral_hyperdomain)?;
        d.set_item("hyperfield", f.hyperfield)?;
        d.set_item("regular_ring", f.regular_ring)?;
        d.set_item("local", f.local)?;
        d.set_item("has_identity", f.has_identity)?;
        d.set_item("has_scalar_identity", f.has_scalar_identity)?;
        Ok(d)
    }

    /// All hyperideals, sorted by size then lexicographically.
    fn ideals(&self) -> PyResult<Vec<Vec<usize>>> {
        Ok(enumerate_hyperideals(&self.ring)
            .map_err(err)?
            .iter()
            .map(|i| i.members.to_vec())
            .collect())
    }

    fn generate_ideal(&self, seed: Vec<usize>) -> PyResult<Vec<usize>> {
        let set = to_set(&self.ring, &seed)?;
        Ok(generate_hyperideal(&self.ring, &set).members.to_vec())
    }

    fn is_ideal(&self, members: Vec<usize>) -> PyResult<bool> {
        Ok(is_hyperideal(&self.ring, &to_set(&self.ring, &members)?))
    }

    fn is_c_ideal(&self, members: Vec<usize>) -> PyResult<bool> {
        let set = to_set(&self.ring, &members)?;
        require_ideal(&self.ring, &set)?;
        Ok(is_c_hyperideal(&self.ring, &set))
    }

    fn radical(&self, ideal: Vec<usize>) -> PyResult<Vec<usize>> {
        let set = to_set(&self.ring, &ideal)?;
        require_ideal(&self.ring, &set)?;
        Ok(radical(&self.ring, &set).map_err(err)?.to_vec())
    }

    fn d_set(&self, ideal: Vec<usize>) -> PyResult<Vec<usize>> {
        let set = to_set(&self.ring, &ideal)?;
        require_ideal(&self.ring, &set)?;
        Ok(d_set(&self.ring, &set).to_vec())
    }

    /// `(I : a)` for one element.
    fn colon(&self, ideal: Vec<usize>, by: usize) -> PyResult<Vec<usize>> {
        let set = to_set(&self.ring, &ideal)?;
        require_ideal(&self.ring, &set)?;
        if by >= self.ring.n {
            return Err(PyValueError::new_err("index out of range"));
        }
        Ok(colon_element(&self.ring, &set, by).members.to_vec())
    }

    /// `(I : J)` for a subset.
    fn colon_ideal(&self, ideal: Vec<usize>, by: Vec<usize>) -> PyResult<Vec<usize>> {
        let set = to_set(&self.ring, &ideal)?;
        require_ideal(&self.ring, &set)?;
        let by = to_set(&self.ring, &by)?;
        Ok(colon_set(&self.ring, &set, &by).members.to_vec())
    }

    /// Full classification report as a JSON string (same shape as the
    /// CLI `classify` output).
    fn classify(&self, ideal: Vec<usize>) -> PyResult<String> {
        let set = to_set(&self.ring, &ideal)?;
        require_ideal(&self.ring, &set)?;
        let report = classify(&self.ring, &set).map_err(err)?;
        Ok(serde_json::to_string(&report).expect("report serializes"))
    }

    /// The fundamental-relation partition as a list of classes.
    fn gamma_classes(&self) -> PyResult<Vec<Vec<usize>>> {
        let q = gamma_star(&self.ring).map_err(err)?;
        Ok(q.classes.iter().map(|c| c.to_vec()).collect())
    }

    fn triple_zeros(&self, ideal: Vec<usize>) -> PyResult<Vec<(usize, usize, usize)>> {
        let set = to_set(&self.ring, &ideal)?;
        require_ideal(&self.ring, &set)?;
        Ok(find_one_triple_zeros(&self.ring, &set)
            .map_err(err)?
            .iter()
            .map(|t| (t.x, t.y, t.z))
            .collect())
    }

    fn __repr__(&self) -> String {
        format!("Hyperring('{}', n={})", self.ring.name, self.ring.n)
    }
}

/// Ring names in the built-in catalog.
#[pyfunction]
fn catalog_names() -> PyResult<Vec<String>> {
    Ok(builtin_catalog(&Limits::default())
        .map_err(err)?
        .entries
        .iter()
        .map(|e| e.name.clone())
        .collect())
}

/// Run the theorem suite over the built-in catalog; returns the JSON
/// report. `mode` is "all" or "c-only"; `only` filters theorem ids.
#[pyfunction]
#[pyo3(signature = (mode="c-only", only=None))]
fn run_theorems(mode: &str, only: Option<Vec<String>>) -> PyResult<String> {
    let mode = Mode::parse(mode)
        .ok_or_else(|| PyValueError::new_err("mode must be 'all' or 'c-only'"))?;
    let catalog = builtin_catalog(&Limits::default()).map_err(err)?;
    let report = run_theorem_suite(&catalog, only.as_deref(), mode).map_err(err)?;
    Ok(report.to_json())
}

#[pymodule]
fn hyperring_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Hyperring>()?;
    m.add_function(wrap_pyfunction!(catalog_names, m)?)?;
    m.add_function(wrap_pyfunction!(run_theorems, m)?)?;
    Ok(())
}
