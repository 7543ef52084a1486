use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use matroid_tutte::constellation::{self as cons, ModularCut};
use matroid_tutte::foundation::{self as found, FoundationReport};
use matroid_tutte::homology::{search_l3 as run_search_l3, sigma_complex};
use matroid_tutte::matroid::format::{matroid_to_text, parse_matroid};
use matroid_tutte::pasture::{self as past, PasturePresentation};
use matroid_tutte::{catalog, ElementSet};

fn err(e: matroid_tutte::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn set(v: &[usize]) -> ElementSet {
    ElementSet::from_elements(v.iter().copied())
}

fn sets(v: &[ElementSet]) -> Vec<Vec<usize>> {
    v.iter().map(|s| s.to_vec()).collect()
}

/// A matroid on `0..n`, given by its bases.
#[pyclass(name = "Matroid", module = "matroid_tutte", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyMatroid {
    inner: matroid_tutte::Matroid,
}

#[pymethods]
impl PyMatroid {
    #[new]
    fn new(n: usize, bases: Vec<Vec<usize>>) -> PyResult<Self> {
        let inner = matroid_tutte::Matroid::from_bases(n, bases.iter().map(|b| set(b))).map_err(err)?;
        Ok(PyMatroid { inner })
    }

    /// A matroid from the built-in catalog, e.g. `"U2,4"` or `"F7*"`.
    #[staticmethod]
    fn named(name: &str) -> PyResult<Self> {
        Ok(PyMatroid { inner: catalog::by_name(name).map_err(err)? })
    }

    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        Ok(PyMatroid { inner: parse_matroid(text).map_err(err)? })
    }

    #[staticmethod]
    fn catalog() -> Vec<String> {
        catalog::full_catalog_names()
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn rank(&self) -> usize {
        self.inner.rank()
    }

    fn bases(&self) -> Vec<Vec<usize>> {
        sets(self.inner.bases())
    }

    fn flats(&self) -> Vec<Vec<usize>> {
        sets(self.inner.lattice().flats())
    }

    fn hyperplanes(&self) -> Vec<Vec<usize>> {
        sets(&self.inner.hyperplanes())
    }

    fn is_connected(&self) -> bool {
        self.inner.is_connected()
    }

    fn dual(&self) -> Self {
        PyMatroid { inner: self.inner.dual() }
    }

    fn direct_sum(&self, other: &PyMatroid) -> PyResult<Self> {
        Ok(PyMatroid { inner: self.inner.direct_sum(&other.inner).map_err(err)? })
    }

    fn to_text(&self) -> String {
        matroid_to_text(&self.inner)
    }

    fn __repr__(&self) -> String {
        format!("Matroid({}, n={}, rank={})", self.inner.display_name(), self.inner.n(), self.inner.rank())
    }
}

/// A lattice of flats with a modular cut and marked corank-2 flats.
#[pyclass(name = "Constellation", module = "matroid_tutte", frozen, skip_from_py_object)]
struct PyConstellation {
    inner: cons::Constellation,
}

#[pymethods]
impl PyConstellation {
    /// `cut` is either the full list of flats in the cut or `None` for the
    /// trivial cut; `principal` selects the principal cut of a flat instead.
    #[new]
    #[pyo3(signature = (matroid, cut=None, principal=None, marks=None))]
    fn new(
        matroid: &PyMatroid,
        cut: Option<Vec<Vec<usize>>>,
        principal: Option<Vec<usize>>,
        marks: Option<Vec<Vec<usize>>>,
    ) -> PyResult<Self> {
        let m = matroid.inner.clone();
        let cut = match (cut, principal) {
            (Some(_), Some(_)) => return Err(PyValueError::new_err("give either cut or principal, not both")),
            (Some(c), None) => ModularCut::validate(&m, c.iter().map(|f| set(f))).map_err(err)?,
            (None, Some(f)) => ModularCut::principal(&m, set(&f)).map_err(err)?,
            (None, None) => ModularCut::trivial(&m),
        };
        let marks = marks.unwrap_or_default().iter().map(|f| set(f)).collect();
        Ok(PyConstellation { inner: cons::Constellation::new(m, cut, marks).map_err(err)? })
    }

    fn cut(&self) -> Vec<Vec<usize>> {
        sets(&self.inner.cut().to_vec())
    }

    /// `(vertices, edges)` of the Tutte graph; edges are `(i, j, flat)`.
    fn tutte_graph(&self) -> (Vec<Vec<usize>>, Vec<(usize, usize, Vec<usize>)>) {
        let g = cons::tutte_graph(&self.inner);
        let edges = g.edges.iter().map(|(i, j, l)| (*i, *j, l.to_vec())).collect();
        (sets(&g.vertices), edges)
    }

    fn tutte_path(&self, flat: Vec<usize>, start: Vec<usize>, end: Vec<usize>) -> PyResult<Vec<Vec<usize>>> {
        let p = cons::find_tutte_path(&self.inner, set(&flat), set(&start), set(&end)).map_err(err)?;
        Ok(sets(&p.terms))
    }

    /// `(kind, type, extended type)` of a closed path, or `None`.
    fn classify_path(&self, path: Vec<Vec<usize>>) -> PyResult<Option<(u8, u8, String)>> {
        let terms = path.iter().map(|h| set(h)).collect();
        let c = cons::classify_elementary(&self.inner, &cons::TuttePath::new(terms)).map_err(err)?;
        Ok(c.map(|c| (c.kind, c.ty, c.extended_type)))
    }

    /// Homology groups `H_0, ..., H_d` of the level complex, as strings.
    #[pyo3(signature = (sigma=2))]
    fn homology(&self, sigma: u8) -> Vec<String> {
        let k = sigma_complex(&self.inner, sigma).complex;
        (0..=k.dim().max(1) as usize).map(|d| k.homology_or_zero(d).to_string()).collect()
    }

    #[pyo3(signature = (sigma=2))]
    fn f_vector(&self, sigma: u8) -> Vec<usize> {
        sigma_complex(&self.inner, sigma).complex.f_vector()
    }
}

/// A pasture given by generators and relations.
#[pyclass(name = "Pasture", module = "matroid_tutte", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyPasture {
    inner: PasturePresentation,
}

#[pymethods]
impl PyPasture {
    /// `U`, `D`, `H`, `F3`, `F1±`, `K`, `S`, `V` or `F<q>`.
    #[staticmethod]
    fn named(name: &str) -> PyResult<Self> {
        Ok(PyPasture { inner: past::by_name(name).map_err(err)? })
    }

    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        Ok(PyPasture { inner: PasturePresentation::parse(text).map_err(err)? })
    }

    fn to_text(&self) -> String {
        self.inner.to_text()
    }

    fn unit_group(&self) -> String {
        self.inner.group().to_string()
    }

    fn recognize(&self) -> String {
        past::recognize(&self.inner).to_string()
    }

    fn tensor(&self, other: &PyPasture) -> Self {
        PyPasture { inner: self.inner.tensor(&other.inner) }
    }

    fn hom_count(&self, target: &PyPasture) -> PyResult<u64> {
        past::hom_count(&self.inner, &target.inner).map_err(err)
    }

    fn fingerprint(&self) -> Vec<u64> {
        past::fingerprint(&self.inner)
    }

    fn __repr__(&self) -> String {
        format!("Pasture({})", self.inner.label().unwrap_or("?"))
    }
}

/// The foundation of a matroid with its cross-ratios and classification.
#[pyclass(name = "Foundation", module = "matroid_tutte", frozen, skip_from_py_object)]
struct PyFoundation {
    inner: FoundationReport,
}

#[pymethods]
impl PyFoundation {
    #[new]
    #[pyo3(signature = (matroid, paranoid=false))]
    fn new(matroid: &PyMatroid, paranoid: bool) -> PyResult<Self> {
        let opts = found::FoundationOptions { paranoid, classify: true, ..Default::default() };
        Ok(PyFoundation { inner: FoundationReport::build(&matroid.inner, &opts).map_err(err)? })
    }

    #[getter]
    fn structure(&self) -> String {
        self.inner.structure.to_string()
    }

    #[getter]
    fn pasture(&self) -> PyPasture {
        PyPasture { inner: self.inner.presentation.clone() }
    }

    /// `(tuple label, value)` for each non-degenerate cross-ratio.
    fn cross_ratios(&self) -> Vec<(String, String)> {
        let hs = self.inner.hyperplanes();
        let p = &self.inner.presentation;
        self.inner
            .cross_ratios
            .iter()
            .filter(|(t, _)| t.nondegenerate)
            .map(|(t, v)| (t.index.label(hs), p.format_element(v)))
            .collect()
    }

    fn flags<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let d = PyDict::new(py);
        if let Some(f) = &self.inner.flags {
            d.set_item("regular", f.regular)?;
            d.set_item("binary", f.binary)?;
            d.set_item("ternary", f.ternary)?;
            d.set_item("wlum", f.wlum)?;
            d.set_item("orientable", f.orientable)?;
            d.set_item("dyadic", f.dyadic)?;
            d.set_item("dressian", f.dressian)?;
        }
        Ok(d)
    }

    fn report(&self) -> String {
        self.inner.to_text()
    }
}

/// Representations over a finite pasture counted two ways: `(hom, brute_force)`.
#[pyfunction]
fn count_representations(matroid: &PyMatroid, target: &PyPasture) -> PyResult<(u64, u64)> {
    let c = found::count_representations(&matroid.inner, &target.inner).map_err(err)?;
    Ok((c.hom, c.brute_force))
}

/// Relation families on the foundation: `(kind, passed, total)`.
#[pyfunction]
fn check_relations(matroid: &PyMatroid) -> PyResult<Vec<(String, usize, usize)>> {
    Ok(found::check_r_relations(&matroid.inner).map_err(err)?.summary())
}

/// Class ids found by the search, in order, with their `(H1, H2)` strings.
#[pyfunction]
#[pyo3(signature = (max_atoms=4))]
fn search_l3(max_atoms: usize) -> PyResult<Vec<(String, Option<String>, Option<String>)>> {
    let r = run_search_l3(max_atoms).map_err(err)?;
    Ok(r.classes.iter().map(|c| (c.id.clone(), c.h1.as_ref().map(|h| h.to_string()), c.h2.as_ref().map(|h| h.to_string()))).collect())
}

#[pymodule]
#[pyo3(name = "matroid_tutte")]
fn matroid_tutte_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyMatroid>()?;
    m.add_class::<PyConstellation>()?;
    m.add_class::<PyPasture>()?;
    m.add_class::<PyFoundation>()?;
    m.add_function(wrap_pyfunction!(count_representations, m)?)?;
    m.add_function(wrap_pyfunction!(check_relations, m)?)?;
    m.add_function(wrap_pyfunction!(search_l3, m)?)?;
    Ok(())
}
