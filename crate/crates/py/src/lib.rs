//! Python bindings for the wpgap toolkit.
//!
//! Exposes the semigroup type plus the enumeration, classification, and
//! bound-verification entry points. Exact rationals cross the boundary as
//! `(numerator, denominator)` tuples; structured reports as dicts.
//!
//! Build with `cargo build -p wpgap-py --release` and import the produced
//! `libwpgap_py.so` as module `wpgap_py` (see `python/smoke_test.py`).

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use wpgap_core::{bounds, enumeration, hyperelliptic, semigroup, Error};

fn to_py_err(err: Error) -> PyErr {
    PyValueError::new_err(err.to_string())
}

fn ratio_tuple(r: &num_rational::Rational64) -> (i64, i64) {
    (*r.numer(), *r.denom())
}

/// A numerical semigroup held by its gap set.
#[pyclass(name = "NumericalSemigroup", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PySemigroup {
    inner: semigroup::NumericalSemigroup,
}

#[pymethods]
impl PySemigroup {
    /// Build from the exact gap set.
    #[staticmethod]
    fn from_gaps(gaps: Vec<u32>) -> PyResult<Self> {
        Ok(PySemigroup {
            inner: semigroup::NumericalSemigroup::from_gaps(&gaps).map_err(to_py_err)?,
        })
    }

    /// Build as the monoid generated by `gens` (gcd must be 1).
    #[staticmethod]
    fn from_generators(gens: Vec<u64>) -> PyResult<Self> {
        Ok(PySemigroup {
            inner: semigroup::NumericalSemigroup::from_generators(&gens).map_err(to_py_err)?,
        })
    }

    #[getter]
    fn genus(&self) -> u32 {
        self.inner.genus()
    }

    #[getter]
    fn gaps(&self) -> Vec<u32> {
        self.inner.gaps().to_vec()
    }

    #[getter]
    fn multiplicity(&self) -> u32 {
        self.inner.multiplicity()
    }

    #[getter]
    fn conductor(&self) -> u32 {
        self.inner.conductor()
    }

    fn contains(&self, x: u64) -> bool {
        self.inner.contains(x)
    }

    fn weight(&self) -> u64 {
        self.inner.weight()
    }

    fn even_gap_count(&self) -> u32 {
        self.inner.even_gap_count()
    }

    fn halved_even_part(&self) -> Self {
        PySemigroup {
            inner: self.inner.halved_even_part(),
        }
    }

    fn oliveira_check(&self) -> PyResult<bool> {
        self.inner.oliveira_check().map_err(to_py_err)
    }

    fn is_ordinary(&self) -> bool {
        self.inner.is_ordinary()
    }

    fn smallest_even_nongap(&self) -> u32 {
        self.inner.smallest_even_nongap()
    }

    /// "I" or "II" for a semigroup with exactly `gamma` even gaps.
    fn classify_ramified(&self, gamma: u32) -> PyResult<&'static str> {
        match hyperelliptic::classify_ramified(&self.inner, gamma).map_err(to_py_err)? {
            hyperelliptic::RamifiedClass::TypeI => Ok("I"),
            hyperelliptic::RamifiedClass::TypeII => Ok("II"),
        }
    }

    /// "a" or "b" for a type-III candidate.
    fn classify_unramified(&self, gamma: u32) -> PyResult<&'static str> {
        match hyperelliptic::classify_unramified(&self.inner, gamma).map_err(to_py_err)? {
            hyperelliptic::UnramifiedCase::CaseA => Ok("a"),
            hyperelliptic::UnramifiedCase::CaseB => Ok("b"),
        }
    }

    fn is_type3_candidate(&self, gamma: u32) -> PyResult<bool> {
        hyperelliptic::is_type3_candidate(&self.inner, gamma).map_err(to_py_err)
    }

    fn min_even_nongap_check(&self, gamma: u32) -> PyResult<bool> {
        hyperelliptic::min_even_nongap_check(&self.inner, gamma).map_err(to_py_err)
    }

    /// The gamma odd non-gaps in [1, 2g-1], descending.
    fn odd_nongap_profile(&self, gamma: u32) -> PyResult<Vec<u32>> {
        Ok(hyperelliptic::odd_nongap_profile(&self.inner, gamma)
            .map_err(to_py_err)?
            .values()
            .to_vec())
    }

    fn even_nongap_sum(&self) -> u64 {
        hyperelliptic::even_nongap_sum(&self.inner)
    }

    fn __repr__(&self) -> String {
        format!("NumericalSemigroup(gaps=[{}])", self.inner)
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }

    fn __hash__(&self) -> u64 {
        use std::hash::{Hash, Hasher};
        let mut h = std::collections::hash_map::DefaultHasher::new();
        self.inner.hash(&mut h);
        h.finish()
    }
}

fn build_filter(
    min_multiplicity: Option<u32>,
    even_gap_count: Option<u32>,
    required_interval: Option<(u32, u32)>,
    required_gap_in: Option<(u32, u32)>,
) -> enumeration::EnumerationFilter {
    enumeration::EnumerationFilter {
        min_multiplicity,
        even_gap_count,
        required_interval,
        required_gap_in,
    }
}

fn config(jobs: usize, genus_cap: u32) -> enumeration::EnumerationConfig {
    enumeration::EnumerationConfig::default()
        .with_jobs(jobs)
        .with_genus_cap(genus_cap)
}

/// All numerical semigroups of genus `g`.
#[pyfunction]
#[pyo3(signature = (g, min_multiplicity=None, even_gap_count=None, required_interval=None, required_gap_in=None, jobs=1, genus_cap=35))]
fn enumerate_genus(
    g: u32,
    min_multiplicity: Option<u32>,
    even_gap_count: Option<u32>,
    required_interval: Option<(u32, u32)>,
    required_gap_in: Option<(u32, u32)>,
    jobs: usize,
    genus_cap: u32,
) -> PyResult<Vec<PySemigroup>> {
    let filter = build_filter(
        min_multiplicity,
        even_gap_count,
        required_interval,
        required_gap_in,
    );
    Ok(
        enumeration::enumerate_filtered(g, &filter, &config(jobs, genus_cap))
            .map_err(to_py_err)?
            .into_iter()
            .map(|inner| PySemigroup { inner })
            .collect(),
    )
}

/// Number of numerical semigroups of genus `g`.
#[pyfunction]
#[pyo3(signature = (g, jobs=1, genus_cap=35))]
fn count_genus(g: u32, jobs: usize, genus_cap: u32) -> PyResult<u64> {
    enumeration::count_genus(g, &config(jobs, genus_cap)).map_err(to_py_err)
}

/// Filtered max-weight scan; returns a dict with counts, max and witness.
#[pyfunction]
#[pyo3(signature = (g, min_multiplicity=None, even_gap_count=None, required_interval=None, required_gap_in=None, jobs=1, genus_cap=35))]
#[allow(clippy::too_many_arguments)]
fn scan_max_weight(
    py: Python<'_>,
    g: u32,
    min_multiplicity: Option<u32>,
    even_gap_count: Option<u32>,
    required_interval: Option<(u32, u32)>,
    required_gap_in: Option<(u32, u32)>,
    jobs: usize,
    genus_cap: u32,
) -> PyResult<Py<PyDict>> {
    let filter = build_filter(
        min_multiplicity,
        even_gap_count,
        required_interval,
        required_gap_in,
    );
    let stats =
        enumeration::scan_max_weight(g, &filter, &config(jobs, genus_cap)).map_err(to_py_err)?;
    let d = PyDict::new(py);
    d.set_item("genus", stats.genus)?;
    d.set_item("total_count", stats.total_count)?;
    d.set_item("filtered_count", stats.filtered_count)?;
    d.set_item("class_empty", stats.class_empty())?;
    match stats.max {
        Some(rec) => {
            d.set_item("max_weight", rec.weight)?;
            d.set_item("argmax_gap_set", rec.gap_set)?;
        }
        None => {
            d.set_item("max_weight", py.None())?;
            d.set_item("argmax_gap_set", py.None())?;
        }
    }
    Ok(d.into())
}

/// Whether `det(binom(point_i, generic_j))` is nonzero (mod p when p > 0).
#[pyfunction]
fn wronskian_det_condition(point: Vec<u64>, generic: Vec<u64>, p: u64) -> PyResult<bool> {
    let point = semigroup::OrderSequence::new(point).map_err(to_py_err)?;
    let generic = semigroup::OrderSequence::new(generic).map_err(to_py_err)?;
    semigroup::wronskian_det_condition(&point, &generic, p).map_err(to_py_err)
}

/// c1/c2/c3, the c3 branch, N(g, n) and omega_n as a dict.
#[pyfunction]
fn bound_set(py: Python<'_>, g: i64, gamma: i64, n: i64) -> PyResult<Py<PyDict>> {
    let b = bounds::bound_set(g, gamma, n).map_err(to_py_err)?;
    let d = PyDict::new(py);
    d.set_item("c1", b.c1)?;
    d.set_item("c2", b.c2)?;
    d.set_item("c3", b.c3)?;
    d.set_item(
        "c3_branch",
        match b.c3_branch {
            bounds::C3Branch::First => 1,
            bounds::C3Branch::Second => 2,
        },
    )?;
    d.set_item("N", b.n_g_n)?;
    d.set_item("omega_n", b.omega_n)?;
    Ok(d.into())
}

/// Total weight of the n-Weierstrass divisor (g^3 - g for n = 1).
#[pyfunction]
fn omega(g: i64, n: i64) -> PyResult<i64> {
    bounds::omega(g, n).map_err(to_py_err)
}

/// The threshold N(g, n).
#[pyfunction]
fn n_g_n(g: i64, n: i64) -> PyResult<i64> {
    bounds::n_g_n(g, n).map_err(to_py_err)
}

/// Lower bound on distinct n-Weierstrass points for n >= 2.
#[pyfunction]
fn homma_ommori_lower_wn(g: i64, n: i64) -> PyResult<i64> {
    bounds::homma_ommori_lower_wn(g, n).map_err(to_py_err)
}

/// The counting pipeline for one (g, gamma); policy is "paper" or "min".
#[pyfunction]
#[pyo3(signature = (g, gamma, policy="min"))]
fn theorem_pipeline(py: Python<'_>, g: i64, gamma: i64, policy: &str) -> PyResult<Py<PyDict>> {
    let policy = match policy {
        "paper" => bounds::TPolicy::PaperT,
        "min" => bounds::TPolicy::MinT,
        other => {
            return Err(PyValueError::new_err(format!(
                "policy must be \"paper\" or \"min\", got {other:?}"
            )))
        }
    };
    let r = bounds::theorem_pipeline(g, gamma, policy).map_err(to_py_err)?;
    let d = PyDict::new(py);
    d.set_item("g", r.g)?;
    d.set_item("gamma", r.gamma)?;
    d.set_item("t_used", r.t_used)?;
    d.set_item("numerator", r.numerator)?;
    d.set_item("nonpositive_numerator", r.nonpositive_numerator)?;
    d.set_item("c3", r.c3)?;
    d.set_item("w1_lower", r.w1_lower)?;
    d.set_item("n_g_1", r.n_g_1)?;
    d.set_item("holds", r.holds)?;
    d.set_item("closed_form", r.closed_form.as_ref().map(ratio_tuple))?;
    Ok(d.into())
}

/// Smallest genus satisfying the published sufficient threshold.
#[pyfunction]
fn genus_threshold(gamma: i64) -> PyResult<i64> {
    bounds::genus_threshold(gamma).map_err(to_py_err)
}

/// Smallest genus from which the pipeline holds through g_max, or None.
#[pyfunction]
fn exact_min_genus(gamma: i64, g_max: i64) -> PyResult<Option<i64>> {
    bounds::exact_min_genus(gamma, g_max).map_err(to_py_err)
}

/// Exact rational value of the first-branch sufficiency display.
#[pyfunction]
fn branch2_inequality(g: i64, gamma: i64) -> PyResult<(i64, i64)> {
    Ok(ratio_tuple(
        &bounds::branch2_inequality(g, gamma).map_err(to_py_err)?,
    ))
}

/// Exact rational 5g - 1 + (24*gamma^2 - 10*gamma - 4)/(g - 4*gamma + 1).
#[pyfunction]
fn large_g_closed_form(g: i64, gamma: i64) -> PyResult<(i64, i64)> {
    Ok(ratio_tuple(
        &bounds::large_g_closed_form(g, gamma).map_err(to_py_err)?,
    ))
}

/// Derived covering data for a (g, gamma) pair: the ramification count
/// and the cap on type-I points.
#[pyfunction]
fn covering_profile(py: Python<'_>, g: i64, gamma: i64) -> PyResult<Py<PyDict>> {
    let p = hyperelliptic::CoveringProfile::new(g, gamma).map_err(to_py_err)?;
    let d = PyDict::new(py);
    d.set_item("g", p.g())?;
    d.set_item("gamma", p.gamma())?;
    d.set_item("ramification_count", p.ramification_count())?;
    d.set_item("t_max", p.t_max())?;
    Ok(d.into())
}

fn parse_class(s: &str) -> PyResult<bounds::LemmaClass> {
    match s {
        "I" => Ok(bounds::LemmaClass::TypeI),
        "II" => Ok(bounds::LemmaClass::TypeII),
        "a" => Ok(bounds::LemmaClass::CaseA),
        "b" => Ok(bounds::LemmaClass::CaseB),
        "III" => Ok(bounds::LemmaClass::AllType3),
        other => Err(PyValueError::new_err(format!(
            "class must be I, II, a, b or III, got {other:?}"
        ))),
    }
}

/// Exhaustive class-cap verification for one (g, gamma, class).
#[pyfunction]
#[pyo3(signature = (g, gamma, class, jobs=1, genus_cap=35))]
fn verify_lemma(
    py: Python<'_>,
    g: u32,
    gamma: u32,
    class: &str,
    jobs: usize,
    genus_cap: u32,
) -> PyResult<Py<PyDict>> {
    let v = bounds::verify_lemma(g, gamma, parse_class(class)?, &config(jobs, genus_cap))
        .map_err(to_py_err)?;
    let d = PyDict::new(py);
    d.set_item("g", v.g)?;
    d.set_item("gamma", v.gamma)?;
    d.set_item("class", class)?;
    d.set_item("bound", v.bound)?;
    d.set_item("class_count", v.class_count)?;
    d.set_item("class_empty", v.class_count == 0)?;
    d.set_item("max_observed", v.max_observed)?;
    d.set_item("witness", v.witness)?;
    d.set_item("holds", v.holds)?;
    Ok(d.into())
}

/// The weight-maximizing case-B gap set for (g, gamma).
#[pyfunction]
fn extremal_case_b_gap_set(g: u32, gamma: u32) -> PyResult<Vec<u32>> {
    Ok(hyperelliptic::extremal_case_b_gap_set(g, gamma)
        .map_err(to_py_err)?
        .gaps()
        .to_vec())
}

#[pymodule]
fn wpgap_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PySemigroup>()?;
    m.add_function(wrap_pyfunction!(enumerate_genus, m)?)?;
    m.add_function(wrap_pyfunction!(count_genus, m)?)?;
    m.add_function(wrap_pyfunction!(scan_max_weight, m)?)?;
    m.add_function(wrap_pyfunction!(wronskian_det_condition, m)?)?;
    m.add_function(wrap_pyfunction!(bound_set, m)?)?;
    m.add_function(wrap_pyfunction!(omega, m)?)?;
    m.add_function(wrap_pyfunction!(n_g_n, m)?)?;
    m.add_function(wrap_pyfunction!(homma_ommori_lower_wn, m)?)?;
    m.add_function(wrap_pyfunction!(theorem_pipeline, m)?)?;
    m.add_function(wrap_pyfunction!(genus_threshold, m)?)?;
    m.add_function(wrap_pyfunction!(exact_min_genus, m)?)?;
    m.add_function(wrap_pyfunction!(branch2_inequality, m)?)?;
    m.add_function(wrap_pyfunction!(large_g_closed_form, m)?)?;
    m.add_function(wrap_pyfunction!(covering_profile, m)?)?;
    m.add_function(wrap_pyfunction!(verify_lemma, m)?)?;
    m.add_function(wrap_pyfunction!(extremal_case_b_gap_set, m)?)?;
    Ok(())
}
