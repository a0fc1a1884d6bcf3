//! Python bindings: `import digitclosed`.

use std::collections::BTreeSet;

use digitclosed_core::closure::{self, Case, ExponentSet, TailResult};
use digitclosed_core::interval::{self, Base, Exponent};
use digitclosed_core::{cli::ClosureReport, oracle, Error};
use num_bigint::BigUint;
use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

create_exception!(digitclosed, DigitClosedError, PyValueError);

fn py_err(e: Error) -> PyErr {
    DigitClosedError::new_err(e.to_string())
}

fn base(b: u32) -> PyResult<Base> {
    Base::new(b).map_err(py_err)
}

fn exponents(es: BTreeSet<Exponent>) -> ExponentSet {
    es.into_iter().collect()
}

/// `I_b(start, len)`: integers with between `start + 1` and `start + len` digits.
#[pyclass(frozen, eq, hash, ord, from_py_object, module = "digitclosed")]
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DigitInterval(interval::DigitInterval);

#[pymethods]
impl DigitInterval {
    #[new]
    fn new(start: Exponent, len: Exponent) -> PyResult<Self> {
        interval::DigitInterval::new(start, len)
            .map(DigitInterval)
            .map_err(py_err)
    }

    #[getter]
    fn start(&self) -> Exponent {
        self.0.start()
    }

    #[getter]
    fn len(&self) -> Exponent {
        self.0.len()
    }

    fn exponents(&self) -> Vec<Exponent> {
        self.0.exponents().collect()
    }

    fn __repr__(&self) -> String {
        format!("DigitInterval({}, {})", self.0.start(), self.0.len())
    }
}

/// A digit-closed set in canonical form: runs plus an optional tail.
#[pyclass(frozen, eq, skip_from_py_object, module = "digitclosed")]
#[derive(Clone, PartialEq, Eq)]
pub struct DcSemigroup(digitclosed_core::DcSemigroup);

#[pymethods]
impl DcSemigroup {
    #[staticmethod]
    #[pyo3(signature = (base, intervals, tail=None))]
    fn normalize(
        base: u32,
        intervals: Vec<DigitInterval>,
        tail: Option<Exponent>,
    ) -> PyResult<Self> {
        digitclosed_core::DcSemigroup::normalize(
            self::base(base)?,
            intervals.into_iter().map(|i| i.0),
            tail,
        )
        .map(DcSemigroup)
        .map_err(py_err)
    }

    #[getter]
    fn base(&self) -> u32 {
        self.0.base().get()
    }

    #[getter]
    fn runs(&self) -> Vec<DigitInterval> {
        self.0.runs().iter().copied().map(DigitInterval).collect()
    }

    #[getter]
    fn tail(&self) -> Option<Exponent> {
        self.0.tail()
    }

    fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn is_all_positive(&self) -> bool {
        self.0.is_all_positive()
    }

    fn member(&self, x: BigUint) -> PyResult<bool> {
        self.0.member(&x).map_err(py_err)
    }

    fn __contains__(&self, x: BigUint) -> PyResult<bool> {
        self.member(x)
    }

    fn equals(&self, other: &DcSemigroup) -> PyResult<bool> {
        self.0.equals(&other.0).map_err(py_err)
    }

    fn exponents_upto(&self, bound: Exponent) -> BTreeSet<Exponent> {
        self.0.exponents_upto(bound).iter().collect()
    }

    #[pyo3(signature = (ascii=false))]
    fn render(&self, ascii: bool) -> String {
        self.0.render(if ascii { " U " } else { " ∪ " })
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("DcSemigroup({})", self.0.render(" U "))
    }
}

#[pyfunction]
fn digit_length(x: BigUint, base: u32) -> PyResult<Exponent> {
    interval::digit_length(&x, self::base(base)?).map_err(py_err)
}

#[pyfunction]
fn interval_product(a: DigitInterval, b: DigitInterval, base: u32) -> PyResult<DigitInterval> {
    interval::interval_product(a.0, b.0, self::base(base)?)
        .map(DigitInterval)
        .map_err(py_err)
}

#[pyfunction]
fn interval_power(a: DigitInterval, q: u64, base: u32) -> PyResult<DigitInterval> {
    interval::interval_power(a.0, q, self::base(base)?)
        .map(DigitInterval)
        .map_err(py_err)
}

#[pyfunction]
fn interval_contains(a: DigitInterval, x: BigUint, base: u32) -> PyResult<bool> {
    interval::interval_contains(a.0, &x, self::base(base)?).map_err(py_err)
}

#[pyfunction]
fn exponent_set(xs: Vec<BigUint>, base: u32) -> PyResult<BTreeSet<Exponent>> {
    let set = closure::exponent_set(&xs, self::base(base)?).map_err(py_err)?;
    Ok(set.iter().collect())
}

#[pyfunction]
fn decompose_runs(exps: BTreeSet<Exponent>) -> Vec<DigitInterval> {
    closure::decompose_runs(&exponents(exps))
        .runs()
        .iter()
        .copied()
        .map(DigitInterval)
        .collect()
}

/// Returns `("tail", t)`, `("all", None)` or `("none", None)`.
#[pyfunction]
fn tail_start(j: Exponent, l: u64, base: u32) -> PyResult<(&'static str, Option<Exponent>)> {
    Ok(
        match closure::tail_start(j, l, self::base(base)?).map_err(py_err)? {
            TailResult::TailAt(t) => ("tail", Some(t)),
            TailResult::AllPositiveIntegers => ("all", None),
            TailResult::NoTail => ("none", None),
        },
    )
}

#[pyfunction]
fn enumerate_multiset_products(
    runs: Vec<DigitInterval>,
    d: u64,
    base: u32,
) -> PyResult<Vec<DigitInterval>> {
    let exps = runs.iter().flat_map(|r| r.0.exponents()).collect();
    let decomposition = closure::decompose_runs(&exps);
    if decomposition.runs().len() != runs.len() {
        return Err(DigitClosedError::new_err(
            "runs must be sorted and separated",
        ));
    }
    closure::enumerate_multiset_products(&decomposition, d, self::base(base)?)
        .map(|v| v.into_iter().map(DigitInterval).collect())
        .map_err(py_err)
}

#[pyfunction]
fn smallest_dc_semigroup(xs: Vec<BigUint>, base: u32) -> PyResult<DcSemigroup> {
    closure::smallest_dc_semigroup(&xs, self::base(base)?)
        .map(DcSemigroup)
        .map_err(py_err)
}

/// Branch taken by the construction: `(case, d, t)`.
#[pyfunction]
fn construction_case(
    xs: Vec<BigUint>,
    base: u32,
) -> PyResult<(&'static str, Option<u64>, Option<Exponent>)> {
    let c = closure::construct(&xs, self::base(base)?).map_err(py_err)?;
    Ok(match c.case {
        Case::Empty => ("empty", None, None),
        Case::Offset { d, t } => ("case1", Some(d), Some(t)),
        Case::BinaryUnit { inner } => ("case2", inner.map(|i| i.0), inner.map(|i| i.1)),
        Case::AllPositive => ("case3", Some(0), None),
    })
}

/// The machine-readable report the CLI prints for `closure --json`.
#[pyfunction]
fn closure_report(xs: Vec<BigUint>, base: u32) -> PyResult<String> {
    let c = closure::construct(&xs, self::base(base)?).map_err(py_err)?;
    Ok(ClosureReport::new(&xs, &c).to_json())
}

#[pyfunction]
fn index_closure(
    exps: BTreeSet<Exponent>,
    base: u32,
    bound: Exponent,
) -> PyResult<BTreeSet<Exponent>> {
    let r = oracle::index_closure(&exponents(exps), self::base(base)?, bound).map_err(py_err)?;
    Ok(r.present.iter().collect())
}

#[pyfunction]
fn integer_closure(xs: Vec<BigUint>, base: u32, bound: Exponent) -> PyResult<BTreeSet<Exponent>> {
    let r = oracle::integer_closure(&xs, self::base(base)?, bound).map_err(py_err)?;
    Ok(r.present.iter().collect())
}

/// Exponents below `bound` where `g` and `reference` disagree.
#[pyfunction]
fn compare(g: &DcSemigroup, reference: BTreeSet<Exponent>, bound: Exponent) -> Vec<Exponent> {
    let reference = oracle::TruncatedExponentSet {
        present: reference.into_iter().filter(|&e| e < bound).collect(),
        bound,
    };
    oracle::compare(&g.0, &reference).differing
}

#[pymodule]
pub fn digitclosed(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("DigitClosedError", m.py().get_type::<DigitClosedError>())?;
    m.add_class::<DigitInterval>()?;
    m.add_class::<DcSemigroup>()?;
    m.add_function(wrap_pyfunction!(digit_length, m)?)?;
    m.add_function(wrap_pyfunction!(interval_product, m)?)?;
    m.add_function(wrap_pyfunction!(interval_power, m)?)?;
    m.add_function(wrap_pyfunction!(interval_contains, m)?)?;
    m.add_function(wrap_pyfunction!(exponent_set, m)?)?;
    m.add_function(wrap_pyfunction!(decompose_runs, m)?)?;
    m.add_function(wrap_pyfunction!(tail_start, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_multiset_products, m)?)?;
    m.add_function(wrap_pyfunction!(smallest_dc_semigroup, m)?)?;
    m.add_function(wrap_pyfunction!(construction_case, m)?)?;
    m.add_function(wrap_pyfunction!(closure_report, m)?)?;
    m.add_function(wrap_pyfunction!(index_closure, m)?)?;
    m.add_function(wrap_pyfunction!(integer_closure, m)?)?;
    m.add_function(wrap_pyfunction!(compare, m)?)?;
    Ok(())
}
