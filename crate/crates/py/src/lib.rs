use pyo3::exceptions::{PyIndexError, PyValueError};
use pyo3::prelude::*;

use quandle::verify::Theorem;
use quandle::{AlternatingPattern, BaseLetter, PairMode, QuandleError, Word};

fn to_py(e: QuandleError) -> PyErr {
    match e {
        QuandleError::IndexOutOfRange { .. } => PyIndexError::new_err(e.to_string()),
        other => PyValueError::new_err(other.to_string()),
    }
}

fn parse(word: &str) -> PyResult<Word> {
    word.parse().map_err(to_py)
}

/// A finite quandle given by its Cayley table, `table[a][b] = a^b`.
#[pyclass(name = "FiniteQuandle", module = "pyquandle", frozen)]
struct PyQuandle {
    inner: quandle::FiniteQuandle,
}

#[pymethods]
impl PyQuandle {
    #[new]
    fn new(table: Vec<Vec<usize>>) -> PyResult<Self> {
        quandle::FiniteQuandle::new(table)
            .map(|inner| Self { inner })
            .map_err(to_py)
    }

    #[staticmethod]
    fn trivial(n: usize) -> PyResult<Self> {
        quandle::trivial_quandle(n)
            .map(|inner| Self { inner })
            .map_err(to_py)
    }

    /// Conjugation quandle `a^b = b^-1 a b` of a group multiplication table.
    #[staticmethod]
    fn conjugation(mul: Vec<Vec<usize>>) -> PyResult<Self> {
        let group = quandle::GroupTable::new(mul).map_err(to_py)?;
        Ok(Self {
            inner: quandle::conjugation_quandle(&group),
        })
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        serde_json::from_str(text)
            .map(|inner| Self { inner })
            .map_err(|e| PyValueError::new_err(e.to_string()))
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&self.inner).expect("serializable")
    }

    #[getter]
    fn order(&self) -> usize {
        self.inner.order()
    }

    fn table(&self) -> Vec<Vec<usize>> {
        self.inner.rows()
    }

    fn op(&self, a: usize, b: usize) -> PyResult<usize> {
        self.inner.op(a, b).map_err(to_py)
    }

    fn op_inv(&self, a: usize, b: usize) -> PyResult<usize> {
        self.inner.op_inv(a, b).map_err(to_py)
    }

    fn rho(&self, b: usize) -> PyResult<Vec<usize>> {
        self.inner
            .rho(b)
            .map(|p| p.images().to_vec())
            .map_err(to_py)
    }

    fn inner_representation(&self) -> Vec<Vec<usize>> {
        self.inner
            .inner_representation()
            .into_iter()
            .map(Vec::from)
            .collect()
    }

    fn evaluate(&self, x: usize, word: &str) -> PyResult<usize> {
        quandle::evaluate(&self.inner, x, &parse(word)?).map_err(to_py)
    }

    fn equivalent(&self, w1: &str, w2: &str) -> PyResult<bool> {
        quandle::operationally_equivalent(&self.inner, &parse(w1)?, &parse(w2)?).map_err(to_py)
    }

    fn is_connected(&self) -> bool {
        quandle::is_connected(&self.inner)
    }

    #[pyo3(signature = (cap = quandle::group::DEFAULT_GROUP_CAP))]
    fn operator_group_order(&self, cap: usize) -> PyResult<usize> {
        quandle::operator_group(&self.inner, cap)
            .map(|g| g.order())
            .map_err(to_py)
    }

    fn generated_subquandle(&self, gens: Vec<usize>) -> PyResult<Vec<usize>> {
        quandle::generated_subquandle(&self.inner, &gens)
            .map(|s| s.into_iter().collect())
            .map_err(to_py)
    }

    fn automorphisms(&self) -> PyResult<Vec<Vec<usize>>> {
        quandle::enumerate_automorphisms(&self.inner)
            .map(|auts| auts.into_iter().map(|f| f.images().to_vec()).collect())
            .map_err(to_py)
    }

    fn is_homomorphism_to(&self, other: &PyQuandle, images: Vec<usize>) -> PyResult<bool> {
        let f = quandle::QuandleMap::new(images, other.inner.order()).map_err(to_py)?;
        quandle::is_homomorphism(&self.inner, &other.inner, &f).map_err(to_py)
    }

    /// Returns `(passed, number_of_counterexamples)`.
    #[pyo3(signature = (trials = 1000, seed = 0))]
    fn extended_axiom_check(&self, trials: usize, seed: u64) -> (bool, usize) {
        let r = quandle::extended_axiom_check(&self.inner, trials, seed);
        (r.pass, r.witnesses.len())
    }

    fn __len__(&self) -> usize {
        self.inner.order()
    }

    fn __repr__(&self) -> String {
        format!("FiniteQuandle(order={})", self.inner.order())
    }
}

/// Alexander quandle parameters: modulus `n` and unit `t`.
#[pyclass(name = "AlexanderParams", module = "pyquandle", frozen)]
struct PyAlexander {
    inner: quandle::AlexanderParams,
}

#[pymethods]
impl PyAlexander {
    #[new]
    fn new(n: u64, t: i64) -> PyResult<Self> {
        quandle::AlexanderParams::new(n, t)
            .map(|inner| Self { inner })
            .map_err(to_py)
    }

    #[getter]
    fn n(&self) -> u64 {
        self.inner.n()
    }

    #[getter]
    fn t(&self) -> u64 {
        self.inner.t()
    }

    #[getter]
    fn t_inv(&self) -> u64 {
        self.inner.t_inv()
    }

    fn order_of_t(&self) -> u64 {
        self.inner.order_of_t()
    }

    fn quandle(&self) -> PyQuandle {
        PyQuandle {
            inner: self.inner.quandle(),
        }
    }

    fn op(&self, a: u64, b: u64) -> u64 {
        self.inner.op(a, b)
    }

    fn power(&self, a: u64, b: u64, k: i64) -> u64 {
        self.inner.power_formula(a, b, k)
    }

    fn cycle_orbit(&self, a: u64, b: u64) -> Vec<u64> {
        self.inner.cycle_orbit(a, b).into_iter().collect()
    }

    fn cycle_sum(&self, a: u64, b: u64, k: u64) -> u64 {
        self.inner.cycle_sum(a, b, k)
    }

    /// `base` is `"a"` or `"b"`: the letter the alternating word acts on.
    fn alternating_word_value(
        &self,
        a: u64,
        b: u64,
        base: &str,
        exponents: Vec<i64>,
    ) -> PyResult<u64> {
        let base = match base {
            "a" => BaseLetter::A,
            "b" => BaseLetter::B,
            other => {
                return Err(PyValueError::new_err(format!(
                    "base must be 'a' or 'b', got {other:?}"
                )))
            }
        };
        let pattern = AlternatingPattern::new(base, exponents).map_err(to_py)?;
        self.inner
            .alternating_word_value(a, b, &pattern)
            .map_err(to_py)
    }

    fn solve_transport(&self, a: u64, b: u64) -> PyResult<u64> {
        self.inner.solve_transport(a, b).map_err(to_py)
    }

    fn generating_word(&self, a: u64, b: u64, c: u64) -> PyResult<String> {
        self.inner
            .generating_word(a, b, c)
            .map(|w| w.to_string())
            .map_err(to_py)
    }

    fn pair_automorphism(&self, a: u64, b: u64, c: u64, d: u64) -> PyResult<Vec<usize>> {
        quandle::pair_automorphism(&self.inner, a, b, c, d)
            .map(|f| f.images().to_vec())
            .map_err(to_py)
    }

    /// Exhaustive over all pairs when `samples` is None.
    #[pyo3(signature = (samples = None, seed = 0))]
    fn verify_two_generation(&self, samples: Option<usize>, seed: u64) -> PyResult<bool> {
        let mode = match samples {
            None => PairMode::AllPairs,
            Some(count) => PairMode::Sampled { count, seed },
        };
        quandle::verify_two_generation(&self.inner, mode)
            .map(|r| r.pass)
            .map_err(to_py)
    }

    fn __repr__(&self) -> String {
        format!(
            "AlexanderParams(n={}, t={})",
            self.inner.n(),
            self.inner.t()
        )
    }
}

#[pyfunction]
fn alexander_quandle(n: u64, t: i64) -> PyResult<PyQuandle> {
    quandle::alexander_quandle(n, t)
        .map(|q| PyQuandle {
            inner: q.into_quandle(),
        })
        .map_err(to_py)
}

type Violations = Vec<(u8, Vec<usize>)>;

/// Returns `(valid, [(axiom, witness), ...])`.
#[pyfunction]
fn validate_axioms(table: Vec<Vec<usize>>) -> PyResult<(bool, Violations)> {
    let report = quandle::validate_axioms(&table).map_err(to_py)?;
    let violations = report
        .violations
        .into_iter()
        .map(|v| (v.axiom.id(), v.witness))
        .collect();
    Ok((report.valid, violations))
}

/// Canonical text form of a word, after free reduction.
#[pyfunction]
fn reduce_word(text: &str) -> PyResult<String> {
    parse(text).map(|w| w.to_string())
}

/// Runs a batch verification and returns the JSON report.
#[pyfunction]
#[pyo3(signature = (theorem, pmax = 31, seed = 0))]
fn verify(theorem: &str, pmax: u64, seed: u64) -> PyResult<String> {
    let theorem = match theorem {
        "gens" => Theorem::Gens,
        "pair-aut" => Theorem::PairAut,
        "lemmas" => Theorem::Lemmas,
        other => return Err(PyValueError::new_err(format!("unknown theorem {other:?}"))),
    };
    let report = quandle::verify::verify(theorem, pmax, seed).map_err(to_py)?;
    Ok(serde_json::to_string(&report).expect("serializable"))
}

#[pymodule]
fn pyquandle(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyQuandle>()?;
    m.add_class::<PyAlexander>()?;
    m.add_function(wrap_pyfunction!(alexander_quandle, m)?)?;
    m.add_function(wrap_pyfunction!(validate_axioms, m)?)?;
    m.add_function(wrap_pyfunction!(reduce_word, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
