use pyo3::basic::CompareOp;
use pyo3::exceptions::{PyIndexError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use binmat::{Error, Impl, MatrixOp};

fn to_py(e: Error) -> PyErr {
    match e {
        Error::Index { .. } => PyIndexError::new_err(e.to_string()),
        other => PyValueError::new_err(other.to_string()),
    }
}

fn ordering_to_int(o: binmat::Ordering) -> i8 {
    o as i8
}

/// Square boolean matrix with bit-packed rows.
#[pyclass(name = "BitMatrix", module = "binmat")]
struct PyBitMatrix {
    inner: binmat::BitMatrix,
}

impl From<binmat::BitMatrix> for PyBitMatrix {
    fn from(inner: binmat::BitMatrix) -> Self {
        Self { inner }
    }
}

#[pymethods]
impl PyBitMatrix {
    /// The all-zero matrix of order `n`.
    #[new]
    fn new(n: usize) -> PyResult<Self> {
        binmat::BitMatrix::new_zero(n)
            .map(Self::from)
            .map_err(to_py)
    }

    #[staticmethod]
    fn identity(n: usize) -> PyResult<Self> {
        binmat::BitMatrix::identity(n)
            .map(Self::from)
            .map_err(to_py)
    }

    /// Builds a matrix from its row values (n <= 64).
    #[staticmethod]
    fn from_rows(rows: Vec<u64>) -> PyResult<Self> {
        binmat::BitMatrix::from_row_values(&rows)
            .map(Self::from)
            .map_err(to_py)
    }

    #[staticmethod]
    #[pyo3(signature = (n, seed = 0))]
    fn random(n: usize, seed: u64) -> PyResult<Self> {
        binmat::BitMatrix::random(n, &mut binmat::seeded_rng(seed))
            .map(Self::from)
            .map_err(to_py)
    }

    #[staticmethod]
    fn parse_grid(text: &str) -> PyResult<Self> {
        binmat::io::parse_grid(text).map(Self::from).map_err(to_py)
    }

    #[staticmethod]
    fn parse_tuple(text: &str) -> PyResult<Self> {
        binmat::io::parse_tuple(text).map(Self::from).map_err(to_py)
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    fn payload_bytes(&self) -> usize {
        self.inner.payload_bytes()
    }

    fn get(&self, i: usize, j: usize) -> PyResult<bool> {
        self.inner.get(i, j).map_err(to_py)
    }

    fn set(&mut self, i: usize, j: usize, value: bool) -> PyResult<()> {
        self.inner.set(i, j, value).map_err(to_py)
    }

    fn get_row(&self, i: usize) -> PyResult<u64> {
        self.inner.get_row(i).map_err(to_py)
    }

    fn set_row(&mut self, i: usize, value: u64) -> PyResult<()> {
        self.inner.set_row(i, value).map_err(to_py)
    }

    fn rows(&self) -> PyResult<Vec<u64>> {
        self.inner.row_values().map_err(to_py)
    }

    fn transpose(&self) -> Self {
        self.inner.transpose().into()
    }

    fn product(&self, other: &Self) -> PyResult<Self> {
        self.inner
            .product(&other.inner)
            .map(Self::from)
            .map_err(to_py)
    }

    /// -1, 0 or 1 as `self` precedes, equals or follows `other`.
    fn compare(&self, other: &Self) -> PyResult<i8> {
        self.inner
            .compare(&other.inner)
            .map(ordering_to_int)
            .map_err(to_py)
    }

    fn to_grid(&self) -> String {
        binmat::io::emit_grid(&self.inner)
    }

    fn to_tuple(&self) -> PyResult<String> {
        binmat::io::emit_tuple(&self.inner).map_err(to_py)
    }

    fn __and__(&self, other: &Self) -> PyResult<Self> {
        self.inner.and(&other.inner).map(Self::from).map_err(to_py)
    }

    fn __or__(&self, other: &Self) -> PyResult<Self> {
        self.inner.or(&other.inner).map(Self::from).map_err(to_py)
    }

    fn __invert__(&self) -> Self {
        self.inner.not().into()
    }

    fn __matmul__(&self, other: &Self) -> PyResult<Self> {
        self.product(other)
    }

    fn __richcmp__(&self, other: &Self, op: CompareOp) -> PyResult<bool> {
        let ord = self.inner.compare(&other.inner).map_err(to_py)?;
        Ok(op.matches(ord))
    }

    fn __hash__(&self) -> u64 {
        use std::hash::{Hash, Hasher};
        let mut h = std::collections::hash_map::DefaultHasher::new();
        self.inner.hash(&mut h);
        h.finish()
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("BitMatrix.parse_grid({:?})", self.to_grid())
    }
}

/// Square boolean matrix with one byte per element.
#[pyclass(name = "DenseMatrix", module = "binmat")]
struct PyDenseMatrix {
    inner: binmat::DenseMatrix,
}

impl From<binmat::DenseMatrix> for PyDenseMatrix {
    fn from(inner: binmat::DenseMatrix) -> Self {
        Self { inner }
    }
}

#[pymethods]
impl PyDenseMatrix {
    #[new]
    fn new(n: usize) -> PyResult<Self> {
        binmat::DenseMatrix::new_zero(n)
            .map(Self::from)
            .map_err(to_py)
    }

    #[staticmethod]
    fn from_packed(m: &PyBitMatrix) -> Self {
        binmat::DenseMatrix::from_packed(&m.inner).into()
    }

    fn to_packed(&self) -> PyBitMatrix {
        self.inner.to_packed().into()
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    fn payload_bytes(&self) -> usize {
        self.inner.payload_bytes()
    }

    fn get(&self, i: usize, j: usize) -> PyResult<bool> {
        self.inner.get(i, j).map_err(to_py)
    }

    fn set(&mut self, i: usize, j: usize, value: bool) -> PyResult<()> {
        self.inner.set(i, j, value).map_err(to_py)
    }

    fn transpose(&self) -> Self {
        self.inner.transpose().into()
    }

    fn product(&self, other: &Self) -> PyResult<Self> {
        self.inner
            .product(&other.inner)
            .map(Self::from)
            .map_err(to_py)
    }

    fn compare(&self, other: &Self) -> PyResult<i8> {
        self.inner
            .compare(&other.inner)
            .map(ordering_to_int)
            .map_err(to_py)
    }

    fn __and__(&self, other: &Self) -> PyResult<Self> {
        self.inner.and(&other.inner).map(Self::from).map_err(to_py)
    }

    fn __or__(&self, other: &Self) -> PyResult<Self> {
        self.inner.or(&other.inner).map(Self::from).map_err(to_py)
    }

    fn __invert__(&self) -> Self {
        self.inner.not().into()
    }

    fn __matmul__(&self, other: &Self) -> PyResult<Self> {
        self.product(other)
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }
}

/// Counts primitive operations for one algorithm; returns a dict with the
/// total and the per-category tallies.
#[pyfunction]
#[pyo3(signature = (implementation, op, n, seed = 0))]
fn counted_run<'py>(
    py: Python<'py>,
    implementation: &str,
    op: &str,
    n: usize,
    seed: u64,
) -> PyResult<Bound<'py, PyDict>> {
    let imp: Impl = implementation.parse().map_err(to_py)?;
    let op: MatrixOp = op.parse().map_err(to_py)?;
    let report = binmat::counted_run(imp, op, n, seed).map_err(to_py)?;
    let d = PyDict::new(py);
    d.set_item("impl", imp.as_str())?;
    d.set_item("op", op.as_str())?;
    d.set_item("n", report.n)?;
    d.set_item("seed", report.seed)?;
    d.set_item("total_ops", report.total_ops)?;
    let cats = PyDict::new(py);
    for (c, v) in report.counter.breakdown() {
        cats.set_item(c.as_str(), v)?;
    }
    d.set_item("breakdown", cats)?;
    Ok(d)
}

/// Least-squares slope of log(count) against log(n).
#[pyfunction]
fn fit_exponent(series: Vec<(f64, f64)>) -> PyResult<f64> {
    binmat::fit_exponent(&series).map_err(to_py)
}

#[pymodule]
#[pyo3(name = "binmat")]
fn _binmat(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyBitMatrix>()?;
    m.add_class::<PyDenseMatrix>()?;
    m.add_function(wrap_pyfunction!(counted_run, m)?)?;
    m.add_function(wrap_pyfunction!(fit_exponent, m)?)?;
    m.add("MAX_DIM", binmat::MAX_DIM)?;
    Ok(())
}
