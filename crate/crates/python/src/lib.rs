//! Python bindings for `jacmap`.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use jacmap::exactalg::parse_rational;
use jacmap::fixtures;
use jacmap::goodpair::{
    float_good_pair_check, generate_jacobian_equations, is_good_pair_log, is_good_pair_monomial,
    CMatrix, Phi,
};
use jacmap::invert::{finite_newton_inverse, newton_order, NewtonOptions, OrderEvidence};
use jacmap::universal::{
    block_row_sum_matrix, build_universal, is_universal, ordered_form, UniversalSpec,
};
use jacmap::{Error, RMatrix};

fn err(e: Error) -> PyErr {
    match e {
        Error::Parse(_) | Error::SizeMismatch { .. } | Error::Invariant(_) | Error::NotExact(_) => {
            PyValueError::new_err(e.to_string())
        }
        _ => PyRuntimeError::new_err(e.to_string()),
    }
}

/// Square matrix with exact rational entries.
#[pyclass(name = "Matrix", module = "pyjacmap", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyMatrix(RMatrix);

#[pymethods]
impl PyMatrix {
    /// Rows of entries; each entry may be an int or a string such as "-3/4".
    #[new]
    fn new(rows: Vec<Vec<Bound<'_, PyAny>>>) -> PyResult<Self> {
        let rows = rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|v| parse_rational(&v.str()?.to_cow()?).map_err(err))
                    .collect::<PyResult<Vec<_>>>()
            })
            .collect::<PyResult<Vec<_>>>()?;
        RMatrix::from_rows(rows).map(Self).map_err(err)
    }

    /// Parses the `n <size>` text format.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        text.parse().map(Self).map_err(err)
    }

    /// Builds `U(p, Π)` from a spec in text form.
    #[staticmethod]
    fn universal(spec: &str) -> PyResult<Self> {
        let spec: UniversalSpec = spec.parse().map_err(err)?;
        build_universal(&spec).map(Self).map_err(err)
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    /// Entries as strings, row by row.
    fn rows(&self) -> Vec<Vec<String>> {
        self.0
            .rows()
            .map(|r| r.iter().map(|v| v.to_string()).collect())
            .collect()
    }

    fn rank(&self) -> usize {
        self.0.rank()
    }

    fn is_nilpotent(&self) -> bool {
        self.0.is_nilpotent()
    }

    fn is_universal(&self) -> bool {
        is_universal(&self.0)
    }

    fn ordered_form(&self) -> Self {
        Self(ordered_form(&self.0).matrix)
    }

    /// Block sizes of the ordered form.
    fn partition(&self) -> Vec<usize> {
        ordered_form(&self.0).partition.parts().to_vec()
    }

    fn block_row_sums(&self) -> Self {
        Self(block_row_sum_matrix(&self.0))
    }

    fn mul(&self, other: &Self) -> PyResult<Self> {
        self.0.mul(&other.0).map(Self).map_err(err)
    }

    fn hadamard(&self, other: &Self) -> PyResult<Self> {
        self.0.hadamard(&other.0).map(Self).map_err(err)
    }

    fn kronecker(&self, other: &Self) -> Self {
        Self(self.0.kronecker(&other.0))
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Matrix({:?})", self.rows())
    }
}

/// Whether `x + φ(Ax)` has unit Jacobian. `phi` is `pow:d`, `log` or `exp`;
/// `exp` and `mode="float"` use a floating check at random complex points.
#[pyfunction]
#[pyo3(signature = (matrix, phi = "pow:2", mode = "exact"))]
fn is_good_pair(matrix: &PyMatrix, phi: &str, mode: &str) -> PyResult<bool> {
    let phi: Phi = phi.parse().map_err(err)?;
    match (mode, phi) {
        ("exact", Phi::Pow(d)) => is_good_pair_monomial(&matrix.0, d).map_err(err),
        ("exact", Phi::Log) => is_good_pair_log(&matrix.0).map_err(err),
        ("exact", Phi::Exp) => Err(err(Error::NotExact(phi.to_string()))),
        ("float", _) => {
            let mut rng = ChaCha8Rng::seed_from_u64(1);
            let worst =
                float_good_pair_check(&CMatrix::from_rational(&matrix.0), phi, 10, &mut rng)
                    .map_err(err)?;
            Ok(worst < fixtures::FLOAT_TOLERANCE)
        }
        _ => Err(PyValueError::new_err(format!("unknown mode `{mode}`"))),
    }
}

/// Finite Newton inverse of `x + (Ax)^d`: `(order, components)` with each
/// component in the machine polynomial format.
#[pyfunction]
#[pyo3(signature = (matrix, d = 2, cap = None))]
fn newton_inverse(
    py: Python<'_>,
    matrix: &PyMatrix,
    d: u32,
    cap: Option<usize>,
) -> PyResult<(usize, Vec<String>)> {
    let a = matrix.0.clone();
    let r = py
        .detach(move || {
            finite_newton_inverse(
                &a,
                d,
                NewtonOptions {
                    cap,
                    ..NewtonOptions::default()
                },
            )
        })
        .map_err(err)?;
    Ok((
        r.order,
        r.inverse
            .components()
            .iter()
            .map(|p| p.to_machine())
            .collect(),
    ))
}

/// Newton order with the pointwise fallback: `(order, "symbolic" | "pointwise")`.
#[pyfunction]
#[pyo3(signature = (matrix, d = 2, points = 3, seed = 1))]
fn newton_order_of(
    py: Python<'_>,
    matrix: &PyMatrix,
    d: u32,
    points: usize,
    seed: u64,
) -> PyResult<(usize, &'static str)> {
    let a = matrix.0.clone();
    let e = py
        .detach(move || newton_order(&a, d, NewtonOptions::default(), points, seed))
        .map_err(err)?;
    if !e.verified() {
        return Err(PyRuntimeError::new_err("inverse could not be verified"));
    }
    let kind = match e {
        OrderEvidence::Symbolic(_) => "symbolic",
        OrderEvidence::Pointwise(_) => "pointwise",
    };
    Ok((e.order(), kind))
}

/// Jacobian equations for dimension `n` and degree `d`, written in `a11, a12, …`.
#[pyfunction]
fn jacobian_equations(py: Python<'_>, n: usize, d: u32) -> PyResult<Vec<String>> {
    let sys = py
        .detach(move || generate_jacobian_equations(n, d))
        .map_err(err)?;
    let names = sys.variable_names();
    Ok(sys.equations.iter().map(|e| e.to_human(&names)).collect())
}

/// Runs the bundled fixture catalogue: `(name, passed)` per fixture.
#[pyfunction]
#[pyo3(signature = (filter = None))]
fn run_fixtures(py: Python<'_>, filter: Option<String>) -> PyResult<Vec<(String, bool)>> {
    let records: Vec<_> = fixtures::catalog()
        .map_err(err)?
        .into_iter()
        .filter(|r| filter.as_deref().is_none_or(|f| fixtures::matches(r, f)))
        .collect();
    let outcomes = py.detach(move || fixtures::run_catalog(&records));
    Ok(outcomes
        .iter()
        .map(|o| (o.name.clone(), o.passed()))
        .collect())
}

/// Fixture matrix by catalogue name.
#[pyfunction]
fn fixture(name: &str) -> PyResult<PyMatrix> {
    fixtures::matrix(name).map(PyMatrix).map_err(err)
}

#[pymodule]
fn pyjacmap(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyMatrix>()?;
    m.add_function(wrap_pyfunction!(is_good_pair, m)?)?;
    m.add_function(wrap_pyfunction!(newton_inverse, m)?)?;
    m.add_function(wrap_pyfunction!(newton_order_of, m)?)?;
    m.add_function(wrap_pyfunction!(jacobian_equations, m)?)?;
    m.add_function(wrap_pyfunction!(run_fixtures, m)?)?;
    m.add_function(wrap_pyfunction!(fixture, m)?)?;
    Ok(())
}
