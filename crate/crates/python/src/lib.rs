//! Python bindings. Rationals cross the boundary as `fractions.Fraction`
//! and integers as arbitrary-precision `int`.

use std::collections::BTreeMap;

use k3fix::catalog::{admissible_orders as table, K3_TOTIENT_CAP};
use k3fix::intsolve::{self, explain_certificate, Feasibility as Solved};
use k3fix::lefschetz::{self, RotationPolicy};
use k3fix::{FixedConfig, LinearSystem, Rational};
use num_bigint::BigInt;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

/// `(a, b, count)` triples.
type Points = Vec<(u64, u64, u64)>;

fn err(e: k3fix::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn policy(allow_impure: bool) -> RotationPolicy {
    if allow_impure {
        RotationPolicy::AllowImpure
    } else {
        RotationPolicy::Pure
    }
}

fn linear(matrix: Vec<Vec<Rational>>, rhs: Vec<Rational>) -> PyResult<LinearSystem> {
    let cols = matrix.first().map_or(0, Vec::len);
    let labels = (0..cols).map(|i| format!("u{i}")).collect();
    LinearSystem::new(labels, matrix, rhs).map_err(err)
}

fn config(
    order: u64,
    rot: u64,
    points: &[(u64, u64, u64)],
    curve_n: Option<i64>,
) -> PyResult<FixedConfig> {
    FixedConfig::from_triples(order, rot, points, curve_n).map_err(err)
}

/// Euler's totient.
#[pyfunction]
fn euler_phi(n: u64) -> PyResult<u64> {
    k3fix::exactmath::euler_phi(n).map_err(err)
}

/// Coefficients of the n-th cyclotomic polynomial, constant term first.
#[pyfunction]
fn cyclotomic_poly(n: u64) -> PyResult<Vec<BigInt>> {
    let p = k3fix::exactmath::cyclotomic_poly(n).map_err(err)?;
    Ok(p.integer_coeffs()
        .expect("cyclotomic polynomials are integral"))
}

/// `{phi: [orders, descending]}` for every order with `phi(N) <= max_phi`.
#[pyfunction]
#[pyo3(signature = (max_phi = K3_TOTIENT_CAP))]
fn admissible_orders(max_phi: u64) -> PyResult<BTreeMap<u64, Vec<u64>>> {
    Ok(table(max_phi).map_err(err)?.rows().clone())
}

/// Outcome of an integer feasibility check.
#[pyclass(frozen, module = "k3fix")]
struct Feasibility {
    #[pyo3(get)]
    verdict: String,
    /// Row multipliers on the denominator-cleared system.
    #[pyo3(get)]
    certificate: Option<Vec<Rational>>,
    #[pyo3(get)]
    witness: Option<Vec<BigInt>>,
    #[pyo3(get)]
    explanation: Option<String>,
}

#[pymethods]
impl Feasibility {
    fn __repr__(&self) -> String {
        format!("Feasibility(verdict='{}')", self.verdict)
    }
}

fn decide(sys: &LinearSystem) -> PyResult<Feasibility> {
    let solved = intsolve::integer_feasibility(sys);
    let explanation = match solved.certificate() {
        Some(y) => Some(explain_certificate(sys, y).map_err(err)?),
        None => None,
    };
    Ok(Feasibility {
        verdict: solved.verdict().as_str().to_string(),
        certificate: solved.certificate().map(<[Rational]>::to_vec),
        witness: match solved {
            Solved::Feasible { witness } => Some(witness),
            _ => None,
        },
        explanation,
    })
}

/// Linear system equating both sides of the holomorphic Lefschetz formula
/// for an automorphism of order `order` acting on the 2-form by `ζ^rot`.
#[pyclass(frozen, module = "k3fix")]
struct LefschetzSystem {
    inner: lefschetz::LefschetzSystem,
}

#[pymethods]
impl LefschetzSystem {
    #[new]
    #[pyo3(signature = (order, rot = 1, allow_impure = false))]
    fn new(order: u64, rot: u64, allow_impure: bool) -> PyResult<Self> {
        let inner = lefschetz::build_system_with(order, rot, policy(allow_impure)).map_err(err)?;
        Ok(LefschetzSystem { inner })
    }

    #[getter]
    fn order(&self) -> u64 {
        self.inner.order()
    }

    #[getter]
    fn rot(&self) -> u64 {
        self.inner.rot()
    }

    #[getter]
    fn labels(&self) -> Vec<String> {
        self.inner.labels().to_vec()
    }

    /// Alias to canonical label.
    #[getter]
    fn aliases(&self) -> BTreeMap<String, String> {
        let lin = self.inner.linear();
        lin.aliases()
            .iter()
            .map(|(a, &c)| (a.clone(), lin.labels()[c].clone()))
            .collect()
    }

    #[getter]
    fn matrix(&self) -> Vec<Vec<Rational>> {
        self.inner.linear().matrix().to_vec()
    }

    #[getter]
    fn rhs(&self) -> Vec<Rational> {
        self.inner.linear().rhs().to_vec()
    }

    #[getter]
    fn shape(&self) -> (usize, usize) {
        (self.inner.linear().rows(), self.inner.linear().cols())
    }

    /// Rank over Q of the coefficient matrix.
    #[getter]
    fn rank(&self) -> Option<usize> {
        intsolve::rational_solve(self.inner.linear())
            .solved()
            .map(|s| s.rank)
    }

    fn feasibility(&self) -> PyResult<Feasibility> {
        decide(self.inner.linear())
    }

    /// Whether a relation such as `"4*m_1 = -1 + 2*m_2 + 8*n"` holds on every
    /// rational solution.
    fn relation_implied(&self, relation: &str) -> PyResult<bool> {
        let rel = intsolve::LinearRelation::parse(relation).map_err(err)?;
        intsolve::relation_implied(self.inner.linear(), &rel).map_err(err)
    }

    /// Whether `[(a, b, count), ...]` with curve term `n` solves the system.
    #[pyo3(signature = (points, curve_n = None))]
    fn accepts(&self, points: Vec<(u64, u64, u64)>, curve_n: Option<i64>) -> PyResult<bool> {
        let cfg = config(self.inner.order(), self.inner.rot(), &points, curve_n)?;
        self.inner.accepts(&cfg).map_err(err)
    }

    /// Nonnegative solutions with at most `max_points` isolated points, as
    /// `([(a, b, count), ...], n)` pairs in lexicographic order.
    #[pyo3(signature = (max_points, n_min = -10, n_max = 10))]
    fn search(
        &self,
        py: Python<'_>,
        max_points: u64,
        n_min: i64,
        n_max: i64,
    ) -> Vec<(Points, Option<i64>)> {
        let found =
            py.detach(|| intsolve::nonneg_enumerate(&self.inner, max_points, n_min..=n_max));
        found
            .into_iter()
            .map(|cfg| {
                let points = cfg
                    .multiplicities()
                    .iter()
                    .map(|(t, &m)| (t.a(), t.b(), m))
                    .collect();
                (points, cfg.curve_n())
            })
            .collect()
    }

    fn __repr__(&self) -> String {
        let (rows, cols) = self.shape();
        format!(
            "LefschetzSystem(order={}, rot={}, shape=({rows}, {cols}))",
            self.inner.order(),
            self.inner.rot()
        )
    }
}

/// `LefschetzSystem(order, rot)`.
#[pyfunction]
#[pyo3(signature = (order, rot = 1, allow_impure = false))]
fn build_system(order: u64, rot: u64, allow_impure: bool) -> PyResult<LefschetzSystem> {
    LefschetzSystem::new(order, rot, allow_impure)
}

/// Integer feasibility of `matrix · u = rhs`.
#[pyfunction]
fn feasibility(matrix: Vec<Vec<Rational>>, rhs: Vec<Rational>) -> PyResult<Feasibility> {
    decide(&linear(matrix, rhs)?)
}

/// Whether `y` proves `matrix · u = rhs` has no integer solution.
#[pyfunction]
fn check_certificate(
    matrix: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    y: Vec<Rational>,
) -> PyResult<bool> {
    intsolve::check_certificate(&linear(matrix, rhs)?, &y).map_err(err)
}

/// Coordinates of `global - Σ local` for explicit fixed-point data; all zero
/// iff the data satisfies the formula.
#[pyfunction]
#[pyo3(signature = (order, rot, points, curve_n = None))]
fn verify(
    order: u64,
    rot: u64,
    points: Vec<(u64, u64, u64)>,
    curve_n: Option<i64>,
) -> PyResult<Vec<Rational>> {
    let cfg = config(order, rot, &points, curve_n)?;
    let residual = lefschetz::verify_fixed_config(order, rot, &cfg).map_err(err)?;
    Ok(residual.into_coords())
}

#[pymodule]
#[pyo3(name = "k3fix")]
fn k3fix_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<LefschetzSystem>()?;
    m.add_class::<Feasibility>()?;
    m.add_function(wrap_pyfunction!(euler_phi, m)?)?;
    m.add_function(wrap_pyfunction!(cyclotomic_poly, m)?)?;
    m.add_function(wrap_pyfunction!(admissible_orders, m)?)?;
    m.add_function(wrap_pyfunction!(build_system, m)?)?;
    m.add_function(wrap_pyfunction!(feasibility, m)?)?;
    m.add_function(wrap_pyfunction!(check_certificate, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
