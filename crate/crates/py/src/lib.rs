//! Python bindings. Rationals cross the boundary as `fractions.Fraction`; on
//! input anything whose `str()` is an integer or `p/q` is accepted (int,
//! Fraction, str). Floats are rejected so that nothing is silently rounded.

use ::qcorona as qc;
use qc::arith::{format_rat, parse_rat};
use qc::corona::{diagnose_common_zero, CommonZero, CoronaOutcome};
use qc::hpoly::{classify_zeros, Sphere};
use qc::{CPoly, CoronaInstance, HPoly, Quat, Rat, SearchConfig};
use pyo3::exceptions::{PyValueError, PyZeroDivisionError};
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyTuple};

pyo3::create_exception!(qcorona, CommonZeroError, pyo3::exceptions::PyException);
pyo3::create_exception!(qcorona, UndecidedError, pyo3::exceptions::PyException);

fn core_err(e: qc::Error) -> PyErr {
    match e {
        qc::Error::DivisionByZero => PyZeroDivisionError::new_err(e.to_string()),
        other => PyValueError::new_err(other.to_string()),
    }
}

fn to_rat(obj: &Bound<'_, PyAny>) -> PyResult<Rat> {
    let text = obj.str()?.to_string();
    parse_rat(text.trim())
        .ok_or_else(|| PyValueError::new_err(format!("not an exact rational: {text}")))
}

fn to_fraction<'py>(py: Python<'py>, r: &Rat) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?
        .getattr("Fraction")?
        .call1((format_rat(r),))
}

/// A quaternion `x0 + x1 i + x2 j + x3 k` with rational components.
#[pyclass(name = "Quat", module = "qcorona", frozen, from_py_object)]
#[derive(Clone)]
struct PyQuat(Quat);

#[pymethods]
impl PyQuat {
    #[new]
    #[pyo3(signature = (x0 = None, x1 = None, x2 = None, x3 = None))]
    fn new(
        x0: Option<&Bound<'_, PyAny>>,
        x1: Option<&Bound<'_, PyAny>>,
        x2: Option<&Bound<'_, PyAny>>,
        x3: Option<&Bound<'_, PyAny>>,
    ) -> PyResult<Self> {
        let c = |o: Option<&Bound<'_, PyAny>>| o.map_or(Ok(Rat::from_integer(0.into())), to_rat);
        Ok(PyQuat(Quat::new(c(x0)?, c(x1)?, c(x2)?, c(x3)?)))
    }

    fn components<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyTuple>> {
        let q = &self.0;
        PyTuple::new(
            py,
            [&q.x0, &q.x1, &q.x2, &q.x3]
                .into_iter()
                .map(|r| to_fraction(py, r))
                .collect::<PyResult<Vec<_>>>()?,
        )
    }

    fn conj(&self) -> Self {
        PyQuat(self.0.conj())
    }

    fn norm_sqr<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_fraction(py, &self.0.norm_sqr())
    }

    fn inv(&self) -> PyResult<Self> {
        self.0.inv().map(PyQuat).map_err(core_err)
    }

    fn __add__(&self, other: &Self) -> Self {
        PyQuat(&self.0 + &other.0)
    }

    fn __sub__(&self, other: &Self) -> Self {
        PyQuat(&self.0 - &other.0)
    }

    fn __mul__(&self, other: &Self) -> Self {
        PyQuat(&self.0 * &other.0)
    }

    fn __neg__(&self) -> Self {
        PyQuat(-&self.0)
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0 == other.0
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        let q = &self.0;
        format!(
            "Quat('{}', '{}', '{}', '{}')",
            format_rat(&q.x0),
            format_rat(&q.x1),
            format_rat(&q.x2),
            format_rat(&q.x3)
        )
    }
}

/// A quaternionic polynomial `sum q^m a_m`, coefficients ascending in degree.
#[pyclass(name = "HPoly", module = "qcorona", frozen, from_py_object)]
#[derive(Clone)]
struct PyHPoly(HPoly);

#[pymethods]
impl PyHPoly {
    #[new]
    fn new(coeffs: Vec<PyQuat>) -> Self {
        PyHPoly(HPoly::new(coeffs.into_iter().map(|q| q.0).collect()))
    }

    /// The variable `q`.
    #[staticmethod]
    fn q() -> Self {
        PyHPoly(HPoly::q())
    }

    /// `q - c`.
    #[staticmethod]
    fn linear(c: &PyQuat) -> Self {
        PyHPoly(HPoly::linear(&c.0))
    }

    #[staticmethod]
    fn constant(c: &PyQuat) -> Self {
        PyHPoly(HPoly::constant(c.0.clone()))
    }

    fn coeffs(&self) -> Vec<PyQuat> {
        self.0.coeffs().iter().cloned().map(PyQuat).collect()
    }

    fn degree(&self) -> Option<usize> {
        self.0.degree()
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn star(&self, other: &Self) -> Self {
        PyHPoly(self.0.star(&other.0))
    }

    fn conj(&self) -> Self {
        PyHPoly(self.0.regular_conjugate())
    }

    fn sym(&self) -> Self {
        PyHPoly(self.0.symmetrization())
    }

    fn eval(&self, at: &PyQuat) -> PyQuat {
        PyQuat(self.0.eval(&at.0))
    }

    /// `(F, G)` with `f = F + G j` on the slice through `i`; each is a list of
    /// `(re, im)` Fraction pairs.
    fn split<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyTuple>> {
        let s = self.0.split();
        PyTuple::new(py, [cpoly_to_py(py, &s.f)?, cpoly_to_py(py, &s.g)?])
    }

    fn __add__(&self, other: &Self) -> Self {
        PyHPoly(&self.0 + &other.0)
    }

    fn __sub__(&self, other: &Self) -> Self {
        PyHPoly(&self.0 - &other.0)
    }

    fn __mul__(&self, other: &Self) -> Self {
        self.star(other)
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0 == other.0
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("HPoly({})", self.0)
    }
}

fn cpoly_to_py<'py>(py: Python<'py>, p: &CPoly) -> PyResult<Bound<'py, PyAny>> {
    let pairs = p
        .coeffs()
        .iter()
        .map(|c| PyTuple::new(py, [to_fraction(py, &c.re)?, to_fraction(py, &c.im)?]))
        .collect::<PyResult<Vec<_>>>()?;
    Ok(pairs.into_pyobject(py)?.into_any())
}

fn sphere_to_py<'py>(py: Python<'py>, s: &Sphere) -> PyResult<Bound<'py, PyTuple>> {
    PyTuple::new(py, [to_fraction(py, &s.x)?, to_fraction(py, &s.y_squared)?])
}

fn unwrap_polys(fs: Vec<PyHPoly>) -> Vec<HPoly> {
    fs.into_iter().map(|f| f.0).collect()
}

#[pyfunction]
fn star(f: &PyHPoly, g: &PyHPoly) -> PyHPoly {
    f.star(g)
}

/// Zeros of `f`: `{"spherical": [(x, y2)], "isolated": [((x, y2), Quat)], "residual": str}`.
#[pyfunction]
fn zeros<'py>(py: Python<'py>, f: &PyHPoly) -> PyResult<Bound<'py, PyDict>> {
    let z = classify_zeros(&f.0).map_err(core_err)?;
    let out = PyDict::new(py);
    let spherical = z
        .spherical
        .iter()
        .map(|s| sphere_to_py(py, s))
        .collect::<PyResult<Vec<_>>>()?;
    let isolated = z
        .isolated
        .iter()
        .map(|(s, q)| {
            PyTuple::new(
                py,
                [sphere_to_py(py, s)?.into_any(), Bound::new(py, PyQuat(q.clone()))?.into_any()],
            )
        })
        .collect::<PyResult<Vec<_>>>()?;
    out.set_item("spherical", spherical)?;
    out.set_item("isolated", isolated)?;
    out.set_item("residual", z.residual.to_string())?;
    Ok(out)
}

/// Solves `f_1*h_1 + ... + f_n*h_n = 1`. Raises `CommonZeroError` when the
/// `f_l` share a zero and `UndecidedError` when the minor budget runs out.
#[pyfunction]
#[pyo3(signature = (fs, minor_budget = qc::polysolve::DEFAULT_MINOR_BUDGET))]
fn solve(fs: Vec<PyHPoly>, minor_budget: usize) -> PyResult<Vec<PyHPoly>> {
    let inst = CoronaInstance::new(unwrap_polys(fs)).map_err(core_err)?;
    let config = SearchConfig {
        budget: minor_budget,
        ..SearchConfig::default()
    };
    match qc::solve_corona(&inst, &config).map_err(core_err)? {
        CoronaOutcome::Solved(sol) => Ok(sol.hs.into_iter().map(PyHPoly).collect()),
        CoronaOutcome::Obstructed(ob) => {
            let zeros: Vec<String> = ob.diagnosis.common_zeros.iter().map(ToString::to_string).collect();
            Err(CommonZeroError::new_err(format!(
                "common zero; rank-drop gcd {}; located: [{}]",
                ob.gcd,
                zeros.join(", ")
            )))
        }
        CoronaOutcome::BudgetExhausted(ob) => Err(UndecidedError::new_err(format!(
            "minor budget exhausted after {} minors",
            ob.minors_examined
        ))),
    }
}

/// Exact check of `f_1*h_1 + ... + f_n*h_n = 1`.
#[pyfunction]
fn verify(fs: Vec<PyHPoly>, hs: Vec<PyHPoly>) -> bool {
    qc::verify(&unwrap_polys(fs), &unwrap_polys(hs))
}

/// Common zeros located on rational spheres, as `("point", (x, y2), Quat)` or
/// `("sphere", (x, y2), None)` tuples.
#[pyfunction]
fn common_zeros<'py>(py: Python<'py>, fs: Vec<PyHPoly>) -> PyResult<Vec<Bound<'py, PyTuple>>> {
    let inst = CoronaInstance::new(unwrap_polys(fs)).map_err(core_err)?;
    diagnose_common_zero(&inst, None)
        .common_zeros
        .iter()
        .map(|z| match z {
            CommonZero::Point(s, q) => PyTuple::new(
                py,
                [
                    "point".into_pyobject(py)?.into_any(),
                    sphere_to_py(py, s)?.into_any(),
                    Bound::new(py, PyQuat(q.clone()))?.into_any(),
                ],
            ),
            CommonZero::WholeSphere(s) => PyTuple::new(
                py,
                [
                    "sphere".into_pyobject(py)?.into_any(),
                    sphere_to_py(py, s)?.into_any(),
                    py.None().into_bound(py),
                ],
            ),
        })
        .collect()
}

#[pymodule]
fn qcorona(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyQuat>()?;
    m.add_class::<PyHPoly>()?;
    m.add_function(wrap_pyfunction!(star, m)?)?;
    m.add_function(wrap_pyfunction!(zeros, m)?)?;
    m.add_function(wrap_pyfunction!(solve, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(common_zeros, m)?)?;
    m.add("CommonZeroError", m.py().get_type::<CommonZeroError>())?;
    m.add("UndecidedError", m.py().get_type::<UndecidedError>())?;
    Ok(())
}
