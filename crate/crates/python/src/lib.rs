//! Python bindings: permutations, involutions, their pipe dreams and Schubert polynomials.

use invpipes::invdream::{fd_set, id_set};
use invpipes::pipedream::{pd_set, resolve};
use invpipes::{render, rpp, schubert, verify};
use invpipes::{Diagram, FpfInvolution, Involution, Permutation, Polynomial};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

type Cells = Vec<(usize, usize)>;

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn cells(d: &Diagram) -> Cells {
    d.iter().map(|c| (c.row, c.col)).collect()
}

fn dream_list<'a>(dreams: impl IntoIterator<Item = &'a Diagram>) -> Vec<Cells> {
    dreams.into_iter().map(cells).collect()
}

#[pyclass(name = "Polynomial", module = "pyinvpipes", frozen, skip_from_py_object, eq)]
#[derive(Clone, PartialEq)]
struct PyPolynomial(Polynomial);

#[pymethods]
impl PyPolynomial {
    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Polynomial({:?})", self.0.to_string())
    }

    /// `(coefficient, x exponents, y exponents)` in display order; coefficients as `p/q` text.
    fn terms(&self) -> Vec<(String, Vec<u32>, Vec<u32>)> {
        self.0.terms().map(|(m, c)| (c.to_string(), m.x_exponents().to_vec(), m.y_exponents().to_vec())).collect()
    }

    fn degree(&self) -> Option<u32> {
        self.0.degree()
    }

    /// Value with every `x_i = num/den` and every `y_j = 0`, as `p/q` text.
    #[pyo3(signature = (num, den = 1))]
    fn specialize(&self, num: i64, den: i64) -> PyResult<String> {
        if den == 0 {
            return Err(value_error("denominator is zero"));
        }
        Ok(self.0.principal_specialization(&invpipes::poly::ratio(num, den)).to_string())
    }

    fn __add__(&self, other: &PyPolynomial) -> PyPolynomial {
        PyPolynomial(&self.0 + &other.0)
    }

    fn __mul__(&self, other: &PyPolynomial) -> PyPolynomial {
        PyPolynomial(&self.0 * &other.0)
    }
}

#[pyclass(name = "Permutation", module = "pyinvpipes", frozen, skip_from_py_object, eq, hash)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyPermutation(Permutation);

#[pymethods]
impl PyPermutation {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        text.parse().map(PyPermutation).map_err(value_error)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Permutation('{}')", self.0)
    }

    #[pyo3(signature = (n = None))]
    fn one_line(&self, n: Option<usize>) -> Vec<usize> {
        self.0.one_line(n.unwrap_or(self.0.window()))
    }

    fn length(&self) -> usize {
        self.0.length()
    }

    fn code(&self) -> Vec<usize> {
        self.0.code()
    }

    fn inverse(&self) -> PyPermutation {
        PyPermutation(self.0.inverse())
    }

    fn reduced_words(&self) -> Vec<Vec<usize>> {
        self.0.reduced_words()
    }

    fn pipe_dreams(&self) -> Vec<Cells> {
        dream_list(&pd_set(&self.0))
    }

    /// From pipe dreams, or from divided differences with `method="dd"`.
    #[pyo3(signature = (method = "dreams"))]
    fn schubert(&self, method: &str) -> PyResult<PyPolynomial> {
        match method {
            "dreams" => Ok(PyPolynomial(schubert::schubert(&self.0))),
            "dd" => Ok(PyPolynomial(schubert::schubert_dd(&self.0))),
            _ => Err(value_error(format!("unknown method {method:?}"))),
        }
    }

    fn double_schubert(&self) -> PyPolynomial {
        PyPolynomial(schubert::double_schubert(&self.0))
    }
}

#[pyclass(name = "Involution", module = "pyinvpipes", frozen, skip_from_py_object, eq, hash)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyInvolution(Involution);

#[pymethods]
impl PyInvolution {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        text.parse().map(PyInvolution).map_err(value_error)
    }

    fn __str__(&self) -> String {
        self.0.perm().to_string()
    }

    fn __repr__(&self) -> String {
        format!("Involution('{}')", self.0.perm())
    }

    fn iell(&self) -> usize {
        self.0.iell()
    }

    fn kappa(&self) -> usize {
        self.0.kappa()
    }

    fn inv_code(&self) -> Vec<usize> {
        self.0.inv_code()
    }

    fn atoms(&self) -> Vec<PyPermutation> {
        self.0.atoms().into_iter().map(PyPermutation).collect()
    }

    fn involution_words(&self) -> Vec<Vec<usize>> {
        self.0.involution_words()
    }

    fn pipe_dreams(&self) -> Vec<Cells> {
        dream_list(&id_set(&self.0))
    }

    /// `||ID(y)||` as text.
    fn weighted_count(&self) -> String {
        schubert::weighted_count(&self.0).to_string()
    }

    /// Atom sum by default, dream sum with `method="dreams"`.
    #[pyo3(signature = (method = "atoms"))]
    fn schubert(&self, method: &str) -> PyResult<PyPolynomial> {
        match method {
            "atoms" => Ok(PyPolynomial(schubert::inv_schubert(&self.0))),
            "dreams" => schubert::inv_schubert_pd(&self.0).map(PyPolynomial).map_err(value_error),
            _ => Err(value_error(format!("unknown method {method:?}"))),
        }
    }

    fn psi(&self, j: usize) -> Vec<PyInvolution> {
        self.0.psi(j).into_iter().map(PyInvolution).collect()
    }
}

#[pyclass(name = "FpfInvolution", module = "pyinvpipes", frozen, skip_from_py_object, eq, hash)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyFpfInvolution(FpfInvolution);

#[pymethods]
impl PyFpfInvolution {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        text.parse().map(PyFpfInvolution).map_err(value_error)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("FpfInvolution('{}')", self.0)
    }

    fn fpf_ell(&self) -> usize {
        self.0.fpf_ell()
    }

    fn atoms(&self) -> Vec<PyPermutation> {
        self.0.fpf_atoms().into_iter().map(PyPermutation).collect()
    }

    fn involution_words(&self) -> Vec<Vec<usize>> {
        self.0.fpf_involution_words()
    }

    fn pipe_dreams(&self) -> Vec<Cells> {
        dream_list(&fd_set(&self.0))
    }

    #[pyo3(signature = (method = "atoms"))]
    fn schubert(&self, method: &str) -> PyResult<PyPolynomial> {
        match method {
            "atoms" => Ok(PyPolynomial(schubert::fpf_schubert(&self.0))),
            "dreams" => Ok(PyPolynomial(schubert::fpf_schubert_pd(&self.0))),
            _ => Err(value_error(format!("unknown method {method:?}"))),
        }
    }
}

/// `(permutation, reduced)` traced from a set of crossing cells.
#[pyfunction]
fn resolve_cells(cells: Cells) -> (PyPermutation, bool) {
    let (w, reduced) = resolve(&Diagram::new(cells));
    (PyPermutation(w), reduced)
}

#[pyfunction]
#[pyo3(signature = (cells, format = "ascii"))]
fn render_cells(cells: Cells, format: &str) -> PyResult<String> {
    let d = Diagram::new(cells);
    match format {
        "ascii" => Ok(render::ascii(&d)),
        "svg" => Ok(render::svg(&d)),
        _ => Err(value_error(format!("unknown format {format:?}"))),
    }
}

#[pyfunction]
#[pyo3(signature = (parts, k, shifted = false))]
fn rpp_count(parts: Vec<usize>, k: usize, shifted: bool) -> PyResult<u128> {
    rpp::rpp_count(&parts, k, shifted).map_err(value_error)
}

/// Runs suites by name (or `"all"`); returns `(passed, report text)`.
#[pyfunction(name = "verify")]
#[pyo3(signature = (suites, n = 4))]
fn run_verify(suites: Vec<String>, n: usize) -> PyResult<(bool, String)> {
    let names: Vec<&str> = suites.iter().map(String::as_str).collect();
    let report = verify::run(&names, n).map_err(value_error)?;
    Ok((report.passed(), report.to_text()))
}

#[pymodule]
fn pyinvpipes(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPolynomial>()?;
    m.add_class::<PyPermutation>()?;
    m.add_class::<PyInvolution>()?;
    m.add_class::<PyFpfInvolution>()?;
    m.add_function(wrap_pyfunction!(resolve_cells, m)?)?;
    m.add_function(wrap_pyfunction!(render_cells, m)?)?;
    m.add_function(wrap_pyfunction!(rpp_count, m)?)?;
    m.add_function(wrap_pyfunction!(run_verify, m)?)?;
    Ok(())
}
