use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use subcode::{
    builtin, classify_stabilizer, delta, exhaustive_weight, goursat_of, make_css_decoder, monte_carlo, parse_code_file,
    CodeFile, Distance, Error, Format, PauliVector, SteaneDecoder, Subspace, SubsystemCode, Tally,
};

fn err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn rows(s: &Subspace) -> Vec<Vec<u32>> {
    s.basis().to_rows()
}

/// A subsystem stabilizer code over a prime field.
#[pyclass(name = "Code", frozen)]
struct PyCode {
    inner: SubsystemCode,
}

#[pymethods]
impl PyCode {
    /// Builds a code from Pauli strings such as `"XZZXI"` or `"X1Z2 X0Z1"`.
    #[new]
    fn new(p: u32, n: usize, generators: Vec<String>) -> PyResult<Self> {
        let gens = generators
            .iter()
            .map(|g| PauliVector::parse(g, p))
            .collect::<subcode::Result<Vec<_>>>()
            .map_err(err)?;
        let inner = SubsystemCode::from_generators(p, n, &gens).map_err(err)?;
        Ok(PyCode { inner })
    }

    /// Parses the contents of a code file.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        let inner = parse_code_file(text).and_then(|f| f.to_code()).map_err(err)?;
        Ok(PyCode { inner })
    }

    #[staticmethod]
    fn five_qubit() -> Self {
        PyCode {
            inner: builtin::five_qubit(),
        }
    }

    #[staticmethod]
    fn bacon_shor(l: usize) -> PyResult<Self> {
        Ok(PyCode {
            inner: builtin::bacon_shor(l).map_err(err)?,
        })
    }

    #[staticmethod]
    #[pyo3(signature = (p, n, dim, seed=0))]
    fn random(p: u32, n: usize, dim: usize, seed: u64) -> PyResult<Self> {
        Ok(PyCode {
            inner: builtin::random(p, n, dim, seed).map_err(err)?,
        })
    }

    #[getter]
    fn p(&self) -> u32 {
        self.inner.field().modulus()
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    fn generators(&self) -> Vec<String> {
        self.inner.generators().iter().map(ToString::to_string).collect()
    }

    /// `(n, k, r)`.
    fn parameters(&self) -> (usize, usize, usize) {
        let c = self.inner.parameters();
        (c.n, c.k, c.r)
    }

    /// `(d, exact)`; `exact` is false when the search stopped at `budget` and
    /// `d` is only a lower bound.
    #[pyo3(signature = (budget=None))]
    fn distance(&self, budget: Option<usize>) -> PyResult<(usize, bool)> {
        match self.inner.distance(budget).map_err(err)? {
            Distance::Exact(d) => Ok((d, true)),
            Distance::AtLeast(d) => Ok((d, false)),
        }
    }

    fn is_css(&self) -> bool {
        self.inner.is_css()
    }

    fn double(&self) -> PyCode {
        PyCode {
            inner: delta(&self.inner).result,
        }
    }

    /// External and internal CSS codes as row bases, plus the pairing.
    fn goursat<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let g = goursat_of(&self.inner);
        let d = PyDict::new(py);
        d.set_item("ex", rows(g.ex()))?;
        d.set_item("ez", rows(g.ez()))?;
        d.set_item("nx", rows(g.nx()))?;
        d.set_item("nz", rows(g.nz()))?;
        d.set_item("phi_pairs", g.phi_pairs().to_vec())?;
        Ok(d)
    }

    /// Region of the maximal/minimal stabilizer taxonomy.
    fn classify(&self) -> String {
        classify_stabilizer(&self.inner).region().to_string()
    }

    fn decoder(&self) -> PyResult<PyDecoder> {
        let split = self.inner.css_split().map_err(err)?;
        Ok(PyDecoder {
            inner: make_css_decoder(&split),
        })
    }

    #[pyo3(signature = (format="pauli"))]
    fn to_text(&self, format: &str) -> PyResult<String> {
        let format: Format = format.parse().map_err(err)?;
        Ok(CodeFile::from_code(&self.inner, format).to_string())
    }

    fn __eq__(&self, other: &PyCode) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!("Code({}, p={})", self.inner.parameters(), self.p())
    }
}

/// Steane-style decoder of a CSS code.
#[pyclass(name = "Decoder", frozen)]
struct PyDecoder {
    inner: SteaneDecoder,
}

fn tally<'py>(py: Python<'py>, t: &Tally) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("trials", t.trials)?;
    d.set_item("corrected", t.corrected)?;
    d.set_item("logical_failures", t.logical_failures)?;
    d.set_item("out_of_range", t.out_of_range)?;
    d.set_item("failure_rate", t.failure_rate())?;
    Ok(d)
}

#[pymethods]
impl PyDecoder {
    /// Recovers the error `X^x Z^z` and returns its status.
    fn recover(&self, x: Vec<u32>, z: Vec<u32>) -> PyResult<String> {
        let e = PauliVector::new(self.inner.field(), x, z).map_err(err)?;
        if e.n() != self.inner.n() {
            return Err(err(Error::LengthMismatch {
                expected: self.inner.n(),
                got: e.n(),
            }));
        }
        Ok(self.inner.recover(&e).status.to_string())
    }

    #[pyo3(signature = (q, trials, seed=0))]
    fn monte_carlo<'py>(&self, py: Python<'py>, q: f64, trials: u64, seed: u64) -> PyResult<Bound<'py, PyDict>> {
        let report = py.detach(|| monte_carlo(&self.inner, q, trials, seed)).map_err(err)?;
        tally(py, &report.tally)
    }

    fn exhaustive<'py>(&self, py: Python<'py>, weight: usize) -> PyResult<Bound<'py, PyDict>> {
        let t = py.detach(|| exhaustive_weight(&self.inner, weight));
        tally(py, &t)
    }
}

#[pymodule]
pub fn subcode_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyCode>()?;
    m.add_class::<PyDecoder>()?;
    Ok(())
}
