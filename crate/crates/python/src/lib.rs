//! Python bindings: block matrices, ideals over F_p or QQ, and the report
//! runner returning plain dicts.

use std::sync::Arc;

use pyo3::create_exception;
use pyo3::exceptions::{PyException, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use nullcone::groebner::{buchberger_with, initial_ideal, monomial_height, GbConfig, GroebnerBasis};
use nullcone::ideals::{self, IdealGens};
use nullcone::report::{self, RunConfig};
use nullcone::{AlgebraError, BlockOrder, Field, Polynomial, PrimeField, Rationals, Ring, Shape};

create_exception!(nullcone_py, BudgetExceeded, PyException);

fn err(e: AlgebraError) -> PyErr {
    match e {
        AlgebraError::Budget { .. } => BudgetExceeded::new_err(e.to_string()),
        other => PyValueError::new_err(other.to_string()),
    }
}

#[pyfunction]
fn symplectic_block_matrix(t: usize, n: usize) -> PyResult<Vec<Vec<u32>>> {
    if t == 0 || n == 0 {
        return Err(PyValueError::new_err("t and n must be positive"));
    }
    Ok(nullcone::order::symplectic_block_matrix(t, n))
}

#[pyfunction]
fn gl_block_matrices(m: usize, t: usize, n: usize) -> PyResult<(Vec<Vec<u32>>, Vec<Vec<u32>>)> {
    nullcone::order::gl_block_matrices(m, t, n).map_err(err)
}

enum Any {
    Fp(IdealGens<PrimeField>),
    Qq(IdealGens<Rationals>),
}

macro_rules! each {
    ($any:expr, $i:ident => $body:expr) => {
        match $any {
            Any::Fp($i) => $body,
            Any::Qq($i) => $body,
        }
    };
}

/// An ideal of a matrix polynomial ring, with the shape's block order.
#[pyclass(frozen, module = "nullcone_py")]
struct Ideal {
    inner: Any,
    order: BlockOrder,
    budget: u64,
}

fn shape_of(kind: &str, m: Option<usize>, t: usize, n: usize) -> PyResult<Shape> {
    match (kind, m) {
        ("symplectic", _) => Ok(Shape::Symplectic { t, n }),
        ("gl", Some(m)) => Ok(Shape::GeneralLinear { m, t, n }),
        ("gl", None) => Err(PyValueError::new_err("gl shape needs m")),
        _ => Err(PyValueError::new_err(format!("unknown shape {kind:?}; use 'symplectic' or 'gl'"))),
    }
}

fn build<F: Field>(field: F, shape: Shape, which: &str, r: usize, s: usize, p: u32) -> Result<IdealGens<F>, AlgebraError> {
    let ring = Ring::new(field, shape)?;
    match which {
        "nullcone" => match shape {
            Shape::Symplectic { .. } => ideals::symplectic_gens(&ring),
            Shape::GeneralLinear { .. } => ideals::yz_entries(&ring),
        },
        "yz" => ideals::yz_entries(&ring),
        "voc" => ideals::voc_gens(&ring, r, s),
        "alpha" => ideals::alpha(&ring),
        "m-bracket" => ideals::maximal_ideal_frobenius(&ring, p),
        other => Err(AlgebraError::Parameter(format!("unknown ideal {other:?}"))),
    }
}

fn parse_all<F: Field>(ring: &Arc<Ring<F>>, gens: &[String]) -> Result<IdealGens<F>, AlgebraError> {
    let polys = gens.iter().map(|g| Polynomial::parse(ring, g)).collect::<Result<Vec<_>, _>>()?;
    Ok(IdealGens::new("I", ring, polys))
}

impl Ideal {
    fn basis<F: Field>(&self, i: &IdealGens<F>) -> PyResult<GroebnerBasis<F>> {
        buchberger_with(i, &self.order, GbConfig::with_budget(self.budget)).map_err(err)
    }
}

#[pymethods]
impl Ideal {
    /// Builds a named ideal: `nullcone`, `yz`, `voc` (with r, s), `alpha`
    /// or `m-bracket`.
    #[new]
    #[pyo3(signature = (shape, t, n, m=None, ideal="nullcone", r=0, s=0, field="fp", p=2, budget=10_000_000))]
    #[allow(clippy::too_many_arguments)]
    fn new(
        shape: &str,
        t: usize,
        n: usize,
        m: Option<usize>,
        ideal: &str,
        r: usize,
        s: usize,
        field: &str,
        p: u32,
        budget: u64,
    ) -> PyResult<Self> {
        let shape = shape_of(shape, m, t, n)?;
        let order = BlockOrder::for_shape(shape).map_err(err)?;
        let inner = match field {
            "fp" => Any::Fp(build(PrimeField::new(p).map_err(err)?, shape, ideal, r, s, p).map_err(err)?),
            "qq" => Any::Qq(build(Rationals, shape, ideal, r, s, p).map_err(err)?),
            other => return Err(PyValueError::new_err(format!("unknown field {other:?}; use 'fp' or 'qq'"))),
        };
        Ok(Ideal { inner, order, budget })
    }

    /// An ideal from generator strings such as `"y[1,1]*y[2,2]+-1*y[1,2]*y[2,1]"`.
    #[staticmethod]
    #[pyo3(signature = (shape, t, n, generators, m=None, field="fp", p=2, budget=10_000_000))]
    #[allow(clippy::too_many_arguments)]
    fn from_generators(
        shape: &str,
        t: usize,
        n: usize,
        generators: Vec<String>,
        m: Option<usize>,
        field: &str,
        p: u32,
        budget: u64,
    ) -> PyResult<Self> {
        let shape = shape_of(shape, m, t, n)?;
        let order = BlockOrder::for_shape(shape).map_err(err)?;
        let inner = match field {
            "fp" => Any::Fp(parse_all(&Ring::new(PrimeField::new(p).map_err(err)?, shape).map_err(err)?, &generators).map_err(err)?),
            "qq" => Any::Qq(parse_all(&Ring::new(Rationals, shape).map_err(err)?, &generators).map_err(err)?),
            other => return Err(PyValueError::new_err(format!("unknown field {other:?}"))),
        };
        Ok(Ideal { inner, order, budget })
    }

    fn generators(&self) -> Vec<String> {
        each!(&self.inner, i => i.gens.iter().map(|g| g.to_text(&self.order)).collect())
    }

    /// The reduced Gröbner basis under the block order.
    fn groebner_basis(&self) -> PyResult<Vec<String>> {
        each!(&self.inner, i => Ok(self.basis(i)?.basis().iter().map(|g| g.to_text(&self.order)).collect()))
    }

    /// Minimal generators of the initial ideal.
    fn initial_terms(&self) -> PyResult<Vec<String>> {
        each!(&self.inner, i => Ok(initial_ideal(&self.basis(i)?).gens.iter().map(|g| g.to_text(&self.order)).collect()))
    }

    fn contains(&self, poly: &str) -> PyResult<bool> {
        each!(&self.inner, i => {
            let f = Polynomial::parse(&i.ring, poly).map_err(err)?;
            self.basis(i)?.is_member(&f).map_err(err)
        })
    }

    fn normal_form(&self, poly: &str) -> PyResult<String> {
        each!(&self.inner, i => {
            let f = Polynomial::parse(&i.ring, poly).map_err(err)?;
            Ok(self.basis(i)?.normal_form(&f).map_err(err)?.to_text(&self.order))
        })
    }

    /// Height, read off the initial ideal by a minimum vertex cover.
    fn height(&self) -> PyResult<usize> {
        each!(&self.inner, i => monomial_height(&initial_ideal(&self.basis(i)?)).map_err(err))
    }

    fn has_squarefree_initial_ideal(&self) -> PyResult<bool> {
        each!(&self.inner, i => Ok(self.basis(i)?.lead_monomials().iter().all(|m| m.is_squarefree())))
    }

    fn __len__(&self) -> usize {
        each!(&self.inner, i => i.len())
    }

    fn __repr__(&self) -> String {
        each!(&self.inner, i => format!("Ideal({}, {}, {} over {})", i.label, i.ring.shape(), i.len(), i.ring.field().spec()))
    }
}

fn run_report(py: Python<'_>, command: &str, target: &str, kwargs: Option<&Bound<'_, PyDict>>) -> PyResult<Py<PyAny>> {
    let json = py.import("json")?;
    let mut cfg = serde_json::json!({ "command": command, "target": target });
    let defaults = serde_json::to_value(RunConfig::new(report::Command::Suite(report::SuiteName::PaperExamples)))
        .expect("config serializes");
    let obj = cfg.as_object_mut().expect("object");
    for (k, v) in defaults.as_object().expect("object") {
        if k != "command" && k != "target" {
            obj.insert(k.clone(), v.clone());
        }
    }
    if let Some(kw) = kwargs {
        let text: String = json.call_method1("dumps", (kw,))?.extract()?;
        let extra: serde_json::Value = serde_json::from_str(&text).map_err(|e| PyValueError::new_err(e.to_string()))?;
        for (k, v) in extra.as_object().expect("kwargs are a dict") {
            obj.insert(k.clone(), v.clone());
        }
    }
    let config: RunConfig = serde_json::from_value(cfg).map_err(|e| PyValueError::new_err(e.to_string()))?;
    let rep = py.detach(|| report::run(&config)).map_err(err)?;
    Ok(json.call_method1("loads", (rep.to_json(),))?.unbind())
}

/// Runs a named check; keyword arguments mirror the CLI flags.
#[pyfunction]
#[pyo3(signature = (name, **kwargs))]
fn check(py: Python<'_>, name: &str, kwargs: Option<&Bound<'_, PyDict>>) -> PyResult<Py<PyAny>> {
    run_report(py, "check", name, kwargs)
}

#[pyfunction]
#[pyo3(signature = (name, **kwargs))]
fn suite(py: Python<'_>, name: &str, kwargs: Option<&Bound<'_, PyDict>>) -> PyResult<Py<PyAny>> {
    run_report(py, "suite", name, kwargs)
}

#[pyfunction]
#[pyo3(signature = (object, **kwargs))]
fn show(py: Python<'_>, object: &str, kwargs: Option<&Bound<'_, PyDict>>) -> PyResult<Py<PyAny>> {
    run_report(py, "show", object, kwargs)
}

#[pymodule]
fn nullcone_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", report::VERSION)?;
    m.add("BudgetExceeded", m.py().get_type::<BudgetExceeded>())?;
    m.add_class::<Ideal>()?;
    m.add_function(wrap_pyfunction!(symplectic_block_matrix, m)?)?;
    m.add_function(wrap_pyfunction!(gl_block_matrices, m)?)?;
    m.add_function(wrap_pyfunction!(check, m)?)?;
    m.add_function(wrap_pyfunction!(suite, m)?)?;
    m.add_function(wrap_pyfunction!(show, m)?)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn module_runs_under_embedded_python() {
        Python::initialize();
        Python::attach(|py| {
            let m = PyModule::new(py, "nullcone_py").unwrap();
            nullcone_py(&m).unwrap();
            let ideal = Ideal::new("symplectic", 1, 3, None, "nullcone", 0, 0, "qq", 2, 1_000_000).unwrap();
            assert_eq!(ideal.__len__(), 3);
            assert!(ideal.has_squarefree_initial_ideal().unwrap());
            assert_eq!(ideal.height().unwrap(), 2);
            let rep = check(py, "lemma33", Some(&[("t", 2), ("n", 4)].into_py_dict(py).unwrap())).unwrap();
            let passed: usize = rep.bind(py).get_item("summary").unwrap().get_item("pass").unwrap().extract().unwrap();
            assert_eq!(passed, 1);
        });
    }

    #[test]
    fn bad_names_are_value_errors() {
        Python::initialize();
        Python::attach(|py| {
            let e = suite(py, "nope", None).unwrap_err();
            assert!(e.is_instance_of::<PyValueError>(py));
            assert!(Ideal::new("torus", 1, 1, None, "nullcone", 0, 0, "fp", 2, 10).is_err());
        });
    }

    use pyo3::types::IntoPyDict;
}
