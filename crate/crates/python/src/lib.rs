//! PyO3 bindings exposing the algebra model, identity suites and twisting
//! constructions to Python.
//!
//! Algebras cross the boundary as the same JSON documents the CLI uses;
//! matrices as row-major lists of rational strings (plain ints also
//! accepted); reports as a small wrapper with text and JSON renderings.
//!
//!     import homly
//!     so3 = homly.Algebra.from_json(open("catalog/so3.json").read())
//!     assert so3.verify("hom-malcev").passed
//!     twisted = so3.twist(so3.permutation_endomorphisms()[1], mode="cor33")
//!     assert twisted.verify("hom-ly").passed

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use homly_cli::{emit_algebra, parse_algebra, render_report_json, render_report_text};
use homly_core::algebra::{algebras_equal, random_algebra, RandomOptions};
use homly_core::construct;
use homly_core::linalg::{LinearMap, Vector};
use homly_core::morphism::{filter_endomorphisms, is_endomorphism, permutation_candidates};
use homly_core::rational::Rational;
use homly_core::report::{CheckOptions, CheckReport};
use homly_core::suites::{run_suite, B6Mode};

/// Rational scalars arrive as strings ("1/2") or plain integers.
#[derive(FromPyObject)]
enum Scalar {
    Int(i64),
    Text(String),
}

impl Scalar {
    fn to_rational(&self) -> PyResult<Rational> {
        match self {
            Scalar::Int(n) => Ok(Rational::from(*n)),
            Scalar::Text(s) => s
                .parse()
                .map_err(|e| PyValueError::new_err(format!("bad rational {s:?}: {e}"))),
        }
    }
}

fn to_vector(coords: Vec<Scalar>) -> PyResult<Vector> {
    let coords = coords
        .iter()
        .map(Scalar::to_rational)
        .collect::<PyResult<Vec<_>>>()?;
    Ok(Vector::from_coords(coords))
}

fn to_map(rows: Vec<Vec<Scalar>>) -> PyResult<LinearMap> {
    let dim = rows.len();
    let mut m = LinearMap::zeros(dim);
    for (r, row) in rows.iter().enumerate() {
        if row.len() != dim {
            return Err(PyValueError::new_err("matrix must be square"));
        }
        for (c, cell) in row.iter().enumerate() {
            m.set_entry(r, c, cell.to_rational()?);
        }
    }
    Ok(m)
}

fn matrix_rows(m: &LinearMap) -> Vec<Vec<String>> {
    (0..m.dim())
        .map(|r| (0..m.dim()).map(|c| m.entry(r, c).to_string()).collect())
        .collect()
}

fn vector_strings(v: &Vector) -> Vec<String> {
    v.coords().iter().map(|c| c.to_string()).collect()
}

fn value_err<E: std::fmt::Display>(e: E) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn b6_mode(name: &str) -> PyResult<B6Mode> {
    match name {
        "strict" => Ok(B6Mode::Strict),
        "printed" => Ok(B6Mode::Printed),
        other => Err(PyValueError::new_err(format!(
            "b6 must be \"strict\" or \"printed\", not {other:?}"
        ))),
    }
}

/// Verdicts of one identity suite.
#[pyclass(frozen)]
struct Report {
    inner: CheckReport,
}

#[pymethods]
impl Report {
    #[getter]
    fn suite_id(&self) -> String {
        self.inner.suite_id.clone()
    }

    #[getter]
    fn passed(&self) -> bool {
        self.inner.passed
    }

    #[getter]
    fn checked_tuples(&self) -> u64 {
        self.inner.checked_tuples
    }

    /// Identifiers of the failing axioms, in suite order.
    fn failures(&self) -> Vec<String> {
        self.inner
            .axiom_verdicts
            .iter()
            .filter(|v| !v.passed)
            .map(|v| v.axiom_id.clone())
            .collect()
    }

    fn axiom_passed(&self, axiom_id: &str) -> Option<bool> {
        self.inner.axiom(axiom_id).map(|v| v.passed)
    }

    /// Human-readable rendering, identical to the CLI text format.
    fn text(&self) -> String {
        render_report_text(&self.inner)
    }

    /// Machine-readable rendering, identical to the CLI JSON format.
    fn to_json(&self) -> String {
        render_report_json(&self.inner)
    }

    fn __str__(&self) -> String {
        self.text()
    }

    fn __repr__(&self) -> String {
        format!(
            "Report(suite_id={:?}, passed={})",
            self.inner.suite_id, self.inner.passed
        )
    }
}

/// A binary-ternary Hom-algebra presented by rational structure constants.
#[pyclass(frozen)]
struct Algebra {
    inner: homly_core::algebra::Algebra,
}

#[pymethods]
impl Algebra {
    /// Parses the JSON document format shared with the CLI.
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(Algebra {
            inner: parse_algebra(text).map_err(value_err)?,
        })
    }

    /// Deterministic seeded random algebra (structure constants in [-3, 3]).
    #[staticmethod]
    #[pyo3(signature = (dim, seed, skew=false, ternary=false, random_alpha=false))]
    fn random(dim: usize, seed: u64, skew: bool, ternary: bool, random_alpha: bool) -> Self {
        Algebra {
            inner: random_algebra(
                dim,
                seed,
                RandomOptions {
                    skew_binary: skew,
                    with_ternary: ternary,
                    random_alpha,
                },
            ),
        }
    }

    fn to_json(&self) -> String {
        emit_algebra(&self.inner)
    }

    #[getter]
    fn name(&self) -> String {
        self.inner.name().to_string()
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    #[getter]
    fn basis(&self) -> Vec<String> {
        self.inner.basis().to_vec()
    }

    /// The twisting map as a row-major matrix of rational strings.
    #[getter]
    fn alpha(&self) -> Vec<Vec<String>> {
        matrix_rows(self.inner.alpha())
    }

    fn has_binary(&self) -> bool {
        self.inner.binary().is_some()
    }

    fn has_ternary(&self) -> bool {
        self.inner.ternary().is_some()
    }

    /// Runs an identity suite; see the CLI for the list of suite ids.
    #[pyo3(signature = (suite, b6="strict", max_counterexamples=5))]
    fn verify(&self, suite: &str, b6: &str, max_counterexamples: usize) -> PyResult<Report> {
        let opts = CheckOptions {
            max_counterexamples,
        };
        let report = run_suite(&self.inner, suite, b6_mode(b6)?, &opts).map_err(value_err)?;
        Ok(Report { inner: report })
    }

    /// Builds a derived algebra: prop24, cor33, eq41, lie-ly or j-alpha.
    fn derive(&self, construction: &str) -> PyResult<Self> {
        let a = &self.inner;
        let inner = match construction {
            "prop24" => construct::triple_system_from_product(a).map_err(value_err)?,
            "cor33" => construct::twist_malcev(a, &LinearMap::identity(a.dim()))
                .map_err(value_err)?
                .with_name(format!("{}-derived-ly", a.name())),
            "eq41" => {
                let ternary = construct::twisted_derived_ternary(a).map_err(value_err)?;
                homly_core::algebra::Algebra::new(
                    format!("{}-derived-homly", a.name()),
                    a.dim(),
                    a.binary().cloned(),
                    Some(ternary),
                )
                .and_then(|alg| alg.with_basis(a.basis().to_vec()))
                .and_then(|alg| alg.with_alpha(a.alpha().clone()))
                .map_err(value_err)?
            }
            "lie-ly" => construct::lie_to_ly(a).map_err(value_err)?,
            "j-alpha" => {
                let ternary = construct::hom_jacobian(a).map_err(value_err)?;
                homly_core::algebra::Algebra::new(
                    format!("{}-jacobian", a.name()),
                    a.dim(),
                    None,
                    Some(ternary),
                )
                .and_then(|alg| alg.with_basis(a.basis().to_vec()))
                .and_then(|alg| alg.with_alpha(a.alpha().clone()))
                .map_err(value_err)?
            }
            other => {
                return Err(PyValueError::new_err(format!(
                    "unknown construction {other:?}"
                )))
            }
        };
        Ok(Algebra { inner })
    }

    /// Twists along an endomorphism; mode is thm31, cor32 or cor33.
    #[pyo3(signature = (matrix, mode="thm31"))]
    fn twist(&self, matrix: Vec<Vec<Scalar>>, mode: &str) -> PyResult<Self> {
        let beta = to_map(matrix)?;
        let inner = match mode {
            "thm31" => construct::yau_twist(&self.inner, &beta),
            "cor32" => construct::twist_ly(&self.inner, &beta),
            "cor33" => construct::twist_malcev(&self.inner, &beta),
            other => return Err(PyValueError::new_err(format!("unknown mode {other:?}"))),
        }
        .map_err(value_err)?;
        Ok(Algebra { inner })
    }

    /// Attaches the twisted derived ternary and reports the twisted
    /// Lie-Yamaguti verdicts; the input must pass the twisted Malcev check.
    fn probe(&self) -> PyResult<Report> {
        let report = construct::probe_hom_ly_from_hom_malcev(&self.inner, &CheckOptions::default())
            .map_err(value_err)?;
        Ok(Report { inner: report })
    }

    fn is_multiplicative(&self) -> bool {
        self.inner
            .is_multiplicative(&CheckOptions::default())
            .passed
    }

    fn is_endomorphism(&self, matrix: Vec<Vec<Scalar>>) -> PyResult<bool> {
        let beta = to_map(matrix)?;
        Ok(
            is_endomorphism(&self.inner, &beta, &CheckOptions::default())
                .map_err(value_err)?
                .passed,
        )
    }

    /// Permutation matrices (optionally signed) that are endomorphisms of
    /// this algebra, as row-major rational-string matrices.
    #[pyo3(signature = (signed=false, commute=false))]
    fn permutation_endomorphisms(
        &self,
        signed: bool,
        commute: bool,
    ) -> PyResult<Vec<Vec<Vec<String>>>> {
        let cands = permutation_candidates(self.inner.dim(), signed, None).map_err(value_err)?;
        let kept = filter_endomorphisms(&self.inner, &cands, commute).map_err(value_err)?;
        Ok(kept.maps().iter().map(matrix_rows).collect())
    }

    /// Bilinear product of two coordinate vectors.
    fn eval_binary(&self, x: Vec<Scalar>, y: Vec<Scalar>) -> PyResult<Vec<String>> {
        let out = self
            .inner
            .eval_binary(&to_vector(x)?, &to_vector(y)?)
            .map_err(value_err)?;
        Ok(vector_strings(&out))
    }

    /// Trilinear product of three coordinate vectors.
    fn eval_ternary(
        &self,
        x: Vec<Scalar>,
        y: Vec<Scalar>,
        z: Vec<Scalar>,
    ) -> PyResult<Vec<String>> {
        let out = self
            .inner
            .eval_ternary(&to_vector(x)?, &to_vector(y)?, &to_vector(z)?)
            .map_err(value_err)?;
        Ok(vector_strings(&out))
    }

    fn equals(&self, other: &Algebra) -> bool {
        algebras_equal(&self.inner, &other.inner)
    }

    fn __repr__(&self) -> String {
        format!(
            "Algebra(name={:?}, dim={}, binary={}, ternary={})",
            self.inner.name(),
            self.inner.dim(),
            self.inner.binary().is_some(),
            self.inner.ternary().is_some(),
        )
    }
}

#[pymodule]
fn homly(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add_class::<Algebra>()?;
    m.add_class::<Report>()?;
    Ok(())
}
