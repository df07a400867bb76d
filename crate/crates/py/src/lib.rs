//! Python bindings. Rationals cross the boundary as `"p/q"` strings and
//! errors are raised as `ValueError("<Code>: <detail>")`, matching the codes
//! printed by the command line tool.

use std::collections::BTreeMap;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use pseudohiggs::cohomology::{self, Cochain2, FiniteAbelianGroup, ScaleBounds};
use pseudohiggs::lie::{self, Mask};
use pseudohiggs::local::{self, Variable};
use pseudohiggs::moduli::{self, CoveringData, FlagDegreeData, GradedPiece};
use pseudohiggs::pseudorep::{self, CyclotomicMatrix, MatrixModel, PseudoRep};
use pseudohiggs::scalars::{Cyclotomic, Rational};

fn fail(code: &str, detail: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(format!("{code}: {detail}"))
}

trait Coded {
    fn code(&self) -> &'static str;
}

macro_rules! coded {
    ($($t:ty),*) => {$(
        impl Coded for $t {
            fn code(&self) -> &'static str {
                <$t>::code(self)
            }
        }
    )*};
}

coded!(
    pseudohiggs::scalars::ScalarError,
    cohomology::CohomologyError,
    pseudorep::PseudoRepError,
    lie::LieError,
    local::LocalError,
    moduli::ModuliError
);

fn py<T, E: Coded + std::fmt::Display>(r: Result<T, E>) -> PyResult<T> {
    r.map_err(|e| fail(e.code(), &e))
}

fn rational(s: &str) -> PyResult<Rational> {
    py(s.parse::<Rational>())
}

fn rationals(v: &[String]) -> PyResult<Vec<Rational>> {
    v.iter().map(|s| rational(s)).collect()
}

fn strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

/// A matrix entry: either `"p/q"` or the JSON form `{"order": M, "coeffs": [...]}`.
fn cyclotomic(s: &str) -> PyResult<Cyclotomic> {
    let text = s.trim();
    if text.starts_with('{') {
        serde_json::from_str(text).map_err(|e| fail("MalformedInput", e))
    } else {
        Ok(Cyclotomic::from_rational(rational(text)?, 1))
    }
}

fn mask_rows(m: &Mask) -> Vec<Vec<bool>> {
    (0..m.size())
        .map(|i| (0..m.size()).map(|j| m.get(i, j)).collect())
        .collect()
}

#[pyclass(name = "GroupModel", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyGroupModel {
    inner: lie::GroupModel,
}

#[pymethods]
impl PyGroupModel {
    #[staticmethod]
    fn gl(r: usize) -> PyResult<Self> {
        Ok(PyGroupModel {
            inner: py(lie::GroupModel::ComplexGl(r).validate())?,
        })
    }

    #[staticmethod]
    fn sl(r: usize) -> PyResult<Self> {
        Ok(PyGroupModel {
            inner: py(lie::GroupModel::ComplexSl(r).validate())?,
        })
    }

    #[staticmethod]
    fn upq(p: usize, q: usize) -> PyResult<Self> {
        Ok(PyGroupModel {
            inner: py(lie::GroupModel::Upq(p, q).validate())?,
        })
    }

    #[getter]
    fn size(&self) -> usize {
        self.inner.size()
    }

    #[getter]
    fn dim_m(&self) -> usize {
        self.inner.dim_m()
    }

    fn __repr__(&self) -> String {
        format!("GroupModel({})", self.inner.label())
    }
}

/// A normalized 2-cochain on a finite abelian group with values in ℤ/m.
#[pyclass(name = "Cocycle", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyCocycle {
    inner: Cochain2,
}

#[pymethods]
impl PyCocycle {
    #[new]
    fn new(factors: Vec<u64>, coeff_order: u64, table: Vec<u64>) -> PyResult<Self> {
        let group = py(FiniteAbelianGroup::new(factors))?;
        Ok(PyCocycle {
            inner: py(Cochain2::new(group, coeff_order, table))?,
        })
    }

    #[staticmethod]
    fn cyclic_standard(n: u64, coeff_order: u64, w: u64) -> Self {
        PyCocycle {
            inner: Cochain2::cyclic_standard(n, coeff_order, w),
        }
    }

    /// One representative per class of H²(Γ, ℤ/m).
    #[staticmethod]
    fn h2_classes(factors: Vec<u64>, coeff_order: u64) -> PyResult<Vec<PyCocycle>> {
        let group = py(FiniteAbelianGroup::new(factors))?;
        let reps = py(cohomology::h2_classes(
            &group,
            coeff_order,
            &ScaleBounds::default(),
        ))?;
        Ok(reps.into_iter().map(|inner| PyCocycle { inner }).collect())
    }

    #[getter]
    fn table(&self) -> Vec<u64> {
        self.inner.table().to_vec()
    }

    #[getter]
    fn coeff_order(&self) -> u64 {
        self.inner.coeff_order()
    }

    fn is_cocycle(&self) -> bool {
        self.inner.is_cocycle()
    }

    /// Exponent k with ζ(γ) = e^{2πik/m}.
    fn zeta(&self, gamma: usize) -> PyResult<u64> {
        if gamma >= self.inner.group().order() {
            return Err(fail(
                "InvalidGroup",
                format!("element {gamma} out of range"),
            ));
        }
        Ok(cohomology::zeta(&self.inner, gamma))
    }

    fn class_representative(&self) -> PyResult<PyCocycle> {
        Ok(PyCocycle {
            inner: py(cohomology::class_representative(
                &self.inner,
                &ScaleBounds::default(),
            ))?,
        })
    }

    fn is_cohomologous(&self, other: &PyCocycle) -> PyResult<bool> {
        Ok(py(cohomology::are_cohomologous(
            &self.inner,
            &other.inner,
            &ScaleBounds::default(),
        ))?
        .is_some())
    }

    /// Order of the central extension; raises when the cochain is not a cocycle.
    fn extension_order(&self) -> PyResult<usize> {
        Ok(py(cohomology::central_extension(&self.inner))?.order())
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&self.inner).expect("cochains serialize")
    }

    fn __repr__(&self) -> String {
        format!(
            "Cocycle({:?}, m={}, {:?})",
            self.inner.group().factors(),
            self.inner.coeff_order(),
            self.inner.table()
        )
    }
}

/// Class of σ on ℤ/n built from the generator image: `(zeta, exponents)`
/// with σ(γ)ⁿ = e^{2πi·zeta}.
#[pyfunction]
fn classify_generator(
    cocycle: &PyCocycle,
    rows: Vec<Vec<String>>,
) -> PyResult<(String, Vec<String>)> {
    let rows = rows
        .iter()
        .map(|r| {
            r.iter()
                .map(|s| cyclotomic(s))
                .collect::<PyResult<Vec<_>>>()
        })
        .collect::<PyResult<Vec<_>>>()?;
    let generator = py(CyclotomicMatrix::from_rows(rows))?;
    let sigma = py(PseudoRep::from_generator(cocycle.inner.clone(), generator))?;
    let cls = py(pseudorep::classify(&sigma))?;
    Ok((cls.zeta.to_string(), strings(&cls.exponents)))
}

#[pyfunction]
#[pyo3(signature = (n, r, zeta, special = false))]
fn enumerate_classes(n: u64, r: usize, zeta: &str, special: bool) -> PyResult<Vec<Vec<String>>> {
    let model = if special {
        MatrixModel::Sl
    } else {
        MatrixModel::Gl
    };
    let classes = py(pseudorep::enumerate_classes(n, r, &rational(zeta)?, model))?;
    Ok(classes.iter().map(|c| strings(&c.exponents)).collect())
}

/// Alcove representative of `e^{2πiα}`.
#[pyclass(name = "WeightVector", frozen)]
struct PyWeightVector {
    inner: lie::WeightVector,
}

#[pymethods]
impl PyWeightVector {
    #[staticmethod]
    fn normalize(model: &PyGroupModel, exponents: Vec<String>) -> PyResult<Self> {
        Ok(PyWeightVector {
            inner: py(lie::alcove_normalize(model.inner, &rationals(&exponents)?))?,
        })
    }

    #[getter]
    fn entries(&self) -> Vec<String> {
        strings(&self.inner.entries)
    }

    #[getter]
    fn shift(&self) -> i64 {
        self.inner.shift
    }

    fn is_interior(&self) -> bool {
        self.inner.is_interior()
    }

    fn order(&self) -> u64 {
        self.inner.order()
    }

    /// `(β, dim)` for each eigenspace of Ad(e^{2πiα}) on 𝔪^ℂ, increasing β.
    fn eigenspaces(&self) -> PyResult<Vec<(String, usize)>> {
        let spaces = py(lie::isotropy_eigenspaces(&self.inner))?;
        Ok(spaces
            .into_iter()
            .map(|e| (e.beta.to_string(), e.dim))
            .collect())
    }

    fn __repr__(&self) -> String {
        format!(
            "WeightVector({}, {:?})",
            self.inner.model.label(),
            self.entries()
        )
    }
}

/// Masks of 𝔭_s, 𝔩_s, 𝔪_s and 𝔪_s⁰ as boolean matrices.
#[pyfunction]
fn parabolic(model: &PyGroupModel, s: Vec<String>) -> PyResult<BTreeMap<String, Vec<Vec<bool>>>> {
    let data = py(lie::parabolic_from_s(model.inner, &rationals(&s)?))?;
    if let Some(f) = data.verify().first() {
        return Err(fail("Inconsistent", format!("{} fails", f.property)));
    }
    Ok(BTreeMap::from([
        ("p".to_string(), mask_rows(&data.p)),
        ("l".to_string(), mask_rows(&data.l)),
        ("m_s".to_string(), mask_rows(&data.m_s)),
        ("m0_s".to_string(), mask_rows(&data.m0_s)),
    ]))
}

/// A truncated graded Laurent series; built from and printed as the same
/// JSON the command line tool uses.
#[pyclass(name = "GradedSeries", frozen)]
struct PyGradedSeries {
    inner: local::GradedSeries,
}

#[pymethods]
impl PyGradedSeries {
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let inner = serde_json::from_str(text).map_err(|e| fail("MalformedInput", e))?;
        Ok(PyGradedSeries { inner })
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&self.inner).expect("series serialize")
    }

    #[getter]
    fn variable(&self) -> &'static str {
        match self.inner.variable() {
            Variable::Upstairs => "z",
            Variable::Downstairs => "w",
        }
    }

    #[getter]
    fn trunc(&self) -> i64 {
        self.inner.trunc()
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    #[pyo3(signature = (twist = None))]
    fn is_invariant(&self, twist: Option<&str>) -> PyResult<bool> {
        let twist = twist.map(rational).transpose()?;
        Ok(py(local::check_invariance(&self.inner, twist.as_ref()))?.invariant)
    }

    /// `(downstairs series, residue report as JSON)`.
    fn descend(&self) -> PyResult<(PyGradedSeries, String)> {
        let (inner, report) = py(local::descend(&self.inner))?;
        Ok((
            PyGradedSeries { inner },
            serde_json::to_string(&report).expect("report serializes"),
        ))
    }

    fn ascend(&self) -> PyResult<PyGradedSeries> {
        Ok(PyGradedSeries {
            inner: py(local::ascend(&self.inner))?,
        })
    }

    /// Equality on the exponents known to both series.
    fn agrees_with(&self, other: &PyGradedSeries) -> bool {
        self.inner.agrees_with(&other.inner)
    }
}

#[pyfunction]
fn riemann_hurwitz(genus_x: i64, n: u64, orbits: Vec<u64>) -> PyResult<i64> {
    let data = CoveringData {
        genus_x,
        group_order: n,
        orbits,
    };
    Ok(py(moduli::riemann_hurwitz(&data))?.genus_y)
}

/// `(scaling_ok, integral)`.
#[pyfunction]
fn degree_scaling_check(par_deg_y: &str, n: u64, claimed_deg_x: &str) -> PyResult<(bool, bool)> {
    let v = py(moduli::degree_scaling_check(
        &rational(par_deg_y)?,
        n,
        &rational(claimed_deg_x)?,
    ))?;
    Ok((v.scaling_ok, v.integral))
}

#[pyfunction]
#[pyo3(signature = (s, pieces, corrections = Vec::new()))]
fn degree_pairing(
    s: Vec<String>,
    pieces: Vec<(usize, i64)>,
    corrections: Vec<String>,
) -> PyResult<String> {
    let flag = FlagDegreeData {
        s: rationals(&s)?,
        pieces: pieces
            .into_iter()
            .map(|(rank, degree)| GradedPiece { rank, degree })
            .collect(),
        corrections: rationals(&corrections)?,
    };
    Ok(py(moduli::degree_pairing(&flag))?.to_string())
}

#[pyfunction]
fn strata_count(
    genus_x: i64,
    n: u64,
    orbits: Vec<u64>,
    center_order: u64,
    model: &PyGroupModel,
) -> PyResult<usize> {
    let data = CoveringData {
        genus_x,
        group_order: n,
        orbits,
    };
    Ok(py(moduli::enumerate_strata(
        &data,
        center_order,
        model.inner,
        &ScaleBounds::default(),
    ))?
    .count)
}

/// Runs one command line invocation in process: `(exit code, stdout)`.
#[pyfunction]
#[pyo3(signature = (args, input, max_search_env = None))]
fn run_cli(args: Vec<String>, input: String, max_search_env: Option<String>) -> (i32, String) {
    let mut argv = vec!["pseudohiggs".to_string()];
    argv.extend(args);
    let out = pseudohiggs::cli::run_with(&argv, max_search_env.as_deref(), Some(input));
    (out.code, out.stdout)
}

#[pymodule]
#[pyo3(name = "pseudohiggs")]
fn pseudohiggs_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGroupModel>()?;
    m.add_class::<PyCocycle>()?;
    m.add_class::<PyWeightVector>()?;
    m.add_class::<PyGradedSeries>()?;
    m.add_function(wrap_pyfunction!(classify_generator, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_classes, m)?)?;
    m.add_function(wrap_pyfunction!(parabolic, m)?)?;
    m.add_function(wrap_pyfunction!(riemann_hurwitz, m)?)?;
    m.add_function(wrap_pyfunction!(degree_scaling_check, m)?)?;
    m.add_function(wrap_pyfunction!(degree_pairing, m)?)?;
    m.add_function(wrap_pyfunction!(strata_count, m)?)?;
    m.add_function(wrap_pyfunction!(run_cli, m)?)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn entries_parse_in_both_forms() {
        assert_eq!(
            cyclotomic("1/2").unwrap(),
            Cyclotomic::from_rational(Rational::new(1, 2), 1)
        );
        let z = cyclotomic(r#"{"order": 4, "coeffs": ["0", "1"]}"#).unwrap();
        assert_eq!(z, Cyclotomic::zeta_power(1, 4));
    }

    #[test]
    fn cli_runs_in_process() {
        let (code, out) = run_cli(
            vec!["moduli".into(), "scale".into(), "-".into()],
            r#"{"par_deg_y": "1/2", "N": 2, "claimed_deg_x": "1"}"#.into(),
            None,
        );
        assert_eq!(code, 0, "{out}");
        assert!(out.contains("\"scaling_ok\": true"));
    }
}
