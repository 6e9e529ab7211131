//! Python bindings for `ptqm`.
//!
//! States are sequences of two complex numbers, matrices are 2×2 nested lists.

use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use ptqm::algebra::c;
use ptqm::brachistochrone::{compare_at, DEFAULT_SWEEP_ALPHA_MAX, DEFAULT_SWEEP_ALPHA_MIN, DEFAULT_SWEEP_STEPS};
use ptqm::hamiltonian::PHASE_TOL;
use ptqm::{CMat2, CScalar, CVec2, EvolutionConfig, PairingKind, PtError};

create_exception!(pyptqm, PTError, PyValueError, "Base class for ptqm errors.");
create_exception!(pyptqm, BrokenPhaseError, PTError);
create_exception!(pyptqm, ExceptionalPointError, PTError);

fn to_py(e: PtError) -> PyErr {
    let msg = e.to_string();
    match e {
        PtError::BrokenPhase { .. } => BrokenPhaseError::new_err(msg),
        PtError::ExceptionalPoint { .. } => ExceptionalPointError::new_err(msg),
        _ => PTError::new_err(msg),
    }
}

trait IntoPy<T> {
    fn py_err(self) -> PyResult<T>;
}

impl<T> IntoPy<T> for ptqm::Result<T> {
    fn py_err(self) -> PyResult<T> {
        self.map_err(to_py)
    }
}

type Matrix = [[CScalar; 2]; 2];

fn mat_out(m: &CMat2) -> Matrix {
    m.to_rows()
}

fn vec_in(v: [CScalar; 2]) -> CVec2 {
    CVec2::new(v[0], v[1])
}

fn vec_out(v: &CVec2) -> [CScalar; 2] {
    [v.c0, v.c1]
}

fn config(hbar: f64, tol: f64) -> PyResult<EvolutionConfig> {
    EvolutionConfig::new(hbar, tol).py_err()
}

fn pairing_kind(kind: &str) -> PyResult<PairingKind> {
    match kind.to_ascii_lowercase().as_str() {
        "dirac" => Ok(PairingKind::Dirac),
        "pt" => Ok(PairingKind::PT),
        "cpt" => Ok(PairingKind::CPT),
        other => Err(PyValueError::new_err(format!("unknown pairing {other:?}"))),
    }
}

/// Parameters `(r, s, ψ)` of `H = [[r e^{iψ}, s], [s, r e^{-iψ}]]`.
#[pyclass(name = "PTParams", frozen, from_py_object)]
#[derive(Clone, Copy)]
struct PyPTParams(ptqm::PTParams);

#[pymethods]
impl PyPTParams {
    #[new]
    fn new(r: f64, s: f64, psi: f64) -> PyResult<Self> {
        Ok(Self(ptqm::PTParams::new(r, s, psi).py_err()?))
    }

    /// Parameters with the given mixing angle α.
    #[staticmethod]
    #[pyo3(signature = (alpha, s = 1.0))]
    fn with_alpha(alpha: f64, s: f64) -> PyResult<Self> {
        Ok(Self(ptqm::PTParams::with_alpha(alpha, s).py_err()?))
    }

    #[getter]
    fn r(&self) -> f64 {
        self.0.r
    }

    #[getter]
    fn s(&self) -> f64 {
        self.0.s
    }

    #[getter]
    fn psi(&self) -> f64 {
        self.0.psi
    }

    fn discriminant(&self) -> f64 {
        self.0.discriminant()
    }

    #[pyo3(signature = (tol = PHASE_TOL))]
    fn phase(&self, tol: f64) -> &'static str {
        ptqm::classify_phase(&self.0, tol).as_str()
    }

    fn matrix(&self) -> Matrix {
        mat_out(&ptqm::build_pt_matrix(&self.0))
    }

    fn derive(&self) -> PyResult<PyPTDerived> {
        Ok(PyPTDerived(ptqm::derive_pt(&self.0).py_err()?))
    }

    /// CPT-normalized eigenvectors `(ε₊, ε₋)`.
    fn eigenvectors(&self) -> PyResult<([CScalar; 2], [CScalar; 2])> {
        let d = ptqm::derive_pt(&self.0).py_err()?;
        let (ep, em) = ptqm::pt_eigenvectors_normalized(&d).py_err()?;
        Ok((vec_out(&ep), vec_out(&em)))
    }

    fn operators(&self) -> PyResult<PyOperatorSet> {
        Ok(PyOperatorSet(ptqm::operator_set(&self.0).py_err()?))
    }

    fn __repr__(&self) -> String {
        format!("PTParams(r={}, s={}, psi={})", self.0.r, self.0.s, self.0.psi)
    }
}

#[pyclass(name = "PTDerived", frozen)]
struct PyPTDerived(ptqm::PTDerived);

#[pymethods]
impl PyPTDerived {
    #[getter]
    fn alpha(&self) -> f64 {
        self.0.alpha
    }

    #[getter]
    fn omega(&self) -> f64 {
        self.0.omega
    }

    #[getter]
    fn eps_plus(&self) -> f64 {
        self.0.eps_plus
    }

    #[getter]
    fn eps_minus(&self) -> f64 {
        self.0.eps_minus
    }

    #[getter]
    fn phase(&self) -> &'static str {
        self.0.phase.as_str()
    }

    fn __repr__(&self) -> String {
        let d = &self.0;
        format!(
            "PTDerived(alpha={}, omega={}, eps_plus={}, eps_minus={}, phase='{}')",
            d.alpha, d.omega, d.eps_plus, d.eps_minus, d.phase
        )
    }
}

#[pyclass(name = "OperatorSet", frozen)]
struct PyOperatorSet(ptqm::OperatorSet);

#[pymethods]
impl PyOperatorSet {
    #[getter]
    fn p(&self) -> Matrix {
        mat_out(&self.0.p)
    }

    #[getter]
    fn c(&self) -> Matrix {
        mat_out(&self.0.c)
    }

    #[getter]
    fn alpha(&self) -> f64 {
        self.0.alpha
    }

    /// Residual name to value.
    #[getter]
    fn residuals(&self) -> Vec<(&'static str, f64)> {
        let r = self.0.residuals;
        vec![
            ("c_squared", r.c_squared_residual),
            ("ch_commutator", r.ch_commutator_residual),
            ("cpt_commutator", r.cpt_commutator_residual),
            ("completeness", r.completeness_residual),
            ("p_reconstruction", r.p_reconstruction_residual),
        ]
    }

    fn max_residual(&self) -> f64 {
        self.0.residuals.max_residual()
    }
}

#[pyclass(name = "TransitionResult", frozen, get_all)]
struct PyTransition {
    tau: f64,
    beta: f64,
    omega: f64,
    tau_normalized: f64,
}

impl From<ptqm::TransitionResult> for PyTransition {
    fn from(t: ptqm::TransitionResult) -> Self {
        Self { tau: t.tau, beta: t.beta, omega: t.omega, tau_normalized: t.tau_normalized }
    }
}

#[pyclass(name = "SweepRow", frozen, get_all)]
struct PySweepRow {
    alpha: f64,
    tau_star: f64,
    beta_pt: f64,
    omega: f64,
    b_matched: f64,
    t_hermitian: f64,
    beta_h: f64,
    tau_norm_pt: f64,
    tau_norm_h: f64,
}

impl From<ptqm::SweepRow> for PySweepRow {
    fn from(r: ptqm::SweepRow) -> Self {
        Self {
            alpha: r.alpha,
            tau_star: r.tau_star,
            beta_pt: r.beta_pt,
            omega: r.omega,
            b_matched: r.b_matched,
            t_hermitian: r.t_hermitian,
            beta_h: r.beta_h,
            tau_norm_pt: r.tau_norm_pt,
            tau_norm_h: r.tau_norm_h,
        }
    }
}

#[pymethods]
impl PySweepRow {
    fn equivalence_residual(&self) -> f64 {
        (self.tau_norm_pt - self.tau_norm_h).abs()
    }
}

#[pyclass(name = "EvolutionTrace", frozen, get_all)]
struct PyTrace {
    times: Vec<f64>,
    states: Vec<[CScalar; 2]>,
    cpt_norms: Vec<f64>,
    dirac_norms: Vec<f64>,
}

#[pyclass(name = "SuiteResult", frozen, get_all)]
struct PySuite {
    name: &'static str,
    passed: bool,
    worst: f64,
    threshold: f64,
}

#[pyfunction]
fn dirac_product(u: [CScalar; 2], v: [CScalar; 2]) -> CScalar {
    ptqm::dirac_product(&vec_in(u), &vec_in(v))
}

#[pyfunction]
fn pt_product(u: [CScalar; 2], v: [CScalar; 2]) -> CScalar {
    ptqm::pt_product(&vec_in(u), &vec_in(v), &ptqm::parity_matrix())
}

#[pyfunction]
fn cpt_product(u: [CScalar; 2], v: [CScalar; 2], params: PyPTParams) -> PyResult<CScalar> {
    let ops = ptqm::operator_set(&params.0).py_err()?;
    Ok(ptqm::cpt_product(&vec_in(u), &vec_in(v), &ops))
}

#[pyfunction]
fn cpt_normalize(v: [CScalar; 2], params: PyPTParams) -> PyResult<[CScalar; 2]> {
    let ops = ptqm::operator_set(&params.0).py_err()?;
    Ok(vec_out(&ptqm::cpt_normalize(&vec_in(v), &ops).py_err()?))
}

#[pyfunction]
#[pyo3(signature = (u, v, params, kind = "cpt"))]
fn angular_distance(u: [CScalar; 2], v: [CScalar; 2], params: PyPTParams, kind: &str) -> PyResult<f64> {
    let ops = ptqm::operator_set(&params.0).py_err()?;
    ptqm::angular_distance(&vec_in(u), &vec_in(v), &ops, pairing_kind(kind)?).py_err()
}

#[pyfunction]
#[pyo3(signature = (params, t, hbar = 1.0, tol = 1e-12))]
fn propagator_pt(params: PyPTParams, t: f64, hbar: f64, tol: f64) -> PyResult<Matrix> {
    Ok(mat_out(&ptqm::propagator_pt(&params.0, t, &config(hbar, tol)?).py_err()?))
}

/// Propagator of the Hermitian `H = [[s, r e^{iψ}], [r e^{-iψ}, u]]`.
#[pyfunction]
#[pyo3(signature = (s, u, r, psi, t, hbar = 1.0, tol = 1e-12))]
fn propagator_hermitian(s: f64, u: f64, r: f64, psi: f64, t: f64, hbar: f64, tol: f64) -> PyResult<Matrix> {
    let p = ptqm::HermitianParams::new(s, u, r, psi).py_err()?;
    Ok(mat_out(&ptqm::propagator_hermitian(&p, t, &config(hbar, tol)?)))
}

/// Samples the evolution of `state` (default: CPT-normalized `(1, 0)`) on `[0, t_max]`.
#[pyfunction]
#[pyo3(signature = (params, t_max, steps = 101, state = None, hbar = 1.0, tol = 1e-12))]
fn evolve(
    params: PyPTParams,
    t_max: f64,
    steps: usize,
    state: Option<[CScalar; 2]>,
    hbar: f64,
    tol: f64,
) -> PyResult<PyTrace> {
    let cfg = config(hbar, tol)?;
    let v0 = match state {
        Some(v) => vec_in(v),
        None => {
            let ops = ptqm::operator_set(&params.0).py_err()?;
            ptqm::cpt_normalize(&CVec2::new(c(1.0, 0.0), c(0.0, 0.0)), &ops).py_err()?
        }
    };
    let tr = ptqm::trace_evolution(&params.0, &v0, t_max, steps, &cfg).py_err()?;
    Ok(PyTrace {
        states: tr.states.iter().map(vec_out).collect(),
        times: tr.times,
        cpt_norms: tr.cpt_norms,
        dirac_norms: tr.dirac_norms,
    })
}

#[pyfunction]
#[pyo3(signature = (params, hbar = 1.0, tol = 1e-12))]
fn tau_star(params: PyPTParams, hbar: f64, tol: f64) -> PyResult<PyTransition> {
    Ok(ptqm::pt_tau_star(&params.0, &config(hbar, tol)?).py_err()?.into())
}

#[pyfunction]
#[pyo3(signature = (omega_prime, b, hbar = 1.0, tol = 1e-12))]
fn hermitian_transition_time(omega_prime: f64, b: f64, hbar: f64, tol: f64) -> PyResult<PyTransition> {
    Ok(ptqm::hermitian_transition_time(omega_prime, b, &config(hbar, tol)?).py_err()?.into())
}

#[pyfunction]
#[pyo3(signature = (params, hbar = 1.0, tol = 1e-12))]
fn compare(params: PyPTParams, hbar: f64, tol: f64) -> PyResult<PySweepRow> {
    Ok(compare_at(&params.0, &config(hbar, tol)?).py_err()?.into())
}

#[pyfunction]
#[pyo3(signature = (
    alpha_min = DEFAULT_SWEEP_ALPHA_MIN,
    alpha_max = DEFAULT_SWEEP_ALPHA_MAX,
    steps = DEFAULT_SWEEP_STEPS,
    s = 1.0,
    hbar = 1.0,
    tol = 1e-12,
))]
fn sweep(alpha_min: f64, alpha_max: f64, steps: usize, s: f64, hbar: f64, tol: f64) -> PyResult<Vec<PySweepRow>> {
    let rows = ptqm::equivalence_sweep(alpha_min, alpha_max, steps, s, &config(hbar, tol)?).py_err()?;
    Ok(rows.into_iter().map(Into::into).collect())
}

#[pyfunction]
#[pyo3(signature = (hbar = 1.0, tol = 1e-12))]
fn selftest(hbar: f64, tol: f64) -> PyResult<Vec<PySuite>> {
    let results = ptqm::selftest::run(&config(hbar, tol)?).py_err()?;
    Ok(results
        .into_iter()
        .map(|r| PySuite { name: r.name, passed: r.passed, worst: r.worst, threshold: r.threshold })
        .collect())
}

#[pymodule]
fn pyptqm(m: &Bound<'_, PyModule>) -> PyResult<()> {
    let py = m.py();
    m.add("PTError", py.get_type::<PTError>())?;
    m.add("BrokenPhaseError", py.get_type::<BrokenPhaseError>())?;
    m.add("ExceptionalPointError", py.get_type::<ExceptionalPointError>())?;
    m.add_class::<PyPTParams>()?;
    m.add_class::<PyPTDerived>()?;
    m.add_class::<PyOperatorSet>()?;
    m.add_class::<PyTransition>()?;
    m.add_class::<PySweepRow>()?;
    m.add_class::<PyTrace>()?;
    m.add_class::<PySuite>()?;
    m.add_function(wrap_pyfunction!(dirac_product, m)?)?;
    m.add_function(wrap_pyfunction!(pt_product, m)?)?;
    m.add_function(wrap_pyfunction!(cpt_product, m)?)?;
    m.add_function(wrap_pyfunction!(cpt_normalize, m)?)?;
    m.add_function(wrap_pyfunction!(angular_distance, m)?)?;
    m.add_function(wrap_pyfunction!(propagator_pt, m)?)?;
    m.add_function(wrap_pyfunction!(propagator_hermitian, m)?)?;
    m.add_function(wrap_pyfunction!(evolve, m)?)?;
    m.add_function(wrap_pyfunction!(tau_star, m)?)?;
    m.add_function(wrap_pyfunction!(hermitian_transition_time, m)?)?;
    m.add_function(wrap_pyfunction!(compare, m)?)?;
    m.add_function(wrap_pyfunction!(sweep, m)?)?;
    m.add_function(wrap_pyfunction!(selftest, m)?)?;
    Ok(())
}
