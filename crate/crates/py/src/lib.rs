//! Python bindings: the main types and operations exposed as an extension
//! module. Verdicts and reports cross the boundary as JSON strings; decode
//! them with `json.loads`.

use std::str::FromStr;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use weightgrowth::assoc::{omega_m_bruteforce, recover_log_m, AssocWeight};
use weightgrowth::conditions;
use weightgrowth::matrix::{build_matrix, MatrixExport, DEFAULT_L_GRID};
use weightgrowth::seq::SequenceFlags;
use weightgrowth::theorems::{
    random_lc_corpus, sweep, verify_theorem, CorpusProfile, Subject, TheoremId,
};
use weightgrowth::weight_fn::{
    self, gamma_index, phi_star, ClosedFormFamily, WeightFunction as CoreFunction,
};
use weightgrowth::{ConditionId, TruncationConfig, WeightSequence as CoreSequence};

fn value_err(e: weightgrowth::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn json_err(e: serde_json::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse_config(config_json: Option<&str>, fallback_p: usize) -> PyResult<TruncationConfig> {
    match config_json {
        Some(text) => {
            let cfg: TruncationConfig = serde_json::from_str(text).map_err(json_err)?;
            cfg.validate().map_err(value_err)?;
            Ok(cfg)
        }
        None => Ok(TruncationConfig::with_p(fallback_p)),
    }
}

/// Truncated weight sequence stored as log-quotients.
#[pyclass(frozen, name = "WeightSequence")]
struct PySequence {
    inner: CoreSequence,
}

#[pymethods]
impl PySequence {
    /// Gevrey sequence M_p = p!^s.
    #[staticmethod]
    fn gevrey(s: f64, p: usize) -> PyResult<Self> {
        Ok(PySequence { inner: CoreSequence::gevrey(s, p).map_err(value_err)? })
    }

    /// q-Gevrey sequence M_p = q^(p^2).
    #[staticmethod]
    fn q_gevrey(q: f64, p: usize) -> PyResult<Self> {
        Ok(PySequence { inner: CoreSequence::q_gevrey(q, p).map_err(value_err)? })
    }

    /// The block counterexample separating the quotient-ratio and
    /// root-ratio liminf conditions.
    #[staticmethod]
    fn beta3_counterexample(j: usize) -> PyResult<Self> {
        Ok(PySequence { inner: CoreSequence::beta3_counterexample(j).map_err(value_err)? })
    }

    /// Build from explicit log mu values, verifying the requested flags.
    #[staticmethod]
    #[pyo3(signature = (values, log_convex = false, normalized = false))]
    fn from_log_quotients(values: Vec<f64>, log_convex: bool, normalized: bool) -> PyResult<Self> {
        let flags = SequenceFlags { log_convex, normalized, divergent_quotients: false };
        Ok(PySequence {
            inner: CoreSequence::from_log_quotients(&values, flags).map_err(value_err)?,
        })
    }

    #[getter]
    fn label(&self) -> String {
        self.inner.label().to_string()
    }

    #[getter]
    fn truncation(&self) -> usize {
        self.inner.truncation()
    }

    fn log_mu(&self) -> Vec<f64> {
        self.inner.log_mu_slice().to_vec()
    }

    fn log_m(&self) -> Vec<f64> {
        self.inner.log_m_slice().to_vec()
    }

    /// (log_convex, normalized, divergent_quotients)
    fn flags(&self) -> (bool, bool, bool) {
        let f = self.inner.flags();
        (f.log_convex, f.normalized, f.divergent_quotients)
    }

    /// Associated weight function at t.
    fn omega(&self, t: f64) -> PyResult<f64> {
        AssocWeight::new(&self.inner).map_err(value_err)?.eval(t).map_err(value_err)
    }

    /// Brute-force oracle sup_p log(t^p / M_p).
    fn omega_bruteforce(&self, t: f64) -> PyResult<f64> {
        omega_m_bruteforce(&self.inner, t, self.inner.truncation()).map_err(value_err)
    }

    /// Reconstruct log M_p from the associated function.
    #[pyo3(signature = (p, config_json = None))]
    fn recover_log_m(&self, p: usize, config_json: Option<&str>) -> PyResult<f64> {
        let cfg = parse_config(config_json, self.inner.truncation())?;
        recover_log_m(&self.inner, p, &cfg).map_err(value_err)
    }

    /// Audit one condition; returns the verdict as JSON.
    #[pyo3(signature = (condition, config_json = None))]
    fn check(&self, condition: &str, config_json: Option<&str>) -> PyResult<String> {
        let id = ConditionId::from_str(condition).map_err(value_err)?;
        let cfg = parse_config(config_json, self.inner.truncation())?;
        let m = &self.inner;
        let v = match id {
            ConditionId::Slc => conditions::check_slc(m, &cfg),
            ConditionId::Mg => conditions::check_mg(m, &cfg),
            ConditionId::Beta1 => conditions::check_beta1(m, &cfg),
            ConditionId::Gamma1 => conditions::check_gamma1(m, &cfg),
            ConditionId::Beta3 => conditions::check_beta3(m, &cfg),
            ConditionId::Rai => conditions::check_rai(m, &cfg),
            ConditionId::Raimixed => conditions::check_raimixed(m, &cfg),
            ConditionId::RaimixedM => conditions::check_raimixed_m(m, &cfg),
            ConditionId::Omega1Seq => conditions::check_omega1_seq(m, &cfg),
            ConditionId::Alpha0MgForms => conditions::check_alpha0_mg_forms(m, &cfg).overall,
            ConditionId::Omega1Mixed => conditions::check_omega1mixed(m, m, &cfg),
            ConditionId::Omega7Seq => conditions::check_omega7_seq(m, &cfg),
            other => {
                return Err(PyValueError::new_err(format!(
                    "condition '{other}' is not a sequence check"
                )))
            }
        };
        serde_json::to_string(&v).map_err(json_err)
    }

    /// Verify a theorem on this sequence; returns the report as JSON.
    #[pyo3(signature = (theorem, config_json = None))]
    fn verify(&self, theorem: &str, config_json: Option<&str>) -> PyResult<String> {
        let id = TheoremId::from_str(theorem).map_err(value_err)?;
        let cfg = parse_config(config_json, self.inner.truncation())?;
        let report = verify_theorem(id, &Subject::Sequence(self.inner.clone()), &cfg)
            .map_err(value_err)?;
        serde_json::to_string(&report).map_err(json_err)
    }

    /// Associated weight matrix export as JSON.
    #[pyo3(signature = (l_grid = None, p_cap = None))]
    fn matrix_json(&self, l_grid: Option<Vec<f64>>, p_cap: Option<usize>) -> PyResult<String> {
        let omega = CoreFunction::of_sequence(&self.inner).map_err(value_err)?;
        let grid = l_grid.unwrap_or_else(|| DEFAULT_L_GRID.to_vec());
        let cap = p_cap.unwrap_or_else(|| self.inner.truncation().min(240));
        let mx = build_matrix(&omega, &grid, cap).map_err(value_err)?;
        serde_json::to_string(&MatrixExport::of(&mx)).map_err(json_err)
    }

    fn __repr__(&self) -> String {
        format!("WeightSequence({}, P={})", self.inner.label(), self.inner.truncation())
    }
}

/// Evaluable weight function (closed-form family or sequence-backed).
#[pyclass(frozen, name = "WeightFunction")]
struct PyFunction {
    inner: CoreFunction,
}

#[pymethods]
impl PyFunction {
    /// Closed forms: "power" (needs param), "t_log_t", "log_power" (needs
    /// param), "linear".
    #[staticmethod]
    #[pyo3(signature = (family, param = None, t_max = 1e30))]
    fn closed_form(family: &str, param: Option<f64>, t_max: f64) -> PyResult<Self> {
        let fam = match family {
            "power" => ClosedFormFamily::Power {
                alpha: param.ok_or_else(|| PyValueError::new_err("power needs a parameter"))?,
            },
            "t_log_t" => ClosedFormFamily::TLogT,
            "log_power" => ClosedFormFamily::LogPower {
                beta: param.ok_or_else(|| PyValueError::new_err("log_power needs a parameter"))?,
            },
            "linear" => ClosedFormFamily::Linear,
            other => return Err(PyValueError::new_err(format!("unknown family '{other}'"))),
        };
        Ok(PyFunction { inner: CoreFunction::closed_form(fam, t_max).map_err(value_err)? })
    }

    /// The associated weight function of a sequence.
    #[staticmethod]
    fn of_sequence(seq: &PySequence) -> PyResult<Self> {
        Ok(PyFunction { inner: CoreFunction::of_sequence(&seq.inner).map_err(value_err)? })
    }

    #[getter]
    fn family_tag(&self) -> String {
        self.inner.family_tag().to_string()
    }

    fn eval(&self, t: f64) -> PyResult<f64> {
        self.inner.eval(t).map_err(value_err)
    }

    /// Legendre-Fenchel-Young conjugate of y -> omega(e^y).
    fn phi_star(&self, x: f64) -> PyResult<f64> {
        phi_star(&self.inner, x).map_err(value_err)
    }

    /// (estimate, sentinel): growth index, sentinel true means ">= cap".
    #[pyo3(signature = (config_json = None))]
    fn gamma_index(&self, config_json: Option<&str>) -> PyResult<(f64, bool)> {
        let cfg = parse_config(config_json, 200)?;
        let gi = gamma_index(&self.inner, &cfg);
        Ok((gi.estimate, gi.sentinel))
    }

    /// Audit a function-side condition; returns the verdict as JSON.
    #[pyo3(signature = (condition, config_json = None))]
    fn check(&self, condition: &str, config_json: Option<&str>) -> PyResult<String> {
        let id = ConditionId::from_str(condition).map_err(value_err)?;
        let cfg = parse_config(config_json, 200)?;
        let f = &self.inner;
        let v = match id {
            ConditionId::Omega0
            | ConditionId::Omega1
            | ConditionId::Omega2
            | ConditionId::Omega3
            | ConditionId::Omega4
            | ConditionId::Omega5
            | ConditionId::Omega6 => {
                let map = weight_fn::check_omega_conditions(f, &cfg);
                map[&id].clone()
            }
            ConditionId::Alpha0Fn => weight_fn::check_alpha0_fn(f, &cfg).verdict,
            ConditionId::Alpha1Fn => weight_fn::check_alpha1_fn(f, &cfg),
            ConditionId::StrongNq => weight_fn::check_strong_nq(f, &cfg),
            ConditionId::Omega7Fn => weight_fn::check_omega7_fn(f, &cfg),
            ConditionId::ConcaveMajorantEquiv => weight_fn::check_concave_majorant_equiv(f, &cfg),
            other => {
                return Err(PyValueError::new_err(format!(
                    "condition '{other}' is not a function check"
                )))
            }
        };
        serde_json::to_string(&v).map_err(json_err)
    }

    /// Verify a function-side theorem; returns the report as JSON.
    #[pyo3(signature = (theorem, config_json = None))]
    fn verify(&self, theorem: &str, config_json: Option<&str>) -> PyResult<String> {
        let id = TheoremId::from_str(theorem).map_err(value_err)?;
        let cfg = parse_config(config_json, 200)?;
        let report =
            verify_theorem(id, &Subject::Function(self.inner.clone()), &cfg).map_err(value_err)?;
        serde_json::to_string(&report).map_err(json_err)
    }

    fn __repr__(&self) -> String {
        format!("WeightFunction({})", self.inner.family_tag())
    }
}

/// Sweep theorems over a deterministic random corpus; returns the summary
/// as JSON.
#[pyfunction]
#[pyo3(signature = (n, profile = "generic", theorems = vec![], seed = 7, p = 200))]
fn corpus_sweep(
    n: usize,
    profile: &str,
    theorems: Vec<String>,
    seed: u64,
    p: usize,
) -> PyResult<String> {
    let profile = CorpusProfile::from_str(profile).map_err(value_err)?;
    let mut cfg = TruncationConfig::with_p(p);
    cfg.seed = seed;
    let ids: Vec<TheoremId> = if theorems.is_empty() {
        vec![TheoremId::Chain]
    } else {
        theorems
            .iter()
            .map(|t| TheoremId::from_str(t).map_err(value_err))
            .collect::<PyResult<Vec<_>>>()?
    };
    let corpus = random_lc_corpus(n, profile, &cfg).map_err(value_err)?;
    let (summary, _) = sweep(&corpus, &ids, &cfg).map_err(value_err)?;
    serde_json::to_string(&summary).map_err(json_err)
}

#[pymodule]
fn weightgrowth_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PySequence>()?;
    m.add_class::<PyFunction>()?;
    m.add_function(wrap_pyfunction!(corpus_sweep, m)?)?;
    Ok(())
}
