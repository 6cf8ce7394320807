use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Three-valued audit result. Asymptotic conditions checked on finite data
/// honestly admit a third state.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Holds,
    Fails,
    Inconclusive,
}

impl Status {
    pub fn conclusive(self) -> bool {
        !matches!(self, Status::Inconclusive)
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Status::Holds => "holds",
            Status::Fails => "fails",
            Status::Inconclusive => "inconclusive",
        };
        f.write_str(s)
    }
}

/// Identifiers for every condition the crate can audit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConditionId {
    // sequence side
    Slc,
    Mg,
    Beta1,
    Gamma1,
    Beta3,
    Rai,
    Raimixed,
    RaimixedM,
    Omega1Seq,
    Alpha0MgForms,
    Omega1Mixed,
    Omega7Seq,
    Preceq,
    Equivalent,
    // function side
    Omega0,
    Omega1,
    Omega2,
    Omega3,
    Omega4,
    Omega5,
    Omega6,
    Alpha0Fn,
    Alpha1Fn,
    StrongNq,
    Omega7Fn,
    EquivalentFn,
    ConcaveMajorantEquiv,
    GammaGt,
    // matrix side
    MatrixRai,
    ExpAbsorb,
    MatrixIdentity,
}

impl ConditionId {
    pub fn as_str(self) -> &'static str {
        match self {
            ConditionId::Slc => "slc",
            ConditionId::Mg => "mg",
            ConditionId::Beta1 => "beta1",
            ConditionId::Gamma1 => "gamma1",
            ConditionId::Beta3 => "beta3",
            ConditionId::Rai => "rai",
            ConditionId::Raimixed => "raimixed",
            ConditionId::RaimixedM => "raimixed_m",
            ConditionId::Omega1Seq => "omega1_seq",
            ConditionId::Alpha0MgForms => "alpha0_mg_forms",
            ConditionId::Omega1Mixed => "omega1_mixed",
            ConditionId::Omega7Seq => "omega7_seq",
            ConditionId::Preceq => "preceq",
            ConditionId::Equivalent => "equivalent",
            ConditionId::Omega0 => "omega0",
            ConditionId::Omega1 => "omega1",
            ConditionId::Omega2 => "omega2",
            ConditionId::Omega3 => "omega3",
            ConditionId::Omega4 => "omega4",
            ConditionId::Omega5 => "omega5",
            ConditionId::Omega6 => "omega6",
            ConditionId::Alpha0Fn => "alpha0_fn",
            ConditionId::Alpha1Fn => "alpha1_fn",
            ConditionId::StrongNq => "strong_nq",
            ConditionId::Omega7Fn => "omega7_fn",
            ConditionId::EquivalentFn => "equivalent_fn",
            ConditionId::ConcaveMajorantEquiv => "concave_majorant_equiv",
            ConditionId::GammaGt => "gamma_gt",
            ConditionId::MatrixRai => "matrix_rai",
            ConditionId::ExpAbsorb => "exp_absorb",
            ConditionId::MatrixIdentity => "matrix_identity",
        }
    }

    /// Condition ids accepted by `check` front ends for a single sequence.
    pub fn sequence_checks() -> &'static [ConditionId] {
        &[
            ConditionId::Slc,
            ConditionId::Mg,
            ConditionId::Beta1,
            ConditionId::Gamma1,
            ConditionId::Beta3,
            ConditionId::Rai,
            ConditionId::Raimixed,
            ConditionId::RaimixedM,
            ConditionId::Omega1Seq,
            ConditionId::Alpha0MgForms,
            ConditionId::Omega1Mixed,
            ConditionId::Omega7Seq,
        ]
    }
}

impl fmt::Display for ConditionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ConditionId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let id = match s {
            "slc" => ConditionId::Slc,
            "mg" => ConditionId::Mg,
            "beta1" => ConditionId::Beta1,
            "gamma1" => ConditionId::Gamma1,
            "beta3" => ConditionId::Beta3,
            "rai" => ConditionId::Rai,
            "raimixed" => ConditionId::Raimixed,
            "raimixed_m" | "raimixedm" => ConditionId::RaimixedM,
            "omega1_seq" => ConditionId::Omega1Seq,
            "alpha0_mg_forms" => ConditionId::Alpha0MgForms,
            "omega1_mixed" | "omega1mixed" => ConditionId::Omega1Mixed,
            "omega7_seq" => ConditionId::Omega7Seq,
            "preceq" => ConditionId::Preceq,
            "equivalent" => ConditionId::Equivalent,
            "omega0" => ConditionId::Omega0,
            "omega1" => ConditionId::Omega1,
            "omega2" => ConditionId::Omega2,
            "omega3" => ConditionId::Omega3,
            "omega4" => ConditionId::Omega4,
            "omega5" => ConditionId::Omega5,
            "omega6" => ConditionId::Omega6,
            "alpha0_fn" => ConditionId::Alpha0Fn,
            "alpha1_fn" => ConditionId::Alpha1Fn,
            "strong_nq" => ConditionId::StrongNq,
            "omega7_fn" => ConditionId::Omega7Fn,
            "equivalent_fn" => ConditionId::EquivalentFn,
            "concave_majorant_equiv" => ConditionId::ConcaveMajorantEquiv,
            "gamma_gt" => ConditionId::GammaGt,
            "matrix_rai" => ConditionId::MatrixRai,
            "exp_absorb" => ConditionId::ExpAbsorb,
            "matrix_identity" => ConditionId::MatrixIdentity,
            other => return Err(Error::UnknownId(format!("condition '{other}'"))),
        };
        Ok(id)
    }
}

/// Replayable audit result for one condition on one subject.
///
/// When `status == Holds`, every existential constant of the condition
/// appears in `witnesses`; substituting them back into the inequality over
/// `window` re-verifies within the configured tolerance. When
/// `status == Fails`, `witnesses` records an explicit violating index or
/// parameter.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ConditionVerdict {
    pub condition_id: ConditionId,
    pub status: Status,
    pub witnesses: BTreeMap<String, f64>,
    pub margin: f64,
    pub window: (usize, usize),
    pub notes: String,
}

impl ConditionVerdict {
    pub fn new(condition_id: ConditionId, status: Status, window: (usize, usize)) -> Self {
        ConditionVerdict {
            condition_id,
            status,
            witnesses: BTreeMap::new(),
            margin: 0.0,
            window,
            notes: String::new(),
        }
    }

    pub fn witness(mut self, name: &str, value: f64) -> Self {
        self.witnesses.insert(name.to_string(), value);
        self
    }

    pub fn margin(mut self, margin: f64) -> Self {
        self.margin = margin;
        self
    }

    pub fn note(mut self, note: &str) -> Self {
        if !self.notes.is_empty() {
            self.notes.push_str("; ");
        }
        self.notes.push_str(note);
        self
    }

    pub fn get(&self, name: &str) -> Option<f64> {
        self.witnesses.get(name).copied()
    }
}


impl fmt::Display for ConditionVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} (window [{}, {}], margin {:.3e})",
            self.condition_id, self.status, self.window.0, self.window.1, self.margin
        )?;
        if !self.witnesses.is_empty() {
            let parts: Vec<String> = self
                .witnesses
                .iter()
                .map(|(k, v)| format!("{k}={v:.6}"))
                .collect();
            write!(f, " [{}]", parts.join(", "))?;
        }
        Ok(())
    }
}
