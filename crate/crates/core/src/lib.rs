//! Numerical toolkit for weight sequences and weight functions.
//!
//! The crate works with truncated weight sequences `M = (M_p)_{p<=P}` stored as
//! log-quotients `log mu_p`, evaluates the associated weight function
//! `omega_M(t) = sup_p log(t^p / M_p)`, computes Legendre-Fenchel-Young
//! conjugates and associated weight matrices, and audits growth conditions
//! ((mg), (beta_1), (beta_3), root-almost-increasing and its mixed variants,
//! (omega_1)...(omega_7), (alpha_0), (alpha_1), the index gamma(omega), ...).
//!
//! Every audit returns a three-valued [`ConditionVerdict`]: the conditions are
//! asymptotic statements, so a finite truncation can certify evidence on a
//! window but never decide a limit. Verdicts carry replayable witness
//! constants, the window used, and free-form notes.

pub mod assoc;
pub mod conditions;
pub mod config;
pub mod error;
pub mod matrix;
pub mod seq;
pub mod theorems;
pub mod trend;
pub mod verdict;
pub mod weight_fn;

pub use assoc::AssocWeight;
pub use config::{TGrid, TruncationConfig};
pub use error::{Error, Result};
pub use matrix::WeightMatrix;
pub use seq::WeightSequence;
pub use theorems::{CorpusProfile, SweepSummary, TheoremId, TheoremReport};
pub use verdict::{ConditionId, ConditionVerdict, Status};
pub use weight_fn::WeightFunction;
