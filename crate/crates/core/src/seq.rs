//! Truncated weight sequences stored as log-quotients.
//!
//! A sequence `M = (M_p)_{p<=P}` with `M_0 = 1` is determined by its
//! quotients `mu_p = M_p / M_{p-1}` (`mu_0 := 1`). Everything is kept in log
//! space: `M_p` itself grows super-factorially and would overflow for `P` in
//! the hundreds. `log M_p` is the prefix sum of `log mu`, and
//! `log m_p = log M_p - log p!` is the factorial-normalized variant.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::config::TruncationConfig;
use crate::error::{Error, Result};
use crate::trend::{sup_scan, Trend};
use crate::verdict::{ConditionId, ConditionVerdict, Status};

/// Structural flags of a sequence, verified at construction time.
///
/// `divergent_quotients` is the finite surrogate for `(M_p)^{1/p} -> oo`:
/// true divergence is not decidable from a truncation, so the flag records
/// that `mu_p` visibly grows across the tail of the data.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequenceFlags {
    pub log_convex: bool,
    pub normalized: bool,
    pub divergent_quotients: bool,
}

impl SequenceFlags {
    pub fn lc(self) -> bool {
        self.log_convex && self.normalized && self.divergent_quotients
    }

    pub fn none() -> Self {
        SequenceFlags { log_convex: false, normalized: false, divergent_quotients: false }
    }

    pub fn all() -> Self {
        SequenceFlags { log_convex: true, normalized: true, divergent_quotients: true }
    }
}

/// A truncated weight sequence in log space.
#[derive(Debug, Clone, Serialize)]
pub struct WeightSequence {
    log_mu: Vec<f64>,
    log_m: Vec<f64>,
    log_fact: Vec<f64>,
    label: String,
    flags: SequenceFlags,
}

/// `ln p!` for `p = 0..=p_max`, by direct summation.
pub fn log_factorial_table(p_max: usize) -> Vec<f64> {
    let mut t = Vec::with_capacity(p_max + 1);
    t.push(0.0);
    let mut acc = 0.0;
    for p in 1..=p_max {
        acc += (p as f64).ln();
        t.push(acc);
    }
    t
}

impl WeightSequence {
    fn build(log_mu: Vec<f64>, label: String, flags: SequenceFlags) -> Self {
        let mut log_m = Vec::with_capacity(log_mu.len());
        let mut acc = 0.0;
        for &v in &log_mu {
            acc += v;
            log_m.push(acc);
        }
        let log_fact = log_factorial_table(log_mu.len() - 1);
        WeightSequence { log_mu, log_m, log_fact, label, flags }
    }

    /// Build from `log mu_p` values, verifying the requested flags.
    ///
    /// `values[0]` must be 0 (`mu_0 := 1`); a requested flag that the data
    /// violates is an error, not silently dropped. The divergence flag is
    /// detected from the data rather than requested.
    pub fn from_log_quotients(values: &[f64], want: SequenceFlags) -> Result<Self> {
        if values.len() < 3 {
            return Err(Error::TruncationTooSmall(format!(
                "need at least P = 2 (got {} entries)",
                values.len()
            )));
        }
        for (index, v) in values.iter().enumerate() {
            if !v.is_finite() {
                return Err(Error::NonFinite { index });
            }
        }
        if values[0] != 0.0 {
            return Err(Error::FlagViolation(format!(
                "log mu_0 must be 0 (mu_0 := 1), got {}",
                values[0]
            )));
        }
        if want.log_convex {
            for p in 1..values.len() - 1 {
                if values[p + 1] < values[p] {
                    return Err(Error::FlagViolation(format!(
                        "log-convexity requested but log mu decreases at p = {}: {} -> {}",
                        p + 1,
                        values[p],
                        values[p + 1]
                    )));
                }
            }
        }
        if want.normalized && values[1] < 0.0 {
            return Err(Error::FlagViolation(format!(
                "normalization requested but log mu_1 = {} < 0",
                values[1]
            )));
        }
        let mut flags = want;
        flags.divergent_quotients = detect_divergence(values);
        if want.divergent_quotients && !flags.divergent_quotients {
            return Err(Error::FlagViolation(
                "divergent quotients requested but mu shows no growth over the tail window".into(),
            ));
        }
        Ok(WeightSequence::build(values.to_vec(), "explicit".into(), flags))
    }

    /// Build from `log mu_p`, detecting which flags hold instead of
    /// requiring them.
    pub fn from_log_quotients_detect(values: &[f64], label: &str) -> Result<Self> {
        if values.len() < 3 {
            return Err(Error::TruncationTooSmall(format!(
                "need at least P = 2 (got {} entries)",
                values.len()
            )));
        }
        for (index, v) in values.iter().enumerate() {
            if !v.is_finite() {
                return Err(Error::NonFinite { index });
            }
        }
        if values[0] != 0.0 {
            return Err(Error::FlagViolation(format!(
                "log mu_0 must be 0, got {}",
                values[0]
            )));
        }
        // 1e-9 slack absorbs numerical noise in conjugate-derived quotients
        let log_convex = values.windows(2).skip(1).all(|w| w[1] >= w[0] - 1e-9);
        let normalized = values[1] >= -1e-12;
        let flags = SequenceFlags {
            log_convex,
            normalized,
            divergent_quotients: detect_divergence(values),
        };
        Ok(WeightSequence::build(values.to_vec(), label.into(), flags))
    }

    /// Gevrey sequence `M_p = p!^s`, so `mu_p = p^s`.
    pub fn gevrey(s: f64, p: usize) -> Result<Self> {
        if !(s >= 1.0) {
            return Err(Error::InvalidParameter(format!(
                "gevrey index must satisfy s >= 1, got {s}"
            )));
        }
        if p < 2 {
            return Err(Error::TruncationTooSmall("gevrey needs P >= 2".into()));
        }
        let log_mu: Vec<f64> = (0..=p).map(|q| if q == 0 { 0.0 } else { s * (q as f64).ln() }).collect();
        Ok(WeightSequence::build(
            log_mu,
            format!("gevrey(s={s})"),
            SequenceFlags::all(),
        ))
    }

    /// q-Gevrey sequence `M_p = q^(p^2)`, so `mu_p = q^(2p-1)`. Log-convex
    /// with unbounded quotient ratio `mu_2p / mu_p`, so (mg) fails.
    pub fn q_gevrey(q: f64, p: usize) -> Result<Self> {
        if !(q > 1.0) {
            return Err(Error::InvalidParameter(format!("q-gevrey needs q > 1, got {q}")));
        }
        if p < 2 {
            return Err(Error::TruncationTooSmall("q-gevrey needs P >= 2".into()));
        }
        let lq = q.ln();
        let log_mu: Vec<f64> = (0..=p)
            .map(|k| if k == 0 { 0.0 } else { (2 * k - 1) as f64 * lq })
            .collect();
        Ok(WeightSequence::build(
            log_mu,
            format!("q_gevrey(q={q})"),
            SequenceFlags::all(),
        ))
    }

    /// Block sequence whose quotient ratio `mu_{Qp}/mu_p` returns to 1 at
    /// every block start while the root ratio `(M_2p)^{1/2p} / (M_p)^{1/p}`
    /// stays >= 2: the two liminf conditions genuinely fall apart.
    ///
    /// Blocks are delimited by `a_j = 2^{j(j-1)/2}` (so `a_{j+1}/a_j = 2^j`);
    /// the quotient is the constant `c_j` on `(a_j, a_{j+1} - 1]` with
    /// `c_1 = 1` and `c_j = 2^{a_{j+1}/(a_j-1)} (M_{a_j-1})^{1/(a_j-1)}` for
    /// j >= 2. Truncation is `P = a_J - 1`.
    pub fn beta3_counterexample(j_blocks: usize) -> Result<Self> {
        Ok(Self::beta3_counterexample_with_blocks(j_blocks)?.0)
    }

    /// As [`beta3_counterexample`](Self::beta3_counterexample), also
    /// returning the block table `(j, a_j, log c_j)`.
    pub fn beta3_counterexample_with_blocks(
        j_blocks: usize,
    ) -> Result<(Self, Vec<BlockInfo>)> {
        if j_blocks < 4 {
            return Err(Error::InvalidParameter(format!(
                "block count J must be >= 4, got {j_blocks}"
            )));
        }
        if j_blocks > 7 {
            // P = a_J - 1 = 2^{J(J-1)/2} - 1 explodes; J = 7 already gives
            // P = 2^21 - 1.
            return Err(Error::InvalidParameter(format!(
                "block count J must be <= 7, got {j_blocks}"
            )));
        }
        let a: Vec<u64> = (1..=j_blocks as u64 + 1)
            .map(|j| 1u64 << (j * (j - 1) / 2))
            .collect(); // a[j-1] = a_j = 2^{j(j-1)/2}
        let a_j = |j: usize| a[j - 1]; // 1-based accessor
        // generator constraints: a_{j+1}/a_j >= j+1 for all j, and the block
        // ratio a_{j+1}/(a_j - 1) strictly increasing for j >= 2 (the j = 1
        // instance is degenerate: a_1 - 1 = 0).
        for j in 1..=j_blocks - 1 {
            if (a_j(j + 1) as f64) / (a_j(j) as f64) < (j + 1) as f64 {
                return Err(Error::FlagViolation(format!(
                    "generator violates a_(j+1)/a_j >= j+1 at j = {j}"
                )));
            }
        }
        for j in 2..=j_blocks - 1 {
            let lhs = a_j(j + 1) as f64 / (a_j(j) as f64 - 1.0);
            let rhs = a_j(j + 2) as f64 / (a_j(j + 1) as f64 - 1.0);
            if !(lhs < rhs) {
                return Err(Error::FlagViolation(format!(
                    "generator violates block-ratio monotonicity at j = {j}"
                )));
            }
        }

        let p_max = (a_j(j_blocks) - 1) as usize;
        let mut log_mu = vec![0.0; p_max + 1];
        let mut log_m = vec![0.0; p_max + 1]; // running prefix for c_j formula
        let mut blocks = Vec::new();
        let mut log_c_prev = f64::NEG_INFINITY;
        for j in 1..j_blocks {
            let start = a_j(j) as usize;
            let end = (a_j(j + 1) - 1) as usize; // block j covers [a_j, a_{j+1} - 1]
            let log_c = if j == 1 {
                0.0
            } else {
                let denom = (start - 1) as f64;
                (a_j(j + 1) as f64 * std::f64::consts::LN_2 + log_m[start - 1]) / denom
            };
            if log_c < log_c_prev {
                return Err(Error::FlagViolation(format!(
                    "block constant c_j decreases at j = {j}: not log-convex"
                )));
            }
            log_c_prev = log_c;
            blocks.push(BlockInfo { j, a_j: a_j(j), log_c });
            for p in start..=end {
                log_mu[p] = log_c;
                log_m[p] = log_m[p - 1] + log_c;
            }
        }
        let seq = WeightSequence::build(
            log_mu,
            format!("beta3_counterexample(J={j_blocks})"),
            SequenceFlags::all(),
        );
        Ok((seq, blocks))
    }

    /// Root-power companion `L^C_p = (N_{Cp})^{1/C}`; its quotients are the
    /// C-term geometric means `lambda^C_p = (nu_{Cp-C+1} ... nu_{Cp})^{1/C}`.
    pub fn root_power(&self, c: usize) -> Result<Self> {
        if c == 0 {
            return Err(Error::InvalidParameter("root power C must be >= 1".into()));
        }
        let new_p = self.truncation() / c;
        if new_p < 2 {
            return Err(Error::TruncationTooSmall(format!(
                "P/C = {}/{} leaves fewer than 2 indices",
                self.truncation(),
                c
            )));
        }
        let mut log_mu = Vec::with_capacity(new_p + 1);
        if c == 1 {
            // L^1 is the sequence itself; keep the quotients bit-exact
            log_mu.extend_from_slice(&self.log_mu);
        } else {
            log_mu.push(0.0);
            for p in 1..=new_p {
                log_mu.push((self.log_m[c * p] - self.log_m[c * (p - 1)]) / c as f64);
            }
        }
        Ok(WeightSequence::build(
            log_mu,
            format!("root_power(C={c}) of {}", self.label),
            self.flags,
        ))
    }

    /// Truncation index P (largest p with data).
    pub fn truncation(&self) -> usize {
        self.log_mu.len() - 1
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn flags(&self) -> SequenceFlags {
        self.flags
    }

    /// `ln mu_p`.
    pub fn log_mu(&self, p: usize) -> f64 {
        self.log_mu[p]
    }

    pub fn log_mu_slice(&self) -> &[f64] {
        &self.log_mu
    }

    /// `ln M_p`.
    pub fn log_m(&self, p: usize) -> f64 {
        self.log_m[p]
    }

    pub fn log_m_slice(&self) -> &[f64] {
        &self.log_m
    }

    /// `ln m_p = ln M_p - ln p!`.
    pub fn log_m_norm(&self, p: usize) -> f64 {
        self.log_m[p] - self.log_fact[p]
    }

    /// `ln p!`.
    pub fn log_factorial(&self, p: usize) -> f64 {
        self.log_fact[p]
    }

    /// `(1/p) ln M_p`, the log of the root `(M_p)^{1/p}` (p >= 1).
    pub fn root(&self, p: usize) -> f64 {
        debug_assert!(p >= 1);
        self.log_m[p] / p as f64
    }

    /// `(1/p) ln m_p` (p >= 1).
    pub fn m_root(&self, p: usize) -> f64 {
        debug_assert!(p >= 1);
        (self.log_m[p] - self.log_fact[p]) / p as f64
    }

    /// Lowest quotient value `mu_1` (as a real number).
    pub fn mu_1(&self) -> f64 {
        self.log_mu[1].exp()
    }
}

/// One block of the beta_3 counterexample construction.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct BlockInfo {
    pub j: usize,
    pub a_j: u64,
    pub log_c: f64,
}

/// Divergence evidence for `mu_p`: the quotients visibly grew over the data.
///
/// `(M_p)^{1/p} -> oo` is not finitely decidable (block sequences are flat on
/// arbitrarily long runs), so the flag records evidence plus the residual
/// assumption that the observed growth continues.
fn detect_divergence(log_mu: &[f64]) -> bool {
    let p = log_mu.len() - 1;
    log_mu[p] > log_mu[1] + 1e-9
}

/// True when the quotients are flat across the configured honesty window:
/// the data's most asymptotic scale is a single block, so growth-structure
/// questions beyond it (recurring jumps, ratio collapses) are undecidable
/// from this truncation.
pub fn has_tail_plateau(m: &WeightSequence, cfg: &TruncationConfig) -> bool {
    let p = m.truncation();
    let (lo, _) = cfg.tail_window(p);
    m.log_mu(p) - m.log_mu(lo) <= cfg.eps
}

/// Relation `M preceq N`: `sup_p (M_p / N_p)^{1/p} < oo`.
///
/// The witness is the running sup of `(1/p)(ln M_p - ln N_p)`; a sup still
/// rising at truncation is reported as `fails` with the diverging witness
/// recorded, since the data actively refutes boundedness on every window it
/// covers.
pub fn preceq(m: &WeightSequence, n: &WeightSequence, cfg: &TruncationConfig) -> ConditionVerdict {
    let p_max = m.truncation().min(n.truncation());
    let (win_lo, _) = cfg.tail_window(p_max);
    let values: Vec<f64> = (1..=p_max).map(|p| m.root(p) - n.root(p)).collect();
    let scan = sup_scan(&values, cfg.eps, cfg.rise_floor());
    let sup = scan.sup;
    let argmax = scan.arg + 1;
    let tail_max = values[win_lo - 1..]
        .iter()
        .fold(f64::NEG_INFINITY, |a, &b| a.max(b));
    let mut v = if scan.trend.bounded() {
        ConditionVerdict::new(ConditionId::Preceq, Status::Holds, (1, p_max))
            .witness("log_sup", sup)
            .witness("argmax_p", argmax as f64)
            .margin(sup - tail_max)
    } else if scan.trend.diverging() {
        ConditionVerdict::new(ConditionId::Preceq, Status::Fails, (1, p_max))
            .witness("log_sup_at_truncation", sup)
            .witness("argmax_p", argmax as f64)
            .note("diverging witness: running sup still rising at truncation")
    } else {
        ConditionVerdict::new(ConditionId::Preceq, Status::Inconclusive, (1, p_max))
            .witness("log_sup_at_truncation", sup)
            .note("running sup trend in the indecision band")
    };
    v = v.note(&format!("running sup trend: {}", scan.trend.describe()));
    if scan.trend == Trend::Creeping {
        v = v.note("sup creeping below the rise floor; treated as bounded on this window");
    }
    v
}

/// Equivalence `M approx N`: `preceq` in both directions.
pub fn equivalent(
    m: &WeightSequence,
    n: &WeightSequence,
    cfg: &TruncationConfig,
) -> ConditionVerdict {
    let fwd = preceq(m, n, cfg);
    let bwd = preceq(n, m, cfg);
    let status = match (fwd.status, bwd.status) {
        (Status::Holds, Status::Holds) => Status::Holds,
        (Status::Fails, _) | (_, Status::Fails) => Status::Fails,
        _ => Status::Inconclusive,
    };
    let mut v = ConditionVerdict::new(ConditionId::Equivalent, status, fwd.window);
    if let Some(x) = fwd.get("log_sup") {
        v = v.witness("log_sup_fwd", x);
    }
    if let Some(x) = bwd.get("log_sup") {
        v = v.witness("log_sup_bwd", x);
    }
    v.note(&format!("forward: {}; backward: {}", fwd.status, bwd.status))
}

/// Output of the strongly-log-convex regularization `sigma_p = p inf_{q>=p} mu_q/q`.
#[derive(Debug, Clone)]
pub struct SlcRegularization {
    pub sequence: WeightSequence,
    /// True when the inf is visibly clipped by the truncation: the minimizer
    /// sits at (or the data keeps falling into) the boundary, so the
    /// regularization is only exact if `mu_q/q` is eventually nondecreasing.
    pub truncated_inf: bool,
}

/// Regularize `M` by the quotients `sigma_p = p inf_{p<=q<=P} (mu_q / q)`,
/// `sigma_0 = 1`. The resulting quotient slopes `sigma_p / p` are
/// nondecreasing by construction, and `sigma_p <= mu_p` pointwise.
pub fn slc_regularization(m: &WeightSequence) -> SlcRegularization {
    let p_max = m.truncation();
    // suffix minima of ln(mu_q) - ln(q)
    let mut suffix = vec![0.0_f64; p_max + 1];
    let slope = |q: usize| m.log_mu(q) - (q as f64).ln();
    suffix[p_max] = slope(p_max);
    for q in (1..p_max).rev() {
        suffix[q] = slope(q).min(suffix[q + 1]);
    }
    let mut log_sigma = vec![0.0; p_max + 1];
    for p in 1..=p_max {
        log_sigma[p] = (p as f64).ln() + suffix[p];
    }
    // exactness diagnostic: global minimizer of mu_q/q strictly inside the
    // data and slopes nondecreasing across the last quarter.
    let mut argmin = 1;
    for q in 1..=p_max {
        if slope(q) < slope(argmin) {
            argmin = q;
        }
    }
    let last_q = p_max - (p_max / 4).max(1);
    let tail_nondecreasing = (last_q..p_max).all(|q| slope(q + 1) >= slope(q) - 1e-12);
    let truncated_inf = !(argmin < last_q && tail_nondecreasing);

    let normalized = log_sigma[1] >= 0.0;
    let flags = SequenceFlags {
        log_convex: true,
        normalized,
        divergent_quotients: detect_divergence(&log_sigma),
    };
    let sequence = WeightSequence::build(
        log_sigma,
        format!("slc_regularization of {}", m.label()),
        flags,
    );
    SlcRegularization { sequence, truncated_inf }
}

/// JSON sequence spec accepted by front ends: either a named family with
/// parameters or explicit log-quotients.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SequenceSpec {
    #[serde(default)]
    pub family: Option<String>,
    #[serde(default)]
    pub params: Option<BTreeMap<String, f64>>,
    #[serde(rename = "P", default)]
    pub p: Option<usize>,
    #[serde(default)]
    pub log_mu: Option<Vec<f64>>,
}

impl SequenceSpec {
    pub fn build(&self) -> Result<WeightSequence> {
        if let Some(values) = &self.log_mu {
            return WeightSequence::from_log_quotients_detect(values, "explicit");
        }
        let family = self
            .family
            .as_deref()
            .ok_or_else(|| Error::SpecParse("spec needs either 'family' or 'log_mu'".into()))?;
        let params = self.params.clone().unwrap_or_default();
        let get = |name: &str| -> Result<f64> {
            params
                .get(name)
                .copied()
                .ok_or_else(|| Error::SpecParse(format!("family '{family}' needs param '{name}'")))
        };
        match family {
            "gevrey" => {
                let p = self.p.ok_or_else(|| Error::SpecParse("gevrey needs P".into()))?;
                WeightSequence::gevrey(get("s")?, p)
            }
            "q_gevrey" => {
                let p = self.p.ok_or_else(|| Error::SpecParse("q_gevrey needs P".into()))?;
                WeightSequence::q_gevrey(get("q")?, p)
            }
            "beta3_counterexample" => {
                let j = get("J")? as usize;
                WeightSequence::beta3_counterexample(j)
            }
            other => Err(Error::SpecParse(format!("unknown family '{other}'"))),
        }
    }
}

/// Export payload: log-quotients, log-values and real roots.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SequenceExport {
    pub schema: String,
    pub label: String,
    #[serde(rename = "P")]
    pub p: usize,
    pub flags: SequenceFlags,
    pub log_mu: Vec<f64>,
    #[serde(rename = "log_M")]
    pub log_m: Vec<f64>,
    pub roots: Vec<f64>,
}

impl SequenceExport {
    pub fn of(seq: &WeightSequence) -> Self {
        let p = seq.truncation();
        let mut roots = Vec::with_capacity(p + 1);
        roots.push(1.0);
        for q in 1..=p {
            roots.push(seq.root(q).exp());
        }
        SequenceExport {
            schema: "weightgrowth.sequence/1".into(),
            label: seq.label().to_string(),
            p,
            flags: seq.flags(),
            log_mu: seq.log_mu_slice().to_vec(),
            log_m: seq.log_m_slice().to_vec(),
            roots,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn cfg_for(seq: &WeightSequence) -> TruncationConfig {
        TruncationConfig::with_p(seq.truncation())
    }

    #[test]
    fn constant_quotients() {
        let seq = WeightSequence::from_log_quotients(&[0.0; 11], SequenceFlags {
            log_convex: true,
            normalized: true,
            divergent_quotients: false,
        })
        .unwrap();
        assert_eq!(seq.truncation(), 10);
        for p in 0..=10 {
            assert_eq!(seq.log_m(p), 0.0); // M_p = 1
        }
        assert!(seq.flags().log_convex && seq.flags().normalized);
        assert!(!seq.flags().divergent_quotients);
    }

    #[test]
    fn factorial_from_quotients() {
        // mu_p = p gives M_p = p!
        let values: Vec<f64> = (0..=20).map(|p| if p == 0 { 0.0 } else { (p as f64).ln() }).collect();
        let seq = WeightSequence::from_log_quotients(&values, SequenceFlags::all()).unwrap();
        for p in 1..=20 {
            assert!((seq.log_m(p) - seq.log_factorial(p)).abs() < 1e-12);
        }
    }

    #[test]
    fn log_convex_flag_rejected_on_decrease() {
        let mut values = vec![0.0, 1.0, 2.0, 1.5, 3.0];
        let err = WeightSequence::from_log_quotients(&values, SequenceFlags {
            log_convex: true,
            normalized: true,
            divergent_quotients: false,
        });
        assert!(matches!(err, Err(Error::FlagViolation(_))));
        values[3] = 2.0;
        assert!(WeightSequence::from_log_quotients(&values, SequenceFlags {
            log_convex: true,
            normalized: true,
            divergent_quotients: false,
        })
        .is_ok());
    }

    #[test]
    fn non_finite_rejected() {
        let values = vec![0.0, f64::NAN, 1.0];
        assert!(matches!(
            WeightSequence::from_log_quotients(&values, SequenceFlags::none()),
            Err(Error::NonFinite { index: 1 })
        ));
    }

    #[test]
    fn gevrey_basics() {
        let g1 = WeightSequence::gevrey(1.0, 50).unwrap();
        // m_p = 1 for all p
        for p in 1..=50 {
            assert!(g1.log_m_norm(p).abs() < 1e-10);
        }
        let g2 = WeightSequence::gevrey(2.0, 100).unwrap();
        // mu_{2p}/mu_p = 4
        for p in 1..=50 {
            assert!((g2.log_mu(2 * p) - g2.log_mu(p) - 4.0_f64.ln()).abs() < 1e-12);
        }
        // (M_p)^{1/p} <= mu_p (log-convex + normalized)
        for p in 1..=100 {
            assert!(g2.root(p) <= g2.log_mu(p) + 1e-12);
        }
        assert!(WeightSequence::gevrey(0.5, 50).is_err());
    }

    #[test]
    fn q_gevrey_closed_forms() {
        let q2 = WeightSequence::q_gevrey(2.0, 50).unwrap();
        let l2 = 2.0_f64.ln();
        for p in 1..=50 {
            assert!((q2.log_m(p) - (p * p) as f64 * l2).abs() < 1e-9);
        }
        for p in 1..=25 {
            // mu_{2p}/mu_p = 2^{2p}
            assert!((q2.log_mu(2 * p) - q2.log_mu(p) - (2 * p) as f64 * l2).abs() < 1e-9);
            // (M_p)^4 <= M_{2p}, with equality
            assert!((4.0 * q2.log_m(p) - q2.log_m(2 * p)).abs() < 1e-9);
        }
        assert!(WeightSequence::q_gevrey(1.0, 50).is_err());
    }

    #[test]
    fn beta3_counterexample_structure() {
        let (seq, blocks) = WeightSequence::beta3_counterexample_with_blocks(4).unwrap();
        // a = 1, 2, 8, 64 -> P = 63
        assert_eq!(seq.truncation(), 63);
        assert_eq!(blocks[0].a_j, 1);
        assert_eq!(blocks[1].a_j, 2);
        assert_eq!(blocks[2].a_j, 8);
        // c_2 = 2^{a_3/(a_2-1)} = 2^8 = 256
        assert!((blocks[1].log_c - 256.0_f64.ln()).abs() < 1e-12);
        assert!(seq.flags().lc());

        let (seq5, blocks5) = WeightSequence::beta3_counterexample_with_blocks(5).unwrap();
        assert_eq!(seq5.truncation(), 1023);
        // quotient ratio exactly 1 inside blocks: mu_{Q a_j} = mu_{a_j} for Q <= j
        for b in &blocks5[1..] {
            let aj = b.a_j as usize;
            for q in 2..=b.j {
                if q * aj <= seq5.truncation() {
                    assert_eq!(seq5.log_mu(q * aj), seq5.log_mu(aj));
                }
            }
        }
        // root ratio >= 2 for p >= a_2, 2p <= P
        for p in 2..=511 {
            let ratio = seq5.root(2 * p) - seq5.root(p);
            assert!(
                ratio >= 2.0_f64.ln() - 1e-9,
                "root ratio below 2 at p = {p}: {ratio}"
            );
        }
        assert!(WeightSequence::beta3_counterexample(3).is_err());
    }

    #[test]
    fn root_power_identity_and_monotonicity() {
        let n = WeightSequence::gevrey(1.0, 100).unwrap();
        let l1 = n.root_power(1).unwrap();
        for p in 0..=100 {
            assert_eq!(l1.log_mu(p), n.log_mu(p));
        }
        let l2 = n.root_power(2).unwrap();
        for p in 1..=50 {
            // log L^2_p = (1/2) log (2p)!
            assert!((l2.log_m(p) - 0.5 * n.log_factorial(2 * p)).abs() < 1e-9);
        }
        // N <= L^2 <= L^3 pointwise on the common range
        let l3 = n.root_power(3).unwrap();
        for p in 1..=33 {
            assert!(n.log_m(p) <= l2.log_m(p) + 1e-9);
            assert!(l2.log_m(p) <= l3.log_m(p) + 1e-9);
        }
        assert!(n.root_power(60).is_err());
    }

    #[test]
    fn stirling_sandwich() {
        let t = log_factorial_table(2000);
        for p in 1..=2000 {
            let pf = p as f64;
            assert!(pf * pf.ln() - pf <= t[p] + 1e-9);
            assert!(t[p] <= pf * pf.ln() + 1e-9);
        }
    }

    #[test]
    fn preceq_reflexive_and_ordered() {
        let g1 = WeightSequence::gevrey(1.0, 200).unwrap();
        let g2 = WeightSequence::gevrey(2.0, 200).unwrap();
        let cfg = cfg_for(&g1);
        let refl = preceq(&g1, &g1, &cfg);
        assert_eq!(refl.status, Status::Holds);
        assert_eq!(refl.get("log_sup"), Some(0.0));

        let fwd = preceq(&g1, &g2, &cfg);
        assert_eq!(fwd.status, Status::Holds);

        let bwd = preceq(&g2, &g1, &cfg);
        assert_eq!(bwd.status, Status::Fails);
        assert!(bwd.notes.contains("diverging"));

        let eq = equivalent(&g1, &g2, &cfg);
        assert_eq!(eq.status, Status::Fails);
        let eq_same = equivalent(&g2, &g2, &cfg);
        assert_eq!(eq_same.status, Status::Holds);
    }

    #[test]
    fn preceq_transitive_on_conclusive_verdicts() {
        let g1 = WeightSequence::gevrey(1.0, 200).unwrap();
        let g2 = WeightSequence::gevrey(2.0, 200).unwrap();
        let g3 = WeightSequence::gevrey(3.0, 200).unwrap();
        let cfg = cfg_for(&g1);
        assert_eq!(preceq(&g1, &g2, &cfg).status, Status::Holds);
        assert_eq!(preceq(&g2, &g3, &cfg).status, Status::Holds);
        assert_eq!(preceq(&g1, &g3, &cfg).status, Status::Holds);
    }

    #[test]
    fn slc_regularization_fixed_points() {
        // gevrey(2): mu_q/q = q nondecreasing, so sigma = mu
        let g2 = WeightSequence::gevrey(2.0, 100).unwrap();
        let reg = slc_regularization(&g2);
        assert!(!reg.truncated_inf);
        for p in 1..=100 {
            assert!((reg.sequence.log_mu(p) - g2.log_mu(p)).abs() < 1e-12);
        }
        // gevrey(1): mu_q/q = 1 constant
        let g1 = WeightSequence::gevrey(1.0, 100).unwrap();
        let reg1 = slc_regularization(&g1);
        for p in 1..=100 {
            assert!((reg1.sequence.log_mu(p) - g1.log_mu(p)).abs() < 1e-12);
        }
    }

    #[test]
    fn slc_regularization_on_counterexample() {
        let cex = WeightSequence::beta3_counterexample(5).unwrap();
        let reg = slc_regularization(&cex);
        let s = &reg.sequence;
        // sigma_p/p nondecreasing and sigma_p <= mu_p
        for p in 1..s.truncation() {
            let slope_p = s.log_mu(p) - (p as f64).ln();
            let slope_next = s.log_mu(p + 1) - ((p + 1) as f64).ln();
            assert!(slope_next >= slope_p - 1e-12);
        }
        for p in 1..=s.truncation() {
            assert!(s.log_mu(p) <= cex.log_mu(p) + 1e-12);
        }
    }

    #[test]
    fn spec_parsing() {
        let spec: SequenceSpec =
            serde_json::from_str(r#"{"family":"gevrey","params":{"s":2},"P":50}"#).unwrap();
        let seq = spec.build().unwrap();
        assert_eq!(seq.truncation(), 50);
        let spec: SequenceSpec = serde_json::from_str(r#"{"log_mu":[0.0,0.5,1.0,1.5]}"#).unwrap();
        let seq = spec.build().unwrap();
        assert!(seq.flags().log_convex);
        let bad: SequenceSpec = serde_json::from_str(r#"{"family":"nope","P":10}"#).unwrap();
        assert!(bad.build().is_err());
    }

    proptest! {
        /// Any nondecreasing nonnegative quotient profile is accepted with
        /// full structural flags, and its roots never exceed its quotients.
        #[test]
        fn lc_membership_invariants(incr in proptest::collection::vec(0.0_f64..0.5, 16..64)) {
            let mut log_mu = vec![0.0];
            let mut acc = 0.05; // keep mu_1 >= 1 and guarantee tail growth
            for d in &incr {
                acc += d + 0.01;
                log_mu.push(acc);
            }
            let seq = WeightSequence::from_log_quotients(&log_mu, SequenceFlags::all()).unwrap();
            prop_assert!(seq.flags().lc());
            let p_max = seq.truncation();
            for p in 1..p_max {
                // (1/p) log M_p nondecreasing and dominated by log mu_p
                prop_assert!(seq.root(p + 1) >= seq.root(p) - 1e-12);
                prop_assert!(seq.root(p) <= seq.log_mu(p) + 1e-12);
            }
        }

        /// Root-power sequences are ordered in C (L^C <= L^D for C <= D).
        #[test]
        fn root_power_ordering(incr in proptest::collection::vec(0.0_f64..0.4, 40..80)) {
            let mut log_mu = vec![0.0];
            let mut acc = 0.0;
            for d in &incr {
                acc += d;
                log_mu.push(acc);
            }
            let seq = WeightSequence::from_log_quotients(&log_mu, SequenceFlags {
                log_convex: true, normalized: true, divergent_quotients: false,
            }).unwrap();
            let c = 2;
            let d = 3;
            if let (Ok(lc), Ok(ld)) = (seq.root_power(c), seq.root_power(d)) {
                let common = lc.truncation().min(ld.truncation());
                for p in 1..=common {
                    prop_assert!(lc.log_m(p) <= ld.log_m(p) + 1e-9);
                }
            }
        }
    }
}
