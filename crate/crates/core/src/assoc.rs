//! The associated weight function `omega_M(t) = sup_p log(t^p / M_p)`.
//!
//! For log-convex `M` the sup is computed in O(log P) from the sorted
//! quotient array: with `k(t) = #{p >= 1 : mu_p <= t}` one has
//! `omega_M(t) = k(t) ln t - ln M_{k(t)}` (the counting form of the classical
//! integral representation). The defining sup is kept as a brute-force
//! oracle for cross-checking.

use crate::config::TruncationConfig;
use crate::error::{Error, Result};
use crate::seq::WeightSequence;

/// Evaluation state for `omega_M`: the (nondecreasing) log-quotients plus
/// prefix sums. Immutable after construction.
#[derive(Debug, Clone)]
pub struct AssocWeight {
    log_mu: Vec<f64>,
    log_m: Vec<f64>,
    label: String,
}

impl AssocWeight {
    /// Requires the full structural flags: the counting form needs `mu`
    /// nondecreasing, and the sup is finite for all t only when the roots
    /// diverge.
    pub fn new(m: &WeightSequence) -> Result<Self> {
        if !m.flags().log_convex || !m.flags().normalized {
            return Err(Error::FlagViolation(format!(
                "omega_M needs a log-convex normalized sequence, got flags {:?}",
                m.flags()
            )));
        }
        Ok(AssocWeight {
            log_mu: m.log_mu_slice().to_vec(),
            log_m: m.log_m_slice().to_vec(),
            label: m.label().to_string(),
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn truncation(&self) -> usize {
        self.log_mu.len() - 1
    }

    /// `ln mu_P`: the data certifies the sup only for `ln t` up to here.
    pub fn ln_t_max(&self) -> f64 {
        *self.log_mu.last().unwrap()
    }

    /// `ln mu_1` (the function vanishes on `[0, mu_1]`).
    pub fn ln_mu_1(&self) -> f64 {
        self.log_mu[1]
    }

    /// Largest p with `ln mu_p <= x`, i.e. the counting index `k(e^x)`.
    pub fn count_index(&self, x: f64) -> usize {
        // log_mu[1..] is nondecreasing; find the first index > x
        let tail = &self.log_mu[1..];
        tail.partition_point(|&v| v <= x)
    }

    /// Evaluate at `ln t = x`. Total on all of R: the function is 0 below
    /// `ln mu_1` for normalized sequences; beyond `ln mu_P` the finite data
    /// understates the sup, so that is a domain error in [`Self::eval`].
    pub fn eval_ln(&self, x: f64) -> f64 {
        if x <= self.log_mu[1] {
            return 0.0;
        }
        let k = self.count_index(x);
        k as f64 * x - self.log_m[k]
    }

    /// Evaluate at `t >= 0`, enforcing the certified domain `[0, mu_P]`.
    pub fn eval(&self, t: f64) -> Result<f64> {
        if !(t >= 0.0) {
            return Err(Error::Domain(format!("omega_M needs t >= 0, got {t}")));
        }
        if t == 0.0 {
            return Ok(0.0);
        }
        let x = t.ln();
        if x > self.ln_t_max() + 1e-12 {
            return Err(Error::Domain(format!(
                "t = {t} beyond mu_P = e^{:.6}: the truncated data cannot certify the sup",
                self.ln_t_max()
            )));
        }
        Ok(self.eval_ln(x))
    }
}

/// Brute-force oracle: `max_{0 <= p <= p_max} (p ln t - ln M_p)` straight
/// from the definition.
pub fn omega_m_bruteforce(m: &WeightSequence, t: f64, p_max: usize) -> Result<f64> {
    if !(t >= 0.0) {
        return Err(Error::Domain(format!("omega_M needs t >= 0, got {t}")));
    }
    if p_max > m.truncation() {
        return Err(Error::Domain(format!(
            "p_max = {p_max} beyond truncation {}",
            m.truncation()
        )));
    }
    if t == 0.0 {
        return Ok(0.0);
    }
    let x = t.ln();
    let mut best = 0.0_f64; // p = 0 term
    for p in 1..=p_max {
        best = best.max(p as f64 * x - m.log_m(p));
    }
    Ok(best)
}

/// Reconstruct `ln M_p` from the associated function via
/// `M_p = sup_{t>=0} t^p / exp(omega_M(t))`.
///
/// The sup is scanned on a geometric base grid and then polished by
/// golden-section over `ln t` inside the analytically known maximizer band
/// `[mu_p, mu_{p+1}]` (where the counting index equals p).
pub fn recover_log_m(m: &WeightSequence, p: usize, cfg: &TruncationConfig) -> Result<f64> {
    if p >= m.truncation() {
        return Err(Error::Domain(format!(
            "recover needs p < P (p = {p}, P = {})",
            m.truncation()
        )));
    }
    if p == 0 {
        return Ok(0.0);
    }
    let w = AssocWeight::new(m)?;
    let objective = |x: f64| p as f64 * x - w.eval_ln(x);

    // base grid over the certified domain
    let lo = w.ln_mu_1().min(0.0) - 1.0;
    let hi = w.ln_t_max();
    let n = cfg.t_grid.points.max(64);
    let mut best = f64::NEG_INFINITY;
    for i in 0..=n {
        let x = lo + (hi - lo) * i as f64 / n as f64;
        best = best.max(objective(x));
    }

    // golden-section polish on the maximizer band
    let band_lo = m.log_mu(p) - 1.0;
    let band_hi = m.log_mu(p + 1) + 1.0;
    best = best.max(golden_max(objective, band_lo, band_hi, 200));
    Ok(best)
}

/// Golden-section maximum of a unimodal (or concave, possibly with plateau)
/// function on `[a, b]`.
pub(crate) fn golden_max(f: impl Fn(f64) -> f64, a: f64, b: f64, iters: usize) -> f64 {
    let inv_phi: f64 = (5.0_f64.sqrt() - 1.0) / 2.0;
    let mut lo = a;
    let mut hi = b;
    let mut x1 = hi - inv_phi * (hi - lo);
    let mut x2 = lo + inv_phi * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    for _ in 0..iters {
        if hi - lo < 1e-14 * (1.0 + hi.abs()) {
            break;
        }
        if f1 < f2 {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1);
        }
    }
    f(0.5 * (lo + hi)).max(f1).max(f2)
}

/// CSV rows `(t, omega_M(t))` on a geometric grid inside the certified
/// domain.
pub fn omega_csv(m: &WeightSequence, t_min: f64, t_max: f64, points: usize) -> Result<String> {
    if !(t_min > 0.0) || t_max <= t_min || points < 2 {
        return Err(Error::Domain("need 0 < t_min < t_max and >= 2 points".into()));
    }
    let w = AssocWeight::new(m)?;
    let lo = t_min.ln();
    let hi = t_max.ln().min(w.ln_t_max());
    let mut out = String::from("t,omega\n");
    for i in 0..points {
        let x = lo + (hi - lo) * i as f64 / (points - 1) as f64;
        out.push_str(&format!("{},{}\n", x.exp(), w.eval_ln(x)));
    }
    Ok(out)
}
