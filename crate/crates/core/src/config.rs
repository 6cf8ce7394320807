use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Geometric evaluation grid for function-side estimators.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
#[serde(default)]
pub struct TGrid {
    pub t_min: f64,
    pub t_max: f64,
    pub points: usize,
}

impl Default for TGrid {
    fn default() -> Self {
        // A very large default cap keeps the per-lambda window bias of
        // limsup estimators (which decays like 1/log t_max) below the
        // strictness margin. Sequence-backed weights are capped at mu_P.
        TGrid {
            t_min: 1e-2,
            t_max: 1e30,
            points: 480,
        }
    }
}

/// Truncation and tolerance state shared by all estimators.
///
/// The paper's conditions are asymptotic; this struct holds every decision a
/// finite artifact has to make: the truncation `P`, where the "asymptotic
/// window" starts, search bounds for existential integer parameters, the
/// evaluation grid and the randomness seed.
///
/// Two tolerances are used throughout: `eps` separates float noise in exact
/// identities, `margin` is the slack demanded from strict inequalities
/// (`liminf > 1` style) and from stabilization tests.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default)]
pub struct TruncationConfig {
    #[serde(rename = "P")]
    pub p: usize,
    pub tail_lo: usize,
    pub eps: f64,
    pub margin: f64,
    #[serde(rename = "L_max")]
    pub l_max: usize,
    #[serde(rename = "Q_max")]
    pub q_max: usize,
    pub lambda_max: usize,
    pub t_grid: TGrid,
    pub seed: u64,
}

impl Default for TruncationConfig {
    fn default() -> Self {
        TruncationConfig {
            p: 200,
            tail_lo: 100,
            eps: 1e-6,
            margin: 1e-2,
            l_max: 16,
            q_max: 16,
            lambda_max: 64,
            t_grid: TGrid::default(),
            seed: 7,
        }
    }
}

impl TruncationConfig {
    /// Default config with the working truncation set to `p` and the tail
    /// window starting at `ceil(p/2)`.
    pub fn with_p(p: usize) -> Self {
        TruncationConfig {
            p,
            tail_lo: p.div_ceil(2),
            ..TruncationConfig::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.p < 4 {
            return Err(Error::Config("P must be at least 4".into()));
        }
        if self.tail_lo < 1 || self.tail_lo >= self.p {
            return Err(Error::Config(format!(
                "tail_lo must satisfy 1 <= tail_lo < P (got {} vs P = {})",
                self.tail_lo, self.p
            )));
        }
        if self.l_max < 2 || self.q_max < 2 || self.lambda_max < 2 {
            return Err(Error::Config("search bounds must be >= 2".into()));
        }
        if !(self.eps > 0.0) || !(self.margin > 0.0) {
            return Err(Error::Config("eps and margin must be positive".into()));
        }
        if !(self.t_grid.t_min > 0.0) || self.t_grid.t_max <= self.t_grid.t_min {
            return Err(Error::Config("t grid must satisfy 0 < t_min < t_max".into()));
        }
        if self.t_grid.points < 16 {
            return Err(Error::Config("t grid needs at least 16 points".into()));
        }
        Ok(())
    }

    /// Tail window `[lo, hi]` for an estimator whose index range ends at
    /// `n` (<= P). The configured `tail_lo / P` fraction is kept so that
    /// conditions evaluated on shortened ranges (e.g. `p <= P/Q`) still get a
    /// proportionate asymptotic window.
    pub fn tail_window(&self, n: usize) -> (usize, usize) {
        let frac = self.tail_lo as f64 / self.p as f64;
        let lo = ((n as f64 * frac).ceil() as usize).clamp(1, n.saturating_sub(1).max(1));
        (lo, n)
    }

    /// Total rise over the watched octaves that a running sup may show and
    /// still count as bounded ("creeping"); beyond it the sup is diverging.
    pub fn rise_floor(&self) -> f64 {
        10.0 * self.margin
    }

    /// Multiplicative strictness threshold in log scale: `ln(1 + margin)`.
    pub fn log_margin(&self) -> f64 {
        self.margin.ln_1p()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_are_valid() {
        TruncationConfig::default().validate().unwrap();
    }

    #[test]
    fn tail_window_scales_with_range() {
        let cfg = TruncationConfig::default();
        assert_eq!(cfg.tail_window(200), (100, 200));
        assert_eq!(cfg.tail_window(100), (50, 100));
        let (lo, hi) = cfg.tail_window(13);
        assert!(lo >= 1 && lo < hi && hi == 13);
    }

    #[test]
    fn bad_configs_rejected() {
        let mut cfg = TruncationConfig::default();
        cfg.tail_lo = cfg.p;
        assert!(cfg.validate().is_err());
        let mut cfg = TruncationConfig::default();
        cfg.t_grid.t_min = 0.0;
        assert!(cfg.validate().is_err());
    }
}
