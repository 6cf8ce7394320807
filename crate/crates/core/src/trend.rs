//! Windowed surrogates for `sup`, `liminf` and `limsup` statements.
//!
//! A finite truncation cannot decide an asymptotic statement, so every
//! estimator here reports (a) the extremum actually observed and (b) a trend
//! classification obtained from running extrema at geometric checkpoints
//! (quarter, half, full range). A sup that keeps climbing octave after
//! octave is reported as diverging; one whose increments decay is treated as
//! bounded on the window.

/// Trend of a running extremum across the last two octaves of the range.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Trend {
    /// Latest octave moved the extremum by less than `eps`.
    Stable,
    /// Still moving, but increments decay octave over octave.
    Decelerating,
    /// Still moving at a non-decaying rate, but the total movement over the
    /// watched octaves is below the rise floor.
    Creeping,
    /// Increment ratio inside the indecision band between decay and steady
    /// climb: the window cannot make a confident call either way.
    Ambiguous,
    /// Moving at a non-decaying rate beyond the rise floor: diverging as far
    /// as the data can tell.
    Rising,
}

impl Trend {
    /// Whether the running extremum can be treated as bounded on the window.
    pub fn bounded(self) -> bool {
        matches!(self, Trend::Stable | Trend::Decelerating | Trend::Creeping)
    }

    /// Whether the window positively refutes boundedness.
    pub fn diverging(self) -> bool {
        matches!(self, Trend::Rising)
    }

    pub fn describe(self) -> &'static str {
        match self {
            Trend::Stable => "stable",
            Trend::Decelerating => "decelerating",
            Trend::Creeping => "creeping (sub-floor rise)",
            Trend::Ambiguous => "in the indecision band",
            Trend::Rising => "still rising at truncation",
        }
    }
}

/// Result of a running-sup scan.
#[derive(Debug, Clone, Copy)]
pub struct SupScan {
    /// Sup over the whole range.
    pub sup: f64,
    /// Position (index into the scanned slice) where the sup is attained.
    pub arg: usize,
    pub trend: Trend,
    /// Increment of the running sup over the second-to-last octave.
    pub d_early: f64,
    /// Increment over the last octave.
    pub d_late: f64,
}

const DECEL_FACTOR: f64 = 0.75;
const CLEAR_RISE_FACTOR: f64 = 0.95;

/// Scan a running sup over `values` (in evaluation order) and classify its
/// trend. `eps` is the float-noise tolerance, `rise_floor` the total
/// movement over the last two octaves above which a non-decaying climb
/// counts as divergence.
pub fn sup_scan(values: &[f64], eps: f64, rise_floor: f64) -> SupScan {
    assert!(!values.is_empty(), "sup_scan over empty range");
    let n = values.len();
    let mut running = Vec::with_capacity(n);
    let mut best = f64::NEG_INFINITY;
    let mut arg = 0;
    for (i, &v) in values.iter().enumerate() {
        if v > best {
            best = v;
            arg = i;
        }
        running.push(best);
    }
    if n < 4 {
        let moved = running[n - 1] - running[0];
        let trend = if moved <= eps { Trend::Stable } else { Trend::Creeping };
        return SupScan { sup: best, arg, trend, d_early: 0.0, d_late: moved };
    }
    let q1 = running[n / 4];
    let q2 = running[n / 2];
    let q3 = running[n - 1];
    let d_early = q2 - q1;
    let d_late = q3 - q2;
    let trend = if d_late <= eps {
        Trend::Stable
    } else if d_late <= DECEL_FACTOR * d_early {
        Trend::Decelerating
    } else if d_early + d_late <= rise_floor {
        Trend::Creeping
    } else if d_late > CLEAR_RISE_FACTOR * d_early {
        Trend::Rising
    } else {
        Trend::Ambiguous
    };
    SupScan { sup: best, arg, trend, d_early, d_late }
}

/// Running-inf mirror of [`sup_scan`].
pub fn inf_scan(values: &[f64], eps: f64, rise_floor: f64) -> SupScan {
    let negated: Vec<f64> = values.iter().map(|v| -v).collect();
    let scan = sup_scan(&negated, eps, rise_floor);
    SupScan { sup: -scan.sup, ..scan }
}

/// Outcome of a windowed `liminf > threshold` test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LiminfOutcome {
    /// Even the most pessimistic window value clears the threshold.
    Holds,
    /// Values at or below the threshold persist into the last quarter of the
    /// window, so the data itself refutes the strict inequality.
    Fails,
    /// The window minimum misses the threshold but the tail has risen past
    /// it: the dip may be transient, the window cannot tell.
    Inconclusive,
}

/// Windowed liminf estimate of `values` (already restricted to the tail
/// window, in index order) tested against `threshold` with slack `margin`.
///
/// Returns `(outcome, window_min, argmin, last_quarter_min, last_argmin)`.
pub fn liminf_vs_threshold(
    values: &[f64],
    threshold: f64,
    margin: f64,
) -> (LiminfOutcome, f64, usize, f64, usize) {
    assert!(!values.is_empty(), "liminf over empty window");
    let n = values.len();
    let (mut min_full, mut arg_full) = (f64::INFINITY, 0);
    for (i, &v) in values.iter().enumerate() {
        if v < min_full {
            min_full = v;
            arg_full = i;
        }
    }
    let last_start = n - (n / 4).max(1);
    let (mut min_last, mut arg_last) = (f64::INFINITY, last_start);
    for (i, &v) in values.iter().enumerate().skip(last_start) {
        if v < min_last {
            min_last = v;
            arg_last = i;
        }
    }
    let outcome = if min_full > threshold + margin {
        LiminfOutcome::Holds
    } else if min_last <= threshold + margin {
        LiminfOutcome::Fails
    } else {
        LiminfOutcome::Inconclusive
    };
    (outcome, min_full, arg_full, min_last, arg_last)
}

/// Windowed limsup estimate: maximum over the last quarter of the window
/// (the most asymptotic data available) together with the full-window max.
pub fn windowed_limsup(values: &[f64]) -> (f64, f64) {
    assert!(!values.is_empty());
    let n = values.len();
    let last_start = n - (n / 4).max(1);
    let max_last = values[last_start..].iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let max_full = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    (max_last, max_full)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_is_stable() {
        let v = vec![1.5; 64];
        let s = sup_scan(&v, 1e-6, 0.1);
        assert_eq!(s.trend, Trend::Stable);
        assert_eq!(s.sup, 1.5);
    }

    #[test]
    fn log_growth_is_rising() {
        let v: Vec<f64> = (1..=256).map(|p| (p as f64).ln()).collect();
        let s = sup_scan(&v, 1e-6, 0.1);
        assert_eq!(s.trend, Trend::Rising);
    }

    #[test]
    fn harmonic_approach_decelerates() {
        // 2 - 1/p climbs forever but with geometrically decaying octave gains.
        let v: Vec<f64> = (1..=256).map(|p| 2.0 - 1.0 / p as f64).collect();
        let s = sup_scan(&v, 1e-9, 0.1);
        assert_eq!(s.trend, Trend::Decelerating);
        assert!((s.sup - (2.0 - 1.0 / 256.0)).abs() < 1e-12);
    }

    #[test]
    fn tiny_drift_is_creeping() {
        let v: Vec<f64> = (1..=256).map(|p| 1e-4 * (p as f64).ln()).collect();
        let s = sup_scan(&v, 1e-6, 0.1);
        assert_eq!(s.trend, Trend::Creeping);
    }

    #[test]
    fn liminf_three_states() {
        let high = vec![2.0; 40];
        assert_eq!(liminf_vs_threshold(&high, 1.0, 0.01).0, LiminfOutcome::Holds);
        let flat = vec![1.0; 40];
        assert_eq!(liminf_vs_threshold(&flat, 1.0, 0.01).0, LiminfOutcome::Fails);
        // early dip, tail clear of the threshold
        let mut rising = vec![0.5];
        rising.extend(std::iter::repeat(3.0).take(39));
        assert_eq!(liminf_vs_threshold(&rising, 1.0, 0.01).0, LiminfOutcome::Inconclusive);
    }

    #[test]
    fn inf_scan_mirrors_sup_scan() {
        let v: Vec<f64> = (1..=128).map(|p| -((p as f64).ln())).collect();
        let s = inf_scan(&v, 1e-6, 0.1);
        assert_eq!(s.trend, Trend::Rising);
        assert!((s.sup - v[127]).abs() < 1e-12);
    }
}
