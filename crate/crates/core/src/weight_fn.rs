//! Weight functions, the Young conjugate and function-side growth
//! conditions.
//!
//! A [`WeightFunction`] wraps either a closed-form family or a
//! sequence-backed associated function; evaluation is done in `ln t` so that
//! sequence-backed domains (which can reach `ln mu_P` in the hundreds) never
//! require exponentiating out of range.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::assoc::{golden_max, AssocWeight};
use crate::config::TruncationConfig;
use crate::error::{Error, Result};
use crate::seq::WeightSequence;
use crate::trend::{sup_scan, Trend};
use crate::verdict::{ConditionId, ConditionVerdict, Status};

/// Upper end of the "small t" region used when splitting additive from
/// multiplicative constants in the subadditivity checks. The normalization
/// plateau makes additive constants unavoidable near t = 1; e^2 is far
/// enough out to expose them and still tiny against the grid cap.
const SMALL_T_CAP_LN: f64 = 2.0;

/// A lambda slice is only trusted when its usable t range tops out well
/// beyond the small-t region; otherwise the slice's "tail" is not
/// asymptotic and would poison ratio extraction.
const MIN_TAIL_TOP_LN: f64 = SMALL_T_CAP_LN + 4.0;

/// Largest `ln t` any estimator will exponentiate.
const LN_T_HARD_CAP: f64 = 690.0;

/// Default bisection cap for the growth index gamma(omega); larger values
/// report a sentinel.
pub const GAMMA_MAX: f64 = 8.0;

/// Closed-form weight families.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum ClosedFormFamily {
    /// `max(0, t^alpha - 1)`, `alpha` in (0, 2].
    Power { alpha: f64 },
    /// `t ln t` for t >= 1, zero below.
    TLogT,
    /// `(ln t)^beta` for t >= 1, zero below; `beta >= 1`.
    LogPower { beta: f64 },
    /// `max(0, t - 1)`.
    Linear,
}

#[derive(Debug, Clone)]
enum FnKind {
    Closed(ClosedFormFamily),
    Sequence(AssocWeight),
}

/// An evaluable nondecreasing weight function with domain metadata.
#[derive(Debug, Clone)]
pub struct WeightFunction {
    kind: FnKind,
    ln_t_max: f64,
    family_tag: String,
    /// Whether `y -> omega(e^y)` is known convex (true for all built-in
    /// families and associated functions); enables unimodal conjugate search.
    convex_phi: bool,
}

impl WeightFunction {
    pub fn closed_form(family: ClosedFormFamily, t_max: f64) -> Result<Self> {
        match family {
            ClosedFormFamily::Power { alpha } => {
                if !(alpha > 0.0 && alpha <= 2.0) {
                    return Err(Error::InvalidParameter(format!(
                        "power family needs alpha in (0, 2], got {alpha}"
                    )));
                }
            }
            ClosedFormFamily::LogPower { beta } => {
                if !(beta >= 1.0) {
                    return Err(Error::InvalidParameter(format!(
                        "log-power family needs beta >= 1, got {beta}"
                    )));
                }
            }
            _ => {}
        }
        if !(t_max > 1.0) {
            return Err(Error::InvalidParameter("t_max must exceed 1".into()));
        }
        let family_tag = match family {
            ClosedFormFamily::Power { alpha } => format!("power({alpha})"),
            ClosedFormFamily::TLogT => "t_log_t".into(),
            ClosedFormFamily::LogPower { beta } => format!("log_power({beta})"),
            ClosedFormFamily::Linear => "linear".into(),
        };
        Ok(WeightFunction {
            kind: FnKind::Closed(family),
            ln_t_max: t_max.ln().min(LN_T_HARD_CAP),
            family_tag,
            convex_phi: true,
        })
    }

    /// Sequence-backed `omega_M`; the certified domain is `[0, mu_P]`.
    pub fn of_sequence(m: &WeightSequence) -> Result<Self> {
        let w = AssocWeight::new(m)?;
        let ln_t_max = w.ln_t_max().min(LN_T_HARD_CAP);
        Ok(WeightFunction {
            family_tag: format!("omega_M of {}", m.label()),
            kind: FnKind::Sequence(w),
            ln_t_max,
            convex_phi: true,
        })
    }

    pub fn family_tag(&self) -> &str {
        &self.family_tag
    }

    pub fn ln_t_max(&self) -> f64 {
        self.ln_t_max
    }

    /// Evaluate at `ln t = x` (total on R; all families vanish for t <= 1).
    pub fn eval_ln(&self, x: f64) -> f64 {
        match &self.kind {
            FnKind::Closed(fam) => match fam {
                ClosedFormFamily::Power { alpha } => {
                    if x <= 0.0 {
                        0.0
                    } else {
                        (alpha * x).exp() - 1.0
                    }
                }
                ClosedFormFamily::TLogT => {
                    if x <= 0.0 {
                        0.0
                    } else {
                        x.exp() * x
                    }
                }
                ClosedFormFamily::LogPower { beta } => {
                    if x <= 0.0 {
                        0.0
                    } else {
                        x.powf(*beta)
                    }
                }
                ClosedFormFamily::Linear => {
                    if x <= 0.0 {
                        0.0
                    } else {
                        x.exp() - 1.0
                    }
                }
            },
            FnKind::Sequence(w) => w.eval_ln(x),
        }
    }

    /// Evaluate at `t >= 0` within the certified domain.
    pub fn eval(&self, t: f64) -> Result<f64> {
        if !(t >= 0.0) {
            return Err(Error::Domain(format!("weight needs t >= 0, got {t}")));
        }
        if t == 0.0 {
            return Ok(0.0);
        }
        let x = t.ln();
        if x > self.ln_t_max + 1e-12 {
            return Err(Error::Domain(format!(
                "t = {t} beyond the certified domain (ln t_max = {:.4})",
                self.ln_t_max
            )));
        }
        Ok(self.eval_ln(x))
    }

    /// Geometric evaluation grid in `ln t`, clipped to the certified domain
    /// shortened by `headroom` (room for arguments like `lambda * t`).
    fn grid(&self, cfg: &TruncationConfig, headroom: f64) -> Vec<f64> {
        let lo = cfg.t_grid.t_min.ln();
        let hi = (self.ln_t_max - headroom).min(cfg.t_grid.t_max.ln());
        let n = cfg.t_grid.points;
        if hi <= lo {
            return Vec::new();
        }
        (0..=n).map(|i| lo + (hi - lo) * i as f64 / n as f64).collect()
    }
}

/// Legendre-Fenchel-Young conjugate `phi*(x) = sup_{y>=0} (x y - omega(e^y))`.
///
/// The objective is concave when `phi` is convex, so a grid pass plus a
/// golden-section polish brackets the sup. A maximizer at the domain cap
/// means the data cannot bracket the true sup: that is an error, not a value.
pub fn phi_star(omega: &WeightFunction, x: f64) -> Result<f64> {
    if !(x >= 0.0) {
        return Err(Error::Domain(format!("conjugate needs x >= 0, got {x}")));
    }
    if x == 0.0 {
        return Ok(0.0);
    }
    let hi = omega.ln_t_max;
    let f = |y: f64| x * y - omega.eval_ln(y);
    let n = if omega.convex_phi { 160 } else { 640 };
    let mut best = f(0.0);
    let mut best_i = 0usize;
    for i in 1..=n {
        let y = hi * i as f64 / n as f64;
        let v = f(y);
        if v > best {
            best = v;
            best_i = i;
        }
    }
    if best_i == n {
        return Err(Error::ConjugateDomain { x });
    }
    let step = hi / n as f64;
    let lo_b = step * (best_i.saturating_sub(1)) as f64;
    let hi_b = step * (best_i + 1) as f64;
    Ok(best.max(golden_max(f, lo_b, hi_b, 220)))
}

/// Biconjugate `phi**(y) = sup_{x>=0} (x y - phi*(x))`, evaluated
/// numerically; equals `phi(y) = omega(e^y)` for convex normalized weights.
pub fn phi_star_star(omega: &WeightFunction, y: f64, x_max: f64) -> Result<f64> {
    if !(y >= 0.0) {
        return Err(Error::Domain("biconjugate needs y >= 0".into()));
    }
    let n = 200;
    let mut best = 0.0_f64;
    let mut best_i = 0usize;
    let mut cap = x_max;
    // shrink the x range if the conjugate runs out of domain
    while cap > 1.0 {
        if phi_star(omega, cap).is_ok() {
            break;
        }
        cap *= 0.5;
    }
    for i in 0..=n {
        let x = cap * i as f64 / n as f64;
        let v = x * y - phi_star(omega, x)?;
        if v > best {
            best = v;
            best_i = i;
        }
    }
    let step = cap / n as f64;
    let f = |x: f64| {
        let x = x.max(0.0);
        x * y - phi_star(omega, x).unwrap_or(f64::INFINITY)
    };
    let lo_b = step * best_i.saturating_sub(1) as f64;
    let hi_b = (step * (best_i + 1) as f64).min(cap);
    Ok(best.max(golden_max(f, lo_b, hi_b, 120)))
}

fn bounded_ratio_verdict(
    id: ConditionId,
    values: &[f64],
    cfg: &TruncationConfig,
    witness: &str,
) -> ConditionVerdict {
    let window = (1, values.len());
    if values.len() < 16 {
        return ConditionVerdict::new(id, Status::Inconclusive, window)
            .note("grid too small after domain clipping");
    }
    // trend-scan only the tail half: the approach out of the normalization
    // plateau toward the asymptotic level is not divergence
    let scan = sup_scan(&values[values.len() / 2..], cfg.eps, cfg.rise_floor());
    if scan.trend.bounded() {
        let mut v = ConditionVerdict::new(id, Status::Holds, window)
            .witness(witness, scan.sup)
            .margin(scan.d_late)
            .note(&format!("windowed sup trend: {}", scan.trend.describe()));
        if scan.trend == Trend::Creeping {
            v = v.note("sup creeping below the rise floor; bounded on this window");
        }
        v
    } else if scan.trend.diverging() {
        ConditionVerdict::new(id, Status::Fails, window)
            .witness(&format!("{witness}_at_truncation"), scan.sup)
            .note("diverging witness: ratio still rising at the domain edge")
    } else {
        ConditionVerdict::new(id, Status::Inconclusive, window)
            .witness(&format!("{witness}_at_truncation"), scan.sup)
            .note("ratio trend in the indecision band")
    }
}

fn small_o_verdict(id: ConditionId, values: &[f64], cfg: &TruncationConfig) -> ConditionVerdict {
    let window = (1, values.len());
    if values.len() < 16 {
        return ConditionVerdict::new(id, Status::Inconclusive, window)
            .note("grid too small after domain clipping");
    }
    let n = values.len();
    let q3 = values[n / 2..3 * n / 4].iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let q4 = values[3 * n / 4..].iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if q4 <= 0.8 * q3 + cfg.eps {
        ConditionVerdict::new(id, Status::Holds, window)
            .witness("late_ratio", q4)
            .margin(0.8 * q3 - q4)
            .note("ratio decays octave over octave")
    } else if q4 > 0.9 * q3 && q4 > cfg.margin {
        ConditionVerdict::new(id, Status::Fails, window)
            .witness("late_ratio", q4)
            .witness("earlier_ratio", q3)
            .note("ratio not decaying on the window")
    } else {
        ConditionVerdict::new(id, Status::Inconclusive, window)
            .witness("late_ratio", q4)
            .note("decay too slow to classify on this window")
    }
}

/// Doubling condition `omega(2t) <= L (omega(t) + 1)`.
pub fn check_omega1_fn(omega: &WeightFunction, cfg: &TruncationConfig) -> ConditionVerdict {
    let ln2 = std::f64::consts::LN_2;
    let g1 = omega.grid(cfg, ln2);
    let vals: Vec<f64> = g1
        .iter()
        .map(|&x| omega.eval_ln(x + ln2) / (omega.eval_ln(x) + 1.0))
        .collect();
    bounded_ratio_verdict(ConditionId::Omega1, &vals, cfg, "L")
}

/// Audit the basic weight conditions (normalization, doubling, O(t)/o(t)
/// growth, convexity in ln t, log domination, the square-absorption
/// condition).
pub fn check_omega_conditions(
    omega: &WeightFunction,
    cfg: &TruncationConfig,
) -> BTreeMap<ConditionId, ConditionVerdict> {
    let mut out = BTreeMap::new();

    // (omega_0): vanishing on [0, 1]
    let mut worst: f64 = 0.0;
    for i in 0..=64 {
        let x = cfg.t_grid.t_min.ln() * i as f64 / 64.0; // from ln t_min up to 0
        worst = worst.max(omega.eval_ln(x).abs());
    }
    out.insert(
        ConditionId::Omega0,
        if worst <= cfg.eps {
            ConditionVerdict::new(ConditionId::Omega0, Status::Holds, (0, 1)).margin(cfg.eps - worst)
        } else {
            ConditionVerdict::new(ConditionId::Omega0, Status::Fails, (0, 1))
                .witness("max_on_unit_interval", worst)
        },
    );

    out.insert(ConditionId::Omega1, check_omega1_fn(omega, cfg));

    // (omega_2): omega(t) = O(t); (omega_5): omega(t) = o(t)
    let g = omega.grid(cfg, 0.0);
    let lin: Vec<f64> = g.iter().map(|&x| omega.eval_ln(x) * (-x).exp()).collect();
    out.insert(
        ConditionId::Omega2,
        bounded_ratio_verdict(ConditionId::Omega2, &lin, cfg, "C"),
    );
    out.insert(ConditionId::Omega5, small_o_verdict(ConditionId::Omega5, &lin, cfg));

    // (omega_3): log t = o(omega(t)) -- evaluate where omega > 0
    let logs: Vec<f64> = g
        .iter()
        .filter(|&&x| omega.eval_ln(x) > cfg.eps && x > 0.0)
        .map(|&x| x / omega.eval_ln(x))
        .collect();
    out.insert(ConditionId::Omega3, small_o_verdict(ConditionId::Omega3, &logs, cfg));

    // (omega_4): midpoint convexity of y -> omega(e^y)
    {
        let lo = -2.0;
        let hi = omega.ln_t_max;
        let n = cfg.t_grid.points;
        let h = (hi - lo) / n as f64;
        let mut worst = f64::INFINITY;
        let mut arg = lo;
        for i in 1..n {
            let y = lo + h * i as f64;
            let gap = omega.eval_ln(y - h) + omega.eval_ln(y + h) - 2.0 * omega.eval_ln(y);
            let scale = 1.0 + omega.eval_ln(y + h).abs();
            if gap / scale < worst {
                worst = gap / scale;
                arg = y;
            }
        }
        out.insert(
            ConditionId::Omega4,
            if worst >= -cfg.eps {
                ConditionVerdict::new(ConditionId::Omega4, Status::Holds, (1, n)).margin(worst)
            } else {
                ConditionVerdict::new(ConditionId::Omega4, Status::Fails, (1, n))
                    .witness("violating_ln_t", arg)
                    .witness("relative_gap", worst)
            },
        );
    }

    // (omega_6): 2 omega(t) <= omega(Ht) + H
    out.insert(ConditionId::Omega6, check_omega6(omega, cfg));

    out
}

fn check_omega6(omega: &WeightFunction, cfg: &TruncationConfig) -> ConditionVerdict {
    let mut any_ambiguous = false;
    for k in 0..=10 {
        let h = (1u64 << k) as f64;
        let lnh = h.ln();
        let g = omega.grid(cfg, lnh);
        if g.len() < 8 {
            break;
        }
        let deficit: Vec<f64> = g
            .iter()
            .map(|&x| 2.0 * omega.eval_ln(x) - omega.eval_ln(x + lnh))
            .collect();
        let scan = sup_scan(&deficit, cfg.eps, cfg.rise_floor());
        if scan.trend.bounded() && scan.sup <= h + cfg.eps {
            return ConditionVerdict::new(ConditionId::Omega6, Status::Holds, (1, g.len()))
                .witness("H", h)
                .witness("sup_deficit", scan.sup)
                .margin(h - scan.sup)
                .note(&format!("deficit trend: {}", scan.trend.describe()));
        }
        if !scan.trend.diverging() && scan.sup > h + cfg.eps {
            // deficit bounded-looking but above H: a larger H may absorb it
            continue;
        }
        if !scan.trend.diverging() && !scan.trend.bounded() {
            any_ambiguous = true;
        }
    }
    let status = if any_ambiguous { Status::Inconclusive } else { Status::Fails };
    ConditionVerdict::new(ConditionId::Omega6, status, (1, cfg.t_grid.points)).note(
        "fails-within-bounds: no H in 1..=1024 absorbs the doubled weight on the window",
    )
}

/// Outcome of the uniform subadditivity audit.
#[derive(Debug, Clone)]
pub struct Alpha0FnDetail {
    pub verdict: ConditionVerdict,
    /// Tail-extracted per-lambda ratio sups.
    pub tail_ratio: Vec<f64>,
    /// Per-lambda small-t requirement `(omega(lambda t) - C lambda omega(t)) / lambda`.
    pub small_t_requirement: Vec<f64>,
}

/// Uniform subadditivity form `omega(lambda t) <= C lambda omega(t) + D lambda`:
/// C is extracted from the ratio on tail t, the split additive constant from
/// small t. The condition fails when the per-lambda small-t requirement
/// climbs monotonically across doublings (no uniform D exists on the data).
pub fn check_alpha0_fn(omega: &WeightFunction, cfg: &TruncationConfig) -> Alpha0FnDetail {
    let lambdas: Vec<usize> = (0..)
        .map(|k| 1usize << k)
        .take_while(|&l| l <= cfg.lambda_max)
        .collect();
    let grid = omega.grid(cfg, 0.0);
    let mut shrunk = false;

    // tail ratio sup per lambda, skipping slices whose usable range has no
    // asymptotic tail
    let mut tail_ratio = Vec::new();
    for &l in &lambdas {
        let lnl = (l as f64).ln();
        if omega.ln_t_max - lnl < MIN_TAIL_TOP_LN {
            shrunk = true;
            break;
        }
        let usable: Vec<f64> = grid.iter().copied().filter(|&x| x + lnl <= omega.ln_t_max).collect();
        if usable.len() < 8 {
            shrunk = true;
            break;
        }
        let tail = &usable[usable.len() - usable.len() / 4..];
        let s = tail
            .iter()
            .map(|&x| omega.eval_ln(x + lnl) / (l as f64 * (omega.eval_ln(x) + 1.0)))
            .fold(f64::NEG_INFINITY, f64::max);
        tail_ratio.push(s);
    }
    let window = (1, grid.len().max(1));
    if tail_ratio.len() < 2 {
        let verdict = ConditionVerdict::new(ConditionId::Alpha0Fn, Status::Inconclusive, window)
            .note("domain too small for the lambda sweep");
        return Alpha0FnDetail { verdict, tail_ratio, small_t_requirement: Vec::new() };
    }

    let lambda_uniform = if tail_ratio.len() >= 4 {
        let ratio_scan = sup_scan(&tail_ratio, cfg.eps, cfg.rise_floor());
        if ratio_scan.trend.bounded() {
            None
        } else if !ratio_scan.trend.diverging() {
            let verdict =
                ConditionVerdict::new(ConditionId::Alpha0Fn, Status::Inconclusive, window)
                    .note("tail ratio trend in the indecision band");
            return Alpha0FnDetail { verdict, tail_ratio, small_t_requirement: Vec::new() };
        } else {
            Some((1usize << ratio_scan.arg, ratio_scan.sup))
        }
    } else {
        // short sweep: a flat profile still supports a C extraction, but
        // two or three points cannot establish divergence
        let rise = tail_ratio.last().unwrap() - tail_ratio.first().unwrap();
        if rise <= cfg.rise_floor() {
            None
        } else {
            let verdict = ConditionVerdict::new(ConditionId::Alpha0Fn, Status::Inconclusive, window)
                .witness("tail_ratio_last", *tail_ratio.last().unwrap())
                .note("lambda sweep too short to certify the tail-ratio trend");
            return Alpha0FnDetail { verdict, tail_ratio, small_t_requirement: Vec::new() };
        }
    };
    if let Some((l_star, sup)) = lambda_uniform {
        let verdict = ConditionVerdict::new(ConditionId::Alpha0Fn, Status::Fails, window)
            .witness("tail_ratio_at_lambda", sup)
            .witness("violating_lambda", l_star as f64)
            .note("tail ratio omega(lambda t)/(lambda omega(t)) not lambda-uniform");
        return Alpha0FnDetail { verdict, tail_ratio, small_t_requirement: Vec::new() };
    }
    let c = (1.0 + cfg.margin) * tail_ratio.iter().copied().fold(1.0_f64, f64::max);

    // per-lambda small-t requirement and global additive constant
    let mut small_t = Vec::new();
    let mut d_global = 0.0_f64;
    for &l in &lambdas {
        let lnl = (l as f64).ln();
        let mut small_best = 0.0_f64;
        let mut all_best = 0.0_f64;
        for &x in &grid {
            if x + lnl > omega.ln_t_max {
                shrunk = true;
                break;
            }
            let need = (omega.eval_ln(x + lnl) - c * l as f64 * omega.eval_ln(x)) / l as f64;
            all_best = all_best.max(need);
            if x <= SMALL_T_CAP_LN {
                small_best = small_best.max(need);
            }
        }
        small_t.push(small_best);
        d_global = d_global.max(all_best);
    }

    // divergence = a non-decaying climb of the requirement, sustained
    // monotonically across at least 3 doublings (a decelerating approach to
    // a finite constant is a legitimate additive D, and a single step from
    // the lambda window crossing one quotient burst is not divergence)
    let k = small_t.len();
    let req_scan = sup_scan(&small_t, cfg.eps, cfg.rise_floor());
    let tail_run = small_t
        .windows(2)
        .rev()
        .take_while(|w| w[1] > w[0] + cfg.eps)
        .count();
    let mut verdict = if req_scan.trend.diverging() && tail_run >= 3 {
        ConditionVerdict::new(ConditionId::Alpha0Fn, Status::Fails, window)
            .witness("C", c)
            .witness("violating_lambda", (1usize << (k - 1)) as f64)
            .witness("small_t_requirement_at_lambda_max", small_t[k - 1])
            .note("per-lambda additive requirement at small t grows without bound")
    } else if req_scan.trend.bounded() || req_scan.trend.diverging() {
        // a diverging-shaped scan without a sustained run is a step
        // artifact; the global D still covers everything observed
        ConditionVerdict::new(ConditionId::Alpha0Fn, Status::Holds, window)
            .witness("C", c)
            .witness("D", d_global)
            .margin(cfg.rise_floor() - (req_scan.d_early + req_scan.d_late))
            .note("tail ratio lambda-uniform and small-t requirement stabilized")
    } else {
        ConditionVerdict::new(ConditionId::Alpha0Fn, Status::Inconclusive, window)
            .witness("C", c)
            .note("small-t requirement trend in the indecision band")
    };
    if shrunk {
        verdict = verdict.note("t range shrunk where lambda t exceeded the domain");
    }
    Alpha0FnDetail { verdict, tail_ratio, small_t_requirement: small_t }
}

/// Largest multiplier the uniform-subadditivity sweep can see for this
/// weight: beyond it the lambda slices have no asymptotic tail. Divergence
/// witnesses from sequence-side scans at larger ratios are invisible here.
pub fn alpha0_multiplier_reach(omega: &WeightFunction, cfg: &TruncationConfig) -> f64 {
    (cfg.lambda_max as f64).min((omega.ln_t_max - MIN_TAIL_TOP_LN).exp())
}

/// Per-lambda-constant subadditivity `omega(lambda t) <= C lambda omega(t) + D_lambda lambda`:
/// for each lambda the windowed limsup of the ratio, then the sup over
/// lambda must stabilize.
pub fn check_alpha1_fn(omega: &WeightFunction, cfg: &TruncationConfig) -> ConditionVerdict {
    check_alpha1_fn_mixed(omega, omega, cfg)
}

/// Mixed variant: `sigma(lambda C t) <= B lambda tau(A t) + D lambda` with a
/// small grid over the inner scalings A, C.
pub fn check_alpha1_fn_mixed(
    tau: &WeightFunction,
    sigma: &WeightFunction,
    cfg: &TruncationConfig,
) -> ConditionVerdict {
    let lambdas: Vec<usize> = (0..)
        .map(|k| 1usize << k)
        .take_while(|&l| l <= cfg.lambda_max)
        .collect();
    let scalings: [(f64, f64); 3] = [(1.0, 1.0), (2.0, 1.0), (4.0, 1.0)];
    let mut best_fail: Option<ConditionVerdict> = None;
    for (a, c_in) in scalings {
        let lna = a.ln();
        let lnc = c_in.ln();
        let hi = sigma.ln_t_max().min(tau.ln_t_max() - lna + lnc);
        let lo = cfg.t_grid.t_min.ln();
        if hi <= lo {
            continue;
        }
        let n = cfg.t_grid.points;
        let mut per_lambda = Vec::new();
        for &l in &lambdas {
            let lnl = (l as f64).ln();
            let cap = hi - lnl;
            if cap < MIN_TAIL_TOP_LN {
                break;
            }
            let m = n.max(16);
            let mut vals = Vec::new();
            for i in 0..=m {
                let x = lo + (cap - lo) * i as f64 / m as f64;
                let denom = tau.eval_ln(x + lna);
                if denom > cfg.eps {
                    vals.push(sigma.eval_ln(x + lnc + lnl) / (l as f64 * denom));
                }
            }
            if vals.len() < 8 {
                break;
            }
            let tail = &vals[vals.len() - vals.len() / 4..];
            per_lambda.push(tail.iter().copied().fold(f64::NEG_INFINITY, f64::max));
        }
        if per_lambda.len() < 4 {
            continue;
        }
        let scan = sup_scan(&per_lambda, cfg.eps, cfg.rise_floor());
        if !scan.trend.bounded() && !scan.trend.diverging() {
            if best_fail.is_none() {
                best_fail = Some(
                    ConditionVerdict::new(ConditionId::Alpha1Fn, Status::Inconclusive, (1, per_lambda.len()))
                        .note("per-lambda limsup trend in the indecision band"),
                );
            }
            continue;
        }
        if scan.trend.bounded() {
            let b = per_lambda.iter().copied().fold(f64::NEG_INFINITY, f64::max);
            // per-lambda additive constants against the uniform B
            let mut d_max = 0.0_f64;
            for &l in &lambdas {
                let lnl = (l as f64).ln();
                let cap = hi - lnl;
                if cap <= lo {
                    break;
                }
                let m = cfg.t_grid.points;
                for i in 0..=m {
                    let x = lo + (cap - lo) * i as f64 / m as f64;
                    let need = (sigma.eval_ln(x + lnc + lnl)
                        - b.max(1.0) * l as f64 * tau.eval_ln(x + lna))
                        / l as f64;
                    d_max = d_max.max(need);
                }
            }
            return ConditionVerdict::new(ConditionId::Alpha1Fn, Status::Holds, (1, per_lambda.len()))
                .witness("sup_ratio", b)
                .witness("B", b.max(1.0))
                .witness("D_max", d_max)
                .witness("A", a)
                .witness("C", c_in)
                .margin(cfg.rise_floor() - (scan.d_early + scan.d_late))
                .note(&format!("per-lambda limsup uniform ({})", scan.trend.describe()));
        }
        if best_fail.is_none() {
            let l_star = 1usize << scan.arg;
            best_fail = Some(
                ConditionVerdict::new(ConditionId::Alpha1Fn, Status::Fails, (1, per_lambda.len()))
                    .witness("sup_ratio_at_truncation", scan.sup)
                    .witness("violating_lambda", l_star as f64)
                    .note("per-lambda limsup grows with lambda"),
            );
        }
    }
    best_fail.unwrap_or_else(|| {
        ConditionVerdict::new(ConditionId::Alpha1Fn, Status::Inconclusive, (0, 0))
            .note("domain too small for the lambda sweep")
    })
}

/// Result of the growth-index bisection.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct GammaIndex {
    /// Estimated index (equals [`GAMMA_MAX`] when `sentinel` is set).
    pub estimate: f64,
    /// True when the whole bisection range passed: the index is reported as
    /// ">= GAMMA_MAX".
    pub sentinel: bool,
    /// Witness K certifying the deepest passing probe.
    pub witness_k: Option<f64>,
}

enum GammaPredicate {
    Pass(f64),
    Fail,
    NoWindow,
}

fn gamma_predicate(omega: &WeightFunction, gamma: f64, cfg: &TruncationConfig) -> GammaPredicate {
    // (P_{omega,gamma}): exists K > 1 with limsup omega(K^gamma t)/omega(t) < K
    let lo = cfg.t_grid.t_min.ln();
    let mut any_window = false;
    for j in 1..=16 {
        let k = 2f64.powf(j as f64 / 2.0);
        let shift = gamma * k.ln();
        let hi = omega.ln_t_max.min(cfg.t_grid.t_max.ln());
        let cap = hi - shift;
        if cap < MIN_TAIL_TOP_LN {
            continue;
        }
        let n = cfg.t_grid.points;
        let mut vals = Vec::new();
        for i in 0..=n {
            let x = lo + (cap - lo) * i as f64 / n as f64;
            let denom = omega.eval_ln(x);
            if denom > cfg.eps {
                vals.push(omega.eval_ln(x + shift) / denom);
            }
        }
        if vals.len() < 8 {
            continue;
        }
        any_window = true;
        let tail = &vals[vals.len() - vals.len() / 4..];
        let limsup = tail.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        if limsup < k * (1.0 - cfg.margin) {
            return GammaPredicate::Pass(k);
        }
    }
    if any_window {
        GammaPredicate::Fail
    } else {
        GammaPredicate::NoWindow
    }
}

/// Growth index `gamma(omega) = sup { gamma > 0 : (P_{omega,gamma}) }`,
/// estimated by bisection on the windowed predicate. The estimate is NaN
/// when the domain leaves no usable window at all.
pub fn gamma_index(omega: &WeightFunction, cfg: &TruncationConfig) -> GammaIndex {
    if let GammaPredicate::Pass(k) = gamma_predicate(omega, GAMMA_MAX, cfg) {
        return GammaIndex { estimate: GAMMA_MAX, sentinel: true, witness_k: Some(k) };
    }
    let mut witness_k = match gamma_predicate(omega, 1e-3, cfg) {
        GammaPredicate::NoWindow => {
            return GammaIndex { estimate: f64::NAN, sentinel: false, witness_k: None };
        }
        GammaPredicate::Fail => {
            return GammaIndex { estimate: 0.0, sentinel: false, witness_k: None };
        }
        GammaPredicate::Pass(k) => k,
    };
    let mut lo = 1e-3;
    let mut hi = GAMMA_MAX;
    for _ in 0..28 {
        let mid = 0.5 * (lo + hi);
        if let GammaPredicate::Pass(k) = gamma_predicate(omega, mid, cfg) {
            lo = mid;
            witness_k = k;
        } else {
            hi = mid;
        }
    }
    GammaIndex { estimate: 0.5 * (lo + hi), sentinel: false, witness_k: Some(witness_k) }
}

/// Verdict on `gamma(omega) > threshold`, with an indecision band of 5%
/// around the threshold.
pub fn gamma_gt_verdict(gi: GammaIndex, threshold: f64, _cfg: &TruncationConfig) -> ConditionVerdict {
    let id = ConditionId::GammaGt;
    let mut v = ConditionVerdict::new(id, Status::Inconclusive, (0, 0))
        .witness("estimate", gi.estimate)
        .witness("threshold", threshold);
    if let Some(k) = gi.witness_k {
        v = v.witness("K", k);
    }
    if !gi.estimate.is_finite() {
        return v.note("domain too small for the index bisection");
    }
    if gi.sentinel || gi.estimate > threshold + 0.05 * threshold.max(1.0) {
        let mut v = v;
        v.status = Status::Holds;
        v.margin = gi.estimate - threshold;
        v
    } else if gi.estimate < threshold - 0.05 * threshold.max(1.0) {
        let mut v = v;
        v.status = Status::Fails;
        v.margin = threshold - gi.estimate;
        v
    } else {
        v.note("estimate inside the indecision band around the threshold")
    }
}

/// Value of `kappa_omega(y) = int_1^oo omega(y t)/t^2 dt`, computed by
/// adaptive Simpson after the substitution u = 1/t, with convergence
/// diagnostics for the truncated upper limit.
#[derive(Debug, Clone, Copy)]
pub struct KappaValue {
    pub value: f64,
    /// Lower bound on the discarded tail: `omega(y T)/T`.
    pub tail_lower_bound: f64,
    /// Whether doubling the (log of the) upper limit moved the integral by
    /// less than the margin.
    pub converged: bool,
}

fn adaptive_simpson(f: &impl Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    fn simpson(fa: f64, fm: f64, fb: f64, h: f64) -> f64 {
        h / 6.0 * (fa + 4.0 * fm + fb)
    }
    #[allow(clippy::too_many_arguments)]
    fn rec(
        f: &impl Fn(f64) -> f64,
        a: f64,
        m: f64,
        b: f64,
        fa: f64,
        fm: f64,
        fb: f64,
        whole: f64,
        tol: f64,
        depth: u32,
    ) -> f64 {
        let lm = 0.5 * (a + m);
        let rm = 0.5 * (m + b);
        let flm = f(lm);
        let frm = f(rm);
        let left = simpson(fa, flm, fm, m - a);
        let right = simpson(fm, frm, fb, b - m);
        let delta = left + right - whole;
        if depth == 0 || delta.abs() <= 15.0 * tol {
            left + right + delta / 15.0
        } else {
            rec(f, a, lm, m, fa, flm, fm, left, tol / 2.0, depth - 1)
                + rec(f, m, rm, b, fm, frm, fb, right, tol / 2.0, depth - 1)
        }
    }
    let m = 0.5 * (a + b);
    let fa = f(a);
    let fm = f(m);
    let fb = f(b);
    rec(f, a, m, b, fa, fm, fb, simpson(fa, fm, fb, b - a), tol, 28)
}

pub fn kappa(omega: &WeightFunction, y: f64, cfg: &TruncationConfig) -> Result<KappaValue> {
    if !(y >= 0.0) {
        return Err(Error::Domain("kappa needs y >= 0".into()));
    }
    if y == 0.0 {
        return Ok(KappaValue { value: 0.0, tail_lower_bound: 0.0, converged: true });
    }
    let lny = y.ln();
    let ln_t_cap = (omega.ln_t_max - lny).min(25.0);
    if ln_t_cap <= 0.5 {
        return Err(Error::Domain(format!(
            "kappa: no room above y = {y} inside the certified domain"
        )));
    }
    // int_1^T omega(y t)/t^2 dt = int_{1/T}^1 omega(y/u) du
    let f = |u: f64| omega.eval_ln(lny - u.ln());
    let u_min_full = (-ln_t_cap).exp();
    let u_min_half = (-0.5 * ln_t_cap).exp();
    let scale = omega.eval_ln(lny).abs().max(1.0);
    let i_half = adaptive_simpson(&f, u_min_half, 1.0, 1e-8 * scale);
    let i_rest = adaptive_simpson(&f, u_min_full, u_min_half, 1e-8 * scale);
    let value = i_half + i_rest;
    let tail_lower_bound = omega.eval_ln(lny + ln_t_cap) * (-ln_t_cap).exp();
    let converged = i_rest.abs() <= cfg.margin * value.abs().max(cfg.eps);
    Ok(KappaValue { value, tail_lower_bound, converged })
}

/// Strong non-quasianalyticity `kappa_omega(y) <= C omega(y) + C` over a
/// tail y-grid.
pub fn check_strong_nq(omega: &WeightFunction, cfg: &TruncationConfig) -> ConditionVerdict {
    let lo = 0.0_f64; // y = 1
    // leave full quadrature headroom above every sampled y, otherwise the
    // truncated upper limit dominates the integral
    let hi = omega.ln_t_max.min(cfg.t_grid.t_max.ln()) - 26.0;
    if hi <= lo + 1.0 {
        return ConditionVerdict::new(ConditionId::StrongNq, Status::Inconclusive, (0, 0))
            .note("domain too small for the kappa sweep");
    }
    let n = 24;
    let mut ratios = Vec::new();
    let mut unconverged = 0usize;
    for i in 0..=n {
        let lny = lo + (hi - lo) * i as f64 / n as f64;
        let y = lny.exp();
        match kappa(omega, y, cfg) {
            Ok(kv) => {
                if !kv.converged {
                    unconverged += 1;
                }
                ratios.push(kv.value / (omega.eval_ln(lny) + 1.0));
            }
            Err(_) => break,
        }
    }
    if ratios.len() < 8 {
        return ConditionVerdict::new(ConditionId::StrongNq, Status::Inconclusive, (0, 0))
            .note("kappa sweep ran out of domain");
    }
    let window = (1, ratios.len());
    if unconverged > 0 {
        return ConditionVerdict::new(ConditionId::StrongNq, Status::Inconclusive, window)
            .witness("unconverged_fraction", unconverged as f64 / ratios.len() as f64)
            .note("diverging witness: integral still growing at the truncated upper limit");
    }
    let scan = sup_scan(&ratios, cfg.eps, cfg.rise_floor());
    if scan.trend.bounded() {
        ConditionVerdict::new(ConditionId::StrongNq, Status::Holds, window)
            .witness("C", scan.sup.max(0.0))
            .margin(scan.d_late)
            .note(&format!("kappa/omega sup trend: {}", scan.trend.describe()))
    } else if scan.trend.diverging() {
        ConditionVerdict::new(ConditionId::StrongNq, Status::Fails, window)
            .witness("sup_at_truncation", scan.sup)
            .note("diverging witness: kappa/omega still rising")
    } else {
        ConditionVerdict::new(ConditionId::StrongNq, Status::Inconclusive, window)
            .witness("sup_at_truncation", scan.sup)
            .note("kappa/omega trend in the indecision band")
    }
}

/// Square-power condition `omega(t^2) = O(omega(H t))`.
pub fn check_omega7_fn(omega: &WeightFunction, cfg: &TruncationConfig) -> ConditionVerdict {
    let lo = cfg.t_grid.t_min.ln().max(0.1);
    let hi = omega.ln_t_max.min(cfg.t_grid.t_max.ln());
    if hi / 2.0 <= lo + 0.5 {
        return ConditionVerdict::new(ConditionId::Omega7Fn, Status::Inconclusive, (0, 0))
            .note("window too small: t^2 leaves no room inside the domain");
    }
    let mut any_window = false;
    let mut any_ambiguous = false;
    for k in 0..=10 {
        let h = (1u64 << k) as f64;
        let lnh = h.ln();
        let cap = (hi / 2.0).min(hi - lnh);
        if cap < MIN_TAIL_TOP_LN {
            // square and H-shift leave no asymptotic window; a flat ratio on
            // small t would certify nothing
            break;
        }
        any_window = true;
        let n = cfg.t_grid.points;
        let vals: Vec<f64> = (0..=n)
            .map(|i| {
                let x = lo + (cap - lo) * i as f64 / n as f64;
                omega.eval_ln(2.0 * x) / (omega.eval_ln(x + lnh) + 1.0)
            })
            .collect();
        let scan = sup_scan(&vals[vals.len() / 2..], cfg.eps, cfg.rise_floor());
        if scan.trend.bounded() {
            return ConditionVerdict::new(ConditionId::Omega7Fn, Status::Holds, (1, vals.len()))
                .witness("H", h)
                .witness("sup_ratio", scan.sup)
                .margin(scan.d_late)
                .note(&format!("square ratio trend: {}", scan.trend.describe()));
        }
        if !scan.trend.diverging() {
            any_ambiguous = true;
        }
    }
    if !any_window {
        return ConditionVerdict::new(ConditionId::Omega7Fn, Status::Inconclusive, (0, 0))
            .note("window too small: t^2 leaves no asymptotic room inside the domain");
    }
    let status = if any_ambiguous { Status::Inconclusive } else { Status::Fails };
    ConditionVerdict::new(ConditionId::Omega7Fn, status, (1, cfg.t_grid.points))
        .note("fails-within-bounds: omega(t^2)/omega(Ht) rises for every usable H")
}

/// Piecewise-linear least concave majorant of the sampled graph on [0, T].
#[derive(Debug, Clone)]
pub struct ConcaveMajorant {
    /// Upper hull vertices `(t, F(t))` in increasing t, starting at (0, omega(0)).
    pub vertices: Vec<(f64, f64)>,
    /// Set when the last hull segment spans more than half the window: the
    /// majorant is still chord-dominated at the right edge and would keep
    /// growing with the window (the infinite-window majorant may be
    /// identically infinite).
    pub unbounded_slope: bool,
}

impl ConcaveMajorant {
    pub fn eval(&self, t: f64) -> f64 {
        let v = &self.vertices;
        if t <= v[0].0 {
            return v[0].1;
        }
        for w in v.windows(2) {
            if t <= w[1].0 {
                let (t0, f0) = w[0];
                let (t1, f1) = w[1];
                return f0 + (f1 - f0) * (t - t0) / (t1 - t0);
            }
        }
        v[v.len() - 1].1
    }
}

/// Upper concave envelope of `omega` sampled on a geometric grid over
/// `[0, t_hi]`, by monotone-chain hull.
pub fn least_concave_majorant(
    omega: &WeightFunction,
    t_hi: f64,
    points: usize,
) -> Result<ConcaveMajorant> {
    if points < 3 {
        return Err(Error::InvalidParameter("hull needs at least 3 samples".into()));
    }
    let ln_hi = t_hi.ln();
    if ln_hi > omega.ln_t_max + 1e-12 {
        return Err(Error::Domain("hull window beyond the certified domain".into()));
    }
    let mut pts: Vec<(f64, f64)> = vec![(0.0, 0.0)];
    let ln_lo = (ln_hi - 30.0).min(-3.0);
    for i in 0..=points {
        let x = ln_lo + (ln_hi - ln_lo) * i as f64 / points as f64;
        pts.push((x.exp(), omega.eval_ln(x)));
    }
    // monotone chain, keeping the upper hull
    let mut hull: Vec<(f64, f64)> = Vec::new();
    for p in pts {
        while hull.len() >= 2 {
            let a = hull[hull.len() - 2];
            let b = hull[hull.len() - 1];
            let cross = (b.0 - a.0) * (p.1 - a.1) - (b.1 - a.1) * (p.0 - a.0);
            if cross >= 0.0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(p);
    }
    let last_span = hull[hull.len() - 1].0 - hull[hull.len() - 2].0;
    Ok(ConcaveMajorant { vertices: hull, unbounded_slope: last_span > t_hi / 2.0 })
}

/// Relation `sigma preceq tau` and back: windowed ratio sups both ways.
pub fn equivalent_fn(
    sigma: &WeightFunction,
    tau: &WeightFunction,
    cfg: &TruncationConfig,
) -> ConditionVerdict {
    let lo = cfg.t_grid.t_min.ln();
    let hi = sigma.ln_t_max.min(tau.ln_t_max).min(cfg.t_grid.t_max.ln());
    if hi <= lo {
        return ConditionVerdict::new(ConditionId::EquivalentFn, Status::Inconclusive, (0, 0))
            .note("no common domain");
    }
    let n = cfg.t_grid.points;
    let mut fwd = Vec::with_capacity(n + 1);
    let mut bwd = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let x = lo + (hi - lo) * i as f64 / n as f64;
        let s = sigma.eval_ln(x);
        let t = tau.eval_ln(x);
        fwd.push(t / (s + 1.0));
        bwd.push(s / (t + 1.0));
    }
    let sf = sup_scan(&fwd, cfg.eps, cfg.rise_floor());
    let sb = sup_scan(&bwd, cfg.eps, cfg.rise_floor());
    let status = if sf.trend.bounded() && sb.trend.bounded() {
        Status::Holds
    } else if sf.trend.diverging() || sb.trend.diverging() {
        Status::Fails
    } else {
        Status::Inconclusive
    };
    ConditionVerdict::new(ConditionId::EquivalentFn, status, (1, n + 1))
        .witness("sup_tau_over_sigma", sf.sup)
        .witness("sup_sigma_over_tau", sb.sup)
        .note(&format!(
            "trends: {} / {}",
            sf.trend.describe(),
            sb.trend.describe()
        ))
}

/// Equivalence of `omega` with its least concave majorant, diagnosed by
/// comparing the hull constant on two nested windows. A constant that grows
/// with the window means the majorant separates from the weight.
pub fn check_concave_majorant_equiv(
    omega: &WeightFunction,
    cfg: &TruncationConfig,
) -> ConditionVerdict {
    let hi = omega.ln_t_max.min(cfg.t_grid.t_max.ln());
    let n = cfg.t_grid.points.min(320);
    let constant_on = |ln_cap: f64| -> Result<f64> {
        let hull = least_concave_majorant(omega, ln_cap.exp(), n)?;
        let lo = SMALL_T_CAP_LN.min(ln_cap - 1.0);
        let mut sup = f64::NEG_INFINITY;
        for i in 0..=n {
            let x = lo + (ln_cap - lo) * i as f64 / n as f64;
            sup = sup.max(hull.eval(x.exp()) / (omega.eval_ln(x) + 1.0));
        }
        Ok(sup)
    };
    let (b_half, b_full) = match (constant_on(hi / 2.0), constant_on(hi)) {
        (Ok(a), Ok(b)) => (a, b),
        _ => {
            return ConditionVerdict::new(
                ConditionId::ConcaveMajorantEquiv,
                Status::Inconclusive,
                (0, 0),
            )
            .note("hull construction ran out of domain")
        }
    };
    let id = ConditionId::ConcaveMajorantEquiv;
    if b_full <= b_half * (1.0 + cfg.rise_floor()) + cfg.eps {
        ConditionVerdict::new(id, Status::Holds, (1, n))
            .witness("hull_constant", b_full)
            .margin(b_half * (1.0 + cfg.rise_floor()) - b_full)
            .note("hull/weight constant stable across nested windows")
    } else if b_full > 1.5 * b_half {
        ConditionVerdict::new(id, Status::Fails, (1, n))
            .witness("hull_constant_half_window", b_half)
            .witness("hull_constant_full_window", b_full)
            .note("hull/weight constant grows with the window")
    } else {
        ConditionVerdict::new(id, Status::Inconclusive, (1, n))
            .witness("hull_constant_half_window", b_half)
            .witness("hull_constant_full_window", b_full)
            .note("hull constant drift too small to classify")
    }
}

/// CSV rows `(t, omega(t))`.
pub fn weight_csv(omega: &WeightFunction, t_min: f64, t_max: f64, points: usize) -> Result<String> {
    if !(t_min > 0.0) || t_max <= t_min || points < 2 {
        return Err(Error::Domain("need 0 < t_min < t_max and >= 2 points".into()));
    }
    let lo = t_min.ln();
    let hi = t_max.ln().min(omega.ln_t_max);
    let mut out = String::from("t,omega\n");
    for i in 0..points {
        let x = lo + (hi - lo) * i as f64 / (points - 1) as f64;
        out.push_str(&format!("{},{}\n", x.exp(), omega.eval_ln(x)));
    }
    Ok(out)
}

/// CSV rows `(t, omega, majorant, kappa)`: the weight, its least concave
/// majorant on the emitted window, and the non-quasianalyticity integral
/// (blank where the domain leaves no quadrature room).
pub fn profile_csv(
    omega: &WeightFunction,
    cfg: &TruncationConfig,
    t_min: f64,
    t_max: f64,
    points: usize,
) -> Result<String> {
    if !(t_min > 0.0) || t_max <= t_min || points < 3 {
        return Err(Error::Domain("need 0 < t_min < t_max and >= 3 points".into()));
    }
    let lo = t_min.ln();
    let hi = t_max.ln().min(omega.ln_t_max);
    let hull = least_concave_majorant(omega, hi.exp(), points.max(64))?;
    let mut out = String::from("t,omega,majorant,kappa\n");
    for i in 0..points {
        let x = lo + (hi - lo) * i as f64 / (points - 1) as f64;
        let t = x.exp();
        let om = omega.eval_ln(x);
        let maj = hull.eval(t);
        match kappa(omega, t, cfg) {
            Ok(kv) => out.push_str(&format!("{t},{om},{maj},{}\n", kv.value)),
            Err(_) => out.push_str(&format!("{t},{om},{maj},\n")),
        }
    }
    Ok(out)
}

/// CSV rows `(x, phi_star(x))`.
pub fn conjugate_csv(omega: &WeightFunction, x_max: f64, points: usize) -> Result<String> {
    if !(x_max > 0.0) || points < 2 {
        return Err(Error::Domain("need x_max > 0 and >= 2 points".into()));
    }
    let mut out = String::from("x,phi_star\n");
    for i in 0..points {
        let x = x_max * i as f64 / (points - 1) as f64;
        match phi_star(omega, x) {
            Ok(v) => out.push_str(&format!("{x},{v}\n")),
            Err(_) => break,
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> TruncationConfig {
        TruncationConfig::default()
    }

    fn power_half() -> WeightFunction {
        WeightFunction::closed_form(ClosedFormFamily::Power { alpha: 0.5 }, 1e30).unwrap()
    }

    fn t_log_t() -> WeightFunction {
        WeightFunction::closed_form(ClosedFormFamily::TLogT, 1e30).unwrap()
    }

    fn linear() -> WeightFunction {
        WeightFunction::closed_form(ClosedFormFamily::Linear, 1e30).unwrap()
    }

    #[test]
    fn closed_form_values() {
        assert_eq!(t_log_t().eval(2.0).unwrap(), 2.0 * 2.0_f64.ln());
        assert_eq!(power_half().eval(4.0).unwrap(), 1.0);
        for f in [power_half(), t_log_t(), linear()] {
            assert_eq!(f.eval(1.0).unwrap(), 0.0);
            assert_eq!(f.eval(0.0).unwrap(), 0.0);
        }
        assert!(WeightFunction::closed_form(ClosedFormFamily::Power { alpha: 3.0 }, 1e30).is_err());
        assert!(WeightFunction::closed_form(ClosedFormFamily::LogPower { beta: 0.5 }, 1e30).is_err());
    }

    #[test]
    fn conjugate_of_linear_weight() {
        let w = linear();
        // phi*(2) = 2 ln 2 - 1, maximizer y = ln 2
        let got = phi_star(&w, 2.0).unwrap();
        let expect = 2.0 * 2.0_f64.ln() - 1.0;
        assert!((got - expect).abs() < 1e-9, "{got} vs {expect}");
        // brute-force oracle on a dense y grid
        let mut brute = f64::NEG_INFINITY;
        for i in 0..=200_000 {
            let y = 3.0 * i as f64 / 200_000.0;
            brute = brute.max(2.0 * y - w.eval_ln(y));
        }
        assert!((got - brute).abs() < 1e-8);
        // boundary maximizer at x = 1
        assert!(phi_star(&w, 1.0).unwrap().abs() < 1e-12);
        assert_eq!(phi_star(&w, 0.0).unwrap(), 0.0);
    }

    #[test]
    fn conjugate_properties_sampled() {
        let cfgv = cfg();
        let _ = &cfgv;
        for w in [linear(), power_half()] {
            let mut prev = 0.0;
            let mut prev_slope = 0.0;
            let mut vals = Vec::new();
            for i in 0..=50 {
                let x = 0.2 + 6.0 * i as f64 / 50.0;
                let v = phi_star(&w, x).unwrap();
                assert!(v >= prev - 1e-10, "phi* nondecreasing");
                let slope = v / x;
                assert!(slope >= prev_slope - 1e-10, "phi*(x)/x nondecreasing");
                prev = v;
                prev_slope = slope;
                vals.push(v);
            }
            for t in vals.windows(3) {
                assert!(t[0] + t[2] - 2.0 * t[1] >= -1e-8, "midpoint convex");
            }
        }
    }

    #[test]
    fn biconjugation_recovers_phi() {
        for w in [linear(), power_half()] {
            for i in 0..=20 {
                let y = 3.0 * i as f64 / 20.0;
                let expect = w.eval_ln(y);
                let got = phi_star_star(&w, y, (y.exp() + 10.0) * 4.0).unwrap();
                assert!(
                    (got - expect).abs() <= 1e-4 * (1.0 + expect.abs()),
                    "{}: phi**({y}) = {got} vs {expect}",
                    w.family_tag()
                );
            }
        }
    }

    #[test]
    fn domain_cap_is_an_error() {
        let m = WeightSequence::gevrey(1.0, 60).unwrap();
        let w = WeightFunction::of_sequence(&m).unwrap();
        // far beyond the data: maximizer would sit at the cap
        assert!(matches!(phi_star(&w, 1000.0), Err(Error::ConjugateDomain { .. })));
        // small x fine
        assert!(phi_star(&w, 3.0).is_ok());
    }

    #[test]
    fn omega_conditions_on_fixtures() {
        let c = cfg();
        // t log t: (omega_2) fails, (omega_6) holds
        let tl = check_omega_conditions(&t_log_t(), &c);
        assert_eq!(tl[&ConditionId::Omega2].status, Status::Fails);
        assert_eq!(tl[&ConditionId::Omega6].status, Status::Holds);
        assert_eq!(tl[&ConditionId::Omega0].status, Status::Holds);
        assert_eq!(tl[&ConditionId::Omega1].status, Status::Holds);
        assert_eq!(tl[&ConditionId::Omega4].status, Status::Holds);

        // linear: omega_0..omega_4 and omega_6 hold, omega_5 fails
        let ln = check_omega_conditions(&linear(), &c);
        for id in [
            ConditionId::Omega0,
            ConditionId::Omega1,
            ConditionId::Omega2,
            ConditionId::Omega3,
            ConditionId::Omega4,
            ConditionId::Omega6,
        ] {
            assert_eq!(ln[&id].status, Status::Holds, "{id}");
        }
        assert_eq!(ln[&ConditionId::Omega5].status, Status::Fails);

        // omega_M of gevrey(2): omega_5 and omega_6 hold
        let m = WeightSequence::gevrey(2.0, 400).unwrap();
        let w = WeightFunction::of_sequence(&m).unwrap();
        let gm = check_omega_conditions(&w, &c);
        assert_eq!(gm[&ConditionId::Omega5].status, Status::Holds);
        assert_eq!(gm[&ConditionId::Omega6].status, Status::Holds);

        // omega_M of q_gevrey: (omega_6) fails (no moderate growth)
        let q = WeightSequence::q_gevrey(2.0, 120).unwrap();
        let wq = WeightFunction::of_sequence(&q).unwrap();
        let qm = check_omega_conditions(&wq, &c);
        assert_eq!(qm[&ConditionId::Omega6].status, Status::Fails);
    }

    #[test]
    fn alpha0_separates_t_log_t() {
        let c = cfg();
        let det = check_alpha0_fn(&t_log_t(), &c);
        assert_eq!(det.verdict.status, Status::Fails);
        // per-lambda requirement blows past 10 within lambda <= 64 near t = 1
        let worst = det.verdict.get("small_t_requirement_at_lambda_max").unwrap();
        assert!(worst > 10.0, "requirement at lambda_max is {worst}");

        assert_eq!(check_alpha0_fn(&linear(), &c).verdict.status, Status::Holds);
        assert_eq!(check_alpha0_fn(&power_half(), &c).verdict.status, Status::Holds);
    }

    #[test]
    fn alpha1_holds_for_t_log_t() {
        let c = cfg();
        let v = check_alpha1_fn(&t_log_t(), &c);
        assert_eq!(v.status, Status::Holds);
        assert!(v.get("sup_ratio").unwrap() <= 1.1);

        let v = check_alpha1_fn(&power_half(), &c);
        assert_eq!(v.status, Status::Holds);
        assert!(v.get("sup_ratio").unwrap() <= 1.0 + 1e-9);

        // max(0, t^2 - 1): per-lambda limsup ~ lambda
        let sq = WeightFunction::closed_form(ClosedFormFamily::Power { alpha: 2.0 }, 1e30).unwrap();
        let v = check_alpha1_fn(&sq, &c);
        assert_eq!(v.status, Status::Fails);
    }

    #[test]
    fn gamma_index_targets() {
        let c = cfg();
        let g = gamma_index(&power_half(), &c);
        assert!(!g.sentinel);
        assert!((g.estimate - 2.0).abs() <= 0.25, "gamma(power 1/2) = {}", g.estimate);

        let g = gamma_index(&t_log_t(), &c);
        assert!((g.estimate - 1.0).abs() <= 0.25, "gamma(t log t) = {}", g.estimate);

        let q = WeightSequence::q_gevrey(2.0, 120).unwrap();
        let wq = WeightFunction::of_sequence(&q).unwrap();
        let g = gamma_index(&wq, &c);
        assert!(g.sentinel, "q-gevrey weight has unbounded index, got {}", g.estimate);
    }

    #[test]
    fn kappa_closed_forms() {
        let c = cfg();
        assert_eq!(kappa(&power_half(), 0.0, &c).unwrap().value, 0.0);
        // kappa(y)/omega(y) -> int_1^oo t^{-3/2} dt = 2
        let v = check_strong_nq(&power_half(), &c);
        assert_eq!(v.status, Status::Holds);
        let cw = v.get("C").unwrap();
        assert!((cw - 2.0).abs() < 0.35, "C = {cw}");

        // linear weight: integral diverges logarithmically
        let v = check_strong_nq(&linear(), &c);
        assert_ne!(v.status, Status::Holds);
    }

    #[test]
    fn omega7_fn_fixtures() {
        let c = cfg();
        let q = WeightSequence::q_gevrey(2.0, 120).unwrap();
        let wq = WeightFunction::of_sequence(&q).unwrap();
        assert_eq!(check_omega7_fn(&wq, &c).status, Status::Holds);
        assert_eq!(check_omega7_fn(&power_half(), &c).status, Status::Fails);
        assert_eq!(check_omega7_fn(&t_log_t(), &c).status, Status::Fails);
    }

    #[test]
    fn concave_majorant_shapes() {
        let c = cfg();
        // power(1/2) is concave beyond the clamp: hull sticks to the graph
        let w = power_half();
        let hull = least_concave_majorant(&w, 1e6, 400).unwrap();
        assert!(!hull.unbounded_slope);
        for &(t, f) in &hull.vertices {
            if t >= 1.5 {
                assert!((f - (t.sqrt() - 1.0)).abs() <= 1e-9 * (1.0 + f.abs()));
            }
        }
        assert_eq!(check_concave_majorant_equiv(&w, &c).status, Status::Holds);

        // t log t is convex: the hull is one chord and separates
        let wt = t_log_t();
        let t_hi = 1e6;
        let hull = least_concave_majorant(&wt, t_hi, 400).unwrap();
        assert!(hull.unbounded_slope);
        let mid = hull.eval(t_hi / 2.0);
        let direct = wt.eval(t_hi / 2.0).unwrap();
        assert!(mid > 0.49 * wt.eval(t_hi).unwrap());
        assert!(mid > direct);
        assert_eq!(check_concave_majorant_equiv(&wt, &c).status, Status::Fails);
    }

    #[test]
    fn equivalent_fn_basic() {
        let c = cfg();
        let v = equivalent_fn(&power_half(), &power_half(), &c);
        assert_eq!(v.status, Status::Holds);
        let sup = v.get("sup_tau_over_sigma").unwrap();
        assert!(sup <= 1.0 && sup > 0.9, "identical weights, sup = {sup}");
        let v = equivalent_fn(&power_half(), &t_log_t(), &c);
        assert_eq!(v.status, Status::Fails);
    }

    #[test]
    fn equivalent_fn_for_equivalent_sequences() {
        // N_p = 2^p M_p is approx-equivalent to M; their associated weights
        // are equivalent too (the doubling condition transfers the shift)
        let c = cfg();
        let m = WeightSequence::gevrey(2.0, 300).unwrap();
        let shifted: Vec<f64> = m
            .log_mu_slice()
            .iter()
            .enumerate()
            .map(|(p, &v)| if p == 0 { 0.0 } else { v + std::f64::consts::LN_2 })
            .collect();
        let n = WeightSequence::from_log_quotients_detect(&shifted, "shifted gevrey 2").unwrap();
        let wm = WeightFunction::of_sequence(&m).unwrap();
        let wn = WeightFunction::of_sequence(&n).unwrap();
        let v = equivalent_fn(&wm, &wn, &c);
        assert_eq!(v.status, Status::Holds, "{}", v.notes);
    }

    #[test]
    fn profile_csv_emits_all_columns() {
        let c = cfg();
        let text = profile_csv(&power_half(), &c, 1.0, 1e6, 24).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("t,omega,majorant,kappa"));
        let row: Vec<&str> = lines.last().unwrap().split(',').collect();
        assert_eq!(row.len(), 4);
        let t: f64 = row[0].parse().unwrap();
        let om: f64 = row[1].parse().unwrap();
        let maj: f64 = row[2].parse().unwrap();
        let kap: f64 = row[3].parse().unwrap();
        assert!((om - (t.sqrt() - 1.0)).abs() < 1e-9);
        assert!(maj >= om - 1e-9, "majorant dominates");
        assert!((kap / om - 2.0).abs() < 0.1, "kappa ~ 2 omega for the sqrt weight");
    }
}
