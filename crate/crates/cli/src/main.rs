//! Command-line front end: build sequences, evaluate weights, audit
//! conditions, verify theorems, run corpora.
//!
//! Exit codes: 0 = ran, 2 = input error, 3 = a theorem verification
//! reported a violation (an estimator defect, not a domain result).
//! Condition verdicts are data, never exit codes.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand};
use serde::Serialize;
use sha2::{Digest, Sha256};

use weightgrowth::assoc::{omega_csv, AssocWeight};
use weightgrowth::conditions;
use weightgrowth::matrix::{build_matrix, MatrixExport, DEFAULT_L_GRID};
use weightgrowth::seq::{SequenceExport, SequenceSpec, WeightSequence};
use weightgrowth::theorems::{
    random_lc_corpus, sweep, verify_theorem, Consistency, CorpusProfile, Subject, TheoremId,
    TheoremReport,
};
use weightgrowth::weight_fn::{conjugate_csv, ClosedFormFamily, WeightFunction};
use weightgrowth::{ConditionId, ConditionVerdict, TruncationConfig};

#[derive(Debug, Parser)]
#[command(name = "weightgrowth", version)]
#[command(about = "audit growth conditions of weight sequences and their associated weight functions")]
struct Cli {
    /// JSON config file mirroring the truncation config
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build a weight sequence and export log mu, log M and roots
    Seq {
        /// Sequence spec file (JSON with family/params or log_mu)
        #[arg(long)]
        spec: Option<PathBuf>,
        /// Family name: gevrey | q_gevrey | beta3_counterexample
        #[arg(long)]
        family: Option<String>,
        /// Gevrey index
        #[arg(long)]
        s: Option<f64>,
        /// q-Gevrey base
        #[arg(long)]
        q: Option<f64>,
        /// Block count for the counterexample family
        #[arg(long = "J")]
        j: Option<usize>,
        /// Truncation index
        #[arg(long = "P")]
        p: Option<usize>,
        /// Output file (stdout when omitted)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Audit growth conditions on a sequence
    Check {
        seq: PathBuf,
        /// Comma-separated condition ids, or "all"
        #[arg(long, value_delimiter = ',')]
        conditions: Vec<String>,
        /// Second sequence for two-sequence conditions (preceq, equivalent,
        /// omega1_mixed); defaults to the subject itself
        #[arg(long)]
        pair: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate the associated weight function
    Omega {
        seq: PathBuf,
        /// Single evaluation point
        #[arg(long)]
        t: Option<f64>,
        /// CSV grid min,max,points
        #[arg(long)]
        grid: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Young conjugate of a weight function on an x grid (CSV)
    Conjugate {
        /// Closed-form function spec file (JSON, e.g. {"family":"power","alpha":0.5})
        #[arg(long)]
        fn_spec: Option<PathBuf>,
        /// Sequence file: use its associated weight function
        #[arg(long)]
        seq: Option<PathBuf>,
        #[arg(long, default_value_t = 16.0)]
        x_max: f64,
        #[arg(long, default_value_t = 65)]
        points: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build and export the associated weight matrix
    Matrix {
        seq: PathBuf,
        /// Comma-separated matrix indices
        #[arg(long, value_delimiter = ',')]
        l_grid: Vec<f64>,
        /// Row length cap
        #[arg(long = "P")]
        p_cap: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Verify one of the equivalence theorems on a subject
    Verify {
        /// Subject file: sequence spec/export, or a function spec
        subject: PathBuf,
        #[arg(long)]
        theorem: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sweep theorems over a random corpus
    Corpus {
        #[arg(long)]
        n: usize,
        /// generic | mg | staircase
        #[arg(long, default_value = "generic")]
        profile: String,
        #[arg(long, value_delimiter = ',')]
        theorems: Vec<String>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Directory for per-subject report files
        #[arg(long)]
        report_dir: Option<PathBuf>,
    },
}

enum CliError {
    Input(String),
}

impl From<weightgrowth::Error> for CliError {
    fn from(e: weightgrowth::Error) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Input(format!("json: {e}"))
    }
}

type CliResult<T> = Result<T, CliError>;

/// Provenance record attached to every JSON report. Timestamps live in the
/// envelope, not here, so reports are byte-identical across reruns.
#[derive(Debug, Serialize)]
struct RunManifest {
    command: Vec<String>,
    config: TruncationConfig,
    inputs: BTreeMap<String, String>,
    version: String,
}

#[derive(Debug, Serialize)]
struct Envelope<T: Serialize> {
    schema: String,
    timestamp: String,
    manifest: RunManifest,
    #[serde(flatten)]
    payload: T,
}

struct Ctx {
    cfg: TruncationConfig,
    cfg_explicit: bool,
    inputs: BTreeMap<String, String>,
}

impl Ctx {
    fn read(&mut self, path: &Path) -> CliResult<String> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
        let digest = Sha256::digest(text.as_bytes());
        self.inputs.insert(
            path.display().to_string(),
            digest.iter().map(|b| format!("{b:02x}")).collect(),
        );
        Ok(text)
    }

    fn load_sequence(&mut self, path: &Path) -> CliResult<WeightSequence> {
        let text = self.read(path)?;
        let spec: SequenceSpec = serde_json::from_str(&text)
            .map_err(|e| CliError::Input(format!("{}: not a sequence spec: {e}", path.display())))?;
        Ok(spec.build()?)
    }

    /// Config scoped to one sequence: when no explicit config was given,
    /// adopt the sequence's own truncation.
    fn cfg_for(&self, m: &WeightSequence) -> TruncationConfig {
        if self.cfg_explicit {
            self.cfg.clone()
        } else {
            TruncationConfig::with_p(m.truncation())
        }
    }

    fn envelope<T: Serialize>(&self, schema: &str, payload: T) -> Envelope<T> {
        Envelope {
            schema: schema.to_string(),
            timestamp: chrono::Utc::now().to_rfc3339(),
            manifest: RunManifest {
                command: std::env::args().collect(),
                config: self.cfg.clone(),
                inputs: self.inputs.clone(),
                version: env!("CARGO_PKG_VERSION").to_string(),
            },
            payload,
        }
    }
}

fn emit(out: &Option<PathBuf>, text: &str) -> CliResult<()> {
    match out {
        Some(path) => {
            std::fs::write(path, text)?;
            Ok(())
        }
        None => {
            if text.ends_with('\n') {
                print!("{text}");
            } else {
                println!("{text}");
            }
            Ok(())
        }
    }
}

fn load_function(ctx: &mut Ctx, path: &Path) -> CliResult<WeightFunction> {
    let text = ctx.read(path)?;
    let value: serde_json::Value = serde_json::from_str(&text)?;
    if let Some(inner) = value.get("omega_of").and_then(|v| v.as_str()) {
        let seq = ctx.load_sequence(Path::new(inner))?;
        return Ok(WeightFunction::of_sequence(&seq)?);
    }
    let family = value.get("family").and_then(|v| v.as_str()).unwrap_or_default();
    let t_max = value.get("t_max").and_then(|v| v.as_f64()).unwrap_or(1e30);
    let closed = match family {
        "power" => {
            let alpha = value
                .get("alpha")
                .and_then(|v| v.as_f64())
                .ok_or_else(|| CliError::Input("power family needs 'alpha'".into()))?;
            Some(ClosedFormFamily::Power { alpha })
        }
        "t_log_t" => Some(ClosedFormFamily::TLogT),
        "log_power" => {
            let beta = value
                .get("beta")
                .and_then(|v| v.as_f64())
                .ok_or_else(|| CliError::Input("log_power family needs 'beta'".into()))?;
            Some(ClosedFormFamily::LogPower { beta })
        }
        "linear" => Some(ClosedFormFamily::Linear),
        _ => None,
    };
    match closed {
        Some(fam) => Ok(WeightFunction::closed_form(fam, t_max)?),
        None => {
            let spec: SequenceSpec = serde_json::from_value(value).map_err(|e| {
                CliError::Input(format!(
                    "{}: neither function nor sequence spec: {e}",
                    path.display()
                ))
            })?;
            let seq = spec.build()?;
            Ok(WeightFunction::of_sequence(&seq)?)
        }
    }
}

fn run_condition(
    id: ConditionId,
    m: &WeightSequence,
    pair: Option<&WeightSequence>,
    cfg: &TruncationConfig,
) -> CliResult<ConditionVerdict> {
    let other = pair.unwrap_or(m);
    let v = match id {
        ConditionId::Slc => conditions::check_slc(m, cfg),
        ConditionId::Mg => conditions::check_mg(m, cfg),
        ConditionId::Beta1 => conditions::check_beta1(m, cfg),
        ConditionId::Gamma1 => conditions::check_gamma1(m, cfg),
        ConditionId::Beta3 => conditions::check_beta3(m, cfg),
        ConditionId::Rai => conditions::check_rai(m, cfg),
        ConditionId::Raimixed => conditions::check_raimixed(m, cfg),
        ConditionId::RaimixedM => conditions::check_raimixed_m(m, cfg),
        ConditionId::Omega1Seq => conditions::check_omega1_seq(m, cfg),
        ConditionId::Alpha0MgForms => conditions::check_alpha0_mg_forms(m, cfg).overall,
        ConditionId::Omega1Mixed => conditions::check_omega1mixed(m, other, cfg),
        ConditionId::Omega7Seq => conditions::check_omega7_seq(m, cfg),
        ConditionId::Preceq => weightgrowth::seq::preceq(m, other, cfg),
        ConditionId::Equivalent => weightgrowth::seq::equivalent(m, other, cfg),
        other_id => {
            return Err(CliError::Input(format!(
                "condition '{other_id}' is not a sequence check"
            )))
        }
    };
    Ok(v)
}

#[derive(Serialize)]
struct CheckPayload {
    subject: String,
    verdicts: Vec<ConditionVerdict>,
}

fn run(cli: Cli) -> CliResult<ExitCode> {
    let mut ctx = Ctx {
        cfg: TruncationConfig::default(),
        cfg_explicit: false,
        inputs: BTreeMap::new(),
    };
    if let Some(path) = &cli.config {
        let text = ctx.read(path)?;
        ctx.cfg = serde_json::from_str(&text)
            .map_err(|e| CliError::Input(format!("config {}: {e}", path.display())))?;
        ctx.cfg.validate().map_err(CliError::from)?;
        ctx.cfg_explicit = true;
    }

    match cli.command {
        Command::Seq { spec, family, s, q, j, p, out } => {
            let seq = if let Some(path) = spec {
                ctx.load_sequence(&path)?
            } else {
                let family =
                    family.ok_or_else(|| CliError::Input("need --spec or --family".into()))?;
                match family.as_str() {
                    "gevrey" => WeightSequence::gevrey(
                        s.ok_or_else(|| CliError::Input("gevrey needs --s".into()))?,
                        p.ok_or_else(|| CliError::Input("gevrey needs --P".into()))?,
                    )?,
                    "q_gevrey" => WeightSequence::q_gevrey(
                        q.ok_or_else(|| CliError::Input("q_gevrey needs --q".into()))?,
                        p.ok_or_else(|| CliError::Input("q_gevrey needs --P".into()))?,
                    )?,
                    "beta3_counterexample" => {
                        let j = j.ok_or_else(|| {
                            CliError::Input("beta3_counterexample needs --J".into())
                        })?;
                        let (seq, blocks) = WeightSequence::beta3_counterexample_with_blocks(j)?;
                        eprintln!("block table (j, a_j, log c_j):");
                        for b in &blocks {
                            eprintln!("  {:>2}  {:>8}  {:.6}", b.j, b.a_j, b.log_c);
                        }
                        seq
                    }
                    other => return Err(CliError::Input(format!("unknown family '{other}'"))),
                }
            };
            let flags = seq.flags();
            eprintln!(
                "{}: P = {}, log-convex: {}, normalized: {}, divergent quotients: {} (LC: {})",
                seq.label(),
                seq.truncation(),
                flags.log_convex,
                flags.normalized,
                flags.divergent_quotients,
                flags.lc()
            );
            let envelope = ctx.envelope("weightgrowth.sequence/1", SequenceExport::of(&seq));
            emit(&out, &serde_json::to_string_pretty(&envelope)?)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Check { seq, conditions: wanted, pair, out } => {
            let m = ctx.load_sequence(&seq)?;
            let other = pair.map(|p| ctx.load_sequence(&p)).transpose()?;
            let cfg = ctx.cfg_for(&m);
            let ids: Vec<ConditionId> = if wanted.iter().any(|w| w == "all") {
                ConditionId::sequence_checks().to_vec()
            } else if wanted.is_empty() {
                return Err(CliError::Input("need --conditions (or 'all')".into()));
            } else {
                wanted
                    .iter()
                    .map(|w| ConditionId::from_str(w).map_err(CliError::from))
                    .collect::<CliResult<Vec<_>>>()?
            };
            let mut verdicts = Vec::new();
            for id in ids {
                let v = run_condition(id, &m, other.as_ref(), &cfg)?;
                eprintln!("{v}");
                verdicts.push(v);
            }
            let envelope = ctx.envelope(
                "weightgrowth.verdicts/1",
                CheckPayload { subject: m.label().to_string(), verdicts },
            );
            emit(&out, &serde_json::to_string_pretty(&envelope)?)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Omega { seq, t, grid, out } => {
            let m = ctx.load_sequence(&seq)?;
            match (t, grid) {
                (Some(t), None) => {
                    let w = AssocWeight::new(&m)?;
                    let v = w.eval(t)?;
                    emit(&out, &format!("{v}"))?;
                }
                (None, Some(spec)) => {
                    let parts: Vec<&str> = spec.split(',').collect();
                    if parts.len() != 3 {
                        return Err(CliError::Input("grid must be min,max,points".into()));
                    }
                    let t_min: f64 =
                        parts[0].parse().map_err(|_| CliError::Input("bad grid min".into()))?;
                    let t_max: f64 =
                        parts[1].parse().map_err(|_| CliError::Input("bad grid max".into()))?;
                    let points: usize =
                        parts[2].parse().map_err(|_| CliError::Input("bad grid points".into()))?;
                    emit(&out, &omega_csv(&m, t_min, t_max, points)?)?;
                }
                _ => return Err(CliError::Input("need exactly one of --t or --grid".into())),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Conjugate { fn_spec, seq, x_max, points, out } => {
            let omega = match (fn_spec, seq) {
                (Some(path), None) => load_function(&mut ctx, &path)?,
                (None, Some(path)) => {
                    let m = ctx.load_sequence(&path)?;
                    WeightFunction::of_sequence(&m)?
                }
                _ => return Err(CliError::Input("need exactly one of --fn-spec or --seq".into())),
            };
            emit(&out, &conjugate_csv(&omega, x_max, points)?)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Matrix { seq, l_grid, p_cap, out } => {
            let m = ctx.load_sequence(&seq)?;
            let omega = WeightFunction::of_sequence(&m)?;
            let grid = if l_grid.is_empty() { DEFAULT_L_GRID.to_vec() } else { l_grid };
            let cap = p_cap.unwrap_or_else(|| m.truncation().min(ctx.cfg_for(&m).p));
            let mx = build_matrix(&omega, &grid, cap)?;
            let envelope = ctx.envelope("weightgrowth.matrix/1", MatrixExport::of(&mx));
            emit(&out, &serde_json::to_string_pretty(&envelope)?)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { subject, theorem, out } => {
            let id = TheoremId::from_str(&theorem)?;
            let text = ctx.read(&subject)?;
            let value: serde_json::Value = serde_json::from_str(&text)?;
            let is_function_spec = value
                .get("family")
                .and_then(|v| v.as_str())
                .map(|f| matches!(f, "power" | "t_log_t" | "log_power" | "linear"))
                .unwrap_or(false)
                || value.get("omega_of").is_some();
            let report: TheoremReport = if is_function_spec {
                let f = load_function(&mut ctx, &subject)?;
                verify_theorem(id, &Subject::Function(f), &ctx.cfg)?
            } else {
                let m = ctx.load_sequence(&subject)?;
                let cfg = ctx.cfg_for(&m);
                verify_theorem(id, &Subject::Sequence(m), &cfg)?
            };
            eprintln!(
                "{} on {}: {:?}{}",
                report.theorem_id,
                report.subject,
                report.consistency,
                report
                    .rejected_reason
                    .as_deref()
                    .map(|r| format!(" (rejected: {r})"))
                    .unwrap_or_default()
            );
            let violated = report.consistency == Consistency::Violated;
            let envelope = ctx.envelope("weightgrowth.report/1", report);
            emit(&out, &serde_json::to_string_pretty(&envelope)?)?;
            if violated {
                return Ok(ExitCode::from(3));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Corpus { n, profile, theorems, seed, out, report_dir } => {
            let profile = CorpusProfile::from_str(&profile)?;
            if let Some(seed) = seed {
                ctx.cfg.seed = seed;
            }
            let ids: Vec<TheoremId> = if theorems.is_empty() {
                vec![TheoremId::Chain]
            } else {
                theorems
                    .iter()
                    .map(|t| TheoremId::from_str(t).map_err(CliError::from))
                    .collect::<CliResult<Vec<_>>>()?
            };
            let corpus = random_lc_corpus(n, profile, &ctx.cfg)?;
            let (summary, reports) = sweep(&corpus, &ids, &ctx.cfg)?;
            if let Some(dir) = report_dir {
                std::fs::create_dir_all(&dir)?;
                for (i, report) in reports.iter().enumerate() {
                    let path = dir.join(format!("report-{i:04}-{}.json", report.theorem_id));
                    std::fs::write(&path, serde_json::to_string_pretty(report)?)?;
                }
            }
            eprintln!(
                "{} subjects: {} consistent, {} violated, {} inconclusive, {} rejected",
                summary.subjects,
                summary.consistent,
                summary.violated,
                summary.inconclusive,
                summary.rejected
            );
            let violated = summary.violated > 0;
            let envelope = ctx.envelope("weightgrowth.summary/1", summary);
            emit(&out, &serde_json::to_string_pretty(&envelope)?)?;
            if violated {
                return Ok(ExitCode::from(3));
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(CliError::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
