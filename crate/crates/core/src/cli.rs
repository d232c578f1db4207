//! Command-line front end.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error. The
//! environment variable `NONLOCALITY_LAB_THREADS` caps the worker pool.
//! Reports contain no timings, so identical arguments give identical bytes.

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::correlation::{
    check_no_signaling, check_outcome_independence, check_parameter_independence, ChshReport,
    CorrelationSet, NonlocalityClass, OutcomeIndependenceReport, ParameterIndependenceReport,
    SignalingReport,
};
use crate::crypto::{closed_form_chsh, region_scan, tau_average_chsh, ClosedFormVariant};
use crate::entangled::{verify_theorem_machinery, TheoremReport, MAX_DIMENSION};
use crate::error::Error;
use crate::pr_box::{pr_chsh, pr_ideal_table};
use crate::singlet_sim::{random_direction_pairs, SingletSummary};

pub const EXIT_SUCCESS: i32 = 0;
pub const EXIT_VERIFICATION_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

pub const THREADS_ENV: &str = "NONLOCALITY_LAB_THREADS";

/// Standard errors allowed between a Monte Carlo estimate and its reference.
pub const SIGMA_THRESHOLD: f64 = 4.0;

/// Allowed gap between the `τ`-average and the singlet value.
pub const TAU_AVERAGE_TOLERANCE: f64 = 1e-6;

#[derive(Debug, Parser)]
#[command(
    name = "nonlocality-lab",
    version,
    about = "Local, quantum and superquantum correlation models"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Ideal PR box: table, CHSH value and independence verdicts.
    Prbox {
        #[arg(long)]
        json: bool,
    },
    /// Singlet correlations from one PR box per round.
    Singlet {
        /// Rounds per direction pair.
        #[arg(long, default_value_t = 1_000_000)]
        n: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of random direction pairs.
        #[arg(long, default_value_t = 5)]
        pairs: usize,
        #[arg(long)]
        json: bool,
    },
    /// Crypto-nonlocal hidden-variable model.
    Crypto {
        #[command(subcommand)]
        command: CryptoCommand,
    },
    /// Numerical checks of the entangled-state operator identities.
    Theorem {
        #[arg(long, default_value_t = 2)]
        nmin: usize,
        #[arg(long, default_value_t = 6)]
        nmax: usize,
        #[arg(long, default_value_t = 50)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Subcommand)]
pub enum CryptoCommand {
    /// Conditional CHSH at one (α, τ) with the closed-form comparison.
    Eval {
        #[arg(long, allow_negative_numbers = true)]
        alpha: f64,
        #[arg(long, allow_negative_numbers = true)]
        tau: f64,
        #[arg(long)]
        json: bool,
    },
    /// Grid of conditional CHSH values over [0, π/4] × [0, π).
    Scan {
        /// `ALPHAxTAU` cell counts.
        #[arg(long, default_value = "200x200")]
        grid: String,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// τ-averaged CHSH value against the singlet value.
    TauAverage {
        #[arg(long, allow_negative_numbers = true)]
        alpha: f64,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

/// Validated run parameters shared by the sampling and scanning commands.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RunConfig {
    pub seed: u64,
    pub samples: u64,
    pub grid: (usize, usize),
    pub out: Option<PathBuf>,
    pub format: Format,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            seed: 0,
            samples: 1,
            grid: (
                crate::crypto::scan::DEFAULT_GRID,
                crate::crypto::scan::DEFAULT_GRID,
            ),
            out: None,
            format: Format::Csv,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), Error> {
        if self.samples < 1 {
            return Err(Error::InvalidArgument("samples must be at least 1".into()));
        }
        if self.grid.0 < 2 || self.grid.1 < 2 {
            return Err(Error::InvalidArgument(
                "grid dimensions must be at least 2".into(),
            ));
        }
        Ok(())
    }
}

/// Parses `"AxB"` into `(A, B)`.
pub fn parse_grid(s: &str) -> Result<(usize, usize), Error> {
    let bad = || Error::InvalidArgument(format!("grid {s:?} is not of the form AxB"));
    let (a, b) = s.split_once(['x', 'X']).ok_or_else(bad)?;
    Ok((
        a.trim().parse().map_err(|_| bad())?,
        b.trim().parse().map_err(|_| bad())?,
    ))
}

enum Failure {
    Usage(String),
    Io(std::io::Error),
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Io(e.into())
    }
}

type Outcome = std::result::Result<bool, Failure>;

fn verdict(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn write_json<T: Serialize>(out: &mut dyn Write, value: &T) -> std::io::Result<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)
}

#[derive(Serialize)]
struct PrBoxReport {
    table: crate::correlation::BoxTable,
    chsh: ChshReport,
    no_signaling: SignalingReport,
    parameter_independence: ParameterIndependenceReport,
    outcome_independence: OutcomeIndependenceReport,
    expected_verdicts: bool,
}

fn cmd_prbox(json: bool, out: &mut dyn Write) -> Outcome {
    let table = pr_ideal_table();
    let chsh = pr_chsh();
    let report = PrBoxReport {
        table,
        chsh,
        no_signaling: check_no_signaling(&table),
        parameter_independence: check_parameter_independence(&table),
        outcome_independence: check_outcome_independence(&table),
        expected_verdicts: false,
    };
    let ok = chsh.f == 4.0
        && report.no_signaling.holds
        && report.parameter_independence.holds
        && !report.outcome_independence.holds;
    let report = PrBoxReport {
        expected_verdicts: ok,
        ..report
    };
    if json {
        write_json(out, &report)?;
    } else {
        writeln!(out, "{table}")?;
        writeln!(out, "F = {:.6}, class = {}", chsh.f, chsh.class)?;
        writeln!(out, "no-signaling: {}", verdict(report.no_signaling.holds))?;
        writeln!(
            out,
            "parameter independence: {}",
            verdict(report.parameter_independence.holds)
        )?;
        writeln!(
            out,
            "outcome independence: {}",
            verdict(report.outcome_independence.holds)
        )?;
        if let Some(w) = report.outcome_independence.witness {
            writeln!(
                out,
                "  witness: x={} y={} {:?} outcome {} given remote {}: {:.6} vs marginal {:.6}",
                w.x, w.y, w.party, w.outcome, w.conditioned_on, w.conditional, w.marginal
            )?;
        }
        writeln!(out, "expected verdicts: {}", verdict(ok))?;
    }
    Ok(ok)
}

#[derive(Serialize)]
struct SingletRow {
    #[serde(flatten)]
    summary: SingletSummary,
    a_dot_b: f64,
    pass: bool,
}

fn cmd_singlet(cfg: &RunConfig, pairs: usize, json: bool, out: &mut dyn Write) -> Outcome {
    cfg.validate()?;
    if pairs == 0 {
        return Err(Failure::Usage("pairs must be at least 1".into()));
    }
    let rows = random_direction_pairs(cfg.seed, pairs)
        .into_iter()
        .enumerate()
        .map(|(i, (a, b))| {
            let summary =
                SingletSummary::simulate(a, b, cfg.samples, cfg.seed.wrapping_add(i as u64))?;
            Ok(SingletRow {
                summary,
                a_dot_b: a.dot(&b),
                pass: summary.within_sigmas(SIGMA_THRESHOLD),
            })
        })
        .collect::<Result<Vec<_>, Error>>()?;
    let ok = rows.iter().all(|r| r.pass);
    if json {
        write_json(out, &rows)?;
    } else {
        writeln!(
            out,
            "n = {}, seed = {}, threshold = {SIGMA_THRESHOLD} sigma",
            cfg.samples, cfg.seed
        )?;
        writeln!(
            out,
            "{:>10} {:>10} {:>10} {:>10}  result",
            "a.b", "e_hat", "-a.b", "stderr"
        )?;
        for r in &rows {
            writeln!(
                out,
                "{:>10.6} {:>10.6} {:>10.6} {:>10.6}  {}",
                r.a_dot_b,
                r.summary.e_hat,
                r.summary.quantum_reference,
                r.summary.stderr,
                verdict(r.pass)
            )?;
        }
    }
    Ok(ok)
}

#[derive(Serialize)]
struct ClosedFormSummary {
    printed: [f64; 4],
    normalized: [f64; 4],
    printed_f: f64,
    normalized_f: f64,
    singular: bool,
}

#[derive(Serialize)]
struct Discrepancy {
    printed: f64,
    normalized: f64,
    matching: Option<ClosedFormVariant>,
}

#[derive(Serialize)]
struct EvalReport {
    alpha: f64,
    tau: f64,
    correlations: CorrelationSet,
    f: f64,
    class: NonlocalityClass,
    closed_form: ClosedFormSummary,
    discrepancy: Discrepancy,
}

fn cmd_crypto_eval(alpha: f64, tau: f64, json: bool, out: &mut dyn Write) -> Outcome {
    let c = closed_form_chsh(alpha, tau)?;
    let report = EvalReport {
        alpha,
        tau,
        correlations: c.exact.correlations,
        f: c.exact.report.f,
        class: c.exact.report.class,
        closed_form: ClosedFormSummary {
            printed: c.printed.correlations,
            normalized: c.normalized.correlations,
            printed_f: c.printed.f,
            normalized_f: c.normalized.f,
            singular: c.chi.is_singular(),
        },
        discrepancy: Discrepancy {
            printed: c.printed_deviation,
            normalized: c.normalized_deviation,
            matching: c.matching,
        },
    };
    if json {
        write_json(out, &report)?;
    } else {
        let e = report.correlations.as_array();
        writeln!(out, "alpha = {alpha}, tau = {tau}")?;
        writeln!(
            out,
            "E(a,b) = {:.9}, E(a,b') = {:.9}, E(a',b) = {:.9}, E(a',b') = {:.9}",
            e[0], e[1], e[2], e[3]
        )?;
        writeln!(out, "F = {:.9}, class = {}", report.f, report.class)?;
        if report.closed_form.singular {
            writeln!(out, "closed form: singular point")?;
        } else {
            writeln!(
                out,
                "closed form printed: F = {:.9}, max deviation {:.3e}",
                c.printed.f, c.printed_deviation
            )?;
            writeln!(
                out,
                "closed form normalized: F = {:.9}, max deviation {:.3e}",
                c.normalized.f, c.normalized_deviation
            )?;
        }
        let name = match c.matching {
            Some(ClosedFormVariant::Printed) => "printed",
            Some(ClosedFormVariant::Normalized) => "normalized",
            None => "none",
        };
        writeln!(out, "matching variant: {name}")?;
    }
    Ok(true)
}

fn cmd_crypto_scan(cfg: &RunConfig, out: &mut dyn Write) -> Outcome {
    cfg.validate()?;
    let scan = region_scan(cfg.grid.0, cfg.grid.1)?;
    let path = cfg
        .out
        .as_ref()
        .ok_or_else(|| Failure::Usage("--out is required".into()))?;
    let mut file = BufWriter::new(File::create(path)?);
    match cfg.format {
        Format::Csv => scan.write_csv(&mut file)?,
        Format::Json => scan.write_json(&mut file)?,
    }
    file.flush()?;
    let counts = scan.class_counts();
    writeln!(
        out,
        "wrote {} cells to {}",
        scan.cells.len(),
        path.display()
    )?;
    for (class, n) in &counts {
        writeln!(out, "{class}: {n}")?;
    }
    if let Some(m) = scan.max_abs_cell() {
        writeln!(
            out,
            "max |F| = {:.9} at alpha = {:.6}, tau = {:.6}",
            m.f.abs(),
            m.alpha,
            m.tau
        )?;
    }
    Ok(true)
}

fn cmd_crypto_tau_average(alpha: f64, json: bool, out: &mut dyn Write) -> Outcome {
    let t = tau_average_chsh(alpha)?;
    let ok = (t.value - t.quantum).abs() <= TAU_AVERAGE_TOLERANCE;
    if json {
        #[derive(Serialize)]
        struct Report {
            #[serde(flatten)]
            average: crate::crypto::TauAverage,
            pass: bool,
        }
        write_json(
            out,
            &Report {
                average: t,
                pass: ok,
            },
        )?;
    } else {
        writeln!(out, "alpha = {alpha}")?;
        writeln!(
            out,
            "tau-average F = {:.9} (quadrature error {:.1e})",
            t.value, t.error_estimate
        )?;
        writeln!(out, "singlet value = {:.9}", t.quantum)?;
        writeln!(
            out,
            "-1 - 2cos(alpha) + cos(2 alpha) = {:.9} (reference only)",
            t.printed_formula
        )?;
        writeln!(
            out,
            "agreement within {TAU_AVERAGE_TOLERANCE:e}: {}",
            verdict(ok)
        )?;
    }
    Ok(ok)
}

fn cmd_theorem(
    nmin: usize,
    nmax: usize,
    trials: usize,
    seed: u64,
    json: bool,
    out: &mut dyn Write,
) -> Outcome {
    if nmin < 2 || nmin > nmax || nmax > MAX_DIMENSION {
        return Err(Failure::Usage(format!(
            "need 2 <= nmin <= nmax <= {MAX_DIMENSION}"
        )));
    }
    let report: TheoremReport = verify_theorem_machinery(nmin, nmax, trials, seed)?;
    if json {
        write_json(out, &report)?;
        return Ok(report.pass);
    }
    writeln!(out, "seed = {seed}, trials = {trials}")?;
    for d in &report.dimensions {
        if d.kernel_dimension == 0 {
            writeln!(
                out,
                "N = {}: spectrum {{-1, +1}}, empty kernel",
                d.dimension
            )?;
        } else {
            writeln!(
                out,
                "N = {}: spectrum {{-1, 0, +1}}, kernel dimension {}",
                d.dimension, d.kernel_dimension
            )?;
        }
        for c in &d.checks {
            writeln!(
                out,
                "  {:<30} {:>10.3e} < {:.0e}  {}",
                c.name,
                c.max_residual,
                c.tolerance,
                verdict(c.pass)
            )?;
        }
    }
    let b = &report.bound;
    writeln!(out, "bound n = 1: {:.6}", b.at_one)?;
    writeln!(
        out,
        "bound n = 1000000: {:.6e}  {}",
        b.at_million,
        verdict(b.at_million < 3e-6)
    )?;
    writeln!(
        out,
        "bound strictly decreasing on n = 2..1024: {}",
        verdict(b.strictly_decreasing)
    )?;
    writeln!(out, "overall: {}", verdict(report.pass))?;
    Ok(report.pass)
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> Outcome {
    match cli.command {
        Command::Prbox { json } => cmd_prbox(json, out),
        Command::Singlet {
            n,
            seed,
            pairs,
            json,
        } => {
            let cfg = RunConfig {
                seed,
                samples: n,
                ..RunConfig::default()
            };
            cmd_singlet(&cfg, pairs, json, out)
        }
        Command::Crypto { command } => match command {
            CryptoCommand::Eval { alpha, tau, json } => cmd_crypto_eval(alpha, tau, json, out),
            CryptoCommand::Scan {
                grid,
                out: path,
                format,
            } => {
                let cfg = RunConfig {
                    grid: parse_grid(&grid)?,
                    out: Some(path),
                    format,
                    ..RunConfig::default()
                };
                cmd_crypto_scan(&cfg, out)
            }
            CryptoCommand::TauAverage { alpha, json } => cmd_crypto_tau_average(alpha, json, out),
        },
        Command::Theorem {
            nmin,
            nmax,
            trials,
            seed,
            json,
        } => cmd_theorem(nmin, nmax, trials, seed, json, out),
    }
}

fn thread_cap() -> Result<Option<usize>, String> {
    match std::env::var(THREADS_ENV) {
        Err(_) => Ok(None),
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n >= 1 => Ok(Some(n)),
            _ => Err(format!(
                "{THREADS_ENV} must be a positive integer, got {v:?}"
            )),
        },
    }
}

/// Parses `args` (including the program name), runs the command and returns
/// the exit code. Reports go to `out`, diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_SUCCESS
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_USAGE
                }
            };
        }
    };
    let pool = match thread_cap() {
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            return EXIT_USAGE;
        }
        Ok(cap) => {
            let mut builder = rayon::ThreadPoolBuilder::new();
            if let Some(n) = cap {
                builder = builder.num_threads(n);
            }
            match builder.build() {
                Ok(pool) => pool,
                Err(e) => {
                    let _ = writeln!(err, "error: {e}");
                    return EXIT_VERIFICATION_FAILURE;
                }
            }
        }
    };
    let (result, buffer) = pool.install(|| {
        let mut buffer = Vec::new();
        let result = dispatch(cli, &mut buffer);
        (result, buffer)
    });
    if let Err(e) = out.write_all(&buffer) {
        let _ = writeln!(err, "error: {e}");
        return EXIT_VERIFICATION_FAILURE;
    }
    match result {
        Ok(true) => EXIT_SUCCESS,
        Ok(false) => EXIT_VERIFICATION_FAILURE,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_VERIFICATION_FAILURE
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut full = vec!["nonlocality-lab"];
        full.extend_from_slice(args);
        let code = run(full, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn grid_parsing() {
        assert_eq!(parse_grid("200x150").unwrap(), (200, 150));
        assert!(parse_grid("200").is_err());
        assert!(parse_grid("ax2").is_err());
    }

    #[test]
    fn run_config_validation() {
        assert!(RunConfig::default().validate().is_ok());
        let bad = RunConfig {
            samples: 0,
            ..RunConfig::default()
        };
        assert!(bad.validate().is_err());
        let bad = RunConfig {
            grid: (1, 5),
            ..RunConfig::default()
        };
        assert!(bad.validate().is_err());
    }

    #[test]
    fn prbox_text() {
        let (code, out, _) = run_str(&["prbox"]);
        assert_eq!(code, 0);
        assert!(out.contains("F = 4.000000, class = superquantum"));
        assert!(out.contains("no-signaling: PASS"));
        assert!(out.contains("parameter independence: PASS"));
        assert!(out.contains("outcome independence: FAIL"));
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run_str(&["singlet", "--n", "0"]).0, 2);
        assert_eq!(
            run_str(&["crypto", "eval", "--alpha", "2", "--tau", "0.1"]).0,
            2
        );
        assert_eq!(
            run_str(&["crypto", "eval", "--alpha", "0.1", "--tau", "-0.1"]).0,
            2
        );
        assert_eq!(run_str(&["theorem", "--nmin", "3", "--nmax", "2"]).0, 2);
        assert_eq!(run_str(&["bogus"]).0, 2);
    }
}
