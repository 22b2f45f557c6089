//! Command-line front end shared by the `zic` binary and the tests.
//!
//! Subcommands: `single-user`, `regime`, `scheme`, `sweep`. Exit code 0 on
//! success and 2 on usage or domain errors.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::math::ToleranceConfig;
use crate::regimes::{overlap_required, regime_report, ZicConfig};
use crate::schemes::{best_scheme, evaluate, SchemeEvaluation, SchemeId};
use crate::single_user::{single_user_optimum, UserProfile};
use crate::sweep::{sweep, write_csv, write_json, SweepSpec};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 2;

/// Profile used when neither flags nor a config file set a value.
const DEFAULT_POWER: f64 = 3.5;
const DEFAULT_EPS: f64 = 2.0;

#[derive(Debug, Parser)]
#[command(
    name = "zic",
    about = "Bursty transmission and sum rates for the Gaussian Z-interference channel with processing cost"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Optimal burst fraction and on-power of one user transmitting alone.
    SingleUser {
        #[arg(long)]
        power: f64,
        #[arg(long)]
        eps: f64,
        #[arg(long)]
        json: bool,
    },
    /// Overlap requirement and the very-strong-interference threshold.
    Regime {
        #[command(flatten)]
        users: UserArgs,
        #[arg(long)]
        json: bool,
    },
    /// Evaluate one scheme (or all that apply) at a single cross gain.
    Scheme {
        #[command(flatten)]
        users: UserArgs,
        #[arg(long)]
        a: f64,
        /// I, II, III, IV, V, UPPER_BOUND or `best`; all applicable when omitted.
        #[arg(long)]
        scheme: Option<String>,
        #[arg(long)]
        fast: bool,
        #[arg(long)]
        json: bool,
    },
    /// Sum rates of every scheme on a uniform grid of cross gains.
    Sweep {
        #[command(flatten)]
        users: UserArgs,
        #[arg(long, default_value_t = 0.0)]
        a_min: f64,
        #[arg(long, default_value_t = 5.0)]
        a_max: f64,
        #[arg(long, default_value_t = 51)]
        steps: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Coarse grids; quicker but not authoritative.
        #[arg(long)]
        fast: bool,
        /// Compute rows one after another instead of in parallel.
        #[arg(long)]
        sequential: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Args)]
pub struct UserArgs {
    #[arg(long)]
    pub p1: Option<f64>,
    #[arg(long)]
    pub eps1: Option<f64>,
    #[arg(long)]
    pub p2: Option<f64>,
    #[arg(long)]
    pub eps2: Option<f64>,
    /// Key-value file with any of p1, eps1, p2, eps2; flags take precedence.
    #[arg(long)]
    pub config: Option<PathBuf>,
}

/// Contents of a `--config` file.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct UserFile {
    pub p1: Option<f64>,
    pub eps1: Option<f64>,
    pub p2: Option<f64>,
    pub eps2: Option<f64>,
}

impl UserFile {
    pub fn load(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path)
            .map_err(|e| Error::domain(format!("cannot read {}: {e}", path.display())))?;
        toml::from_str(&text)
            .map_err(|e| Error::domain(format!("bad config {}: {e}", path.display())))
    }
}

impl UserArgs {
    pub fn resolve(&self) -> Result<(UserProfile, UserProfile)> {
        let file = match &self.config {
            Some(path) => UserFile::load(path)?,
            None => UserFile::default(),
        };
        let pick = |flag: Option<f64>, file: Option<f64>, default: f64| flag.or(file).unwrap_or(default);
        let u1 = UserProfile::new(
            pick(self.p1, file.p1, DEFAULT_POWER),
            pick(self.eps1, file.eps1, DEFAULT_EPS),
        )?;
        let u2 = UserProfile::new(
            pick(self.p2, file.p2, DEFAULT_POWER),
            pick(self.eps2, file.eps2, DEFAULT_EPS),
        )?;
        Ok((u1, u2))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SingleUserReport {
    pub theta_star: f64,
    pub nu_star: f64,
    pub rate: f64,
}

pub fn cmd_single_user(power: f64, eps: f64) -> Result<SingleUserReport> {
    let o = single_user_optimum(&UserProfile::new(power, eps)?)?;
    Ok(SingleUserReport {
        theta_star: o.theta_star,
        nu_star: o.nu_star,
        rate: o.rate,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RegimeCliReport {
    pub theta1_star: f64,
    pub theta2_star: f64,
    pub overlap_required: bool,
    pub rho: Option<f64>,
    pub very_strong_threshold: Option<f64>,
    /// Very-strong threshold `1 + P1` of the same channel without
    /// processing cost.
    pub no_overhead_threshold: f64,
}

pub fn cmd_regime(u1: &UserProfile, u2: &UserProfile) -> Result<RegimeCliReport> {
    let t1 = single_user_optimum(u1)?.theta_star;
    let t2 = single_user_optimum(u2)?.theta_star;
    let (rho, threshold) = if overlap_required(u1, u2)? {
        // The cross gain does not enter rho or the threshold.
        let r = regime_report(&ZicConfig::new(1.0, *u1, *u2)?)?;
        (r.rho, r.threshold_a)
    } else {
        (None, None)
    };
    Ok(RegimeCliReport {
        theta1_star: t1,
        theta2_star: t2,
        overlap_required: t1 + t2 > 1.0,
        rho,
        very_strong_threshold: threshold,
        no_overhead_threshold: 1.0 + u1.power_budget,
    })
}

pub fn cmd_scheme(
    cfg: &ZicConfig,
    scheme: Option<&str>,
    tol: &ToleranceConfig,
) -> Result<Vec<SchemeEvaluation>> {
    match scheme {
        Some(s) if s.eq_ignore_ascii_case("best") => Ok(vec![best_scheme(cfg, tol)?]),
        Some(s) => {
            let id: SchemeId = s.parse()?;
            match evaluate(id, cfg, tol)? {
                Some(e) => Ok(vec![e]),
                None => Err(Error::domain(format!(
                    "scheme {id} is not defined at a = {}",
                    cfg.cross_gain
                ))),
            }
        }
        None => {
            let mut out = Vec::new();
            for id in SchemeId::SCHEMES.into_iter().chain([SchemeId::UpperBound]) {
                if let Some(e) = evaluate(id, cfg, tol)? {
                    out.push(e);
                }
            }
            Ok(out)
        }
    }
}

fn io_error(e: std::io::Error) -> Error {
    Error::domain(format!("write: {e}"))
}

fn write_json_doc<T: Serialize, W: Write>(value: &T, out: &mut W) -> Result<()> {
    serde_json::to_writer_pretty(&mut *out, value).map_err(|e| Error::domain(format!("json: {e}")))?;
    writeln!(out).map_err(io_error)
}

fn opt_text(v: Option<f64>) -> String {
    v.map(|x| format!("{x:.6}")).unwrap_or_else(|| "null".to_string())
}

fn tolerance(fast: bool) -> ToleranceConfig {
    if fast {
        ToleranceConfig::fast()
    } else {
        ToleranceConfig::default()
    }
}

fn execute<W: Write>(cmd: Command, out: &mut W) -> Result<()> {
    match cmd {
        Command::SingleUser { power, eps, json } => {
            let r = cmd_single_user(power, eps)?;
            if json {
                write_json_doc(&r, out)
            } else {
                writeln!(
                    out,
                    "theta_star = {:.6}\nnu_star = {:.6}\nrate = {:.6}",
                    r.theta_star, r.nu_star, r.rate
                )
                .map_err(io_error)
            }
        }
        Command::Regime { users, json } => {
            let (u1, u2) = users.resolve()?;
            let r = cmd_regime(&u1, &u2)?;
            if json {
                write_json_doc(&r, out)
            } else {
                writeln!(
                    out,
                    "theta1_star = {:.6}\ntheta2_star = {:.6}\noverlap_required = {}\nrho = {}\n\
                     very_strong_threshold = {}\nno_overhead_threshold = {:.6}",
                    r.theta1_star,
                    r.theta2_star,
                    r.overlap_required,
                    opt_text(r.rho),
                    opt_text(r.very_strong_threshold),
                    r.no_overhead_threshold
                )
                .map_err(io_error)
            }
        }
        Command::Scheme {
            users,
            a,
            scheme,
            fast,
            json,
        } => {
            let (u1, u2) = users.resolve()?;
            let cfg = ZicConfig::new(a, u1, u2)?;
            let evals = cmd_scheme(&cfg, scheme.as_deref(), &tolerance(fast))?;
            if json {
                return write_json_doc(&evals, out);
            }
            for e in &evals {
                write!(out, "scheme = {}\nfeasible = {}\nsum_rate = {:.6}\n", e.scheme, e.feasible, e.sum_rate)
                    .map_err(io_error)?;
                for (k, v) in &e.params {
                    writeln!(out, "{k} = {v:.6}").map_err(io_error)?;
                }
                writeln!(out).map_err(io_error)?;
            }
            Ok(())
        }
        Command::Sweep {
            users,
            a_min,
            a_max,
            steps,
            format,
            fast,
            sequential,
        } => {
            let (user1, user2) = users.resolve()?;
            let spec = SweepSpec {
                user1,
                user2,
                a_min,
                a_max,
                steps,
            };
            let rows = sweep(&spec, &tolerance(fast), !sequential)?;
            match format {
                Format::Csv => write_csv(&rows, out),
                Format::Json => write_json(&rows, out),
            }
        }
    }
}

/// Parses `args` (program name first) and runs the subcommand, returning
/// the process exit code.
pub fn run<I, T, W, E>(args: I, out: &mut W, err: &mut E) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
    W: Write,
    E: Write,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{e}");
                return EXIT_ERROR;
            }
            let _ = write!(out, "{e}");
            return EXIT_OK;
        }
    };
    match execute(cli.command, out) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_ERROR
        }
    }
}
