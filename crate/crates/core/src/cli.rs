//! `bdl` command-line front end.
//!
//! Settings come from an optional `--config` file, then `--set key=value`
//! pairs, then the dedicated flags, later sources winning. Every subcommand
//! is deterministic given the effective configuration.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;

use crate::config::RunConfig;
use crate::error::{Error, Result};
use crate::regret::{self, fit_log, fit_power, fit_sqrt, RateFit, RegretCurve};
use crate::rng::NoiseStream;
use crate::sim::{simulate_threshold_path, SimConfig};
use crate::stationary::StationaryLaw;
use crate::stats::{ks_critical_value, ks_statistic, MeanEstimate};

/// Environment variable capping the number of worker threads.
pub const THREADS_ENV: &str = "BDL_THREADS";

#[derive(Debug, Parser)]
#[command(name = "bdl", version, about = "Threshold control and learning for Brownian motion with broken drift")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Debug, Args)]
struct Common {
    /// Flat key = value configuration file.
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,
    /// Master seed for all noise streams.
    #[arg(long, global = true, value_name = "U64")]
    seed: Option<u64>,
    /// Number of replications.
    #[arg(long, global = true, value_name = "N")]
    reps: Option<usize>,
    /// Time step.
    #[arg(long, global = true, value_name = "F")]
    dt: Option<f64>,
    /// Output file.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Also write a gnuplot script next to the output CSV.
    #[arg(long, global = true)]
    plot_script: bool,
    /// Override any configuration key.
    #[arg(long = "set", global = true, value_name = "KEY=VALUE")]
    overrides: Vec<String>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the closed-form solution of the control problem.
    Solve,
    /// Simulate threshold-controlled paths and compare with the stationary moments.
    Simulate,
    /// Estimate a regret curve and write it as CSV.
    Regret,
    /// Fit growth rates to a regret CSV.
    Fit {
        /// CSV to read; overrides the `input` key.
        input: Option<PathBuf>,
    },
    /// Check the exact sampler and simulated moments against the stationary law.
    StationaryCheck,
}

/// Parses `args` (program name first), runs the subcommand and returns the
/// process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    0
                }
                _ => {
                    let _ = write!(err, "{text}");
                    1
                }
            };
        }
    };
    match execute(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn execute(cli: Cli, out: &mut dyn Write) -> Result<i32> {
    let cfg = effective_config(&cli)?;
    let pool = thread_pool()?;
    let mut buf: Vec<u8> = Vec::new();
    let result = pool.install(|| {
        let w = &mut buf;
        match cli.command {
            Command::Solve => solve(&cfg, w).map(|_| 0),
            Command::Simulate => simulate(&cfg, w).map(|_| 0),
            Command::Regret => regret_cmd(&cfg, w).map(|_| 0),
            Command::Fit { ref input } => fit(input.as_deref().or(cfg.input.as_deref()), w).map(|_| 0),
            Command::StationaryCheck => stationary_check(&cfg, w),
        }
    });
    out.write_all(&buf).map_err(stdout_err)?;
    result
}

fn effective_config(cli: &Cli) -> Result<RunConfig> {
    let c = &cli.common;
    let mut cfg = match &c.config {
        Some(path) => RunConfig::from_file(path)?,
        None => RunConfig::default(),
    };
    for kv in &c.overrides {
        let (k, v) = kv.split_once('=').ok_or_else(|| Error::Config {
            key: kv.clone(),
            message: "expected KEY=VALUE".into(),
        })?;
        cfg.set(k.trim(), v.trim())?;
    }
    if let Some(seed) = c.seed {
        cfg.master_seed = seed;
    }
    if let Some(reps) = c.reps {
        cfg.n_reps = reps;
    }
    if let Some(dt) = c.dt {
        cfg.dt = dt;
    }
    if let Some(out) = &c.out {
        cfg.out = Some(out.clone());
    }
    if c.plot_script {
        cfg.plot_script = true;
    }
    cfg.validate()?;
    Ok(cfg)
}

/// Pool sized by `BDL_THREADS`, or rayon's default when unset.
fn thread_pool() -> Result<rayon::ThreadPool> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Ok(v) = std::env::var(THREADS_ENV) {
        let n: usize = v.trim().parse().ok().filter(|&n| n > 0).ok_or_else(|| Error::Config {
            key: THREADS_ENV.into(),
            message: format!("expected a positive integer, got `{v}`"),
        })?;
        builder = builder.num_threads(n);
    }
    builder
        .build()
        .map_err(|e| Error::Numeric(format!("cannot start worker threads: {e}")))
}

fn io_at(path: &Path) -> impl Fn(std::io::Error) -> Error + '_ {
    move |e| Error::io(path, e)
}

fn stdout_err(e: std::io::Error) -> Error {
    Error::io("<stdout>", e)
}

fn write_file(path: &Path, bytes: &[u8]) -> Result<()> {
    std::fs::write(path, bytes).map_err(io_at(path))
}

fn sidecar(path: &Path, ext: &str) -> PathBuf {
    let mut s = path.as_os_str().to_owned();
    s.push(ext);
    PathBuf::from(s)
}

fn solve(cfg: &RunConfig, out: &mut Vec<u8>) -> Result<()> {
    let p = cfg.params()?;
    let d = p.derived();
    let mut text = String::new();
    text += &format!("theta0 = {}\ntheta1 = {}\n", p.theta0(), p.theta1());
    text += &format!("delta = {}\neta = {}\ndelta_bar = {}\n", d.delta, d.eta, d.delta_bar);
    for (label, z) in [("0", 0.0), ("delta", d.delta)] {
        let law = StationaryLaw::new(p, z);
        text += &format!(
            "z = {label}: mean = {}, second_moment = {}, left_mass = {}\n",
            law.mean(),
            law.second_moment(),
            law.left_mass()
        );
    }
    out.write_all(text.as_bytes()).map_err(stdout_err)
}

fn simulate(cfg: &RunConfig, out: &mut Vec<u8>) -> Result<()> {
    let p = cfg.params()?;
    let z = cfg.threshold()?;
    let base = SimConfig::new(cfg.dt, cfg.master_seed, 0)?;
    let rows: Vec<(f64, f64, f64)> = (0..cfg.n_reps as u64)
        .into_par_iter()
        .map(|id| {
            let s = simulate_threshold_path(&p, z, cfg.x0, 0.0, cfg.t_end, &base.with_stream(id))?;
            let t = s.duration(cfg.dt);
            Ok((s.int_x / t, s.int_x2 / t, s.terminal))
        })
        .collect::<Result<_>>()?;
    let law = StationaryLaw::new(p, z);
    let avg_x = MeanEstimate::from_samples(&rows.iter().map(|r| r.0).collect::<Vec<_>>());
    let avg_x2 = MeanEstimate::from_samples(&rows.iter().map(|r| r.1).collect::<Vec<_>>());
    let text = format!(
        "z = {z}, T = {}, dt = {}, n_reps = {}\n\
         time-average X:  {} +- {} (stationary {})\n\
         time-average X^2: {} +- {} (stationary {})\n",
        cfg.t_end,
        cfg.dt,
        cfg.n_reps,
        avg_x.mean,
        avg_x.stderr,
        law.mean(),
        avg_x2.mean,
        avg_x2.stderr,
        law.second_moment()
    );
    out.write_all(text.as_bytes()).map_err(stdout_err)?;
    if let Some(path) = &cfg.out {
        let mut csv = String::from("stream_id,average_x,average_x2,terminal\n");
        for (id, r) in rows.iter().enumerate() {
            csv += &format!("{id},{:.16e},{:.16e},{:.16e}\n", r.0, r.1, r.2);
        }
        write_file(path, csv.as_bytes())?;
        write_file(&sidecar(path, ".meta"), cfg.to_kv_text().as_bytes())?;
    }
    Ok(())
}

fn regret_cmd(cfg: &RunConfig, out: &mut Vec<u8>) -> Result<()> {
    let curve = cfg.experiment()?.run()?;
    let mut csv = Vec::new();
    regret::write_curves(std::slice::from_ref(&curve), &mut csv)?;
    let Some(path) = &cfg.out else {
        if cfg.plot_script {
            return Err(Error::Config {
                key: "plot_script".into(),
                message: "needs an output path".into(),
            });
        }
        return out.write_all(&csv).map_err(stdout_err);
    };
    write_file(path, &csv)?;
    write_file(&sidecar(path, ".meta"), metadata(cfg, &curve).as_bytes())?;
    if cfg.plot_script {
        let name = path.file_name().map(|n| n.to_string_lossy().into_owned()).unwrap_or_default();
        write_file(&sidecar(path, ".gp"), regret::plot_script(&name, &[curve]).as_bytes())?;
    }
    writeln!(out, "wrote {}", path.display()).map_err(stdout_err)
}

/// Effective configuration followed by notes on the data; parses back as a
/// config file.
fn metadata(cfg: &RunConfig, curve: &RegretCurve) -> String {
    let mut s = cfg.to_kv_text();
    let dropped: Vec<String> = curve
        .horizons
        .iter()
        .zip(&curve.mean_regret)
        .filter(|(_, &r)| !(r > 0.0))
        .map(|(t, _)| t.to_string())
        .collect();
    if dropped.is_empty() {
        s += "# all mean_regret values are positive\n";
    } else {
        s += &format!("# nonpositive mean_regret at T = {}; excluded from rate fits\n", dropped.join(","));
    }
    s
}

fn describe(fit: Result<RateFit>) -> String {
    match fit {
        Ok(f) => format!("slope = {}, intercept = {}, r2 = {}", f.slope, f.intercept, f.r_squared),
        Err(e) => format!("n/a ({e})"),
    }
}

fn fit(input: Option<&Path>, out: &mut Vec<u8>) -> Result<()> {
    let path = input.ok_or_else(|| Error::Config {
        key: "input".into(),
        message: "fit needs a CSV path".into(),
    })?;
    let curves = regret::import_curves(path)?;
    let mut text = String::new();
    if curves.is_empty() {
        text += "no data rows\n";
    }
    for c in &curves {
        let (ts, rs) = c.positive_points();
        text += &format!(
            "{} (theta0 = {}, theta1 = {}, {} of {} points positive)\n",
            c.algorithm,
            c.params.theta0(),
            c.params.theta1(),
            ts.len(),
            c.horizons.len()
        );
        text += &format!("  power:      {}\n", describe(fit_power(&ts, &rs)));
        text += &format!("  log-linear: {}\n", describe(fit_log(&ts, &rs)));
        text += &format!("  sqrt:       {}\n", describe(fit_sqrt(&ts, &rs)));
    }
    out.write_all(text.as_bytes()).map_err(stdout_err)
}

/// Stream ids reserved for the exact sampler, away from the path streams.
const SAMPLER_STREAM: u64 = u64::MAX;
const START_STREAM: u64 = u64::MAX - 1;

fn stationary_check(cfg: &RunConfig, out: &mut Vec<u8>) -> Result<i32> {
    let p = cfg.params()?;
    let z = cfg.threshold()?;
    let law = StationaryLaw::new(p, z);
    let target = StationaryLaw::new(p, cfg.compare_z.unwrap_or(z));

    let mut rng = NoiseStream::new(cfg.master_seed, SAMPLER_STREAM);
    let mut xs: Vec<f64> = (0..cfg.n_samples).map(|_| law.sample(&mut rng)).collect();
    xs.sort_by(f64::total_cmp);
    let d = ks_statistic(&xs, |x| target.cdf(x));
    let crit = ks_critical_value(xs.len(), 0.01);
    let mut report = vec![(d < crit, format!("ks: D = {d}, critical(1%) = {crit}"))];

    // Paths start from exact stationary draws, so the time averages are
    // unbiased up to the discretization error.
    let mut starts = NoiseStream::new(cfg.master_seed, START_STREAM);
    let x0s: Vec<f64> = (0..cfg.n_reps).map(|_| law.sample(&mut starts)).collect();
    let base = SimConfig::new(cfg.dt, cfg.master_seed, 0)?;
    let rows: Vec<(f64, f64)> = x0s
        .par_iter()
        .enumerate()
        .map(|(id, &x0)| {
            let s = simulate_threshold_path(&p, z, x0, 0.0, cfg.t_end, &base.with_stream(id as u64))?;
            let t = s.duration(cfg.dt);
            Ok((s.int_x / t, s.int_x2 / t))
        })
        .collect::<Result<_>>()?;
    // Allowance for the Euler bias, which shrinks like √dt.
    let bias = 0.5 * cfg.dt.sqrt() * (1.0 + target.variance());
    for (name, col, exact) in [("mean", 0, target.mean()), ("second moment", 1, target.second_moment())] {
        let samples: Vec<f64> = rows.iter().map(|r| if col == 0 { r.0 } else { r.1 }).collect();
        let est = MeanEstimate::from_samples(&samples);
        let tol = 4.0 * est.stderr + bias;
        let ok = (est.mean - exact).abs() <= tol;
        report.push((
            ok,
            format!("{name}: simulated {} +- {}, closed form {exact}, tolerance {tol}", est.mean, est.stderr),
        ));
    }
    let mut text = String::new();
    for (ok, line) in &report {
        text += &format!("{} {line}\n", if *ok { "PASS" } else { "FAIL" });
    }
    out.write_all(text.as_bytes()).map_err(stdout_err)?;
    Ok(if report.iter().all(|r| r.0) { 0 } else { 3 })
}
