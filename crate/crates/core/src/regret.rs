//! Monte Carlo regret curves and growth-rate fits.
//!
//! A replication runs a learner coupled with the δ-oracle on one noise
//! stream and records `∫ X_learner² − X_oracle² dt` at every horizon. The
//! replications run in parallel, but results are reduced in stream order,
//! so a curve does not depend on the number of worker threads.

use std::io::{Read, Write};
use std::path::Path;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::learning::{run_controller, sqrt_learning_interval, Controller};
use crate::model::ModelParams;
use crate::sim::SimConfig;
use crate::stats::{linear_fit, MeanEstimate};

/// Column names of the regret CSV, in order.
pub const CSV_HEADER: [&str; 11] = [
    "algorithm",
    "theta0",
    "theta1",
    "K",
    "tau_rule",
    "T",
    "mean_regret",
    "stderr",
    "n_reps",
    "dt",
    "master_seed",
];

/// Dyadic horizons `2^6, …, 2^12`.
pub fn default_horizons() -> Vec<f64> {
    (6..=12).map(|e| 2f64.powi(e)).collect()
}

/// Learners whose regret can be estimated.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Algorithm {
    /// Learner threshold fixed at δ; regret is zero by construction.
    Oracle,
    Fixed { z: f64 },
    /// Explore-first with `τ = √T`, rerun for every horizon.
    ExploreFirst,
    /// Explore-first restarted on doubling windows.
    Doubling,
    Apac { clip_bound: f64 },
}

impl Algorithm {
    /// Tag written to the `algorithm` column.
    pub fn tag(&self) -> String {
        match self {
            Algorithm::Oracle => "oracle".into(),
            Algorithm::Fixed { z } => format!("fixed@{z}"),
            Algorithm::ExploreFirst => "explore-first".into(),
            Algorithm::Doubling => "doubling".into(),
            Algorithm::Apac { .. } => "apac".into(),
        }
    }

    pub fn tau_rule(&self) -> &'static str {
        match self {
            Algorithm::ExploreFirst => "sqrt_T",
            Algorithm::Doubling => "sqrt_window",
            _ => "none",
        }
    }

    pub fn clip_bound(&self) -> Option<f64> {
        match self {
            Algorithm::Apac { clip_bound } => Some(*clip_bound),
            _ => None,
        }
    }

    /// Inverse of [`tag`](Self::tag); `clip_bound` is only used for `apac`.
    pub fn from_tag(tag: &str, clip_bound: f64) -> Result<Self> {
        Ok(match tag {
            "oracle" => Algorithm::Oracle,
            "explore-first" => Algorithm::ExploreFirst,
            "doubling" => Algorithm::Doubling,
            "apac" => Algorithm::Apac { clip_bound },
            other => match other.strip_prefix("fixed@") {
                Some(z) => Algorithm::Fixed {
                    z: z.parse()
                        .map_err(|_| Error::arg("algorithm", format!("bad threshold in `{other}`")))?,
                },
                None => return Err(Error::arg("algorithm", format!("unknown algorithm `{other}`"))),
            },
        })
    }
}

/// Everything that determines a regret curve.
#[derive(Debug, Clone, PartialEq)]
pub struct RegretExperiment {
    pub algorithm: Algorithm,
    pub params: ModelParams,
    pub horizons: Vec<f64>,
    pub n_reps: usize,
    pub x0: f64,
    pub dt: f64,
    pub master_seed: u64,
}

impl RegretExperiment {
    pub fn new(algorithm: Algorithm, params: ModelParams, horizons: Vec<f64>, n_reps: usize) -> Self {
        Self {
            algorithm,
            params,
            horizons,
            n_reps,
            x0: 0.0,
            dt: 1e-3,
            master_seed: 0,
        }
    }

    fn validate(&self) -> Result<SimConfig> {
        let cfg = SimConfig::new(self.dt, self.master_seed, 0)?;
        if self.n_reps < 2 {
            return Err(Error::arg("n_reps", format!("need at least 2 replications, got {}", self.n_reps)));
        }
        if self.horizons.is_empty() {
            return Err(Error::arg("horizons", "at least one horizon is required"));
        }
        let mut prev = 0u64;
        for &t in &self.horizons {
            let n = cfg.steps(t)?;
            if n <= prev {
                return Err(Error::arg("horizons", "horizons must be positive and strictly increasing"));
            }
            prev = n;
        }
        if let Algorithm::Fixed { z } = self.algorithm {
            if !z.is_finite() {
                return Err(Error::arg("z", "threshold must be finite"));
            }
        }
        if matches!(self.algorithm, Algorithm::Doubling) && self.horizons[0] < 2.0 {
            return Err(Error::arg("horizons", "doubling needs every horizon >= 2"));
        }
        Ok(cfg)
    }

    /// Regret at each horizon for the replication on `stream_id`.
    pub fn replication(&self, stream_id: u64) -> Result<Vec<f64>> {
        let cfg = self.validate()?.with_stream(stream_id);
        self.replication_unchecked(&cfg)
    }

    fn replication_unchecked(&self, cfg: &SimConfig) -> Result<Vec<f64>> {
        let p = &self.params;
        let last = *self.horizons.last().expect("validated");
        let controller = match self.algorithm {
            Algorithm::ExploreFirst => {
                return self
                    .horizons
                    .iter()
                    .map(|&t| {
                        let tau = sqrt_learning_interval(t, cfg);
                        let rec = run_controller(p, Controller::ExploreFirst { tau }, t, self.x0, cfg, &[])?;
                        Ok(rec.regret())
                    })
                    .collect();
            }
            Algorithm::Oracle => Controller::Threshold(p.optimal_threshold()),
            Algorithm::Fixed { z } => Controller::Threshold(z),
            Algorithm::Doubling => Controller::DoublingExploreFirst,
            Algorithm::Apac { clip_bound } => Controller::Apac { clip_bound },
        };
        let rec = run_controller(p, controller, last, self.x0, cfg, &self.horizons)?;
        Ok(rec.checkpoints.iter().map(|c| c.regret()).collect())
    }

    /// Runs all replications and reduces them into a curve.
    pub fn run(&self) -> Result<RegretCurve> {
        let cfg = self.validate()?;
        let rows: Vec<(u64, Vec<f64>)> = (0..self.n_reps as u64)
            .into_par_iter()
            .map(|id| Ok((id, self.replication_unchecked(&cfg.with_stream(id))?)))
            .collect::<Result<_>>()?;
        Ok(self.aggregate(rows))
    }

    /// Reduces `(stream_id, regret per horizon)` rows into a curve. Rows are
    /// sorted by stream id first, so their order does not matter.
    pub fn aggregate(&self, mut rows: Vec<(u64, Vec<f64>)>) -> RegretCurve {
        rows.sort_by_key(|r| r.0);
        let mut mean_regret = Vec::with_capacity(self.horizons.len());
        let mut stderr = Vec::with_capacity(self.horizons.len());
        for j in 0..self.horizons.len() {
            let samples: Vec<f64> = rows.iter().map(|r| r.1[j]).collect();
            let est = MeanEstimate::from_samples(&samples);
            mean_regret.push(est.mean);
            stderr.push(est.stderr);
        }
        RegretCurve {
            algorithm: self.algorithm.tag(),
            params: self.params,
            clip_bound: self.algorithm.clip_bound(),
            tau_rule: self.algorithm.tau_rule().to_string(),
            dt: self.dt,
            master_seed: self.master_seed,
            n_reps: rows.len(),
            horizons: self.horizons.clone(),
            mean_regret,
            stderr,
        }
    }
}

/// Shorthand for [`RegretExperiment::run`].
pub fn estimate_regret(experiment: &RegretExperiment) -> Result<RegretCurve> {
    experiment.run()
}

/// Mean regret with its standard error at each horizon.
#[derive(Debug, Clone, PartialEq)]
pub struct RegretCurve {
    pub algorithm: String,
    pub params: ModelParams,
    pub clip_bound: Option<f64>,
    pub tau_rule: String,
    pub dt: f64,
    pub master_seed: u64,
    pub n_reps: usize,
    pub horizons: Vec<f64>,
    pub mean_regret: Vec<f64>,
    pub stderr: Vec<f64>,
}

impl RegretCurve {
    /// `(T, mean_regret)` pairs with positive regret, the ones a log fit can use.
    pub fn positive_points(&self) -> (Vec<f64>, Vec<f64>) {
        self.horizons
            .iter()
            .zip(&self.mean_regret)
            .filter(|(_, &r)| r > 0.0)
            .map(|(&t, &r)| (t, r))
            .unzip()
    }

    pub fn at(&self, horizon: f64) -> Option<(f64, f64)> {
        self.horizons
            .iter()
            .position(|&t| t == horizon)
            .map(|i| (self.mean_regret[i], self.stderr[i]))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RateModel {
    /// `log R = intercept + slope · log T`; the slope is the growth exponent.
    Power,
    /// `R = intercept + slope · log T`.
    LogLinear,
    /// `R = intercept + slope · √T`.
    SqrtLinear,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RateFit {
    pub model: RateModel,
    pub slope: f64,
    pub intercept: f64,
    pub r_squared: f64,
}

fn check_points(horizons: &[f64], regret: &[f64]) -> Result<()> {
    if horizons.len() != regret.len() {
        return Err(Error::arg("curve", "horizons and regret differ in length"));
    }
    if horizons.len() < 3 {
        return Err(Error::arg("curve", format!("need at least 3 points, got {}", horizons.len())));
    }
    if let Some(r) = regret.iter().find(|&&r| !(r > 0.0) || !r.is_finite()) {
        return Err(Error::arg("curve", format!("regret values must be positive, found {r}")));
    }
    if horizons.iter().any(|&t| !(t > 0.0)) {
        return Err(Error::arg("curve", "horizons must be positive"));
    }
    Ok(())
}

fn fit(model: RateModel, xs: Vec<f64>, ys: Vec<f64>) -> Result<RateFit> {
    let f = linear_fit(&xs, &ys).ok_or_else(|| Error::Numeric("degenerate regression".into()))?;
    Ok(RateFit {
        model,
        slope: f.slope,
        intercept: f.intercept,
        r_squared: f.r_squared,
    })
}

/// Fits `R ≈ c·T^slope` by least squares on log-log axes.
pub fn fit_power(horizons: &[f64], regret: &[f64]) -> Result<RateFit> {
    check_points(horizons, regret)?;
    fit(
        RateModel::Power,
        horizons.iter().map(|t| t.ln()).collect(),
        regret.iter().map(|r| r.ln()).collect(),
    )
}

/// Fits `R ≈ a + b·log T`.
pub fn fit_log(horizons: &[f64], regret: &[f64]) -> Result<RateFit> {
    check_points(horizons, regret)?;
    fit(RateModel::LogLinear, horizons.iter().map(|t| t.ln()).collect(), regret.to_vec())
}

/// Fits `R ≈ a + b·√T`.
pub fn fit_sqrt(horizons: &[f64], regret: &[f64]) -> Result<RateFit> {
    check_points(horizons, regret)?;
    fit(RateModel::SqrtLinear, horizons.iter().map(|t| t.sqrt()).collect(), regret.to_vec())
}

pub fn fit_power_rate(curve: &RegretCurve) -> Result<RateFit> {
    fit_power(&curve.horizons, &curve.mean_regret)
}

pub fn fit_log_rate(curve: &RegretCurve) -> Result<RateFit> {
    fit_log(&curve.horizons, &curve.mean_regret)
}

pub fn fit_sqrt_rate(curve: &RegretCurve) -> Result<RateFit> {
    fit_sqrt(&curve.horizons, &curve.mean_regret)
}

/// 17 significant digits, enough to read back the same `f64`.
fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

fn csv_err(e: csv::Error) -> Error {
    match e.into_kind() {
        csv::ErrorKind::Io(io) => Error::io("<csv stream>", io),
        other => Error::Config {
            key: "csv".into(),
            message: format!("{other:?}"),
        },
    }
}

/// Writes the curves as CSV rows under the fixed header.
pub fn write_curves<W: Write>(curves: &[RegretCurve], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER).map_err(csv_err)?;
    for c in curves {
        let k = c.clip_bound.map(fmt_f64).unwrap_or_default();
        for i in 0..c.horizons.len() {
            w.write_record([
                c.algorithm.clone(),
                fmt_f64(c.params.theta0()),
                fmt_f64(c.params.theta1()),
                k.clone(),
                c.tau_rule.clone(),
                fmt_f64(c.horizons[i]),
                fmt_f64(c.mean_regret[i]),
                fmt_f64(c.stderr[i]),
                c.n_reps.to_string(),
                fmt_f64(c.dt),
                c.master_seed.to_string(),
            ])
            .map_err(csv_err)?;
        }
    }
    w.flush().map_err(|e| Error::io("<csv stream>", e))?;
    Ok(())
}

/// Reads curves back; consecutive rows sharing everything but the horizon
/// columns form one curve.
pub fn read_curves<R: Read>(input: R) -> Result<Vec<RegretCurve>> {
    let mut r = csv::Reader::from_reader(input);
    let header = r.headers().map_err(csv_err)?.clone();
    if header.iter().ne(CSV_HEADER.iter().copied()) {
        return Err(Error::Config {
            key: "csv".into(),
            message: format!("unexpected header `{}`", header.iter().collect::<Vec<_>>().join(",")),
        });
    }
    let mut curves: Vec<RegretCurve> = Vec::new();
    for (line, rec) in r.records().enumerate() {
        let rec = rec.map_err(csv_err)?;
        let bad = |col: &str| Error::Config {
            key: "csv".into(),
            message: format!("row {}: bad `{col}` value", line + 2),
        };
        let num = |i: usize| rec[i].parse::<f64>().map_err(|_| bad(CSV_HEADER[i]));
        let params = ModelParams::new(num(1)?, num(2)?)?;
        let clip_bound = if rec[3].is_empty() { None } else { Some(num(3)?) };
        let n_reps = rec[8].parse::<usize>().map_err(|_| bad("n_reps"))?;
        let master_seed = rec[10].parse::<u64>().map_err(|_| bad("master_seed"))?;
        let (dt, t, mean, se) = (num(9)?, num(5)?, num(6)?, num(7)?);
        let same = curves.last().is_some_and(|c| {
            c.algorithm == rec[0]
                && c.params == params
                && c.clip_bound == clip_bound
                && c.tau_rule == rec[4]
                && c.n_reps == n_reps
                && c.dt == dt
                && c.master_seed == master_seed
                && c.horizons.last().is_some_and(|&last| t > last)
        });
        if !same {
            curves.push(RegretCurve {
                algorithm: rec[0].to_string(),
                params,
                clip_bound,
                tau_rule: rec[4].to_string(),
                dt,
                master_seed,
                n_reps,
                horizons: Vec::new(),
                mean_regret: Vec::new(),
                stderr: Vec::new(),
            });
        }
        let c = curves.last_mut().expect("pushed above");
        c.horizons.push(t);
        c.mean_regret.push(mean);
        c.stderr.push(se);
    }
    Ok(curves)
}

pub fn export_curve(curve: &RegretCurve, path: &Path) -> Result<()> {
    export_curves(std::slice::from_ref(curve), path)
}

pub fn export_curves(curves: &[RegretCurve], path: &Path) -> Result<()> {
    let mut buf = Vec::new();
    write_curves(curves, &mut buf)?;
    std::fs::write(path, buf).map_err(|e| Error::io(path, e))
}

pub fn import_curves(path: &Path) -> Result<Vec<RegretCurve>> {
    let file = std::fs::File::open(path).map_err(|e| Error::io(path, e))?;
    read_curves(std::io::BufReader::new(file))
}

/// Gnuplot script drawing every curve in `csv_name` (a path relative to the
/// script) on log-log axes with standard-error bars.
pub fn plot_script(csv_name: &str, curves: &[RegretCurve]) -> String {
    let mut s = String::new();
    s.push_str("# gnuplot script; run from the directory holding the CSV\n");
    s.push_str("set datafile separator ','\n");
    s.push_str("set logscale xy\n");
    s.push_str("set xlabel 'T'\n");
    s.push_str("set ylabel 'mean regret'\n");
    s.push_str("set key left top\n");
    s.push_str("set grid\n");
    let mut first_row = 0usize;
    let mut parts = Vec::new();
    for c in curves {
        let n = c.horizons.len();
        if n == 0 {
            continue;
        }
        // Row 0 of the data block is the header.
        let (a, b) = (first_row + 1, first_row + n);
        parts.push(format!(
            "'{csv_name}' every ::{a}::{b} using 6:7:8 with yerrorlines title '{}'",
            c.algorithm
        ));
        first_row += n;
    }
    if parts.is_empty() {
        s.push_str("# no data rows\n");
    } else {
        s.push_str("plot ");
        s.push_str(&parts.join(", \\\n     "));
        s.push('\n');
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit() -> ModelParams {
        ModelParams::new(-1.0, 1.0).unwrap()
    }

    fn small(algorithm: Algorithm) -> RegretExperiment {
        RegretExperiment {
            dt: 1e-2,
            master_seed: 9,
            ..RegretExperiment::new(algorithm, unit(), vec![4.0, 8.0, 16.0], 6)
        }
    }

    #[test]
    fn tags_round_trip() {
        for a in [
            Algorithm::Oracle,
            Algorithm::Fixed { z: 0.1 },
            Algorithm::Fixed { z: -3.0 },
            Algorithm::ExploreFirst,
            Algorithm::Doubling,
            Algorithm::Apac { clip_bound: 10.0 },
        ] {
            assert_eq!(Algorithm::from_tag(&a.tag(), 10.0).unwrap(), a);
        }
        assert!(Algorithm::from_tag("greedy", 1.0).is_err());
        assert!(Algorithm::from_tag("fixed@x", 1.0).is_err());
    }

    #[test]
    fn oracle_regret_is_exactly_zero() {
        let c = small(Algorithm::Oracle).run().unwrap();
        assert!(c.mean_regret.iter().all(|&r| r == 0.0));
        assert!(c.stderr.iter().all(|&s| s == 0.0));
    }

    #[test]
    fn rejects_bad_experiments() {
        let mut e = small(Algorithm::Oracle);
        e.n_reps = 1;
        assert!(e.run().is_err());
        let mut e = small(Algorithm::Oracle);
        e.horizons = vec![4.0, 4.0];
        assert!(e.run().is_err());
        let mut e = small(Algorithm::Oracle);
        e.horizons = vec![4.005];
        assert!(matches!(e.run(), Err(Error::Misaligned { .. })));
        let mut e = small(Algorithm::Doubling);
        e.horizons = vec![1.0, 4.0, 8.0];
        assert!(e.run().is_err());
    }

    #[test]
    fn replication_matches_direct_run() {
        let e = small(Algorithm::ExploreFirst);
        let row = e.replication(3).unwrap();
        let cfg = SimConfig::new(1e-2, 9, 3).unwrap();
        let direct = run_controller(&unit(), Controller::ExploreFirst { tau: 2.0 }, 4.0, 0.0, &cfg, &[]).unwrap();
        assert_eq!(row[0], direct.regret());
        let apac = small(Algorithm::Apac { clip_bound: 10.0 });
        let row = apac.replication(2).unwrap();
        let direct = run_controller(
            &unit(),
            Controller::Apac { clip_bound: 10.0 },
            16.0,
            0.0,
            &cfg.with_stream(2),
            &[],
        )
        .unwrap();
        assert_eq!(row[2], direct.regret());
    }

    #[test]
    fn aggregation_ignores_row_order() {
        let e = small(Algorithm::Fixed { z: 0.5 });
        let rows: Vec<(u64, Vec<f64>)> = (0..6).map(|id| (id, e.replication(id).unwrap())).collect();
        let forward = e.aggregate(rows.clone());
        let mut shuffled = rows;
        shuffled.swap(0, 5);
        shuffled.swap(1, 3);
        shuffled.reverse();
        assert_eq!(e.aggregate(shuffled), forward);
        assert_eq!(e.run().unwrap(), forward);
    }

    #[test]
    fn same_config_same_curve() {
        let e = small(Algorithm::Doubling);
        assert_eq!(e.run().unwrap(), e.run().unwrap());
    }

    #[test]
    fn exact_power_laws() {
        let ts = [64.0, 128.0, 256.0, 512.0, 1024.0];
        let r: Vec<f64> = ts.iter().map(|t: &f64| 3.0 * t.sqrt()).collect();
        let f = fit_power(&ts, &r).unwrap();
        assert!((f.slope - 0.5).abs() < 1e-12);
        assert!((f.r_squared - 1.0).abs() < 1e-12);
        let r: Vec<f64> = ts.iter().map(|t| 2.0 * t).collect();
        assert!((fit_power(&ts, &r).unwrap().slope - 1.0).abs() < 1e-12);
    }

    #[test]
    fn exact_log_law() {
        let ts = [64.0, 128.0, 256.0, 512.0, 1024.0];
        let r: Vec<f64> = ts.iter().map(|t: &f64| 5.0 + 2.0 * t.ln()).collect();
        let f = fit_log(&ts, &r).unwrap();
        assert!((f.slope - 2.0).abs() < 1e-12);
        assert!((f.intercept - 5.0).abs() < 1e-10);
        assert!((f.r_squared - 1.0).abs() < 1e-12);
    }

    #[test]
    fn log_fit_discriminates_against_sqrt_growth() {
        let ts: Vec<f64> = (0..8).map(|e| 10.0 * 2f64.powi(e)).collect();
        let r: Vec<f64> = ts.iter().map(|t| t.sqrt()).collect();
        let log = fit_log(&ts, &r).unwrap();
        let pow = fit_power(&ts, &r).unwrap();
        assert!(pow.r_squared - log.r_squared > 0.05, "{} vs {}", pow.r_squared, log.r_squared);
        let r: Vec<f64> = ts.iter().map(|t| 1.0 + t.ln()).collect();
        assert!(fit_log(&ts, &r).unwrap().r_squared > fit_sqrt(&ts, &r).unwrap().r_squared);
    }

    #[test]
    fn fits_reject_bad_input() {
        assert!(fit_power(&[1.0, 2.0], &[1.0, 2.0]).is_err());
        assert!(fit_power(&[1.0, 2.0, 4.0], &[1.0, -2.0, 3.0]).is_err());
        assert!(fit_log(&[1.0, 2.0, 4.0], &[1.0, 0.0, 3.0]).is_err());
    }

    #[test]
    fn positive_points_drop_nonpositive_regret() {
        let mut c = small(Algorithm::Oracle).aggregate((0..2).map(|i| (i, vec![0.0; 3])).collect());
        c.mean_regret = vec![-1.0, 0.0, 2.0];
        assert_eq!(c.positive_points(), (vec![16.0], vec![2.0]));
    }

    #[test]
    fn empty_curve_writes_header_only() {
        let mut c = small(Algorithm::Oracle).aggregate((0..2).map(|i| (i, vec![0.0; 3])).collect());
        c.horizons.clear();
        c.mean_regret.clear();
        c.stderr.clear();
        let mut buf = Vec::new();
        write_curves(&[c], &mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), format!("{}\n", CSV_HEADER.join(",")));
        assert!(read_curves(CSV_HEADER.join(",").as_bytes()).unwrap().is_empty());
    }

    #[test]
    fn csv_round_trip_is_exact() {
        let a = small(Algorithm::Apac { clip_bound: 10.0 }).run().unwrap();
        let b = small(Algorithm::Fixed { z: 0.3 }).run().unwrap();
        let mut buf = Vec::new();
        write_curves(&[a.clone(), b.clone()], &mut buf).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert!(text.starts_with("algorithm,theta0,theta1,K,tau_rule,T,mean_regret,stderr,n_reps,dt,master_seed\n"));
        let first = text.lines().nth(1).unwrap();
        assert!(first.starts_with("apac,-1.0000000000000000e0,1.0000000000000000e0,1.0000000000000000e1,none,4.0000000000000000e0,"));
        let back = read_curves(buf.as_slice()).unwrap();
        assert_eq!(back, vec![a, b]);
    }

    #[test]
    fn import_rejects_wrong_header() {
        assert!(read_curves("a,b\n1,2\n".as_bytes()).is_err());
    }

    #[test]
    fn plot_script_references_csv() {
        let a = small(Algorithm::Oracle).run().unwrap();
        let b = small(Algorithm::ExploreFirst).run().unwrap();
        let s = plot_script("run.csv", &[a, b]);
        assert!(s.contains("set logscale xy"));
        assert!(s.contains("'run.csv' every ::1::3 using 6:7:8"));
        assert!(s.contains("'run.csv' every ::4::6 using 6:7:8"));
    }
}
