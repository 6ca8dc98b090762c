//! Flat `key = value` run configuration.
//!
//! Blank lines and lines starting with `#` are ignored. Unknown keys are
//! rejected so that typos do not silently fall back to defaults. The
//! effective configuration can be written back with [`RunConfig::to_kv_text`]
//! and reparsed to the same value.

use std::fmt::Display;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::model::ModelParams;
use crate::regret::{default_horizons, Algorithm, RegretExperiment};
use crate::learning::DEFAULT_CLIP_BOUND;

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub theta0: f64,
    pub theta1: f64,
    /// `oracle`, `fixed`, `explore-first`, `doubling` or `apac`.
    pub algorithm: String,
    /// Threshold for `fixed`, `simulate` and `stationary-check`; δ when unset.
    pub z: Option<f64>,
    pub clip_bound: f64,
    pub horizons: Vec<f64>,
    pub n_reps: usize,
    pub dt: f64,
    pub master_seed: u64,
    pub x0: f64,
    pub out: Option<PathBuf>,
    pub plot_script: bool,
    /// Path length for `simulate`.
    pub t_end: f64,
    /// Exact draws for `stationary-check`.
    pub n_samples: usize,
    /// Threshold whose closed-form moments the simulated ones are compared
    /// with in `stationary-check`; defaults to `z`.
    pub compare_z: Option<f64>,
    /// CSV read by `fit`.
    pub input: Option<PathBuf>,
}

pub const KEYS: [&str; 16] = [
    "theta0",
    "theta1",
    "algorithm",
    "z",
    "clip_bound",
    "horizons",
    "n_reps",
    "dt",
    "master_seed",
    "x0",
    "out",
    "plot_script",
    "t_end",
    "n_samples",
    "compare_z",
    "input",
];

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            theta0: -1.0,
            theta1: 1.0,
            algorithm: "apac".into(),
            z: None,
            clip_bound: DEFAULT_CLIP_BOUND,
            horizons: default_horizons(),
            n_reps: 200,
            dt: 1e-3,
            master_seed: 0,
            x0: 0.0,
            out: None,
            plot_script: false,
            t_end: 100.0,
            n_samples: 100_000,
            compare_z: None,
            input: None,
        }
    }
}

fn config_err(key: &str, message: impl Into<String>) -> Error {
    Error::Config {
        key: key.to_string(),
        message: message.into(),
    }
}

fn parse<T: FromStr>(key: &str, value: &str) -> Result<T>
where
    T::Err: Display,
{
    value
        .parse()
        .map_err(|e| config_err(key, format!("cannot parse `{value}`: {e}")))
}

fn parse_bool(key: &str, value: &str) -> Result<bool> {
    match value {
        "true" | "1" | "yes" => Ok(true),
        "false" | "0" | "no" => Ok(false),
        _ => Err(config_err(key, format!("expected true or false, got `{value}`"))),
    }
}

fn optional<T: FromStr>(key: &str, value: &str) -> Result<Option<T>>
where
    T::Err: Display,
{
    if value.is_empty() {
        Ok(None)
    } else {
        parse(key, value).map(Some)
    }
}

impl RunConfig {
    pub fn from_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        let mut cfg = Self::default();
        cfg.apply_text(&text)?;
        Ok(cfg)
    }

    pub fn parse_text(text: &str) -> Result<Self> {
        let mut cfg = Self::default();
        cfg.apply_text(text)?;
        cfg.validate()?;
        Ok(cfg)
    }

    /// Applies every `key = value` line of `text` on top of `self`.
    pub fn apply_text(&mut self, text: &str) -> Result<()> {
        for (n, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| config_err(&format!("line {}", n + 1), format!("expected key = value, got `{line}`")))?;
            self.set(key.trim(), value.trim())?;
        }
        Ok(())
    }

    /// Sets one key from its text form.
    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        match key {
            "theta0" => self.theta0 = parse(key, value)?,
            "theta1" => self.theta1 = parse(key, value)?,
            "algorithm" => self.algorithm = value.to_string(),
            "z" => self.z = optional(key, value)?,
            "clip_bound" | "K" => self.clip_bound = parse(key, value)?,
            "horizons" => {
                self.horizons = value
                    .split(',')
                    .map(|s| parse::<f64>(key, s.trim()))
                    .collect::<Result<_>>()?
            }
            "n_reps" => self.n_reps = parse(key, value)?,
            "dt" => self.dt = parse(key, value)?,
            "master_seed" | "seed" => self.master_seed = parse(key, value)?,
            "x0" => self.x0 = parse(key, value)?,
            "out" => self.out = optional(key, value)?,
            "plot_script" => self.plot_script = parse_bool(key, value)?,
            "t_end" => self.t_end = parse(key, value)?,
            "n_samples" => self.n_samples = parse(key, value)?,
            "compare_z" => self.compare_z = optional(key, value)?,
            "input" => self.input = optional(key, value)?,
            _ => return Err(config_err(key, "unknown key")),
        }
        Ok(())
    }

    /// Field-level checks shared by every subcommand.
    pub fn validate(&self) -> Result<()> {
        let bad = |key: &str, e: Error| config_err(key, e.to_string());
        ModelParams::new(self.theta0, self.theta1).map_err(|e| {
            let key = if !(self.theta0 < 0.0) || !self.theta0.is_finite() { "theta0" } else { "theta1" };
            bad(key, e)
        })?;
        if !(self.dt > 0.0) || !self.dt.is_finite() {
            return Err(config_err("dt", format!("must be positive and finite, got {}", self.dt)));
        }
        if self.n_reps < 2 {
            return Err(config_err("n_reps", format!("need at least 2 replications, got {}", self.n_reps)));
        }
        if !(self.clip_bound > 0.0) || !self.clip_bound.is_finite() {
            return Err(config_err("clip_bound", format!("must be positive, got {}", self.clip_bound)));
        }
        if self.n_samples == 0 {
            return Err(config_err("n_samples", "must be positive"));
        }
        if !self.x0.is_finite() {
            return Err(config_err("x0", "must be finite"));
        }
        for (key, v) in [("z", self.z), ("compare_z", self.compare_z)] {
            if v.is_some_and(|v| !v.is_finite()) {
                return Err(config_err(key, "must be finite"));
            }
        }
        let sim = crate::sim::SimConfig::new(self.dt, self.master_seed, 0).map_err(|e| bad("dt", e))?;
        sim.steps(self.t_end).map_err(|e| bad("t_end", e))?;
        if self.t_end <= 0.0 {
            return Err(config_err("t_end", "must be positive"));
        }
        let mut prev = 0;
        for &t in &self.horizons {
            let n = sim.steps(t).map_err(|e| bad("horizons", e))?;
            if n <= prev {
                return Err(config_err("horizons", "must be positive and strictly increasing"));
            }
            prev = n;
        }
        if self.horizons.is_empty() {
            return Err(config_err("horizons", "at least one horizon is required"));
        }
        self.algorithm()?;
        Ok(())
    }

    pub fn params(&self) -> Result<ModelParams> {
        ModelParams::new(self.theta0, self.theta1)
    }

    /// Threshold `z`, or δ when unset.
    pub fn threshold(&self) -> Result<f64> {
        Ok(match self.z {
            Some(z) => z,
            None => self.params()?.optimal_threshold(),
        })
    }

    pub fn algorithm(&self) -> Result<Algorithm> {
        match self.algorithm.as_str() {
            "fixed" => match self.z {
                Some(z) => Ok(Algorithm::Fixed { z }),
                None => Err(config_err("z", "algorithm `fixed` needs a threshold z")),
            },
            tag => Algorithm::from_tag(tag, self.clip_bound).map_err(|e| config_err("algorithm", e.to_string())),
        }
    }

    pub fn experiment(&self) -> Result<RegretExperiment> {
        Ok(RegretExperiment {
            algorithm: self.algorithm()?,
            params: self.params()?,
            horizons: self.horizons.clone(),
            n_reps: self.n_reps,
            x0: self.x0,
            dt: self.dt,
            master_seed: self.master_seed,
        })
    }

    /// Every key with its effective value, one per line.
    pub fn to_kv_text(&self) -> String {
        fn opt<T: Display>(v: &Option<T>) -> String {
            v.as_ref().map(|v| v.to_string()).unwrap_or_default()
        }
        let path = |p: &Option<PathBuf>| p.as_ref().map(|p| p.display().to_string()).unwrap_or_default();
        let horizons: Vec<String> = self.horizons.iter().map(|t| t.to_string()).collect();
        let values = [
            self.theta0.to_string(),
            self.theta1.to_string(),
            self.algorithm.clone(),
            opt(&self.z),
            self.clip_bound.to_string(),
            horizons.join(","),
            self.n_reps.to_string(),
            self.dt.to_string(),
            self.master_seed.to_string(),
            self.x0.to_string(),
            path(&self.out),
            self.plot_script.to_string(),
            self.t_end.to_string(),
            self.n_samples.to_string(),
            opt(&self.compare_z),
            path(&self.input),
        ];
        KEYS.iter()
            .zip(values)
            .map(|(k, v)| format!("{k} = {v}\n"))
            .collect()
    }
}
