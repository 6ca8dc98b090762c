//! Euler–Maruyama simulation of Brownian motion with broken drift,
//! `dX = b_z(X) dt + dW`.
//!
//! The drift is evaluated at the left end of each step and the time
//! integrals are left-endpoint Riemann sums, so step `k` only uses
//! information available at its start. Windows are expressed in time units
//! but must land on the `dt` grid; internally everything counts steps.

use crate::error::{Error, Result};
use crate::model::ModelParams;
use crate::rng::NoiseStream;

/// Relative slack allowed when checking that a time lies on the `dt` grid.
const GRID_TOLERANCE: f64 = 1e-9;

/// Discretization step and the identity of the noise stream.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SimConfig {
    pub dt: f64,
    pub master_seed: u64,
    pub stream_id: u64,
}

impl SimConfig {
    pub fn new(dt: f64, master_seed: u64, stream_id: u64) -> Result<Self> {
        if !(dt > 0.0) || !dt.is_finite() {
            return Err(Error::arg("dt", format!("must be positive and finite, got {dt}")));
        }
        Ok(Self {
            dt,
            master_seed,
            stream_id,
        })
    }

    pub fn with_stream(self, stream_id: u64) -> Self {
        Self { stream_id, ..self }
    }

    pub fn noise(&self) -> NoiseStream {
        NoiseStream::new(self.master_seed, self.stream_id)
    }

    /// Number of steps covering `[0, t]`; fails unless `t` is a non-negative
    /// multiple of `dt`.
    pub fn steps(&self, t: f64) -> Result<u64> {
        if !(t >= 0.0) || !t.is_finite() {
            return Err(Error::Misaligned { time: t, dt: self.dt });
        }
        let n = (t / self.dt).round();
        if (n * self.dt - t).abs() > GRID_TOLERANCE * t.abs().max(1.0) {
            return Err(Error::Misaligned { time: t, dt: self.dt });
        }
        Ok(n as u64)
    }

    /// Largest grid time not exceeding `t`.
    pub fn floor_to_grid(&self, t: f64) -> f64 {
        ((t / self.dt) * (1.0 + GRID_TOLERANCE)).floor() * self.dt
    }

    pub fn time(&self, steps: u64) -> f64 {
        steps as f64 * self.dt
    }
}

/// Time integrals of a simulated window.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PathStats {
    /// `∫ X dt`
    pub int_x: f64,
    /// `∫ X² dt`
    pub int_x2: f64,
    /// State at the end of the window.
    pub terminal: f64,
    pub steps: u64,
}

impl PathStats {
    /// Zero-length window sitting at `x`.
    pub fn at(x: f64) -> Self {
        Self {
            int_x: 0.0,
            int_x2: 0.0,
            terminal: x,
            steps: 0,
        }
    }

    /// Concatenates a window that starts where `self` ends.
    pub fn append(&mut self, later: &PathStats) {
        self.int_x += later.int_x;
        self.int_x2 += later.int_x2;
        self.terminal = later.terminal;
        self.steps += later.steps;
    }

    pub fn duration(&self, dt: f64) -> f64 {
        self.steps as f64 * dt
    }

    /// `(1/Δ) ∫ X dt` over the window; NaN for an empty window.
    pub fn average_x(&self, dt: f64) -> f64 {
        self.int_x / self.duration(dt)
    }
}

/// Learner and oracle statistics driven by one increment sequence.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoupledPathStats {
    pub learner: PathStats,
    pub oracle: PathStats,
}

impl CoupledPathStats {
    pub fn at(learner: f64, oracle: f64) -> Self {
        Self {
            learner: PathStats::at(learner),
            oracle: PathStats::at(oracle),
        }
    }

    pub fn append(&mut self, later: &CoupledPathStats) {
        self.learner.append(&later.learner);
        self.oracle.append(&later.oracle);
    }

    /// `∫ X_learner² − X_oracle² dt`.
    pub fn regret(&self) -> f64 {
        self.learner.int_x2 - self.oracle.int_x2
    }
}

/// Piecewise-constant threshold: `z_i` applies from `start_i` until the next start.
#[derive(Debug, Clone, PartialEq)]
pub struct ThresholdSchedule {
    segments: Vec<(f64, f64)>,
}

impl ThresholdSchedule {
    pub fn constant(z: f64) -> Self {
        Self {
            segments: vec![(0.0, z)],
        }
    }

    /// `segments` are `(start_time, threshold)` pairs; the first must start
    /// at 0 and starts must increase strictly.
    pub fn new(segments: Vec<(f64, f64)>) -> Result<Self> {
        match segments.first() {
            Some(&(s, _)) if s == 0.0 => {}
            _ => return Err(Error::arg("z_schedule", "first segment must start at time 0")),
        }
        if segments.windows(2).any(|w| !(w[1].0 > w[0].0)) {
            return Err(Error::arg("z_schedule", "segment starts must increase strictly"));
        }
        if segments.iter().any(|&(s, z)| !s.is_finite() || !z.is_finite()) {
            return Err(Error::arg("z_schedule", "segments must be finite"));
        }
        Ok(Self { segments })
    }

    pub fn segments(&self) -> &[(f64, f64)] {
        &self.segments
    }
}

/// Single threshold-controlled path that can be advanced window by window.
#[derive(Debug, Clone)]
pub struct PathStepper {
    params: ModelParams,
    state: f64,
    noise: NoiseStream,
    dt: f64,
    sqrt_dt: f64,
    diffusion: f64,
    step: u64,
}

impl PathStepper {
    pub fn new(params: ModelParams, x0: f64, cfg: &SimConfig) -> Self {
        Self {
            params,
            state: x0,
            noise: cfg.noise(),
            dt: cfg.dt,
            sqrt_dt: cfg.dt.sqrt(),
            diffusion: 1.0,
            step: 0,
        }
    }

    #[cfg(test)]
    pub(crate) fn without_noise(mut self) -> Self {
        self.diffusion = 0.0;
        self
    }

    pub fn state(&self) -> f64 {
        self.state
    }

    /// Advances `n` steps under threshold `z`.
    pub fn run(&mut self, z: f64, n: u64) -> Result<PathStats> {
        let up = self.params.theta1() * self.dt;
        let down = self.params.theta0() * self.dt;
        let scale = self.diffusion * self.sqrt_dt;
        let mut x = self.state;
        let (mut sx, mut sx2) = (0.0, 0.0);
        for _ in 0..n {
            sx += x;
            sx2 += x * x;
            let drift = if x > z { down } else { up };
            x += drift + scale * self.noise.normal();
        }
        self.step += n;
        if !x.is_finite() {
            return Err(Error::NonFinite { step: self.step });
        }
        self.state = x;
        Ok(PathStats {
            int_x: sx * self.dt,
            int_x2: sx2 * self.dt,
            terminal: x,
            steps: n,
        })
    }
}

/// Learner and oracle paths sharing every Gaussian increment.
///
/// The oracle always uses the optimal threshold given at construction; the
/// learner's threshold is chosen per window by the caller.
#[derive(Debug, Clone)]
pub struct CoupledStepper {
    params: ModelParams,
    oracle_threshold: f64,
    learner: f64,
    oracle: f64,
    noise: NoiseStream,
    dt: f64,
    sqrt_dt: f64,
    step: u64,
}

impl CoupledStepper {
    pub fn new(params: ModelParams, oracle_threshold: f64, x0: f64, cfg: &SimConfig) -> Self {
        Self {
            params,
            oracle_threshold,
            learner: x0,
            oracle: x0,
            noise: cfg.noise(),
            dt: cfg.dt,
            sqrt_dt: cfg.dt.sqrt(),
            step: 0,
        }
    }

    pub fn learner_state(&self) -> f64 {
        self.learner
    }

    pub fn oracle_state(&self) -> f64 {
        self.oracle
    }

    /// Steps taken so far.
    pub fn position(&self) -> u64 {
        self.step
    }

    /// Advances both paths `n` steps, the learner under threshold `z`.
    pub fn run(&mut self, z: f64, n: u64) -> Result<CoupledPathStats> {
        let up = self.params.theta1() * self.dt;
        let down = self.params.theta0() * self.dt;
        let oz = self.oracle_threshold;
        let (mut x, mut y) = (self.learner, self.oracle);
        let (mut sx, mut sx2, mut sy, mut sy2) = (0.0, 0.0, 0.0, 0.0);
        for _ in 0..n {
            sx += x;
            sx2 += x * x;
            sy += y;
            sy2 += y * y;
            let dw = self.sqrt_dt * self.noise.normal();
            x += (if x > z { down } else { up }) + dw;
            y += (if y > oz { down } else { up }) + dw;
        }
        self.step += n;
        if !x.is_finite() || !y.is_finite() {
            return Err(Error::NonFinite { step: self.step });
        }
        self.learner = x;
        self.oracle = y;
        let stats = |s: f64, s2: f64, t: f64| PathStats {
            int_x: s * self.dt,
            int_x2: s2 * self.dt,
            terminal: t,
            steps: n,
        };
        Ok(CoupledPathStats {
            learner: stats(sx, sx2, x),
            oracle: stats(sy, sy2, y),
        })
    }
}

/// Simulates `b_z` control on `[t0, t1]` starting from `x0`.
pub fn simulate_threshold_path(
    params: &ModelParams,
    z: f64,
    x0: f64,
    t0: f64,
    t1: f64,
    cfg: &SimConfig,
) -> Result<PathStats> {
    if !x0.is_finite() || !z.is_finite() {
        return Err(Error::arg("x0", "initial state and threshold must be finite"));
    }
    let (start, end) = (cfg.steps(t0)?, cfg.steps(t1)?);
    if end < start {
        return Err(Error::arg("t1", format!("window end {t1} precedes start {t0}")));
    }
    PathStepper::new(*params, x0, cfg).run(z, end - start)
}

/// Runs a learner following `schedule` against the oracle at threshold
/// `delta` on `[0, horizon]`, both driven by the same noise.
pub fn simulate_coupled(
    params: &ModelParams,
    schedule: &ThresholdSchedule,
    delta: f64,
    x0: f64,
    horizon: f64,
    cfg: &SimConfig,
) -> Result<CoupledPathStats> {
    let total = cfg.steps(horizon)?;
    let mut stepper = CoupledStepper::new(*params, delta, x0, cfg);
    let mut acc = CoupledPathStats::at(x0, x0);
    let segs = schedule.segments();
    for (i, &(start, z)) in segs.iter().enumerate() {
        let from = cfg.steps(start)?.min(total);
        let to = match segs.get(i + 1) {
            Some(&(next, _)) => cfg.steps(next)?.min(total),
            None => total,
        };
        if to > from {
            acc.append(&stepper.run(z, to - from)?);
        }
    }
    Ok(acc)
}

/// Result of a first-passage simulation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PassageOutcome {
    /// `∫₀^ρ X² dt` up to the first grid point at or below `z` (or the cap).
    pub cost: f64,
    pub hit: bool,
}

/// Accumulates `∫ X² dt` under constant drift θ0 from `x` until the path
/// first reaches `z` on the grid, or until `t_cap`.
///
/// Crossings are only detected at grid points, so the cost is biased
/// upward by the overshoot of the last step, roughly `g′(z)·0.58·√dt`.
pub fn simulate_first_passage_cost(
    params: &ModelParams,
    x: f64,
    z: f64,
    cfg: &SimConfig,
    t_cap: f64,
) -> Result<PassageOutcome> {
    if !(x >= z) {
        return Err(Error::arg("x", format!("start {x} must not lie below the target {z}")));
    }
    let cap = cfg.steps(t_cap)?;
    let down = params.theta0() * cfg.dt;
    let sqrt_dt = cfg.dt.sqrt();
    let mut noise = cfg.noise();
    let mut state = x;
    let mut sum = 0.0;
    let mut taken = 0;
    while state > z {
        if taken == cap {
            return Ok(PassageOutcome {
                cost: sum * cfg.dt,
                hit: false,
            });
        }
        sum += state * state;
        state += down + sqrt_dt * noise.normal();
        taken += 1;
    }
    Ok(PassageOutcome {
        cost: sum * cfg.dt,
        hit: true,
    })
}
