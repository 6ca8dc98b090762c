//! Drift bounds of the bounded-velocity follower and the closed-form
//! quantities of the full-information problem.
//!
//! The controlled state follows `dX = b dt + dW` with `b ∈ [θ0, θ1]` and the
//! running cost is `X²`. The optimal control is bang-bang around
//! `δ = 1/(2θ0) + 1/(2θ1)` and the long-run average cost is
//! `η = 1/(4θ0²) + 1/(4θ1²)`.

use crate::error::{Error, Result};

/// Default finite-difference step for [`ModelParams::hjb_residual`].
pub const DEFAULT_HJB_STEP: f64 = 1e-4;

/// Drift bounds `θ0 < 0 < θ1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelParams {
    theta0: f64,
    theta1: f64,
}

/// Constants derived from [`ModelParams`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DerivedConstants {
    /// Optimal threshold δ.
    pub delta: f64,
    /// Ergodic value η.
    pub eta: f64,
    /// Normalizer δ̄ of the stationary density.
    pub delta_bar: f64,
}

impl ModelParams {
    pub fn new(theta0: f64, theta1: f64) -> Result<Self> {
        if !theta0.is_finite() || !theta1.is_finite() {
            return Err(Error::InvalidParams(format!(
                "theta0 = {theta0} and theta1 = {theta1} must both be finite"
            )));
        }
        if !(theta0 < 0.0) {
            return Err(Error::InvalidParams(format!(
                "theta0 must be strictly negative, got {theta0}"
            )));
        }
        if !(theta1 > 0.0) {
            return Err(Error::InvalidParams(format!(
                "theta1 must be strictly positive, got {theta1}"
            )));
        }
        Ok(Self { theta0, theta1 })
    }

    pub fn theta0(&self) -> f64 {
        self.theta0
    }

    pub fn theta1(&self) -> f64 {
        self.theta1
    }

    /// The mirrored problem `(θ0, θ1) ↦ (−θ1, −θ0)`, i.e. the dynamics of `−X`.
    pub fn reflected(&self) -> Self {
        Self {
            theta0: -self.theta1,
            theta1: -self.theta0,
        }
    }

    pub fn derived(&self) -> DerivedConstants {
        DerivedConstants {
            delta: self.optimal_threshold(),
            eta: self.ergodic_value(),
            delta_bar: self.delta_bar(),
        }
    }

    /// δ = 1/(2θ0) + 1/(2θ1).
    pub fn optimal_threshold(&self) -> f64 {
        0.5 / self.theta0 + 0.5 / self.theta1
    }

    /// η = 1/(4θ0²) + 1/(4θ1²), the optimal long-run average cost.
    pub fn ergodic_value(&self) -> f64 {
        0.25 / (self.theta0 * self.theta0) + 0.25 / (self.theta1 * self.theta1)
    }

    /// δ̄ = (1/θ1 − 1/θ0) / 2.
    pub fn delta_bar(&self) -> f64 {
        0.5 * (1.0 / self.theta1 - 1.0 / self.theta0)
    }

    /// Threshold drift `b_z`: θ0 strictly above `z`, θ1 at or below it.
    #[inline]
    pub fn threshold_drift(&self, z: f64, x: f64) -> f64 {
        if x > z {
            self.theta0
        } else {
            self.theta1
        }
    }

    /// Relative value function φ solving the ergodic HJB equation together
    /// with η. Cubic on each side of δ, glued in C².
    pub fn phi(&self, x: f64) -> f64 {
        let eta = self.ergodic_value();
        if x > self.optimal_threshold() {
            cubic_branch(self.theta0, eta, x)
        } else {
            let (t0, t1) = (self.theta0, self.theta1);
            let glue = (t0 - t1) * (t0 + t1).powi(3) / (24.0 * t0.powi(4) * t1.powi(4));
            cubic_branch(t1, eta, x) + glue
        }
    }

    /// Exact derivative φ′.
    pub fn phi_derivative(&self, x: f64) -> f64 {
        let theta = self.threshold_drift(self.optimal_threshold(), x);
        let [_, c1, c2, c3] = branch_coefficients(theta, self.ergodic_value());
        c1 + x * (2.0 * c2 + 3.0 * x * c3)
    }

    /// HJB residual `min_b {b φ′ + φ″/2} + x² − η` with φ′ and φ″ taken by
    /// central differences of φ at step `h`.
    ///
    /// φ is evaluated with a compensated Horner scheme so that the second
    /// difference is not swamped by rounding in `φ(x ± h)`. The stencil must
    /// not straddle δ, so `|x − δ| ≤ h` is rejected.
    pub fn hjb_residual(&self, x: f64, h: f64) -> Result<f64> {
        if !(h > 0.0) || !h.is_finite() {
            return Err(Error::arg("h", format!("step must be positive, got {h}")));
        }
        let delta = self.optimal_threshold();
        if (x - delta).abs() <= h {
            return Err(Error::NearThreshold {
                x,
                h,
                threshold: delta,
            });
        }
        let theta = self.threshold_drift(delta, x);
        let coeffs = branch_coefficients(theta, self.ergodic_value());
        // Differences are taken against the realized grid points so that the
        // rounding of x ± h does not leak into the stencil weights.
        let (xp, xm) = (x + h, x - h);
        let (hp, hm) = (xp - x, x - xm);
        let (fp, f0, fm) = (
            compensated_horner(&coeffs, xp),
            compensated_horner(&coeffs, x),
            compensated_horner(&coeffs, xm),
        );
        let dp = dd_difference(fp, f0) / hp;
        let dm = dd_difference(f0, fm) / hm;
        let d1 = (hm * dp + hp * dm) / (hp + hm);
        let d2 = 2.0 * (dp - dm) / (hp + hm);
        let generator = (self.theta0 * d1).min(self.theta1 * d1) + 0.5 * d2;
        Ok(generator + x * x - self.ergodic_value())
    }

    /// Expected running cost `E ∫₀^ρ X_t² dt` accumulated until the
    /// uncontrolled-direction passage from `x` to `z`.
    ///
    /// For `x ≥ z` the path drifts down at θ0 and the cost is `g(x) − g(z)`
    /// with `g(y) = y³/(3|θ0|) + y²/(2θ0²) + y/(2|θ0|³)`. For `x < z` the
    /// path drifts up at θ1; the value comes from the reflected problem.
    pub fn passage_cost(&self, x: f64, z: f64) -> f64 {
        if x >= z {
            let a = -self.theta0;
            passage_potential(a, x) - passage_potential(a, z)
        } else {
            self.reflected().passage_cost(-x, -z)
        }
    }
}

/// `x(η/θ − 1/(2θ³)) + x²/(2θ²) − x³/(3θ)`.
fn cubic_branch(theta: f64, eta: f64, x: f64) -> f64 {
    let [_, c1, c2, c3] = branch_coefficients(theta, eta);
    x * (c1 + x * (c2 + x * c3))
}

/// Power-basis coefficients of [`cubic_branch`], constant term first.
fn branch_coefficients(theta: f64, eta: f64) -> [f64; 4] {
    let t2 = theta * theta;
    [0.0, eta / theta - 0.5 / (t2 * theta), 0.5 / t2, -1.0 / (3.0 * theta)]
}

/// Polynomial value as an unevaluated sum `hi + lo`, accurate to roughly
/// twice working precision.
fn compensated_horner(coeffs: &[f64; 4], x: f64) -> (f64, f64) {
    let mut hi = coeffs[3];
    let mut lo = 0.0;
    for &c in coeffs[..3].iter().rev() {
        let p = hi * x;
        let p_err = hi.mul_add(x, -p);
        let (s, s_err) = two_sum(p, c);
        hi = s;
        lo = lo * x + (p_err + s_err);
    }
    (hi, lo)
}

fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

fn dd_difference(a: (f64, f64), b: (f64, f64)) -> f64 {
    let (s, e) = two_sum(a.0, -b.0);
    s + (e + (a.1 - b.1))
}

/// `g(y)` for downward drift of magnitude `a = |θ0|`.
fn passage_potential(a: f64, y: f64) -> f64 {
    y * (0.5 / (a * a * a) + y * (0.5 / (a * a) + y / (3.0 * a)))
}
