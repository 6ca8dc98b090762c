//! Stationary law of a threshold-controlled path.
//!
//! Under `b_z` the state forgets its starting point and settles into a
//! two-sided exponential law around `z`: density `e^{2θ1(x−z)}/δ̄` below the
//! threshold and `e^{2θ0(x−z)}/δ̄` above it. Everything here is closed form,
//! including the inverse CDF, so sampling is exact.

use rand::Rng;
use rand_distr::Open01;

use crate::error::{Error, Result};
use crate::model::ModelParams;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StationaryLaw {
    params: ModelParams,
    z: f64,
    left_mass: f64,
    delta_bar: f64,
}

impl StationaryLaw {
    pub fn new(params: ModelParams, z: f64) -> Self {
        let delta_bar = params.delta_bar();
        Self {
            params,
            z,
            left_mass: 0.5 / (params.theta1() * delta_bar),
            delta_bar,
        }
    }

    pub fn params(&self) -> ModelParams {
        self.params
    }

    pub fn threshold(&self) -> f64 {
        self.z
    }

    /// Probability of `X ≤ z`.
    pub fn left_mass(&self) -> f64 {
        self.left_mass
    }

    /// Probability of `X > z`.
    pub fn right_mass(&self) -> f64 {
        0.5 / (-self.params.theta0() * self.delta_bar)
    }

    pub fn delta_bar(&self) -> f64 {
        self.delta_bar
    }

    pub fn density(&self, x: f64) -> f64 {
        let rate = 2.0 * self.params.threshold_drift(self.z, x);
        (rate * (x - self.z)).exp() / self.delta_bar
    }

    pub fn cdf(&self, x: f64) -> f64 {
        let u = x - self.z;
        if u <= 0.0 {
            self.left_mass * (2.0 * self.params.theta1() * u).exp()
        } else {
            1.0 - self.right_mass() * (2.0 * self.params.theta0() * u).exp()
        }
    }

    /// Exact inverse of [`cdf`](Self::cdf) on the open unit interval.
    pub fn quantile(&self, u: f64) -> Result<f64> {
        if !(u > 0.0 && u < 1.0) {
            return Err(Error::arg("u", format!("must lie in (0, 1), got {u}")));
        }
        Ok(self.quantile_unchecked(u))
    }

    fn quantile_unchecked(&self, u: f64) -> f64 {
        if u <= self.left_mass {
            self.z + (u / self.left_mass).ln() / (2.0 * self.params.theta1())
        } else {
            self.z + ((1.0 - u) / self.right_mass()).ln() / (2.0 * self.params.theta0())
        }
    }

    /// Inverse-CDF draw.
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> f64 {
        let u: f64 = rng.sample(Open01);
        self.quantile_unchecked(u)
    }

    /// First moment `z − δ`.
    pub fn mean(&self) -> f64 {
        self.z - self.params.optimal_threshold()
    }

    /// Second moment `z² − 2δz + 2η + 1/(2θ0θ1)`.
    ///
    /// Satisfies `μ_z² − μ_δ² = (z − δ)²`; at `z = δ` it equals η.
    pub fn second_moment(&self) -> f64 {
        let p = &self.params;
        let z = self.z;
        z * z - 2.0 * p.optimal_threshold() * z
            + 2.0 * p.ergodic_value()
            + 0.5 / (p.theta0() * p.theta1())
    }

    pub fn variance(&self) -> f64 {
        let m = self.mean();
        self.second_moment() - m * m
    }

    /// Distances below and above `z` beyond which the density is under `floor`.
    pub fn support_extent(&self, floor: f64) -> (f64, f64) {
        let log_ratio = (floor * self.delta_bar).ln();
        (
            log_ratio / (2.0 * self.params.theta1()),
            log_ratio / (2.0 * self.params.theta0()),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::NoiseStream;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    fn law(t0: f64, t1: f64, z: f64) -> StationaryLaw {
        StationaryLaw::new(ModelParams::new(t0, t1).unwrap(), z)
    }

    /// Composite Simpson rule on each smooth side of the threshold, truncated
    /// where the density drops below 1e-16.
    fn integrate(law: &StationaryLaw, f: impl Fn(f64) -> f64) -> f64 {
        let (below, above) = law.support_extent(1e-16);
        let z = law.threshold();
        simpson(|x| f(x) * law.density(x), z + below, z, 20_000)
            + simpson(|x| f(x) * law.density(x), z, z + above, 20_000)
    }

    fn simpson(f: impl Fn(f64) -> f64, a: f64, b: f64, n: usize) -> f64 {
        let h = (b - a) / n as f64;
        let mut s = f(a) + f(b);
        for i in 1..n {
            let w = if i % 2 == 1 { 4.0 } else { 2.0 };
            s += w * f(a + i as f64 * h);
        }
        s * h / 3.0
    }

    #[test]
    fn density_values() {
        let l = law(-1.0, 1.0, 0.0);
        assert_relative_eq!(l.density(0.0), 1.0, max_relative = 1e-15);
        assert_relative_eq!(l.density(1.0), (-2.0f64).exp(), max_relative = 1e-15);
        let l = law(-2.0, 1.0, 0.0);
        assert_relative_eq!(l.left_mass(), 2.0 / 3.0, max_relative = 1e-15);
        assert_relative_eq!(l.left_mass() + l.right_mass(), 1.0, max_relative = 1e-15);
    }

    #[test]
    fn cdf_and_quantile_values() {
        let l = law(-1.0, 1.0, 0.0);
        assert_relative_eq!(l.cdf(0.0), 0.5, max_relative = 1e-15);
        assert_eq!(l.quantile(0.5).unwrap(), 0.0);
        assert_relative_eq!(law(-2.0, 1.0, 0.0).cdf(0.0), 2.0 / 3.0, max_relative = 1e-15);
        assert!(l.quantile(0.0).is_err());
        assert!(l.quantile(1.0).is_err());
        assert!(l.quantile(f64::NAN).is_err());
    }

    #[test]
    fn quantile_tends_to_minus_infinity() {
        let l = law(-1.0, 1.0, 0.0);
        let mut prev = l.quantile(0.25).unwrap();
        for e in 2..300 {
            let q = l.quantile(10f64.powi(-e)).unwrap();
            assert!(q < prev);
            prev = q;
        }
    }

    #[test]
    fn moments_values() {
        assert_eq!(law(-2.0, 1.0, 0.25).mean(), 0.0);
        assert_relative_eq!(law(-1.0, 1.0, 1.0).mean(), 1.0, max_relative = 1e-15);
        assert_relative_eq!(law(-2.0, 1.0, 0.0).mean(), -0.25, max_relative = 1e-15);
        assert_relative_eq!(law(-1.0, 1.0, 0.0).second_moment(), 0.5, max_relative = 1e-15);
        assert_relative_eq!(law(-1.0, 1.0, 1.0).second_moment(), 1.5, max_relative = 1e-15);
        assert_relative_eq!(law(-2.0, 1.0, 0.25).second_moment(), 0.3125, max_relative = 1e-15);
    }

    #[test]
    fn quadrature_reproduces_mass_and_moments() {
        for (t0, t1, z) in [(-1.0, 1.0, 0.0), (-2.0, 1.0, 0.4), (-0.3, 1.7, -2.0), (-4.0, 0.5, 1.0)] {
            let l = law(t0, t1, z);
            assert!((integrate(&l, |_| 1.0) - 1.0).abs() < 1e-8);
            assert!((integrate(&l, |x| x) - l.mean()).abs() < 1e-6);
            assert!((integrate(&l, |x| x * x) - l.second_moment()).abs() < 1e-6);
        }
    }

    #[test]
    fn speed_measure_total_is_twice_delta_bar() {
        // m(ℝ) = 2∫exp(2(x−z)b_z(x))dx; with f = exp(...)/δ̄ this is 2δ̄∫f.
        let l = law(-1.5, 0.6, 0.3);
        let m = 2.0 * l.delta_bar() * integrate(&l, |_| 1.0);
        assert_relative_eq!(m, 2.0 * l.delta_bar(), max_relative = 1e-8);
    }

    #[test]
    fn exponential_moment_converges() {
        let l = law(-1.0, 2.0, 0.5);
        let c = 1.0f64.min(2.0);
        let z = l.threshold();
        let partial = |w: f64| {
            simpson(|x| (c * x.abs()).exp() * l.density(x), z - w, z, 40_000)
                + simpson(|x| (c * x.abs()).exp() * l.density(x), z, z + w, 40_000)
        };
        let values: Vec<f64> = [10.0, 20.0, 40.0, 80.0].iter().map(|&w| partial(w)).collect();
        for pair in values.windows(2) {
            assert!(pair[1] >= pair[0]);
        }
        let gaps: Vec<f64> = values.windows(2).map(|p| p[1] - p[0]).collect();
        assert!(gaps[2] < gaps[0]);
        assert!(gaps[2] < 1e-6 * values[3]);
    }

    #[test]
    fn sample_mean_matches_closed_form() {
        let l = law(-2.0, 1.0, 0.0);
        let mut rng = NoiseStream::new(11, 0);
        let n = 1_000_000;
        let (mut s, mut s2) = (0.0, 0.0);
        for _ in 0..n {
            let x = l.sample(&mut rng);
            s += x;
            s2 += x * x;
        }
        let mean = s / n as f64;
        let var = s2 / n as f64 - mean * mean;
        let se = (var / n as f64).sqrt();
        assert!((mean + 0.25).abs() < 3.0 * se, "mean {mean} se {se}");
    }

    #[test]
    fn ks_statistic_below_one_percent_critical_value() {
        let l = law(-1.0, 1.0, 0.0);
        let mut rng = NoiseStream::new(5, 2);
        let mut xs: Vec<f64> = (0..100_000).map(|_| l.sample(&mut rng)).collect();
        xs.sort_by(f64::total_cmp);
        let d = crate::stats::ks_statistic(&xs, |x| l.cdf(x));
        assert!(d < crate::stats::ks_critical_value(xs.len(), 0.01));
    }

    proptest! {
        #[test]
        fn second_moment_gap_identity(t0 in -5.0f64..-0.1, t1 in 0.1f64..5.0, z in -5.0f64..5.0) {
            let p = ModelParams::new(t0, t1).unwrap();
            let d = p.optimal_threshold();
            let gap = StationaryLaw::new(p, z).second_moment() - StationaryLaw::new(p, d).second_moment();
            let scale = 1.0 + StationaryLaw::new(p, z).second_moment().abs();
            prop_assert!((gap - (z - d).powi(2)).abs() <= 1e-12 * scale);
            prop_assert!((StationaryLaw::new(p, d).second_moment() - p.ergodic_value()).abs() <= 1e-12 * scale);
        }

        #[test]
        fn quantile_inverts_cdf(t0 in -4.0f64..-0.2, t1 in 0.2f64..4.0, z in -2.0f64..2.0, off in -3.0f64..3.0) {
            let l = StationaryLaw::new(ModelParams::new(t0, t1).unwrap(), z);
            let x = z + off;
            let u = l.cdf(x);
            prop_assume!(u > 1e-300 && u < 1.0 - 1e-6);
            let back = l.quantile(u).unwrap();
            prop_assert!((back - x).abs() <= 1e-10 * x.abs().max(1.0), "{} vs {}", back, x);
        }
    }
}
