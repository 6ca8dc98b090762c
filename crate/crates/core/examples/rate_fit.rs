//! Growth-rate fits that separate sqrt(T), log(T) and linear regret.

use broken_drift::regret::{fit_log_rate, fit_power_rate, fit_sqrt_rate, Algorithm, RegretExperiment};
use broken_drift::ModelParams;

fn main() -> broken_drift::Result<()> {
    let p = ModelParams::new(-1.0, 1.0)?;
    let horizons: Vec<f64> = (5..=11).map(|e| 2f64.powi(e)).collect();
    for algorithm in [Algorithm::Fixed { z: 1.0 }, Algorithm::ExploreFirst, Algorithm::Apac { clip_bound: 10.0 }] {
        let mut e = RegretExperiment::new(algorithm, p, horizons.clone(), 100);
        e.dt = 1e-2;
        let c = e.run()?;
        let pow = fit_power_rate(&c)?;
        let log = fit_log_rate(&c)?;
        let sqrt = fit_sqrt_rate(&c)?;
        println!(
            "{:<14} exponent {:.3}  r2: power {:.3}  log {:.3}  sqrt {:.3}",
            c.algorithm, pow.slope, pow.r_squared, log.r_squared, sqrt.r_squared
        );
    }
    Ok(())
}
