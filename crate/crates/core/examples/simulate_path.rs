//! Euler-Maruyama paths under a fixed threshold, window by window.

use broken_drift::sim::PathStepper;
use broken_drift::{ModelParams, SimConfig, StationaryLaw};

fn main() -> broken_drift::Result<()> {
    let p = ModelParams::new(-1.0, 1.0)?;
    let cfg = SimConfig::new(1e-3, 7, 0)?;
    let z = 0.5;
    let mut path = PathStepper::new(p, 3.0, &cfg);
    let window = cfg.steps(10.0)?;
    println!("{:>6} {:>9} {:>9} {:>9}", "t", "X_t", "avg X", "avg X^2");
    for k in 1..=20 {
        let s = path.run(z, window)?;
        println!(
            "{:>6} {:>9.4} {:>9.4} {:>9.4}",
            10 * k,
            s.terminal,
            s.average_x(cfg.dt),
            s.int_x2 / s.duration(cfg.dt)
        );
    }
    let law = StationaryLaw::new(p, z);
    println!("stationary: mean {:.4}, second moment {:.4}", law.mean(), law.second_moment());
    Ok(())
}
