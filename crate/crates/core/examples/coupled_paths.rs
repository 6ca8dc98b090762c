//! A learner with a piecewise threshold schedule against the oracle, both
//! driven by the same noise.

use broken_drift::sim::simulate_coupled;
use broken_drift::{ModelParams, SimConfig, ThresholdSchedule};

fn main() -> broken_drift::Result<()> {
    let p = ModelParams::new(-1.0, 1.0)?;
    let delta = p.optimal_threshold();
    let schedule = ThresholdSchedule::new(vec![(0.0, 1.0), (50.0, 0.5), (100.0, delta)])?;
    for id in 0..5 {
        let cfg = SimConfig::new(1e-3, 3, id)?;
        let s = simulate_coupled(&p, &schedule, delta, 0.0, 200.0, &cfg)?;
        println!(
            "stream {id}: learner {:.3}  oracle {:.3}  regret {:.3}  terminal gap {:.1e}",
            s.learner.int_x2,
            s.oracle.int_x2,
            s.regret(),
            s.learner.terminal - s.oracle.terminal
        );
    }
    println!("expected regret from the mistuned stretches ~ 50*1 + 50*0.25 = 62.5");
    Ok(())
}
