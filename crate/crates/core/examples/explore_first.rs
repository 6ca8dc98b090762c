//! Explore-first with a learning interval of sqrt(T).

use broken_drift::learning::{explore_first_run, sqrt_learning_interval};
use broken_drift::{ModelParams, SimConfig};

fn main() -> broken_drift::Result<()> {
    let p = ModelParams::new(-2.0, 1.0)?;
    let horizon = 1024.0;
    println!("delta = {}", p.optimal_threshold());
    for id in 0..8 {
        let cfg = SimConfig::new(1e-2, 11, id)?;
        let tau = sqrt_learning_interval(horizon, &cfg);
        let rec = explore_first_run(&p, tau, horizon, 0.0, &cfg)?;
        println!("stream {id}: tau = {tau}, estimate {:+.4}, regret {:.3}", rec.estimates[0], rec.regret());
    }
    Ok(())
}
