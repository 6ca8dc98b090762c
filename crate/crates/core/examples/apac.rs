//! Adaptive position averaging with clipping: per-episode estimates and the
//! cumulative regret read at intermediate horizons.

use broken_drift::learning::{run_controller, Controller};
use broken_drift::{ModelParams, SimConfig};

fn main() -> broken_drift::Result<()> {
    let p = ModelParams::new(-2.0, 1.0)?;
    let cfg = SimConfig::new(1e-2, 13, 0)?;
    let checkpoints = [64.0, 256.0, 1024.0, 4096.0];
    let rec = run_controller(&p, Controller::Apac { clip_bound: 10.0 }, 4096.0, 0.0, &cfg, &checkpoints)?;
    println!("delta = {}", p.optimal_threshold());
    for (k, e) in rec.estimates.iter().enumerate() {
        println!("episode {k:>2}: estimate {e:+.5}");
    }
    for c in &rec.checkpoints {
        println!("regret at T = {:>6}: {:.3}", c.horizon, c.regret());
    }
    Ok(())
}
