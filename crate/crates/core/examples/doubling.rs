//! Explore-first restarted on doubling windows.

use broken_drift::learning::doubling_explore_first_run;
use broken_drift::{ModelParams, SimConfig};

fn main() -> broken_drift::Result<()> {
    let p = ModelParams::new(-1.0, 2.0)?;
    let cfg = SimConfig::new(1e-2, 12, 0)?;
    let rec = doubling_explore_first_run(&p, 512.0, 0.0, &cfg)?;
    println!("delta = {}", p.optimal_threshold());
    for e in &rec.episodes {
        println!(
            "[{:>6.2}, {:>6.2})  threshold {:+.4}  window regret {:+.3}",
            e.start,
            e.end,
            e.threshold,
            e.stats.regret()
        );
    }
    println!("total regret {:.3}", rec.regret());
    Ok(())
}
