//! Running cost until the first passage below a level, by Monte Carlo.

use broken_drift::sim::simulate_first_passage_cost;
use broken_drift::stats::MeanEstimate;
use broken_drift::{ModelParams, SimConfig};

fn main() -> broken_drift::Result<()> {
    let p = ModelParams::new(-1.0, 1.0)?;
    for dt in [1e-2, 1e-3] {
        let costs = (0..4000)
            .map(|id| Ok(simulate_first_passage_cost(&p, 1.0, 0.0, &SimConfig::new(dt, 5, id)?, 1000.0)?.cost))
            .collect::<broken_drift::Result<Vec<f64>>>()?;
        let est = MeanEstimate::from_samples(&costs);
        println!("dt = {dt}: {:.4} +- {:.4}", est.mean, est.stderr);
    }
    println!("closed form {:.4}", p.passage_cost(1.0, 0.0));
    Ok(())
}
