//! Monte Carlo regret curves for every learner, written to CSV with a
//! gnuplot script.
//!
//! cargo run --release --example regret_curve -- out_dir

use std::path::PathBuf;

use broken_drift::regret::{export_curves, plot_script, Algorithm, RegretExperiment};
use broken_drift::ModelParams;

fn main() -> broken_drift::Result<()> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| ".".into()));
    let p = ModelParams::new(-1.0, 1.0)?;
    let horizons: Vec<f64> = (4..=10).map(|e| 2f64.powi(e)).collect();
    let mut curves = Vec::new();
    for algorithm in [
        Algorithm::Fixed { z: 0.5 },
        Algorithm::ExploreFirst,
        Algorithm::Doubling,
        Algorithm::Apac { clip_bound: 10.0 },
    ] {
        let mut e = RegretExperiment::new(algorithm, p, horizons.clone(), 64);
        e.dt = 1e-2;
        e.master_seed = 1;
        let c = e.run()?;
        println!("{:<14} {:?}", c.algorithm, c.mean_regret.iter().map(|r| (r * 100.0).round() / 100.0).collect::<Vec<_>>());
        curves.push(c);
    }
    let csv = dir.join("regret_curves.csv");
    export_curves(&curves, &csv)?;
    std::fs::write(dir.join("regret_curves.gp"), plot_script("regret_curves.csv", &curves))
        .map_err(|e| broken_drift::Error::Io { path: dir.join("regret_curves.gp"), source: e })?;
    println!("wrote {}", csv.display());
    Ok(())
}
