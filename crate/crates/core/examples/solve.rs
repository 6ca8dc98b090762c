//! Closed-form optimal threshold, ergodic value and stationary moments.
//!
//! cargo run --example solve -- -2 1

use broken_drift::{ModelParams, StationaryLaw};

fn main() -> broken_drift::Result<()> {
    let args: Vec<f64> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (t0, t1) = match args[..] {
        [a, b, ..] => (a, b),
        _ => (-2.0, 1.0),
    };
    let p = ModelParams::new(t0, t1)?;
    let d = p.derived();
    println!("theta0 = {t0}, theta1 = {t1}");
    println!("delta = {}  eta = {}  delta_bar = {}", d.delta, d.eta, d.delta_bar);
    for z in [d.delta - 1.0, d.delta, d.delta + 1.0] {
        let law = StationaryLaw::new(p, z);
        println!(
            "z = {z:+.3}: mean {:+.4}  second moment {:.4}  excess over eta {:.4}",
            law.mean(),
            law.second_moment(),
            law.second_moment() - d.eta
        );
    }
    Ok(())
}
