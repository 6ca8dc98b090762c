//! Evaluates the relative value function and the HJB residual on a grid.

use broken_drift::model::DEFAULT_HJB_STEP;
use broken_drift::ModelParams;

fn main() -> broken_drift::Result<()> {
    let p = ModelParams::new(-1.5, 0.8)?;
    let delta = p.optimal_threshold();
    println!("delta = {delta:.6}");
    println!("{:>9} {:>12} {:>12} {:>10}", "x", "phi", "phi'", "residual");
    for i in 0..=20 {
        let x = delta - 3.0 + 0.3 * i as f64 + 1e-3;
        let r = p.hjb_residual(x, DEFAULT_HJB_STEP)?;
        println!("{x:>9.4} {:>12.6} {:>12.6} {r:>10.1e}", p.phi(x), p.phi_derivative(x));
    }
    Ok(())
}
