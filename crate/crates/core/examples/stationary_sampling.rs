//! Exact sampling from the stationary law and a KS comparison with its CDF.

use broken_drift::rng::NoiseStream;
use broken_drift::stats::{ks_critical_value, ks_statistic};
use broken_drift::{ModelParams, StationaryLaw};

fn main() -> broken_drift::Result<()> {
    let p = ModelParams::new(-2.0, 1.0)?;
    let law = StationaryLaw::new(p, p.optimal_threshold());
    let mut rng = NoiseStream::new(1, 0);
    let mut xs: Vec<f64> = (0..50_000).map(|_| law.sample(&mut rng)).collect();
    let mean = xs.iter().sum::<f64>() / xs.len() as f64;
    let m2 = xs.iter().map(|x| x * x).sum::<f64>() / xs.len() as f64;
    xs.sort_by(f64::total_cmp);
    let d = ks_statistic(&xs, |x| law.cdf(x));
    println!("P(X <= z) = {:.4}", law.left_mass());
    println!("sample mean {mean:.4} (exact {:.4})", law.mean());
    println!("sample second moment {m2:.4} (exact {:.4})", law.second_moment());
    println!("KS D = {d:.5}, 1% critical value {:.5}", ks_critical_value(xs.len(), 0.01));
    for u in [0.01, 0.25, 0.5, 0.75, 0.99] {
        println!("quantile({u}) = {:+.4}", law.quantile(u)?);
    }
    Ok(())
}
