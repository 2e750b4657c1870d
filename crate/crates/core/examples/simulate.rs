//! Monte Carlo cycle counts compared with the Poisson limits.
//!
//! `cargo run --release --example simulate -- 200 20000`

use cycle_mixer::sim::{run, SimConfig};
use cycle_mixer::walk::{Schedule, WalkKind};

fn main() -> cycle_mixer::Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).map(|s| s.parse().expect("numbers")).collect();
    let n = args.first().copied().unwrap_or(200);
    let trials = args.get(1).copied().unwrap_or(20_000);
    let cases = [
        (WalkKind::Star, Schedule::Linear { c: 1.0 }, 2),
        (WalkKind::ICycle(3), Schedule::PerCycleLength { c: 1.0 }, 2),
        (WalkKind::Star, Schedule::NLogN { c: 1.0 }, 1),
        (WalkKind::ICycle(3), Schedule::Linear { c: 1.0 }, 2),
    ];
    for (kind, schedule, j) in cases {
        let cfg = SimConfig::scheduled(kind, n, schedule, trials, 20240601, vec![j])?;
        let s = run(&cfg)?;
        let c = &s.per_j[0];
        println!(
            "{:<10} k={:<5} a_{j}: mean {:.4} ± {:.4}  reference {:.4}  TV {:.4}",
            kind.to_string(),
            cfg.spec.k,
            c.mean(),
            c.mean_standard_error,
            c.reference_rate.unwrap_or(f64::NAN),
            c.total_variation.unwrap_or(f64::NAN)
        );
    }
    Ok(())
}
