//! Spectral moments against brute-force convolution over `S_n`.

use cycle_mixer::oracle::{brute_moment, convolve, GroupDistribution, OracleLimit};
use cycle_mixer::walk::{jcycle_moment, WalkKind, WalkSpec};

fn main() -> cycle_mixer::Result<()> {
    let n = 6;
    for kind in [WalkKind::Star, WalkKind::ICycle(3)] {
        let step = GroupDistribution::step_measure(kind, n, OracleLimit::Default)?;
        let mut dist = GroupDistribution::identity(n, OracleLimit::Default)?;
        println!("{kind}, n = {n}");
        for k in 0..=5 {
            let spec = WalkSpec::new(kind, n, k)?;
            let exact = jcycle_moment(&spec, 1, 2)?;
            let brute = brute_moment(&dist, 1, 2);
            println!("  k={k}  E[a_1^2] spectral {exact:<14} brute {brute:<14} {}", if exact == brute { "ok" } else { "MISMATCH" });
            dist = convolve(&step, &dist)?;
        }
    }
    Ok(())
}
