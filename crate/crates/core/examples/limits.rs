//! Limiting moments of cycle counts and their Poisson references.

use cycle_mixer::walk::{limiting_fixedpoint_moment, limiting_jcycle_moment, poisson_moment};

fn main() {
    for c in [0.25f64, 0.5, 1.0, 2.0] {
        println!("c = {c}");
        let rate = 1.0 + (-c).exp();
        let fixed: Vec<String> = (1..=4).map(|r| format!("{:.5}", limiting_fixedpoint_moment(r, c))).collect();
        println!("  fixed points after n ln n + cn steps: {} (Poisson({rate:.4}))", fixed.join(" "));
        for j in 2..=4 {
            let rate = (1.0 - (-(j as f64) * c).exp()) / j as f64;
            let m: Vec<String> = (1..=4).map(|r| format!("{:.5}", limiting_jcycle_moment(j, r, c))).collect();
            let p: Vec<String> = (1..=4).map(|r| format!("{:.5}", poisson_moment(rate, r))).collect();
            println!("  a_{j} after cn steps: {}  vs Poisson: {}", m.join(" "), p.join(" "));
        }
    }
}
