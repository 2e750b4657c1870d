//! Exact moments of `a_j` after `k` steps, as fractions.
//!
//! `cargo run --example exact_moments` tabulates `E[a_2]` for the star walk
//! and the random 3-cycle walk on a 12-card deck. Both head for the uniform
//! value 1/2.

use cycle_mixer::numbers::ratio_to_f64;
use cycle_mixer::walk::{jcycle_moment, WalkSpec};

fn main() -> cycle_mixer::Result<()> {
    let n = 12;
    println!("{:>3}  {:>28}  {:>28}", "k", "star E[a_2]", "3-cycle E[a_2]");
    for k in 0..=12 {
        let star = jcycle_moment(&WalkSpec::star(n, k)?, 2, 1)?;
        let three = jcycle_moment(&WalkSpec::icycle(3, n, k)?, 2, 1)?;
        println!(
            "{k:>3}  {:>18} {:>9.6}  {:>18} {:>9.6}",
            shorten(&star.to_string()),
            ratio_to_f64(&star),
            shorten(&three.to_string()),
            ratio_to_f64(&three)
        );
    }
    Ok(())
}

fn shorten(s: &str) -> String {
    if s.len() <= 18 {
        s.to_string()
    } else {
        format!("{}…", &s[..17])
    }
}
