//! Signed restriction–induction diagrams rooted at `(n)`.
//!
//! `cargo run --example diagrams` prints every level of the `j = 1`
//! diagram for `S_7` and the `j = 2` diagram for `S_8`, then the DOT source of
//! the second one (odd-leg edges in red).

use cycle_mixer::bratteli::{tensor_power_levels, to_dot};

fn main() -> cycle_mixer::Result<()> {
    for (n, j) in [(7, 1), (8, 2)] {
        println!("n = {n}, j = {j}");
        let levels = tensor_power_levels(n, j, 2)?;
        for level in &levels {
            println!("  level {:>3}: {}", level.label(), level.decomposition);
        }
        println!();
    }
    let levels = tensor_power_levels(8, 2, 2)?;
    print!("{}", to_dot(&levels, 2));
    Ok(())
}
