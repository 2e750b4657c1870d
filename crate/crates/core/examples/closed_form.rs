//! Tensor-power multiplicities: closed form against path counting.
//!
//! `cargo run --example closed_form -- 10 2 2`

use cycle_mixer::abacus::inner_multiplicity;
use cycle_mixer::bratteli::{closed_form_multiplicity, cluster_coeff, tensor_power};
use cycle_mixer::partition::partitions_of;

fn main() -> cycle_mixer::Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).map(|s| s.parse().expect("numbers")).collect();
    let (n, j, r) = match args[..] {
        [n, j, r] => (n, j, r),
        _ => (10, 2, 2),
    };
    println!("cluster constants c_t for r = {r}, j = {j}:");
    for t in 0..=r {
        println!("  t = {t}: {}", cluster_coeff(t, r, j));
    }

    let paths = tensor_power(n, j, r)?;
    println!("\n{:<16} {:>8} {:>10} {:>10}", "λ", "inner", "closed", "paths");
    for lambda in partitions_of(n) {
        let closed = closed_form_multiplicity(&lambda, r, j, n)?;
        let path = paths.coefficient(&lambda);
        if closed == 0.into() && path == 0.into() {
            continue;
        }
        let inner = inner_multiplicity(&lambda.below_first_row(), j)?;
        println!("{:<16} {inner:>8} {closed:>10} {path:>10}", lambda.to_string());
        assert_eq!(closed, path);
    }
    Ok(())
}
