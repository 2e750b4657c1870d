//! Cores, quotients, rim-hook tableau counts and the compression sign.
//!
//! `cargo run --example abacus_sign -- 8,6,5,4,2,2 3`

use cycle_mixer::abacus::{
    abacus_sign, compressed_view, core_and_quotient, natural_labels, rim_tableau_count, sign_bead_count, to_abacus,
};
use cycle_mixer::Partition;

fn main() -> cycle_mixer::Result<()> {
    let mut args = std::env::args().skip(1);
    let lambda: Partition = args.next().unwrap_or_else(|| "8,6,5,4,2,2".into()).parse()?;
    let j: usize = args.next().map_or(3, |s| s.parse().expect("j must be a number"));

    let abacus = to_abacus(&lambda, j, sign_bead_count(&lambda, j))?;
    println!("λ = {lambda}, {j} runners");
    print!("{}", abacus.render(&natural_labels(&abacus)));

    let (pushed, labels) = compressed_view(&lambda, j)?;
    println!("\nbeads pushed up:");
    print!("{}", pushed.render(&labels));

    let qc = core_and_quotient(&lambda, j)?;
    let quotient: Vec<String> = qc.quotient.iter().map(ToString::to_string).collect();
    println!("\ncore {}  quotient [{}]", qc.core, quotient.join(", "));
    println!("rim {j}-hook tableaux: {}", rim_tableau_count(&lambda, j)?);

    let s = abacus_sign(&lambda, j)?;
    let sigma: Vec<String> = s.permutation.iter().map(ToString::to_string).collect();
    println!("σ = {}  sign {:+}", sigma.join(" "), s.sign);
    Ok(())
}
