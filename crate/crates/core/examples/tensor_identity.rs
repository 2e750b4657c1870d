//! The Kronecker / `p_j^⊥` identity on power-sum basis elements.

use cycle_mixer::partition::partitions_of;
use cycle_mixer::symfunc::{kronecker, mul_pj, perp_pj, tensor_identity_residual, PowerSumVector};
use cycle_mixer::p;

fn main() -> cycle_mixer::Result<()> {
    let f = PowerSumVector::basis(p![2, 1, 1]);
    let g = PowerSumVector::basis(p![1, 1]);
    println!("f = {f}");
    println!("g = {g}");
    println!("p_2 g = {}", mul_pj(&g, 2));
    println!("p_2^⊥ f = {}", perp_pj(&f, 2));
    println!("f * p_2 g = {}", kronecker(&f, &mul_pj(&g, 2))?);

    for j in 1..=3 {
        let mut pairs = 0;
        for n in j..=8 {
            for a in partitions_of(n) {
                for b in partitions_of(n - j) {
                    let res = tensor_identity_residual(&PowerSumVector::basis(a.clone()), &PowerSumVector::basis(b), j)?;
                    assert!(res.is_zero());
                    pairs += 1;
                }
            }
        }
        println!("j = {j}: residual zero on {pairs} basis pairs");
    }
    Ok(())
}
